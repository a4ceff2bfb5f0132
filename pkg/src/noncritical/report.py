"""Analysis reports and their versioned JSON form.

Document layout (``schema_version`` 1, keys always in this order)::

    schema_version  int
    n               int
    arc_count       int
    arcs            [[u, v], ...]          sorted
    strongly_connected  bool
    degrees         [int, ...]             indexed by vertex
    hypothesis      {class, min_adjacent_degree_sum, min_degree,
                     satisfies_cor11, satisfies_cor22} | null
    oracle          [int, ...] | null      noncritical vertices
    mpss            {S, omega_in, omega_out, handle{entry_arc, interior, exit_arc}} | null
    witness         {vertex, case_tag, mpss, trees, case_b_trace, validated} | null
    two_witness     same shape as witness, vertex is a pair | null
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .decomposition import DEFAULT_PATH_BUDGET, MpssCertificate, grow_mpss
from .digraph import Digraph, Hypothesis, HypothesisClass, build_digraph, classify_hypothesis, is_strongly_connected
from .witness import (
    LOWEST_INDEX,
    WitnessCertificate,
    constructive_noncritical,
    noncritical_oracle,
    two_noncritical,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    arcs: tuple[tuple[int, int], ...]
    strongly_connected: bool
    degree_table: tuple[int, ...]
    hypothesis: HypothesisClass | None = None
    oracle_noncritical: frozenset[int] | None = None
    witness: WitnessCertificate | None = None
    two_witness: WitnessCertificate | None = None
    mpss: MpssCertificate | None = None

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def digraph(self) -> Digraph:
        return build_digraph(self.n, self.arcs)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "arc_count": self.arc_count,
            "arcs": [list(a) for a in self.arcs],
            "strongly_connected": self.strongly_connected,
            "degrees": list(self.degree_table),
            "hypothesis": self.hypothesis.to_dict() if self.hypothesis else None,
            "oracle": sorted(self.oracle_noncritical) if self.oracle_noncritical is not None else None,
            "mpss": self.mpss.to_dict() if self.mpss else None,
            "witness": self.witness.to_dict() if self.witness else None,
            "two_witness": self.two_witness.to_dict() if self.two_witness else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema_version {version!r}")
        return cls(
            data["n"],
            tuple(tuple(a) for a in data["arcs"]),
            data["strongly_connected"],
            tuple(data["degrees"]),
            HypothesisClass.from_dict(data["hypothesis"]) if data["hypothesis"] else None,
            frozenset(data["oracle"]) if data["oracle"] is not None else None,
            WitnessCertificate.from_dict(data["witness"]) if data["witness"] else None,
            WitnessCertificate.from_dict(data["two_witness"]) if data["two_witness"] else None,
            MpssCertificate.from_dict(data["mpss"]) if data["mpss"] else None,
        )


def analyze(
    D: Digraph,
    oracle_only: bool = False,
    witness: bool = True,
    parent_rule: str = LOWEST_INDEX,
    budget: int = DEFAULT_PATH_BUDGET,
) -> AnalysisReport:
    """Everything the package can say about ``D`` in one report.

    Witnesses are attempted only when the hypothesis class allows them; a
    ``TheoremContradicted`` from the constructive step propagates.
    """
    strong = is_strongly_connected(D)
    hypothesis = classify_hypothesis(D) if strong and D.n >= 4 else None
    oracle = noncritical_oracle(D) if strong and D.n >= 2 else None
    mpss = single = pair = None
    if strong and D.n >= 2 and not oracle_only:
        mpss = grow_mpss(D, 0, budget)
        if witness and hypothesis is not None:
            if hypothesis.label >= Hypothesis.THM1:
                single = constructive_noncritical(D, parent_rule, budget)
            if hypothesis.label >= Hypothesis.COR2:
                pair = two_noncritical(D, parent_rule, budget)
    return AnalysisReport(D.n, D.arcs, strong, D.degrees(), hypothesis, oracle, single, pair, mpss)


def serialize_report(report: AnalysisReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def parse_report(text: str) -> AnalysisReport:
    return AnalysisReport.from_dict(json.loads(text))


def format_report_text(report: AnalysisReport) -> str:
    lines = [
        f"vertices: {report.n}  arcs: {report.arc_count}",
        f"strongly connected: {'yes' if report.strongly_connected else 'no'}",
        "degrees: " + " ".join(f"{v}:{d}" for v, d in enumerate(report.degree_table)),
    ]
    if report.hypothesis:
        h = report.hypothesis
        lines.append(
            f"hypothesis: {h.label.label} (min adjacent degree sum {h.min_adjacent_degree_sum}, "
            f"min degree {h.min_degree}, cor11={h.satisfies_cor11}, cor22={h.satisfies_cor22})"
        )
    if report.oracle_noncritical is not None:
        lines.append(f"noncritical vertices: {sorted(report.oracle_noncritical)}")
    if report.mpss:
        m = report.mpss
        lines.append(
            f"mpss from vertex 0: S={sorted(m.S)} omega_in={m.omega_in} omega_out={m.omega_out} "
            f"handle={list(m.handle.interior)}"
        )
    for title, cert in (("witness", report.witness), ("two witnesses", report.two_witness)):
        if cert:
            lines.append(f"{title}: {list(cert.vertices)} via {cert.case_tag.value} (validated={cert.validated})")
    return "\n".join(lines) + "\n"
