"""Exhaustive and randomized verification campaigns.

Exhaustive sweeps walk every labeled arc set on ``n`` vertices.  Arc set
``index`` has bit ``(n-1)*u + j`` set for the ``j``-th arc out of ``u``,
where out-neighbours of ``u`` are listed in increasing order skipping ``u``.

Random campaigns derive one seed per instance with SplitMix64::

    instance_seed = splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15)

The instance size is ``n_lo + instance_seed % (n_hi - n_lo + 1)`` and the
digraph is ``gen_random_conditioned(n, target, instance_seed)``.

Work is cut into fixed-size chunks independent of the worker count and the
partial tallies are merged in chunk order, so results do not depend on how
many processes ran.  Violations are data: they land in the result and,
when an output directory is given, in replayable edge-list files.
"""

from __future__ import annotations

import json
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .decomposition import MpssCertificate, enumerate_mpss, verify_lemma1
from .digraph import Digraph, Hypothesis, adjacent_pairs, hypothesis_from_degrees, iter_bits, strongly_connected_mask
from .errors import TheoremContradicted
from .families import gen_random_conditioned
from .formats import read_edge_list, write_edge_list
from .witness import LOWEST_INDEX, constructive_noncritical, leaf_statistics, two_noncritical

MASK64 = (1 << 64) - 1
EXHAUSTIVE_CHUNK = 1 << 14
RANDOM_CHUNK = 250
ALL_CHECKS = ("thm1", "cor2", "lemma1")


def splitmix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def mix(seed: int, index: int) -> int:
    return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15)


def _block_tables(n: int) -> list[list[int]]:
    """For each ``u``, map an ``(n-1)``-bit block to the successor mask of ``u``."""
    tables = []
    for u in range(n):
        low = (1 << u) - 1
        tables.append([(b & low) | ((b >> u) << (u + 1)) for b in range(1 << (n - 1))])
    return tables


def decode_arc_set(n: int, index: int, tables: list[list[int]] | None = None) -> tuple[int, ...]:
    tables = tables or _block_tables(n)
    width = n - 1
    block = (1 << width) - 1
    return tuple(tables[u][(index >> (width * u)) & block] for u in range(n))


def encode_arc_set(D: Digraph) -> int:
    index = 0
    for u in range(D.n):
        j = 0
        for v in range(D.n):
            if v == u:
                continue
            if D.succ[u] >> v & 1:
                index |= 1 << ((D.n - 1) * u + j)
            j += 1
    return index


def _transpose(n: int, succ: tuple[int, ...]) -> tuple[int, ...]:
    pred = [0] * n
    for u in range(n):
        bit = 1 << u
        for v in iter_bits(succ[u]):
            pred[v] |= bit
    return tuple(pred)


@dataclass
class Tally:
    """Mergeable counts for one chunk of a campaign."""

    instances: int = 0
    strong: int = 0
    classes: Counter = field(default_factory=Counter)
    leaf_triples: Counter = field(default_factory=Counter)
    complement_sizes: Counter = field(default_factory=Counter)
    case_tags: Counter = field(default_factory=Counter)
    lemma1_instances: int = 0
    lemma1_subsets: int = 0
    violations: list = field(default_factory=list)
    anomalies: list = field(default_factory=list)

    def merge(self, other: "Tally") -> None:
        self.instances += other.instances
        self.strong += other.strong
        self.classes.update(other.classes)
        self.leaf_triples.update(other.leaf_triples)
        self.complement_sizes.update(other.complement_sizes)
        self.case_tags.update(other.case_tags)
        self.lemma1_instances += other.lemma1_instances
        self.lemma1_subsets += other.lemma1_subsets
        self.violations.extend(other.violations)
        self.anomalies.extend(other.anomalies)


def _record(D: Digraph, kind: str, detail: str, source: dict) -> dict:
    return {"kind": kind, **source, "n": D.n, "arcs": [list(a) for a in D.arcs], "detail": detail}


def lemma1_mismatches(D: Digraph) -> tuple[list[str], int]:
    """Compare brute-force maximal sets with the sets the boundary test certifies.

    Returns a description of each disagreement and the number of
    strongly connected proper subsets examined.
    """
    expected = set(enumerate_mpss(D))
    certified = set()
    examined = 0
    for mask in range(1, D.full):
        if not strongly_connected_mask(D.succ, D.pred, mask):
            continue
        examined += 1
        S = frozenset(iter_bits(mask))
        if isinstance(verify_lemma1(D, S), MpssCertificate):
            certified.add(S)
    problems = [f"maximal but not certified: {sorted(S)}" for S in sorted(expected - certified, key=sorted)]
    problems += [f"certified but not maximal: {sorted(S)}" for S in sorted(certified - expected, key=sorted)]
    return problems, examined


def check_instance(
    D: Digraph,
    tally: Tally,
    source: dict,
    checks: Iterable[str] = ("thm1", "cor2"),
    parent_rule: str = LOWEST_INDEX,
    lemma1: bool = False,
) -> None:
    """Run every requested check on one strongly connected ``D`` (n >= 4)."""
    checks = set(checks)
    degrees = D.degrees()
    hyp = hypothesis_from_degrees(D.n, degrees, adjacent_pairs(D))
    tally.classes[hyp.label.label] += 1
    full = D.full
    oracle = [v for v in range(D.n) if strongly_connected_mask(D.succ, D.pred, full & ~(1 << v))]

    def violation(kind, detail):
        tally.violations.append(_record(D, kind, detail, source))

    if hyp.label >= Hypothesis.THM1 and "thm1" in checks:
        if not oracle:
            violation("thm1-no-noncritical", "no noncritical vertex under the n+1 hypothesis")
        try:
            cert = constructive_noncritical(D, parent_rule)
        except TheoremContradicted as exc:
            violation("thm1-contradicted", exc.reason)
        else:
            tally.case_tags[cert.case_tag.value] += 1
            if cert.mpss is not None:
                tally.complement_sizes[len(cert.mpss.complement)] += 1
            if not cert.validated or cert.vertex not in oracle:
                violation("thm1-witness-invalid", f"witness {cert.vertex} not in oracle {oracle}")
            stats = leaf_statistics(D, cert)
            if stats is not None:
                tally.leaf_triples[stats.as_tuple()] += 1
                if not stats.bound_holds:
                    tally.anomalies.append(
                        _record(D, "leaf-bound", f"intersection {stats.intersection} < max(1, {stats.bound})", source)
                    )
                if not stats.branch_claim_holds:
                    tally.anomalies.append(
                        _record(
                            D,
                            "branch-count",
                            f"|A_in|={stats.a_in}, deg(omega_in)={stats.deg_omega_in}; "
                            f"|A_out|={stats.a_out}, deg(omega_out)={stats.deg_omega_out}",
                            source,
                        )
                    )

    if hyp.label >= Hypothesis.COR2 and "cor2" in checks:
        if len(oracle) < 2:
            violation("cor2-too-few", f"only {len(oracle)} noncritical vertices under the n+2 hypothesis")
        try:
            pair = two_noncritical(D, parent_rule)
        except TheoremContradicted as exc:
            violation("cor2-contradicted", exc.reason)
        else:
            a, b = pair.vertices
            if a == b or not pair.validated or a not in oracle or b not in oracle:
                violation("cor2-witness-invalid", f"pair {pair.vertices} against oracle {oracle}")

    if lemma1:
        problems, examined = lemma1_mismatches(D)
        tally.lemma1_instances += 1
        tally.lemma1_subsets += examined
        for problem in problems:
            violation("lemma1-mismatch", problem)


def _exhaustive_chunk(args) -> Tally:
    n, start, stop, checks, lemma1_rate, seed, parent_rule = args
    tables = _block_tables(n)
    full = (1 << n) - 1
    width = n - 1
    block = (1 << width) - 1
    threshold = int(lemma1_rate * (1 << 64))
    tally = Tally()
    for index in range(start, stop):
        tally.instances += 1
        succ = tuple(tables[u][(index >> (width * u)) & block] for u in range(n))
        if not all(succ):
            continue
        pred = _transpose(n, succ)
        if not strongly_connected_mask(succ, pred, full):
            continue
        tally.strong += 1
        D = Digraph._trusted(n, succ, pred)
        sampled = "lemma1" in checks and (lemma1_rate >= 1 or mix(seed, index) < threshold)
        check_instance(D, tally, {"index": index}, checks, parent_rule, lemma1=sampled)
    return tally


def _random_chunk(args) -> Tally:
    lo, hi, start, stop, seed, target, checks, parent_rule = args
    tally = Tally()
    for index in range(start, stop):
        s = mix(seed, index)
        n = lo + s % (hi - lo + 1)
        D = gen_random_conditioned(n, target, s)
        tally.instances += 1
        tally.strong += 1
        check_instance(D, tally, {"index": index, "instance_seed": s}, checks, parent_rule)
    return tally


def _lemma1_chunk(args) -> Tally:
    n, start, stop, seed = args
    tables = _block_tables(n)
    full = (1 << n) - 1
    tally = Tally()
    for index in range(start, stop):
        rng = random.Random(mix(seed, index))
        while True:
            code = rng.getrandbits(n * (n - 1))
            succ = decode_arc_set(n, code, tables)
            pred = _transpose(n, succ)
            if strongly_connected_mask(succ, pred, full):
                break
        D = Digraph._trusted(n, succ, pred)
        tally.instances += 1
        tally.strong += 1
        problems, examined = lemma1_mismatches(D)
        tally.lemma1_instances += 1
        tally.lemma1_subsets += examined
        for problem in problems:
            tally.violations.append(_record(D, "lemma1-mismatch", problem, {"index": index, "arc_set": code}))
    return tally


def _run(worker, jobs: list, workers: int) -> Tally:
    total = Tally()
    if workers <= 1:
        parts = map(worker, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        parts = pool.map(worker, jobs)
    for part in parts:
        total.merge(part)
    if workers > 1:
        pool.shutdown()
    return total


@dataclass
class CampaignResult:
    parameters: dict
    instances_checked: int
    strongly_connected: int
    hypothesis_counts: dict
    violations: list
    monitored_stats: dict
    anomalies: list

    @property
    def verdict(self) -> str:
        return "PASS" if not self.violations else "FAIL"

    def to_dict(self) -> dict:
        return {
            "parameters": self.parameters,
            "verdict": self.verdict,
            "instances_checked": self.instances_checked,
            "strongly_connected": self.strongly_connected,
            "hypothesis_counts": self.hypothesis_counts,
            "violations": self.violations,
            "anomalies": self.anomalies,
            "monitored_stats": self.monitored_stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def archive(self, out_dir) -> list[Path]:
        """Write the result and one replayable edge list per violation or anomaly."""
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "campaign.json").write_text(self.to_json(), encoding="utf-8")
        written = []
        for prefix, records in (("violation", self.violations), ("anomaly", self.anomalies)):
            for i, rec in enumerate(records):
                path = out / f"{prefix}-{i:04d}-{rec['kind']}.txt"
                D = Digraph(rec["n"], _succ_from_arcs(rec["n"], rec["arcs"]))
                comments = [f"{k}: {v}" for k, v in rec.items() if k not in ("arcs", "n")]
                comments.append(f"parameters: {json.dumps(self.parameters, sort_keys=True)}")
                write_edge_list(D, path, comments)
                written.append(path)
        return written


def _succ_from_arcs(n: int, arcs) -> list[int]:
    succ = [0] * n
    for u, v in arcs:
        succ[u] |= 1 << v
    return succ


def _result(parameters: dict, tally: Tally) -> CampaignResult:
    stats = {
        "leaf_triples": [
            {"a_in": a, "a_out": b, "intersection": c, "two_d_minus_n": d, "count": k}
            for (a, b, c, d), k in sorted(tally.leaf_triples.items())
        ],
        "complement_sizes": {str(k): v for k, v in sorted(tally.complement_sizes.items())},
        "case_tags": dict(sorted(tally.case_tags.items())),
        "lemma1_instances": tally.lemma1_instances,
        "lemma1_subsets": tally.lemma1_subsets,
    }
    counts = {label: tally.classes.get(label, 0) for label in ("None", "Thm1", "Cor2")}
    violations = sorted(tally.violations, key=lambda r: (r.get("index", 0), r["kind"], r["detail"]))
    anomalies = sorted(tally.anomalies, key=lambda r: (r.get("index", 0), r["kind"]))
    return CampaignResult(parameters, tally.instances, tally.strong, counts, violations, stats, anomalies)


def default_workers() -> int:
    return os.cpu_count() or 1


def run_exhaustive(
    n: int,
    checks: Iterable[str] = ALL_CHECKS,
    workers: int = 1,
    lemma1_rate: float | None = None,
    seed: int = 0,
    parent_rule: str = LOWEST_INDEX,
) -> CampaignResult:
    """Check every labeled digraph on ``n`` vertices (``n`` is 4 or 5).

    The MPSS boundary test is compared with brute force on every strongly
    connected instance at ``n = 4`` and on a seeded sample of rate
    ``lemma1_rate`` (default 0.2) at ``n = 5``.
    """
    if n not in (4, 5):
        raise ValueError("exhaustive sweeps cover n = 4 and n = 5 only")
    checks = tuple(c for c in ALL_CHECKS if c in set(checks))
    if lemma1_rate is None:
        lemma1_rate = 1.0 if n == 4 else 0.2
    total = 1 << (n * (n - 1))
    jobs = [
        (n, start, min(start + EXHAUSTIVE_CHUNK, total), checks, lemma1_rate, seed, parent_rule)
        for start in range(0, total, EXHAUSTIVE_CHUNK)
    ]
    tally = _run(_exhaustive_chunk, jobs, workers)
    params = {
        "mode": "exhaustive",
        "n": n,
        "checks": list(checks),
        "lemma1_rate": lemma1_rate,
        "seed": seed,
        "parent_rule": parent_rule,
    }
    return _result(params, tally)


def run_random(
    n_range: tuple[int, int],
    samples: int,
    seed: int,
    target: Hypothesis | str = Hypothesis.THM1,
    workers: int = 1,
    checks: Iterable[str] = ("thm1", "cor2"),
    parent_rule: str = LOWEST_INDEX,
) -> CampaignResult:
    lo, hi = n_range
    if not 6 <= lo <= hi <= 64:
        raise ValueError("random campaigns take an n range inside 6..64")
    if isinstance(target, str):
        target = Hypothesis.from_label(target)
    checks = tuple(c for c in ("thm1", "cor2") if c in set(checks))
    jobs = [
        (lo, hi, start, min(start + RANDOM_CHUNK, samples), seed, target, checks, parent_rule)
        for start in range(0, samples, RANDOM_CHUNK)
    ]
    tally = _run(_random_chunk, jobs, workers)
    params = {
        "mode": "random",
        "n_range": [lo, hi],
        "samples": samples,
        "seed": seed,
        "target": target.label,
        "checks": list(checks),
        "parent_rule": parent_rule,
    }
    return _result(params, tally)


def run_lemma1_random(n: int, samples: int, seed: int, workers: int = 1) -> CampaignResult:
    """MPSS boundary biconditional on ``samples`` uniformly drawn strongly connected digraphs."""
    if not 2 <= n <= 16:
        raise ValueError("subset enumeration needs 2 <= n <= 16")
    chunk = 2000
    jobs = [(n, start, min(start + chunk, samples), seed) for start in range(0, samples, chunk)]
    tally = _run(_lemma1_chunk, jobs, workers)
    params = {"mode": "lemma1-random", "n": n, "samples": samples, "seed": seed}
    return _result(params, tally)


def replay(path, checks: Iterable[str] = ALL_CHECKS, parent_rule: str = LOWEST_INDEX) -> list[dict]:
    """Re-run the checks on an archived instance file and return its violations."""
    D = read_edge_list(path)
    tally = Tally()
    check_instance(D, tally, {"replay": str(path)}, checks, parent_rule, lemma1="lemma1" in set(checks) and D.n <= 16)
    return tally.violations
