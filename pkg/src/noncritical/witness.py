"""Finding noncritical vertices, by definition and constructively.

The constructive route follows the degree-sum argument: a vertex of degree
two is handled through the triangle it sits on, otherwise an MPSS is grown
from vertex 0.  A singleton complement is itself noncritical.  A two-vertex
complement ``{omega_in, omega_out}`` yields breadth-first level trees of
``S``, one toward ``omega_in`` and one away from ``omega_out``; any common
leaf of the two trees is noncritical.

Every returned vertex is re-checked by deleting it and testing strong
connectivity.  If the construction ever produces something that fails,
:class:`TheoremContradicted` is raised with the instance attached.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .decomposition import DEFAULT_PATH_BUDGET, MpssCertificate, grow_mpss, grow_mpss_from_set
from .digraph import (
    Digraph,
    Hypothesis,
    HypothesisClass,
    classify_hypothesis,
    is_strongly_connected,
    iter_bits,
    lowest_bit,
    strongly_connected_mask,
    to_mask,
)
from .errors import (
    GraphError,
    HypothesisNotMet,
    NotStronglyConnected,
    TheoremContradicted,
    TooSmall,
    UnreachableVertex,
)

INCOMING = "incoming"
OUTGOING = "outgoing"

LOWEST_INDEX = "lowest-index"
PREFER_ROOT_NEIGHBOURS = "prefer-root-neighbors"
PARENT_RULES = (LOWEST_INDEX, PREFER_ROOT_NEIGHBOURS)


class CaseTag(str, enum.Enum):
    COMPLEMENT_SINGLETON = "ComplementSingleton"
    LEAF_INTERSECTION = "LeafIntersection"
    CASE_B_DIRECT_Q = "CaseB_DirectQ"
    CASE_B_REDUCED = "CaseB_Reduced"


@dataclass(frozen=True)
class LevelTree:
    root: int
    excluded: int
    direction: str
    level_of: dict[int, int]
    parent_of: dict[int, int]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.level_of)

    @property
    def leaves(self) -> frozenset[int]:
        parents = set(self.parent_of.values())
        return frozenset(v for v in self.level_of if v not in parents)

    @property
    def branches(self) -> int:
        """Components of the tree once the root is removed."""
        return sum(1 for p in self.parent_of.values() if p == self.root)

    def to_dict(self) -> dict:
        return {
            "root": self.root,
            "excluded": self.excluded,
            "direction": self.direction,
            "level_of": {str(v): k for v, k in sorted(self.level_of.items())},
            "parent_of": {str(v): p for v, p in sorted(self.parent_of.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LevelTree":
        return cls(
            data["root"],
            data["excluded"],
            data["direction"],
            {int(v): k for v, k in data["level_of"].items()},
            {int(v): p for v, p in data["parent_of"].items()},
        )


@dataclass(frozen=True)
class LeafSets:
    a_in: frozenset[int]
    a_out: frozenset[int]
    intersection: frozenset[int]


@dataclass(frozen=True)
class CaseBTrace:
    """Degree-two vertex ``q`` on the directed triangle ``q -> p1 -> p2 -> q``."""

    q: int
    p1: int
    p2: int


@dataclass(frozen=True)
class WitnessCertificate:
    vertices: tuple[int, ...]
    case_tag: CaseTag
    mpss: MpssCertificate | None = None
    trees: tuple[LevelTree, LevelTree] | None = None
    case_b_trace: CaseBTrace | None = None
    validated: bool = False
    supporting: tuple["WitnessCertificate", ...] = ()

    @property
    def vertex(self) -> int:
        return self.vertices[0]

    @property
    def leaf_sets(self) -> LeafSets | None:
        if self.trees is None:
            return None
        return leaf_sets(*self.trees)

    def to_dict(self) -> dict:
        out: dict = {
            "vertex": self.vertices[0] if len(self.vertices) == 1 else list(self.vertices),
            "case_tag": self.case_tag.value,
            "mpss": self.mpss.to_dict() if self.mpss else None,
            "trees": [t.to_dict() for t in self.trees] if self.trees else None,
            "case_b_trace": (
                {"q": self.case_b_trace.q, "p1": self.case_b_trace.p1, "p2": self.case_b_trace.p2}
                if self.case_b_trace
                else None
            ),
            "validated": self.validated,
        }
        if self.supporting:
            out["supporting"] = [c.to_dict() for c in self.supporting]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "WitnessCertificate":
        vertex = data["vertex"]
        trace = data.get("case_b_trace")
        return cls(
            tuple(vertex) if isinstance(vertex, list) else (vertex,),
            CaseTag(data["case_tag"]),
            MpssCertificate.from_dict(data["mpss"]) if data.get("mpss") else None,
            tuple(LevelTree.from_dict(t) for t in data["trees"]) if data.get("trees") else None,
            CaseBTrace(trace["q"], trace["p1"], trace["p2"]) if trace else None,
            data["validated"],
            tuple(cls.from_dict(c) for c in data.get("supporting", ())),
        )


def _deletion_keeps_strong(D: Digraph, v: int) -> bool:
    return strongly_connected_mask(D.succ, D.pred, D.full & ~(1 << v))


def noncritical_oracle(D: Digraph) -> frozenset[int]:
    """Vertices whose deletion leaves the digraph strongly connected."""
    if D.n < 2:
        raise TooSmall("deletion needs at least two vertices")
    if not is_strongly_connected(D):
        raise NotStronglyConnected("noncriticality is defined for strongly connected digraphs")
    return frozenset(v for v in range(D.n) if _deletion_keeps_strong(D, v))


def build_level_tree(
    D: Digraph,
    S: Iterable[int],
    root: int,
    excluded: int,
    direction: str,
    parent_rule: str = LOWEST_INDEX,
) -> LevelTree:
    """Breadth-first tree of ``S`` hanging off ``root`` inside ``D - excluded``.

    ``incoming`` levels follow arcs toward the root, ``outgoing`` levels
    follow arcs away from it.  Each vertex picks one parent on the previous
    level, by ``parent_rule``.
    """
    if direction not in (INCOMING, OUTGOING):
        raise ValueError(f"direction must be {INCOMING!r} or {OUTGOING!r}")
    if parent_rule not in PARENT_RULES:
        raise ValueError(f"unknown parent rule {parent_rule!r}")
    smask = to_mask(S, D.n)
    if (smask >> root & 1) or (smask >> excluded & 1) or root == excluded:
        raise GraphError("root and excluded must be distinct vertices outside S")
    # expand via predecessors for an in-tree, via successors for an out-tree
    expand, towards = (D.pred, D.succ) if direction == INCOMING else (D.succ, D.pred)
    root_adjacent = D.neighbours_mask(root)
    within = smask | (1 << root)

    level_of = {root: 0}
    parent_of: dict[int, int] = {}
    seen = 1 << root
    frontier = 1 << root
    level = 0
    while frontier:
        level += 1
        reached = 0
        for v in iter_bits(frontier):
            reached |= expand[v]
        reached &= within & ~seen
        for x in iter_bits(reached):
            candidates = towards[x] & frontier
            if parent_rule == PREFER_ROOT_NEIGHBOURS and candidates & root_adjacent:
                candidates &= root_adjacent
            parent_of[x] = lowest_bit(candidates)
            level_of[x] = level
        seen |= reached
        frontier = reached
    missing = smask & ~seen
    if missing:
        raise UnreachableVertex(f"vertices {sorted(iter_bits(missing))} do not reach the root")
    return LevelTree(root, excluded, direction, level_of, parent_of)


def leaf_sets(t_in: LevelTree, t_out: LevelTree) -> LeafSets:
    a_in = t_in.leaves
    a_out = t_out.leaves
    return LeafSets(a_in, a_out, a_in & a_out)


def _trees_for(D: Digraph, mpss: MpssCertificate, parent_rule: str) -> tuple[LevelTree, LevelTree]:
    t_in = build_level_tree(D, mpss.S, mpss.omega_in, mpss.omega_out, INCOMING, parent_rule)
    t_out = build_level_tree(D, mpss.S, mpss.omega_out, mpss.omega_in, OUTGOING, parent_rule)
    return t_in, t_out


def _require_noncritical(D: Digraph, vertices: tuple[int, ...], how: str) -> None:
    for v in vertices:
        if not _deletion_keeps_strong(D, v):
            raise TheoremContradicted(
                f"{how} produced vertex {v}, but deleting it breaks strong connectivity",
                digraph=D,
                detail={"vertex": v, "case": how},
            )


def _resolve(
    D: Digraph,
    mpss: MpssCertificate,
    trace: CaseBTrace | None,
    parent_rule: str,
    want: int = 1,
) -> WitnessCertificate:
    """Turn an MPSS into ``want`` witnesses, or report why the argument fails.

    A ``trace`` marks the degree-two reduction; the tag then stays
    ``CaseB_Reduced`` whichever complement size follows.
    """
    comp = mpss.complement
    if len(comp) == 1:
        tag = CaseTag.CASE_B_REDUCED if trace else CaseTag.COMPLEMENT_SINGLETON
        return WitnessCertificate(comp, tag, mpss, None, trace)
    if len(comp) == 2:
        trees = _trees_for(D, mpss, parent_rule)
        common = sorted(leaf_sets(*trees).intersection)
        if len(common) < want:
            raise TheoremContradicted(
                f"leaf intersection has {len(common)} vertices, need {want}",
                digraph=D,
                detail={"mpss": mpss.to_dict()},
            )
        tag = CaseTag.CASE_B_REDUCED if trace else CaseTag.LEAF_INTERSECTION
        return WitnessCertificate(tuple(common[:want]), tag, mpss, trees, trace)
    raise TheoremContradicted(
        f"MPSS complement has {len(comp)} vertices under the degree-sum hypothesis",
        digraph=D,
        detail={"mpss": mpss.to_dict()},
    )


def _hypothesis_or_raise(D: Digraph, needed: Hypothesis) -> HypothesisClass:
    hyp = classify_hypothesis(D)
    if hyp.label < needed:
        raise HypothesisNotMet(
            f"minimum adjacent degree sum {hyp.min_adjacent_degree_sum} is below "
            f"n+{needed.value} = {D.n + needed.value}",
            hypothesis=hyp,
        )
    return hyp


def _validated(D: Digraph, cert: WitnessCertificate) -> WitnessCertificate:
    _require_noncritical(D, cert.vertices, cert.case_tag.value)
    return WitnessCertificate(
        cert.vertices, cert.case_tag, cert.mpss, cert.trees, cert.case_b_trace, True, cert.supporting
    )


def constructive_noncritical(
    D: Digraph, parent_rule: str = LOWEST_INDEX, budget: int = DEFAULT_PATH_BUDGET
) -> WitnessCertificate:
    """One noncritical vertex for a digraph whose adjacent degree sums reach n+1."""
    _hypothesis_or_raise(D, Hypothesis.THM1)
    degrees = D.degrees()
    small = [v for v in range(D.n) if degrees[v] < 3]
    if not small:
        mpss = grow_mpss(D, 0, budget)
        return _validated(D, _resolve(D, mpss, None, parent_rule))

    q = small[0]
    if degrees[q] != 2:
        raise TheoremContradicted(f"vertex {q} has degree {degrees[q]} under the hypothesis", digraph=D)
    p1, p2 = D.neighbours(q)
    if _deletion_keeps_strong(D, q):
        trace = CaseBTrace(q, p1, p2)
        return _validated(D, WitnessCertificate((q,), CaseTag.CASE_B_DIRECT_Q, case_b_trace=trace))
    if degrees[p1] != D.n - 1 or degrees[p2] != D.n - 1:
        raise TheoremContradicted(f"neighbours of degree-2 vertex {q} are not universal", digraph=D)
    for a, b in ((p1, p2), (p2, p1)):
        if D.has_arc(q, a) and D.has_arc(a, b) and D.has_arc(b, q):
            trace = CaseBTrace(q, a, b)
            break
    else:
        raise TheoremContradicted(f"critical degree-2 vertex {q} lies on no directed triangle", digraph=D)
    mpss = grow_mpss_from_set(D, (q, trace.p1, trace.p2), budget)
    return _validated(D, _resolve(D, mpss, trace, parent_rule))


def two_noncritical(
    D: Digraph, parent_rule: str = LOWEST_INDEX, budget: int = DEFAULT_PATH_BUDGET
) -> WitnessCertificate:
    """Two distinct noncritical vertices when adjacent degree sums reach n+2."""
    hyp = _hypothesis_or_raise(D, Hypothesis.COR2)
    if hyp.min_degree < 3:
        raise TheoremContradicted(f"minimum degree {hyp.min_degree} under the n+2 hypothesis", digraph=D)
    first = _resolve(D, grow_mpss(D, 0, budget), None, parent_rule, want=2)
    if len(first.vertices) == 2:
        return _validated(D, first)

    x1 = first.vertex
    second = _resolve(D, grow_mpss(D, x1, budget), None, parent_rule, want=2)
    if len(second.vertices) == 2:
        return _validated(D, second)
    if second.vertex == x1:
        raise TheoremContradicted("regrowing from the first witness returned it again", digraph=D)
    pair = WitnessCertificate(
        tuple(sorted((x1, second.vertex))),
        CaseTag.COMPLEMENT_SINGLETON,
        second.mpss,
        supporting=(_validated(D, first), _validated(D, second)),
    )
    return _validated(D, pair)


@dataclass(frozen=True)
class LeafStats:
    """Counts recorded whenever a witness came from a leaf intersection."""

    a_in: int
    a_out: int
    intersection: int
    bound: int
    deg_omega_in: int
    deg_omega_out: int

    @property
    def bound_holds(self) -> bool:
        return self.intersection >= max(1, self.bound)

    @property
    def branch_claim_holds(self) -> bool:
        return self.a_in >= self.deg_omega_in - 1 and self.a_out >= self.deg_omega_out - 1

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a_in, self.a_out, self.intersection, self.bound)


def leaf_statistics(D: Digraph, cert: WitnessCertificate) -> LeafStats | None:
    """Leaf counts for a certificate built on level trees, else ``None``."""
    if cert.trees is None or cert.mpss is None:
        return None
    sets = cert.leaf_sets
    degrees = D.degrees()
    return LeafStats(
        len(sets.a_in),
        len(sets.a_out),
        len(sets.intersection),
        2 * min(degrees) - D.n,
        degrees[cert.mpss.omega_in],
        degrees[cert.mpss.omega_out],
    )

