"""Simple digraphs stored as per-vertex bitmasks.

Vertices are the integers ``0..n-1``.  ``succ[u]`` has bit ``v`` set when the
arc ``u -> v`` exists and ``pred[v]`` mirrors it.  Python integers are
unbounded, so the same representation serves any ``n``.

Degree always means the number of distinct neighbours: a vertex joined to
``u`` by arcs in both directions is counted once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateArc,
    EmptySet,
    IndexOutOfRange,
    LoopRejected,
    NotStronglyConnected,
    TooSmall,
)

Arc = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def to_mask(vertices: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for v in vertices:
        if v < 0 or (n is not None and v >= n):
            raise IndexOutOfRange(v, n if n is not None else 0)
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def closure(adj: Sequence[int], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from the ``start`` mask along ``adj``."""
    seen = start & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def strongly_connected_mask(succ: Sequence[int], pred: Sequence[int], within: int) -> bool:
    """True when the subgraph induced by ``within`` is strongly connected."""
    if not within:
        return False
    root = within & -within
    return closure(succ, root, within) == within and closure(pred, root, within) == within


class Digraph:
    """Immutable simple digraph.

    Build instances with :func:`build_digraph` (validating) or
    :meth:`Digraph.from_masks` (trusted successor masks, used by sweeps).
    ``origin`` is set on induced subgraphs and maps each new index back to
    the vertex it came from.
    """

    __slots__ = ("n", "succ", "pred", "origin")

    def __init__(self, n: int, succ: Sequence[int], origin: tuple[int, ...] | None = None):
        succ = tuple(succ)
        pred = [0] * n
        for u, out in enumerate(succ):
            bit = 1 << u
            for v in iter_bits(out):
                pred[v] |= bit
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "succ", succ)
        object.__setattr__(self, "pred", tuple(pred))
        object.__setattr__(self, "origin", origin)

    @classmethod
    def _trusted(cls, n: int, succ: tuple[int, ...], pred: tuple[int, ...]) -> "Digraph":
        D = object.__new__(cls)
        object.__setattr__(D, "n", n)
        object.__setattr__(D, "succ", succ)
        object.__setattr__(D, "pred", pred)
        object.__setattr__(D, "origin", None)
        return D

    @classmethod
    def from_masks(cls, n: int, succ: Sequence[int]) -> "Digraph":
        full = (1 << n) - 1
        for u, out in enumerate(succ):
            if out >> u & 1:
                raise LoopRejected(u)
            if out & ~full:
                raise IndexOutOfRange(out.bit_length() - 1, n)
        return cls(n, succ)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __reduce__(self):
        return (Digraph, (self.n, self.succ, self.origin))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.succ == other.succ

    def __hash__(self):
        return hash((self.n, self.succ))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def arcs(self) -> tuple[Arc, ...]:
        """All arcs sorted lexicographically."""
        return tuple((u, v) for u in range(self.n) for v in iter_bits(self.succ[u]))

    @property
    def arc_count(self) -> int:
        return sum(out.bit_count() for out in self.succ)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.succ[u] >> v & 1)

    def neighbours_mask(self, v: int) -> int:
        return self.succ[v] | self.pred[v]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.neighbours_mask(v)))

    def degrees(self) -> tuple[int, ...]:
        return tuple((s | p).bit_count() for s, p in zip(self.succ, self.pred))

    def remove_vertex(self, v: int) -> "Digraph":
        return induced_subgraph(self, [u for u in range(self.n) if u != v])


def build_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Validate an arc list and return the digraph it describes."""
    if n < 1:
        raise TooSmall("a digraph needs at least one vertex")
    succ = [0] * n
    for u, v in arcs:
        for w in (u, v):
            if not 0 <= w < n:
                raise IndexOutOfRange(w, n)
        if u == v:
            raise LoopRejected(u)
        if succ[u] >> v & 1:
            raise DuplicateArc((u, v))
        succ[u] |= 1 << v
    return Digraph(n, succ)


def is_strongly_connected(D: Digraph) -> bool:
    return strongly_connected_mask(D.succ, D.pred, D.full)


def strongly_connected_components(D: Digraph) -> list[frozenset[int]]:
    """Tarjan's low-link algorithm, iterative, components in completion order."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack = [False] * D.n
    stack: list[int] = []
    components = []
    counter = 0
    for root in range(D.n):
        if root in index:
            continue
        work = [(root, iter(iter_bits(D.succ[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, children = work[-1]
            for w in children:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(iter_bits(D.succ[w]))))
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    components.append(frozenset(comp))
    return components


def degree(D: Digraph, v: int) -> int:
    if not 0 <= v < D.n:
        raise IndexOutOfRange(v, D.n)
    return D.neighbours_mask(v).bit_count()


def adjacent_pairs(D: Digraph) -> list[tuple[int, int]]:
    """Unordered adjacent pairs ``(x, y)`` with ``x < y``, sorted."""
    pairs = []
    for u in range(D.n):
        above = D.neighbours_mask(u) >> (u + 1) << (u + 1)
        pairs.extend((u, v) for v in iter_bits(above))
    return pairs


class Hypothesis(enum.IntEnum):
    """Which degree-sum threshold a digraph meets, ordered by strength."""

    NONE = 0
    THM1 = 1
    COR2 = 2

    @property
    def label(self) -> str:
        return _HYPOTHESIS_LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "Hypothesis":
        for member, text in _HYPOTHESIS_LABELS.items():
            if text == label:
                return member
        raise ValueError(f"unknown hypothesis class {label!r}")


_HYPOTHESIS_LABELS = {Hypothesis.NONE: "None", Hypothesis.THM1: "Thm1", Hypothesis.COR2: "Cor2"}


@dataclass(frozen=True)
class HypothesisClass:
    label: Hypothesis
    min_adjacent_degree_sum: int
    min_degree: int
    satisfies_cor11: bool
    satisfies_cor22: bool

    def to_dict(self) -> dict:
        return {
            "class": self.label.label,
            "min_adjacent_degree_sum": self.min_adjacent_degree_sum,
            "min_degree": self.min_degree,
            "satisfies_cor11": self.satisfies_cor11,
            "satisfies_cor22": self.satisfies_cor22,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HypothesisClass":
        return cls(
            Hypothesis.from_label(data["class"]),
            data["min_adjacent_degree_sum"],
            data["min_degree"],
            data["satisfies_cor11"],
            data["satisfies_cor22"],
        )


def hypothesis_from_degrees(n: int, degrees: Sequence[int], pairs: Iterable[tuple[int, int]]) -> HypothesisClass:
    """Classify from precomputed degrees and adjacent pairs.

    Shared by :func:`classify_hypothesis` and by code that maintains degrees
    incrementally, so both always agree on the thresholds.
    """
    min_sum = min((degrees[x] + degrees[y] for x, y in pairs), default=0)
    min_deg = min(degrees)
    if min_sum >= n + 2:
        label = Hypothesis.COR2
    elif min_sum >= n + 1:
        label = Hypothesis.THM1
    else:
        label = Hypothesis.NONE
    return HypothesisClass(label, min_sum, min_deg, 2 * min_deg >= n + 1, 2 * min_deg >= n + 2)


def classify_hypothesis(D: Digraph) -> HypothesisClass:
    if D.n < 4:
        raise TooSmall(f"degree-sum theorems need n >= 4, got {D.n}")
    if not is_strongly_connected(D):
        raise NotStronglyConnected("classification requires a strongly connected digraph")
    return hypothesis_from_degrees(D.n, D.degrees(), adjacent_pairs(D))


def induced_subgraph(D: Digraph, S: Iterable[int]) -> Digraph:
    """Subgraph induced by ``S``, re-indexed densely in increasing vertex order."""
    keep = sorted(set(S))
    if not keep:
        raise EmptySet("induced subgraph of an empty vertex set")
    for v in keep:
        if not 0 <= v < D.n:
            raise IndexOutOfRange(v, D.n)
    position = {v: i for i, v in enumerate(keep)}
    mask = to_mask(keep)
    succ = [0] * len(keep)
    for i, v in enumerate(keep):
        for w in iter_bits(D.succ[v] & mask):
            succ[i] |= 1 << position[w]
    origin = tuple(D.origin[v] for v in keep) if D.origin is not None else tuple(keep)
    return Digraph(len(keep), succ, origin=origin)


def complete_digraph(n: int) -> Digraph:
    """Complete symmetric digraph: both arcs between every pair."""
    full = (1 << n) - 1
    return Digraph(n, [full & ~(1 << u) for u in range(n)])


def directed_cycle(n: int) -> Digraph:
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)])
