"""Maximal proper strongly connected subgraphs (MPSS).

A proper vertex set ``S`` inducing a strongly connected subgraph is grown by
attaching shortest handles (ears): paths that leave ``S``, run through the
complement and come back.  ``S`` is maximal exactly when the shortest handle
already has to swallow the whole complement.  Every grown set is then
certified by checking the three boundary conditions directly:

1. all arcs leaving ``S`` end at one vertex ``omega_in``;
2. all arcs entering ``S`` start at one vertex ``omega_out``;
3. there is exactly one simple ``omega_in -> omega_out`` path in the whole
   digraph and its vertices are exactly the complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .digraph import (
    Arc,
    Digraph,
    closure,
    from_mask,
    is_strongly_connected,
    iter_bits,
    lowest_bit,
    strongly_connected_mask,
    to_mask,
)
from .errors import (
    DegenerateWhole,
    EmptySet,
    NotStronglyConnected,
    NoHandle,
    PathEnumerationBudgetExceeded,
    SeedNotProper,
    SeedNotStronglyConnected,
    TheoremContradicted,
    TooLarge,
)

DEFAULT_PATH_BUDGET = 10**6
DEFAULT_ENUMERATION_CAP = 16


@dataclass(frozen=True)
class HandlePath:
    entry_arc: Arc
    interior: tuple[int, ...]
    exit_arc: Arc

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.interior)

    def to_dict(self) -> dict:
        return {
            "entry_arc": list(self.entry_arc),
            "interior": list(self.interior),
            "exit_arc": list(self.exit_arc),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HandlePath":
        return cls(tuple(data["entry_arc"]), tuple(data["interior"]), tuple(data["exit_arc"]))


@dataclass(frozen=True)
class MpssCertificate:
    S: frozenset[int]
    omega_in: int
    omega_out: int
    handle: HandlePath

    @property
    def complement(self) -> tuple[int, ...]:
        return self.handle.interior

    def to_dict(self) -> dict:
        return {
            "S": sorted(self.S),
            "omega_in": self.omega_in,
            "omega_out": self.omega_out,
            "handle": self.handle.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MpssCertificate":
        return cls(
            frozenset(data["S"]),
            data["omega_in"],
            data["omega_out"],
            HandlePath.from_dict(data["handle"]),
        )


@dataclass(frozen=True)
class Violation:
    """First boundary condition that fails, with a counterexample.

    ``arcs`` holds two arcs with different heads (condition 1) or tails
    (condition 2); ``paths`` holds two distinct simple paths, or the single
    path that misses part of the complement (condition 3).
    """

    condition: int
    message: str
    arcs: tuple[Arc, ...] = ()
    paths: tuple[tuple[int, ...], ...] = ()


def _check_set(D: Digraph, S: Iterable[int]) -> int:
    smask = to_mask(S, D.n)
    if not smask:
        raise EmptySet("S must be nonempty")
    if smask == D.full:
        raise SeedNotProper("S must be a proper subset of the vertices")
    return smask


def _shortest_handle(D: Digraph, smask: int) -> HandlePath:
    comp = D.full & ~smask
    sources = 0
    targets = 0
    for s in iter_bits(smask):
        sources |= D.succ[s]
        targets |= D.pred[s]
    sources &= comp
    targets &= comp
    if not sources or not targets:
        raise NoHandle("no arc leaves or enters S; the digraph is not strongly connected")

    parent: dict[int, int] = {}
    seen = sources
    frontier = list(iter_bits(sources))
    end = -1
    while frontier:
        hits = [v for v in frontier if targets >> v & 1]
        if hits:
            end = hits[0]
            break
        nxt = []
        for v in frontier:
            for w in iter_bits(D.succ[v] & comp & ~seen):
                parent[w] = v
                seen |= 1 << w
                nxt.append(w)
        frontier = sorted(nxt)
    if end < 0:
        raise NoHandle("no path through the complement returns to S")

    interior = [end]
    while interior[-1] in parent:
        interior.append(parent[interior[-1]])
    interior.reverse()
    first, last = interior[0], interior[-1]
    return HandlePath(
        (lowest_bit(D.pred[first] & smask), first),
        tuple(interior),
        (last, lowest_bit(D.succ[last] & smask)),
    )


def shortest_handle(D: Digraph, S: Iterable[int]) -> HandlePath:
    """Handle with the fewest interior vertices; ties go to lower indices."""
    return _shortest_handle(D, _check_set(D, S))


def growth_steps(D: Digraph, seed_set: Iterable[int]) -> Iterator[frozenset[int]]:
    """Yield the seed and each enlarged set until the next handle would cover everything."""
    smask = to_mask(seed_set, D.n)
    yield from_mask(smask)
    while True:
        handle = _shortest_handle(D, smask)
        grown = smask | to_mask(handle.interior)
        if grown == D.full:
            return
        smask = grown
        yield from_mask(smask)


def _grow(D: Digraph, smask: int, budget: int) -> MpssCertificate:
    while True:
        handle = _shortest_handle(D, smask)
        grown = smask | to_mask(handle.interior)
        if grown == D.full:
            break
        smask = grown
    result = verify_lemma1(D, from_mask(smask), budget)
    if isinstance(result, Violation):
        raise TheoremContradicted(
            f"grown set fails boundary condition {result.condition}: {result.message}",
            digraph=D,
            detail={"S": sorted(iter_bits(smask))},
        )
    return result


def grow_mpss(D: Digraph, seed: int, budget: int = DEFAULT_PATH_BUDGET) -> MpssCertificate:
    if D.n == 1:
        raise DegenerateWhole("a one-vertex digraph has no proper nonempty subgraph")
    if not is_strongly_connected(D):
        raise NotStronglyConnected("growth requires a strongly connected digraph")
    return _grow(D, to_mask([seed], D.n), budget)


def grow_mpss_from_set(
    D: Digraph, seed_set: Iterable[int], budget: int = DEFAULT_PATH_BUDGET
) -> MpssCertificate:
    if not is_strongly_connected(D):
        raise NotStronglyConnected("growth requires a strongly connected digraph")
    smask = _check_set(D, seed_set)
    if not strongly_connected_mask(D.succ, D.pred, smask):
        raise SeedNotStronglyConnected(f"seed {sorted(iter_bits(smask))} is not strongly connected")
    return _grow(D, smask, budget)


def _two_arcs(heads: int, adj: tuple[int, ...], smask: int, outgoing: bool) -> tuple[Arc, Arc]:
    a, b = list(iter_bits(heads))[:2]
    if outgoing:
        return (lowest_bit(adj[a] & smask), a), (lowest_bit(adj[b] & smask), b)
    return (a, lowest_bit(adj[a] & smask)), (b, lowest_bit(adj[b] & smask))


def simple_paths(
    D: Digraph,
    source: int,
    target: int,
    limit: int = 2,
    budget: int = DEFAULT_PATH_BUDGET,
) -> list[tuple[int, ...]]:
    """Up to ``limit`` simple ``source -> target`` paths, lowest indices first.

    Vertices that cannot reach ``target`` at all are never entered.  Each
    extension of a partial path counts against ``budget``.
    """
    if source == target:
        return [(source,)]
    useful = closure(D.pred, 1 << target, D.full)
    found: list[tuple[int, ...]] = []
    spent = 0
    path = [source]
    stack = [iter_bits(D.succ[source] & useful & ~(1 << source))]
    on_path = 1 << source
    while stack and len(found) < limit:
        for w in stack[-1]:
            if on_path >> w & 1:
                continue
            spent += 1
            if spent > budget:
                raise PathEnumerationBudgetExceeded(f"more than {budget} partial paths explored")
            if w == target:
                found.append(tuple(path) + (w,))
                if len(found) >= limit:
                    break
                continue
            path.append(w)
            on_path |= 1 << w
            stack.append(iter_bits(D.succ[w] & useful & ~on_path))
            break
        else:
            stack.pop()
            on_path &= ~(1 << path.pop())
    return found


def verify_lemma1(
    D: Digraph, S: Iterable[int], budget: int = DEFAULT_PATH_BUDGET
) -> MpssCertificate | Violation:
    """Certify ``S`` as maximal proper strongly connected, or say why not."""
    smask = _check_set(D, S)
    if not is_strongly_connected(D):
        raise NotStronglyConnected("the digraph must be strongly connected")
    if not strongly_connected_mask(D.succ, D.pred, smask):
        raise SeedNotStronglyConnected("S must induce a strongly connected subgraph")
    comp = D.full & ~smask

    heads = 0
    tails = 0
    for s in iter_bits(smask):
        heads |= D.succ[s]
        tails |= D.pred[s]
    heads &= comp
    tails &= comp
    if heads.bit_count() != 1:
        return Violation(1, "arcs leaving S end at different vertices", _two_arcs(heads, D.pred, smask, True))
    if tails.bit_count() != 1:
        return Violation(2, "arcs entering S start at different vertices", _two_arcs(tails, D.succ, smask, False))

    omega_in = lowest_bit(heads)
    omega_out = lowest_bit(tails)
    paths = simple_paths(D, omega_in, omega_out, limit=2, budget=budget)
    if len(paths) != 1:
        return Violation(3, f"{len(paths)} simple paths from omega_in to omega_out", paths=tuple(paths))
    path = paths[0]
    if to_mask(path) != comp:
        return Violation(3, "the unique path does not cover the complement exactly", paths=(path,))
    handle = HandlePath(
        (lowest_bit(D.pred[omega_in] & smask), omega_in),
        path,
        (omega_out, lowest_bit(D.succ[omega_out] & smask)),
    )
    return MpssCertificate(from_mask(smask), omega_in, omega_out, handle)


def enumerate_mpss(D: Digraph, cap: int = DEFAULT_ENUMERATION_CAP) -> list[frozenset[int]]:
    """All maximal proper strongly connected vertex sets, by brute force over subsets."""
    if D.n > cap:
        raise TooLarge(f"subset enumeration capped at n={cap}, got {D.n}")
    candidates = [
        mask for mask in range(1, D.full) if strongly_connected_mask(D.succ, D.pred, mask)
    ]
    candidates.sort(key=lambda m: -m.bit_count())
    maximal: list[int] = []
    for mask in candidates:
        if not any(mask & big == mask for big in maximal):
            maximal.append(mask)
    return sorted((from_mask(m) for m in maximal), key=sorted)
