"""Extremal digraph families and a seeded random instance source.

Label layout is fixed so certificates compare across runs:

* ``fig4``: ``a1..ak`` are ``0..k-1``, ``b1..bk`` are ``k..2k-1`` (``k = n/2``).
* ``fig5``: ``a1..a(n-4)`` are ``0..n-5``, ``x1..x4`` are ``n-4..n-1``.
* ``fig6``: ``a1..ak`` are ``0..k-1``, ``b1..bk`` are ``k..2k-1``, ``x`` is ``n-1``.
* ``fig7``: ``a1..a(n-1)`` are ``0..n-2``, ``x`` is ``n-1``.
* ``tournament``: ``a1..an`` are ``0..n-1``.

Fig4 and Fig5 sit one unit below the n+1 degree-sum threshold and have no
noncritical vertex; Fig6 and Fig7 meet n+1 but not n+2 and have exactly one;
the tournament has exactly two.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .digraph import (
    Digraph,
    Hypothesis,
    build_digraph,
    hypothesis_from_degrees,
    adjacent_pairs,
    is_strongly_connected,
    iter_bits,
)
from .errors import BadSize, ExhaustedBudget

FAMILIES = ("fig4", "fig5", "fig6", "fig7", "tournament")
PROBABILITY_GRID = (0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    label_map: dict[str, int] = field(default_factory=dict)

    @property
    def labels(self) -> dict[int, str]:
        return {v: name for name, v in self.label_map.items()}


def _indexed(prefix: str, count: int, start: int = 0) -> dict[str, int]:
    return {f"{prefix}{i + 1}": start + i for i in range(count)}


def family_spec(family: str, n: int) -> FamilySpec:
    _check_size(family, n)
    if family in ("fig4", "fig6"):
        k = n // 2
        labels = {**_indexed("a", k), **_indexed("b", k, k)}
        if family == "fig6":
            labels["x"] = n - 1
    elif family == "fig5":
        labels = {**_indexed("a", n - 4), **_indexed("x", 4, n - 4)}
    elif family == "fig7":
        labels = {**_indexed("a", n - 1), "x": n - 1}
    else:
        labels = _indexed("a", n)
    return FamilySpec(family, n, labels)


def _check_size(family: str, n: int) -> None:
    ok = {
        "fig4": n >= 4 and n % 2 == 0,
        "fig5": n >= 6,
        "fig6": n >= 5 and n % 2 == 1,
        "fig7": n >= 5,
        "tournament": n >= 3,
    }
    if family not in ok:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if not ok[family]:
        raise BadSize(f"{family} is not defined for n={n}")


def _chain_with_back_arcs(m: int) -> list[tuple[int, int]]:
    """Arcs ``a_i -> a_{i+1}`` plus ``a_j -> a_i`` for ``j > i + 1`` on ``0..m-1``."""
    arcs = [(i, i + 1) for i in range(m - 1)]
    arcs += [(j, i) for i in range(m) for j in range(i + 2, m)]
    return arcs


def gen_fig4(n: int) -> Digraph:
    _check_size("fig4", n)
    k = n // 2
    arcs = [(i, k + i) for i in range(k)]
    arcs += [(k + i, j) for i in range(k) for j in range(k) if i != j]
    return build_digraph(n, arcs)


def gen_fig5(n: int) -> Digraph:
    _check_size("fig5", n)
    m = n - 4
    x1, x2, x3, x4 = m, m + 1, m + 2, m + 3
    arcs = _chain_with_back_arcs(m)
    arcs += [(i, x3) for i in range(m)]
    arcs += [(x2, i) for i in range(m)]
    arcs += [(m - 1, x1), (x1, x2), (x2, x3), (x3, x4), (x4, 0)]
    return build_digraph(n, arcs)


def gen_fig6(n: int) -> Digraph:
    _check_size("fig6", n)
    k = (n - 1) // 2
    x = n - 1
    arcs = [(i, k + i) for i in range(k)]
    arcs += [(k + i, j) for i in range(k) for j in range(k) if i != j]
    arcs += [(x, i) for i in range(k)]
    arcs += [(k + i, x) for i in range(k)]
    return build_digraph(n, arcs)


def gen_fig7(n: int) -> Digraph:
    _check_size("fig7", n)
    x = n - 1
    arcs = _chain_with_back_arcs(n - 1) + [(x, 0), (n - 2, x)]
    return build_digraph(n, arcs)


def gen_tournament(n: int) -> Digraph:
    _check_size("tournament", n)
    arcs = [(i, i + 1) for i in range(n - 1)]
    arcs += [(i, j) for i in range(n) for j in range(i - 1)]
    return build_digraph(n, arcs)


GENERATORS = {
    "fig4": gen_fig4,
    "fig5": gen_fig5,
    "fig6": gen_fig6,
    "fig7": gen_fig7,
    "tournament": gen_tournament,
}


def generate(family: str, n: int) -> tuple[Digraph, FamilySpec]:
    spec = family_spec(family, n)
    return GENERATORS[family](n), spec


def _densify(n: int, succ: list[int], target: Hypothesis, rng: random.Random) -> None:
    """Add arcs at the weakest adjacent pair until the target class holds.

    The lower-degree endpoint of the minimum-sum pair gains an arc (random
    direction) to a random non-neighbour.  Degrees only grow, so this ends.
    """
    while True:
        D = Digraph(n, succ)
        degrees = D.degrees()
        pairs = adjacent_pairs(D)
        if hypothesis_from_degrees(n, degrees, pairs).label >= target:
            return
        x, y = min(pairs, key=lambda p: (degrees[p[0]] + degrees[p[1]], p))
        v = x if degrees[x] <= degrees[y] else y
        strangers = [w for w in range(n) if w != v and not D.neighbours_mask(v) >> w & 1]
        w = rng.choice(strangers)
        if rng.random() < 0.5:
            succ[v] |= 1 << w
        else:
            succ[w] |= 1 << v


def gen_random_conditioned(
    n: int,
    target: Hypothesis | str = Hypothesis.THM1,
    seed: int = 0,
    max_rejections: int = 10_000,
) -> Digraph:
    """Seeded strongly connected digraph whose class is at least ``target``.

    Each attempt draws an edge probability from the grid and samples every
    ordered pair independently.  Disconnected samples are rejected.  A
    connected sample below the target is kept as is when it already
    qualifies, and otherwise densified on a coin flip, which biases output
    toward instances sitting right at the threshold.
    """
    if isinstance(target, str):
        target = Hypothesis.from_label(target)
    if target is Hypothesis.NONE:
        raise ValueError("target must be Thm1 or Cor2")
    if n < 4:
        raise BadSize(f"random instances need n >= 4, got {n}")
    rng = random.Random(seed)
    for _ in range(max_rejections):
        p = rng.choice(PROBABILITY_GRID)
        succ = [0] * n
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < p:
                    succ[u] |= 1 << v
        D = Digraph(n, succ)
        if not is_strongly_connected(D):
            continue
        if hypothesis_from_degrees(n, D.degrees(), adjacent_pairs(D)).label >= target:
            return D
        if rng.random() < 0.5:
            _densify(n, succ, target, rng)
            return Digraph(n, succ)
    raise ExhaustedBudget(f"no qualifying digraph after {max_rejections} attempts")


def arc_labels(D: Digraph, spec: FamilySpec) -> list[tuple[str, str]]:
    names = spec.labels
    return [(names[u], names[v]) for u in range(D.n) for v in iter_bits(D.succ[u])]
