"""Plain-text edge lists and Graphviz export.

Edge-list grammar (one record per line, whitespace-separated fields)::

    file    := (comment | blank)* header (comment | blank | arc)*
    header  := N M          # vertex count, arc count
    arc     := U V          # 0-based arc U -> V
    comment := '#' anything

Exactly ``M`` arc lines must follow the header.  Loops, repeated arcs and
out-of-range indices are rejected with the offending line number.
"""

from __future__ import annotations

from typing import Iterable

from .digraph import Digraph, iter_bits
from .errors import (
    CountMismatch,
    DuplicateArc,
    EdgeListSyntaxError,
    IndexOutOfRange,
    LoopRejected,
)
from .families import FamilySpec


def _ints(fields: list[str], lineno: int) -> tuple[int, int]:
    if len(fields) != 2:
        raise EdgeListSyntaxError(lineno, f"expected 2 fields, found {len(fields)}")
    try:
        a, b = int(fields[0]), int(fields[1])
    except ValueError:
        raise EdgeListSyntaxError(lineno, "fields must be integers") from None
    return a, b


def parse_edge_list(text: str) -> Digraph:
    n = expected = None
    succ: list[int] = []
    seen_arcs = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        a, b = _ints(line.split(), lineno)
        if n is None:
            if a < 1 or b < 0:
                raise EdgeListSyntaxError(lineno, "header needs n >= 1 and m >= 0")
            n, expected = a, b
            succ = [0] * n
            continue
        if seen_arcs == expected:
            raise CountMismatch(f"line {lineno}: more than the {expected} declared arcs")
        for w in (a, b):
            if not 0 <= w < n:
                raise IndexOutOfRange(w, n, line=lineno)
        if a == b:
            raise LoopRejected(a, line=lineno)
        if succ[a] >> b & 1:
            raise DuplicateArc((a, b), line=lineno)
        succ[a] |= 1 << b
        seen_arcs += 1
    if n is None:
        raise EdgeListSyntaxError(0, "missing 'n m' header")
    if seen_arcs != expected:
        raise CountMismatch(f"header declares {expected} arcs, found {seen_arcs}")
    return Digraph(n, succ)


def serialize_edge_list(D: Digraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{D.n} {D.arc_count}")
    lines.extend(f"{u} {v}" for u, v in D.arcs)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(D: Digraph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_edge_list(D, comments))


def export_dot(D: Digraph, spec: FamilySpec | None = None, name: str = "D") -> str:
    """Graphviz ``digraph`` text; family labels are used when ``spec`` is given."""
    names = spec.labels if spec is not None else {}
    lines = [f"digraph {name} {{"]
    lines.extend(f'  {v} [label="{names.get(v, v)}"];' for v in range(D.n))
    lines.extend(f"  {u} -> {v};" for u in range(D.n) for v in iter_bits(D.succ[u]))
    lines.append("}")
    return "\n".join(lines) + "\n"
