"""Re-check serialized reports from scratch.

Nothing here reuses the bitmask machinery or the certificate classes: the
document is read as plain JSON, the digraph is rebuilt as adjacency sets,
and every claim (noncriticality of witnesses, the three MPSS boundary
conditions, level-tree shape) is checked with its own small searches.
Run as ``python -m noncritical validate FILE...`` to do it in a fresh
process.
"""

from __future__ import annotations

import json
from collections import deque


class _Graph:
    def __init__(self, n, arcs):
        self.n = n
        self.out = {v: set() for v in range(n)}
        self.inc = {v: set() for v in range(n)}
        for u, v in arcs:
            self.out[u].add(v)
            self.inc[v].add(u)

    def reach(self, start, within, forward=True):
        adj = self.out if forward else self.inc
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w in within and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def strong(self, within):
        within = set(within)
        if not within:
            return False
        start = min(within)
        return self.reach(start, within) == within and self.reach(start, within, False) == within

    def degree(self, v):
        return len(self.out[v] | self.inc[v])

    def count_paths(self, src, dst, limit=2):
        if src == dst:
            return [[src]]
        found = []
        alive = self.reach(dst, set(range(self.n)), forward=False)

        def walk(path, used):
            if len(found) >= limit:
                return
            for w in sorted(self.out[path[-1]]):
                if w in used or w not in alive:
                    continue
                if w == dst:
                    found.append(path + [w])
                    if len(found) >= limit:
                        return
                    continue
                walk(path + [w], used | {w})

        walk([src], {src})
        return found


def check_mpss(g: _Graph, cert: dict) -> list[str]:
    problems = []
    everything = set(range(g.n))
    S = set(cert["S"])
    comp = everything - S
    if not S or not comp:
        return ["mpss: S must be proper and nonempty"]
    if not g.strong(S):
        problems.append("mpss: S is not strongly connected")
    heads = {w for s in S for w in g.out[s] if w in comp}
    tails = {u for s in S for u in g.inc[s] if u in comp}
    if heads != {cert["omega_in"]}:
        problems.append(f"mpss: arcs leave S toward {sorted(heads)}, not only omega_in")
    if tails != {cert["omega_out"]}:
        problems.append(f"mpss: arcs enter S from {sorted(tails)}, not only omega_out")
    paths = g.count_paths(cert["omega_in"], cert["omega_out"])
    handle = cert["handle"]
    if len(paths) != 1:
        problems.append(f"mpss: {len(paths)} simple omega_in -> omega_out paths")
    elif paths[0] != handle["interior"] or set(paths[0]) != comp:
        problems.append("mpss: handle is not the unique path covering the complement")
    entry, exit_ = handle["entry_arc"], handle["exit_arc"]
    if entry[1] not in g.out.get(entry[0], ()) or entry[0] not in S:
        problems.append("mpss: entry arc missing")
    if exit_[1] not in g.out.get(exit_[0], ()) or exit_[1] not in S:
        problems.append("mpss: exit arc missing")
    return problems


def check_tree(g: _Graph, tree: dict, S: set) -> list[str]:
    problems = []
    root, excluded = tree["root"], tree["excluded"]
    incoming = tree["direction"] == "incoming"
    level = {int(v): k for v, k in tree["level_of"].items()}
    parent = {int(v): p for v, p in tree["parent_of"].items()}
    if set(level) != S | {root} or level.get(root) != 0:
        problems.append("tree: vertex set is not S plus the root")
    if set(parent) != set(level) - {root}:
        problems.append("tree: every non-root vertex needs exactly one parent")
    within = set(range(g.n)) - {excluded}
    dist = {root: 0}
    queue = deque([root])
    adj = g.inc if incoming else g.out
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in within and w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    for v, p in parent.items():
        arc_ok = p in g.out[v] if incoming else v in g.out[p]
        if not arc_ok:
            problems.append(f"tree: parent arc for {v} missing or misoriented")
        if level.get(v) != dist.get(v) or level.get(p, -1) != level.get(v, 0) - 1:
            problems.append(f"tree: level of {v} is not its breadth-first distance")
    return problems


def _leaves(tree: dict) -> set:
    parents = set(tree["parent_of"].values())
    return {int(v) for v in tree["level_of"] if int(v) not in parents}


def check_witness(g: _Graph, cert: dict) -> list[str]:
    problems = []
    vertex = cert["vertex"]
    vertices = vertex if isinstance(vertex, list) else [vertex]
    if len(set(vertices)) != len(vertices):
        problems.append("witness: repeated vertex")
    if not cert["validated"]:
        problems.append("witness: not marked validated")
    for v in vertices:
        if not g.strong(set(range(g.n)) - {v}):
            problems.append(f"witness: deleting {v} breaks strong connectivity")
    tag = cert["case_tag"]
    mpss = cert.get("mpss")
    if mpss:
        problems += check_mpss(g, mpss)
    if cert.get("trees"):
        S = set(mpss["S"]) if mpss else set()
        t_in, t_out = cert["trees"]
        problems += check_tree(g, t_in, S) + check_tree(g, t_out, S)
        common = _leaves(t_in) & _leaves(t_out)
        if not set(vertices) <= common:
            problems.append("witness: vertex is not a common leaf")
        if mpss and g.n - len(mpss["S"]) != 2:
            problems.append("witness: leaf intersection needs a two-vertex complement")
    elif tag == "LeafIntersection":
        problems.append("witness: leaf intersection without trees")
    if tag == "ComplementSingleton" and not cert.get("supporting"):
        if not mpss or set(range(g.n)) - set(mpss["S"]) != set(vertices):
            problems.append("witness: complement is not the witness vertex")
    if tag == "CaseB_DirectQ":
        q = (cert.get("case_b_trace") or {}).get("q")
        if q is None or vertices != [q] or g.degree(q) != 2:
            problems.append("witness: direct case needs the degree-two vertex q")
    for sub in cert.get("supporting", ()):
        problems += check_witness(g, sub)
    return problems


def validate_report(doc: dict) -> list[str]:
    """All problems found in one report document (empty when it checks out)."""
    n = doc["n"]
    arcs = [tuple(a) for a in doc["arcs"]]
    if len(set(arcs)) != len(arcs) or any(u == v or not (0 <= u < n and 0 <= v < n) for u, v in arcs):
        return ["arcs: loops, repeats or bad indices"]
    g = _Graph(n, arcs)
    problems = []
    if [g.degree(v) for v in range(n)] != doc["degrees"]:
        problems.append("degrees disagree with the arc list")
    strong = g.strong(set(range(n)))
    if strong != doc["strongly_connected"]:
        problems.append("strong connectivity flag is wrong")
    if doc.get("oracle") is not None:
        actual = sorted(v for v in range(n) if g.strong(set(range(n)) - {v}))
        if actual != doc["oracle"]:
            problems.append(f"oracle lists {doc['oracle']}, recomputed {actual}")
    if doc.get("mpss"):
        problems += check_mpss(g, doc["mpss"])
    for key in ("witness", "two_witness"):
        if doc.get(key):
            problems += check_witness(g, doc[key])
            if doc.get("oracle") is not None:
                v = doc[key]["vertex"]
                if not set(v if isinstance(v, list) else [v]) <= set(doc["oracle"]):
                    problems.append(f"{key}: vertex outside the oracle set")
    return problems


def validate_file(path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return validate_report(json.load(fh))
