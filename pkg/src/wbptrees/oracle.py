"""
Brute-force ground truth: exhaustive enumeration of weighted bi-colored
plane trees with a prescribed passport.

A plane tree is a combinatorial map: vertices, edges, and a cyclic order of
edges around every vertex.  Since a tree has a single face, its boundary
walk traverses each edge once in each direction, and the cyclic sequence of
walk symbols (source color and label, edge weight, and the distance to the
reverse traversal) is a complete invariant for orientation-preserving
equivalence.  Rotations fixing that cyclic sequence are exactly the
automorphisms, so the minimal period of the code yields the order of the
(cyclic) rotation group directly.  Mirror images are not identified.

Enumeration roots a search at a black vertex of maximal weight, backtracks
over ordered child lists whose edge weights exhaust each vertex's residual
weight, and dedupes rooted results by canonical code.  This is deliberately
formula-free so it can arbitrate the counting engine.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import NamedTuple

from .count import divisors
from .passport import (
    STAR,
    ConsistencyError,
    LabeledWeight,
    Passport,
    _label_key,
)

BLACK = "black"
WHITE = "white"


def _opposite(color: str) -> str:
    return WHITE if color == BLACK else BLACK


class Vertex(NamedTuple):
    color: str
    weight: int
    label: object


class Edge(NamedTuple):
    u: int
    v: int
    weight: int


class WBPTree(NamedTuple):
    """An embedded tree: bipartite vertices, weighted edges, and for each
    vertex the counterclockwise cyclic order of its incident edge ids."""

    vertices: tuple
    edges: tuple
    rotation: tuple

    def passport(self) -> Passport:
        return Passport(
            black=[(v.weight, v.label) for v in self.vertices if v.color == BLACK],
            white=[(v.weight, v.label) for v in self.vertices if v.color == WHITE],
        )


class CanonicalCode(NamedTuple):
    """Lexicographically minimal rotation of the boundary-walk symbols."""

    code: tuple
    period: int


def _validate(t: WBPTree):
    nv, ne = len(t.vertices), len(t.edges)
    if nv < 2 or ne != nv - 1:
        raise ValueError("a tree needs n >= 2 vertices and n - 1 edges")
    incident = [[] for _ in range(nv)]
    for eid, (u, v, w) in enumerate(t.edges):
        if w < 1:
            raise ValueError("edge weights must be positive")
        if t.vertices[u].color == t.vertices[v].color:
            raise ValueError("every edge must join a black and a white vertex")
        incident[u].append(eid)
        incident[v].append(eid)
    if len(t.rotation) != nv:
        raise ValueError("rotation must list every vertex")
    for vid in range(nv):
        if sorted(t.rotation[vid]) != sorted(incident[vid]):
            raise ValueError("rotation must order exactly the incident edges")
        want = sum(t.edges[e].weight for e in incident[vid])
        if t.vertices[vid].weight != want:
            raise ValueError(
                f"vertex {vid} weight {t.vertices[vid].weight} != "
                f"incident edge sum {want}")
    seen = {0}
    frontier = [0]
    while frontier:
        vid = frontier.pop()
        for eid in incident[vid]:
            u, v, _ = t.edges[eid]
            nxt = v if u == vid else u
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    if len(seen) != nv:
        raise ValueError("tree is not connected")


def _boundary_walk(t: WBPTree):
    """The face traversal as a list of directed edges (edge id, source)."""
    pos = [{e: i for i, e in enumerate(rot)} for rot in t.rotation]

    def other(eid, vid):
        u, v, _ = t.edges[eid]
        return v if u == vid else u

    L = 2 * len(t.edges)
    u0 = t.edges[0].u if t.vertices[t.edges[0].u].color == BLACK else t.edges[0].v
    eid, src = 0, u0
    walk = []
    for _ in range(L):
        walk.append((eid, src))
        dst = other(eid, src)
        rot = t.rotation[dst]
        eid = rot[(pos[dst][eid] + 1) % len(rot)]
        src = dst
    if (eid, src) != walk[0]:
        raise ConsistencyError("boundary walk is not a single cycle")
    return walk


def _walk_symbols(t: WBPTree, walk):
    L = len(walk)
    index = {de: i for i, de in enumerate(walk)}

    def other(eid, vid):
        u, v, _ = t.edges[eid]
        return v if u == vid else u

    symbols = []
    for i, (eid, src) in enumerate(walk):
        gap = (index[(eid, other(eid, src))] - i) % L
        vert = t.vertices[src]
        symbols.append((0 if vert.color == BLACK else 1,
                        t.edges[eid].weight, gap, _label_key(vert.label)))
    return symbols


def canonical_code(t: WBPTree) -> CanonicalCode:
    """Minimal rotation of the walk code; two trees are the same plane tree
    iff their codes are equal."""
    _validate(t)
    symbols = _walk_symbols(t, _boundary_walk(t))
    L = len(symbols)
    doubled = symbols + symbols
    best = min(tuple(doubled[i:i + L]) for i in range(L))
    for period in divisors(L):
        if all(best[i] == best[(i + period) % L] for i in range(L)):
            return CanonicalCode(best, period)
    raise ConsistencyError("cyclic code has no period")  # unreachable


def aut_order(t: WBPTree) -> int:
    """Order of the rotation group: walk length over minimal code period."""
    code = canonical_code(t)
    return len(code.code) // code.period


def _aut_vertex_perms(t: WBPTree):
    """The rotation automorphisms as vertex permutations.

    A shift of the boundary walk that fixes the symbol code must map every
    occurrence of a vertex to occurrences of one single vertex; a conflict
    would exhibit a non-rotational stabilizer and is surfaced as a hard
    failure rather than absorbed.
    """
    walk = _boundary_walk(t)
    symbols = _walk_symbols(t, walk)
    L = len(symbols)
    period = canonical_code(t).period
    perms = []
    for shift in range(0, L, period):
        perm = [None] * len(t.vertices)
        for i, (_, src) in enumerate(walk):
            tgt = walk[(i + shift) % L][1]
            if perm[src] is None:
                perm[src] = tgt
            elif perm[src] != tgt:
                raise ConsistencyError(
                    "code stabilizer does not act by vertex rotation")
        if sorted(perm) != list(range(len(t.vertices))):
            raise ConsistencyError("walk shift is not a vertex bijection")
        perms.append(tuple(perm))
    return perms


# ---------------------------------------------------------------------------
# exhaustive generation


def _generate_rooted(p: Passport, emit):
    """Enumerate rooted plane trees realizing the passport.

    The root is a black vertex of maximal (weight, label).  At every node
    the residual weight (vertex weight minus the parent edge) is split over
    an ordered child list; children are vertices drawn from the remaining
    multiset of the opposite color.

    Ordered child lists are built by a recursion memoized on
    (side, residual, remaining pool): the inventory of every forest a node
    with that residual can hang onto, together with the sub-multiset each
    forest consumes.  Identical subproblems occur under many ancestor
    arrangements, so the sharing is what keeps large repetitive passports
    (all black weights equal, all white weights equal) tractable.
    """
    b_entries = sorted(set(p.black), key=LabeledWeight.sort_key, reverse=True)
    w_entries = sorted(set(p.white), key=LabeledWeight.sort_key, reverse=True)
    entries = b_entries + w_entries
    nb = len(b_entries)
    weight = [e.weight for e in entries]
    counts = [0] * len(entries)
    for e in p.black:
        counts[b_entries.index(e)] += 1
    for e in p.white:
        counts[nb + w_entries.index(e)] += 1

    zero = (0,) * len(entries)
    black_range = range(nb)
    white_range = range(nb, len(entries))

    def pool_weight(pool, idx_range):
        return sum(pool[i] * weight[i] for i in idx_range)

    memo = {}

    def kid_lists(on_black: bool, residual: int, pool: tuple):
        """All (ordered children, used sub-multiset) pairs for one node."""
        key = (on_black, residual, pool)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if residual == 0:
            memo[key] = result = [((), zero)]
            return result
        child_range = white_range if on_black else black_range
        result = []
        if residual <= pool_weight(pool, child_range):
            for w in range(1, residual + 1):
                for ci in child_range:
                    if pool[ci] == 0 or weight[ci] < w:
                        continue
                    pool1 = list(pool)
                    pool1[ci] -= 1
                    pool1 = tuple(pool1)
                    for ckids, cused in kid_lists(not on_black,
                                                  weight[ci] - w, pool1):
                        pool2 = tuple(a - b for a, b in zip(pool1, cused))
                        for rest, rused in kid_lists(on_black,
                                                     residual - w, pool2):
                            used = list(cused)
                            used[ci] += 1
                            result.append((
                                ((w, ci, ckids),) + rest,
                                tuple(a + b for a, b in zip(used, rused)),
                            ))
        memo[key] = result
        return result

    root_idx = 0                      # maximal black entry
    pool = list(counts)
    pool[root_idx] -= 1
    pool = tuple(pool)
    for kids, used in kid_lists(True, weight[root_idx], pool):
        if used == pool:
            emit(entries[root_idx], kids, entries)


def _freeze(root_entry, root_kids, entries) -> WBPTree:
    """Turn the shared (weight, entry index, children) shape into a tree."""
    vertices, edges, rotation = [], [], []

    def add_vertex(color, entry):
        vertices.append(Vertex(color, entry.weight, entry.label))
        rotation.append([])
        return len(vertices) - 1

    def walk(vid, color, kids, parent_eid):
        if parent_eid is not None:
            rotation[vid].append(parent_eid)
        for w, ci, sub in kids:
            cid = add_vertex(_opposite(color), entries[ci])
            eid = len(edges)
            u, v = (vid, cid) if color == BLACK else (cid, vid)
            edges.append(Edge(u, v, w))
            rotation[vid].append(eid)
            walk(cid, _opposite(color), sub, eid)

    rid = add_vertex(BLACK, root_entry)
    walk(rid, BLACK, root_kids, None)
    return WBPTree(tuple(vertices), tuple(edges), tuple(map(tuple, rotation)))


def enumerate_trees(p: Passport, max_weight: int = 16) -> list:
    """One representative per equivalence class of trees with passport p.

    Accepts labeled passports (in particular the one-star divided
    passports); equivalence respects labels.  Output is sorted by canonical
    code, so the listing is deterministic.
    """
    if p.size() == 0:
        raise ValueError("empty passport")
    if not p.is_balanced():
        raise ValueError(f"unbalanced passport {p}")
    side_weight = p.black_weight()
    if side_weight > max_weight:
        raise ValueError(
            f"total side weight {side_weight} exceeds the bound {max_weight}")

    found = {}

    def emit(root, kids, entries):
        tree = _freeze(root, kids, entries)
        code = canonical_code(tree)
        found.setdefault(code.code, tree)

    _generate_rooted(p, emit)
    return [found[key] for key in sorted(found)]


def symmetry_census(p: Passport, max_weight: int = 16) -> dict:
    """Tree counts grouped by rotation order; only occurring orders appear."""
    census = {}
    for tree in enumerate_trees(p, max_weight):
        e = aut_order(tree)
        census[e] = census.get(e, 0) + 1
    return dict(sorted(census.items()))


# ---------------------------------------------------------------------------
# labeled counting


def _strip_labels(p: Passport) -> Passport:
    return Passport(black=[(e.weight, 0) for e in p.black],
                    white=[(e.weight, 0) for e in p.white])


def _labeling_orbits(tree: WBPTree, p: Passport) -> int:
    """Count label assignments of the simple passport p onto the tree,
    up to the tree's rotation group.

    A labeling is any bijection sending each vertex to an entry of the same
    color and weight; two labelings are the same labeled tree iff a
    rotation carries one to the other.  The group is small, so orbits are
    enumerated outright rather than counted by any quotient formula.
    """
    vertex_groups = {}
    for vid, v in enumerate(tree.vertices):
        vertex_groups.setdefault((v.color, v.weight), []).append(vid)
    entry_groups = {}
    for color, entries in ((BLACK, p.black), (WHITE, p.white)):
        for entry in entries:
            entry_groups.setdefault((color, entry.weight), []).append(entry)
    if {k: len(v) for k, v in vertex_groups.items()} != \
            {k: len(v) for k, v in entry_groups.items()}:
        raise ValueError(f"passport {p} does not match the tree's weights")

    perms = _aut_vertex_perms(tree)
    keys = sorted(vertex_groups)
    seen = set()
    orbits = 0
    for combo in product(*(permutations(entry_groups[k]) for k in keys)):
        labeling = [None] * len(tree.vertices)
        for key, assigned in zip(keys, combo):
            for vid, entry in zip(vertex_groups[key], assigned):
                labeling[vid] = entry
        labeling = tuple(labeling)
        if labeling in seen:
            continue
        orbits += 1
        for perm in perms:
            moved = [None] * len(labeling)
            for vid, entry in enumerate(labeling):
                moved[perm[vid]] = entry
            seen.add(tuple(moved))
    return orbits


def labeled_symmetry_census(p: Passport, max_weight: int = 16) -> dict:
    """Counts of labeled trees with simple passport p, grouped by the
    rotation order of the underlying unlabeled tree."""
    if not p.is_simple():
        raise ValueError("labeled counting requires a simple passport")
    census = {}
    for tree in enumerate_trees(_strip_labels(p), max_weight):
        e = aut_order(tree)
        census[e] = census.get(e, 0) + _labeling_orbits(tree, p)
    return dict(sorted(census.items()))


def count_labeled_direct(p: Passport, max_weight: int = 16) -> int:
    """Total number of labeled trees with simple passport p, by direct
    orbit enumeration (independent of the partition-sum formula)."""
    return sum(labeled_symmetry_census(p, max_weight).values())


# ---------------------------------------------------------------------------
# export


def _key_text(key) -> str:
    if key[0] == 0:
        return str(key[1])
    if key[0] == 1:
        return STAR
    return f"{_key_text(key[1])}.{key[2]}"


def code_text(code: CanonicalCode) -> str:
    parts = []
    for colorbit, weight, gap, label_key in code.code:
        label = _key_text(label_key)
        tag = "" if label == "0" else f"[{label}]"
        parts.append(f"{'B' if colorbit == 0 else 'W'}{weight}{tag}g{gap}")
    return "|".join(parts)


def tree_to_json_dict(t: WBPTree) -> dict:
    code = canonical_code(t)
    return {
        "vertices": [
            {"color": v.color, "weight": v.weight,
             "label": _key_text(_label_key(v.label))}
            for v in t.vertices
        ],
        "edges": [[e.u, e.v, e.weight] for e in t.edges],
        "rotation": [list(rot) for rot in t.rotation],
        "canonical_code": code_text(code),
        "aut_order": len(code.code) // code.period,
    }


def tree_to_dot(t: WBPTree, name: str = "wbptree") -> str:
    """Graphviz source: filled circles for black vertices, hollow for white,
    edge labels carrying the weights."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for vid, v in enumerate(t.vertices):
        label = str(v.weight)
        if v.label != 0:
            label += "_" + _key_text(_label_key(v.label))
        style = (", style=filled, fillcolor=black, fontcolor=white"
                 if v.color == BLACK else "")
        lines.append(f'  v{vid} [label="{label}"{style}];')
    for e in t.edges:
        lines.append(f'  v{e.u} -- v{e.v} [label="{e.weight}"];')
    lines.append("}")
    return "\n".join(lines)
