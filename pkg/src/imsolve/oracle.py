"""Brute-force ground truth and structural recognizers.

Everything here is exact.  The ``brute_*`` functions enumerate at desk
scale and refuse inputs above a configurable cap; they are the independent
oracles that the solver, the decomposition and the recognizers are tested
against, so none of them may share code with the routines they check.

The recognizers classify connected graphs by the structure that forces
equality between the matching-type invariants: ``recognize_cameron_walker``
detects graphs whose maximum matching and maximum induced matching sizes
coincide, ``classify_tight`` the (rarer) graphs where the induced matching
number reaches the average of matching number and independence number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import DisconnectedError, TooLargeError
from .graph import Graph, label_key, sort_labels
from .matching import maximum_matching

DEFAULT_CAP = 16

NOT_CAMERON_WALKER = "not-cameron-walker"
STAR = "star"
TRIANGLE_STAR = "triangle-star"
PENDANT_BIPARTITE = "pendant-bipartite"
ISOLATED_EDGE = "isolated-edge"
TIGHT_PENDANT_BIPARTITE = "tight-pendant-bipartite"
NOT_TIGHT = "not-tight"


def _require_cap(g: Graph, cap: int):
    if g.vertex_count > cap:
        raise TooLargeError(
            f"{g.vertex_count} vertices exceeds the brute-force cap ({cap})"
        )


def _require_connected(g: Graph):
    if len(g.connected_components()) != 1:
        raise DisconnectedError("classification requires a connected graph")


# -- exact optima -----------------------------------------------------------


def brute_im(g: Graph, cap: int = DEFAULT_CAP):
    """Exact maximum induced matching, with a witness.

    Depth-first enumeration over edges in sorted order; a chosen edge
    blocks its endpoints and all their neighbors, so compatibility is a
    two-membership test.  Pruned by the pairs still packable among
    unblocked vertices.  The witness is the first maximum found, which
    makes it deterministic.
    """
    _require_cap(g, cap)
    edges = g.edges()
    m = len(edges)
    n = g.vertex_count
    closed = [
        frozenset((u, v)) | g.neighbors(u) | g.neighbors(v) for (u, v) in edges
    ]
    best = 0
    best_set: tuple = ()

    def grow(start, blocked, chosen):
        nonlocal best, best_set
        if len(chosen) > best:
            best = len(chosen)
            best_set = tuple(chosen)
        if len(chosen) + (n - len(blocked)) // 2 <= best:
            return
        for j in range(start, m):
            u, v = edges[j]
            if u in blocked or v in blocked:
                continue
            chosen.append(edges[j])
            grow(j + 1, blocked | closed[j], chosen)
            chosen.pop()

    grow(0, frozenset(), [])
    return best, frozenset(best_set)


def brute_mm(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact maximum matching size by edge enumeration (oracle for blossom)."""
    _require_cap(g, cap)
    edges = g.edges()
    m = len(edges)
    n = g.vertex_count
    best = 0

    def grow(start, covered, size):
        nonlocal best
        if size > best:
            best = size
        if size + (n - len(covered)) // 2 <= best:
            return
        for j in range(start, m):
            u, v = edges[j]
            if u in covered or v in covered:
                continue
            grow(j + 1, covered | {u, v}, size + 1)

    grow(0, frozenset(), 0)
    return best


def brute_is(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact maximum independent set size (branch on a max-degree vertex)."""
    _require_cap(g, cap)

    def go(adj):
        if not adj:
            return 0
        v = min(adj, key=lambda x: (-len(adj[x]), label_key(x)))
        if not adj[v]:
            return len(adj)
        # exclude v
        without = {x: ns - {v} for x, ns in adj.items() if x != v}
        best = go(without)
        # include v: drop its closed neighborhood
        drop = adj[v] | {v}
        kept = {x: ns - drop for x, ns in adj.items() if x not in drop}
        best = max(best, 1 + go(kept))
        return best

    return go({v: set(g.neighbors(v)) for v in g.vertices})


def brute_vc(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact minimum vertex cover size (branch on an endpoint of an edge)."""
    _require_cap(g, cap)

    def go(adj):
        u = None
        for x in sort_labels(adj):
            if adj[x]:
                u = x
                break
        if u is None:
            return 0
        v = min(adj[u], key=label_key)
        without_u = {x: ns - {u} for x, ns in adj.items() if x != u}
        without_v = {x: ns - {v} for x, ns in adj.items() if x != v}
        return 1 + min(go(without_u), go(without_v))

    return go({v: set(g.neighbors(v)) for v in g.vertices})


def brute_ds(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact minimum dominating set size by subset enumeration."""
    _require_cap(g, cap)
    verts = g.vertices
    n = len(verts)
    if n == 0:
        return 0
    closed = {v: g.neighbors(v) | {v} for v in verts}
    full = frozenset(verts)
    for k in range(n + 1):
        for subset in combinations(verts, k):
            seen = set()
            for v in subset:
                seen |= closed[v]
            if seen == full:
                return k
    raise AssertionError("unreachable: the full vertex set dominates")


@dataclass(frozen=True)
class ParameterReport:
    """All exact quantities of an instance, plus the derived parameters.

    ``k_trivial``, ``k_avg`` may be half-integral and are stored as floats
    (halves are exact in binary); ``budget`` is twice the averaged
    parameter as an exact integer, the branching allowance the main solver
    is entitled to on a yes-instance.
    """

    n: int
    ell: int
    mm: int
    is_: int
    im: int
    vc: int
    k_trivial: float
    k_mm: int
    k_is: int
    k_avg: float

    @property
    def budget(self) -> int:
        return self.mm + self.is_ - 2 * self.ell


def parameters(g: Graph, ell: int, cap: int = DEFAULT_CAP) -> ParameterReport:
    """Exact parameter report for the instance ``(g, ell)``."""
    _require_cap(g, cap)
    mm = brute_mm(g, cap)
    is_ = brute_is(g, cap)
    im, _ = brute_im(g, cap)
    vc = brute_vc(g, cap)
    n = g.vertex_count
    return ParameterReport(
        n=n,
        ell=ell,
        mm=mm,
        is_=is_,
        im=im,
        vc=vc,
        k_trivial=n / 2 - ell,
        k_mm=mm - ell,
        k_is=is_ - ell,
        k_avg=(mm + is_) / 2 - ell,
    )


def measure(g: Graph, ell: int, cap: int = DEFAULT_CAP) -> float:
    """The potential (mm + is)/2 - ell, from the brute-force oracles."""
    _require_cap(g, cap)
    return (brute_mm(g, cap) + brute_is(g, cap)) / 2 - ell


# -- structural recognizers -------------------------------------------------


@dataclass(frozen=True)
class StructureClass:
    """Outcome of a structural classification.

    ``u_side``/``w_side`` are the core bipartition for the pendant-
    bipartite shapes; ``pendant_vertices`` maps a core vertex to its
    attached pendant vertices, ``pendant_triangles`` to its attached
    triangle pairs.
    """

    kind: str
    u_side: frozenset | None = None
    w_side: frozenset | None = None
    pendant_vertices: dict = field(default_factory=dict)
    pendant_triangles: dict = field(default_factory=dict)


def is_star(g: Graph) -> bool:
    """One center adjacent to all others, no other edges (K1 and K2 count)."""
    n = g.vertex_count
    if n == 0:
        return False
    if n == 1:
        return True
    degs = sorted(g.degree(v) for v in g.vertices)
    return degs[-1] == n - 1 and all(d == 1 for d in degs[:-1])


def is_triangle_star(g: Graph, vertices=None) -> bool:
    """Whether ``g`` (or the subgraph induced by ``vertices``) is a triangle
    star: a triangle with any number of further pendant triangles attached
    to one shared center.

    Detection: it is a plain triangle, or it has a unique vertex of degree
    at least 3 whose removal leaves a disjoint union of edges, all of whose
    endpoints are adjacent to that vertex.
    """
    sub = g if vertices is None else g.induced(vertices)
    n = sub.vertex_count
    if n < 3 or n % 2 == 0:
        return False
    if n == 3:
        vs = sub.vertices
        return sub.degree(vs[0]) == 2 and sub.degree(vs[1]) == 2 and sub.degree(vs[2]) == 2
    centers = [v for v in sub.vertices if sub.degree(v) >= 3]
    if len(centers) != 1:
        return False
    center = centers[0]
    paired = set()
    for x in sub.vertices:
        if x == center or x in paired:
            continue
        nbrs = sub.neighbors(x)
        if len(nbrs) != 2 or center not in nbrs:
            return False
        (partner,) = nbrs - {center}
        if partner == center or partner in paired:
            return False
        pn = sub.neighbors(partner)
        if len(pn) != 2 or center not in pn or x not in pn:
            return False
        paired.add(x)
        paired.add(partner)
    return True


def triangle_star_parts(g: Graph, vertices=None):
    """Center and pendant pairs of a triangle star, deterministically ordered.

    For a bare triangle the smallest vertex is taken as the center.
    """
    sub = g if vertices is None else g.induced(vertices)
    if not is_triangle_star(sub):
        raise ValueError("not a triangle star")
    if sub.vertex_count == 3:
        center = sub.vertices[0]
        rest = [v for v in sub.vertices if v != center]
        return center, ((rest[0], rest[1]),)
    center = next(v for v in sub.vertices if sub.degree(v) >= 3)
    pairs = []
    done = set()
    for x in sub.vertices:
        if x == center or x in done:
            continue
        (partner,) = sub.neighbors(x) - {center}
        pairs.append((x, partner) if label_key(x) < label_key(partner) else (partner, x))
        done.add(x)
        done.add(partner)
    pairs.sort(key=lambda p: label_key(p[0]))
    return center, tuple(pairs)


def _peel(g: Graph):
    """Strip pendant vertices and pendant triangles off the core.

    Returns ``(core, pendant_map, triangle_map)`` or None when the
    attachments do not decompose cleanly (some attachment target is not a
    core vertex).
    """
    feats = g.local_features()
    tri_members = set()
    triangle_map: dict = {}
    for u, v, w in feats.pendant_triangles:
        if u in tri_members or w in tri_members:
            return None
        tri_members.add(u)
        tri_members.add(w)
        triangle_map.setdefault(v, []).append((u, w))
    pendant_map: dict = {}
    pendant_vs = set()
    for x in g.vertices:
        if g.degree(x) == 1:
            pendant_vs.add(x)
            (target,) = g.neighbors(x)
            pendant_map.setdefault(target, []).append(x)
    core = frozenset(g.vertices) - pendant_vs - tri_members
    for target in pendant_map:
        if target not in core:
            return None
    for target in triangle_map:
        if target not in core:
            return None
    pendant_map = {k: tuple(v) for k, v in pendant_map.items()}
    triangle_map = {k: tuple(v) for k, v in triangle_map.items()}
    return core, pendant_map, triangle_map


def _core_sides_ok(g: Graph, core, u_side, w_side) -> bool:
    """Each core edge must join u_side to w_side, and the core must be
    connected."""
    for x in core:
        for y in g.neighbors(x):
            if y not in core:
                continue
            if (x in u_side) == (y in u_side):
                return False
    return len(g.induced(core).connected_components()) == 1


def recognize_cameron_walker(g: Graph) -> StructureClass:
    """Classify a connected graph by whether its maximum matching size can
    be achieved by an induced matching.

    The positive shapes are: a star; a triangle star; a connected bipartite
    core with at least one pendant vertex on every vertex of one side and
    any number of pendant triangles on each vertex of the other.
    """
    _require_connected(g)
    if is_star(g):
        return StructureClass(STAR)
    if is_triangle_star(g):
        return StructureClass(TRIANGLE_STAR)
    peeled = _peel(g)
    if peeled is None:
        return StructureClass(NOT_CAMERON_WALKER)
    core, pendant_map, triangle_map = peeled
    if not core:
        return StructureClass(NOT_CAMERON_WALKER)
    u_side = frozenset(x for x in core if pendant_map.get(x))
    if any(x in triangle_map for x in u_side):
        return StructureClass(NOT_CAMERON_WALKER)
    w_side = core - u_side
    if not _core_sides_ok(g, core, u_side, w_side):
        return StructureClass(NOT_CAMERON_WALKER)
    return StructureClass(
        PENDANT_BIPARTITE, u_side, w_side, dict(pendant_map), dict(triangle_map)
    )


def classify_tight(g: Graph) -> StructureClass:
    """Classify a connected graph by whether its induced matching number
    reaches the average of matching number and independence number.

    The positive shapes are: a single edge; a triangle star; a connected
    bipartite core with exactly one pendant vertex on every vertex of one
    side and at least one pendant triangle on every vertex of the other.
    For the last shape the matching-size identity
    ``mm = (n - |w_side|) / 2`` is re-derived from the blossom matching as
    a runtime self-check.
    """
    _require_connected(g)
    if g.vertex_count == 2 and g.edge_count == 1:
        return StructureClass(ISOLATED_EDGE)
    if is_triangle_star(g):
        return StructureClass(TRIANGLE_STAR)
    peeled = _peel(g)
    if peeled is None:
        return StructureClass(NOT_TIGHT)
    core, pendant_map, triangle_map = peeled
    if not core:
        return StructureClass(NOT_TIGHT)
    if any(len(ps) > 1 for ps in pendant_map.values()):
        return StructureClass(NOT_TIGHT)
    u_side = frozenset(x for x in core if pendant_map.get(x))
    if any(x in triangle_map for x in u_side):
        return StructureClass(NOT_TIGHT)
    w_side = core - u_side
    if any(not triangle_map.get(w) for w in w_side):
        return StructureClass(NOT_TIGHT)
    if not _core_sides_ok(g, core, u_side, w_side):
        return StructureClass(NOT_TIGHT)
    mm = len(maximum_matching(g))
    if 2 * mm != g.vertex_count - len(w_side):
        raise AssertionError(
            "tight classification contradicts the matching size; "
            "this is a bug in the structural test"
        )
    return StructureClass(
        TIGHT_PENDANT_BIPARTITE, u_side, w_side, dict(pendant_map), dict(triangle_map)
    )
