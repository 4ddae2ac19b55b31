"""Immutable simple graphs over opaque vertex labels.

The search explores thousands of vertex-deleted subproblems of a single
input graph.  Keeping ``Graph`` immutable makes subproblems cheap logical
snapshots that can be shared freely, and keeping labels stable across
deletions means a certificate found deep in the search still names vertices
of the original input.  Iteration is deterministic everywhere (sorted by
label), so branching decisions and traces are reproducible.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, NamedTuple

from .errors import (
    DuplicateEdgeError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownVertexError,
)

Label = Hashable
Edge = tuple


def label_key(label):
    """Sort key that stays total when a graph mixes label types."""
    return (type(label).__name__, label)


def sort_labels(labels) -> list:
    return sorted(labels, key=label_key)


def edge(u, v) -> Edge:
    """The normalized (unordered) pair for the edge between u and v."""
    if label_key(v) < label_key(u):
        return (v, u)
    return (u, v)


class LocalFeatures(NamedTuple):
    """Degree-local structure consumed by the reduction rules.

    ``pendant_triangles`` lists triples ``(u, v, w)`` where ``u`` and ``w``
    have degree exactly 2 in the whole graph; ``v`` is the vertex that
    survives when the triangle is reduced away.
    """

    isolated_vertices: tuple
    isolated_edges: tuple
    pendant_triangles: tuple


class Graph:
    """Undirected simple graph, immutable after construction.

    Construct via :meth:`build`, which validates the edge list.  All
    operations return new values; the receiver is never mutated.
    """

    __slots__ = ("_adj", "_sorted", "_m", "_hash")

    def __init__(self, adjacency):
        # Internal constructor: ``adjacency`` must already be a symmetric
        # label -> frozenset mapping.  Users go through Graph.build().
        self._adj = dict(adjacency)
        self._sorted = tuple(sort_labels(self._adj))
        self._m = sum(len(nbrs) for nbrs in self._adj.values()) // 2
        self._hash = None

    @classmethod
    def build(cls, labels: Iterable, edges: Iterable) -> "Graph":
        """Validate and construct a graph.

        Rejects self-loops, duplicate edges (after normalization to
        unordered pairs) and endpoints outside ``labels``.
        """
        vertex_set = set(labels)
        adj = {v: set() for v in vertex_set}
        seen = set()
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop at {u!r}")
            if u not in vertex_set:
                raise UnknownEndpointError(f"endpoint {u!r} not among the vertices")
            if v not in vertex_set:
                raise UnknownEndpointError(f"endpoint {v!r} not among the vertices")
            e = edge(u, v)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e!r}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        return cls({v: frozenset(ns) for v, ns in adj.items()})

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._sorted

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self):
        return iter(self._sorted)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def has_vertex(self, v) -> bool:
        return v in self._adj

    def has_edge(self, u, v) -> bool:
        nbrs = self._adj.get(u)
        return nbrs is not None and v in nbrs

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def edges(self) -> list:
        """All edges as normalized pairs, sorted."""
        out = []
        for v in self._sorted:
            kv = label_key(v)
            for u in self._adj[v]:
                if kv < label_key(u):
                    out.append((v, u))
        out.sort(key=lambda e: (label_key(e[0]), label_key(e[1])))
        return out

    def neighborhood_of_set(self, vertices) -> frozenset:
        """N(X): all neighbors of X that lie outside X."""
        vs = frozenset(vertices)
        out = set()
        for v in vs:
            out |= self.neighbors(v)
        return frozenset(out - vs)

    # -- derived graphs ---------------------------------------------------

    def delete_vertices(self, remove) -> "Graph":
        """The induced subgraph on ``vertices - remove``; self is unchanged."""
        rm = frozenset(remove)
        for v in rm:
            if v not in self._adj:
                raise UnknownVertexError(f"unknown vertex {v!r}")
        if not rm:
            return self
        return Graph(
            {v: nbrs - rm for v, nbrs in self._adj.items() if v not in rm}
        )

    def induced(self, keep) -> "Graph":
        """The induced subgraph on ``keep``."""
        ks = frozenset(keep)
        for v in ks:
            if v not in self._adj:
                raise UnknownVertexError(f"unknown vertex {v!r}")
        return Graph({v: self._adj[v] & ks for v in ks})

    # -- structure --------------------------------------------------------

    def connected_components(self) -> tuple:
        """Vertex sets of the connected components, ordered by smallest label."""
        seen = set()
        parts = []
        for start in self._sorted:
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                for u in self._adj[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.add(u)
                        queue.append(u)
            parts.append(frozenset(comp))
        return tuple(parts)

    def bipartition(self):
        """A 2-coloring ``(U, W)`` if one exists, else None.

        Deterministic: BFS from the smallest label of each component, which
        is placed on side ``U``.
        """
        color = {}
        for start in self._sorted:
            if start in color:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                cv = color[v]
                for u in sort_labels(self._adj[v]):
                    if u not in color:
                        color[u] = 1 - cv
                        queue.append(u)
                    elif color[u] == cv:
                        return None
        side_u = frozenset(v for v, c in color.items() if c == 0)
        side_w = frozenset(v for v, c in color.items() if c == 1)
        return side_u, side_w

    def local_features(self) -> LocalFeatures:
        """Isolated vertices, isolated edges and pendant triangles.

        Degrees are taken in the whole graph.  A triangle with all three
        degrees equal to 2 (an isolated triangle) is reported with its
        smallest vertex as the survivor.
        """
        adj = self._adj
        isolated = tuple(v for v in self._sorted if not adj[v])
        iso_edges = []
        for v in self._sorted:
            nbrs = adj[v]
            if len(nbrs) == 1:
                (u,) = nbrs
                if len(adj[u]) == 1 and label_key(v) < label_key(u):
                    iso_edges.append((v, u))
        pendants = []
        seen = set()
        for x in self._sorted:
            nbrs = adj[x]
            if len(nbrs) != 2:
                continue
            a, b = sort_labels(nbrs)
            if b not in adj[a]:
                continue
            tri = frozenset((x, a, b))
            if tri in seen:
                continue
            seen.add(tri)
            deg2 = [y for y in sort_labels(tri) if len(adj[y]) == 2]
            if len(deg2) < 2:
                continue
            if len(deg2) == 3:
                v, rest = deg2[0], deg2[1:]
            else:
                v = next(iter(tri - set(deg2)))
                rest = deg2
            pendants.append((rest[0], v, rest[1]))
        pendants.sort(key=lambda t: (label_key(t[1]), label_key(t[0])))
        return LocalFeatures(isolated, tuple(iso_edges), tuple(pendants))

    # -- value semantics ---------------------------------------------------

    def _signature(self):
        return (frozenset(self._adj), frozenset(self.edges()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._signature())
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def verify_induced_matching(g: Graph, matching) -> bool:
    """True iff ``matching`` is an induced matching in ``g``.

    That is: the pairs are edges of ``g``, no two share an endpoint, and no
    edge of ``g`` joins endpoints of two distinct pairs.  Raises
    UnknownEndpointError if an endpoint does not exist in ``g``.
    """
    edges = [edge(u, v) for (u, v) in matching]
    for u, v in edges:
        if not g.has_vertex(u):
            raise UnknownEndpointError(f"unknown endpoint {u!r}")
        if not g.has_vertex(v):
            raise UnknownEndpointError(f"unknown endpoint {v!r}")
    covered = set()
    for u, v in edges:
        if u == v or not g.has_edge(u, v):
            return False
        if u in covered or v in covered:
            return False
        covered.add(u)
        covered.add(v)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if (
                g.has_edge(a, c)
                or g.has_edge(a, d)
                or g.has_edge(b, c)
                or g.has_edge(b, d)
            ):
                return False
    return True
