"""Instance I/O, shared fixtures, generators and hardness reductions.

File format (DIMACS-flavored, bit-exact when written by this module):

    c optional comments
    p im <n> <m> <ell>
    e <u> <v>

with 1-based vertex indices, LF line endings and single spaces.  The
target rides in the header so an instance is a single file.  Reading is
lenient about comments and blank lines; writing is canonical (sorted
edges, no comments), so write(read(text)) normalizes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    AcyclicError,
    DisconnectedError,
    InconsistentHeaderError,
    InvalidSpecError,
    NotACliqueError,
    ParseError,
)
from .graph import Graph, edge, label_key, sort_labels
from .kernel import Instance

# -- shared fixtures ----------------------------------------------------------


def naive_branch_trap() -> Graph:
    """9-vertex graph on which deleting the cut vertex ``s`` changes neither
    the maximum matching size nor the independence number (both stay 4),
    so naive branching on it makes no progress."""
    labels = ["s", "ru1", "ru2", "rb1", "rb2", "su", "lm", "lu", "lb"]
    edges = [
        ("ru1", "ru2"),
        ("ru1", "s"),
        ("ru2", "s"),
        ("ru1", "rb1"),
        ("rb1", "ru2"),
        ("ru1", "rb2"),
        ("rb2", "ru2"),
        ("s", "su"),
        ("su", "lm"),
        ("lm", "s"),
        ("lu", "lm"),
        ("lm", "lb"),
        ("lb", "lu"),
    ]
    return Graph.build(labels, edges)


def triangle_star_graph(triangles: int) -> Graph:
    """A triangle star with ``triangles`` triangles sharing the center ``s``."""
    if triangles < 1:
        raise ValueError("a triangle star has at least one triangle")
    labels = ["s"]
    edges = []
    for i in range(1, triangles + 1):
        u, w = f"u{i}", f"w{i}"
        labels += [u, w]
        edges += [("s", u), ("s", w), (u, w)]
    return Graph.build(labels, edges)


def paw_with_tail() -> Graph:
    """Triangle {a, b, c} plus the path a - x - y."""
    return Graph.build(
        ["a", "b", "c", "x", "y"],
        [("a", "b"), ("a", "c"), ("b", "c"), ("a", "x"), ("x", "y")],
    )


def anchored_triangle() -> Graph:
    """Triangle {a, b, c} with z adjacent to a and b, and a pendant y on z."""
    return Graph.build(
        ["a", "b", "c", "z", "y"],
        [("a", "b"), ("a", "c"), ("b", "c"), ("z", "a"), ("z", "b"), ("z", "y")],
    )


# -- file format --------------------------------------------------------------


def read_instance(text: str) -> Instance:
    """Parse an instance file; raises ParseError / InconsistentHeaderError."""
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(tokens) != 5 or tokens[1] != "im":
                raise ParseError("header must be 'p im <n> <m> <ell>'", lineno)
            try:
                n, m, ell = int(tokens[2]), int(tokens[3]), int(tokens[4])
            except ValueError:
                raise ParseError("header fields must be integers", lineno) from None
            if n < 0 or m < 0 or ell < 0:
                raise ParseError("header fields must be nonnegative", lineno)
            header = (n, m, ell)
        elif tokens[0] == "e":
            if header is None:
                raise ParseError("edge record before the header", lineno)
            if len(tokens) != 3:
                raise ParseError("edge record must be 'e <u> <v>'", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            n = header[0]
            if not (1 <= u <= n and 1 <= v <= n):
                raise InconsistentHeaderError(
                    f"endpoint outside 1..{n}", lineno
                )
            if u == v:
                raise ParseError("self-loop", lineno)
            e = edge(u, v)
            if e in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add(e)
            edges.append(e)
        else:
            raise ParseError(f"unknown record {tokens[0]!r}", lineno)
    if header is None:
        raise ParseError("missing 'p im' header")
    n, m, ell = header
    if len(edges) != m:
        raise InconsistentHeaderError(
            f"header declares {m} edges but the file has {len(edges)}"
        )
    return Instance(Graph.build(range(1, n + 1), edges), ell)


def write_instance(inst: Instance) -> str:
    """Canonical text for an instance.

    Vertices are renumbered 1..n by sorted label, so reading back a file
    written here reproduces it byte for byte.
    """
    g = inst.graph
    index = {v: i for i, v in enumerate(g.vertices, start=1)}
    lines = [f"p im {g.vertex_count} {g.edge_count} {inst.ell}"]
    pairs = sorted(
        (min(index[u], index[v]), max(index[u], index[v])) for u, v in g.edges()
    )
    lines.extend(f"e {a} {b}" for a, b in pairs)
    return "\n".join(lines) + "\n"


# -- generators ---------------------------------------------------------------


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Seed-deterministic G(n, p) on vertices 1..n."""
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    labels = range(1, n + 1)
    edges = [
        (i, j) for i in labels for j in range(i + 1, n + 1) if rng.random() < p
    ]
    return Graph.build(labels, edges)


@dataclass(frozen=True)
class CWSpec:
    """Recipe for a graph whose matching number equals its induced matching
    number, built from a connected bipartite core.

    ``pendant_counts`` gives, per vertex of ``u_side``, how many pendant
    vertices to attach (at least 1); ``triangle_counts`` gives, per vertex
    of ``w_side``, how many pendant triangles (at least 0).  Counts may be
    ``(lo, hi)`` ranges, sampled with the generator seed.  With ``tight``
    the pendant counts are forced to exactly 1 and every ``w_side`` vertex
    must get at least one triangle, which pins all three invariants
    (matching, independence, induced matching) to the same value.

    One side may be empty when the core is a single vertex (degenerate
    star or triangle-star recipes).
    """

    u_side: tuple = ()
    w_side: tuple = ()
    core_edges: tuple = ()
    pendant_counts: dict = field(default_factory=dict)
    triangle_counts: dict = field(default_factory=dict)
    tight: bool = False


def _resolve_count(value, rng):
    if isinstance(value, tuple):
        lo, hi = value
        if lo > hi:
            raise InvalidSpecError(f"empty count range {value}")
        return rng.randint(lo, hi)
    return int(value)


def gen_cameron_walker(spec: CWSpec, seed: int = 0) -> Graph:
    """Build a graph from a CWSpec; raises InvalidSpecError on a bad recipe."""
    rng = random.Random(seed)
    u_side = tuple(spec.u_side)
    w_side = tuple(spec.w_side)
    if set(u_side) & set(w_side):
        raise InvalidSpecError("core sides overlap")
    core_vertices = set(u_side) | set(w_side)
    if not core_vertices:
        raise InvalidSpecError("the core must have at least one vertex")
    for u, w in spec.core_edges:
        across = (u in u_side and w in w_side) or (u in w_side and w in u_side)
        if not across:
            raise InvalidSpecError(f"core edge {(u, w)!r} does not join the sides")
    core = Graph.build(core_vertices, spec.core_edges)
    if len(core.connected_components()) != 1:
        raise InvalidSpecError("the core must be connected")
    if not set(spec.pendant_counts) <= set(u_side):
        raise InvalidSpecError("pendant counts must target the pendant side")
    if not set(spec.triangle_counts) <= set(w_side):
        raise InvalidSpecError("triangle counts must target the triangle side")

    labels = list(core_vertices)
    taken = set(labels)

    def fresh(label):
        if label in taken:
            raise InvalidSpecError(
                f"generated label {label!r} collides with a core vertex"
            )
        taken.add(label)
        labels.append(label)
        return label

    edges = list(spec.core_edges)
    for u in sort_labels(u_side):
        count = _resolve_count(spec.pendant_counts.get(u, 1), rng)
        if count < 1:
            raise InvalidSpecError(f"{u!r} needs at least one pendant vertex")
        if spec.tight and count != 1:
            raise InvalidSpecError(
                f"tight recipes attach exactly one pendant vertex, got "
                f"{count} at {u!r}"
            )
        for i in range(1, count + 1):
            edges.append((u, fresh(f"{u}_p{i}")))
    for w in sort_labels(w_side):
        count = _resolve_count(spec.triangle_counts.get(w, 0), rng)
        if count < 0:
            raise InvalidSpecError(f"negative triangle count at {w!r}")
        if spec.tight and count < 1:
            raise InvalidSpecError(
                f"tight recipes attach at least one pendant triangle, got "
                f"{count} at {w!r}"
            )
        for i in range(1, count + 1):
            ta = fresh(f"{w}_t{i}a")
            tb = fresh(f"{w}_t{i}b")
            edges += [(w, ta), (w, tb), (ta, tb)]
    return Graph.build(labels, edges)


def parse_generator_spec(text: str):
    """Parse the declarative generator form used by the command line.

    Two kinds are understood::

        random:n=8,p=0.5
        cw:u=2,w=2,p=0.5,nu=1-2,nw=0-2[,tight]

    For ``cw`` the bipartite core is sampled: u/w give the side sizes, p
    the probability of each extra cross edge on top of a deterministic
    connecting backbone, and nu/nw the per-vertex pendant and triangle
    counts (single numbers or lo-hi ranges).
    """
    kind, _, body = text.partition(":")
    kind = kind.strip()
    options: dict = {}
    flags = set()
    if body:
        for item in body.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" in item:
                key, _, value = item.partition("=")
                options[key.strip()] = value.strip()
            else:
                flags.add(item)
    if kind == "random":
        try:
            n = int(options["n"])
            p = float(options.get("p", 0.5))
        except (KeyError, ValueError) as exc:
            raise InvalidSpecError(f"bad random spec {text!r}: {exc}") from None
        if n < 0:
            raise InvalidSpecError("n must be nonnegative")
        return ("random", {"n": n, "p": p})
    if kind == "cw":
        try:
            num_u = int(options.get("u", 1))
            num_w = int(options.get("w", 1))
            p = float(options.get("p", 0.3))
            nu = _parse_count_range(options.get("nu", "1"))
            nw = _parse_count_range(options.get("nw", "1"))
        except (ValueError, InvalidSpecError) as exc:
            raise InvalidSpecError(f"bad cw spec {text!r}: {exc}") from None
        return (
            "cw",
            {
                "u": num_u,
                "w": num_w,
                "p": p,
                "nu": nu,
                "nw": nw,
                "tight": "tight" in flags,
            },
        )
    raise InvalidSpecError(f"unknown generator kind {kind!r}")


def _parse_count_range(text: str):
    if "-" in text:
        lo, _, hi = text.partition("-")
        return (int(lo), int(hi))
    return int(text)


def generate(spec_text: str, seed: int = 0) -> Graph:
    """Generate a graph from a declarative spec string, deterministically."""
    kind, opts = parse_generator_spec(spec_text)
    if kind == "random":
        return gen_random(opts["n"], opts["p"], seed)
    rng = random.Random(seed)
    num_u, num_w = opts["u"], opts["w"]
    u_side = tuple(f"u{i}" for i in range(1, num_u + 1))
    w_side = tuple(f"w{i}" for i in range(1, num_w + 1))
    edges = set()
    k = min(num_u, num_w)
    # Deterministic backbone keeps the sampled core connected at any p.
    # With one empty side the core must be a single vertex; the recipe
    # validation below rejects anything larger.
    if k > 0:
        for i in range(k):
            edges.add((u_side[i], w_side[i]))
        for i in range(k - 1):
            edges.add((u_side[i + 1], w_side[i]))
        for j in range(k, num_u):
            edges.add((u_side[j], w_side[k - 1]))
        for j in range(k, num_w):
            edges.add((u_side[k - 1], w_side[j]))
    for u in u_side:
        for w in w_side:
            if rng.random() < opts["p"]:
                edges.add((u, w))
    spec = CWSpec(
        u_side=u_side,
        w_side=w_side,
        core_edges=tuple(sorted(edges)),
        pendant_counts={u: opts["nu"] for u in u_side},
        triangle_counts={w: opts["nw"] for w in w_side},
        tight=opts["tight"],
    )
    return gen_cameron_walker(spec, seed=rng.randrange(2**32))


# -- hardness reductions ------------------------------------------------------


def reduce_dominating_set(g: Graph, ell: int) -> Instance:
    """Subdivide every edge and flip the question.

    Maps "does ``g`` have a dominating set of size at most ``ell``" to
    "does the full subdivision have an induced matching of size
    ``n - ell``".  Requires a connected input with at least one cycle.
    The subdivision vertex of edge (u, v) is labeled "u_v" (endpoints in
    sorted order) so certificates decode back to edges of ``g``.
    """
    if len(g.connected_components()) != 1:
        raise DisconnectedError("the reduction requires a connected graph")
    n, m = g.vertex_count, g.edge_count
    if m < n:
        raise AcyclicError("the reduction requires at least one cycle")
    if not 0 <= ell <= n:
        raise ValueError(f"the target must lie in 0..{n}, got {ell}")
    labels = list(g.vertices)
    taken = set(labels)
    new_edges = []
    for u, v in g.edges():
        mid = f"{u}_{v}"
        if mid in taken:
            raise ValueError(
                f"label {mid!r} already exists; cannot name subdivision vertices"
            )
        taken.add(mid)
        labels.append(mid)
        new_edges.append((u, mid))
        new_edges.append((v, mid))
    return Instance(Graph.build(labels, new_edges), n - ell)


def reduce_multicolored_is(g: Graph, cliques) -> Instance:
    """Attach one apex per clique of a clique partition.

    The apex of the i-th clique is labeled ``v<i>`` and is adjacent to
    exactly that clique, which pins the independence number of the result
    to the number of cliques; the instance asks for an induced matching of
    that size.
    """
    parts = [frozenset(part) for part in cliques]
    seen: set = set()
    for part in parts:
        if not part:
            raise ValueError("empty part in the clique partition")
        if part & seen:
            raise ValueError("clique parts overlap")
        seen |= part
    if seen != frozenset(g.vertices):
        raise ValueError("clique parts must cover every vertex")
    for part in parts:
        for x, y in combinations(sort_labels(part), 2):
            if not g.has_edge(x, y):
                raise NotACliqueError(
                    f"part {sort_labels(part)} misses the edge {x!r}-{y!r}"
                )
    labels = list(g.vertices)
    edges = list(g.edges())
    for i, part in enumerate(parts, start=1):
        apex = f"v{i}"
        if g.has_vertex(apex):
            raise ValueError(f"label {apex!r} already exists; cannot add apexes")
        labels.append(apex)
        edges.extend((apex, x) for x in sort_labels(part))
    return Instance(Graph.build(labels, edges), len(parts))
