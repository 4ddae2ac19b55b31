"""Branch-and-reduce engines for the induced matching decision problem.

Two engines share one depth-first search:

* ``solve_imba``: the main algorithm.  At every node the graph is reduced,
  the termination tests run, and a branching rule is picked from the
  Gallai-Edmonds decomposition by a fixed priority: a vertex of the
  perfectly-matched part; an edge inside the separator; a triangle
  component; a triangle-star component; a long factor-critical component
  (via a 4-vertex path); and finally the plain degree-2 branch, which at
  that point provably makes progress because the graph is bipartite and
  thin.  Every rule spawns 3 or 7 children, each obtained by vertex
  deletions, and each child provably lowers the potential
  (mm + is)/2 - ell by at least one half, which is what bounds the search
  depth by the branching budget.

* ``solve_imbtg``: the simple below-half-the-vertices algorithm, used for
  cross-validation.  Degree-based reductions only, one 3-way branching
  rule, and a depth bound computed directly from the input.

Answers are Yes (with a verified certificate), No, or Exhausted when the
budget truncated the search without finding a solution.  ``solve_auto``
removes the budget guesswork by iterative deepening: a run that never hit
the budget is exhaustive, so its No is definitive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .errors import NoRuleAppliesError, PreconditionViolatedError
from .gallai_edmonds import GEDecomposition, decompose
from .graph import Graph, label_key, sort_labels, verify_induced_matching
from .kernel import Instance, TerminalState, reduce_instance, terminal_state
from .oracle import is_triangle_star, triangle_star_parts


class Rule(str, Enum):
    """Branching rules, named by the structure they act on."""

    C_VERTEX = "c-vertex"
    A_EDGE = "a-edge"
    TRIANGLE = "triangle"
    TRIANGLE_STAR = "triangle-star"
    FOUR_PATH = "four-path"
    DEGREE_TWO = "degree-two"
    NAIVE = "naive"
    NAIVE_PAIR = "naive-pair"


@dataclass(frozen=True)
class BranchChoice:
    """A rule plus the concrete vertices it acts on.

    Actor keys by rule:
      c-vertex / degree-two / naive: v (the branch vertex), u, w (two of
        its neighbors);
      a-edge / naive-pair: u, v (adjacent);
      triangle: u, v, w (the triangle), ua, va (separator neighbors of u
        and v);
      triangle-star: u, v (outer vertices of two distinct pendant
        triangles), ua, va (their separator neighbors), uc, vc (their
        in-triangle partners);
      four-path: u, v, w, x (the path), vp/v1/v2 and wp/w1/w2 (a vertex of
        degree two after deleting v resp. w, with its two neighbors).
    """

    rule: Rule
    actors: dict


@dataclass
class SearchStats:
    nodes_visited: int = 0
    max_depth: int = 0
    branchings_by_rule: dict = field(default_factory=dict)
    reductions_by_rule: dict = field(default_factory=dict)

    def record_reductions(self, trace):
        for step in trace.steps:
            self.reductions_by_rule[step.rule] = (
                self.reductions_by_rule.get(step.rule, 0) + 1
            )

    def record_branching(self, rule: Rule):
        key = rule.value
        self.branchings_by_rule[key] = self.branchings_by_rule.get(key, 0) + 1


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    EXHAUSTED = "exhausted"


@dataclass
class SolveResult:
    answer: Answer
    certificate: frozenset | None
    stats: SearchStats


# -- structural helpers for the branching rules ------------------------------


def find_path4(g: Graph, component):
    """An ordered path on four distinct vertices inside ``component``.

    Exists whenever the component has at least four vertices and is not a
    star; returns None otherwise.  Constructive: pivot on a maximum-degree
    vertex v.  If v sees everything, any adjacent pair among its neighbors
    extends to a path; otherwise some neighbor of v has a neighbor outside
    v's closed neighborhood.  Ties break to the smallest label.
    """
    comp = frozenset(component)
    if len(comp) < 4:
        return None
    sub = g.induced(comp)
    order = sub.vertices
    v = min(order, key=lambda x: (-sub.degree(x), label_key(x)))
    nv = sub.neighbors(v)
    if sub.degree(v) == len(comp) - 1:
        for w in sort_labels(nv):
            for x in sort_labels(sub.neighbors(w) & nv):
                if x == w:
                    continue
                candidates = sort_labels(nv - {w, x})
                if candidates:
                    return (candidates[0], v, w, x)
        return None  # neighbors pairwise nonadjacent: a star
    if sub.degree(v) < 2:
        return None
    outside = frozenset(order) - nv - {v}
    for w in sort_labels(nv):
        hits = sort_labels(sub.neighbors(w) & outside)
        if hits:
            u = sort_labels(nv - {w})[0]
            return (u, v, w, hits[0])
    return None


def find_degree2_survivor(g: Graph, component, v):
    """A vertex of the component with two neighbors there after deleting v.

    Guaranteed to exist when the component induces a factor-critical graph
    that is not a triangle star; its absence indicates a decomposition bug,
    so it raises rather than returning a sentinel.  Returns
    ``(vertex, nbr1, nbr2)`` with smallest-label ties.
    """
    rest = frozenset(component) - {v}
    for cand in sort_labels(rest):
        nbrs = sort_labels(g.neighbors(cand) & rest)
        if len(nbrs) >= 2:
            return cand, nbrs[0], nbrs[1]
    raise PreconditionViolatedError(
        f"no vertex of degree 2 in the component after removing {v!r}; "
        "the component cannot be factor-critical and non-triangle-star"
    )


def _smallest_neighbor_in(g: Graph, v, pool):
    hits = [x for x in g.neighbors(v) if x in pool]
    if not hits:
        return None
    return min(hits, key=label_key)


def choose_rule(g: Graph, dec: GEDecomposition) -> BranchChoice:
    """Pick the highest-priority applicable branching rule.

    Requires a fully reduced graph with at least one vertex of degree 2
    (always the case for a nonempty reduced graph).
    """
    if dec.c:
        for v in sort_labels(dec.c):
            if g.degree(v) >= 2:
                u, w = sort_labels(g.neighbors(v))[:2]
                return BranchChoice(Rule.C_VERTEX, {"v": v, "u": u, "w": w})
        raise PreconditionViolatedError(
            "nonempty perfectly-matched part but no vertex of degree at "
            "least 2 in it; reductions were not exhaustive"
        )
    for u in sort_labels(dec.a):
        v = _smallest_neighbor_in(g, u, dec.a)
        if v is not None:
            return BranchChoice(Rule.A_EDGE, {"u": u, "v": v})
    for comp in dec.d_components:
        if len(comp) != 3:
            continue
        members = sort_labels(comp)
        if not all(g.has_edge(a, b) for a, b in ((members[0], members[1]), (members[0], members[2]), (members[1], members[2]))):
            continue
        with_sep = [
            x for x in members if _smallest_neighbor_in(g, x, dec.a) is not None
        ]
        if len(with_sep) < 2:
            raise PreconditionViolatedError(
                "triangle component without two separator neighbors; the "
                "pendant-triangle reduction was not exhaustive"
            )
        u, v = with_sep[0], with_sep[1]
        (w,) = [x for x in members if x not in (u, v)]
        return BranchChoice(
            Rule.TRIANGLE,
            {
                "u": u,
                "v": v,
                "w": w,
                "ua": _smallest_neighbor_in(g, u, dec.a),
                "va": _smallest_neighbor_in(g, v, dec.a),
            },
        )
    for comp in dec.d_components:
        if len(comp) >= 5 and is_triangle_star(g, comp):
            _, pairs = triangle_star_parts(g, comp)
            # Outer vertices of distinct pendant triangles are nonadjacent;
            # after exhausting the pendant-triangle reduction, each pair has
            # a member with a separator neighbor.
            anchored = []
            for pair_index, pair in enumerate(pairs):
                for x in pair:
                    if _smallest_neighbor_in(g, x, dec.a) is not None:
                        anchored.append((x, pair_index, pair))
            anchored.sort(key=lambda t: label_key(t[0]))
            if not anchored:
                raise PreconditionViolatedError(
                    "triangle-star component with no separator neighbors"
                )
            u, u_pair_index, u_pair = anchored[0]
            rest = [t for t in anchored if t[1] != u_pair_index]
            if not rest:
                raise PreconditionViolatedError(
                    "triangle-star component with separator contact in only "
                    "one pendant triangle"
                )
            v, _, v_pair = rest[0]
            uc = u_pair[0] if u_pair[1] == u else u_pair[1]
            vc = v_pair[0] if v_pair[1] == v else v_pair[1]
            return BranchChoice(
                Rule.TRIANGLE_STAR,
                {
                    "u": u,
                    "v": v,
                    "ua": _smallest_neighbor_in(g, u, dec.a),
                    "va": _smallest_neighbor_in(g, v, dec.a),
                    "uc": uc,
                    "vc": vc,
                },
            )
    for comp in dec.d_components:
        if len(comp) >= 5 and not is_triangle_star(g, comp):
            path = find_path4(g, comp)
            if path is None:
                raise PreconditionViolatedError(
                    "large factor-critical component without a 4-vertex path"
                )
            u, v, w, x = path
            vp, v1, v2 = find_degree2_survivor(g, comp, v)
            wp, w1, w2 = find_degree2_survivor(g, comp, w)
            return BranchChoice(
                Rule.FOUR_PATH,
                {
                    "u": u,
                    "v": v,
                    "w": w,
                    "x": x,
                    "vp": vp,
                    "v1": v1,
                    "v2": v2,
                    "wp": wp,
                    "w1": w1,
                    "w2": w2,
                },
            )
    for v in g.vertices:
        if g.degree(v) >= 2:
            u, w = sort_labels(g.neighbors(v))[:2]
            return BranchChoice(Rule.DEGREE_TWO, {"v": v, "u": u, "w": w})
    raise NoRuleAppliesError(
        "no branching rule applies; a reduced graph of maximum degree at "
        "most 1 should have been emptied by the reductions"
    )


def _choose_naive(g: Graph) -> BranchChoice:
    for v in g.vertices:
        if g.degree(v) >= 2:
            u, w = sort_labels(g.neighbors(v))[:2]
            return BranchChoice(Rule.NAIVE, {"v": v, "u": u, "w": w})
    raise NoRuleAppliesError(
        "no vertex of degree at least 2 in a reduced nonempty graph"
    )


def expand(inst: Instance, choice: BranchChoice) -> list:
    """Instantiate the children of a branching choice.

    Children keep the parent's target; each child graph arises from vertex
    deletions.  Child order follows the rule statements (first listed
    child explored first).
    """
    g = inst.graph
    ell = inst.ell
    a = choice.actors
    rule = choice.rule
    if rule in (Rule.C_VERTEX, Rule.DEGREE_TWO):
        deletions = [{a["v"]}, {a["u"]}, {a["w"]}]
    elif rule is Rule.NAIVE:
        deletions = [{a["u"]}, {a["v"]}, {a["w"]}]
    elif rule in (Rule.A_EDGE, Rule.NAIVE_PAIR):
        hood = g.neighborhood_of_set({a["u"], a["v"]})
        if not hood:
            raise PreconditionViolatedError(
                "branch on an adjacent pair with empty outside neighborhood"
            )
        deletions = [{a["u"]}, {a["v"]}, set(hood)]
    elif rule is Rule.TRIANGLE:
        u, v, w, ua, va = a["u"], a["v"], a["w"], a["ua"], a["va"]
        deletions = [
            {ua},
            {u, va},
            {u, v},
            {u, w},
            {v, ua},
            {v, u},
            {v, w},
        ]
    elif rule is Rule.TRIANGLE_STAR:
        u, v, ua, va, uc, vc = a["u"], a["v"], a["ua"], a["va"], a["uc"], a["vc"]
        deletions = [
            {ua},
            {u, v},
            {u, va},
            {u, vc},
            {uc, v},
            {uc, va},
            {uc, vc},
        ]
    elif rule is Rule.FOUR_PATH:
        v, w = a["v"], a["w"]
        hood = g.neighborhood_of_set({v, w})
        deletions = [
            {v, a["vp"]},
            {v, a["v1"]},
            {v, a["v2"]},
            {w, a["wp"]},
            {w, a["w1"]},
            {w, a["w2"]},
            set(hood),
        ]
    else:  # pragma: no cover - exhaustive over Rule
        raise NoRuleAppliesError(f"unknown rule {rule!r}")
    return [Instance(g.delete_vertices(dels), ell) for dels in deletions]


# -- the depth-first engine ---------------------------------------------------


class _SearchContext:
    __slots__ = ("budget", "choose", "reduce", "stats", "trace", "exhausted")

    def __init__(self, budget, choose, reduce, stats, trace):
        self.budget = budget
        self.choose = choose
        self.reduce = reduce
        self.stats = stats
        self.trace = trace
        self.exhausted = False

    def emit(self, depth, inst, state, choice):
        if self.trace is None:
            return
        record = {
            "depth": depth,
            "n": inst.graph.vertex_count,
            "ell": inst.ell,
            "state": state.value,
            "rule": choice.rule.value if choice else None,
            "actors": dict(choice.actors) if choice else None,
        }
        self.trace(json.dumps(record, sort_keys=True, default=str))


def _dfs(inst: Instance, depth: int, harvested: frozenset, ctx: _SearchContext):
    reduced, got, trace = ctx.reduce(inst)
    ctx.stats.nodes_visited += 1
    if depth > ctx.stats.max_depth:
        ctx.stats.max_depth = depth
    ctx.stats.record_reductions(trace)
    harvested = harvested | got
    state = terminal_state(reduced, depth, ctx.budget)
    if state is not TerminalState.CONTINUE:
        ctx.emit(depth, reduced, state, None)
        if state is TerminalState.YES:
            return harvested
        if state is TerminalState.EXHAUSTED:
            ctx.exhausted = True
        return None
    choice = ctx.choose(reduced.graph)
    ctx.stats.record_branching(choice.rule)
    ctx.emit(depth, reduced, state, choice)
    for child in expand(reduced, choice):
        found = _dfs(child, depth + 1, harvested, ctx)
        if found is not None:
            return found
    return None


def _finish(inst: Instance, certificate, ctx: _SearchContext) -> SolveResult:
    if certificate is not None:
        if len(certificate) != inst.ell or not verify_induced_matching(
            inst.graph, certificate
        ):
            raise AssertionError(
                "solver produced an invalid certificate; this is a bug"
            )
        return SolveResult(Answer.YES, certificate, ctx.stats)
    if ctx.exhausted:
        return SolveResult(Answer.EXHAUSTED, None, ctx.stats)
    return SolveResult(Answer.NO, None, ctx.stats)


def solve_imba(
    inst: Instance, budget: int, *, trace=None, stats: SearchStats | None = None
) -> SolveResult:
    """Run the decomposition-guided search with a fixed branching budget.

    ``budget`` is the maximum number of branchings on any root-to-leaf
    path (twice the averaged below-guarantee parameter, when that is
    known).  Yes answers carry a certificate verified against the original
    graph.  Exhausted means the budget truncated at least one branch and
    no solution was found; it collapses to a definitive No only when the
    budget is known to dominate the instance's true parameter.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    ctx = _SearchContext(
        budget=budget,
        choose=lambda g: choose_rule(g, decompose(g)),
        reduce=reduce_instance,
        stats=stats if stats is not None else SearchStats(),
        trace=trace,
    )
    certificate = _dfs(inst, 0, frozenset(), ctx)
    return _finish(inst, certificate, ctx)


def solve_auto(inst: Instance, *, trusted_budget=None, trace=None) -> SolveResult:
    """Definitive Yes/No via iterative deepening over the budget.

    A run that finishes without any budget truncation has explored the
    full reduced search space, so its No is exhaustive and final.  Each
    branching deletes at least one vertex, so the deepening always
    terminates by the time the budget reaches the vertex count.  When a
    trusted budget is supplied (for example twice the oracle-computed
    parameter), the search runs once and Exhausted is mapped to No.
    """
    stats = SearchStats()
    if trusted_budget is not None:
        result = solve_imba(inst, trusted_budget, trace=trace, stats=stats)
        if result.answer is Answer.EXHAUSTED:
            return SolveResult(Answer.NO, None, result.stats)
        return result
    budget = 0
    while True:
        result = solve_imba(inst, budget, trace=trace, stats=stats)
        if result.answer is not Answer.EXHAUSTED:
            return result
        budget += 1


def solve_imbtg(inst: Instance, *, trace=None) -> SolveResult:
    """The simple solver for the below-half-the-vertices parameterization.

    Degree-based reductions only, one naive 3-way branching rule, and a
    depth bound of ``n - 2*ell + 1`` taken from the input; within that
    bound every leaf provably closes as Yes or No, so the answer is always
    definitive.
    """
    budget = max(0, inst.graph.vertex_count - 2 * inst.ell + 1)
    ctx = _SearchContext(
        budget=budget,
        choose=_choose_naive,
        reduce=lambda i: reduce_instance(i, pendant_triangles=False),
        stats=SearchStats(),
        trace=trace,
    )
    certificate = _dfs(inst, 0, frozenset(), ctx)
    result = _finish(inst, certificate, ctx)
    if result.answer is Answer.EXHAUSTED:
        raise AssertionError(
            "the depth bound of the simple solver can never truncate; "
            "this is a bug"
        )
    return result
