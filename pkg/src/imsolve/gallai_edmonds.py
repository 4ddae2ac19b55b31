"""Gallai-Edmonds decomposition and its structural audit.

``decompose`` partitions the vertices into

* ``d``: vertices missed by at least one maximum matching,
* ``a``: the neighborhood of ``d`` outside ``d``,
* ``c``: everything else,

together with the connected components of the subgraph induced by ``d``.
Membership in ``d`` is decided by the definitional test (does deleting the
vertex keep the matching number?), warm-started from one precomputed
maximum matching so that each vertex costs a single augmenting-path search.

``audit`` re-derives the classical structural guarantees of the
decomposition (factor-critical components, perfectly matched remainder,
strict surplus of the contracted bipartite graph, and the shape of a
maximum matching) and reports each check separately.  It is meant for
tests and diagnostics, never for the solve path: the surplus check
enumerates subsets of ``a`` and is guarded accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import AuditTooLargeError
from .graph import Graph, sort_labels
from .matching import (
    _View,
    _find_augmenting_path,
    _maximum_matching_indices,
    has_perfect_matching,
    is_factor_critical,
    maximum_matching,
)


@dataclass(frozen=True)
class GEDecomposition:
    """The partition (d, a, c) plus the components of the subgraph on d."""

    d: frozenset
    a: frozenset
    c: frozenset
    d_components: tuple

    def component_of(self, v) -> frozenset:
        for comp in self.d_components:
            if v in comp:
                return comp
        raise KeyError(v)


def decompose(g: Graph) -> GEDecomposition:
    """Compute the decomposition of ``g``.

    A vertex belongs to ``d`` iff deleting it leaves the maximum matching
    size unchanged.  With a maximum matching in hand, that holds for every
    unmatched vertex outright, and for a matched vertex exactly when its
    mate can be rematched by an augmenting path that avoids the vertex.
    """
    view = _View(g)
    n = len(view.labels)
    match = _maximum_matching_indices(view.adj)
    missed = set(i for i in range(n) if match[i] == -1)
    for i in range(n):
        if match[i] == -1:
            continue
        probe = match[:]
        mate = probe[i]
        probe[i] = -1
        probe[mate] = -1
        if _find_augmenting_path(view.adj, probe, mate, banned=i):
            missed.add(i)
    d = frozenset(view.labels[i] for i in missed)
    a = g.neighborhood_of_set(d)
    c = frozenset(g.vertices) - d - a
    comps = g.induced(d).connected_components()
    return GEDecomposition(d, a, c, comps)


@dataclass
class AuditReport:
    """Pass/fail per structural property, with human-readable failures."""

    checks: dict
    failures: list

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _check(report: AuditReport, name: str, passed: bool, detail: str):
    report.checks[name] = bool(passed)
    if not passed:
        report.failures.append(f"{name}: {detail}")


def audit(g: Graph, dec: GEDecomposition, *, max_subset_size: int = 20) -> AuditReport:
    """Verify the structural guarantees of a decomposition of ``g``.

    Raises AuditTooLargeError when ``len(dec.a)`` exceeds
    ``max_subset_size`` (the surplus check enumerates all subsets of
    ``a``).
    """
    if len(dec.a) > max_subset_size:
        raise AuditTooLargeError(
            f"|a| = {len(dec.a)} exceeds the subset-enumeration guard "
            f"({max_subset_size})"
        )
    report = AuditReport(checks={}, failures=[])
    vs = frozenset(g.vertices)

    parts_disjoint = (
        not (dec.d & dec.a) and not (dec.d & dec.c) and not (dec.a & dec.c)
    )
    covers = (dec.d | dec.a | dec.c) == vs
    comp_union = frozenset().union(*dec.d_components) if dec.d_components else frozenset()
    comps_match = tuple(g.induced(dec.d).connected_components()) == tuple(
        dec.d_components
    ) and comp_union == dec.d
    _check(
        report,
        "partition",
        parts_disjoint and covers and comps_match,
        "d, a, c must partition the vertices and d_components must be the "
        "components of the subgraph on d",
    )

    _check(
        report,
        "a-is-neighborhood-of-d",
        dec.a == g.neighborhood_of_set(dec.d),
        f"a = {sort_labels(dec.a)} differs from N(d) - d",
    )

    bad = [
        sort_labels(comp)
        for comp in dec.d_components
        if not is_factor_critical(g.induced(comp))
    ]
    _check(
        report,
        "d-components-factor-critical",
        not bad,
        f"components not factor-critical: {bad}",
    )

    _check(
        report,
        "c-has-perfect-matching",
        has_perfect_matching(g.induced(dec.c)),
        "subgraph on c has no perfect matching",
    )

    # Surplus of the contracted bipartite graph: contract every component
    # of the subgraph on d to a single node, drop edges inside a, and
    # require |N(A')| > |A'| for every nonempty A' of a.  (The empty subset
    # is excluded: the strict inequality is vacuous there.)
    comp_index = {}
    for idx, comp in enumerate(dec.d_components):
        for v in comp:
            comp_index[v] = idx
    reach = {
        x: frozenset(
            comp_index[y] for y in g.neighbors(x) if y in comp_index
        )
        for x in dec.a
    }
    surplus_ok = True
    surplus_detail = ""
    a_sorted = sort_labels(dec.a)
    for size in range(1, len(a_sorted) + 1):
        for subset in combinations(a_sorted, size):
            seen = frozenset().union(*(reach[x] for x in subset))
            if len(seen) <= size:
                surplus_ok = False
                surplus_detail = (
                    f"subset {list(subset)} reaches only "
                    f"{len(seen)} components"
                )
                break
        if not surplus_ok:
            break
    _check(report, "surplus", surplus_ok, surplus_detail)

    # Shape of one computed maximum matching: every a-vertex matched into
    # d, a near-perfect matching inside every d-component, and a perfect
    # matching inside c.
    mate = {}
    for u, v in maximum_matching(g):
        mate[u] = v
        mate[v] = u
    a_ok = all(x in mate and mate[x] in dec.d for x in dec.a)
    comp_ok = True
    for comp in dec.d_components:
        inside = sum(1 for v in comp if mate.get(v) in comp) // 2
        if inside != (len(comp) - 1) // 2:
            comp_ok = False
            break
    c_ok = all(v in mate and mate[v] in dec.c for v in dec.c)
    _check(
        report,
        "maximum-matching-structure",
        a_ok and comp_ok and c_ok,
        "computed maximum matching does not have the required shape "
        f"(a matched into d: {a_ok}, near-perfect on d-components: "
        f"{comp_ok}, perfect on c: {c_ok})",
    )
    return report
