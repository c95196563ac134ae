"""Exact greedy sweep for the maximum bipartite subset of intervals.

The sweep keeps two markers: ``x``, the rightmost point covered twice by the
current selection, and ``y``, the rightmost point covered once.  Scanning by
increasing right endpoint, an interval is taken when it starts beyond ``y``
(disjoint from the frontier) or strictly between ``x`` and ``y`` (it may
stack once, never twice).

Endpoints must be pairwise distinct.  With ``perturb=True`` duplicates are
broken by a symbolic enlargement (left endpoints nudged down, right
endpoints up, by index-ordered infinitesimals).  Enlargement can only add
overlap, and any two intervals sharing an endpoint value already intersect
under closed semantics, so the perturbation preserves the intersection
graph exactly and the optimality guarantee still refers to the input scene.
"""
from .errors import ValidationError
from .model import (
    INTERVALS,
    GeometricInstance,
    Solution,
    build_intersection_graph,
    is_bipartite,
    validate_instance,
)


def _endpoint_keys(instance, perturb):
    lefts, rights = [], []
    for i, obj in enumerate(instance.objects):
        if perturb:
            lefts.append((obj.left, -(i + 1)))
            rights.append((obj.right, i + 1))
        else:
            lefts.append((obj.left, 0))
            rights.append((obj.right, 0))
    if not perturb:
        values = [k[0] for k in lefts] + [k[0] for k in rights]
        if len(set(values)) != len(values):
            raise ValidationError(
                "duplicate interval endpoints; rerun with perturbation enabled"
            )
    return lefts, rights


def solve_intervals(
    instance: GeometricInstance,
    presorted: bool = False,
    perturb: bool = False,
) -> Solution:
    """Optimal maximum bipartite subset of an interval scene."""
    if instance.kind != INTERVALS:
        raise ValidationError(f"expected an intervals scene, got {instance.kind}")
    validate_instance(instance, require_nonempty=True)
    lefts, rights = _endpoint_keys(instance, perturb)

    order = list(range(instance.n))
    if presorted:
        for a, b in zip(order, order[1:]):
            if rights[a] > rights[b]:
                raise ValidationError("presorted flag set but intervals not "
                                      "sorted by right endpoint")
    else:
        order.sort(key=lambda i: rights[i])

    selected = []
    x = y = None
    for i in order:
        left = lefts[i]
        if y is None or left > y:
            selected.append(i)
            y = rights[i]
        elif (x is None or x < left) and left < y:
            selected.append(i)
            x = y
            y = rights[i]

    graph = build_intersection_graph(instance)
    coloring = is_bipartite(graph, selected)
    assert coloring is not None, "greedy selection must induce a forest"
    return Solution(tuple(selected), coloring)
