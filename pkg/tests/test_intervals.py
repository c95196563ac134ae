"""Exact interval sweep: golden cases, degeneracy policy, oracle equality."""
from fractions import Fraction as F

import pytest

from geombs import (
    INTERVALS,
    GeometricInstance,
    IntervalObj,
    ValidationError,
    build_intersection_graph,
    exact_mbs,
    generate_instance,
    is_bipartite,
    solve_intervals,
)


def intervals(*pairs):
    return GeometricInstance(
        INTERVALS, tuple(IntervalObj(a, b) for a, b in pairs)
    )


class TestGolden:
    def test_three_intervals_sharing_a_point(self):
        # all three overlap at 3/2 (a triangle); the sweep keeps the first two
        sol = solve_intervals(intervals((0, 2), (1, 3), (F(3, 2), 4)))
        assert sol.selected == (0, 1) and sol.size == 2

    def test_pairwise_disjoint(self):
        sol = solve_intervals(intervals((0, 1), (2, 3), (4, 5)))
        assert sol.selected == (0, 1, 2)

    def test_single_interval(self):
        sol = solve_intervals(intervals((0, 1)))
        assert sol.selected == (0,) and sol.coloring == {0: 0}

    def test_disjoint_branch_keeps_earlier_state(self):
        # the long interval is selected first; the state never blocks
        # the two short disjoint ones
        sol = solve_intervals(intervals((0, 10), (1, 2), (3, 4)))
        assert exact_mbs(build_intersection_graph(
            intervals((0, 10), (1, 2), (3, 4)))).size == sol.size == 3


class TestDegeneracy:
    def test_duplicate_endpoints_rejected(self):
        inst = intervals((0, 1), (1, 2))
        with pytest.raises(ValidationError):
            solve_intervals(inst)

    def test_perturbation_preserves_graph(self):
        inst = intervals((0, 1), (1, 2), (0, 2))
        sol = solve_intervals(inst, perturb=True)
        g = build_intersection_graph(inst)
        assert sol.size == exact_mbs(g).size
        assert is_bipartite(g, sol.selected) is not None

    def test_presorted_flag_rejects_unsorted(self):
        inst = intervals((2, 3), (0, 1))
        with pytest.raises(ValidationError):
            solve_intervals(inst, presorted=True)
        assert solve_intervals(inst).size == 2


class TestProperties:
    def test_oracle_equality(self):
        for seed in range(300):
            inst = generate_instance(INTERVALS, 1 + seed % 12, seed)
            sol = solve_intervals(inst, perturb=True)
            g = build_intersection_graph(inst)
            assert sol.size == exact_mbs(g).size, (seed, inst)
            assert is_bipartite(g, sol.selected) is not None

    def test_no_point_stabs_three_selected(self):
        for seed in range(100):
            inst = generate_instance(INTERVALS, 3 + seed % 10, seed)
            sol = solve_intervals(inst, perturb=True)
            objs = inst.objects
            for a in sol.selected:
                for b in sol.selected:
                    for c in sol.selected:
                        if not a < b < c:
                            continue
                        lo = max(objs[i].left for i in (a, b, c))
                        hi = min(objs[i].right for i in (a, b, c))
                        assert lo > hi, "three selected intervals share a point"
