"""Shifting PTAS: exact slab solver via the colored-feasible-set DAG, the
shifted-grid wrapper, and the weighted variant."""
from fractions import Fraction as F

import pytest

from geombs import (
    CapacityError,
    UNIT_DISKS,
    UNIT_SQUARES,
    DiskObj,
    GeometricInstance,
    Point,
    RectObj,
    ValidationError,
    build_intersection_graph,
    build_slab_dag,
    exact_mbs,
    generate_instance,
    generate_weights,
    is_bipartite,
    solve_ptas,
    solve_ptas_weighted,
    solve_slab,
)


def disks(centers, r=1):
    return GeometricInstance(
        UNIT_DISKS, tuple(DiskObj(Point(x, y)) for x, y in centers), F(r)
    )


def squares(corners):
    return GeometricInstance(
        UNIT_SQUARES, tuple(RectObj(x, x + 1, y, y + 1) for x, y in corners)
    )


class TestSlab:
    def test_one_box_triangle(self):
        inst = disks([(0, 1), (F(1, 2), 1), (1, 1)])
        sol = solve_slab(inst, 1, slab_bottom=0)
        assert sol.size == 2

    def test_two_boxes_one_disk_each(self):
        inst = disks([(0, 1), (10, 1)])
        assert solve_slab(inst, 1, slab_bottom=0).size == 2

    def test_crossing_disk_rejected(self):
        inst = disks([(0, 3)])
        with pytest.raises(ValidationError):
            solve_slab(inst, 1, slab_bottom=0)

    def test_box_capacity(self):
        inst = disks([(F(i, 10), 1) for i in range(5)])
        with pytest.raises(CapacityError):
            solve_slab(inst, 1, slab_bottom=0, box_cap=4)

    def test_dag_edges_respect_box_order(self):
        for seed in range(30):
            inst = generate_instance(
                UNIT_DISKS, 2 + seed % 9, seed, disk_mode="slab", slab_k=2
            )
            dag = build_slab_dag(inst, 2, slab_bottom=0)
            assert dag.check_acyclic()

    def test_matches_oracle_at_k2(self):
        for seed in range(150):
            inst = generate_instance(
                UNIT_DISKS, 1 + seed % 12, seed, disk_mode="slab", slab_k=2
            )
            sol = solve_slab(inst, 2, slab_bottom=0)
            g = build_intersection_graph(inst)
            assert sol.size == exact_mbs(g).size, seed
            assert is_bipartite(g, sol.selected) is not None

    def test_weighted_slab_beats_unweighted_choice(self):
        # triangle with one heavy vertex: the heavy disk must be kept
        inst = disks([(0, 1), (F(1, 2), 1), (1, 1)])
        sol = solve_slab(inst, 1, slab_bottom=0, weights=[1, 10, 1])
        assert 1 in sol.selected


class TestPtas:
    def test_pairwise_disjoint(self):
        inst = disks([(0, 0), (5, 0), (0, 5), (5, 5)])
        assert solve_ptas(inst, F(1, 2)).size == 4

    def test_square_triangle(self):
        inst = squares([(0, 0), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 8))])
        assert exact_mbs(build_intersection_graph(inst)).size == 2
        assert solve_ptas(inst, F(1, 2)).size == 2

    def test_epsilon_must_be_positive(self):
        with pytest.raises(ValidationError):
            solve_ptas(disks([(0, 0)]), 0)

    @pytest.mark.parametrize("kind", [UNIT_DISKS, UNIT_SQUARES])
    def test_half_ratio_at_k2(self, kind):
        for seed in range(100):
            inst = generate_instance(kind, 1 + seed % 12, seed)
            sol = solve_ptas(inst, F(1, 2))
            g = build_intersection_graph(inst)
            assert 2 * sol.size >= exact_mbs(g).size, (kind, seed)
            assert is_bipartite(g, sol.selected) is not None

    def test_finer_epsilon_ratio(self):
        for seed in range(40):
            inst = generate_instance(UNIT_DISKS, 1 + seed % 10, seed)
            sol = solve_ptas(inst, F(1, 3))  # k = 3
            opt = exact_mbs(build_intersection_graph(inst)).size
            assert 3 * sol.size >= 2 * opt, seed


class TestWeighted:
    def test_unit_weights_match_unweighted(self):
        for seed in range(60):
            inst = generate_instance(UNIT_DISKS, 1 + seed % 10, seed)
            a = solve_ptas(inst, F(1, 2))
            b = solve_ptas_weighted(inst, [F(1)] * inst.n, F(1, 2))
            assert a.size == b.size, seed

    def test_heavy_vertex_wins(self):
        inst = disks([(0, 1), (F(1, 2), 1), (1, 1)])
        sol = solve_ptas_weighted(inst, [1, 100, 1], F(1, 4))
        assert 1 in sol.selected

    def test_empty_instance(self):
        inst = GeometricInstance(UNIT_DISKS, (), F(1))
        sol = solve_ptas_weighted(inst, [], F(1, 2))
        assert sol.selected == () and sol.coloring == {}

    def test_negative_weight_rejected(self):
        inst = disks([(0, 0)])
        with pytest.raises(ValidationError):
            solve_ptas_weighted(inst, [-1], F(1, 2))

    def test_weight_guarantee(self):
        # k * achieved weight >= (k-1) * optimal weight, via weighted oracle
        from itertools import combinations

        for seed in range(40):
            inst = generate_instance(UNIT_DISKS, 1 + seed % 8, seed)
            wts = generate_weights(inst.n, seed)
            g = build_intersection_graph(inst)
            best = F(0)
            for size in range(inst.n, -1, -1):
                for sub in combinations(range(inst.n), size):
                    if is_bipartite(g, sub) is not None:
                        best = max(best, sum(wts[i] for i in sub))
            sol = solve_ptas_weighted(inst, wts, F(1, 2))
            achieved = sum(wts[i] for i in sol.selected)
            assert 2 * achieved >= best, seed
