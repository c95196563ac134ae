"""General unit-disk scenes: stabbing-line 3-approximation and the
median-split log-factor algorithm."""
import math
from fractions import Fraction as F

import pytest

from geombs import (
    UNIT_DISKS,
    DiskObj,
    GeometricInstance,
    Point,
    assign_slabs,
    build_intersection_graph,
    exact_mbs,
    generate_instance,
    is_bipartite,
    solve_3approx,
    solve_logn,
    solve_one_sided,
)
from geombs.diskline import one_sided_mis


def disks(centers, r=1):
    return GeometricInstance(
        UNIT_DISKS, tuple(DiskObj(Point(x, y)) for x, y in centers), F(r)
    )


class TestSlabAssignment:
    def test_every_disk_assigned_to_one_stabbing_line(self):
        for seed in range(100):
            inst = generate_instance(UNIT_DISKS, 1 + seed % 12, seed)
            a = assign_slabs(inst)
            assert len(a.group) == inst.n
            r = inst.disk_radius
            for i, t in enumerate(a.group):
                c = inst.objects[i].center
                # stabbed, with the center on or above its line
                assert 0 <= c.y - a.lines[t] < r

    def test_no_edges_between_far_groups(self):
        for seed in range(100):
            inst = generate_instance(UNIT_DISKS, 2 + seed % 12, seed)
            a = assign_slabs(inst)
            g = build_intersection_graph(inst)
            for u, v in g.edges():
                assert abs(a.group[u] - a.group[v]) <= 2

    def test_group_sizes_sum_to_at_least_optimum(self):
        # per-group exact optima jointly dominate the global optimum
        for seed in range(60):
            inst = generate_instance(UNIT_DISKS, 2 + seed % 10, seed)
            a = assign_slabs(inst)
            total = 0
            for t, indices in a.groups().items():
                sub = GeometricInstance(
                    UNIT_DISKS,
                    tuple(inst.objects[i] for i in indices),
                    inst.disk_radius,
                )
                total += solve_one_sided(sub, line_y=a.lines[t]).size
            opt = exact_mbs(build_intersection_graph(inst)).size
            assert total >= opt, seed


class TestThreeApprox:
    def test_single_group_equals_one_sided(self):
        base = generate_instance(UNIT_DISKS, 9, 2, disk_mode="one_sided")
        # keep all center heights strictly below r so one line covers all
        inst = GeometricInstance(
            UNIT_DISKS,
            tuple(DiskObj(Point(d.center.x, d.center.y * F(3, 4)))
                  for d in base.objects),
            base.disk_radius,
        )
        assert len(assign_slabs(inst).groups()) == 1
        assert solve_3approx(inst).size == solve_one_sided(inst).size

    def test_two_far_triangles(self):
        tri = [(0, F(1, 10)), (1, F(1, 10)), (2, F(1, 10))]
        far = [(x + 50, y) for x, y in tri]
        sol = solve_3approx(disks(tri + far))
        assert sol.size == 4

    def test_pairwise_disjoint(self):
        inst = disks([(0, 0), (5, 0), (0, 5), (5, 5)])
        assert solve_3approx(inst).size == 4

    def test_ratio_and_feasibility(self):
        for seed in range(200):
            inst = generate_instance(UNIT_DISKS, 1 + seed % 12, seed)
            sol = solve_3approx(inst)
            g = build_intersection_graph(inst)
            assert 3 * sol.size >= exact_mbs(g).size, seed
            assert is_bipartite(g, sol.selected) is not None


class TestLogN:
    def test_single_disk(self):
        assert solve_logn(disks([(0, 0)])).selected == (0,)

    def test_pairwise_disjoint(self):
        inst = disks([(0, 0), (5, 0), (10, 0), (15, 0), (20, 0)])
        assert solve_logn(inst).size == 5

    def test_ratio_and_feasibility(self):
        for seed in range(200):
            n = 1 + seed % 12
            inst = generate_instance(UNIT_DISKS, n, seed)
            sol = solve_logn(inst)
            g = build_intersection_graph(inst)
            factor = max(1, 2 * math.log2(n)) if n > 1 else 1
            assert factor * sol.size >= exact_mbs(g).size, seed
            assert is_bipartite(g, sol.selected) is not None
