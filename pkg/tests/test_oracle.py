import random

import pytest

from latticecount import oracle
from latticecount.polygons import Polygon, Triangle
from latticecount.triangles import Segment


def test_brute_halfplane_quadrant_examples():
    assert oracle.brute_halfplane_quadrant(3, 7, 46) == 63
    assert oracle.brute_halfplane_quadrant(2, 5, 17) == 22
    assert oracle.brute_halfplane_quadrant(5, 3, 0) == 1
    assert oracle.brute_halfplane_quadrant(3, 7, -2) == 0


def test_budget_refuses_large_regions():
    with pytest.raises(oracle.BudgetError):
        oracle.brute_halfplane_quadrant(1, 1, 10**6, budget=1000)
    with pytest.raises(oracle.BudgetError):
        oracle.brute_tetra(1, 1, 1, 10**4, budget=1000)
    # the budget is overridable
    assert oracle.brute_halfplane_quadrant(1, 1, 100, budget=None) == 5151


def test_brute_triangle_examples():
    assert oracle.brute_triangle(Triangle((0, 0), (1, 0), (1, 1))) == 3
    assert oracle.brute_triangle(Triangle((0, 0), (4, 1), (1, 3))) == 8
    assert oracle.brute_triangle(Triangle((0, 0), (2, 2), (1, 1))) == 3
    assert oracle.brute_triangle(Triangle((0, 0), (3, 0), (0, 3)), include_boundary=False) == 1


def test_brute_polygon_examples():
    square = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
    assert oracle.brute_polygon(square) == 4
    assert oracle.brute_polygon(square, include_boundary=False) == 0
    big = Polygon(((0, 0), (3, 0), (3, 3), (0, 3)))
    assert oracle.brute_polygon(big) == 16
    assert oracle.brute_polygon(big, include_boundary=False) == 4


def test_brute_segment_and_rect():
    assert oracle.brute_segment(Segment((0, 0), (6, 4))) == 3
    assert oracle.brute_rect((0, 0), (2, 3)) == 12


def test_brute_tetra_examples():
    assert oracle.brute_tetra(1, 2, 3, 3) == 7
    assert oracle.brute_tetra(6, 10, 15, 21) == 9
    assert oracle.brute_tetra(1, 1, 1, -2) == 0


def test_tetra_tables_match_pointwise_brute():
    rng = random.Random(8)
    for _ in range(10):
        a1, a2, a3 = (rng.randint(1, 9) for _ in range(3))
        bmax = rng.randint(0, 40)
        table = oracle.brute_tetra_table(a1, a2, a3, bmax)
        eq = oracle.brute_equation3_table(a1, a2, a3, bmax)
        assert len(table) == len(eq) == bmax + 1
        for b in range(0, bmax + 1, max(1, bmax // 7)):
            assert table[b] == oracle.brute_tetra(a1, a2, a3, b)
            assert eq[b] == oracle.brute_denumerant3(a1, a2, a3, b)


def test_denumerant2_table_matches_loop():
    for a, b in [(3, 7), (2, 5), (4, 9)]:
        table = oracle.brute_denumerant2_table(a, b, 5 * a * b)
        for c in range(5 * a * b + 1):
            assert table[c] == oracle.brute_denumerant2(a, b, c)


def test_brute_semigroup_helpers():
    assert oracle.brute_gaps(3, 7) == [1, 2, 4, 5, 8, 11]
    assert oracle.brute_gaps(2, 3) == [1]
    assert oracle.brute_apery(3, 7, 3) == [0, 7, 14]
    assert oracle.brute_contains(3, 7, 12)
    assert not oracle.brute_contains(3, 7, 11)
    assert oracle.brute_count_upto(3, 7, 11) == 6
