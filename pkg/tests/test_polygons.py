import random
from fractions import Fraction

import pytest

from corpus import (
    CASE_GENERATORS,
    apply_symmetry,
    rand_tri_degenerate,
    rand_triangle_any,
    random_simple_polygon,
)
from latticecount.oracle import brute_polygon, brute_triangle
from latticecount.polygons import (
    CASE_DEGENERATE,
    CASE_ONE_CORNER,
    CASE_STABLE,
    CASE_TWO_ADJACENT,
    CASE_TWO_OPPOSITE,
    Polygon,
    Triangle,
    pick_audit,
    polygon_count,
    polygon_from_text,
    signed_area2,
    triangle_case,
    triangle_count,
    triangulate,
)

F = Fraction


# --- triangle classification and counting -------------------------------------


def test_case_examples():
    assert triangle_case(Triangle((0, 0), (4, 1), (1, 3))) == CASE_ONE_CORNER
    assert triangle_case(Triangle((0, 0), (F(7, 2), 0), (0, F(7, 2)))) == CASE_STABLE
    assert triangle_case(Triangle((0, 0), (4, 0), (1, 3))) == CASE_TWO_ADJACENT
    assert triangle_case(Triangle((0, 0), (4, 4), (1, 3))) == CASE_TWO_OPPOSITE
    assert triangle_case(Triangle((0, 0), (1, 1), (2, 2))) == CASE_DEGENERATE


def test_triangle_count_examples():
    assert triangle_count(Triangle((0, 0), (4, 1), (1, 3))) == 8
    assert triangle_count(Triangle((0, 0), (F(7, 2), 0), (0, F(7, 2)))) == 10
    assert triangle_count(Triangle((0, 0), (1, 1), (2, 2))) == 3


def test_triangle_count_degenerate_forms():
    assert triangle_count(Triangle((1, 1), (1, 1), (1, 1))) == 1
    assert triangle_count(Triangle((F(1, 2), 0), (F(1, 2), 0), (F(1, 2), 0))) == 0
    assert triangle_count(Triangle((0, 0), (0, 0), (3, 3))) == 4
    assert triangle_count(Triangle((0, 0), (2, 1), (4, 2))) == 3


def test_triangle_count_randomized_per_case():
    rng = random.Random(4242)
    for case, gen in CASE_GENERATORS.items():
        for _ in range(30):
            t = gen(rng)
            assert triangle_case(t) == case
            assert triangle_count(t) == brute_triangle(t), t
            s = apply_symmetry(rng, t)
            assert triangle_count(s) == brute_triangle(s), s


def test_triangle_count_randomized_any():
    rng = random.Random(31415)
    for _ in range(120):
        t = rand_triangle_any(rng)
        assert triangle_count(t) == brute_triangle(t), t
    for _ in range(40):
        t = rand_tri_degenerate(rng)
        assert triangle_case(t) == CASE_DEGENERATE
        assert triangle_count(t) == brute_triangle(t), t


def test_triangle_count_invariances():
    rng = random.Random(777)
    for _ in range(25):
        t = rand_triangle_any(rng)
        base = triangle_count(t)
        v1, v2, v3 = t.vertices
        # vertex permutation
        assert triangle_count(Triangle(v3, v1, v2)) == base
        assert triangle_count(Triangle(v2, v1, v3)) == base
        # integer translation
        shifted = Triangle(*[(x + 5, y - 7) for x, y in t.vertices])
        assert triangle_count(shifted) == base
        # the eight lattice symmetries
        for sx in (1, -1):
            for sy in (1, -1):
                for swap in (False, True):
                    pts = [(sx * x, sy * y) for x, y in t.vertices]
                    if swap:
                        pts = [(y, x) for x, y in pts]
                    assert triangle_count(Triangle(*pts)) == base


# --- polygons -------------------------------------------------------------------


def test_polygon_validation():
    Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))  # fine
    with pytest.raises(ValueError, match="at least 3"):
        Polygon(((0, 0), (1, 1)))
    with pytest.raises(ValueError, match="repeated"):
        Polygon(((0, 0), (1, 0), (1, 0), (0, 1)))
    with pytest.raises(ValueError, match="intersect"):
        Polygon(((0, 0), (2, 2), (2, 0), (0, 2)))  # bowtie
    with pytest.raises(ValueError, match="overlap"):
        Polygon(((0, 0), (4, 0), (2, 0)))  # backtracking edge
    with pytest.raises(ValueError, match="intersect"):
        # vertex of one edge lying on a non-incident edge
        Polygon(((0, 0), (4, 0), (4, 4), (2, 0)))


def test_polygon_orientation_normalized():
    cw = Polygon(((0, 0), (0, 1), (1, 1), (1, 0)))
    assert signed_area2(cw.vertices) > 0


def test_triangulate_counts_and_areas():
    square = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
    assert len(triangulate(square)) == 2
    pentagon = Polygon(((0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)))
    assert len(triangulate(pentagon)) == 3
    ell = Polygon(((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)))
    tris = triangulate(ell)
    assert len(tris) == 4
    assert sum(abs(signed_area2(t.vertices)) for t in tris) == 2 * 3  # area 3


def test_triangulate_with_straight_vertices():
    # a vertex in the middle of a straight edge must still be clipped
    poly = Polygon(((0, 0), (1, 0), (2, 0), (2, 2), (0, 2)))
    tris = triangulate(poly)
    assert len(tris) == 3
    assert all(signed_area2(t.vertices) != 0 for t in tris)
    assert sum(abs(signed_area2(t.vertices)) for t in tris) == 2 * 4


def test_polygon_count_examples():
    assert polygon_count(Polygon(((0, 0), (3, 0), (3, 3), (0, 3)))) == 16
    assert polygon_count(Polygon(((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)))) == 8
    assert polygon_count(Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))) == 4


def test_polygon_count_rational_vertices():
    poly = Polygon(((F(-1, 2), F(-1, 2)), (F(5, 2), F(-1, 2)), (F(5, 2), F(5, 2)),
                    (F(-1, 2), F(5, 2))))
    assert polygon_count(poly) == 9


def test_polygon_count_against_brute_force():
    rng = random.Random(987)
    for _ in range(40):
        n = rng.randint(3, 10)
        poly = random_simple_polygon(rng, n, integral=True)
        assert polygon_count(poly) == brute_polygon(poly), poly.vertices
    for _ in range(30):
        n = rng.randint(3, 8)
        poly = random_simple_polygon(rng, n, integral=False)
        assert polygon_count(poly) == brute_polygon(poly), poly.vertices


def test_triangulation_area_matches_polygon_area():
    rng = random.Random(13)
    for _ in range(30):
        poly = random_simple_polygon(rng, rng.randint(4, 10), integral=False)
        tris = triangulate(poly)
        assert len(tris) == len(poly.vertices) - 2
        total = sum(abs(signed_area2(t.vertices)) for t in tris)
        assert total == abs(signed_area2(poly.vertices))


# --- Pick audit -------------------------------------------------------------------


def test_pick_audit_examples():
    audit = pick_audit(Polygon(((0, 0), (4, 1), (1, 3))))
    assert audit == (F(11, 2), 5, 3, True)
    audit = pick_audit(Polygon(((0, 0), (3, 0), (3, 3), (0, 3))))
    assert audit == (F(9), 4, 12, True)
    audit = pick_audit(Polygon(((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2))))
    assert audit == (F(3), 0, 8, True)


def test_pick_audit_rejects_rational_vertices():
    with pytest.raises(ValueError, match="integral"):
        pick_audit(Polygon(((0, 0), (F(7, 2), 0), (0, F(7, 2)))))


def test_pick_audit_randomized():
    rng = random.Random(321)
    for _ in range(40):
        poly = random_simple_polygon(rng, rng.randint(3, 10), integral=True)
        assert pick_audit(poly).holds


# --- polygon file format ------------------------------------------------------------


def test_polygon_from_text():
    text = """# an L-shaped hexagon
    0 0
    2 0

    2 1
    1 1
    1 2
    0 2
    """
    poly = polygon_from_text(text)
    assert polygon_count(poly) == 8


def test_polygon_from_text_rationals():
    poly = polygon_from_text("0 0\n7/2 0\n7/2 3.5\n0 3.5\n")
    assert polygon_count(poly) == 16


def test_polygon_from_text_errors():
    with pytest.raises(ValueError, match="line 2"):
        polygon_from_text("0 0\n1 2 3\n4 5\n")
    with pytest.raises(ValueError, match="malformed rational"):
        polygon_from_text("0 0\n1 x\n2 2\n")
    with pytest.raises(ValueError, match="intersect"):
        polygon_from_text("0 0\n2 2\n2 0\n0 2\n")
