import pytest

from rankproduct.errors import DegenerateSiteError, RankRangeError
from rankproduct.oracle import maximal_sites, strict_hull_vertices
from rankproduct.rigid_engine.lifting import (
    bisector,
    eval_product,
    filter_maximal,
    hull_filter_min,
    lift,
    linear_part,
)


def pts(*pairs):
    return [lift(x, y, i + 1) for i, (x, y) in enumerate(pairs)]


def test_lift_attaches_product():
    p = lift(5, 7, 3)
    assert (p.x, p.y, p.z, p.ident) == (5, 7, 35, 3)


def test_lift_rejects_nonpositive_rank():
    with pytest.raises(RankRangeError):
        lift(0, 4, 1)
    with pytest.raises(RankRangeError):
        lift(4, -1, 1)


def test_eval_product_small_case():
    p = lift(5, 7, 1)
    # (5 - 4) * (7 - 5) via 20 - 28 - 25 + 35
    assert eval_product(p, 4, 5) == 2
    assert eval_product(p, 4, 5) == (5 - 4) * (7 - 5)


def test_eval_product_zero_offset_is_z():
    p = lift(9, 11, 1)
    assert eval_product(p, 0, 0) == p.z == 99


def test_eval_product_negative_offsets():
    p = lift(2, 3, 1)
    assert eval_product(p, -5, -7) == (2 + 5) * (3 + 7)


def test_eval_product_offset_out_of_range():
    p = lift(2, 3, 1)
    with pytest.raises(RankRangeError):
        eval_product(p, 1 << 31, 0)


def test_linear_part_matches_identity():
    p = lift(12, 30, 1)
    a, b = -3, 17
    assert a * b + linear_part(p, a, b) == (12 - a) * (30 - b)


def test_bisector_through_box_corners():
    p = lift(2, 5, 1)
    q = lift(6, 1, 2)
    bis = bisector(p, q)
    # the tie line passes through both corners of the sites' bounding box
    for (a, b) in (bis.corner1, bis.corner2):
        assert bis.a_coef * a + bis.b_coef * b == bis.rhs
    assert {bis.corner1, bis.corner2} == {(2, 1), (6, 5)}
    # both sites really do tie there, at products -2 and -30
    assert eval_product(p, 2, 1) == eval_product(q, 2, 1) == 0 * 4
    assert eval_product(p, 6, 5) == eval_product(q, 6, 5) == -4 * 0 + 0
    assert eval_product(p, 2, 1) == 0
    assert eval_product(q, 6, 5) == 0


def test_bisector_corner_products_both_sides():
    p = lift(2, 5, 1)
    q = lift(6, 1, 2)
    for (a, b) in ((2, 1), (6, 5)):
        assert eval_product(p, a, b) == eval_product(q, a, b)


def test_bisector_accepts_any_distinct_coordinates():
    # sites outside the positive quadrant still define the line
    from rankproduct.rigid_engine.lifting import LiftedPoint

    p = LiftedPoint(0, 0, 0, 1)
    q = LiftedPoint(1, 1, 1, 2)
    bis = bisector(p, q)
    assert {bis.corner1, bis.corner2} == {(0, 1), (1, 0)}
    assert bis.a_coef * 0 + bis.b_coef * 1 == bis.rhs
    assert bis.a_coef * 1 + bis.b_coef * 0 == bis.rhs


def test_bisector_rejects_shared_coordinate():
    p = lift(1, 2, 1)
    q = lift(3, 2, 2)
    with pytest.raises(DegenerateSiteError):
        bisector(p, q)
    with pytest.raises(DegenerateSiteError):
        bisector(lift(4, 1, 1), lift(4, 9, 2))


def test_hull_filter_quadrilateral_cycle():
    points = pts((1, 4), (2, 2), (3, 3), (4, 1))
    cycle = hull_filter_min(points)
    assert [(p.x, p.y) for p in cycle] == [(1, 4), (2, 2), (4, 1), (3, 3)]


def test_hull_filter_collinear_keeps_endpoints():
    points = pts((1, 1), (2, 2), (3, 3))
    kept = hull_filter_min(points)
    assert [(p.x, p.y) for p in kept] == [(1, 1), (3, 3)]


def test_hull_filter_tiny_inputs():
    single = pts((4, 9))
    assert hull_filter_min(single) == single
    two = pts((1, 5), (3, 2))
    assert hull_filter_min(two) == two


def test_hull_filter_drops_interior_point():
    points = pts((1, 10), (4, 5), (5, 6), (10, 1))
    kept = hull_filter_min(points)
    assert (4, 5) in {(p.x, p.y) for p in kept}
    assert (5, 6) not in {(p.x, p.y) for p in kept}


def test_filter_maximal_staircase():
    points = pts((1, 4), (2, 2), (3, 3), (4, 1))
    kept = filter_maximal(points)
    assert [(p.x, p.y) for p in kept] == [(1, 4), (3, 3), (4, 1)]


def test_filter_maximal_increasing_diagonal():
    points = pts((1, 1), (2, 2), (3, 3))
    kept = filter_maximal(points)
    assert [(p.x, p.y) for p in kept] == [(3, 3)]


def test_filter_maximal_antichain_keeps_all():
    points = pts((1, 3), (2, 2), (3, 1))
    kept = filter_maximal(points)
    assert [(p.x, p.y) for p in kept] == [(1, 3), (2, 2), (3, 1)]


def test_hull_filter_agrees_with_oracle():
    import random

    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(1, 40)
        xs = rng.sample(range(1, 500), n)
        ys = rng.sample(range(1, 500), n)
        rows = sorted(zip(xs, ys))
        points = [lift(x, y, i + 1) for i, (x, y) in enumerate(rows)]
        got = {(p.x, p.y) for p in hull_filter_min(points)}
        want = set(strict_hull_vertices([(p.x, p.y) for p in points]))
        assert got == want


def test_filter_maximal_agrees_with_oracle():
    import random

    rng = random.Random(11)
    for _ in range(50):
        n = rng.randrange(1, 40)
        xs = rng.sample(range(1, 500), n)
        ys = rng.sample(range(1, 500), n)
        rows = sorted(zip(xs, ys))
        points = [lift(x, y, i + 1) for i, (x, y) in enumerate(rows)]
        got = {(p.x, p.y, p.ident) for p in filter_maximal(points)}
        want = {
            (x, y, i)
            for (x, y, i) in maximal_sites(
                [(p.x, p.y, p.ident) for p in points]
            )
        }
        assert got == want
