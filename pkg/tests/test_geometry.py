"""Exact predicates: distances, intersections, hull certificates."""

from fractions import Fraction

from polytorus.geometry import (
    is_hull_vertex,
    orient3d,
    plane_supports,
    point_in_hull,
    point_in_tetra,
    point_segment_dist2,
    rational_to_decimal,
    segment_segment_dist2,
    segments_intersect_2d,
    sqrt_floor,
    triangles_conflict,
    vec,
)

F = Fraction


def test_segment_distances_exact():
    # parallel unit segments one apart
    assert segment_segment_dist2(vec(0, 0, 0), vec(1, 0, 0),
                                 vec(0, 1, 0), vec(1, 1, 0)) == 1
    # crossing segments touch
    assert segment_segment_dist2(vec(0, 0, 0), vec(2, 2, 0),
                                 vec(0, 2, 0), vec(2, 0, 0)) == 0
    # skew segments
    d = segment_segment_dist2(vec(0, 0, 0), vec(2, 0, 0),
                              vec(1, -1, 3), vec(1, 1, 3))
    assert d == 9
    assert point_segment_dist2(vec(0, 0, 7), vec(-1, 0, 0), vec(1, 0, 0)) == 49


def test_sqrt_floor_bounds():
    for x in (F(2), F(1, 3), F(10**12), F(1, 10**18), F(9)):
        r = sqrt_floor(x, 50)
        assert r * r <= x
        assert (r + F(1, 2**45)) ** 2 > x or r == 0


def test_segments_intersect_2d_degenerate():
    # collinear but disjoint segments, aligned endpoints
    assert not segments_intersect_2d((0, 0), (1, 0), (2, 0), (3, 0))
    assert segments_intersect_2d((0, 0), (2, 0), (1, 0), (3, 0))
    # shared endpoint only
    assert segments_intersect_2d((0, 0), (1, 0), (1, 0), (1, 1))
    # the earlier false positive: touching lines but disjoint segments
    assert not segments_intersect_2d((0, 0), (1, 0), (2, 0), (4, 2))


def test_triangles_sharing_edge_ok():
    t1 = (vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0))
    t2 = (vec(0, 0, 0), vec(1, 0, 0), vec(0, -1, 1))
    assert triangles_conflict(t1, t2, (vec(0, 0, 0), vec(1, 0, 0))) is None


def test_coplanar_triangles_sharing_edge_overlap():
    t1 = (vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0))
    t2 = (vec(0, 0, 0), vec(1, 0, 0), vec(1, 1, 0))  # same side apexes
    assert triangles_conflict(t1, t2, (vec(0, 0, 0), vec(1, 0, 0))) is not None
    t3 = (vec(0, 0, 0), vec(1, 0, 0), vec(1, -1, 0))
    assert triangles_conflict(t1, t3, (vec(0, 0, 0), vec(1, 0, 0))) is None


def test_disjoint_triangles_piercing():
    t1 = (vec(0, 0, 0), vec(4, 0, 0), vec(0, 4, 0))
    t2 = (vec(1, 1, -1), vec(1, 1, 1), vec(3, 3, 1))
    assert triangles_conflict(t1, t2, ()) is not None
    t3 = (vec(0, 0, 5), vec(4, 0, 5), vec(0, 4, 5))
    assert triangles_conflict(t1, t3, ()) is None


def test_shared_vertex_only():
    t1 = (vec(0, 0, 0), vec(2, 0, 0), vec(0, 2, 0))
    t2 = (vec(0, 0, 0), vec(-2, 0, 1), vec(0, -2, 1))
    assert triangles_conflict(t1, t2, (vec(0, 0, 0),)) is None
    # same shared vertex but overlapping beyond it
    t3 = (vec(0, 0, 0), vec(2, 1, 0), vec(1, 2, 0))
    assert triangles_conflict(t1, t3, (vec(0, 0, 0),)) is not None


def test_hull_certificates():
    pts = [vec(0, 0, 0), vec(2, 0, 0), vec(0, 2, 0), vec(0, 0, 2),
           vec(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))]
    assert all(is_hull_vertex(pts, i) for i in range(4))
    assert not is_hull_vertex(pts, 4)
    assert point_in_hull(vec(1, 0, 0), pts)
    assert not point_in_hull(vec(-1, 0, 0), pts)
    assert point_in_tetra(vec(Fraction(1, 4), Fraction(1, 4), Fraction(1, 4)),
                          *pts[:4])
    tri = (pts[0], pts[1], pts[2])
    assert plane_supports(pts[:4], tri)
    # a plane through the interior point cuts the tetrahedron
    inner = (pts[0], pts[1], pts[4])
    assert not plane_supports(pts, inner)


def test_orient3d_signs():
    assert orient3d(vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)) == 1
    assert orient3d(vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, -1)) == -1
    assert orient3d(vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0), vec(1, 1, 0)) == 0


def test_rational_to_decimal():
    assert rational_to_decimal(F(1, 4), 3) == "0.250"
    assert rational_to_decimal(F(-1, 3), 6) == "-0.333333"
    assert rational_to_decimal(F(2, 3), 2) == "0.67"
    assert rational_to_decimal(F(5), 0) == "5"


def test_conflict_verdict_invariant_under_rational_motions():
    """Scaling, translating, and permuting coordinates never changes the
    intersection verdict."""
    import random

    from polytorus.geometry import sub as vsub

    random.seed(23)

    def rnd():
        return F(random.randint(-8, 8), random.choice((1, 2, 3)))

    def tri():
        return tuple((rnd(), rnd(), rnd()) for _ in range(3))

    def transform(t, lam, off, perm):
        return tuple(tuple(lam * p[perm[i]] + off[i] for i in range(3)) for p in t)

    checked = 0
    for _ in range(60):
        t1, t2 = tri(), tri()
        try:
            base = triangles_conflict(t1, t2, ()) is not None
        except ZeroDivisionError:
            continue
        lam = F(random.randint(1, 5), random.randint(1, 3))
        off = (rnd(), rnd(), rnd())
        perm = random.choice(([0, 1, 2], [1, 2, 0], [2, 0, 1]))
        try:
            moved = triangles_conflict(transform(t1, lam, off, perm),
                                       transform(t2, lam, off, perm), ()) is not None
        except ZeroDivisionError:
            continue
        assert moved == base
        checked += 1
    assert checked >= 40
