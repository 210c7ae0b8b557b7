"""Projection diagrams, Gauss codes, determinants, linking numbers."""

import pytest

from oracles import alexander_determinant

from polytorus.diagrams import (
    DIRECTION_SEQUENCE,
    knot_determinant,
    linking_number,
    project_diagram,
)
from polytorus.errors import IntersectingCurves, NonGenericDirection
from polytorus.knots import StickKnot, trefoil_6stick, triangle_unknot

# star-shaped about the z-axis (strictly monotone angle, winding once),
# hence unknotted, but wildly non-planar: projections carry crossings of
# both signs
WIGGLY_UNKNOT = StickKnot([
    (5, 0, 0), (4, 3, 7), (1, 5, -3), (-3, 4, 5), (-5, 1, -6),
    (-4, -2, 4), (-2, -5, -2), (1, -6, 6), (4, -3, -5),
])


def test_planar_triangle_no_crossings():
    d = project_diagram(triangle_unknot(), (0, 0, 1))
    assert d.crossings == []
    assert d.gauss_code == ()


def test_direction_along_edge_rejected():
    K = triangle_unknot()
    with pytest.raises(NonGenericDirection):
        project_diagram(K, (1, 0, 0))  # parallel to the first edge


def test_trefoil_has_at_least_three_crossings():
    counts = []
    for d in DIRECTION_SEQUENCE[:6]:
        try:
            counts.append(len(project_diagram(trefoil_6stick(), d).crossings))
        except NonGenericDirection:
            continue
    assert counts and min(counts) >= 3


def test_gauss_code_structure():
    dg = project_diagram(trefoil_6stick(), (3, 5, 7))
    n = len(dg.crossings)
    assert len(dg.gauss_code) == 2 * n
    assert sorted(abs(x) for x in dg.gauss_code) == sorted(
        list(range(1, n + 1)) * 2)
    assert sum(1 for x in dg.gauss_code if x > 0) == n


def test_unknot_determinant_one_many_directions():
    dets = []
    for d in DIRECTION_SEQUENCE[:10]:
        try:
            dets.append(knot_determinant(WIGGLY_UNKNOT, d))
        except NonGenericDirection:
            continue
    assert len(dets) >= 6
    assert all(v == 1 for v in dets)


def test_triangle_determinant():
    assert knot_determinant(triangle_unknot()) == 1


def test_trefoil_determinant_direction_invariant():
    dets = []
    for d in DIRECTION_SEQUENCE[:8]:
        try:
            dets.append(knot_determinant(trefoil_6stick(), d))
        except NonGenericDirection:
            continue
    assert len(dets) >= 4
    assert all(v == 3 for v in dets)


def test_determinant_odd():
    for K in (triangle_unknot(), trefoil_6stick(), WIGGLY_UNKNOT):
        assert knot_determinant(K) % 2 == 1


def test_determinant_matches_alexander_oracle():
    for K in (trefoil_6stick(), WIGGLY_UNKNOT):
        checked = 0
        for d in DIRECTION_SEQUENCE[:8]:
            try:
                goeritz = knot_determinant(K, d)
                alex = alexander_determinant(K.vertices, d)
            except NonGenericDirection:
                continue
            assert goeritz == alex
            checked += 1
        assert checked >= 3


def test_linking_far_apart_squares_zero():
    a = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
    b = [(10, 0, 5), (11, 0, 5), (11, 1, 5), (10, 1, 5)]
    assert linking_number(a, b) == 0


def test_linking_hopf_squares():
    a = [(-1, -1, 0), (1, -1, 0), (1, 1, 0), (-1, 1, 0)]
    b = [(0, 0, -1), (2, 0, -1), (2, 0, 1), (0, 0, 1)]
    lk = linking_number(a, b)
    assert abs(lk) == 1
    assert linking_number(b, a) == lk


def test_linking_rejects_touching_curves():
    a = [(0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0)]
    b = [(1, 0, 0), (3, 0, 1), (3, 1, -1)]
    with pytest.raises(IntersectingCurves):
        linking_number(a, b)
