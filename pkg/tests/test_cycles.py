"""Homology signatures, shortest cycles, types, layers, and the bound."""

import pytest

from oracles import cut_separates, oracle_marked, oracle_type

from polytorus.cycles import (
    bound_strict_gap,
    cut_along_cycle,
    cycle_signature,
    distance_layers,
    enumerate_simple_cycles,
    homology_basis,
    lower_bound,
    marked_type,
    shortest_nonseparating,
    stick_number_and_type,
)
from polytorus.errors import InvalidType, MarkNotShortest, NotGenusOne, SeparatingMark
from polytorus.generators import (
    empty_triangle_3k,
    minimal_torus_3k,
    moebius_torus,
    ring_cycle,
    tube_complex,
)
from polytorus.surfaces import Cycle, SimplicialTorus


def test_basis_properties(moebius):
    basis = homology_basis(moebius)
    # tree edges are trivial, the two leftover edges carry the units
    for e in basis.tree_edges:
        assert basis.edge_sig[e] == (0, 0)
    units = sorted(basis.edge_sig[x] for x in basis.leftover_edges)
    assert units == [(0, 1), (1, 0)]
    # every face boundary sums to zero
    for f in moebius.faces:
        assert cycle_signature(moebius, basis, Cycle(f)).is_zero()


def test_sphere_has_no_basis():
    class Sphere:
        pass

    with pytest.raises(NotGenusOne):
        # boundary of the triangular bipyramid: a 5-vertex sphere
        T = SimplicialTorus.__new__(SimplicialTorus)
        faces = [(1, 2, 4), (2, 3, 4), (1, 3, 4), (1, 2, 5), (2, 3, 5), (1, 3, 5)]
        T.faces = tuple(sorted(tuple(sorted(f)) for f in faces))
        T.n_vertices = 5
        T._edge_faces = None
        T._neighbors = None
        T._oriented = None
        homology_basis(T)


def test_face_boundary_separates(moebius):
    basis = homology_basis(moebius)
    assert cycle_signature(moebius, basis, Cycle(moebius.faces[0])).is_zero()
    assert cut_separates(moebius, moebius.faces[0])


def test_signature_additivity(moebius):
    basis = homology_basis(moebius)

    def walk_signature(walk):
        p = q = 0
        for i in range(len(walk)):
            u, v = walk[i], walk[(i + 1) % len(walk)]
            sp, sq = basis.edge_sig[(u, v)]
            p += sp
            q += sq
        return (p, q)

    c1 = moebius.faces[0]
    res = shortest_nonseparating(moebius, basis)
    c2 = res[1].vertices
    # compose at a shared vertex (walks become one closed walk)
    shared = set(c1) & set(c2)
    if shared:
        v = min(shared)
        w1 = list(c1[c1.index(v):] + c1[:c1.index(v)])
        w2 = list(c2[c2.index(v):] + c2[:c2.index(v)])
        combined = w1 + w2
        s1, s2 = walk_signature(w1), walk_signature(w2)
        sc = walk_signature(combined)
        assert sc == (s1[0] + s2[0], s1[1] + s2[1])


def test_cut_along_nonseparating_gives_cylinder(moebius):
    _, witness = shortest_nonseparating(moebius)
    cut = cut_along_cycle(moebius, witness)
    assert cut.n_components == 1
    assert cut.boundary_circles == 2


def test_cut_along_separating_disconnects(moebius):
    cut = cut_along_cycle(moebius, Cycle(moebius.faces[0]))
    assert cut.n_components == 2


def test_shortest_nonseparating_values():
    assert shortest_nonseparating(moebius_torus())[0] == 3
    assert shortest_nonseparating(minimal_torus_3k(5))[0] == 3
    m, witness = shortest_nonseparating(tube_complex(6))
    assert m == 3
    assert not cut_separates(tube_complex(6), witness.vertices)


def test_ring_cycles_nonseparating():
    T = tube_complex(4)
    basis = homology_basis(T)
    for r in range(4):
        ring = ring_cycle(4, r)
        assert not cycle_signature(T, basis, ring).is_zero()
        assert not cut_separates(T, ring.vertices)


def test_marked_type_values(moebius):
    (m, k), _ = marked_type(moebius, Cycle((1, 4, 6)))
    assert (m, k) == (3, 3)
    for kk in (4, 5, 6):
        T = minimal_torus_3k(kk)
        (mM, kM), _ = marked_type(T, empty_triangle_3k(kk))
        assert (mM, kM) == (3, kk)


def test_marked_type_rejects_separating(moebius):
    with pytest.raises(SeparatingMark):
        marked_type(moebius, Cycle(moebius.faces[0]))


def test_mark_witness_realizes_minimum(minimal5):
    basis = homology_basis(minimal5)
    m, witness = shortest_nonseparating(minimal5, basis)
    (mM, _), _ = marked_type(minimal5, witness, basis)
    assert mM == m == len(witness)


def test_types_of_named_complexes(moebius):
    assert stick_number_and_type(moebius).type_str == "3x3"
    for k in range(3, 9):
        assert stick_number_and_type(minimal_torus_3k(k)).type_str == f"3x{k}"
        assert stick_number_and_type(tube_complex(k)).type_str == f"3x{k}"


def test_type_result_invariants(minimal5):
    basis = homology_basis(minimal5)
    res = stick_number_and_type(minimal5, basis)
    assert res.m <= res.s
    assert len(res.witness_m) == res.m
    assert len(res.witness_s) == res.s
    sm = cycle_signature(minimal5, basis, res.witness_m)
    ss = cycle_signature(minimal5, basis, res.witness_s)
    assert not sm.proportional_to(ss)


def test_oracle_agreement_small():
    for T in (moebius_torus(), minimal_torus_3k(4), tube_complex(3)):
        basis = homology_basis(T)
        res = stick_number_and_type(T, basis)
        assert (res.m, res.s) == oracle_type(T, basis)
        om, ok = oracle_marked(T, basis, res.witness_m)
        (mM, kM), _ = marked_type(T, res.witness_m, basis)
        assert (mM, kM) == (om, ok)


def test_oracle_agreement_census8(census8):
    for rec in census8:
        T = rec.torus()
        basis = homology_basis(T)
        assert (rec.m, rec.s) == oracle_type(T, basis)


def test_layers_minimal6():
    T = minimal_torus_3k(6)
    rep = distance_layers(T, empty_triangle_3k(6), 1)
    assert rep.ok
    assert rep.a_sizes[0] == 1
    assert rep.m == 3 and rep.k == 6


def test_layers_all_census8(census8):
    for rec in census8:
        T = rec.torus()
        res = stick_number_and_type(T)
        v0 = min(res.witness_m.vertices)
        rep = distance_layers(T, res.witness_m, v0)
        assert rep.ok, (rec.canonical_faces, rep.violated)


def test_layers_mark_must_be_shortest(minimal5):
    basis = homology_basis(minimal5)
    res = stick_number_and_type(minimal5, basis)
    with pytest.raises(MarkNotShortest):
        distance_layers(minimal5, res.witness_s, res.witness_s.vertices[0], basis)


def test_lower_bound_values():
    assert lower_bound(7, 12) == 61
    assert [lower_bound(3, k) for k in (3, 4, 5, 6)] == [6, 9, 12, 15]
    assert lower_bound(4, 6) == 17
    assert lower_bound(4, 6) > 3 * 6 - 2


def test_lower_bound_rejects_bad_types():
    with pytest.raises(InvalidType):
        lower_bound(2, 5)
    with pytest.raises(InvalidType):
        lower_bound(5, 4)


def test_gap_sweep():
    for k in range(6, 21):
        for m in range(4, k + 1):
            assert bound_strict_gap(m, k)


def test_bound_on_census(census8):
    for rec in census8:
        assert rec.n >= lower_bound(rec.m, rec.s)


def test_enumerate_simple_cycles_unique(moebius):
    cycles = enumerate_simple_cycles(moebius, 4)
    seen = set()
    for cyc in cycles:
        canon = Cycle(cyc).canonical().vertices
        assert canon not in seen
        seen.add(canon)
    # each triangle face appears as a 3-cycle
    tri = {c for c in seen if len(c) == 3}
    assert all(tuple(sorted(f)) in {tuple(sorted(t)) for t in tri} for f in moebius.faces)


# the minimal 6-vertex projective plane: closed but non-orientable
RP2_6 = [(1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 6), (1, 5, 6),
         (2, 3, 5), (2, 3, 6), (2, 4, 6), (3, 4, 5), (4, 5, 6)]


def test_nonorientable_surface_detected():
    from polytorus.surfaces import validate_surface
    rep = validate_surface(RP2_6)
    assert rep.euler == 1
    assert not rep.orientable


def test_torus_constructor_rejects_nonorientable():
    with pytest.raises(Exception):
        SimplicialTorus(RP2_6)


def test_marked_type_arbitrary_marks_vs_oracle(census8, moebius):
    """marked_type must match brute force for marks of every class and
    length, not only for shortest ones (exercises the fallback path)."""
    complexes = [moebius, tube_complex(3)] + [r.torus() for r in census8[:4]]
    for T in complexes:
        basis = homology_basis(T)
        seen_classes = set()
        marks = []
        for cyc in sorted(enumerate_simple_cycles(T), key=len):
            sig = cycle_signature(T, basis, Cycle(cyc))
            if sig.is_zero():
                continue
            key = (sig[0], sig[1], len(cyc) > 3)
            if key not in seen_classes:
                seen_classes.add(key)
                marks.append(Cycle(cyc))
            if len(marks) >= 8:
                break
        for M in marks:
            got, _ = marked_type(T, M, basis)
            want = oracle_marked(T, basis, M)
            assert got == want, (T, M.vertices, got, want)


def test_shortest_simple_in_class_direct(moebius):
    from polytorus.cycles import _shortest_simple_in_class
    basis = homology_basis(moebius)
    _, witness = shortest_nonseparating(moebius, basis)
    c = cycle_signature(moebius, basis, witness)
    length, found = _shortest_simple_in_class(moebius, basis, c, 3, 7, witness)
    assert length == 3
    fsig = cycle_signature(moebius, basis, found)
    assert fsig == c or fsig == -c
