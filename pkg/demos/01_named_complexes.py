#!/usr/bin/env python3
"""Walk through the named triangulations and their combinatorial types.

The 7-vertex torus is the unique smallest torus triangulation; the minimal
3xk series realizes every type 3xk on 3k-2 vertices; the tube complexes are
the combinatorial layer of the knotted tube construction.
"""

from polytorus import (
    cyclic_symmetry,
    hamiltonian_sequence,
    is_isomorphic,
    minimal_torus_3k,
    moebius_torus,
    stick_number_and_type,
    tube_complex,
    vertex_link,
)

M = moebius_torus()
print("7-vertex torus:", M.report)
print("  link of vertex 1:", vertex_link(M, 1).vertices)
print("  type:", stick_number_and_type(M).type_str)

print("\nminimal 3xk series:")
for k in range(3, 9):
    T = minimal_torus_3k(k)
    res = stick_number_and_type(T)
    degs = {T.degree(v) for v in range(1, T.n_vertices + 1)}
    print(f"  k={k}: {T.n_vertices} vertices, type {res.type_str}, degrees {sorted(degs)}")

print("\nk=3 is the 7-vertex torus itself:",
      is_isomorphic(minimal_torus_3k(3), M) is not None)

k = 5
T = minimal_torus_3k(k)
sigma = cyclic_symmetry(k)
faces = set(T.faces)
print(f"\ncyclic symmetry of the k={k} example maps faces to faces:",
      all(tuple(sorted(sigma[v] for v in f)) in faces for f in T.faces))
seq = hamiltonian_sequence(k)
print("Hamiltonian vertex order:", seq)
print("consecutive pairs are edges:",
      all(T.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))))

print("\ntube complexes:")
for k in (3, 5, 7):
    T = tube_complex(k)
    print(f"  k={k}: {T.n_vertices} vertices, type {stick_number_and_type(T).type_str}")
