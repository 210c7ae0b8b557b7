"""Triangulated closed surfaces as pure combinatorics.

A surface is a list of vertex triples on labels 1..n.  Validation enforces
the closed-pseudomanifold conditions (every edge in exactly two faces, every
vertex link a single cycle), computes the Euler characteristic and checks
orientability by propagating face orientations.

Isomorphism machinery works through a canonical labeling: a traversal of the
face-adjacency structure started from a *flag* (an ordered face) relabels the
vertices deterministically, and the lexicographic minimum over all flags is a
relabeling-invariant normal form.  The complexes handled here are tiny
(a few dozen vertices), so the quadratic flag sweep is perfectly adequate and
also hands us the full automorphism group for free.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    BadVertexLink,
    DuplicateFace,
    NonManifoldEdge,
    NotACycle,
    PolytorusError,
)

Face = tuple[int, int, int]
Edge = tuple[int, int]


def _norm_face(face) -> Face:
    a, b, c = face
    if a == b or b == c or a == c:
        raise PolytorusError(f"degenerate face {tuple(face)}")
    x, y, z = sorted((a, b, c))
    return (x, y, z)


def _face_edges(face: Face):
    a, b, c = face
    return ((a, b), (a, c), (b, c))


@dataclass(frozen=True)
class SurfaceReport:
    """Simplex counts and topological type of a validated closed surface."""

    n_vertices: int
    n_edges: int
    n_faces: int
    euler: int
    orientable: bool
    genus: int


@dataclass(frozen=True)
class Cycle:
    """Simple closed edge path; the last vertex connects back to the first."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise NotACycle(f"cycle needs >= 3 vertices, got {verts}")
        if len(set(verts)) != len(verts):
            raise NotACycle(f"repeated vertex in cycle {verts}")

    def __len__(self):
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self):
        v = self.vertices
        return [tuple(sorted((v[i], v[(i + 1) % len(v)]))) for i in range(len(v))]

    def directed_edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def canonical(self) -> "Cycle":
        """Lexicographically least presentation over rotations and reflection."""
        v = list(self.vertices)
        best = None
        for seq in (v, v[::-1]):
            start = seq.index(min(seq))
            rot = tuple(seq[start:] + seq[:start])
            if best is None or rot < best:
                best = rot
        return Cycle(best)


def validate_surface(faces) -> SurfaceReport:
    """Check the closed-pseudomanifold conditions and report counts.

    Raises DuplicateFace / NonManifoldEdge / BadVertexLink with the offending
    simplex.  Accepts any closed surface (sphere, torus, Klein bottle, ...);
    callers wanting a torus check the report.
    """
    if not faces:
        raise PolytorusError("empty face list")
    norm = []
    seen = set()
    for f in faces:
        nf = _norm_face(f)
        if nf[0] < 1:
            raise PolytorusError(f"vertex labels must be positive, got {nf}")
        if nf in seen:
            raise DuplicateFace(nf)
        seen.add(nf)
        norm.append(nf)

    edge_faces: dict[Edge, list[int]] = {}
    for i, f in enumerate(norm):
        for e in _face_edges(f):
            edge_faces.setdefault(e, []).append(i)
    for e, fs in edge_faces.items():
        if len(fs) != 2:
            raise NonManifoldEdge(e, len(fs))

    vertices = sorted({v for f in norm for v in f})
    _check_links(norm, vertices)
    _check_face_connected(norm, edge_faces)

    V, E, F = len(vertices), len(edge_faces), len(norm)
    euler = V - E + F
    orientable = _orient_faces(norm, edge_faces) is not None
    genus = (2 - euler) // 2 if orientable else 2 - euler
    return SurfaceReport(V, E, F, euler, orientable, genus)


def _link_cycle(faces, v):
    """Neighbors of v in cyclic order, or raise BadVertexLink."""
    adj: dict[int, list[int]] = {}
    for f in faces:
        if v in f:
            a, b = (x for x in f if x != v)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    if not adj:
        raise BadVertexLink(v, "isolated vertex")
    for w, nbrs in adj.items():
        if len(nbrs) != 2:
            raise BadVertexLink(v, f"link vertex {w} has degree {len(nbrs)}")
    start = min(adj)
    cycle = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > len(adj):
            raise BadVertexLink(v, "link not a single cycle")
    if len(cycle) != len(adj):
        raise BadVertexLink(v, "link has several components")
    return cycle


def _check_links(faces, vertices):
    for v in vertices:
        _link_cycle(faces, v)


def _check_face_connected(faces, edge_faces):
    if not faces:
        return
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for e in _face_edges(faces[i]):
            for j in edge_faces[e]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
    if len(seen) != len(faces):
        raise PolytorusError("face complex is not connected")


def _orient_faces(faces, edge_faces):
    """Globally consistent face orientations, or None if non-orientable.

    Returns a list of oriented triples: adjacent faces induce opposite
    directions on their shared edge.
    """
    oriented: list[tuple[int, int, int] | None] = [None] * len(faces)
    oriented[0] = faces[0]
    queue = deque([0])

    def directed(tri):
        a, b, c = tri
        return {(a, b), (b, c), (c, a)}

    while queue:
        i = queue.popleft()
        di = directed(oriented[i])
        for e in _face_edges(faces[i]):
            j = next(x for x in edge_faces[e] if x != i) if len(edge_faces[e]) == 2 else None
            if j is None:
                continue
            u, v = e
            # the neighbor must carry e in the opposite direction
            want = (u, v) if (v, u) in di else (v, u)
            a, b, c = faces[j]
            w = next(x for x in (a, b, c) if x not in e)
            tri = (want[0], want[1], w)
            if oriented[j] is None:
                oriented[j] = tri
                queue.append(j)
            elif directed(oriented[j]) != directed(tri):
                return None
    return oriented


class SimplicialTorus:
    """Immutable validated triangulation of the 2-torus.

    Vertices are the dense labels 1..n; sparse input labels are compacted on
    construction and the mapping is kept in ``relabeling`` (old -> new).
    """

    def __init__(self, faces, _skip_validation=False):
        compact, mapping = _compact_labels(faces)
        self.relabeling = mapping
        self.faces: tuple[Face, ...] = tuple(sorted(_norm_face(f) for f in compact))
        if not _skip_validation:
            report = validate_surface(self.faces)
            if report.euler != 0 or not report.orientable:
                raise PolytorusError(
                    f"not a torus: euler={report.euler}, orientable={report.orientable}")
            self.report = report
        else:
            V = len({v for f in self.faces for v in f})
            self.report = SurfaceReport(V, 3 * V, 2 * V, 0, True, 1)
        self.n_vertices = self.report.n_vertices
        self._edge_faces = None
        self._neighbors = None
        self._oriented = None

    # -- cached structure ---------------------------------------------------

    @property
    def edge_faces(self) -> dict[Edge, tuple[int, int]]:
        if self._edge_faces is None:
            ef: dict[Edge, list[int]] = {}
            for i, f in enumerate(self.faces):
                for e in _face_edges(f):
                    ef.setdefault(e, []).append(i)
            self._edge_faces = {e: tuple(fs) for e, fs in ef.items()}
        return self._edge_faces

    @property
    def edges(self):
        return sorted(self.edge_faces)

    @property
    def neighbors(self) -> dict[int, tuple[int, ...]]:
        if self._neighbors is None:
            nb: dict[int, set[int]] = {v: set() for v in range(1, self.n_vertices + 1)}
            for u, v in self.edge_faces:
                nb[u].add(v)
                nb[v].add(u)
            self._neighbors = {v: tuple(sorted(s)) for v, s in nb.items()}
        return self._neighbors

    @property
    def oriented_faces(self):
        if self._oriented is None:
            self._oriented = _orient_faces(self.faces, {e: list(f) for e, f in self.edge_faces.items()})
        return self._oriented

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_faces

    def has_face(self, face) -> bool:
        return _norm_face(face) in set(self.faces)

    def contains_cycle(self, cycle: Cycle) -> bool:
        return all(tuple(sorted(e)) in self.edge_faces for e in cycle.edges())

    def require_cycle(self, cycle: Cycle):
        for e in cycle.directed_edges():
            if not self.has_edge(*e):
                raise NotACycle(f"consecutive pair {e} is not an edge")

    def __eq__(self, other):
        return isinstance(other, SimplicialTorus) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return f"SimplicialTorus(n={self.n_vertices}, F={len(self.faces)})"


def _compact_labels(faces):
    labels = sorted({v for f in faces for v in f})
    mapping = {old: i + 1 for i, old in enumerate(labels)}
    if all(old == new for old, new in mapping.items()):
        return faces, mapping
    return [tuple(mapping[v] for v in f) for f in faces], mapping


def vertex_link(T: SimplicialTorus, v: int) -> Cycle:
    """Cyclically ordered neighbors of v; length equals deg(v)."""
    if not 1 <= v <= T.n_vertices:
        raise PolytorusError(f"vertex {v} out of range 1..{T.n_vertices}")
    return Cycle(tuple(_link_cycle(T.faces, v)))


# -- canonical form and isomorphism -------------------------------------------


def _traverse_flag(faces, edge_faces, apex, flag):
    """Deterministic relabeling induced by one oriented starting face.

    ``flag`` is an oriented triple (a, b, c) of some face.  Faces are visited
    breadth-first; crossing edge (x, y) of an oriented face enters the
    neighbor as (y, x, w), so the traversal depends only on the combinatorial
    structure.  Returns (canonical face list, labeling old->new).
    """
    a, b, c = flag
    labels = {a: 1, b: 2, c: 3}
    nxt = 4
    start = edge_faces[(min(a, b), max(a, b))]
    fi = start[0] if apex[start[0]][(min(a, b), max(a, b))] == c else start[1]
    visited = [False] * len(faces)
    visited[fi] = True
    queue = deque([(a, b, c)])
    out = []
    while queue:
        x, y, z = queue.popleft()
        out.append(tuple(sorted((labels[x], labels[y], labels[z]))))
        for u, v, cur_w in ((x, y, z), (y, z, x), (z, x, y)):
            e = (min(u, v), max(u, v))
            f1, f2 = edge_faces[e]
            # neighbor across e = the face whose apex over e is not the
            # current third vertex
            w1 = apex[f1][e]
            j, w = (f2, apex[f2][e]) if w1 == cur_w else (f1, w1)
            if not visited[j]:
                visited[j] = True
                if w not in labels:
                    labels[w] = nxt
                    nxt += 1
                queue.append((v, u, w))
    out.sort()
    return tuple(out), labels


def _canonical_scan(T: SimplicialTorus):
    """Minimum canonical form over all flags, with all optimal labelings."""
    faces = T.faces
    edge_faces = T.edge_faces
    apex = []
    for f in faces:
        a, b, c = f
        apex.append({(a, b): c, (a, c): b, (b, c): a})
    best = None
    best_labelings = []
    for f in faces:
        a, b, c = f
        for flag in ((a, b, c), (b, c, a), (c, a, b), (a, c, b), (c, b, a), (b, a, c)):
            form, labels = _traverse_flag(faces, edge_faces, apex, flag)
            if best is None or form < best:
                best = form
                best_labelings = [labels]
            elif form == best:
                best_labelings.append(labels)
    return best, best_labelings


def canonical_form(T: SimplicialTorus) -> tuple[Face, ...]:
    """Relabeling-invariant representative of the isomorphism class."""
    form, _ = _canonical_scan(T)
    return form


def canonical_labeling(T: SimplicialTorus) -> dict[int, int]:
    """One labeling old->new realizing canonical_form(T)."""
    _, labelings = _canonical_scan(T)
    return labelings[0]


def automorphism_group(T: SimplicialTorus) -> list[dict[int, int]]:
    """All face-preserving vertex bijections.

    Every flag whose traversal attains the canonical form corresponds to
    exactly one automorphism, so the sweep enumerates the full group.
    """
    _, labelings = _canonical_scan(T)
    lab0 = labelings[0]
    inv0 = {new: old for old, new in lab0.items()}
    return [{v: inv0[lab[v]] for v in lab} for lab in labelings]


def vertex_orbits(T: SimplicialTorus) -> list[tuple[int, ...]]:
    """Orbits of the automorphism group on vertices (sorted representatives)."""
    autos = automorphism_group(T)
    seen = set()
    orbits = []
    for v in range(1, T.n_vertices + 1):
        if v in seen:
            continue
        orbit = sorted({a[v] for a in autos})
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return orbits


def is_isomorphic(T1: SimplicialTorus, T2: SimplicialTorus):
    """A vertex bijection carrying faces of T1 onto faces of T2, or None."""
    if T1.n_vertices != T2.n_vertices or len(T1.faces) != len(T2.faces):
        return None
    form1, labelings1 = _canonical_scan(T1)
    form2, labelings2 = _canonical_scan(T2)
    if form1 != form2:
        return None
    lab1 = labelings1[0]
    inv2 = {new: old for old, new in labelings2[0].items()}
    return {v: inv2[lab1[v]] for v in lab1}


# -- text format ----------------------------------------------------------------


def format_complex(T: SimplicialTorus) -> str:
    lines = [str(T.n_vertices)]
    lines += [f"{a} {b} {c}" for a, b, c in T.faces]
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialTorus:
    """Parse the text format: first line n, then one face per line.

    Lines starting with '#' (and inline '#' tails) are comments.
    """
    n = None
    faces = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise PolytorusError(f"line {line_no}: expected vertex count, got {raw!r}")
            n = int(parts[0])
            continue
        if len(parts) != 3:
            raise PolytorusError(f"line {line_no}: expected 3 vertex labels, got {raw!r}")
        try:
            faces.append(tuple(int(p) for p in parts))
        except ValueError:
            raise PolytorusError(f"line {line_no}: expected integers, got {raw!r}") from None
    if n is None:
        raise PolytorusError("missing vertex count line")
    T = SimplicialTorus(faces)
    if T.n_vertices != n:
        raise PolytorusError(
            f"header says {n} vertices but faces use {T.n_vertices}")
    return T


def load_complex(path) -> SimplicialTorus:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex(fh.read())


def save_complex(T: SimplicialTorus, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_complex(T))
