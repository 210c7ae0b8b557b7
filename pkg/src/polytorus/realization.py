"""Exact polyhedral realizations: tubes, complements, cyclic polytopes.

Everything here runs in rational arithmetic.  Two constructions need care to
stay exact:

* Ring circles.  Equilateral rational triangles inscribed in a circle do not
  exist (rational rotations by 120 degrees do not exist), but rational
  points on the circle {x in the plane : |x|^2 = rho^2} are dense once one is
  known: a chord of rational slope through a rational point meets the conic
  in a second rational point.  Each ring therefore carries three exact
  circle points at near-equilateral angles, all at the same exact squared
  radius, and the ring's circumcenter is exactly the knot vertex, which the
  core recovery uses.

* Ring planes.  The exact angle bisector direction involves square roots of
  edge lengths, so the construction uses a rational approximation and then
  checks the property that actually matters (the plane separates the two
  incident edges) exactly.

The tube radius is handled as an exact *squared* value, which keeps the
bound from the clearance computation and every later comparison exact, and
makes the pre-verification bound exactly scale-covariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .cycles import homology_basis, cycle_signature, stick_number_and_type
from .diagrams import linking_number, polygon_determinant
from .errors import (
    DegenerateKnot,
    EnclosureFailure,
    EpsilonTooLarge,
    FaceNotInPolytope,
    MissingProvenance,
    ParseError,
    PolytorusError,
    SeparatingCycle,
)
from .generators import hamiltonian_sequence, minimal_torus_3k, ring_cycle, tube_complex
from .geometry import (
    Vec,
    add,
    approx_unit,
    collinear,
    cross,
    dot,
    is_hull_vertex,
    is_zero,
    norm2,
    plane_supports,
    rational_to_decimal,
    reduce_direction,
    scale,
    sqrt_floor,
    sub,
    triangles_conflict,
    vec,
)
from .knots import StickKnot
from .surfaces import Cycle, SimplicialTorus

MAX_EPS_HALVINGS = 16


class ExactRadius:
    """Tube radius represented by its exact square.

    Radii produced by clearance computations are square roots of rationals;
    carrying the square keeps every comparison exact and makes scaling by a
    rational factor exact as well.
    """

    def __init__(self, sq):
        sq = Fraction(sq)
        if sq <= 0:
            raise ValueError("radius square must be positive")
        self.sq = sq

    @classmethod
    def from_value(cls, value):
        return cls(Fraction(value) ** 2)

    def halved(self) -> "ExactRadius":
        return ExactRadius(self.sq / 4)

    def scaled(self, factor) -> "ExactRadius":
        return ExactRadius(self.sq * Fraction(factor) ** 2)

    def __le__(self, other):
        return self.sq <= other.sq

    def __eq__(self, other):
        return isinstance(other, ExactRadius) and self.sq == other.sq

    def __float__(self):
        return math.sqrt(float(self.sq))

    def __repr__(self):
        return f"ExactRadius(sq={self.sq})"


def _as_radius(eps) -> ExactRadius:
    if isinstance(eps, ExactRadius):
        return eps
    return ExactRadius.from_value(eps)


@dataclass
class Mesh:
    """Geometric realization: exact coordinates over a validated torus."""

    coords: dict
    complex: SimplicialTorus
    provenance: dict = field(default_factory=dict)

    def face_points(self, face):
        return tuple(self.coords[v] for v in face)

    def cycle_points(self, cycle: Cycle):
        return [self.coords[v] for v in cycle.vertices]

    def check_coords(self):
        pts = list(self.coords.values())
        if len(set(pts)) != len(pts):
            raise PolytorusError("coincident mesh vertices")
        for f in self.complex.faces:
            a, b, c = self.face_points(f)
            if collinear(a, b, c):
                raise PolytorusError(f"degenerate face {f}")


@dataclass
class EmbeddingReport:
    ok: bool
    witness: tuple | None = None


def verify_embedding(mesh: Mesh) -> EmbeddingReport:
    """Exact pairwise face test: faces may meet only in shared simplices."""
    mesh.check_coords()
    faces = mesh.complex.faces
    pts = [mesh.face_points(f) for f in faces]
    vsets = [set(f) for f in faces]
    for i in range(len(faces)):
        for j in range(i + 1, len(faces)):
            common = vsets[i] & vsets[j]
            shared = tuple(mesh.coords[v] for v in sorted(common))
            msg = triangles_conflict(pts[i], pts[j], shared)
            if msg is not None:
                return EmbeddingReport(False, (faces[i], faces[j], msg))
    return EmbeddingReport(True)


# -- tube construction ----------------------------------------------------------


def _ring_planes(K: StickKnot):
    """Rational near-bisector normal at each knot vertex, transversality
    checked exactly."""
    normals = []
    k = K.k
    for i in range(k):
        p, v, q = K.vertices[i - 1], K.vertices[i], K.vertices[(i + 1) % k]
        n = reduce_direction(add(approx_unit(sub(v, p)), approx_unit(sub(q, v))))
        if dot(n, sub(v, p)) <= 0 or dot(n, sub(q, v)) <= 0:
            raise DegenerateKnot(f"cannot find transversal plane at vertex {i}")
        normals.append(n)
    return normals


def _project_to_plane(u: Vec, n: Vec) -> Vec:
    return sub(u, scale(n, dot(u, n) / norm2(n)))


def _initial_direction(n: Vec) -> Vec:
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        u = cross(n, vec(*axis))
        if not is_zero(u):
            return u
    raise DegenerateKnot("zero plane normal")


def _angle_in_plane(target: Vec, u: Vec, w: Vec) -> float:
    x = float(dot(target, u)) / math.sqrt(float(norm2(u)))
    y = float(dot(target, w)) / math.sqrt(float(norm2(w)))
    return math.atan2(y, x)


def _rotate_in_plane(u: Vec, w: Vec, angle: float) -> Vec:
    """Rational vector close to u rotated by ``angle`` toward w."""
    c = Fraction(round(math.cos(angle) * 2 ** 24), 2 ** 24)
    ratio = math.sqrt(float(norm2(u)) / float(norm2(w)))
    s = Fraction(round(math.sin(angle) * ratio * 2 ** 24), 2 ** 24)
    out = add(scale(u, c), scale(w, s))
    if is_zero(out):
        return u
    return out


def _transported_frames(K: StickKnot, normals, orientation: int):
    """Per-ring frames (u, w) with the closing twist spread over all rings.

    ``orientation`` flips w, which flips the handedness of the corner
    labelling around the rings; the construction retries with the opposite
    handedness when the prism certificates reject the first one.
    """
    k = K.k
    us = []
    u = _initial_direction(normals[0])
    for i in range(k):
        if i > 0:
            u = reduce_direction(_project_to_plane(u, normals[i]))
            if is_zero(u):
                u = _initial_direction(normals[i])
        us.append(u)
    closing = _project_to_plane(us[-1], normals[0])
    if is_zero(closing):
        closing = us[0]
    w0 = _balanced_cross(normals[0], us[0])
    theta = _angle_in_plane(closing, us[0], w0)
    frames = []
    for i in range(k):
        base_u = approx_unit(us[i], 30)
        w = _balanced_cross(normals[i], base_u)
        ui = _rotate_in_plane(base_u, w, theta * i / k) if theta else base_u
        wi = _balanced_cross(normals[i], ui)
        if orientation < 0:
            wi = scale(wi, -1)
        frames.append((ui, wi))
    return frames


def _balanced_cross(n: Vec, u: Vec) -> Vec:
    """cross(n, u) rescaled to roughly the length of u, keeping the frame
    isotropic for the corner parametrization."""
    w = cross(n, u)
    return scale(w, sqrt_floor(norm2(u) / norm2(w), 30))


def _conic_second_point(A, B, base, slope):
    """Second rational point of {A x^2 + B y^2 = r^2} on the line through
    ``base`` with rational ``slope`` (r^2 implied by the base point)."""
    a, b = base
    t = -2 * (A * a + B * b * slope) / (A + B * slope * slope)
    return (a + t, b + slope * t)


def _ring_points(center: Vec, frame, eps: ExactRadius):
    """Three near-equilateral points on the exact circle of squared radius
    <= eps.sq around ``center`` in the plane spanned by the frame.

    One rational point on the circle is easy (pick both frame coefficients
    freely); chords of rational slope through it then give rational points
    near any target angle.  An acute triangle keeps every prism side away
    from the circle's diameter planes, which the support certificates need.
    """
    u, w = frame
    A, B = norm2(u), norm2(w)
    a = sqrt_floor(eps.sq / (2 * A), 40)
    b = sqrt_floor(eps.sq / (2 * B), 40)
    if a == 0 or b == 0:
        raise EpsilonTooLarge("radius too small for rational corner parameters")
    while a * a * A + b * b * B > eps.sq:
        a /= 2
        b /= 2
    rho_sq = a * a * A + b * b * B
    fA, fB, fr = float(A), float(B), float(rho_sq)
    base = (a, b)  # roughly 45 degrees in the normalized frame
    params = []
    for target_deg in (90.0, 210.0, 330.0):
        phi = math.radians(target_deg)
        alpha_t = math.sqrt(fr / fA) * math.cos(phi)
        beta_t = math.sqrt(fr / fB) * math.sin(phi)
        scale_a = math.sqrt(fr / fA)
        denom = alpha_t - float(a)
        nudge = 0.0
        for _ in range(8):
            if abs(denom) > 1e-6 * scale_a:
                slope = Fraction(round((beta_t - float(b)) / denom * 2 ** 20 + nudge), 2 ** 20)
                pt = _conic_second_point(A, B, base, slope)
                if pt != base and pt not in params:
                    params.append(pt)
                    break
            nudge += 7.0
            denom += 0.01 * scale_a
        else:
            raise EpsilonTooLarge("could not place ring corner")
    pts = []
    for alpha, beta in params:
        assert alpha * alpha * A + beta * beta * B == rho_sq
        pts.append(add(center, add(scale(u, alpha), scale(w, beta))))
    if len(set(pts)) != 3 or collinear(*pts):
        raise EpsilonTooLarge("degenerate ring corners")
    angles = sorted(math.atan2(float(be) * math.sqrt(fB), float(al) * math.sqrt(fA))
                    for al, be in params)
    gaps = [angles[1] - angles[0], angles[2] - angles[1],
            2 * math.pi - (angles[2] - angles[0])]
    if min(gaps) < math.pi / 6:
        raise EpsilonTooLarge("ring corners too close together")
    return tuple(pts), rho_sq


def _prism_faces(coords, k):
    """Mantle triangles for every prism, certified against the hull of its
    six points.

    The paper's cylinders are convex-hull boundaries minus the two ring
    caps, so the diagonal of each side quad is dictated by the hull.  The
    grid diagonal (toward the lower-indexed ring vertex) is preferred, and
    taken whenever its two triangles lie in supporting planes; otherwise
    the opposite diagonal is certified the same way.  Returns (faces, None)
    or (None, reason).
    """
    faces = []
    for r in range(k):
        s = (r + 1) % k
        labels = [3 * r + 1, 3 * r + 2, 3 * r + 3, 3 * s + 1, 3 * s + 2, 3 * s + 3]
        pts = [coords[x] for x in labels]
        for i in range(6):
            if not is_hull_vertex(pts, i):
                return None, f"ring point {labels[i]} inside prism hull {r}"
        cap_a = (pts[0], pts[1], pts[2])
        cap_b = (pts[3], pts[4], pts[5])
        if not plane_supports(pts, cap_a) or not plane_supports(pts, cap_b):
            return None, f"ring triangle of prism {r} not a hull face"
        a = labels[:3]
        b = labels[3:]
        for i in range(3):
            j = (i + 1) % 3
            placed = False
            for diag in (((a[i], a[j], b[i]), (a[j], b[j], b[i])),
                         ((a[i], a[j], b[j]), (a[i], b[j], b[i]))):
                tris = [tuple(coords[x] for x in t) for t in diag]
                if all(plane_supports(pts, t) for t in tris):
                    faces.extend(tuple(sorted(t)) for t in diag)
                    placed = True
                    break
            if not placed:
                return None, f"side quad {a[i]},{a[j]} of prism {r} has no hull diagonal"
    return faces, None


def tube_construction(K: StickKnot, eps) -> Mesh:
    """Knotted polyhedral torus with 3k vertices around K.

    Rings of three vertices on exact circles in the (near-bisector) ring
    planes, joined by the hull mantles of consecutive ring pairs; the caps
    are the removed ring triangles.  Raises EpsilonTooLarge when the radius
    does not certify.
    """
    eps = _as_radius(eps)
    k = K.k
    normals = _ring_planes(K)
    last_reason = None
    for orientation in (1, -1):
        frames = _transported_frames(K, normals, orientation)
        coords = {}
        radii = []
        for i in range(k):
            pts, rho_sq = _ring_points(K.vertices[i], frames[i], eps)
            radii.append(rho_sq)
            for j in range(3):
                coords[3 * i + 1 + j] = pts[j]
        faces, reason = _prism_faces(coords, k)
        if faces is None:
            last_reason = reason
            continue
        try:
            complex_ = SimplicialTorus(faces)
        except PolytorusError as exc:
            last_reason = f"mantle not a torus: {exc}"
            continue
        mesh = Mesh(coords, complex_, {
            "kind": "tube",
            "knot": K,
            "epsilon_sq": eps.sq,
            "ring_radius_sq": radii,
            "ring_normals": normals,
            "meridian": ring_cycle(k),
            "grid_diagonals": complex_.faces == tube_complex(k).faces,
        })
        report = verify_embedding(mesh)
        if report.ok:
            return mesh
        last_reason = f"self-intersection: {report.witness}"
    raise EpsilonTooLarge(last_reason)


def choose_epsilon(K: StickKnot, verify: bool = True) -> ExactRadius:
    """Radius bound (1/4 of the polygon clearance), then halved until the
    tube construction verifies.  The pre-verification bound is exactly
    covariant under rational scaling of K."""
    if not K.is_general_position():
        raise DegenerateKnot("knot vertices not in general position")
    clearance_sq = K.min_clearance_sq()
    eps = ExactRadius(clearance_sq / 16)
    if not verify:
        return eps
    for _ in range(MAX_EPS_HALVINGS):
        try:
            tube_construction(K, eps)
            return eps
        except EpsilonTooLarge:
            eps = eps.halved()
    raise EpsilonTooLarge("no radius certified after repeated halving")


# -- tube analysis ----------------------------------------------------------------


def core_curve(mesh: Mesh) -> StickKnot:
    """Recover the source knot as the exact ring circumcenters."""
    prov = mesh.provenance
    if prov.get("kind") not in ("tube", "complement"):
        raise MissingProvenance("tube")
    k = prov["knot"].k
    centers = []
    for r in range(k):
        p1, p2, p3 = (mesh.coords[3 * r + 1 + j] for j in range(3))
        centers.append(_circumcenter(p1, p2, p3))
    return StickKnot(centers)


def _circumcenter(a: Vec, b: Vec, c: Vec) -> Vec:
    """Point in the plane of a,b,c equidistant from all three (exact)."""
    ab = sub(b, a)
    ac = sub(c, a)
    n = cross(ab, ac)
    # solve: x = a + s*ab + t*ac with |x-a|^2 = |x-b|^2 = |x-c|^2
    m11, m12 = norm2(ab), dot(ab, ac)
    m22 = norm2(ac)
    r1 = m11 / 2
    r2 = m22 / 2
    det = m11 * m22 - m12 * m12
    s = (r1 * m22 - r2 * m12) / det
    t = (m11 * r2 - m12 * r1) / det
    return add(a, add(scale(ab, s), scale(ac, t)))


def classify_cycle_in_tube(mesh: Mesh, C: Cycle, certificate: bool = True):
    """'meridian' or 'non-meridian', by homology class against the recorded
    meridian; optionally with a linking-number certificate (the geometric
    cycle links the core once exactly for meridian classes)."""
    prov = mesh.provenance
    if "meridian" not in prov:
        raise MissingProvenance("meridian")
    T = mesh.complex
    basis = homology_basis(T)
    sig = cycle_signature(T, basis, C)
    if sig.is_zero():
        raise SeparatingCycle(C.vertices)
    msig = cycle_signature(T, basis, prov["meridian"])
    meridian = sig.proportional_to(msig)
    cert = {}
    if certificate:
        core = core_curve(mesh)
        cert["linking_with_core"] = linking_number(mesh.cycle_points(C), list(core.vertices))
    return ("meridian" if meridian else "non-meridian"), cert


# -- complement construction -------------------------------------------------------


def complement_construction(K: StickKnot) -> Mesh:
    """Torus of complement knot type with 3k+4 vertices: the tube with one
    subdivided hull triangle, glued to an enclosing octahedron boundary."""
    eps = choose_epsilon(K)
    last = None
    for _ in range(MAX_EPS_HALVINGS):
        try:
            tube = tube_construction(K, eps)
            return _build_complement(K, tube, eps)
        except (EnclosureFailure, EpsilonTooLarge) as exc:
            last = exc
            eps = eps.halved()
    raise EnclosureFailure(f"complement failed after radius halvings ({last})")


def _build_complement(K: StickKnot, tube: Mesh, eps: ExactRadius) -> Mesh:
    k = K.k
    n_tube = 3 * k
    all_pts = [tube.coords[i] for i in range(1, n_tube + 1)]

    # hull vertex of the knot: the lexicographic minimum is always extreme
    i_star = min(range(k), key=lambda i: K.vertices[i])
    ring = [3 * i_star + 1, 3 * i_star + 2, 3 * i_star + 3]
    choice = None
    for v1, v2 in ((ring[0], ring[1]), (ring[0], ring[2]), (ring[1], ring[2])):
        plane_n = _strict_edge_support(all_pts, v1 - 1, v2 - 1)
        if plane_n is not None:
            choice = (v1, v2, plane_n)
            break
    if choice is None:
        raise EnclosureFailure("no ring edge of the hull vertex lies on the hull")
    v1, v2, plane_n = choice

    p1, p2 = tube.coords[v1], tube.coords[v2]
    c = dot(plane_n, p1)
    m = scale(add(p1, p2), Fraction(1, 2))

    # pick the mantle face at the edge whose outward lift meets the
    # supporting plane: y sits over that face close to the edge, *in* the
    # supporting plane, so v1-v2-y is in convex position by construction
    y_label = n_tube + 1
    sub_mesh = None
    face_ids = tube.complex.edge_faces[(min(v1, v2), max(v1, v2))]
    for fi in sorted(face_ids, key=lambda i: tube.complex.faces[i]):
        f_old = tube.complex.faces[fi]
        w = next(x for x in f_old if x not in (v1, v2))
        pw = tube.coords[w]
        n_f = cross(sub(p2, p1), sub(pw, p1))
        if dot(n_f, plane_n) < 0:
            n_f = scale(n_f, -1)
        denom = dot(plane_n, n_f)
        slope = dot(plane_n, sub(pw, m))
        if denom == 0 or slope >= 0:
            continue
        t = Fraction(1, 4)
        for _ in range(60):
            h = -t * slope / denom
            y = add(m, add(scale(sub(pw, m), t), scale(n_f, h)))
            assert dot(plane_n, y) == c
            new_faces = [f for f in tube.complex.faces if f != f_old]
            new_faces += [tuple(sorted(tr)) for tr in
                          ((v1, v2, y_label), (v1, y_label, w), (v2, y_label, w))]
            coords = dict(tube.coords)
            coords[y_label] = y
            try:
                torus2 = SimplicialTorus(new_faces)
            except PolytorusError as exc:
                raise EnclosureFailure(f"subdivision broke the torus: {exc}")
            cand = Mesh(coords, torus2, {})
            if verify_embedding(cand).ok:
                sub_mesh = (cand, y, w)
                break
            t /= 2
        if sub_mesh is not None:
            break
    if sub_mesh is None:
        raise EpsilonTooLarge("no lift of the subdivision vertex certified")
    cand, y, w = sub_mesh

    octa = _enclosing_octahedron(cand, (v1, v2, y_label), plane_n, c)
    z_labels = [n_tube + 2, n_tube + 3, n_tube + 4]
    coords = dict(cand.coords)
    for lbl, pt in zip(z_labels, octa["z_points"]):
        coords[lbl] = pt
    top = tuple(sorted((v1, v2, y_label)))
    faces = [f for f in cand.complex.faces if f != top]
    corner_label = {0: v1, 1: v2, 2: y_label, 3: z_labels[0], 4: z_labels[1], 5: z_labels[2]}
    for tri in octa["facets"]:
        lbl = tuple(sorted(corner_label[i] for i in tri))
        if lbl == top:
            continue
        faces.append(lbl)
    torus3 = SimplicialTorus(faces)
    if torus3.n_vertices != 3 * k + 4 or len(torus3.faces) != 2 * (3 * k + 4):
        raise EnclosureFailure("complement face count off")
    mesh = Mesh(coords, torus3, {
        "kind": "complement",
        "knot": K,
        "epsilon_sq": eps.sq,
        "meridian": ring_cycle(k),
        "glued_edge": (v1, v2),
    })
    report = verify_embedding(mesh)
    if not report.ok:
        raise EpsilonTooLarge(f"complement self-intersects: {report.witness}")
    return mesh


def _strict_edge_support(points, i, j):
    """Outward normal of a plane through edge (i, j) with every other point
    strictly below, or None.  Interior directions of the edge's normal cone
    are found by averaging two distinct weakly-supporting normals."""
    a, b = points[i], points[j]
    normals = []
    for k in range(len(points)):
        if k in (i, j):
            continue
        n = cross(sub(b, a), sub(points[k], a))
        if is_zero(n):
            continue
        sides = [dot(n, sub(p, a)) for idx, p in enumerate(points) if idx not in (i, j)]
        if all(s <= 0 for s in sides):
            normals.append(n)
        elif all(s >= 0 for s in sides):
            normals.append(scale(n, -1))
    # dedup by direction
    distinct = []
    for n in normals:
        if not any(is_zero(cross(n, m)) and dot(n, m) > 0 for m in distinct):
            distinct.append(n)
    candidates = []
    if len(distinct) >= 2:
        for second in distinct[1:]:
            candidates.append(add(approx_unit(distinct[0]), approx_unit(second)))
    candidates.extend(distinct)
    for n in map(reduce_direction, candidates):
        if is_zero(n):
            continue
        sides = [dot(n, sub(p, a)) for idx, p in enumerate(points) if idx not in (i, j)]
        if all(s < 0 for s in sides):
            return n
    return None


def _enclosing_octahedron(mesh: Mesh, top_labels, plane_n, c):
    """Large triangle beyond the mesh joined to the lifted triangle; the six
    points must span a combinatorial octahedron enclosing the mesh."""
    pts = list(mesh.coords.values())
    top = [mesh.coords[v] for v in top_labels]
    d = plane_n  # outward: mesh strictly below (dot < c)
    lows = [dot(d, p) for p in pts]
    spread = max(lows) - min(lows) + 1
    c_far = min(lows) - spread
    d = reduce_direction(d)
    e1 = reduce_direction(_initial_direction(d))
    e2 = reduce_direction(cross(d, e1))
    centroid = scale(pts[0], 0)
    for p in pts:
        centroid = add(centroid, p)
    centroid = scale(centroid, Fraction(1, len(pts)))
    c0 = add(centroid, scale(d, (c_far - dot(d, centroid)) / norm2(d)))
    # comparable lateral scales for the two frame vectors
    s1 = sqrt_floor(spread * spread / norm2(e1), 30) or Fraction(1)
    s2 = sqrt_floor(spread * spread / norm2(e2), 30) or Fraction(1)
    R = Fraction(4)
    for _ in range(40):
        z = [add(c0, scale(e1, 2 * R * s1)),
             add(c0, add(scale(e1, -R * s1), scale(e2, R * s2))),
             add(c0, add(scale(e1, -R * s1), scale(e2, -R * s2)))]
        six = top + z
        facets = _hull_facets(six)
        if facets is not None and len(facets) == 8 \
                and frozenset((0, 1, 2)) in facets and frozenset((3, 4, 5)) in facets:
            if _encloses(six, facets, pts, top):
                return {"z_points": z, "facets": sorted(tuple(sorted(f)) for f in facets)}
        R *= 2
    raise EnclosureFailure("no enclosing octahedron found")


def _hull_facets(points):
    """Facets of a 6-point hull by brute force; None when degenerate."""
    n = len(points)
    facets = set()
    for tri in combinations(range(n), 3):
        a, b, c = (points[i] for i in tri)
        nrm = cross(sub(b, a), sub(c, a))
        if is_zero(nrm):
            continue
        sides = []
        for i in range(n):
            if i in tri:
                continue
            s = dot(nrm, sub(points[i], a))
            sides.append((s > 0) - (s < 0))
        if 0 in sides:
            return None  # four coplanar points: jiggle the scale
        if all(s > 0 for s in sides) or all(s < 0 for s in sides):
            facets.add(frozenset(tri))
    return facets


def _encloses(six, facets, pts, top):
    """All mesh points strictly inside every facet plane except the three
    glued corners on their own facets."""
    for tri in facets:
        idx = sorted(tri)
        a, b, c = (six[i] for i in idx)
        nrm = cross(sub(b, a), sub(c, a))
        inner = None
        for i in range(6):
            if i in tri:
                continue
            s = dot(nrm, sub(six[i], a))
            inner = (s > 0) - (s < 0)
            break
        for p in pts:
            if any(p == t for t in top):
                continue
            s = dot(nrm, sub(p, a))
            if ((s > 0) - (s < 0)) != inner:
                return False
        for t in top:
            corner = six.index(t)
            if corner in tri:
                continue
            s = dot(nrm, sub(t, a))
            if ((s > 0) - (s < 0)) != inner:
                return False
    return True


# -- cyclic polytope realization -----------------------------------------------------


def gale_evenness(subset, n: int) -> bool:
    """Facet test for the cyclic 4-polytope on n vertices: every two
    non-members are separated by an even number of members."""
    s = set(subset)
    if len(s) != 4:
        return False
    comp = [x for x in range(1, n + 1) if x not in s]
    for i in range(len(comp)):
        for j in range(i + 1, len(comp)):
            between = sum(1 for x in s if comp[i] < x < comp[j])
            if between % 2:
                return False
    return True


def cyclic_facets(n: int):
    """All facets of C_4(n): two disjoint circularly-adjacent pairs."""
    out = []
    for i in range(1, n + 1):
        i2 = i % n + 1
        for j in range(1, n + 1):
            j2 = j % n + 1
            if len({i, i2, j, j2}) == 4 and (i, i2) < (j, j2):
                out.append(tuple(sorted((i, i2, j, j2))))
    return sorted(set(out))


def _moment_point(t: int):
    ft = Fraction(t)
    return (ft, ft ** 2, ft ** 3, ft ** 4)


def _cross4(a, b, c):
    """Vector orthogonal to three 4-vectors (generalized cross product)."""
    out = []
    for i in range(4):
        cols = [j for j in range(4) if j != i]
        m = [[a[cols[0]], a[cols[1]], a[cols[2]]],
             [b[cols[0]], b[cols[1]], b[cols[2]]],
             [c[cols[0]], c[cols[1]], c[cols[2]]]]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        out.append(det if i % 2 == 0 else -det)
    return tuple(out)


def _dot4(a, b):
    return sum(x * y for x, y in zip(a, b))


def cyclic_polytope_realization(k: int) -> Mesh:
    """Embed the minimal 3xk torus in the boundary of C_4(3k-2) and project
    it to rational 3D coordinates through one facet (Schlegel diagram)."""
    T = minimal_torus_3k(k)
    n = 3 * k - 2
    seq = hamiltonian_sequence(k)
    pos = {v: i + 1 for i, v in enumerate(seq)}

    # every torus face must lie in a facet of the cyclic polytope
    for face in T.faces:
        S = sorted(pos[v] for v in face)
        if not any(gale_evenness(sorted(set(S + [x])), n)
                   for x in range(1, n + 1) if x not in S):
            raise FaceNotInPolytope(face)

    pts4 = {v: _moment_point(pos[v]) for v in pos}
    facet_pos = (1, 2, 3, 4)
    assert gale_evenness(facet_pos, n)
    fp = [_moment_point(t) for t in facet_pos]
    N = _cross4(tuple(x - y for x, y in zip(fp[1], fp[0])),
                tuple(x - y for x, y in zip(fp[2], fp[0])),
                tuple(x - y for x, y in zip(fp[3], fp[0])))
    c = _dot4(N, fp[0])
    inside = [v for v in pts4 if pos[v] not in facet_pos]
    s0 = _dot4(N, pts4[inside[0]]) - c
    if s0 > 0:
        N = tuple(-x for x in N)
        c = -c
    if any(_dot4(N, pts4[v]) - c >= 0 for v in inside):
        raise PolytorusError("facet hyperplane did not support the polytope")

    other_facets = [f for f in cyclic_facets(n) if tuple(f) != facet_pos]
    centroid4 = tuple(sum(_moment_point(t)[i] for t in range(1, n + 1)) / n
                      for i in range(4))
    delta = Fraction(1)
    viewpoint = None
    for _ in range(80):
        x = tuple(f + delta * nn for f, nn in
                  zip([sum(p[i] for p in fp) / 4 for i in range(4)], N))
        if _dot4(N, x) <= c:
            delta *= 2
            continue
        ok = True
        for g in other_facets:
            gp = [_moment_point(t) for t in g]
            Ng = _cross4(tuple(p - q for p, q in zip(gp[1], gp[0])),
                         tuple(p - q for p, q in zip(gp[2], gp[0])),
                         tuple(p - q for p, q in zip(gp[3], gp[0])))
            cg = _dot4(Ng, gp[0])
            sc = _dot4(Ng, centroid4) - cg
            sx = _dot4(Ng, x) - cg
            if sc == 0 or (sc > 0) != (sx > 0):
                ok = False
                break
        if ok:
            viewpoint = x
            break
        delta /= 4
    if viewpoint is None:
        raise PolytorusError("no Schlegel viewpoint certified")

    # project through the facet hyperplane, then express in a 3D frame
    def project(p4):
        t = (c - _dot4(N, viewpoint)) / (_dot4(N, p4) - _dot4(N, viewpoint))
        return tuple(vx + t * (px - vx) for vx, px in zip(viewpoint, p4))

    basis = [tuple(p - q for p, q in zip(fp[i], fp[0])) for i in (1, 2, 3)]
    rows = _independent_rows(basis)

    def to3d(q4):
        rhs = [q4[r] - fp[0][r] for r in rows]
        m = [[basis[j][r] for j in range(3)] for r in rows]
        sol = _solve3(m, rhs)
        return tuple(sol)

    coords = {}
    for v in pos:
        q4 = pts4[v] if pos[v] in facet_pos else project(pts4[v])
        coords[v] = to3d(q4)

    mesh = Mesh(coords, T, {
        "kind": "cyclic",
        "k": k,
        "positions": pos,
        "facet": facet_pos,
    })
    res = stick_number_and_type(T)
    mesh.provenance["core_determinant"] = polygon_determinant(mesh.cycle_points(res.witness_s))
    mesh.provenance["meridian_determinant"] = polygon_determinant(mesh.cycle_points(res.witness_m))
    report = verify_embedding(mesh)
    if not report.ok:
        raise PolytorusError(f"Schlegel projection self-intersects: {report.witness}")
    return mesh


def _independent_rows(basis):
    for rows in combinations(range(4), 3):
        m = [[basis[j][r] for j in range(3)] for r in rows]
        if _det3(m) != 0:
            return rows
    raise PolytorusError("degenerate facet frame")


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _solve3(m, rhs):
    d = _det3(m)
    out = []
    for col in range(3):
        mm = [row[:] for row in m]
        for r in range(3):
            mm[r][col] = rhs[r]
        out.append(Fraction(_det3(mm), 1) / d)
    return out


# -- mesh I/O --------------------------------------------------------------------


def export_mesh(mesh: Mesh, path, fmt: str = "off", precision: int = 12):
    fmt = fmt.lower()
    if fmt not in ("off", "obj"):
        raise ValueError(f"unsupported format {fmt!r}")
    n = mesh.complex.n_vertices
    lines = []
    if fmt == "off":
        lines.append("OFF")
        lines.append(f"{n} {len(mesh.complex.faces)} 0")
        for v in range(1, n + 1):
            lines.append(" ".join(rational_to_decimal(cc, precision)
                                  for cc in mesh.coords[v]))
        for a, b, c in mesh.complex.faces:
            lines.append(f"3 {a - 1} {b - 1} {c - 1}")
    else:
        for v in range(1, n + 1):
            lines.append("v " + " ".join(rational_to_decimal(cc, precision)
                                         for cc in mesh.coords[v]))
        for a, b, c in mesh.complex.faces:
            lines.append(f"f {a} {b} {c}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def import_off(path) -> Mesh:
    with open(path, "r", encoding="utf-8") as fh:
        tokens = []
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens.append((line_no, line))
    if not tokens or tokens[0][1] != "OFF":
        raise ParseError(tokens[0][0] if tokens else 0, "missing OFF header")
    counts = tokens[1][1].split()
    nv, nf = int(counts[0]), int(counts[1])
    coords = {}
    for i in range(nv):
        line_no, line = tokens[2 + i]
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(line_no, line)
        coords[i + 1] = tuple(Fraction(p) for p in parts)
    faces = []
    for i in range(nf):
        line_no, line = tokens[2 + nv + i]
        parts = line.split()
        if len(parts) != 4 or parts[0] != "3":
            raise ParseError(line_no, line)
        faces.append(tuple(int(p) + 1 for p in parts[1:]))
    return Mesh(coords, SimplicialTorus(faces), {"kind": "off-import"})
