"""Exact rational 3D geometry.

Points are triples of ``fractions.Fraction``; every predicate here is
decision-exact.  Square roots never appear: distances are compared through
their squares, "unit" vectors are replaced by rational approximations whose
defining inequalities (transversality, containment) are then checked
exactly, and circle membership is expressed as an equation between squared
norms.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Vec = tuple[Fraction, Fraction, Fraction]

ZERO3 = (Fraction(0), Fraction(0), Fraction(0))


def vec(x, y, z) -> Vec:
    return (Fraction(x), Fraction(y), Fraction(z))


def add(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def scale(a: Vec, s) -> Vec:
    s = Fraction(s)
    return (a[0] * s, a[1] * s, a[2] * s)


def dot(a: Vec, b: Vec) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Vec, b: Vec) -> Vec:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def norm2(a: Vec) -> Fraction:
    return dot(a, a)


def dist2(a: Vec, b: Vec) -> Fraction:
    return norm2(sub(a, b))


def is_zero(a: Vec) -> bool:
    return a[0] == 0 and a[1] == 0 and a[2] == 0


def collinear(a: Vec, b: Vec, c: Vec) -> bool:
    return is_zero(cross(sub(b, a), sub(c, a)))


def orient3d(a: Vec, b: Vec, c: Vec, d: Vec) -> int:
    """Sign of det[b-a; c-a; d-a]: +1, 0, or -1."""
    v = dot(cross(sub(b, a), sub(c, a)), sub(d, a))
    return (v > 0) - (v < 0)


def coplanar(a: Vec, b: Vec, c: Vec, d: Vec) -> bool:
    return orient3d(a, b, c, d) == 0


# -- rational approximations -------------------------------------------------


def sqrt_floor(x: Fraction, bits: int = 64) -> Fraction:
    """Rational lower approximation of sqrt(x), ~bits of *relative* precision."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    x = Fraction(x)
    e = 0
    while x < 1:
        x *= 4
        e -= 1
    while x >= 4:
        x /= 4
        e += 1
    scaled = (x.numerator << (2 * bits)) // x.denominator
    root = Fraction(isqrt(scaled), 1 << bits)
    return root * Fraction(2) ** e


def approx_unit(a: Vec, bits: int = 48) -> Vec:
    """Rational vector close to a/|a| (not exactly unit length)."""
    n2 = norm2(a)
    if n2 == 0:
        raise ValueError("cannot normalize the zero vector")
    inv = sqrt_floor(Fraction(1) / n2, bits)
    return scale(a, inv)


def reduce_direction(a: Vec) -> Vec:
    """Shortest integer vector with the same direction (positive scaling)."""
    from math import gcd

    if is_zero(a):
        return a
    lcm = 1
    for c in a:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Fraction(v // g) for v in ints)


# -- distances between simplices (squared, exact) -------------------------------


def point_segment_dist2(p: Vec, a: Vec, b: Vec) -> Fraction:
    ab = sub(b, a)
    denom = norm2(ab)
    if denom == 0:
        return dist2(p, a)
    t = dot(sub(p, a), ab) / denom
    t = max(Fraction(0), min(Fraction(1), t))
    return dist2(p, add(a, scale(ab, t)))


def segment_segment_dist2(p1: Vec, p2: Vec, q1: Vec, q2: Vec) -> Fraction:
    """Exact squared distance between two closed segments."""
    d1 = sub(p2, p1)
    d2 = sub(q2, q1)
    r = sub(p1, q1)
    a = norm2(d1)
    e = norm2(d2)
    b = dot(d1, d2)
    c = dot(d1, r)
    f = dot(d2, r)
    best = None

    def consider(s, t):
        nonlocal best
        s = max(Fraction(0), min(Fraction(1), s))
        t = max(Fraction(0), min(Fraction(1), t))
        v = dist2(add(p1, scale(d1, s)), add(q1, scale(d2, t)))
        if best is None or v < best:
            best = v

    denom = a * e - b * b
    if denom != 0:
        s = (b * f - c * e) / denom
        t = (b * s + f) / e if e != 0 else Fraction(0)
        consider(s, t)
    # boundary candidates: clamp each parameter in turn
    if a != 0:
        consider(-c / a, Fraction(0))                     # t = 0
        consider((b - c) / a, Fraction(1))                # t = 1
    else:
        consider(Fraction(0), Fraction(0))
        consider(Fraction(0), Fraction(1))
    if e != 0:
        consider(Fraction(0), f / e)                      # s = 0
        consider(Fraction(1), (b + f) / e)                # s = 1
    else:
        consider(Fraction(0), Fraction(0))
        consider(Fraction(1), Fraction(0))
    return best


# -- 2D helpers (exact, used after projecting away a coordinate) -----------------


def drop_axis(p: Vec, axis: int):
    return tuple(p[i] for i in range(3) if i != axis)


def dominant_axis(n: Vec) -> int:
    absn = [abs(n[0]), abs(n[1]), abs(n[2])]
    return absn.index(max(absn))


def orient2d(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def point_on_segment_2d(p, a, b) -> bool:
    """p on the closed segment ab (collinearity + box)."""
    if orient2d(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect_2d(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    o1 = orient2d(a, b, c)
    o2 = orient2d(a, b, d)
    o3 = orient2d(c, d, a)
    o4 = orient2d(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (point_on_segment_2d(c, a, b) or point_on_segment_2d(d, a, b)
            or point_on_segment_2d(a, c, d) or point_on_segment_2d(b, c, d))


def point_in_triangle_2d(p, a, b, c, strict=False) -> bool:
    o1 = orient2d(a, b, p)
    o2 = orient2d(b, c, p)
    o3 = orient2d(c, a, p)
    if strict:
        return (o1 > 0 and o2 > 0 and o3 > 0) or (o1 < 0 and o2 < 0 and o3 < 0)
    return (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0)


# -- triangle/triangle intersection beyond shared simplices -----------------------


def triangles_conflict(t1, t2, shared):
    """Whether two mesh triangles touch outside their shared simplex.

    ``shared`` is the tuple of common corner points (length 0, 1 or 2).
    Returns None when the contact is exactly the shared simplex (or empty),
    else a short description of the violation.
    """
    n1 = cross(sub(t1[1], t1[0]), sub(t1[2], t1[0]))
    n2 = cross(sub(t2[1], t2[0]), sub(t2[2], t2[0]))
    s2 = [dot(n1, sub(q, t1[0])) for q in t2]
    s1 = [dot(n2, sub(p, t2[0])) for p in t1]

    if all(v == 0 for v in s2):
        return _coplanar_conflict(t1, t2, shared, n1)
    if all(v > 0 for v in s2) or all(v < 0 for v in s2):
        return None
    if all(v > 0 for v in s1) or all(v < 0 for v in s1):
        return None

    if len(shared) == 2:
        # non-coplanar triangles sharing an edge meet exactly in that edge
        return None

    d = cross(n1, n2)
    i1 = _triangle_line_interval(t1, n2, dot(n2, t2[0]), d)
    i2 = _triangle_line_interval(t2, n1, dot(n1, t1[0]), d)
    if i1 is None or i2 is None:
        return None
    lo = max(i1[0], i2[0])
    hi = min(i1[1], i2[1])
    if lo > hi:
        return None
    if len(shared) == 1:
        v = shared[0]
        # the shared vertex lies on the intersection line; the contact must
        # be exactly that point
        tv = _line_param(v, d)
        if lo == hi == tv:
            return None
        return f"contact interval [{float(lo):.6g},{float(hi):.6g}] beyond shared vertex"
    return f"contact interval [{float(lo):.6g},{float(hi):.6g}] between disjoint faces"


def _line_param(point: Vec, d: Vec) -> Fraction:
    return dot(point, d) / norm2(d)


def _triangle_line_interval(tri, n_other, c_other, d):
    """Parameter interval of tri cut by the plane (n_other . x = c_other),
    measured along direction d (the plane-plane intersection line)."""
    sides = [dot(n_other, p) - c_other for p in tri]
    pts = []
    for i in range(3):
        j = (i + 1) % 3
        si, sj = sides[i], sides[j]
        if si == 0:
            pts.append(tri[i])
        if (si > 0 > sj) or (si < 0 < sj):
            t = si / (si - sj)
            pts.append(add(tri[i], scale(sub(tri[j], tri[i]), t)))
    if not pts:
        return None
    params = [_line_param(p, d) for p in pts]
    return (min(params), max(params))


def _coplanar_conflict(t1, t2, shared, n):
    axis = dominant_axis(n)
    a1 = [drop_axis(p, axis) for p in t1]
    a2 = [drop_axis(p, axis) for p in t2]
    sh = [drop_axis(p, axis) for p in shared]

    if len(shared) == 2:
        e1, e2 = sh
        apex1 = next(p for p in a1 if p not in sh)
        apex2 = next(p for p in a2 if p not in sh)
        o1 = orient2d(e1, e2, apex1)
        o2 = orient2d(e1, e2, apex2)
        if o1 == 0 or o2 == 0:
            return "degenerate coplanar neighbor"
        if o1 == o2:
            return "coplanar faces sharing an edge overlap"
        return None

    # shared vertex or nothing: any segment contact or containment beyond
    # the shared point is a violation
    for i in range(3):
        for j in range(3):
            p1, p2 = a1[i], a1[(i + 1) % 3]
            q1, q2 = a2[j], a2[(j + 1) % 3]
            if segments_intersect_2d(p1, p2, q1, q2):
                if len(shared) == 1 and _only_touch_at(p1, p2, q1, q2, sh[0]):
                    continue
                return "coplanar segments cross"
    for p in a1:
        if (not sh or p != sh[0]) and point_in_triangle_2d(p, *a2, strict=True):
            return "coplanar vertex inside other face"
    for q in a2:
        if (not sh or q != sh[0]) and point_in_triangle_2d(q, *a1, strict=True):
            return "coplanar vertex inside other face"
    return None


def _only_touch_at(p1, p2, q1, q2, v):
    """The two segments meet exactly in the single point v."""
    if v not in (p1, p2) or v not in (q1, q2):
        return False
    pa = p2 if p1 == v else p1
    qa = q2 if q1 == v else q1
    # the segments share endpoint v; they overlap beyond v only if collinear
    # with the other endpoints on the same side
    if orient2d(v, pa, qa) != 0:
        return True
    return dot2_sign(v, pa, qa) <= 0


def dot2_sign(v, a, b) -> int:
    d = (a[0] - v[0]) * (b[0] - v[0]) + (a[1] - v[1]) * (b[1] - v[1])
    return (d > 0) - (d < 0)


# -- small convex-hull certificates ----------------------------------------------


def point_in_segment_3d(x: Vec, a: Vec, b: Vec) -> bool:
    if not collinear(a, b, x):
        return False
    d = sub(b, a)
    t = dot(sub(x, a), d)
    return 0 <= t <= norm2(d)


def point_in_triangle_3d(x: Vec, a: Vec, b: Vec, c: Vec) -> bool:
    n = cross(sub(b, a), sub(c, a))
    if is_zero(n):
        return False
    if dot(n, sub(x, a)) != 0:
        return False
    axis = dominant_axis(n)
    return point_in_triangle_2d(drop_axis(x, axis), drop_axis(a, axis),
                                drop_axis(b, axis), drop_axis(c, axis))


def point_in_tetra(x: Vec, a: Vec, b: Vec, c: Vec, d: Vec) -> bool:
    s = orient3d(a, b, c, d)
    if s == 0:
        return False
    checks = (orient3d(x, b, c, d), orient3d(a, x, c, d),
              orient3d(a, b, x, d), orient3d(a, b, c, x))
    return all(v == 0 or v == s for v in checks)


def point_in_hull(x: Vec, points) -> bool:
    """x in conv(points), |points| small (Caratheodory over subsets)."""
    from itertools import combinations

    pts = list(points)
    for p in pts:
        if p == x:
            return True
    for a, b in combinations(pts, 2):
        if point_in_segment_3d(x, a, b):
            return True
    for a, b, c in combinations(pts, 3):
        if point_in_triangle_3d(x, a, b, c):
            return True
    for a, b, c, d in combinations(pts, 4):
        if point_in_tetra(x, a, b, c, d):
            return True
    return False


def is_hull_vertex(points, i: int) -> bool:
    others = [p for j, p in enumerate(points) if j != i]
    return not point_in_hull(points[i], others)


def plane_supports(points, tri) -> bool:
    """The plane of ``tri`` has every point weakly on one side."""
    a, b, c = tri
    n = cross(sub(b, a), sub(c, a))
    if is_zero(n):
        return False
    lo = hi = 0
    for p in points:
        s = dot(n, sub(p, a))
        sg = (s > 0) - (s < 0)
        lo = min(lo, sg)
        hi = max(hi, sg)
    return lo >= 0 or hi <= 0


# -- convex position ------------------------------------------------------------


def supporting_plane_of_edge(points, i, j):
    """A plane through points[i], points[j] with every point weakly on one
    side, or None.  Certifies that the edge lies on the convex hull."""
    a, b = points[i], points[j]
    for k in range(len(points)):
        if k in (i, j):
            continue
        c = points[k]
        n = cross(sub(b, a), sub(c, a))
        if is_zero(n):
            continue
        lo = hi = 0
        for p in points:
            s = dot(n, sub(p, a))
            lo = min(lo, (s > 0) - (s < 0))
            hi = max(hi, (s > 0) - (s < 0))
        if lo >= 0 or hi <= 0:
            return (n, dot(n, a))
    return None


def strictly_below(plane, p: Vec) -> bool:
    n, c = plane
    return dot(n, p) < c


def parse_rational(token: str) -> Fraction:
    """Parse 'p/q', integer, or decimal literals exactly."""
    token = token.strip()
    if "/" in token:
        num, den = token.split("/")
        return Fraction(int(num), int(den))
    return Fraction(token)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_to_decimal(x: Fraction, digits: int) -> str:
    """Decimal string with ``digits`` places, rounding half away from zero."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaledx2 = x.numerator * 10 ** digits * 2 + x.denominator
    q = scaledx2 // (2 * x.denominator)
    s = str(q).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"
