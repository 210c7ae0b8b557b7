"""Exhaustive isomorph-free enumeration of small torus triangulations.

Two independent generation strategies back each other up:

* strategy A (default): depth-first completion of the lexicographically
  smallest open edge, seeded by the link of a minimum-degree vertex labelled
  (2, 3, ..., d+1), with incremental pseudomanifold bookkeeping (edge
  multiplicities and per-vertex link paths) and first-use label ordering;

* strategy B (cross-check): closes the link of the smallest unfinished
  vertex in all admissible cyclic orders, with only edge-multiplicity
  pruning, and validates every completion with the full surface validator.

Both deduplicate through the canonical form; at the supported sizes the
number of isomorphism classes is tiny compared to the search tree, so
storing the forms costs nothing.  Completions with Euler characteristic 0
that fail the orientation test (Klein bottles) are discarded.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .cycles import stick_number_and_type
from .errors import OutOfRange, PolytorusError
from .generators import minimal_torus_3k
from .surfaces import (
    SimplicialTorus,
    _orient_faces,
    canonical_form,
    automorphism_group,
    is_isomorphic,
    validate_surface,
)

N_MIN, N_MAX = 7, 11

TIME_BUDGET_ENV = "TORUS_TIME_BUDGET_SECS"


class TimeBudgetExceeded(PolytorusError):
    def __init__(self, seconds):
        super().__init__(f"census exceeded the time budget of {seconds}s")


@dataclass(frozen=True)
class CensusRecord:
    """One isomorphism class of torus triangulations."""

    canonical_faces: tuple
    n: int
    m: int
    s: int
    equivelar: bool
    automorphism_order: int

    @property
    def type_str(self) -> str:
        return f"{self.m}x{self.s}"

    def torus(self) -> SimplicialTorus:
        return SimplicialTorus(self.canonical_faces, _skip_validation=True)


class _Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.t0 = time.monotonic()
        self.counter = 0

    def check(self):
        if self.seconds is None:
            return
        self.counter += 1
        if self.counter % 4096 == 0 and time.monotonic() - self.t0 > self.seconds:
            raise TimeBudgetExceeded(self.seconds)


def _env_budget():
    raw = os.environ.get(TIME_BUDGET_ENV)
    return float(raw) if raw else None


# -- strategy A ------------------------------------------------------------------


class _LinkState:
    """Incremental pseudomanifold state for the face DFS.

    Tracks edge multiplicities, per-vertex link paths (through mutual
    "other endpoint" pointers), open path component counts, and closed
    vertices.  A face addition is legal when its three link-edge insertions
    keep every link a disjoint union of paths, closing into a single cycle
    at most once per vertex.
    """

    def __init__(self, n, min_deg):
        self.n = n
        self.min_deg = min_deg
        self.ec = {}            # sorted edge -> 1 or 2
        self.oe = {}            # vertex -> {endpoint -> other endpoint}
        self.ncomp = [0] * (n + 1)
        self.closed = [False] * (n + 1)
        self.deg = [0] * (n + 1)
        self.open_edges = set()
        self.faces = []
        self.faceset = set()
        self.maxlab = 0

    def legal(self, u, v, w):
        """Check face {u,v,w} without mutating.  (u,v) is an open edge."""
        f = tuple(sorted((u, v, w)))
        if f in self.faceset:
            return False
        if self.closed[w]:
            return False
        ec = self.ec
        e_uw = (u, w) if u < w else (w, u)
        e_vw = (v, w) if v < w else (w, v)
        if ec.get(e_uw, 0) == 2 or ec.get(e_vw, 0) == 2:
            return False
        for a, b, c in ((u, v, w), (v, u, w), (w, u, v)):
            # link edge (b, c) at vertex a
            cb = ec.get((a, b) if a < b else (b, a), 0)
            cc = ec.get((a, c) if a < c else (c, a), 0)
            if cb == 1 and cc == 1:
                if self.oe[a].get(b) == c and self.ncomp[a] != 1:
                    return False  # would close a cycle besides open paths
        return True

    def add(self, u, v, w):
        """Apply face {u,v,w}; returns an undo record."""
        f = tuple(sorted((u, v, w)))
        rec = [f, []]
        self.faces.append(f)
        self.faceset.add(f)
        if w > self.maxlab:
            rec.append(self.maxlab)
            self.maxlab = w
        else:
            rec.append(None)
        changes = rec[1]
        for a, b, c in ((u, v, w), (v, u, w), (w, u, v)):
            eb = (a, b) if a < b else (b, a)
            ecn = (a, c) if a < c else (c, a)
            cb = self.ec.get(eb, 0)
            cc = self.ec.get(ecn, 0)
            oea = self.oe.setdefault(a, {})
            if cb == 1 and cc == 1:
                if oea.get(b) == c:
                    changes.append(("close", a))
                    self.ncomp[a] = 0
                    self.closed[a] = True
                else:
                    x, y = oea[b], oea[c]
                    changes.append(("join", a, x, oea.get(x), y, oea.get(y)))
                    oea[x] = y
                    oea[y] = x
                    self.ncomp[a] -= 1
            elif cb == 1:
                x = oea[b]
                changes.append(("extend", a, x, oea.get(x), c, oea.get(c)))
                oea[x] = c
                oea[c] = x
            elif cc == 1:
                x = oea[c]
                changes.append(("extend", a, x, oea.get(x), b, oea.get(b)))
                oea[x] = b
                oea[b] = x
            else:
                changes.append(("new", a, b, oea.get(b), c, oea.get(c)))
                oea[b] = c
                oea[c] = b
                self.ncomp[a] += 1
        for e in ((min(u, v), max(u, v)),
                  (min(u, w), max(u, w)),
                  (min(v, w), max(v, w))):
            cnt = self.ec.get(e, 0) + 1
            self.ec[e] = cnt
            if cnt == 1:
                self.open_edges.add(e)
                self.deg[e[0]] += 1
                self.deg[e[1]] += 1
            else:
                self.open_edges.discard(e)
        return rec

    def undo(self, rec):
        f, changes, old_maxlab = rec
        self.faces.pop()
        self.faceset.discard(f)
        if old_maxlab is not None:
            self.maxlab = old_maxlab
        u, v, w = f
        for e in ((u, v), (u, w), (v, w)):
            cnt = self.ec[e] - 1
            if cnt == 0:
                del self.ec[e]
                self.open_edges.discard(e)
                self.deg[e[0]] -= 1
                self.deg[e[1]] -= 1
            else:
                self.ec[e] = cnt
                self.open_edges.add(e)
        for ch in reversed(changes):
            kind, a = ch[0], ch[1]
            oea = self.oe[a]
            if kind == "close":
                self.ncomp[a] = 1
                self.closed[a] = False
            elif kind == "join":
                _, _, x, old_x, y, old_y = ch
                _restore(oea, x, old_x)
                _restore(oea, y, old_y)
                self.ncomp[a] += 1
            elif kind == "extend":
                _, _, x, old_x, c, old_c = ch
                _restore(oea, x, old_x)
                _restore(oea, c, old_c)
            else:  # new
                _, _, b, old_b, c, old_c = ch
                _restore(oea, b, old_b)
                _restore(oea, c, old_c)
                self.ncomp[a] -= 1


def _restore(d, key, old):
    if old is None:
        d.pop(key, None)
    else:
        d[key] = old


def _generate_strategy_a(n, budget):
    """Yield face lists of all n-vertex torus triangulations (with labeled
    duplicates across symmetric discovery orders)."""
    target_f = 2 * n
    for d in range(3, 7):
        st = _LinkState(n, d)
        seed = [(1, i, i + 1) for i in range(2, d + 1)] + [(1, d + 1, 2)]
        recs = []
        for (a, b, c) in seed:
            # seed faces follow the same legality rules
            if not st.legal(a, b, c):
                raise PolytorusError("illegal seed")
            recs.append(st.add(a, b, c))
        yield from _dfs_a(st, n, target_f, budget)
        for rec in reversed(recs):
            st.undo(rec)


def _dfs_a(st, n, target_f, budget):
    budget.check()
    if not st.open_edges:
        if st.maxlab == n and len(st.faces) == target_f:
            yield list(st.faces)
        return
    nf = len(st.faces)
    if nf >= target_f:
        return
    remaining = target_f - nf
    if len(st.open_edges) > 3 * remaining:
        return
    if n - st.maxlab > remaining:
        return
    u, v = min(st.open_edges)
    hi = min(n, st.maxlab + 1)
    for w in range(2, hi + 1):
        if w == u or w == v:
            continue
        if not st.legal(u, v, w):
            continue
        # min-degree seed rule: no vertex may close below the seed degree
        rec = st.add(u, v, w)
        ok = True
        for a in (u, v, w):
            if st.closed[a] and st.deg[a] < st.min_deg:
                ok = False
                break
        if ok:
            yield from _dfs_a(st, n, target_f, budget)
        st.undo(rec)


# -- strategy B ------------------------------------------------------------------


def _generate_strategy_b(n, budget):
    """Vertex-major generation: close links of vertices 1, 2, ... in turn.

    Control flow is organized around whole vertex links instead of open
    edges: the link of the smallest unfinished vertex is completed in every
    admissible cyclic order before the next vertex is touched.  Only edge
    multiplicities are tracked; completions are screened by the full
    surface validator in the caller.
    """
    target_f = 2 * n
    ec = {}
    faces = []
    faceset = set()
    closed = set()
    results = []

    def edge(a, b):
        return (a, b) if a < b else (b, a)

    def add_face(f):
        faces.append(f)
        faceset.add(f)
        for e in (edge(f[0], f[1]), edge(f[0], f[2]), edge(f[1], f[2])):
            ec[e] = ec.get(e, 0) + 1

    def pop_face(f):
        faces.pop()
        faceset.discard(f)
        for e in (edge(f[0], f[1]), edge(f[0], f[2]), edge(f[1], f[2])):
            if ec[e] == 1:
                del ec[e]
            else:
                ec[e] -= 1

    def path_end(adj, start):
        """Other endpoint of the link path starting at ``start``."""
        prev, cur = None, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                return cur
            prev, cur = cur, nxt[0]

    def close_vertex(v, maxlab):
        budget.check()
        adj = {}
        for f in faces:
            if v in f:
                a, b = (x for x in f if x != v)
                adj.setdefault(a, set()).add(b)
                adj.setdefault(b, set()).add(a)
        if any(len(nb) > 2 for nb in adj.values()):
            return
        ends = [a for a, nb in adj.items() if len(nb) == 1]
        if not ends:
            if adj and _single_cycle(adj):
                advance(v, maxlab)
            return
        grow(v, maxlab, adj, len(ends) // 2)

    def grow(v, maxlab, adj, ncomp):
        budget.check()
        if len(faces) + ncomp > target_f or len(faces) + (n - maxlab) > target_f:
            return
        ends = sorted(a for a, nb in adj.items() if len(nb) == 1)
        start = ends[0]
        mate = path_end(adj, start)
        if ec[edge(v, start)] >= 2:
            return
        # closing move: one path left, join its two ends
        if ncomp == 1 and len(adj) >= 3:
            f = tuple(sorted((v, start, mate)))
            if f not in faceset and ec.get(edge(start, mate), 0) < 2 \
                    and ec[edge(v, mate)] < 2:
                add_face(f)
                advance(v, maxlab)
                pop_face(f)
        # extension moves: endpoint of another path, an existing vertex not
        # yet in the link, or one fresh label
        cands = [b for b in ends if b not in (start, mate)]
        cands += [b for b in range(2, maxlab + 1)
                  if b != v and b not in adj and b not in closed]
        if maxlab < n:
            cands.append(maxlab + 1)
        for b in sorted(set(cands)):
            f = tuple(sorted((v, start, b)))
            if f in faceset:
                continue
            if ec.get(edge(v, b), 0) >= 2 or ec.get(edge(start, b), 0) >= 2:
                continue
            joining = b in adj
            add_face(f)
            adj.setdefault(b, set()).add(start)
            adj[start].add(b)
            grow(v, max(maxlab, b), adj, ncomp - 1 if joining else ncomp)
            adj[start].discard(b)
            adj[b].discard(start)
            if not adj[b]:
                del adj[b]
            pop_face(f)

    def advance(v, maxlab):
        closed.add(v)
        if v + 1 <= maxlab:
            close_vertex(v + 1, maxlab)
        elif maxlab == n and len(faces) == target_f and v == n:
            results.append(list(faces))
        closed.discard(v)

    # first face is (1,2,3) up to relabeling
    add_face((1, 2, 3))
    close_vertex(1, 3)
    pop_face((1, 2, 3))
    yield from results


def _single_cycle(adj):
    if any(len(nb) != 2 for nb in adj.values()):
        return False
    start = next(iter(adj))
    prev, cur = start, sorted(adj[start])[0]
    count = 1
    while cur != start:
        nxt = [x for x in adj[cur] if x != prev]
        if len(nxt) != 1:
            return False
        prev, cur = cur, nxt[0]
        count += 1
        if count > len(adj):
            return False
    return count == len(adj)


# -- public API -------------------------------------------------------------------


_CENSUS_CACHE: dict = {}


def enumerate_tori(n: int, strategy: str = "a", time_budget: float | None = None,
                   progress=None) -> list[CensusRecord]:
    """All n-vertex torus triangulations up to isomorphism, 7 <= n <= 11.

    ``strategy`` picks the generation algorithm ("a" or "b"); results agree.
    ``time_budget`` (seconds; also env TORUS_TIME_BUDGET_SECS) aborts long
    runs with TimeBudgetExceeded.  Completed runs are memoized per process.
    """
    if not N_MIN <= n <= N_MAX:
        raise OutOfRange(n, N_MIN, N_MAX)
    if (n, strategy) in _CENSUS_CACHE:
        return list(_CENSUS_CACHE[(n, strategy)])
    budget = _Budget(time_budget if time_budget is not None else _env_budget())
    gen = {"a": _generate_strategy_a, "b": _generate_strategy_b}[strategy](n, budget)
    seen = {}
    for faces in gen:
        if strategy == "b":
            try:
                rep = validate_surface(faces)
            except PolytorusError:
                continue
            if rep.euler != 0 or not rep.orientable or rep.n_vertices != n:
                continue
            T = SimplicialTorus(faces, _skip_validation=True)
        else:
            edge_faces = {}
            for i, f in enumerate(faces):
                for e in ((f[0], f[1]), (f[0], f[2]), (f[1], f[2])):
                    edge_faces.setdefault(e, []).append(i)
            if _orient_faces(faces, edge_faces) is None:
                continue
            T = SimplicialTorus(faces, _skip_validation=True)
        form = canonical_form(T)
        if form not in seen:
            seen[form] = T
        if progress is not None:
            progress(len(seen))
    records = []
    for form in sorted(seen):
        T = SimplicialTorus(form, _skip_validation=True)
        res = stick_number_and_type(T)
        degs = {T.degree(v) for v in range(1, T.n_vertices + 1)}
        records.append(CensusRecord(
            canonical_faces=form,
            n=T.n_vertices,
            m=res.m,
            s=res.s,
            equivelar=(len(degs) == 1),
            automorphism_order=len(automorphism_group(T)),
        ))
    _CENSUS_CACHE[(n, strategy)] = records
    return list(records)


def census_counts_agree(n: int, time_budget: float | None = None) -> tuple[int, int]:
    """Run both strategies; return the two counts (they must match)."""
    a = enumerate_tori(n, "a", time_budget)
    b = enumerate_tori(n, "b", time_budget)
    forms_a = {r.canonical_faces for r in a}
    forms_b = {r.canonical_faces for r in b}
    if forms_a != forms_b:
        raise PolytorusError(
            f"strategies disagree at n={n}: {len(forms_a)} vs {len(forms_b)}")
    return len(a), len(b)


@dataclass
class Theorem31Report:
    k: int
    n_min: int
    below_counts: dict
    minimal_count: int
    matches_generator: bool

    @property
    def ok(self) -> bool:
        return (all(c == 0 for c in self.below_counts.values())
                and self.minimal_count == 1 and self.matches_generator)


def no_torus_below_seven(n: int) -> bool:
    """No torus triangulation exists on n <= 6 vertices: it would need
    E = 3n edges, more than the n(n-1)/2 available."""
    return 3 * n > n * (n - 1) // 2


def census_verify_theorem31(k: int, time_budget: float | None = None) -> Theorem31Report:
    """Check at census scale: no type-3xk torus below 3k-2 vertices, and a
    unique one (the generator output) at 3k-2."""
    n_min = 3 * k - 2
    if n_min > N_MAX:
        raise OutOfRange(n_min, N_MIN, N_MAX)
    below = {}
    for n in range(max(N_MIN, 3 * k - 4), n_min):
        records = enumerate_tori(n, "a", time_budget)
        below[n] = sum(1 for r in records if r.m == 3 and r.s == k)
    for n in range(3, 7):
        if n >= 3 * k - 4 and not no_torus_below_seven(n):
            raise PolytorusError(f"counting argument failed at n={n}")
    records = enumerate_tori(n_min, "a", time_budget)
    minimal = [r for r in records if r.m == 3 and r.s == k]
    match = False
    if len(minimal) == 1:
        gen = minimal_torus_3k(k)
        match = is_isomorphic(minimal[0].torus(), gen) is not None
    return Theorem31Report(k, n_min, below, len(minimal), match)
