"""Planar knot diagrams and the invariants used as the knot-type oracle.

Diagrams come from two sources: the grid picture of an arc presentation
(vertical strands over horizontal, the standard grid convention) and exact
generic projections of 3-D lattice polygons.  Invariants: Alexander
polynomial from a Wirtinger matrix minor, the knot determinant, and an
optional Kauffman-bracket Jones polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arc import ArcPresentation
from .errors import InternalInvariantError
from .lattice import LatticePolygon, SelfIntersectionError, validate_polygon
from .laurent import LaurentPolynomial, ZeroPolynomialError, canonicalize


class NoGenericDirectionError(RuntimeError):
    """All candidate projection directions failed the genericity checks."""


class CrossingCapExceededError(ValueError):
    """The diagram has more crossings than the state-sum cap allows."""


@dataclass(frozen=True)
class Crossing:
    """One crossing; fields are 1-based edge labels of the four strand ends.

    sign is +1 when the over direction is the under direction rotated 90
    degrees counterclockwise.  The counterclockwise slot order starting at
    the incoming under strand is determined by the sign (see pd).
    """

    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    @property
    def pd(self) -> tuple[int, int, int, int]:
        """Edge labels counterclockwise from the incoming under strand."""
        if self.sign > 0:
            return (self.under_in, self.over_in, self.under_out, self.over_out)
        return (self.under_in, self.over_out, self.under_out, self.over_in)


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossing list plus the closed traversal that produced it.

    Edges are numbered 1..n_edges along the traversal; gauss holds
    (crossing index, "O" or "U") per passage, in traversal order.
    """

    crossings: tuple[Crossing, ...]
    n_edges: int
    gauss: tuple[tuple[int, str], ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    def check(self) -> list[str]:
        """Diagram invariant violations; empty when consistent."""
        problems = []
        n = self.n
        if n == 0:
            if self.gauss:
                problems.append("crossing-free diagram has gauss events")
            return problems
        if self.n_edges != 2 * n:
            problems.append(f"n_edges {self.n_edges} != 2n = {2 * n}")
        if len(self.gauss) != 2 * n:
            problems.append(f"gauss length {len(self.gauss)} != 2n = {2 * n}")
        seen: dict[int, int] = {}
        for c in self.crossings:
            for e in (c.over_in, c.over_out, c.under_in, c.under_out):
                seen[e] = seen.get(e, 0) + 1
        bad = {e: k for e, k in seen.items() if k != 2}
        if bad or set(seen) != set(range(1, 2 * n + 1)):
            problems.append(f"edge labels not each used twice: {sorted(bad.items())}")
        roles: dict[int, set[str]] = {}
        for ci, role in self.gauss:
            roles.setdefault(ci, set()).add(role)
        if any(roles.get(ci) != {"O", "U"} for ci in range(n)):
            problems.append("each crossing must be passed once over and once under")
        return problems

    def mirror(self) -> "PlanarDiagram":
        """Swap over and under everywhere (mirror image diagram)."""
        flipped = tuple(
            Crossing(
                over_in=c.under_in,
                over_out=c.under_out,
                under_in=c.over_in,
                under_out=c.over_out,
                sign=-c.sign,
            )
            for c in self.crossings
        )
        gauss = tuple((ci, "U" if role == "O" else "O") for ci, role in self.gauss)
        return PlanarDiagram(flipped, self.n_edges, gauss)

    def pd_code_text(self) -> str:
        return "\n".join("X({},{},{},{})".format(*c.pd) for c in self.crossings)


# ---------------------------------------------------------------------------
# assembling diagrams from traversal events


def _cross2(u: tuple[int, int], v: tuple[int, int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _assemble(events: list[tuple[object, bool, tuple[int, int]]]) -> PlanarDiagram:
    """Build a diagram from traversal events (key, passes_over, 2-D direction).

    Every key must occur exactly twice, once over and once under.  Edge j
    follows event j; the edge entering event 1 is edge 2n.
    """
    total = len(events)
    if total == 0:
        return PlanarDiagram((), 1, ())
    if total % 2:
        raise InternalInvariantError("odd number of crossing passages")

    def in_edge(j: int) -> int:
        return j - 1 if j > 1 else total

    passages: dict[object, list[tuple[int, bool, tuple[int, int]]]] = {}
    order: list[object] = []
    for j, (key, over, d) in enumerate(events, start=1):
        if key not in passages:
            order.append(key)
        passages.setdefault(key, []).append((j, over, d))

    crossings = []
    index_of: dict[object, int] = {}
    for key in order:
        ps = passages[key]
        if len(ps) != 2 or ps[0][1] == ps[1][1]:
            raise InternalInvariantError(f"crossing {key} needs one over and one under passage")
        (jo, _, do) = ps[0] if ps[0][1] else ps[1]
        (ju, _, du) = ps[1] if ps[0][1] else ps[0]
        turn = _cross2(du, do)
        if turn == 0:
            raise InternalInvariantError(f"crossing {key} has parallel strands")
        index_of[key] = len(crossings)
        crossings.append(
            Crossing(
                over_in=in_edge(jo),
                over_out=jo,
                under_in=in_edge(ju),
                under_out=ju,
                sign=1 if turn > 0 else -1,
            )
        )
    gauss = tuple((index_of[key], "O" if over else "U") for key, over, _ in events)
    return PlanarDiagram(tuple(crossings), total, gauss)


# ---------------------------------------------------------------------------
# grid diagram of an arc presentation


def arc_to_planar(P: ArcPresentation) -> PlanarDiagram:
    """Grid diagram: row k spans the page-k arc, column i the binding jumps.

    A crossing appears wherever a vertical segment passes strictly through
    a horizontal one; the vertical strand is always over.  Traversal starts
    on the page-1 arc heading toward its smaller binding index.
    """
    a = P.a
    rows = {k: pair for k, pair in enumerate(P.arcs, start=1)}
    cols = {i: P.pages_at(i) for i in range(1, a + 1)}

    events: list[tuple[object, bool, tuple[int, int]]] = []
    col, row = rows[1][1], 1
    start = (col, row)
    for _ in range(a):
        # horizontal run in `row` from `col` to the other endpoint
        i, j = rows[row]
        dest = i if col == j else j
        step = 1 if dest > col else -1
        for m in range(col + step, dest, step):
            lo, hi = cols[m]
            if lo < row < hi:
                events.append(((m, row), False, (step, 0)))
        col = dest
        # vertical run in `col` from `row` to its other incident page
        k1, k2 = cols[col]
        vdest = k1 if row == k2 else k2
        vstep = 1 if vdest > row else -1
        for r in range(row + vstep, vdest, vstep):
            ri, rj = rows[r]
            if ri < col < rj:
                events.append(((col, r), True, (0, vstep)))
        row = vdest
    if (col, row) != start:
        raise InternalInvariantError("grid traversal did not close")
    return _assemble(events)


# ---------------------------------------------------------------------------
# exact generic projection of a lattice polygon


def project_polygon(poly: LatticePolygon) -> PlanarDiagram:
    """Project along the first generic direction (1, B, B**2), B = M+2, M+3, ...

    M is the largest coordinate magnitude.  Genericity is decided with
    exact integer and rational arithmetic: distinct vertex images, no
    vertex on another edge's interior, no overlapping collinear edge
    images, no triple points.  Over/under comes from exact depth along the
    projection direction (larger depth is nearer the viewer).
    """
    violations = validate_polygon(poly)
    if violations:
        raise SelfIntersectionError(violations)
    verts = poly.vertices()
    m = len(verts)
    M = max(1, max(abs(c) for v in verts for c in v))
    for B in range(M + 2, M + 2 + 64):
        result = _try_projection(verts, B)
        if result is not None:
            return result
    raise NoGenericDirectionError(f"no generic direction among B={M + 2}..{M + 65}")


def _try_projection(verts: list[tuple[int, int, int]], B: int) -> PlanarDiagram | None:
    m = len(verts)

    def proj(p):
        return (B * p[0] - p[1], B * B * p[0] - p[2])

    def depth(p):
        return p[0] + B * p[1] + B * B * p[2]

    pts = [proj(v) for v in verts]
    if len(set(pts)) != m:
        return None

    seg = [(pts[k], pts[(k + 1) % m]) for k in range(m)]
    dirs = [(b[0] - a[0], b[1] - a[1]) for a, b in seg]

    # no vertex may land inside another edge's image
    for v in range(m):
        p = pts[v]
        for s in range(m):
            if s == v or (s + 1) % m == v:
                continue
            a, b = seg[s]
            d = dirs[s]
            if _cross2(d, (p[0] - a[0], p[1] - a[1])) != 0:
                continue
            t_num = (p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]
            t_den = d[0] * d[0] + d[1] * d[1]
            if 0 < t_num < t_den:
                return None

    # no two edges may overlap along a common line
    for s1 in range(m):
        for s2 in range(s1 + 1, m):
            d1, d2 = dirs[s1], dirs[s2]
            if _cross2(d1, d2) != 0:
                continue
            a1, b1 = seg[s1]
            a2, b2 = seg[s2]
            if _cross2(d1, (a2[0] - a1[0], a2[1] - a1[1])) != 0:
                continue
            lo1, hi1 = sorted((a1[0] * d1[0] + a1[1] * d1[1], b1[0] * d1[0] + b1[1] * d1[1]))
            lo2, hi2 = sorted((a2[0] * d1[0] + a2[1] * d1[1], b2[0] * d1[0] + b2[1] * d1[1]))
            if max(lo1, lo2) < min(hi1, hi2):
                return None

    # transversal interior intersections, one per non-adjacent pair at most
    hits: dict[int, list[tuple[Fraction, int]]] = {k: [] for k in range(m)}
    seen_points: dict[tuple[Fraction, Fraction], tuple[int, int]] = {}
    depths = [depth(v) for v in verts]
    for s1 in range(m):
        for s2 in range(s1 + 1, m):
            if s2 == s1 + 1 or (s1 == 0 and s2 == m - 1):
                continue
            d1, d2 = dirs[s1], dirs[s2]
            den = _cross2(d1, d2)
            if den == 0:
                continue
            a1 = seg[s1][0]
            a2 = seg[s2][0]
            rel = (a2[0] - a1[0], a2[1] - a1[1])
            t1 = Fraction(_cross2(rel, d2), den)
            t2 = Fraction(_cross2(rel, d1), den)
            if not (0 < t1 < 1 and 0 < t2 < 1):
                if (0 <= t1 <= 1 and 0 <= t2 <= 1):
                    return None  # boundary contact the earlier checks missed
                continue
            pt = (a1[0] + t1 * d1[0], a1[1] + t1 * d1[1])
            if pt in seen_points:
                return None  # triple point
            seen_points[pt] = (s1, s2)
            hits[s1].append((t1, s2))
            hits[s2].append((t2, s1))

    events: list[tuple[object, bool, tuple[int, int]]] = []
    for s in range(m):
        h_in = depths[s]
        h_out = depths[(s + 1) % m]
        for t, other in sorted(hits[s]):
            key = (min(s, other), max(s, other))
            here = Fraction(h_in) + t * (h_out - h_in)
            to = next(tt for tt, ss in hits[other] if ss == s)
            there = Fraction(depths[other]) + to * (depths[(other + 1) % m] - depths[other])
            if here == there:
                raise InternalInvariantError("equal depths at a projected crossing")
            events.append((key, here > there, dirs[s]))
    return _assemble(events)


# ---------------------------------------------------------------------------
# faces and Reidemeister simplification


def faces(d: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Faces of the 4-valent planar map as orbits of darts (crossing, slot)."""
    n = d.n
    if n == 0:
        return []
    at_label: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        for slot, e in enumerate(c.pd):
            at_label.setdefault(e, []).append((ci, slot))
    alpha: dict[tuple[int, int], tuple[int, int]] = {}
    for e, darts in at_label.items():
        if len(darts) != 2:
            raise InternalInvariantError(f"edge {e} has {len(darts)} ends")
        alpha[darts[0]] = darts[1]
        alpha[darts[1]] = darts[0]

    def nxt(dart):
        ci, slot = alpha[dart]
        return (ci, (slot + 1) % 4)

    out = []
    todo = {(ci, s) for ci in range(n) for s in range(4)}
    while todo:
        start = min(todo)
        face = [start]
        todo.remove(start)
        cur = nxt(start)
        while cur != start:
            face.append(cur)
            todo.remove(cur)
            cur = nxt(cur)
        out.append(face)
    if len(out) != n + 2:
        raise InternalInvariantError(
            f"face count {len(out)} breaks Euler's formula for {n} crossings"
        )
    return out


def _rebuild(events: list[tuple[int, str]], signs: dict[int, int]) -> PlanarDiagram:
    """Diagram from a gauss event list (original crossing id, role) and signs."""
    total = len(events)
    if total == 0:
        return PlanarDiagram((), 1, ())

    def in_edge(j: int) -> int:
        return j - 1 if j > 1 else total

    order: list[int] = []
    where: dict[int, dict[str, int]] = {}
    for j, (cid, role) in enumerate(events, start=1):
        if cid not in where:
            where[cid] = {}
            order.append(cid)
        where[cid][role] = j
    crossings = []
    for cid in order:
        jo, ju = where[cid]["O"], where[cid]["U"]
        crossings.append(
            Crossing(
                over_in=in_edge(jo),
                over_out=jo,
                under_in=in_edge(ju),
                under_out=ju,
                sign=signs[cid],
            )
        )
    index_of = {cid: k for k, cid in enumerate(order)}
    gauss = tuple((index_of[cid], role) for cid, role in events)
    return PlanarDiagram(tuple(crossings), total, gauss)


def simplify_diagram(d: PlanarDiagram) -> PlanarDiagram:
    """Remove kinks and reducible bigon pairs until none remain.

    Kinks are crossings passed twice in a row; bigons must be genuine faces
    with one strand over at both corners and the other under at both.  Both
    moves preserve the knot type.
    """
    events = [(ci, role) for ci, role in d.gauss]
    signs = {ci: c.sign for ci, c in enumerate(d.crossings)}

    while True:
        total = len(events)
        if total == 0:
            break
        # kinks: the same crossing twice in cyclically consecutive events
        kink = None
        for j in range(total):
            if events[j][0] == events[(j + 1) % total][0]:
                kink = events[j][0]
                break
        if kink is not None:
            events = [ev for ev in events if ev[0] != kink]
            del signs[kink]
            continue

        current = _rebuild(events, signs)
        reducible = None
        old_ids = [cid for cid in dict.fromkeys(cid for cid, _ in events)]
        for face in faces(current):
            if len(face) != 2:
                continue
            (c1, s1), (c2, s2) = face
            if c1 == c2:
                continue
            roles1 = ("U" if s1 % 2 == 0 else "O")
            roles2 = ("U" if s2 % 2 == 0 else "O")
            if roles1 == roles2:
                continue  # one strand must be over on its edge, the other under
            # each bigon edge must carry the same role at both of its ends
            e1 = current.crossings[c1].pd[s1]
            e2 = current.crossings[c2].pd[s2]
            ok = True
            for ci, cc in enumerate(current.crossings):
                for slot, lab in enumerate(cc.pd):
                    if lab == e1 and ((slot % 2 == 0) != (s1 % 2 == 0)):
                        ok = False
                    if lab == e2 and ((slot % 2 == 0) != (s2 % 2 == 0)):
                        ok = False
            if ok:
                reducible = (old_ids[c1], old_ids[c2])
                break
        if reducible is None:
            break
        events = [ev for ev in events if ev[0] not in reducible]
        for cid in reducible:
            del signs[cid]
    return _rebuild(events, signs)


# ---------------------------------------------------------------------------
# Alexander polynomial, determinant, Kauffman bracket


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _interpolate(points: list[tuple[int, int]]) -> list[int]:
    """Integer polynomial coefficients through the given (x, y) points."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for e, c in enumerate(basis):
                new[e + 1] += c
                new[e] -= xj * c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for e in range(len(basis)):
            coeffs[e] += scale * basis[e]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise InternalInvariantError("interpolation produced non-integer coefficients")
        out.append(int(c))
    return out


def _arc_of_edge(d: PlanarDiagram) -> dict[int, int]:
    """Wirtinger arc id (1..n) for each edge; arcs break at under passages."""
    n = d.n
    label = {}
    cur = 0
    for j, (_, role) in enumerate(d.gauss, start=1):
        if role == "U":
            cur += 1
        label[j] = cur
    for j in label:
        if label[j] == 0:
            label[j] = n
    return label


def alexander(D: PlanarDiagram, *, presimplify: bool = True) -> LaurentPolynomial:
    """Canonical Alexander polynomial via a Wirtinger matrix minor.

    The matrix row of a positive crossing puts 1-t on the over arc, t on
    the incoming under arc and -1 on the outgoing one; negative rows use
    the inverse relation (scaled by t to stay integral).  The minor drops
    the last row and column; its determinant is recovered exactly from
    integer evaluations and interpolation.
    """
    d = simplify_diagram(D) if presimplify else D
    n = d.n
    if n <= 1:
        return LaurentPolynomial.one()
    arc = _arc_of_edge(d)
    one = LaurentPolynomial.one()
    t = LaurentPolynomial.t_power(1)
    rows: list[list[LaurentPolynomial]] = [
        [LaurentPolynomial.zero() for _ in range(n)] for _ in range(n)
    ]
    for r, c in enumerate(d.crossings):
        o = arc[c.over_in] - 1
        if arc[c.over_out] - 1 != o:
            raise InternalInvariantError("over passage splits a Wirtinger arc")
        ui = arc[c.under_in] - 1
        uo = arc[c.under_out] - 1
        if c.sign > 0:
            rows[r][o] = rows[r][o] + (one - t)
            rows[r][ui] = rows[r][ui] + t
            rows[r][uo] = rows[r][uo] - one
        else:
            rows[r][o] = rows[r][o] + (t - one)
            rows[r][ui] = rows[r][ui] + one
            rows[r][uo] = rows[r][uo] - t

    size = n - 1
    xs = []
    v = 1
    while len(xs) < n:
        xs.append(v)
        if len(xs) < n:
            xs.append(-v)
        v += 1
    values = []
    for x in xs:
        mat = [[rows[i][j].evaluate(x) for j in range(size)] for i in range(size)]
        values.append(_bareiss_det(mat))
    coeffs = _interpolate(list(zip(xs, values)))
    poly = LaurentPolynomial.from_coeffs(coeffs)
    if poly.is_zero:
        raise InternalInvariantError("Alexander minor vanished; diagram is not a knot")
    return canonicalize(poly)


def determinant(D: PlanarDiagram) -> int:
    """|Alexander at t = -1|; odd for every knot."""
    return abs(alexander(D).evaluate(-1))


def jones_kauffman(D: PlanarDiagram, cap: int = 20) -> LaurentPolynomial:
    """Writhe-corrected Kauffman bracket by full state sum, in the bracket
    variable A, canonicalized.  Refuses diagrams above the crossing cap."""
    n = D.n
    if n > cap:
        raise CrossingCapExceededError(f"{n} crossings exceeds cap {cap}")
    if n == 0:
        return LaurentPolynomial.one()
    writhe = sum(c.sign for c in D.crossings)
    delta = LaurentPolynomial({2: -1, -2: -1})
    delta_pow = [LaurentPolynomial.one()]
    for _ in range(n + 1):
        delta_pow.append(delta_pow[-1] * delta)
    pds = [c.pd for c in D.crossings]
    n_edges = D.n_edges
    bracket = LaurentPolynomial.zero()
    for state in range(1 << n):
        parent = list(range(n_edges + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        a_count = 0
        for k, (ea, eb, ec, ed) in enumerate(pds):
            if state >> k & 1:
                a_count += 1
                union(ea, eb)
                union(ec, ed)
            else:
                union(ea, ed)
                union(eb, ec)
        loops = sum(1 for e in range(1, n_edges + 1) if find(e) == e)
        term = LaurentPolynomial.t_power(a_count - (n - a_count))
        bracket = bracket + term * delta_pow[loops - 1]
    corrected = bracket.shifted(-3 * writhe)
    if writhe % 2:
        corrected = -corrected
    return canonicalize(corrected)
