"""SVG and Wavefront OBJ exports of lattice polygons.

The SVG view is a fixed isometric projection with rational axis images,
so hidden-line decisions (which strand gets the gap at a crossing) are
made exactly.  The OBJ export writes one vertex per polygon corner and
one polyline record per stick.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .lattice import LatticePolygon

# isometric axis images, scaled by 30 to stay integral:
# x -> (30, 0), y -> (-26, 15), z -> (0, -30); view direction (26, 30, 15)
_SCALE = 30
_GAP = Fraction(3, 10)  # lattice units of strand hidden on each side


def _screen(p: tuple[int, int, int]) -> tuple[int, int]:
    x, y, z = p
    return (_SCALE * x - 26 * y, 15 * y - _SCALE * z)


def _depth(p: tuple[int, int, int]) -> int:
    x, y, z = p
    return 26 * x + 30 * y + 15 * z


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def render_svg(poly: LatticePolygon) -> str:
    """Isometric drawing with gaps cut into the strand passing behind."""
    verts = poly.vertices()
    m = len(verts)
    pts = [_screen(v) for v in verts]
    depths = [_depth(v) for v in verts]
    segs = [(pts[k], pts[(k + 1) % m]) for k in range(m)]

    # cut intervals (in segment parameter) for under-passages
    cuts: dict[int, list[tuple[Fraction, Fraction]]] = {k: [] for k in range(m)}
    for s1 in range(m):
        for s2 in range(s1 + 1, m):
            if s2 == s1 + 1 or (s1 == 0 and s2 == m - 1):
                continue
            (a1, b1), (a2, b2) = segs[s1], segs[s2]
            d1 = (b1[0] - a1[0], b1[1] - a1[1])
            d2 = (b2[0] - a2[0], b2[1] - a2[1])
            den = _cross2(d1, d2)
            if den == 0:
                continue
            rel = (a2[0] - a1[0], a2[1] - a1[1])
            t1 = Fraction(_cross2(rel, d2), den)
            t2 = Fraction(_cross2(rel, d1), den)
            if not (0 < t1 < 1 and 0 < t2 < 1):
                continue
            h1 = depths[s1] + t1 * (depths[(s1 + 1) % m] - depths[s1])
            h2 = depths[s2] + t2 * (depths[(s2 + 1) % m] - depths[s2])
            if h1 == h2:
                continue  # projective coincidence of distinct points; draw plain
            under, t_under, d_under = (s1, t1, d1) if h1 < h2 else (s2, t2, d2)
            seg_len = isqrt(d_under[0] ** 2 + d_under[1] ** 2)
            half_gap = int(_GAP * _SCALE)
            dt = min(Fraction(1, 3), Fraction(half_gap, max(seg_len, 1)))
            cuts[under].append((max(Fraction(0), t_under - dt), min(Fraction(1), t_under + dt)))

    lines = []
    for k in range(m):
        (x1, y1), (x2, y2) = segs[k]
        pieces = [(Fraction(0), Fraction(1))]
        for lo, hi in sorted(cuts[k]):
            nxt = []
            for plo, phi in pieces:
                if hi <= plo or lo >= phi:
                    nxt.append((plo, phi))
                    continue
                if plo < lo:
                    nxt.append((plo, lo))
                if hi < phi:
                    nxt.append((hi, phi))
            pieces = nxt
        for plo, phi in pieces:
            if plo >= phi:
                continue
            ax = float(x1 + plo * (x2 - x1))
            ay = float(y1 + plo * (y2 - y1))
            bx = float(x1 + phi * (x2 - x1))
            by = float(y1 + phi * (y2 - y1))
            lines.append(
                f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}"/>'
            )

    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pad = _SCALE
    vb = (min(xs) - pad, min(ys) - pad, max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad)
    body = "\n".join(f"  {ln}" for ln in lines)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb[0]} {vb[1]} {vb[2]} {vb[3]}" '
        f'stroke="black" stroke-width="4" stroke-linecap="round">\n{body}\n</svg>\n'
    )


def render_obj(poly: LatticePolygon) -> str:
    """Wavefront OBJ: `v` per corner, `l` per stick, both 1-based."""
    verts = poly.vertices()
    m = len(verts)
    out = [f"v {x} {y} {z}" for (x, y, z) in verts]
    out += [f"l {k + 1} {(k + 1) % m + 1}" for k in range(m)]
    return "\n".join(out) + "\n"
