"""Exact rational plane geometry for admissible configurations: orientation
predicates, local triangles, the mu-index, extremal points, and angular
chains around them.  Everything is Fraction-exact; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .monodromy import ParityClass


class GeometryError(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "RationalPoint":
        return RationalPoint(_frac(x), _frac(y))

    def __sub__(self, other: "RationalPoint"):
        return (self.x - other.x, self.y - other.y)


def cross(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def sign(x) -> int:
    return (x > 0) - (x < 0)


def orient(a: RationalPoint, b: RationalPoint, c: RationalPoint) -> int:
    """+1 counterclockwise, -1 clockwise, 0 collinear."""
    return sign(cross(b - a, c - a))


@dataclass(frozen=True)
class AdmissibleConfig:
    """Distinct points, no three collinear, tangent at each point never a
    positive multiple of the direction to another point."""

    points: tuple[RationalPoint, ...]
    tangents: tuple[tuple[Fraction, Fraction], ...]
    parity: ParityClass

    @property
    def m(self) -> int:
        return len(self.points)


def validate_admissible(points, tangents, parity: ParityClass) -> AdmissibleConfig:
    pts = tuple(
        p if isinstance(p, RationalPoint) else RationalPoint.of(*p) for p in points
    )
    tans = tuple((_frac(vx), _frac(vy)) for vx, vy in tangents)
    m = len(pts)
    if len(tans) != m:
        raise GeometryError("need one tangent per point")
    for v in tans:
        if v == (0, 0):
            raise GeometryError("tangent vectors must be nonzero")
    for i in range(m):
        for j in range(i + 1, m):
            if pts[i] == pts[j]:
                raise GeometryError(f"duplicate point at indices {i + 1}, {j + 1}")
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if orient(pts[i], pts[j], pts[k]) == 0:
                    raise GeometryError(
                        f"collinear triple ({i + 1}, {j + 1}, {k + 1})"
                    )
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            d = pts[j] - pts[i]
            if cross(tans[i], d) == 0 and dot(tans[i], d) > 0:
                raise GeometryError(
                    f"tangent at point {i + 1} aims at point {j + 1}"
                )
    return AdmissibleConfig(pts, tans, parity)


def _strictly_inside(p, a, b, c) -> bool:
    o = orient(a, b, c)
    return (
        orient(a, b, p) == o and orient(b, c, p) == o and orient(c, a, p) == o
    )


def is_local_triangle(cfg: AdmissibleConfig, i: int, w: int, j: int, indices=None) -> bool:
    """True iff no other configuration point (restricted to `indices` when
    given) lies in the triangle (i, w, j).

    Indices are 1-based; boundary incidence is impossible (no 3 collinear),
    so the strict interior test decides.
    """
    if len({i, w, j}) != 3:
        raise GeometryError("indices must be distinct")
    a, b, c = cfg.points[i - 1], cfg.points[w - 1], cfg.points[j - 1]
    for k in indices or range(1, cfg.m + 1):
        if k in (i, w, j):
            continue
        if _strictly_inside(cfg.points[k - 1], a, b, c):
            return False
    return True


def mu_index(cfg: AdmissibleConfig, z0: int, w: int, z1: int) -> int:
    """±1 if the tangent at w points into the open cone of the triangle
    (z0, w, z1) at w, signed by orientation; 0 otherwise."""
    if len({z0, w, z1}) != 3:
        raise GeometryError("indices must be distinct")
    a = cfg.points[z0 - 1]
    mid = cfg.points[w - 1]
    b = cfg.points[z1 - 1]
    v = cfg.tangents[w - 1]
    o = orient(a, mid, b)
    if o == 0:
        raise GeometryError("degenerate triangle (collinear points)")
    if sign(cross(b - mid, v)) == o and sign(cross(v, a - mid)) == o:
        return o
    return 0


def extremal_points(cfg: AdmissibleConfig, indices=None) -> list:
    """Indices (1-based) of convex-hull vertices of the configuration, or
    of the subset `indices` when given.

    A point is extremal iff no triangle of other points strictly contains
    it (no boundary cases by admissibility).
    """
    pool = sorted(indices) if indices else list(range(1, cfg.m + 1))
    out = []
    for e in pool:
        others = [k for k in pool if k != e]
        inside = False
        p = cfg.points[e - 1]
        for ii in range(len(others)):
            for jj in range(ii + 1, len(others)):
                for kk in range(jj + 1, len(others)):
                    if _strictly_inside(
                        p,
                        cfg.points[others[ii] - 1],
                        cfg.points[others[jj] - 1],
                        cfg.points[others[kk] - 1],
                    ):
                        inside = True
        if not inside:
            out.append(e)
    return out


def angular_order(cfg: AdmissibleConfig, e: int, indices=None) -> list:
    """Points of the configuration (or the given subset), sorted by angle
    as seen from the extremal point e.

    At a hull vertex the directions span an open half-plane (< pi, since no
    three points are collinear), so the cross-product comparator is a total
    order; we return counterclockwise order.
    """
    src = cfg.points[e - 1]
    idxs = [k for k in (indices or range(1, cfg.m + 1)) if k != e]
    dirs = {k: cfg.points[k - 1] - src for k in idxs}
    import functools

    def cmp(a, b):
        return -sign(cross(dirs[a], dirs[b]))

    out = sorted(idxs, key=functools.cmp_to_key(cmp))
    # sanity: in an open half-plane, every later direction is strictly
    # counterclockwise of every earlier one (adjacent checks alone would
    # miss full-turn spreads)
    for ii in range(len(out)):
        for jj in range(ii + 1, len(out)):
            if sign(cross(dirs[out[ii]], dirs[out[jj]])) <= 0:
                raise GeometryError(f"point {e} is not extremal for the subset")
    return out


def chain(cfg: AdmissibleConfig, e: int, z: int, a: int, indices=None) -> list:
    """The angular sequence z = w_0, ..., w_r = a of points consecutive in
    angular order from e; every triple (w_{t-1}, e, w_t) is a local
    triangle within the subset."""
    order = angular_order(cfg, e, indices)
    iz, ia = order.index(z), order.index(a)
    if iz <= ia:
        return order[iz : ia + 1]
    return list(reversed(order[ia : iz + 1]))
