"""Fan configurations (straight paths from a basepoint), the ray-crossing
compiler from groupoid words to free-group anchor words, hop words, the
forward map N -> Q, and the reconstruction Q -> N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import FreeWord
from .geometry import (
    AdmissibleConfig,
    GeometryError,
    RationalPoint,
    cross,
    sign,
    validate_admissible,
)
from .groupoid import GroupoidWord, StraightLineData, chi_evaluate, validate_Q
from .monodromy import IntersectionMatrix, ParityClass, character, validate_N


@dataclass(frozen=True)
class FanConfiguration:
    """Admissible configuration whose tangents aim at a basepoint z0 from
    which every point is reached by a straight path; points are indexed by
    clockwise angle at z0.

    order[k] is the fan index (1-based) of the k-th input point.
    """

    cfg: AdmissibleConfig
    z0: RationalPoint
    order: tuple[int, ...]


@dataclass(frozen=True)
class AnchorWord:
    target: int
    source: int
    word: FreeWord


def build_fan_config(points, z0, parity: ParityClass, tangents=None) -> FanConfiguration:
    """Index points clockwise as seen from z0 and aim all tangents at z0.

    Requires: points pairwise distinct, no three collinear, no two collinear
    with z0, and z0 strictly outside the convex hull of the points (so the
    view directions span less than a half turn and straight hops between
    angular neighbours cross no third ray).
    """
    if tangents is not None:
        raise GeometryError("only basepoint-aimed tangents are supported")
    z0 = z0 if isinstance(z0, RationalPoint) else RationalPoint.of(*z0)
    pts = [
        p if isinstance(p, RationalPoint) else RationalPoint.of(*p) for p in points
    ]
    m = len(pts)
    for i in range(m):
        if pts[i] == z0:
            raise GeometryError(f"point {i + 1} coincides with the basepoint")
        for j in range(i + 1, m):
            if cross(pts[i] - z0, pts[j] - z0) == 0:
                raise GeometryError(
                    f"points {i + 1} and {j + 1} are collinear with the basepoint"
                )
    # z0 strictly outside the hull: no triangle of points contains it
    from .geometry import _strictly_inside

    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if _strictly_inside(z0, pts[i], pts[j], pts[k]):
                    raise GeometryError(
                        "basepoint lies inside the convex hull of the points"
                    )
    # clockwise linear order: directions span < pi, so a single
    # cross-product comparator totally orders them
    import functools

    dirs = [p - z0 for p in pts]
    idx = sorted(
        range(m),
        key=functools.cmp_to_key(lambda a, b: sign(cross(dirs[a], dirs[b]))),
    )
    ordered = [pts[t] for t in idx]
    tans = [z0 - p for p in ordered]
    cfg = validate_admissible(ordered, tans, parity)
    order = [0] * m
    for fan_pos, input_pos in enumerate(idx):
        order[input_pos] = fan_pos + 1
    return FanConfiguration(cfg, z0, tuple(order))


def _anchor_segment(fan: FanConfiguration, i: int, j: int) -> FreeWord:
    """Anchor of the straight generator s(z_i, z_j): traverse the path to
    z_j, the segment z_j -> z_i, and the path from z_i backwards, recording
    ray crossings and endpoint turn sweeps; later letters multiply left."""
    cfg, z0 = fan.cfg, fan.z0
    m = cfg.m
    P = cfg.points
    zi, zj = P[i - 1], P[j - 1]
    letters: list[tuple[int, int]] = []  # traversal order
    # clockwise sweep at the source crosses z_j's own ray iff the segment
    # leaves on the counterclockwise side of the z0 -> z_j line
    if cross(z0 - zj, zi - zj) > 0:
        letters.append((j, -1))
    d = zi - zj
    hits = []
    for k in range(1, m + 1):
        if k in (i, j):
            continue
        zk = P[k - 1]
        r = zk - z0  # ray direction beyond z_k
        denom = cross(d, r)
        if denom == 0:
            continue
        b = zk - zj
        s = Fraction(cross(b, r), denom)
        t = Fraction(cross(b, d), denom)
        if 0 < s < 1 and t > 0:
            hits.append((s, k, 1 if cross(d, b) > 0 else -1))
    hits.sort()
    letters.extend((k, e) for _, k, e in hits)
    # counterclockwise sweep at the target crosses z_i's ray iff the
    # segment arrives on the clockwise side of the z0 -> z_i line
    if cross(zj - zi, z0 - zi) < 0:
        letters.append((i, 1))
    out = FreeWord.identity(m)
    for k, e in letters:
        out = FreeWord.gen(m, k, e) * out
    return out


def anchor_word(fan: FanConfiguration, w: GroupoidWord) -> AnchorWord:
    """Compile a groupoid word to its free-group anchor, functorially."""
    m = fan.cfg.m
    for z in w.points:
        if not 1 <= z <= m:
            raise GeometryError(f"point index {z} out of range 1..{m}")
    out = FreeWord.gen(m, w.points[0], w.exps[0])
    for t in range(len(w.points) - 1):
        out = out * _anchor_segment(fan, w.points[t], w.points[t + 1])
        out = out * FreeWord.gen(m, w.points[t + 1], w.exps[t + 1])
    return AnchorWord(w.target, w.source, out)


def hop_words(fan: FanConfiguration) -> list:
    """hop_k realizes c_k · c_{k+1}^{-1}: the straight generator between
    angular neighbours dressed with the twists cancelling its anchor."""
    m = fan.cfg.m
    hops = []
    for k in range(1, m):
        u = _anchor_segment(fan, k, k + 1)
        expo = {k: 0, k + 1: 0}
        for idx, e in u.letters:
            if idx not in expo:
                raise AssertionError(
                    f"neighbour segment {k},{k + 1} crossed ray {idx}"
                )
            expo[idx] += e
        hops.append(GroupoidWord((k, k + 1), (-expo[k], -expo[k + 1])))
    return hops


def forward_Q(fan: FanConfiguration, N: IntersectionMatrix) -> StraightLineData:
    """Q(z_i, z_j) = (N rho_N(anchor s(z_i,z_j)))_{ij}; diagonal forced."""
    cfg = fan.cfg
    if N.m != cfg.m:
        raise GeometryError(f"matrix size {N.m} vs {cfg.m} points")
    if N.parity != cfg.parity:
        raise GeometryError("parity class mismatch between N and the fan")
    m = cfg.m
    rows = [[0] * m for _ in range(m)]
    for i in range(1, m + 1):
        rows[i - 1][i - 1] = cfg.parity.diag
        for j in range(1, m + 1):
            if i == j:
                continue
            g = _anchor_segment(fan, i, j)
            rows[i - 1][j - 1] = character(N, g)[i - 1][j - 1]
    return validate_Q(cfg, rows)


def reconstruct_N(fan: FanConfiguration, Q: StraightLineData) -> IntersectionMatrix:
    """Recover N from straight-line data: n_{ij} = chi^Q(c_i c_j^{-1}),
    realized by telescoping the hop words."""
    cfg = fan.cfg
    if Q.cfg is not cfg and Q.cfg != cfg:
        raise GeometryError("Q is not indexed by this fan configuration")
    m = cfg.m
    parity = cfg.parity
    hops = hop_words(fan)
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = parity.diag
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            word = hops[i - 1]
            for t in range(i, j - 1):
                word = word.compose(hops[t])
            val = chi_evaluate(Q, word)
            rows[i - 1][j - 1] = val
            rows[j - 1][i - 1] = parity.sgn * val
    return validate_N(parity, rows)
