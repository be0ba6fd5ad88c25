"""The path groupoid over an admissible configuration and the chi^Q
evaluator.

A GroupoidWord (z_0, m_0, z_1, m_1, ..., z_k, m_k) stands for

    eps(z_0)^{m_0} s(z_0, z_1) eps(z_1)^{m_1} ... s(z_{k-1}, z_k) eps(z_k)^{m_k},

a morphism FROM z_k TO z_0 (listing order is target-first).  chi^Q is the
unique character with chi^Q(s(z, z')) = Q(z, z') subject to the reflection
laws; the evaluator mirrors the inductive uniqueness argument: strip
boundary twists, cancel backtracks, shift interior twists at an extremal
point to their mu-index targets, rewrite its visits through angular chains,
and recurse on the configuration with that point removed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geometry import (
    AdmissibleConfig,
    GeometryError,
    chain,
    extremal_points,
    is_local_triangle,
    mu_index,
)


class GroupoidError(ValueError):
    pass


@dataclass(frozen=True)
class GroupoidWord:
    points: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.points) != len(self.exps) or not self.points:
            raise GroupoidError("need one exponent per point, k >= 0")
        for a, b in zip(self.points, self.points[1:]):
            if a == b:
                raise GroupoidError(f"repeated adjacent point {a}")

    @property
    def target(self) -> int:
        return self.points[0]

    @property
    def source(self) -> int:
        return self.points[-1]

    def compose(self, other: "GroupoidWord") -> "GroupoidWord":
        if self.source != other.target:
            raise GroupoidError(
                f"cannot compose: source {self.source} != target {other.target}"
            )
        return GroupoidWord(
            self.points + other.points[1:],
            self.exps[:-1] + (self.exps[-1] + other.exps[0],) + other.exps[1:],
        )

    def invert(self) -> "GroupoidWord":
        return GroupoidWord(
            tuple(reversed(self.points)), tuple(-e for e in reversed(self.exps))
        )

    def __str__(self) -> str:
        return ",".join(f"{z}:{e}" for z, e in zip(self.points, self.exps))


def parse_groupoid_word(text: str) -> GroupoidWord:
    """Grammar: comma-separated index:exponent pairs, target first."""
    pts, exps = [], []
    for item in text.split(","):
        try:
            z, e = item.split(":")
            pts.append(int(z))
            exps.append(int(e))
        except ValueError:
            raise GroupoidError(f"bad groupoid word item {item!r}") from None
    return GroupoidWord(tuple(pts), tuple(exps))


@dataclass(frozen=True)
class StraightLineData:
    """Symmetric/skew straight-line intersection data over a config."""

    cfg: AdmissibleConfig
    q: tuple[tuple[int, ...], ...]


def validate_Q(cfg: AdmissibleConfig, rows) -> StraightLineData:
    rows = [list(r) for r in rows]
    m = cfg.m
    if len(rows) != m or any(len(r) != m for r in rows):
        raise GroupoidError(f"Q must be {m}x{m}")
    sgn, diag = cfg.parity.sgn, cfg.parity.diag
    for i in range(m):
        if rows[i][i] != diag:
            raise GroupoidError(
                f"Q diagonal ({i + 1},{i + 1}) = {rows[i][i]}, must be {diag}"
            )
        for j in range(m):
            if rows[i][j] != sgn * rows[j][i]:
                raise GroupoidError(
                    f"Q symmetry violated at ({i + 1},{j + 1})"
                )
    return StraightLineData(cfg, tuple(tuple(r) for r in rows))


# --- relation rewrites (also used by the well-definedness tests) -----------

def rel1_insert(w: GroupoidWord, pos: int, mid: int, left_exp: int) -> GroupoidWord:
    """Insert a backtrack through `mid` at point position pos, splitting the
    twist exponent there as left_exp + (old - left_exp)."""
    z = w.points[pos]
    if mid == z:
        raise GroupoidError("backtrack point must differ")
    pts = w.points[:pos + 1] + (mid, z) + w.points[pos + 1:]
    exps = (
        w.exps[:pos]
        + (left_exp, 0, w.exps[pos] - left_exp)
        + w.exps[pos + 1:]
    )
    return GroupoidWord(pts, exps)


def rel2_rewrite(cfg: AdmissibleConfig, w: GroupoidWord, seg: int, mid: int) -> GroupoidWord:
    """Rewrite segment s(z, z') (between point positions seg, seg+1) through
    a local triangle (z, mid, z'):

        s(z,z') = eps(z)^{mu(z',z,mid)} s(z,mid) eps(mid)^{mu(z,mid,z')}
                  s(mid,z') eps(z')^{mu(mid,z',z)}
    """
    z, zp = w.points[seg], w.points[seg + 1]
    if not is_local_triangle(cfg, z, mid, zp):
        raise GroupoidError(f"({z}, {mid}, {zp}) is not a local triangle")
    mu0 = mu_index(cfg, zp, z, mid)
    mu1 = mu_index(cfg, z, mid, zp)
    mu2 = mu_index(cfg, mid, zp, z)
    pts = w.points[:seg + 1] + (mid,) + w.points[seg + 1:]
    exps = (
        w.exps[:seg]
        + (w.exps[seg] + mu0, mu1, mu2 + w.exps[seg + 1])
        + w.exps[seg + 2:]
    )
    return GroupoidWord(pts, exps)


# --- the evaluator ---------------------------------------------------------

class _Evaluator:
    def __init__(self, data: StraightLineData, rng: random.Random | None, max_steps: int):
        self.cfg = data.cfg
        self.q = data.q
        p = data.cfg.parity
        self.sgn, self.eps, self.diag = p.sgn, p.eps, p.diag
        self.bsign = 1 if p.n_mod_4 % 2 == 1 else -1  # (-1)^{n+1}
        self.rng = rng
        self.steps = max_steps
        self.memo: dict = {}

    def _tick(self):
        self.steps -= 1
        if self.steps <= 0:
            raise GroupoidError("chi evaluation step budget exhausted")

    def _normalize(self, pts, exps):
        """Strip boundary twists (collecting the sign) and cancel
        zero-exponent backtracks, to a fixed point."""
        s = 1
        pts, exps = list(pts), list(exps)
        while True:
            if exps[0] != 0:
                s *= self.bsign ** (exps[0] & 1)
                exps[0] = 0
            if exps[-1] != 0:
                s *= self.bsign ** (exps[-1] & 1)
                exps[-1] = 0
            for i in range(1, len(pts) - 1):
                if exps[i] == 0 and pts[i - 1] == pts[i + 1]:
                    exps[i - 1 : i + 2] = [exps[i - 1] + exps[i + 1]]
                    del pts[i : i + 2]
                    break
            else:
                return s, tuple(pts), tuple(exps)

    def _mu_target(self, a: int, e: int, b: int) -> int:
        return 0 if a == b else mu_index(self.cfg, a, e, b)

    def ev(self, active: tuple, pts, exps) -> int:
        self._tick()
        s, pts, exps = self._normalize(pts, exps)
        if len(pts) == 1:
            return s * self.diag
        if len(pts) == 2:
            return s * self.q[pts[0] - 1][pts[1] - 1]
        key = (active, pts, exps)
        if key not in self.memo:
            self.memo[key] = self._core(active, pts, exps)
        return s * self.memo[key]

    def _split(self, active, pts, exps, i, target):
        """One reflection step moving exps[i] one unit toward target."""
        m = exps[i]
        step = 1 if m > target else -1
        factor = self.eps if step == 1 else self.sgn * self.eps
        main = exps[:i] + (m - step,) + exps[i + 1:]
        a_pts, a_exps = pts[: i + 1], exps[:i] + (m - step,)
        b_pts, b_exps = pts[i:], (0,) + exps[i + 1:]
        return (
            self.ev(active, pts, main)
            - factor * self.ev(active, a_pts, a_exps) * self.ev(active, b_pts, b_exps)
        )

    def _core(self, active, pts, exps) -> int:
        if len(active) < 3:
            # two-point configuration: push every interior twist to zero;
            # backtrack cancellation then finishes the job
            for i in range(1, len(pts) - 1):
                if exps[i] != 0:
                    return self._split(active, pts, exps, i, 0)
            raise AssertionError("normalized two-point word with no twists")

        ext = extremal_points(self.cfg, active)
        cand = [e for e in ext if e != pts[0] and e != pts[-1]]
        if not cand:
            raise AssertionError("no admissible extremal point")
        if self.rng is not None:
            e = self.rng.choice(cand)
        else:
            e = cand[0]

        sub = tuple(k for k in active if k != e)
        if e not in pts:
            return self.ev(sub, pts, exps)

        # shift every interior twist at e to its mu target
        for i in range(1, len(pts) - 1):
            if pts[i] == e and exps[i] != self._mu_target(pts[i - 1], e, pts[i + 1]):
                return self._split(
                    active, pts, exps, i, self._mu_target(pts[i - 1], e, pts[i + 1])
                )

        # every visit of e now carries exactly its mu-index; unfold each
        # through the angular chain around e and drop e from the config
        new_pts = [pts[0]]
        new_exps = [exps[0]]
        i = 1
        while i < len(pts):
            if i < len(pts) - 1 and pts[i] == e:
                a, b = new_pts[-1], pts[i + 1]
                ch = chain(self.cfg, e, a, b, indices=active)
                if sum(
                    mu_index(self.cfg, ch[t - 1], e, ch[t])
                    for t in range(1, len(ch))
                ) != exps[i]:
                    raise AssertionError("mu additivity failed along chain")
                for t in range(1, len(ch)):
                    if not is_local_triangle(
                        self.cfg, ch[t - 1], e, ch[t], indices=active
                    ):
                        raise AssertionError("chain triple is not a local triangle")
                new_exps[-1] += -mu_index(self.cfg, ch[1], a, e)
                for t in range(1, len(ch) - 1):
                    wj = ch[t]
                    new_pts.append(wj)
                    new_exps.append(
                        -mu_index(self.cfg, e, wj, ch[t - 1])
                        - mu_index(self.cfg, ch[t + 1], wj, e)
                    )
                new_pts.append(b)
                new_exps.append(-mu_index(self.cfg, e, b, ch[-2]) + exps[i + 1])
                i += 2
            else:
                new_pts.append(pts[i])
                new_exps.append(exps[i])
                i += 1
        return self.ev(sub, tuple(new_pts), tuple(new_exps))


def chi_evaluate(
    data: StraightLineData,
    w: GroupoidWord,
    rng: random.Random | None = None,
    max_steps: int = 10**6,
) -> int:
    """Evaluate chi^Q on a groupoid word.

    rng, when given, randomizes the internal extremal-point choices (the
    result must not depend on them); max_steps bounds the recursion.
    """
    cfg = data.cfg
    for z in w.points:
        if not 1 <= z <= cfg.m:
            raise GroupoidError(f"point index {z} out of range 1..{cfg.m}")
    active = tuple(range(1, cfg.m + 1))
    return _Evaluator(data, rng, max_steps).ev(active, w.points, w.exps)
