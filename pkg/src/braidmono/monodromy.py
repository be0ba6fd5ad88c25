"""Intersection matrices with parity class, the twist representation rho_N,
the integer cocycle S(sigma, N) and induced action on N, character
transforms, integer kernels, and the branched-cover character engine with
its bundled 3-sheeted example.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord, FreeWord, WordError
from .matrices import MonomialGammaMatrix
from .cocycles import pl_cocycle


class ParityError(ValueError):
    pass


@dataclass(frozen=True)
class ParityClass:
    """Fiber-dimension parity n mod 4 and the derived sign data."""

    n_mod_4: int

    def __post_init__(self):
        if self.n_mod_4 not in (0, 1, 2, 3):
            raise ParityError(f"n mod 4 must be 0..3, got {self.n_mod_4}")

    @property
    def sgn(self) -> int:
        """(-1)^n"""
        return 1 if self.n_mod_4 % 2 == 0 else -1

    @property
    def eps(self) -> int:
        """(-1)^{n(n+1)/2}"""
        return 1 if self.n_mod_4 in (0, 3) else -1

    @property
    def diag(self) -> int:
        """Forced diagonal: 0 for n odd, 2*(-1)^{n/2} for n even."""
        if self.n_mod_4 % 2 == 1:
            return 0
        return 2 if self.n_mod_4 == 0 else -2


# --- small exact integer matrix helpers ------------------------------------

def mat_eye(m: int):
    return [[1 if i == j else 0 for j in range(m)] for i in range(m)]


def mat_mul(a, b):
    m, n, p = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(p)]
        for i in range(m)
    ]


def mat_transpose(a):
    return [list(r) for r in zip(*a)]


def _freeze(a):
    return tuple(tuple(r) for r in a)


@dataclass(frozen=True)
class IntersectionMatrix:
    parity: ParityClass
    n: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.n)

    def rows(self):
        return [list(r) for r in self.n]


def validate_N(parity: ParityClass, rows) -> IntersectionMatrix:
    rows = [list(r) for r in rows]
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ParityError("matrix must be square")
    sgn, diag = parity.sgn, parity.diag
    for i in range(m):
        if rows[i][i] != diag:
            raise ParityError(
                f"diagonal entry ({i + 1},{i + 1}) = {rows[i][i]}, must be {diag}"
            )
        for j in range(m):
            if rows[i][j] != sgn * rows[j][i]:
                raise ParityError(
                    f"symmetry violated at ({i + 1},{j + 1}): "
                    f"{rows[i][j]} != {sgn}*{rows[j][i]}"
                )
    return IntersectionMatrix(parity, _freeze(rows))


def _rho_gen(N: IntersectionMatrix, i: int, inverse: bool):
    """rho_N(g_i) = I - eps E_i N;  rho_N(g_i^{-1}) = I - sgn*eps E_i N."""
    m = N.m
    s = N.parity.eps if not inverse else N.parity.sgn * N.parity.eps
    out = mat_eye(m)
    for j in range(m):
        out[i - 1][j] -= s * N.n[i - 1][j]
    return out


def rho(N: IntersectionMatrix, g: FreeWord):
    if g.m != N.m:
        raise WordError(f"word rank {g.m} vs matrix size {N.m}")
    out = mat_eye(N.m)
    for i, e in g.letters:
        base = _rho_gen(N, i, inverse=e < 0)
        for _ in range(abs(e)):
            out = mat_mul(out, base)
    return out


def character(N: IntersectionMatrix, g: FreeWord):
    """The monodromy character value N * rho_N(g)."""
    return mat_mul(N.rows(), rho(N, g))


def theoremB_S(sigma: BraidWord, N: IntersectionMatrix):
    """Integer cocycle: column j of S is column pi(j) of rho_N(s_j^{-1}),
    with (pi, s_j) the monomial cocycle of sigma."""
    if sigma.m != N.m:
        raise WordError(f"strand count {sigma.m} vs matrix size {N.m}")
    mono = pl_cocycle(sigma)
    m = N.m
    S = [[0] * m for _ in range(m)]
    for j in range(m):
        r = rho(N, mono.entries[j].inverse())
        col = mono.perm[j] - 1
        for a in range(m):
            S[a][j] = r[a][col]
    return S


def act_on_N(sigma: BraidWord, N: IntersectionMatrix) -> IntersectionMatrix:
    """sigma^* N = S(sigma,N)^T N S(sigma,N); revalidated."""
    S = theoremB_S(sigma, N)
    out = mat_mul(mat_transpose(S), mat_mul(N.rows(), S))
    return validate_N(N.parity, out)


def character_transform(N: IntersectionMatrix, tau: BraidWord, g: FreeWord):
    """(S_c(tau)^t 𝒩 S_c(tau))(g): entry (j,l) is the character of
    s_j · g · s_l^{-1} at position (pi(j), pi(l))."""
    if tau.m != N.m or g.m != N.m:
        raise WordError("size mismatch")
    mono = pl_cocycle(tau)
    m = N.m
    out = [[0] * m for _ in range(m)]
    for j in range(m):
        for l in range(m):
            x = mono.entries[j] * g * mono.entries[l].inverse()
            out[j][l] = character(N, x)[mono.perm[j] - 1][mono.perm[l] - 1]
    return out


def kernel_basis(N: IntersectionMatrix):
    """(rank, integer lattice basis of ker N) via integer row reduction of
    the transpose augmented with the identity."""
    m = N.m
    # rows of [N^T | I]; integer row ops preserve the lattice relations
    aug = [list(col) + [1 if i == j else 0 for j in range(m)]
           for i, col in enumerate(mat_transpose(N.rows()))]
    pivot_row = 0
    for col in range(m):
        # eliminate column col below pivot_row with gcd steps
        while True:
            nz = [r for r in range(pivot_row, m) if aug[r][col] != 0]
            if not nz:
                break
            r0 = min(nz, key=lambda r: abs(aug[r][col]))
            aug[pivot_row], aug[r0] = aug[r0], aug[pivot_row]
            done = True
            for r in range(pivot_row + 1, m):
                q = aug[r][col] // aug[pivot_row][col]
                if q:
                    aug[r] = [x - q * y for x, y in zip(aug[r], aug[pivot_row])]
                if aug[r][col] != 0:
                    done = False
            if done:
                pivot_row += 1
                break
    rank = pivot_row
    basis = [row[m:] for row in aug[rank:] if all(x == 0 for x in row[:m])]
    return rank, basis


# --- branched-cover characters ---------------------------------------------

@dataclass(frozen=True)
class OrientedZeroSphere:
    """Two distinct fiber-point labels with opposite orientation signs."""

    points: tuple[tuple[int, int], tuple[int, int]]  # (label, sign) pairs

    def __post_init__(self):
        (l1, s1), (l2, s2) = self.points
        if l1 == l2:
            raise ValueError("labels of an oriented 0-sphere must be distinct")
        if abs(s1) != 1 or abs(s2) != 1:
            raise ValueError("signs must be ±1")


def _pairing(L: OrientedZeroSphere, M: OrientedZeroSphere) -> int:
    return sum(
        s * t for (a, s) in L.points for (b, t) in M.points if a == b
    )


def cover_character(perm_assignment: dict, cycles, g) -> list:
    """Intersection matrix entry (i,j) = <L_i, g·L_j> for a word g in the
    assigned deck permutations; the rightmost generator acts first.

    perm_assignment maps generator name -> dict label->label; g is a
    sequence of (name, exponent) pairs, or a juxtaposed string like "ab".
    """
    if isinstance(g, str):
        g = [(tok, 1) for tok in list_word(g)] if g != "1" else []
    perms = {}
    for name, table in perm_assignment.items():
        perms[name] = dict(table)
        inv = {v: k for k, v in table.items()}
        if len(inv) != len(table):
            raise ValueError(f"assignment for {name!r} is not a bijection")
        perms[name + "^-1"] = inv

    def apply(label: int) -> int:
        for name, e in reversed(list(g)):
            if name not in perms:
                raise ValueError(f"generator {name!r} not assigned")
            table = perms[name] if e >= 0 else perms[name + "^-1"]
            for _ in range(abs(e)):
                label = table.get(label, label)
        return label

    moved = [
        OrientedZeroSphere(tuple((apply(a), s) for a, s in L.points))
        for L in cycles
    ]
    return [[_pairing(L, M) for M in moved] for L in cycles]


def cover_example():
    """The bundled 3-sheeted branched cover over the torus: four vanishing
    0-spheres in the fiber {1,2,3}; returns the six matrices for the words
    1, a, g2, b, ab, ba (parity class n = 0)."""
    t12 = {1: 2, 2: 1, 3: 3}
    t13 = {1: 3, 3: 1, 2: 2}
    t23 = {2: 3, 3: 2, 1: 1}
    assignment = {
        "a": t12, "b": t23,
        "g1": t12, "g3": t12, "g2": t13, "g4": t13,
    }
    cycles = [
        OrientedZeroSphere(((1, -1), (2, 1))),
        OrientedZeroSphere(((1, 1), (3, -1))),
        OrientedZeroSphere(((1, 1), (2, -1))),
        OrientedZeroSphere(((1, 1), (3, -1))),
    ]
    words = ["1", "a", "g2", "b", "ab", "ba"]
    out = {w: cover_character(assignment, cycles, w) for w in words}
    return assignment, cycles, out


def list_word(w: str):
    """Split a juxtaposed word like 'ab' or 'g2' into generator names."""
    names = []
    i = 0
    while i < len(w):
        if w[i] == "g" and i + 1 < len(w) and w[i + 1].isdigit():
            names.append(w[i : i + 2])
            i += 2
        else:
            names.append(w[i])
            i += 1
    return names
