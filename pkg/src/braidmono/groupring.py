"""Integer group ring of the free group, and Laurent rings (univariate t,
multivariate t_1..t_m) reached by abelianization g_i -> t^{-1} / t_i^{-1}.
"""

from __future__ import annotations

from .words import BraidWord, FreeWord, WordError, braid_act_word, format_word


class GroupRingElt:
    """Finite integer combination of free-group words.

    terms maps FreeWord -> nonzero int.  Immutable by convention.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict):
        self.m = m
        self.terms = {w: c for w, c in terms.items() if c != 0}

    @staticmethod
    def zero(m: int) -> "GroupRingElt":
        return GroupRingElt(m, {})

    @staticmethod
    def one(m: int) -> "GroupRingElt":
        return GroupRingElt(m, {FreeWord.identity(m): 1})

    @staticmethod
    def from_word(w: FreeWord, coeff: int = 1) -> "GroupRingElt":
        return GroupRingElt(w.m, {w: coeff})

    @staticmethod
    def from_int(m: int, c: int) -> "GroupRingElt":
        return GroupRingElt(m, {FreeWord.identity(m): c})

    def _check(self, other: "GroupRingElt"):
        if self.m != other.m:
            raise WordError(f"mixed ranks {self.m} and {other.m}")

    def __add__(self, other: "GroupRingElt") -> "GroupRingElt":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRingElt(self.m, terms)

    def __neg__(self) -> "GroupRingElt":
        return GroupRingElt(self.m, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElt") -> "GroupRingElt":
        return self + (-other)

    def __mul__(self, other: "GroupRingElt") -> "GroupRingElt":
        """Convolution product: (ab)(h) = sum_g a(g) b(g^{-1} h)."""
        self._check(other)
        terms: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u * v
                terms[w] = terms.get(w, 0) + cu * cv
        return GroupRingElt(self.m, terms)

    def scale(self, c: int) -> "GroupRingElt":
        return GroupRingElt(self.m, {w: c * x for w, x in self.terms.items()})

    def involute(self) -> "GroupRingElt":
        """Sum c_g * g  ->  sum c_g * g^{-1}."""
        terms: dict = {}
        for w, c in self.terms.items():
            wi = w.inverse()
            terms[wi] = terms.get(wi, 0) + c
        return GroupRingElt(self.m, terms)

    def act(self, b: BraidWord) -> "GroupRingElt":
        terms: dict = {}
        for w, c in self.terms.items():
            wb = braid_act_word(b, w)
            terms[wb] = terms.get(wb, 0) + c
        return GroupRingElt(self.m, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElt)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_ring_elt(self)

    def __repr__(self) -> str:
        return f"GroupRingElt({self.m}, {format_ring_elt(self)!r})"


def _word_sort_key(w: FreeWord):
    return (w.length(), w.letters)


def format_ring_elt(a: GroupRingElt) -> str:
    """Render as e.g. "2*g1 g2' + 1" / "1 - g1"; deterministic term order."""
    if not a.terms:
        return "0"
    parts = []
    for w in sorted(a.terms, key=_word_sort_key):
        c = a.terms[w]
        if w.is_identity():
            body = str(abs(c))
        elif abs(c) == 1:
            body = format_word(w)
        else:
            body = f"{abs(c)}*{format_word(w)}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class LaurentElt:
    """Laurent polynomial with integer coefficients.

    nvars = 0 marks the univariate ring Z[t, t^{-1}] (exponent keys are
    1-tuples); nvars = m > 0 is Z[t_1^{±1}, ..., t_m^{±1}] with m-tuple keys.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict):
        self.nvars = nvars
        width = 1 if nvars == 0 else nvars
        for v in terms:
            if len(v) != width:
                raise ValueError(f"exponent vector {v} has wrong arity")
        self.terms = {v: c for v, c in terms.items() if c != 0}

    @staticmethod
    def zero(nvars: int) -> "LaurentElt":
        return LaurentElt(nvars, {})

    @staticmethod
    def one(nvars: int) -> "LaurentElt":
        width = 1 if nvars == 0 else nvars
        return LaurentElt(nvars, {(0,) * width: 1})

    @staticmethod
    def var(nvars: int, i: int = 1, e: int = 1) -> "LaurentElt":
        """t^e (univariate) or t_i^e (multivariate)."""
        if nvars == 0:
            return LaurentElt(0, {(e,): 1})
        v = [0] * nvars
        v[i - 1] = e
        return LaurentElt(nvars, {tuple(v): 1})

    def _check(self, other: "LaurentElt"):
        if self.nvars != other.nvars:
            raise ValueError(f"mixed Laurent rings {self.nvars} and {other.nvars}")

    def __add__(self, other: "LaurentElt") -> "LaurentElt":
        self._check(other)
        terms = dict(self.terms)
        for v, c in other.terms.items():
            terms[v] = terms.get(v, 0) + c
        return LaurentElt(self.nvars, terms)

    def __neg__(self) -> "LaurentElt":
        return LaurentElt(self.nvars, {v: -c for v, c in self.terms.items()})

    def __sub__(self, other: "LaurentElt") -> "LaurentElt":
        return self + (-other)

    def __mul__(self, other: "LaurentElt") -> "LaurentElt":
        self._check(other)
        terms: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = tuple(a + b for a, b in zip(u, v))
                terms[w] = terms.get(w, 0) + cu * cv
        return LaurentElt(self.nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentElt)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentElt({self.nvars}, {format_laurent(self)!r})"


def _monomial_str(nvars: int, v: tuple) -> str:
    if nvars == 0:
        (e,) = v
        if e == 0:
            return ""
        return "t" if e == 1 else f"t^{e}"
    factors = [
        (f"t{i}" if e == 1 else f"t{i}^{e}")
        for i, e in enumerate(v, start=1)
        if e != 0
    ]
    return "*".join(factors)


def format_laurent(a: LaurentElt) -> str:
    if not a.terms:
        return "0"
    parts = []
    for v in sorted(a.terms):
        c = a.terms[v]
        mono = _monomial_str(a.nvars, v)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def abelian_reduce(x, mode: str):
    """Ring homomorphism g_i -> t^{-1} (univariate) or t_i^{-1} (multivariate).

    Accepts a FreeWord or a GroupRingElt.
    """
    if mode not in ("univariate", "multivariate"):
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(x, FreeWord):
        if mode == "univariate":
            total = -sum(e for _, e in x.letters)
            return LaurentElt(0, {(total,): 1})
        v = [0] * x.m
        for i, e in x.letters:
            v[i - 1] -= e
        return LaurentElt(x.m, {tuple(v): 1})
    if isinstance(x, GroupRingElt):
        nvars = 0 if mode == "univariate" else x.m
        out = LaurentElt.zero(nvars)
        for w, c in x.terms.items():
            mono = abelian_reduce(w, mode)
            out = out + LaurentElt(nvars, {v: c * k for v, k in mono.terms.items()})
        return out
    raise TypeError(f"cannot reduce {type(x).__name__}")
