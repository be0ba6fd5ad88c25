"""Free group words on g_1..g_m, braid words on s_2..s_m / e_1..e_m, and
the braid action on the free group.

Words are stored run-length: a tuple of (generator index, nonzero exponent)
pairs with adjacent indices distinct.  Braid letters compose like mapping
classes: in a braid word the LEFTMOST letter acts LAST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class WordError(ValueError):
    pass


def _reduce(pairs):
    out = []
    for i, e in pairs:
        if e == 0:
            continue
        if out and out[-1][0] == i:
            e += out[-1][1]
            out.pop()
            if e == 0:
                continue
        out.append((i, e))
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """Reduced word in the free group on g_1..g_m."""

    m: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, e in self.letters:
            if not 1 <= i <= self.m:
                raise WordError(f"generator index {i} out of range 1..{self.m}")
            if e == 0:
                raise WordError("zero exponent in reduced word")
        for (i, _), (j, _) in zip(self.letters, self.letters[1:]):
            if i == j:
                raise WordError("word not freely reduced")

    @staticmethod
    def identity(m: int) -> "FreeWord":
        return FreeWord(m, ())

    @staticmethod
    def gen(m: int, i: int, e: int = 1) -> "FreeWord":
        if e == 0:
            return FreeWord(m, ())
        return FreeWord(m, ((i, e),))

    @staticmethod
    def make(m: int, pairs) -> "FreeWord":
        """Build from arbitrary (index, exponent) pairs, reducing freely."""
        return FreeWord(m, _reduce(pairs))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.m != other.m:
            raise WordError(f"mixed ranks {self.m} and {other.m}")
        return FreeWord(self.m, _reduce(self.letters + other.letters))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.m, tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return self.inverse() ** (-n)
        out = FreeWord.identity(self.m)
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"FreeWord({self.m}, {format_word(self)!r})"


# --- grammars -------------------------------------------------------------
#
# Free-group words: whitespace-separated tokens  g<i>, g<i>', g<i>^<int>.
# Braid words: tokens s<k> (k >= 2) and e<i>, same suffixes; the leftmost
# token acts last.

_TOKEN = re.compile(r"^([a-z]+)(\d+)(?:(')|\^(-?\d+))?$")


def _parse_tokens(text: str):
    if text.strip() == "1":  # the identity, as printed by the formatters
        return
    for tok in text.split():
        mo = _TOKEN.match(tok)
        if not mo:
            raise WordError(f"bad token {tok!r}")
        kind, idx, prime, pow_ = mo.groups()
        e = -1 if prime else int(pow_) if pow_ is not None else 1
        yield kind, int(idx), e


def parse_word(text: str, m: int) -> FreeWord:
    pairs = []
    for kind, i, e in _parse_tokens(text):
        if kind != "g":
            raise WordError(f"expected g<i> token, got {kind}{i}")
        if not 1 <= i <= m:
            raise WordError(f"generator index {i} out of range 1..{m}")
        pairs.append((i, e))
    return FreeWord.make(m, pairs)


def _fmt(letter: str, i: int, e: int) -> str:
    if e == 1:
        return f"{letter}{i}"
    if e == -1:
        return f"{letter}{i}'"
    return f"{letter}{i}^{e}"


def format_word(w: FreeWord) -> str:
    if not w.letters:
        return "1"
    return " ".join(_fmt("g", i, e) for i, e in w.letters)


@dataclass(frozen=True)
class BraidWord:
    """Word in the framed braid group on m strands.

    Letters are (kind, index, exp) with kind 's' (index 2..m) or 'e'
    (index 1..m) and exp = ±1.
    """

    m: int
    letters: tuple[tuple[str, int, int], ...]

    def __post_init__(self):
        for kind, i, e in self.letters:
            if kind == "s":
                if not 2 <= i <= self.m:
                    raise WordError(f"sigma index {i} out of range 2..{self.m}")
            elif kind == "e":
                if not 1 <= i <= self.m:
                    raise WordError(f"epsilon index {i} out of range 1..{self.m}")
            else:
                raise WordError(f"unknown braid letter kind {kind!r}")
            if e not in (1, -1):
                raise WordError("braid letters carry exponent ±1")

    @staticmethod
    def identity(m: int) -> "BraidWord":
        return BraidWord(m, ())

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.m != other.m:
            raise WordError(f"mixed strand counts {self.m} and {other.m}")
        return BraidWord(self.m, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.m, tuple((k, i, -e) for k, i, e in reversed(self.letters))
        )

    def is_framed(self) -> bool:
        """True if the word contains an epsilon letter."""
        return any(k == "e" for k, _, _ in self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f"BraidWord({self.m}, {format_braid(self)!r})"


def parse_braid(text: str, m: int) -> BraidWord:
    letters = []
    for kind, i, e in _parse_tokens(text):
        if kind not in ("s", "e"):
            raise WordError(f"expected s<k> or e<i> token, got {kind}{i}")
        if e == 0:
            continue
        sign = 1 if e > 0 else -1
        letters.extend([(kind, i, sign)] * abs(e))
    return BraidWord(m, tuple(letters))


def format_braid(b: BraidWord) -> str:
    if not b.letters:
        return "1"
    # re-merge runs for readability
    runs: list[list] = []
    for k, i, e in b.letters:
        if runs and runs[-1][0] == k and runs[-1][1] == i:
            runs[-1][2] += e
        else:
            runs.append([k, i, e])
    return " ".join(_fmt(k, i, e) for k, i, e in runs if e != 0)


# --- braid action on the free group ---------------------------------------

def _act_letter_on_gen(kind: str, k: int, exp: int, i: int, m: int) -> FreeWord:
    """Image of g_i under a single braid letter."""
    if kind == "e":
        return FreeWord.gen(m, i)
    if exp == 1:
        if i == k - 1:
            return FreeWord.make(m, [(k - 1, 1), (k, 1), (k - 1, -1)])
        if i == k:
            return FreeWord.gen(m, k - 1)
    else:
        if i == k - 1:
            return FreeWord.gen(m, k)
        if i == k:
            return FreeWord.make(m, [(k, -1), (k - 1, 1), (k, 1)])
    return FreeWord.gen(m, i)


def _act_letter(kind: str, k: int, exp: int, w: FreeWord) -> FreeWord:
    out = FreeWord.identity(w.m)
    for i, e in w.letters:
        out = out * (_act_letter_on_gen(kind, k, exp, i, w.m) ** e)
    return out


def braid_act_word(b: BraidWord, w: FreeWord) -> FreeWord:
    """Apply the braid action; letters of b are applied right-to-left."""
    if b.m != w.m:
        raise WordError(f"mixed ranks {b.m} and {w.m}")
    for kind, k, exp in reversed(b.letters):
        w = _act_letter(kind, k, exp, w)
    return w
