import random

import pytest

from braidmono import (
    BraidWord,
    FreeWord,
    ParityClass,
    build_fan_config,
    validate_N,
)


def rand_braid(rng, m, length, framed=True):
    letters = []
    for _ in range(length):
        if framed and m >= 1 and (m < 2 or rng.random() < 0.3):
            letters.append(("e", rng.randint(1, m), rng.choice((1, -1))))
        else:
            letters.append(("s", rng.randint(2, m), rng.choice((1, -1))))
    return BraidWord(m, tuple(letters))


def rand_free(rng, m, length):
    pairs = [(rng.randint(1, m), rng.choice((1, -1))) for _ in range(length)]
    return FreeWord.make(m, pairs)


def rand_N(rng, parity, m, bound=5):
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = parity.diag
        for j in range(i + 1, m):
            v = rng.randint(-bound, bound)
            rows[i][j] = v
            rows[j][i] = parity.sgn * v
    return validate_N(parity, rows)


def rand_fan(rng, parity, m_lo=2, m_hi=6):
    """Random fan configuration with the basepoint below all points."""
    while True:
        m = rng.randint(m_lo, m_hi)
        pts = [(rng.randint(-25, 25), rng.randint(5, 35)) for _ in range(m)]
        z0 = (rng.randint(-5, 5), -rng.randint(2, 9))
        try:
            return build_fan_config(pts, z0, parity)
        except ValueError:
            continue


def rand_groupoid_points(rng, m, hops):
    pts = [rng.randint(1, m)]
    for _ in range(hops):
        nxt = rng.randint(1, m)
        while nxt == pts[-1]:
            nxt = rng.randint(1, m)
        pts.append(nxt)
    return pts


@pytest.fixture
def rng():
    return random.Random(12345)


def all_parities():
    return [ParityClass(k) for k in range(4)]
