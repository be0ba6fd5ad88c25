"""Command-line frontend.

Exit codes: 0 success, 1 input/validation error, 2 internal invariant
violation (a bug in the library, not in the input).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .words import BraidWord, parse_braid, parse_word
from .cocycles import fox_derivative, magnus_cocycle, pl_cocycle, reduce_reps
from .groupring import GroupRingElt
from .braids import linking_numbers
from .monodromy import (
    IntersectionMatrix,
    ParityClass,
    act_on_N,
    character,
    cover_example,
    mat_mul,
    mat_transpose,
    theoremB_S,
    validate_N,
)
from .groupoid import chi_evaluate, parse_groupoid_word, validate_Q
from .reconstruct import build_fan_config, forward_Q, reconstruct_N
from . import serialize as ser


def _emit(obj) -> None:
    print(ser.dumps(obj))


def _cmd_pl_cocycle(args) -> int:
    b = parse_braid(args.word, args.m)
    _emit(ser.monomial_json(pl_cocycle(b)))
    return 0


def _cmd_magnus(args) -> int:
    b = parse_braid(args.word, args.m)
    _emit({"matrix": ser.ring_matrix_json(magnus_cocycle(b))})
    return 0


def _cmd_rep(args) -> int:
    b = parse_braid(args.word, args.m)
    rep = args.rep.replace("-", "_")
    _emit({"rep": args.rep, "matrix": ser.ring_matrix_json(reduce_reps(b, rep))})
    return 0


def _load_N(args) -> IntersectionMatrix:
    return ser.load_int_matrix(args.matrix, ParityClass(args.n_class))


def _cmd_act(args) -> int:
    N = _load_N(args)
    b = parse_braid(args.word, N.m)
    S = theoremB_S(b, N)
    out = act_on_N(b, N)
    _emit({"S": S, "N_out": ser.int_matrix_json(N.parity, out.rows())})
    return 0


def _cmd_character(args) -> int:
    N = _load_N(args)
    g = parse_word(args.g, N.m)
    _emit({"matrix": character(N, g)})
    return 0


def _load_Q(config, path):
    raw = ser.load_int_matrix(path, config.parity if not hasattr(config, "cfg") else config.cfg.parity)
    cfg = config.cfg if hasattr(config, "cfg") else config
    return validate_Q(cfg, raw.rows())


def _cmd_chi(args) -> int:
    config = ser.load_config(args.config)
    cfg = config.cfg if hasattr(config, "cfg") else config
    Q = _load_Q(config, args.q)
    w = parse_groupoid_word(args.word)
    print(chi_evaluate(Q, w))
    return 0


def _cmd_forward(args) -> int:
    fan = ser.require_fan(ser.load_config(args.config))
    N = ser.load_int_matrix(args.matrix, fan.cfg.parity)
    Q = forward_Q(fan, N)
    _emit(ser.int_matrix_json(fan.cfg.parity, [list(r) for r in Q.q]))
    return 0


def _cmd_reconstruct(args) -> int:
    fan = ser.require_fan(ser.load_config(args.config))
    Q = _load_Q(fan, args.q)
    N = reconstruct_N(fan, Q)
    _emit(ser.int_matrix_json(fan.cfg.parity, N.rows()))
    return 0


def _fmt_rows(rows) -> str:
    return "\n".join("  " + " ".join(f"{x:3d}" for x in r) for r in rows)


def _cmd_cover_example(args) -> int:
    _, _, out = cover_example()
    for w in ["1", "a", "g2", "b", "ab", "ba"]:
        print(f"N({w}):")
        print(_fmt_rows(out[w]))
    # gluing: N(g_i) = N(1) - N(1) E_i N(1); strands 1,3 give N(a), 2,4 give N(g2)
    N1 = out["1"]
    for i, want in [(1, "a"), (3, "a"), (2, "g2"), (4, "g2")]:
        E = [[1 if (r == c == i - 1) else 0 for c in range(4)] for r in range(4)]
        glued = [
            [N1[r][c] - mat_mul(N1, mat_mul(E, N1))[r][c] for c in range(4)]
            for r in range(4)
        ]
        if glued != out[want]:
            print(f"gluing identity failed at i = {i}", file=sys.stderr)
            return 2
    if mat_transpose(out["ab"]) != out["ba"]:
        print("transpose identity N(ba) = N(ab)^T failed", file=sys.stderr)
        return 2
    print("identities verified")
    return 0


def _cmd_selftest(args) -> int:
    from .words import FreeWord
    from .braids import braid_permutation

    rng = random.Random(0)
    m = 4

    def rand_braid(length=6, framed=True):
        letters = []
        for _ in range(length):
            if framed and rng.random() < 0.3:
                letters.append(("e", rng.randint(1, m), rng.choice((1, -1))))
            else:
                letters.append(("s", rng.randint(2, m), rng.choice((1, -1))))
        return BraidWord(m, tuple(letters))

    def rand_free(length=8):
        pairs = [(rng.randint(1, m), rng.choice((1, -1))) for _ in range(length)]
        return FreeWord.make(m, pairs)

    for _ in range(25):
        u, v = rand_braid(), rand_braid()
        lhs = pl_cocycle(u * v)
        rhs = pl_cocycle(u).compose(pl_cocycle(v).act(u))
        assert lhs == rhs, "monomial cocycle law failed"
    print("cocycle law: ok")

    for _ in range(25):
        a = rand_free()
        total = GroupRingElt.from_int(m, 0)
        for i in range(1, m + 1):
            gi = GroupRingElt.from_word(FreeWord.gen(m, i))
            total = total + fox_derivative(a, i) * (gi - GroupRingElt.one(m))
        assert total == GroupRingElt.from_word(a) - GroupRingElt.one(m), "fox formula failed"
    print("fox calculus: ok")

    for _ in range(10):
        u = rand_braid(length=3, framed=False)
        b = u
        while not braid_permutation(b)[1]:
            b = b * u
        lk = linking_numbers(b)
        red = reduce_reps(b, "linking")
        for i in range(m):
            for j in range(m):
                terms = red[i, j].terms
                if i != j:
                    assert not terms, "linking reduction not diagonal"
                else:
                    (vec,) = terms
                    assert terms[vec] == 1
                    for k in range(m):
                        want = -lk.lk[i][k] if k != i else 0
                        assert vec[k] == want, "linking exponent mismatch"
    print("linking: ok")

    for trial in range(6):
        par = ParityClass(rng.randrange(4))
        while True:
            k = rng.randint(2, 4)
            pts = [(rng.randint(-20, 20), rng.randint(5, 30)) for _ in range(k)]
            try:
                fan = build_fan_config(pts, (0, -7), par)
                break
            except Exception:
                continue
        rows = [[0] * k for _ in range(k)]
        for i in range(k):
            rows[i][i] = par.diag
            for j in range(i + 1, k):
                v = rng.randint(-3, 3)
                rows[i][j] = v
                rows[j][i] = par.sgn * v
        N = validate_N(par, rows)
        Q = forward_Q(fan, N)
        assert reconstruct_N(fan, Q).n == N.n, "roundtrip failed"
    print("reconstruction roundtrip: ok")

    _, _, out = cover_example()
    assert mat_transpose(out["ab"]) == out["ba"], "cover example failed"
    print("cover example: ok")
    print("selftest passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="braidmono",
        description="Exact braid-group cocycles, monodromy characters, and "
        "reconstruction of intersection matrices from straight-line data.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def with_word(p):
        p.add_argument("word", help="braid word, e.g. \"s2 s3' e1^2\" (or \"\" for 1)")

    p = sub.add_parser("pl-cocycle", help="monomial path-change cocycle of a braid word")
    p.add_argument("--m", type=int, required=True)
    with_word(p)
    p.set_defaults(fn=_cmd_pl_cocycle)

    p = sub.add_parser("magnus", help="group-ring cocycle via free differential calculus")
    p.add_argument("--m", type=int, required=True)
    with_word(p)
    p.set_defaults(fn=_cmd_magnus)

    p = sub.add_parser("rep", help="Laurent matrix representation of a braid word")
    p.add_argument("rep", choices=["burau", "tym", "tym-framed", "gassner", "linking"])
    p.add_argument("--m", type=int, required=True)
    with_word(p)
    p.set_defaults(fn=_cmd_rep)

    p = sub.add_parser("act", help="integer cocycle S(sigma, N) and the action on N")
    p.add_argument("--n-class", type=int, required=True)
    p.add_argument("--matrix", required=True, help="N as JSON file")
    with_word(p)
    p.set_defaults(fn=_cmd_act)

    p = sub.add_parser("character", help="character matrix N rho_N(g)")
    p.add_argument("--n-class", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--g", required=True, help="free-group word, e.g. \"g1 g2'\"")
    p.set_defaults(fn=_cmd_character)

    p = sub.add_parser("chi", help="evaluate the straight-line character on a path word")
    p.add_argument("--config", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--word", required=True, help='e.g. "1:0,3:2,2:-1" (target first)')
    p.set_defaults(fn=_cmd_chi)

    p = sub.add_parser("forward", help="straight-line data Q of an intersection matrix")
    p.add_argument("--config", required=True)
    p.add_argument("--matrix", required=True)
    p.set_defaults(fn=_cmd_forward)

    p = sub.add_parser("reconstruct", help="recover the intersection matrix from Q")
    p.add_argument("--config", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(fn=_cmd_reconstruct)

    p = sub.add_parser("cover-example", help="bundled 3-sheeted cover: print and verify")
    p.set_defaults(fn=_cmd_cover_example)

    p = sub.add_parser("selftest", help="reduced property suite")
    p.set_defaults(fn=_cmd_selftest)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
