"""Command-line front end: instance generation, solving, verification,
benchmarking, and the matrix-multiplication embedding demo."""

import argparse
import sys
import time

import numpy as np

from . import config, kernels
from .fileio import FormatError, parse, parse_orders, parse_shift, serialize
from .forms import BasisResult
from .knowndeg import known_deg_appbasis
from .mbasis import mbasis1
from .oracle import iterative_appbasis, matmul_embed, verify_basis
from .pmbasis import pad_orders, pm_basis, popov_pm_basis
from .polymat import random_instance
from .solver import popov_appbasis
from .unbalanced import shift_around_max, shift_around_min

ALGOS = ("mbasis1", "pmbasis", "popov-pm", "popov", "shift-min", "shift-max", "oracle")


def _solve_one(algo, d, F, s):
    if algo == "mbasis1":
        if max(d) != 1:
            raise ValueError("mbasis1 requires all orders equal to 1")
        return mbasis1(F.coeff(0), s, F.p)
    if algo == "pmbasis":
        dmax, Fp = pad_orders(d, F)
        return pm_basis(dmax, Fp, list(s))
    if algo == "popov-pm":
        return popov_pm_basis(d, F, s)
    if algo == "popov":
        return popov_appbasis(d, F, s)
    if algo == "shift-min":
        return shift_around_min(d, F, s)
    if algo == "shift-max":
        return shift_around_max(d, F, s)
    if algo == "oracle":
        return iterative_appbasis(d, F, s)
    raise ValueError(f"unknown algorithm {algo!r}")


def cmd_gen(args):
    p = args.modulus
    orders = parse_orders(args.orders, args.n)
    F = random_instance(p, args.m, args.n, orders, args.seed)
    text = serialize(F, orders)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args):
    F, orders = _read_instance(args.input)
    if orders is None:
        raise ValueError("instance file has no orders line")
    s = parse_shift(args.shift, F.m, sum(orders))
    t0 = time.perf_counter()
    res = _solve_one(args.algo, orders, F, s)
    if args.canonical and res.form != "popov":
        res = known_deg_appbasis(orders, F, s, res.pivot_degree)
    ms = 1000.0 * (time.perf_counter() - t0)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(serialize(res.matrix))
    print(
        f"algo={args.algo} m={F.m} sigma={sum(orders)} "
        f"delta={tuple(res.pivot_degree)} ms={ms:.2f}"
    )
    return 0


def cmd_verify(args):
    F, orders = _read_instance(args.instance)
    if orders is None:
        raise ValueError("instance file has no orders line")
    with open(args.basis) as fh:
        P, _ = parse(fh.read())
    s = parse_shift(args.shift, F.m, sum(orders))
    if args.form != "owp":
        delta = tuple(int(x) for x in np.diag(P.entry_degrees()))
        P = BasisResult(P, tuple(range(P.m)), delta, args.form)
    report = verify_basis(P, orders, F, s)
    print(report)
    return 0 if report.ok else 1


def cmd_bench(args):
    lo, _, hi = args.sizes.partition(":")
    lo, hi = int(lo), int(hi or lo)
    sizes = []
    size = lo
    while size <= hi:
        sizes.append(size)
        size *= 2
    algos = args.algos.split(",")
    backends = ["auto"]
    if args.compare_backends:
        backends = ["python"]
        if kernels.cython_available():
            backends.append("cython")
    print("algo,m,n,sigma,shift_class,ms")
    for size in sizes:
        orders = (args.deg,) * size
        F = random_instance(config.default_modulus(), size, size, orders, args.seed)
        s = parse_shift(args.shift, size, sum(orders))
        for algo in algos:
            for backend in backends:
                kernels.set_backend(backend)
                try:
                    t0 = time.perf_counter()
                    _solve_one(algo, orders, F, s)
                    ms = 1000.0 * (time.perf_counter() - t0)
                finally:
                    kernels.set_backend("auto")
                name = algo if not args.compare_backends else f"{algo}-{backend}"
                print(f"{name},{size},{size},{sum(orders)},{args.shift},{ms:.2f}")
    return 0


def cmd_matmul_demo(args):
    from .polymat import PolyMat

    p = config.default_modulus()
    rng = np.random.default_rng(args.seed)
    A = PolyMat.random(p, args.n, args.n, (args.deg + 1,) * args.n, rng)
    B = PolyMat.random(p, args.n, args.n, (args.deg + 1,) * args.n, rng)
    t0 = time.perf_counter()
    C = matmul_embed(A, B)
    ms = 1000.0 * (time.perf_counter() - t0)
    ok = C == (A @ B)
    print(f"match={'true' if ok else 'false'} n={args.n} deg={args.deg} ms={ms:.2f}")
    return 0 if ok else 1


def _read_instance(path):
    with open(path) as fh:
        return parse(fh.read())


def build_parser():
    ap = argparse.ArgumentParser(
        prog="appbasis",
        description="Minimal approximant bases of polynomial matrices over F_p.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random instance file")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--orders", required=True, help="uniform int or comma-separated")
    g.add_argument("--modulus", type=int, default=config.default_modulus())
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    so = sub.add_parser("solve", help="compute an approximant basis")
    so.add_argument("input")
    so.add_argument("--shift", default="uniform")
    so.add_argument("--algo", choices=ALGOS, default="popov")
    so.add_argument("--canonical", action="store_true",
                    help="normalize non-canonical outputs to the s-Popov basis")
    so.add_argument("--out")
    so.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="verify a basis file against an instance")
    v.add_argument("basis")
    v.add_argument("--instance", required=True)
    v.add_argument("--shift", default="uniform")
    v.add_argument("--form", choices=("owp", "popov"), default="owp")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="benchmark algorithms over a size grid")
    b.add_argument("--sizes", default="8:32", help="lo:hi, doubling grid")
    b.add_argument("--deg", type=int, default=8, help="uniform order per column")
    b.add_argument("--shift", default="uniform")
    b.add_argument("--algos", default="pmbasis,popov")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--compare-backends", action="store_true",
                   help="run each measurement on every available kernel backend")
    b.set_defaults(func=cmd_bench)

    md = sub.add_parser("matmul-demo", help="matrix product via the basis embedding")
    md.add_argument("--n", type=int, default=4)
    md.add_argument("--deg", type=int, default=5)
    md.add_argument("--seed", type=int, default=1)
    md.set_defaults(func=cmd_matmul_demo)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
