"""Command-line front end.

Exit codes: 0 the claim holds / success, 1 the claim is falsified or the verdict
is Distinct/Neither, 2 usage, input or precondition error.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from . import construct, reconstruct, valued
from .decomposition import components
from .hypergraph import (
    EqualityVerdict,
    HypergraphFormatError,
    are_k_hypomorphic_utc,
    is_equal_utc,
    read_hypergraph,
    write_hypergraph,
)
from .incidence import IncidenceSpec, build_kneser, build_w, wilson_rank
from .linalg import gf2_rank, rational_rank
from .numth import binomial, binomial_mod_p_lucas, thresholds, v_upper_bound

DEFAULT_SEED = 20240601

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _witness(items) -> str:
    return "witness: " + " ".join(map(str, items))


def _load(path):
    try:
        return read_hypergraph(path)
    except HypergraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None
    except OSError as exc:
        raise UsageError(str(exc)) from None


def cmd_lucas(args, out):
    try:
        r = binomial_mod_p_lucas(args.n, args.k, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"C({args.n},{args.k}) mod {args.p} = {r}", file=out)
    return EXIT_OK


def cmd_thresholds(args, out):
    try:
        t = thresholds(args.h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    vu = v_upper_bound(args.h)
    print(f"s={t.s} psi={t.psi} phi={t.phi} v_upper={'unknown' if vu is None else vu}", file=out)
    return EXIT_OK


def cmd_wilson_rank(args, out):
    try:
        r = wilson_rank(args.v, args.t, args.k, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"rank={r}", file=out)
    if args.verify:
        if args.p != 2:
            raise UsageError("--verify cross-checks by GF(2) elimination and needs --p 2")
        g = gf2_rank(build_w(IncidenceSpec(args.v, args.t, args.k)))
        agree = g == r
        print(f"gf2_rank={g} {'agree' if agree else 'DISAGREE'}", file=out)
        return EXIT_OK if agree else EXIT_FALSE
    return EXIT_OK


def cmd_gk_rank(args, out):
    try:
        spec = IncidenceSpec(args.v, args.t, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = rational_rank(build_w(spec).lift())
    rows = binomial(args.v, args.t)
    print(f"rational_rank={r} rows={rows}", file=out)
    if args.t <= min(args.k, args.v - args.k):
        full = r == rows
        print(f"full_row_rank={'yes' if full else 'NO'}", file=out)
        return EXIT_OK if full else EXIT_FALSE
    print("note: t > min(k, v-k), full row rank is not claimed", file=out)
    return EXIT_OK


def cmd_kneser(args, out):
    try:
        a = build_kneser(args.v, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.rank:
        r = rational_rank(a)
        print(f"rank={r} size={a.rows} nonsingular={'yes' if r == a.rows else 'NO'}", file=out)
        return EXIT_OK if r == a.rows else EXIT_FALSE
    for row in a.entries:
        print("".join(map(str, row)), file=out)
    return EXIT_OK


def _same_shape(a, b):
    if a.v != b.v or a.h != b.h:
        raise UsageError(f"hypergraphs differ in shape: (v={a.v}, h={a.h}) vs (v={b.v}, h={b.h})")


def cmd_hypomorphy(args, out):
    a, b = _load(args.a), _load(args.b)
    _same_shape(a, b)
    if not 0 <= args.k <= a.v:
        raise UsageError(f"need 0 <= k <= v={a.v}")
    res = are_k_hypomorphic_utc(a, b, args.k, jobs=args.jobs)
    print(f"{args.k}-hypomorphic up to complementation: {'yes' if res.holds else 'no'}", file=out)
    if not res.holds:
        print(_witness(res.witness), file=out)
    return EXIT_OK if res.holds else EXIT_FALSE


def cmd_equal_utc(args, out):
    a, b = _load(args.a), _load(args.b)
    _same_shape(a, b)
    verdict = is_equal_utc(a, b)
    print(verdict.value, file=out)
    return EXIT_FALSE if verdict is EqualityVerdict.NEITHER else EXIT_OK


def _recon_exit(verdict: reconstruct.ReconVerdict, out) -> int:
    print(verdict.outcome.value, file=out)
    if verdict.reason:
        print(f"reason: {verdict.reason}", file=out)
    if verdict.witness is not None:
        print(_witness(verdict.witness), file=out)
    return {
        reconstruct.Outcome.EQUAL: EXIT_OK,
        reconstruct.Outcome.COMPLEMENT: EXIT_OK,
        reconstruct.Outcome.DISTINCT: EXIT_FALSE,
        reconstruct.Outcome.HYPOTHESIS_VIOLATED: EXIT_USAGE,
    }[verdict.outcome]


def cmd_reconstruct_parity(args, out):
    a, b = _load(args.a), _load(args.b)
    _same_shape(a, b)
    return _recon_exit(reconstruct.reconstruct_by_parity(a, b, args.k), out)


def cmd_reconstruct_dual(args, out):
    a, b = _load(args.a), _load(args.b)
    if a.v != b.v:
        raise UsageError("hypergraphs must have the same number of vertices")
    return _recon_exit(reconstruct.reconstruct_dual_k(a, b, args.ell), out)


def cmd_kernel(args, out):
    try:
        cert = reconstruct.kernel_corank_certificate(args.v, args.h, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"k={args.k} dim={cert.dimension} contains_all_ones={'yes' if cert.contains_all_ones else 'no'}",
          file=out)
    if args.k2 is not None:
        try:
            cert2 = reconstruct.kernel_corank_certificate(args.v, args.h, args.k2)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(f"k={args.k2} dim={cert2.dimension} "
              f"contains_all_ones={'yes' if cert2.contains_all_ones else 'no'}", file=out)
        inter = reconstruct.left_kernel_w(args.v, args.h, args.k, args.k2)
        print(f"intersection_dim={len(inter)}", file=out)
    return EXIT_OK


def cmd_decompose(args, out):
    H = _load(args.a)
    for block in components(H).blocks:
        print(" ".join(map(str, block)), file=out)
    return EXIT_OK


def cmd_gen_pair(args, out):
    try:
        H, H2 = construct.build_thm2_pair(args.h, args.r, args.v)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    paths = (f"{args.out}.H.hg", f"{args.out}.Hp.hg")
    write_hypergraph(H, paths[0])
    write_hypergraph(H2, paths[1])
    for p in paths:
        print(p, file=out)
    return EXIT_OK


def cmd_verify_pair(args, out):
    try:
        rep = construct.verify_thm2_pair(args.h, args.r, args.v, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"h={rep.h} r={rep.r} v={rep.v} equality_utc={rep.equality.value}", file=out)
    if not rep.transfer_applicable:
        print(f"note: v < 2(h+r-1)-1; downward transfer not applicable, every k checked directly", file=out)
    for c in rep.checks:
        print(f"k={c.k} hypomorphic={'yes' if c.holds else 'no'} seconds={c.seconds:.3f}", file=out)
        if not c.holds:
            print(_witness(c.witness), file=out)
    if rep.passed:
        print(f"PASS: not equal up to complementation, k-hypomorphic for all k <= {rep.max_k}", file=out)
        return EXIT_OK
    print(f"FALSIFIED: {rep.falsification}", file=out)
    return EXIT_FALSE


def cmd_gen_moebius(args, out):
    try:
        G, G2 = valued.build_moebius_pair(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    paths = (f"{args.out}.G.vg", f"{args.out}.Gp.vg")
    valued.write_valued_graph(G, paths[0])
    valued.write_valued_graph(G2, paths[1])
    for p in paths:
        print(p, file=out)
    return EXIT_OK


def cmd_verify_moebius(args, out):
    try:
        rep = valued.verify_moebius(args.n, random.Random(args.seed))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"n={rep.n} full_isomorphic={'yes' if rep.full_witness else 'no'}", file=out)
    if rep.full_witness:
        print(_witness(rep.full_witness.f), file=out)
    print(f"subsets_of_size_{2 * rep.n - 1}={rep.subsets_checked} failures={len(rep.subset_failures)}", file=out)
    for s in rep.subset_failures:
        print(_witness(s), file=out)
    print(f"sampled_smaller={rep.sampled_checked} failures={len(rep.sampled_failures)}", file=out)
    for s in rep.sampled_failures:
        print(_witness(s), file=out)
    print(f"k={rep.k} < 2|W|/3-2={rep.color_bound:.4f}", file=out)
    print("PASS" if rep.passed else "FALSIFIED", file=out)
    return EXIT_OK if rep.passed else EXIT_FALSE


def cmd_joint_kernel(args, out):
    if args.v < 10:
        raise UsageError("need v >= 10 so that 10-subsets exist")
    res = reconstruct.joint_kernel_experiment(args.v)
    for key, val in res.items():
        print(f"{key}={val}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperutc", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for subset scans")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lucas", help="C(n,k) mod p via base-p digits")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("p", type=int)
    s.set_defaults(func=cmd_lucas)

    s = sub.add_parser("thresholds", help="s(h), psi(h), phi(h) and the known bound on v(h)")
    s.add_argument("h", type=int)
    s.set_defaults(func=cmd_thresholds)

    s = sub.add_parser("wilson-rank", help="p-rank of W_{t,k} by formula")
    s.add_argument("v", type=int)
    s.add_argument("t", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--p", type=int, default=2)
    s.add_argument("--verify", action="store_true", help="cross-check by GF(2) elimination")
    s.set_defaults(func=cmd_wilson_rank)

    s = sub.add_parser("gk-rank", help="rank of W_{t,k} over the rationals")
    s.add_argument("v", type=int)
    s.add_argument("t", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_gk_rank)

    s = sub.add_parser("kneser", help="Kneser adjacency matrix of t-subsets of a v-set")
    s.add_argument("v", type=int)
    s.add_argument("t", type=int)
    s.add_argument("--rank", action="store_true")
    s.set_defaults(func=cmd_kneser)

    for name, func, extra in (
        ("hypomorphy", cmd_hypomorphy, ("--k", "k")),
        ("equal-utc", cmd_equal_utc, None),
        ("reconstruct-parity", cmd_reconstruct_parity, ("--k", "k")),
        ("reconstruct-dual", cmd_reconstruct_dual, ("--ell", "ell")),
    ):
        s = sub.add_parser(name)
        s.add_argument("a")
        s.add_argument("b")
        if extra:
            s.add_argument(extra[0], dest=extra[1], type=int, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("kernel", help="GF(2) kernel of the transposed W_{h,k}")
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--k2", type=int)
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("decompose", help="components of the interchangeability relation")
    s.add_argument("a")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("gen-thm2", help="write a counterexample pair as .hg files")
    for flag in ("--h", "--r", "--v"):
        s.add_argument(flag, type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen_pair)

    s = sub.add_parser("verify-thm2", help="exhaustively check a counterexample pair")
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--v", type=int)
    s.set_defaults(func=cmd_verify_pair)

    s = sub.add_parser("gen-moebius", help="write the cylinder/Moebius valued graphs as .vg files")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen_moebius)

    s = sub.add_parser("verify-moebius", help="check the cylinder/Moebius pair")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_verify_moebius)

    s = sub.add_parser("problem2-experiment", help="kernel dimensions for h=6, k in {8,9,10}")
    s.add_argument("--v", type=int, default=16)
    s.set_defaults(func=cmd_joint_kernel)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
