"""Command-line front door: roundtrip experiment runner, randomized
oracle verification, benchmark harness, and fixture dump/check.

Reports are flat "key value" lines (schema_version 1): dotted keys,
comma-separated lists, one line per datum.  Reports are deterministic
under a fixed seed; wall-clock lines are only emitted with --timings
(they would otherwise break byte-for-byte reproducibility).  Exit code
0 means every assertion held.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import fixtures
from .approxbasis import (left_m_basis, left_pm_basis, pivot_degrees,
                          right_m_basis, right_pm_basis,
                          verify_approximant_basis)
from .fields import get_field
from .opeval import op_interpolate, op_interpolate_naive, op_mpe, op_mpe_naive
from .outcomes import UNIQUE
from .rankcodes import (decoding_radius, ig_decode, ig_encode, make_ig_code,
                        random_message, rank_error_channel)
from .remeval import (p_independent, rem_interpolate, rem_interpolate_naive,
                      rem_mpe, rem_mpe_naive)
from .rng import spawn
from .skewmatrix import SkewPolyMatrix
from .skewpoly import skew_ring
from .subspacecodes import lig_decode, lig_encode, make_lig_code, operator_channel
from .sumrankcodes import (build_linearized_rs, lin_rs_decode, lin_rs_encode,
                           sum_rank_channel)

SCHEMA_VERSION = 1


def _emit(lines, key, value):
    if isinstance(value, float):
        value = f"{value:.6f}"
    elif isinstance(value, (list, tuple)):
        value = ",".join(str(v) for v in value)
    lines.append(f"{key} {value}")


def _write_report(lines, out_path):
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)


def _parse_int_list(s):
    return [int(t) for t in s.split(",") if t != ""]


# ---------------------------------------------------------------------------
# roundtrip
# ---------------------------------------------------------------------------

def run_roundtrip(args) -> int:
    lines = []
    _emit(lines, "schema_version", SCHEMA_VERSION)
    _emit(lines, "kind", "roundtrip")
    _emit(lines, "metric", args.metric)
    _emit(lines, "param.q", args.q)
    _emit(lines, "param.m", args.m)
    _emit(lines, "param.seed", args.seed)
    _emit(lines, "param.trials", args.trials)
    successes = unique_ok = 0
    list_sizes = []
    timings = []
    if args.metric == "rank":
        k = _parse_int_list(args.k)
        ring = skew_ring(args.q, args.m)
        code = make_ig_code(ring, args.n, k)
        _emit(lines, "param.n", args.n)
        _emit(lines, "param.ell", len(k))
        _emit(lines, "param.k", k)
        _emit(lines, "param.t", args.t)
        _emit(lines, "param.field_modulus", list(ring.field.modulus))
        _emit(lines, "param.radius", decoding_radius(code))
        for trial in range(args.trials):
            rng = spawn(args.seed, "rank", trial)
            f = random_message(code, rng)
            C = ig_encode(code, f)
            R = rank_error_channel(code, C, args.t, rng)
            out = ig_decode(code, R)
            ok = out.status != "failure" and out.contains(f)
            successes += ok
            unique_ok += (out.status == UNIQUE and out.message == f)
            list_sizes.append(out.list_size)
            timings.append(out.timings)
            _emit(lines, f"trial.{trial}.success", int(ok))
            _emit(lines, f"trial.{trial}.list_size", out.list_size)
    elif args.metric == "subspace":
        k = _parse_int_list(args.k)
        ring = skew_ring(args.q, args.m)
        code = make_lig_code(ring, args.nt, k)
        _emit(lines, "param.nt", args.nt)
        _emit(lines, "param.ell", len(k))
        _emit(lines, "param.k", k)
        _emit(lines, "param.gamma", args.gamma)
        _emit(lines, "param.delta", args.delta)
        _emit(lines, "param.field_modulus", list(ring.field.modulus))
        for trial in range(args.trials):
            rng = spawn(args.seed, "subspace", trial)
            f = random_message(code.inner, rng)
            V = lig_encode(code, f)
            U = operator_channel(code.field, V, args.gamma, args.delta, rng)
            out = lig_decode(code, U)
            ok = out.status != "failure" and out.contains(f)
            successes += ok
            unique_ok += (out.status == UNIQUE and out.message == f)
            list_sizes.append(out.list_size)
            timings.append(out.timings)
            _emit(lines, f"trial.{trial}.success", int(ok))
            _emit(lines, f"trial.{trial}.list_size", out.list_size)
            _emit(lines, f"trial.{trial}.n_r", len(U))
    elif args.metric == "sumrank":
        blocks = _parse_int_list(args.blocks)
        code = build_linearized_rs(args.q, args.m, len(blocks), blocks, args.k_scalar)
        _emit(lines, "param.blocks", blocks)
        _emit(lines, "param.k", args.k_scalar)
        _emit(lines, "param.t", args.t)
        _emit(lines, "param.B", list(code.skew.B))
        _emit(lines, "param.v", list(code.v))
        tau = (code.n - code.k) // 2
        _emit(lines, "param.radius", tau)
        for trial in range(args.trials):
            rng = spawn(args.seed, "sumrank", trial)
            f = code.ring.poly([code.field.rand(rng) for _ in range(code.k)])
            c = lin_rs_encode(code, f)
            r = sum_rank_channel(code.field, c, blocks, args.t, rng)
            fh, tms = lin_rs_decode(code, r)
            ok = fh == f
            successes += ok
            unique_ok += ok
            list_sizes.append(1 if ok else 0)
            timings.append(tms)
            _emit(lines, f"trial.{trial}.success", int(ok))
            _emit(lines, f"trial.{trial}.list_size", 1 if ok else 0)
    else:
        raise ValueError(f"unknown metric {args.metric}")
    _emit(lines, "agg.successes", successes)
    _emit(lines, "agg.success_rate", successes / args.trials if args.trials else 0.0)
    _emit(lines, "agg.unique_count", unique_ok)
    _emit(lines, "agg.max_list_size", max(list_sizes) if list_sizes else 0)
    if args.timings:
        for i, tm in enumerate(timings):
            _emit(lines, f"timing.{i}.interp_s", tm.get("interp", 0.0))
            _emit(lines, f"timing.{i}.root_s", tm.get("root", 0.0))
    _write_report(lines, args.out)
    return 0 if successes == args.trials else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_approx_case(seed, idx):
    rng = spawn(seed, "approx", idx)
    q = rng.choice([2, 3])
    m = rng.choice([2, 3])
    ring = skew_ring(q, m)
    a = rng.randint(1, 3)
    b = rng.randint(1, 3)
    d = rng.randint(1, 4)
    A = SkewPolyMatrix(ring, [[ring.random_poly(rng, d - 1) for _ in range(b)]
                              for _ in range(a)])
    sr = [rng.randint(-2, 2) for _ in range(b)]
    sl = [rng.randint(-2, 2) for _ in range(a)]
    descr = f"q={q} m={m} a={a} b={b} d={d} sr={sr} sl={sl}"
    BR_pm = right_pm_basis(d, A, sr, crossover=rng.choice([0, 2, 8]))
    BR_m = right_m_basis(d, A, sr)
    BL_pm = left_pm_basis(d, A, sl, crossover=rng.choice([0, 2, 8]))
    BL_m = left_m_basis(d, A, sl)
    checks = [
        verify_approximant_basis(A, d, sr, "right", BR_pm),
        verify_approximant_basis(A, d, sr, "right", BR_m),
        verify_approximant_basis(A, d, sl, "left", BL_pm),
        verify_approximant_basis(A, d, sl, "left", BL_m),
        sorted(pivot_degrees(BR_pm)) == sorted(pivot_degrees(BR_m)),
        sorted(pivot_degrees(BL_pm)) == sorted(pivot_degrees(BL_m)),
    ]
    return all(checks), descr + f" checks={checks}", A.to_text()


def _random_p_independent(ring, rng, n):
    field = ring.field
    B = []
    for _ in range(60 * n):
        cand = field.rand_nonzero(rng)
        if cand not in B and p_independent(ring, B + [cand]):
            B.append(cand)
            if len(B) == n:
                return B
    return B


def _random_fq_independent(field, rng, n):
    from .fields import fq_expand, fq_rank

    out = []
    for _ in range(60 * n):
        cand = field.rand_nonzero(rng)
        trial = out + [cand]
        if fq_rank(field.q, fq_expand(field, [[x] for x in trial], "row")) \
                == len(trial):
            out.append(cand)
            if len(out) == n:
                return out
    return out


def _verify_opeval_case(seed, idx):
    rng = spawn(seed, "opeval", idx)
    q, m = rng.choice([(2, 6), (3, 4)])
    ring = skew_ring(q, m)
    field = ring.field
    n = rng.randint(1, min(m, 6))
    alphas = _random_fq_independent(field, rng, n)
    descr = f"q={q} m={m} n={n} alphas={alphas}"
    f = ring.random_poly(rng, n)
    ok1 = op_mpe(f, alphas) == op_mpe_naive(f, alphas)
    rv = [field.rand(rng) for _ in range(n)]
    pts = list(zip(alphas, rv))
    ok2 = op_interpolate(ring, pts) == op_interpolate_naive(ring, pts)
    return ok1 and ok2, descr + f" mpe={ok1} interp={ok2}", repr(f.c)


def _verify_remeval_case(seed, idx):
    rng = spawn(seed, "remeval", idx)
    q, m = rng.choice([(2, 6), (3, 4)])
    ring = skew_ring(q, m)
    field = ring.field
    n = rng.randint(1, 6)
    B = _random_p_independent(ring, rng, n)
    n = len(B)
    descr = f"q={q} m={m} n={n} B={B}"
    f = ring.random_poly(rng, n + 2)
    ok1 = rem_mpe(f, B) == rem_mpe_naive(f, B)
    rv = [field.rand(rng) for _ in range(n)]
    ok2 = rem_interpolate(ring, B, rv) == rem_interpolate_naive(ring, B, rv)
    return ok1 and ok2, descr + f" mpe={ok1} interp={ok2}", repr(f.c)


def run_verify(args) -> int:
    lines = []
    _emit(lines, "schema_version", SCHEMA_VERSION)
    _emit(lines, "kind", "verify")
    _emit(lines, "scope", args.scope)
    _emit(lines, "param.seed", args.seed)
    _emit(lines, "param.count", args.count)
    _emit(lines, "param.start_index", args.start_index)
    scopes = ["approx", "opeval", "remeval"] if args.scope == "all" \
        else [args.scope]
    case_fns = {"approx": _verify_approx_case,
                "opeval": _verify_opeval_case,
                "remeval": _verify_remeval_case}
    failures = 0
    for scope in scopes:
        fn = case_fns[scope]
        for idx in range(args.start_index, args.start_index + args.count):
            ok, descr, payload = fn(args.seed, idx)
            if not ok:
                failures += 1
                _emit(lines, f"fail.{scope}.{idx}.case", descr)
                _emit(lines, f"fail.{scope}.{idx}.payload", payload)
                _emit(lines, f"fail.{scope}.{idx}.replay",
                      f"verify --scope {scope} --seed {args.seed} "
                      f"--count 1 --start-index {idx}")
        _emit(lines, f"agg.{scope}.cases", args.count)
    if args.scope in ("approx", "all"):
        for name, ok in fixtures.check_all():
            _emit(lines, f"fixture.{name.replace(' ', '_')}", int(ok))
            if not ok:
                failures += 1
    _emit(lines, "agg.failures", failures)
    _write_report(lines, args.out)
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

def run_bench(args) -> int:
    lines = []
    _emit(lines, "schema_version", SCHEMA_VERSION)
    _emit(lines, "kind", "bench")
    _emit(lines, "scope", args.scope)
    _emit(lines, "param.seed", args.seed)
    sizes = _parse_int_list(args.sizes)
    _emit(lines, "param.sizes", sizes)
    rng = spawn(args.seed, "bench")
    if args.scope in ("pmbasis", "mbasis"):
        ring = skew_ring(args.q, args.m)
        _emit(lines, "param.q", args.q)
        _emit(lines, "param.m", args.m)
        prev = None
        for d in sizes:
            A = SkewPolyMatrix(ring, [[ring.random_poly(rng, d - 1)]
                                      for _ in range(2)])
            t0 = time.perf_counter()
            if args.scope == "pmbasis":
                left_pm_basis(d, A, [0, 0])
            else:
                left_m_basis(d, A, [0, 0])
            el = time.perf_counter() - t0
            _emit(lines, f"bench.order_{d}.seconds", el)
            if prev is not None:
                _emit(lines, f"bench.order_{d}.ratio_vs_prev", el / prev)
            prev = el
    elif args.scope == "mpe":
        ring = skew_ring(args.q, args.m)
        field = ring.field
        for n in sizes:
            pts = _random_fq_independent(field, rng, min(n, field.m))
            f = ring.random_poly(rng, n)
            t0 = time.perf_counter()
            op_mpe(f, pts)
            _emit(lines, f"bench.n_{n}.seconds", time.perf_counter() - t0)
    elif args.scope == "decode":
        ring = skew_ring(2, 12)
        code = make_ig_code(ring, 12, (4, 4, 4))
        for t in sizes:
            rng_t = spawn(args.seed, "bench-decode", t)
            f = random_message(code, rng_t)
            C = ig_encode(code, f)
            R = rank_error_channel(code, C, min(t, decoding_radius(code)), rng_t)
            out = ig_decode(code, R)
            _emit(lines, f"bench.t_{t}.interp_s", out.timings["interp"])
            _emit(lines, f"bench.t_{t}.root_s", out.timings["root"])
            _emit(lines, f"bench.t_{t}.success",
                  int(out.status != "failure" and out.contains(f)))
    else:
        raise ValueError(f"unknown bench scope {args.scope}")
    _write_report(lines, args.out)
    return 0


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def run_fixtures(args) -> int:
    if args.action == "dump":
        sys.stdout.write(fixtures.dump_all())
        return 0
    lines = []
    _emit(lines, "schema_version", SCHEMA_VERSION)
    _emit(lines, "kind", "fixtures")
    bad = 0
    for name, ok in fixtures.check_all():
        _emit(lines, f"check.{name.replace(' ', '_')}", int(ok))
        bad += not ok
    _emit(lines, "agg.failures", bad)
    _write_report(lines, args.out)
    return 0 if bad == 0 else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewcodes",
        description="skew-polynomial approximant bases and the rank / "
                    "subspace / sum-rank decoders built on them")
    sub = ap.add_subparsers(dest="command", required=True)

    rt = sub.add_parser("roundtrip", help="encode/channel/decode experiments")
    rt.add_argument("--metric", required=True,
                    choices=["rank", "subspace", "sumrank"])
    rt.add_argument("--q", type=int, default=2)
    rt.add_argument("--m", type=int, required=True)
    rt.add_argument("--n", type=int, help="code length (rank)")
    rt.add_argument("--nt", type=int, help="transmitted dimension (subspace)")
    rt.add_argument("--ell", type=int, help="interleaving order (informational)")
    rt.add_argument("--k", help="comma list of dimensions (rank/subspace)")
    rt.add_argument("--k-scalar", type=int, help="dimension (sumrank)")
    rt.add_argument("--blocks", help="comma list of block lengths (sumrank)")
    rt.add_argument("--t", type=int, default=0, help="error weight")
    rt.add_argument("--gamma", type=int, default=0, help="insertions (subspace)")
    rt.add_argument("--delta", type=int, default=0, help="deletions (subspace)")
    rt.add_argument("--trials", type=int, default=10)
    rt.add_argument("--seed", type=int, default=0)
    rt.add_argument("--timings", action="store_true",
                    help="include wall-clock lines (breaks byte reproducibility)")
    rt.add_argument("--out", help="also write the report to this path")
    rt.set_defaults(fn=run_roundtrip)

    vf = sub.add_parser("verify", help="randomized oracle comparisons")
    vf.add_argument("--scope", default="all",
                    choices=["approx", "opeval", "remeval", "all"])
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--count", type=int, default=50)
    vf.add_argument("--start-index", type=int, default=0,
                    help="first case index (replay a failing case directly)")
    vf.add_argument("--out")
    vf.set_defaults(fn=run_verify)

    bn = sub.add_parser("bench", help="timing tables")
    bn.add_argument("--scope", required=True,
                    choices=["pmbasis", "mbasis", "mpe", "decode"])
    bn.add_argument("--sizes", default="64,128,256")
    bn.add_argument("--q", type=int, default=2)
    bn.add_argument("--m", type=int, default=16)
    bn.add_argument("--seed", type=int, default=0)
    bn.add_argument("--out")
    bn.set_defaults(fn=run_bench)

    fx = sub.add_parser("fixtures", help="dump or check the worked examples")
    fx.add_argument("action", choices=["dump", "check"])
    fx.add_argument("--out")
    fx.set_defaults(fn=run_fixtures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "roundtrip":
        if args.metric == "rank" and (args.n is None or args.k is None):
            build_parser().error("rank metric requires --n and --k")
        if args.metric == "subspace" and (args.nt is None or args.k is None):
            build_parser().error("subspace metric requires --nt and --k")
        if args.metric == "sumrank" and (args.blocks is None
                                         or args.k_scalar is None):
            build_parser().error("sumrank metric requires --blocks and --k-scalar")
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
