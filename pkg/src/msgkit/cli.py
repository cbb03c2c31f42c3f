"""Command-line front end.

Subcommands: `rho` (formula tables), `check-point` (tangent report for a
JSON point file), `scan` (random sampling statistics), `verify` (exhaustive
or sampled equivalence verification), and `normal-form` (alternating
canonical form).

Every JSON output embeds the tool version, the field spec, the seed, and
an echo of the logical input parameters, so runs are self-describing and
replayable.  Performance-only knobs (worker count, output path, format)
are deliberately left out of the echo: summaries must be byte-identical
across worker counts.

Exit codes: 0 success / verified, 1 verification found mismatches,
2 invalid input or budget exceeded.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import re
import sys
from random import Random

from . import __version__
from .fields import Field, PrimeField, QQ, field_from_spec
from .matrices import Matrix, canonical_alternating, skew_normal_form
from .numerology import VARIANTS, rho2_special, rho_fixed, rho_full
from .symplectic import (
    BudgetExceeded,
    Subspace,
    decode_point,
    derive_seed,
    enumeration_budget,
    gaussian_binomial,
    random_form_space,
    random_independent_pair,
    random_isotropic_subspace,
)
from .tangent import PointContext, tangent_report, verify_pair

_SEED_RULE = "splitmix64(seed, index)"


def _dump(payload: dict, args) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    _write_text(text, args)


def _write_text(text: str, args) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _field_from_args(args) -> Field:
    if getattr(args, "p", None) is not None:
        return PrimeField(args.p)
    name = getattr(args, "field", None)
    if name in (None, "rational"):
        if name is None:
            raise ValueError("specify --p PRIME or --field rational")
        return QQ
    raise ValueError(f"unknown field {name!r}")


# ---------------------------------------------------------------------------
# rho
# ---------------------------------------------------------------------------

_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")
_LINEAR_RE = re.compile(r"^([+-]?\d*)g([+-]\d+)?$")


def _parse_span(text: str, name: str) -> list[int]:
    """An integer or an inclusive range 'a..b'."""
    m = _RANGE_RE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ValueError(f"--{name}: empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise ValueError(f"--{name}: expected an integer or 'a..b', got {text!r}") from None


def _parse_degree(text: str):
    """Degree flag: integer, range, or a linear expression in g like '2g-2'."""
    m = _LINEAR_RE.match(text.replace(" ", ""))
    if m:
        coef_txt = m.group(1)
        coef = 1 if coef_txt in ("", "+") else -1 if coef_txt == "-" else int(coef_txt)
        off = int(m.group(2)) if m.group(2) else 0
        return ("linear", coef, off)
    return ("values", _parse_span(text, "d"))


def cmd_rho(args) -> int:
    rs = _parse_span(args.r, "r")
    ks = _parse_span(args.k, "k")
    gs = _parse_span(args.g, "g")
    ms = _parse_span(args.m, "m") if args.m is not None else [None]
    dspec = _parse_degree(args.d)
    variants = [args.variant] if args.variant else list(VARIANTS)
    if args.m is not None and any(m is not None and m < 1 for m in ms):
        raise ValueError("--m must be >= 1")

    rows = []
    for g in gs:
        if dspec[0] == "linear":
            ds = [dspec[1] * g + dspec[2]]
        else:
            ds = dspec[1]
        for r in rs:
            for d in ds:
                for k in ks:
                    for m in ms:
                        row = {"r": r, "d": d, "k": k, "g": g}
                        for variant in variants:
                            value = rho_fixed(r, d, k, g) if variant == "fixed" \
                                else rho_full(r, d, k, g)
                            row[f"rho_{variant}"] = value
                        if m is not None:
                            row["m"] = m
                            if r != 2:
                                raise ValueError("--m applies to r = 2 only")
                            for variant in variants:
                                row[f"rho2_special_{variant}"] = rho2_special(
                                    d, k, g, m, variant)
                        rows.append(row)

    if args.format == "plain":
        if len(rows) == 1 and len(variants) == 1 and args.m is None:
            _write_text(f"{rows[0][f'rho_{variants[0]}']}\n", args)
        else:
            cols = sorted({c for row in rows for c in row})
            lines = ["\t".join(cols)]
            lines += ["\t".join(str(row.get(c, "")) for c in cols) for row in rows]
            _write_text("\n".join(lines) + "\n", args)
        return 0
    if args.format == "csv":
        cols = sorted({c for row in rows for c in row})
        lines = [",".join(cols)]
        lines += [",".join(str(row.get(c, "")) for c in cols) for row in rows]
        _write_text("\n".join(lines) + "\n", args)
        return 0
    _dump({
        "command": "rho",
        "version": __version__,
        "input": {"r": args.r, "d": args.d, "k": args.k, "g": args.g,
                  "m": args.m, "variant": args.variant},
        "rows": rows,
    }, args)
    return 0


# ---------------------------------------------------------------------------
# check-point
# ---------------------------------------------------------------------------

def cmd_check_point(args) -> int:
    obj = _load_json(args.input)
    fs, basis = decode_point(obj)
    V = Subspace.from_span(basis)
    if V.k != basis.nrows:
        raise ValueError("subspace basis rows are linearly dependent")
    ctx = PointContext(V, fs, basis=basis)
    report = tangent_report(ctx)
    _dump({
        "command": "check-point",
        "version": __version__,
        "field": fs.field.spec(),
        "input": obj,
        "report": report.encode(),
    }, args)
    return 0


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def _scan_sample(payload: dict) -> dict:
    """One scan sample; pure function of (field, n, k, m, seed, index)."""
    field = field_from_spec(payload["field"])
    rng = Random(derive_seed(payload["seed"], payload["index"]))
    fs = random_form_space(payload["n"], payload["m"], field, rng)
    V = random_isotropic_subspace(payload["k"], fs, rng)
    if V is None:
        return {"exhausted": True}
    report = tangent_report(PointContext(V, fs), pencil=False)
    return {"exhausted": False, "excess": report.excess()}


def _run_tasks(worker, payloads: list[dict], workers: int) -> list[dict]:
    """Order-preserving map, optionally across a process pool."""
    if workers <= 1 or len(payloads) <= 1:
        return [worker(p) for p in payloads]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, payloads))


def cmd_scan(args) -> int:
    field = _field_from_args(args)
    if args.samples < 1:
        raise ValueError("--samples must be >= 1")
    if not 1 <= args.k <= args.n // 2:
        raise ValueError(f"need 1 <= k <= n/2, got k={args.k}, n={args.n}")
    from .tangent import msg_expected_dim
    expected = msg_expected_dim(args.n, args.k, args.m)
    payloads = [
        {"field": field.spec(), "n": args.n, "k": args.k, "m": args.m,
         "seed": args.seed, "index": i}
        for i in range(args.samples)
    ]
    results = _run_tasks(_scan_sample, payloads, args.workers)
    histogram: dict[str, int] = {}
    exhausted = 0
    points = 0
    for res in results:
        if res["exhausted"]:
            exhausted += 1
            continue
        points += 1
        key = str(res["excess"])
        histogram[key] = histogram.get(key, 0) + 1
    _dump({
        "command": "scan",
        "version": __version__,
        "field": field.spec(),
        "input": {"n": args.n, "k": args.k, "m": args.m, "field": field.spec(),
                  "samples": args.samples, "seed": args.seed},
        "points": points,
        "sampler_exhausted": exhausted,
        "expected_dim": expected,
        "expected_dim_count": histogram.get("0", 0),
        "excess_dim_histogram": histogram,
        "seeds": {"root": args.seed, "derivation": _SEED_RULE},
    }, args)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_one_pair(payload: dict) -> dict:
    """Verify one random pencil; regenerates the pair from its derived seed."""
    field = field_from_spec(payload["field"])
    n, k = payload["n"], payload["k"]
    fs = random_independent_pair(n, field, Random(derive_seed(payload["seed"], payload["index"])))
    rng = Random(derive_seed(payload["seed"], payload["index"]) ^ 0xA5A5A5A5)
    points, mismatches = verify_pair(
        fs, k, scope=payload["scope"], rng=rng, samples=payload["samples"],
        budget=payload["budget"], fault=payload["fault"])
    enc_forms = [g.encode() for g in fs.grams()]
    return {
        "points": points,
        "mismatches": [
            {
                "forms": enc_forms,
                "subspace": rec.subspace.basis.encode(),
                "tangent_dim": rec.tangent_dim,
                "expected_dim": rec.expected_dim,
                "degenerate": rec.degeneracy is not None,
                "degeneracy": rec.degeneracy.encode() if rec.degeneracy else None,
            }
            for rec in mismatches
        ],
    }


def cmd_verify(args) -> int:
    field = PrimeField(args.p)
    if args.pairs < 1:
        raise ValueError("--pairs must be >= 1")
    if not 1 <= args.k <= args.n // 2:
        raise ValueError(f"need 1 <= k <= n/2, got k={args.k}, n={args.n}")
    budget = enumeration_budget()
    if args.scope == "exhaustive":
        total = gaussian_binomial(args.n, args.k, args.p)
        if total > budget:
            raise BudgetExceeded(
                f"enumerating {total} subspaces per pair exceeds the budget of"
                f" {budget} (raise MSGKIT_BUDGET to override)")
    payloads = [
        {"field": field.spec(), "n": args.n, "k": args.k, "seed": args.seed,
         "index": i, "scope": args.scope, "samples": args.samples,
         "budget": budget, "fault": args.inject_fault}
        for i in range(args.pairs)
    ]
    results = _run_tasks(_verify_one_pair, payloads, args.workers)
    mismatches = []
    per_pair = []
    points_checked = 0
    for i, res in enumerate(results):
        points_checked += res["points"]
        per_pair.append({"pair": i, "points": res["points"],
                         "mismatches": len(res["mismatches"])})
        for rec in res["mismatches"]:
            mismatches.append({"pair": i, **rec})
    _dump({
        "command": "verify",
        "version": __version__,
        "field": field.spec(),
        "input": {"n": args.n, "k": args.k, "p": args.p, "pairs": args.pairs,
                  "scope": args.scope, "samples": args.samples,
                  "seed": args.seed, "inject_fault": args.inject_fault},
        "pairs_checked": len(results),
        "points_checked": points_checked,
        "mismatch_count": len(mismatches),
        "per_pair": per_pair,
        "mismatches": mismatches,
        "seeds": {"root": args.seed, "derivation": _SEED_RULE},
    }, args)
    return 1 if mismatches else 0


# ---------------------------------------------------------------------------
# normal-form
# ---------------------------------------------------------------------------

def cmd_normal_form(args) -> int:
    obj = _load_json(args.input)
    if not isinstance(obj, dict) or "field" not in obj or "matrix" not in obj:
        raise ValueError("matrix file must be {'field': ..., 'matrix': ...}")
    field = field_from_spec(obj["field"])
    M = Matrix.decode(field, obj["matrix"])
    if not M.is_square():
        raise ValueError("matrix must be square")
    if not M.is_alternating():
        raise ValueError("matrix is not alternating (skew with zero diagonal)")
    P, rank = skew_normal_form(M)
    product = P.transpose().mul(M).mul(P)
    if product != canonical_alternating(field, M.nrows, rank):
        raise ArithmeticError("normal form re-verification failed")
    _dump({
        "command": "normal-form",
        "version": __version__,
        "field": field.spec(),
        "input": obj,
        "P": P.encode(),
        "canonical": product.encode(),
        "rank": rank,
    }, args)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msgkit",
        description="Exact tangent-space and degeneracy computations on "
                    "multiply symplectic Grassmannians.",
    )
    parser.add_argument("--version", action="version", version=f"msgkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rho = sub.add_parser("rho", help="Brill-Noether expected-dimension formulas")
    p_rho.add_argument("--r", required=True, help="rank (int or a..b)")
    p_rho.add_argument("--d", required=True,
                       help="degree (int, a..b, or linear in g like '2g-2')")
    p_rho.add_argument("--k", required=True, help="section count (int or a..b)")
    p_rho.add_argument("--g", required=True, help="genus (int or a..b)")
    p_rho.add_argument("--m", default=None,
                       help="h^1 of the determinant; adds rho2_special columns")
    p_rho.add_argument("--variant", choices=VARIANTS, default=None,
                       help="rho normalization (default: emit both)")
    p_rho.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    p_rho.add_argument("--output", default=None)
    p_rho.set_defaults(func=cmd_rho)

    p_chk = sub.add_parser("check-point", help="tangent report for a JSON point file")
    p_chk.add_argument("--input", required=True, help="point file path")
    p_chk.add_argument("--output", default=None)
    p_chk.set_defaults(func=cmd_check_point)

    p_scan = sub.add_parser("scan", help="sample random points, tabulate excess")
    p_scan.add_argument("--n", type=int, required=True)
    p_scan.add_argument("--k", type=int, required=True)
    p_scan.add_argument("--m", type=int, default=1)
    p_scan.add_argument("--p", type=int, default=None, help="prime field modulus")
    p_scan.add_argument("--field", choices=("rational",), default=None,
                        help="use the rationals instead of --p")
    p_scan.add_argument("--samples", type=int, default=100)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--workers", type=int, default=1)
    p_scan.add_argument("--output", default=None)
    p_scan.set_defaults(func=cmd_scan)

    p_ver = sub.add_parser("verify", help="verify the dimension/degeneracy equivalence")
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--k", type=int, required=True)
    p_ver.add_argument("--p", type=int, required=True, help="prime field modulus")
    p_ver.add_argument("--pairs", type=int, required=True,
                       help="number of random independent pencils")
    p_ver.add_argument("--scope", choices=("exhaustive", "sampled"),
                       default="exhaustive")
    p_ver.add_argument("--samples", type=int, default=100,
                       help="points per pair in sampled scope")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--workers", type=int, default=1)
    p_ver.add_argument("--inject-fault", action="store_true",
                       help="self-test: corrupt one constraint row; must exit 1")
    p_ver.add_argument("--output", default=None)
    p_ver.set_defaults(func=cmd_verify)

    p_nf = sub.add_parser("normal-form", help="canonical form of an alternating matrix")
    p_nf.add_argument("--input", required=True, help="matrix file path")
    p_nf.add_argument("--output", default=None)
    p_nf.set_defaults(func=cmd_normal_form)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        return _fail(str(exc))
    except json.JSONDecodeError as exc:
        return _fail(f"malformed JSON: {exc}")
    except (ValueError, KeyError, TypeError) as exc:
        return _fail(str(exc))
    except OSError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
