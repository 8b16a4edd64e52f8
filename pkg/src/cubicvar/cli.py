"""Command-line harness: verification sweeps and one-off evaluations.

Exit codes: 0 all checks match, 1 at least one mismatch, 2 bad usage or
configuration, 3 output I/O failure.

Report files are byte-deterministic by default: rows are computed in a
canonical order that does not depend on the thread count, and the
elapsed_ns column is written as 0 unless --timing is given.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .decomp import WrongResidueError, eisenstein, two_square
from .families import FAMILY_TAGS, PARAM_NAMES, Family
from .fp_core import PrimeContext, is_prime
from .jacobsthal import (
    ClosedForm,
    phi2_brute,
    phi2_closed,
    psi3_brute,
    psi3_closed,
    rho_brute,
)
from .stats import variance
from .theorems import closed_variance, perturbed_pairs

# eval prints the full fiber-sum vector up to this p
VECTOR_PRINT_CAP = 61

CSV_HEADER = (
    "p",
    "family",
    "params",
    "brute_num",
    "brute_den",
    "closed_num",
    "closed_den",
    "match",
    "residuals",
    "elapsed_ns",
)


class InvalidConfigError(ValueError):
    """Sweep configuration violates its invariants."""


@dataclass(frozen=True)
class SweepConfig:
    p_min: int = 5
    p_max: int = 61
    families: tuple[str, ...] = FAMILY_TAGS
    mode: str = "full"  # "full" | "sampled"
    sample_count: int = 25
    seed: int = 0
    threads: int = 0  # 0 = auto
    timing: bool = False

    def validate(self) -> None:
        if self.p_min < 5:
            raise InvalidConfigError("p_min must be at least 5")
        if self.p_max < self.p_min:
            raise InvalidConfigError("p_max must be at least p_min")
        if not self.families:
            raise InvalidConfigError("at least one family tag is required")
        bad = sorted(set(self.families) - set(PARAM_NAMES))
        if bad:
            raise InvalidConfigError(f"unknown family tags: {', '.join(bad)}")
        if self.mode not in ("full", "sampled"):
            raise InvalidConfigError(f"unknown mode {self.mode!r}")
        if self.mode == "sampled" and self.sample_count < 1:
            raise InvalidConfigError("sample count must be positive")
        if self.threads < 0:
            raise InvalidConfigError("threads must be positive, or 0 for auto")


@dataclass(frozen=True)
class VerificationRow:
    p: int
    family: str
    params: dict[str, int]
    brute: Fraction
    closed: Fraction | None
    match: bool
    residuals: dict[str, int]
    elapsed_ns: int


def primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def full_grid(ctx: PrimeContext, tag: str) -> list[dict[str, int]]:
    """Every admissible parameter tuple of a family at p."""
    p = ctx.p
    if tag == "A":
        return [
            {"b": b, "c": c} for b in range(p) for c in range(p) if (b, c) != (0, 0)
        ]
    if tag == "B":
        return [{"a": a, "c": c} for a in range(p) for c in range(p)]
    if tag == "C":
        return [{"a": a, "b": b} for a in range(p) for b in range(p)]
    if tag == "D":
        return [{"b": b, "c": c} for b, c in perturbed_pairs(ctx)]
    return [{"b": b} for b in range(1, p)]


def sampled_grid(
    ctx: PrimeContext, tag: str, count: int, seed: int
) -> list[dict[str, int]]:
    """Seeded uniform draws from the admissible tuples; duplicates allowed."""
    p = ctx.p
    rng = random.Random(f"{seed}:{p}:{tag}")
    out = []
    for _ in range(count):
        if tag == "A":
            b = c = 0
            while (b, c) == (0, 0):
                b, c = rng.randrange(p), rng.randrange(p)
            out.append({"b": b, "c": c})
        elif tag == "B":
            out.append({"a": rng.randrange(p), "c": rng.randrange(p)})
        elif tag == "C":
            out.append({"a": rng.randrange(p), "b": rng.randrange(p)})
        elif tag == "D":
            b, c = rng.choice(perturbed_pairs(ctx))
            out.append({"b": b, "c": c})
        else:
            out.append({"b": rng.randrange(1, p)})
    return out


def evaluate_instance(
    ctx: PrimeContext, tag: str, params: dict[str, int]
) -> VerificationRow:
    """One row: brute-force variance against the matching closed form."""
    start = time.perf_counter_ns()
    fam = Family(ctx, tag, **params)
    brute = variance(fam.fiber_sums())
    cv = closed_variance(fam)
    elapsed = time.perf_counter_ns() - start
    if cv is None:
        return VerificationRow(ctx.p, tag, dict(fam.params), brute, None, True, {}, elapsed)
    return VerificationRow(
        ctx.p,
        tag,
        dict(fam.params),
        brute,
        cv.value,
        cv.value == brute,
        dict(cv.residuals),
        elapsed,
    )


def _param_key(tag: str, params: dict[str, int]) -> tuple[int, ...]:
    return tuple(params[k] for k in PARAM_NAMES[tag])


def config_echo(cfg: SweepConfig) -> dict:
    # threads and timing are deliberately absent: outputs must not
    # depend on how the work was scheduled
    return {
        "p_min": cfg.p_min,
        "p_max": cfg.p_max,
        "families": sorted(set(cfg.families)),
        "mode": cfg.mode,
        "sample_count": cfg.sample_count if cfg.mode == "sampled" else None,
        "seed": cfg.seed if cfg.mode == "sampled" else None,
    }


def run_sweep(cfg: SweepConfig) -> tuple[list[VerificationRow], dict]:
    """All rows of the configured grid, in canonical order, plus a summary."""
    cfg.validate()
    tags = tuple(sorted(set(cfg.families)))
    primes = primes_between(cfg.p_min, cfg.p_max)
    if not primes:
        raise InvalidConfigError(f"no primes in [{cfg.p_min}, {cfg.p_max}]")
    contexts = {p: PrimeContext(p) for p in primes}
    for ctx in contexts.values():
        ctx.legendre_table  # build eagerly; worker threads share it read-only
    tasks: list[tuple[PrimeContext, str, dict[str, int]]] = []
    for p in primes:
        ctx = contexts[p]
        for tag in tags:
            if cfg.mode == "full":
                grid = full_grid(ctx, tag)
            else:
                grid = sampled_grid(ctx, tag, cfg.sample_count, cfg.seed)
            tasks.extend((ctx, tag, params) for params in grid)
    tasks.sort(key=lambda t: (t[0].p, t[1], _param_key(t[1], t[2])))
    workers = cfg.threads or min(8, os.cpu_count() or 1)
    if workers == 1:
        rows = [evaluate_instance(*t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda t: evaluate_instance(*t), tasks))
    mismatches = sum(1 for r in rows if not r.match)
    summary = {
        "primes": len(primes),
        "rows": len(rows),
        "matches": len(rows) - mismatches,
        "mismatches": mismatches,
        "closed_unavailable": sum(1 for r in rows if r.closed is None),
        "config": config_echo(cfg),
    }
    return rows, summary


def _fmt_params(row: VerificationRow) -> str:
    return ";".join(f"{k}={row.params[k]}" for k in PARAM_NAMES[row.family])


def _fmt_residuals(row: VerificationRow) -> str:
    return ";".join(f"{k}={v}" for k, v in sorted(row.residuals.items()))


def write_csv(rows, path: str, timing: bool = False) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow(
                [
                    r.p,
                    r.family,
                    _fmt_params(r),
                    r.brute.numerator,
                    r.brute.denominator,
                    r.closed.numerator if r.closed is not None else "n/a",
                    r.closed.denominator if r.closed is not None else "n/a",
                    "true" if r.match else "false",
                    _fmt_residuals(r),
                    r.elapsed_ns if timing else 0,
                ]
            )


def _row_payload(r: VerificationRow, timing: bool) -> dict:
    return {
        "p": r.p,
        "family": r.family,
        "params": {k: r.params[k] for k in PARAM_NAMES[r.family]},
        "brute": {"num": r.brute.numerator, "den": r.brute.denominator},
        "closed": (
            {"num": r.closed.numerator, "den": r.closed.denominator}
            if r.closed is not None
            else None
        ),
        "match": r.match,
        "residuals": r.residuals,
        "elapsed_ns": r.elapsed_ns if timing else 0,
    }


def write_json(rows, summary: dict, path: str, timing: bool = False) -> None:
    payload = {
        "rows": [_row_payload(r, timing) for r in rows],
        "summary": summary,
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _parse_param_value(ctx: PrimeContext, text: str) -> int:
    if "/" in text:
        num, den = text.split("/", 1)
        return ctx.frac(int(num), int(den))
    return int(text) % ctx.p


def parse_params(ctx: PrimeContext, family: str, text: str) -> dict[str, int]:
    """Parse 'a=0,b=1' style parameters; fractions like -1/2 are reduced mod p."""
    names = PARAM_NAMES[family]
    out: dict[str, int] = {}
    if text:
        for item in text.split(","):
            if "=" not in item:
                raise ValueError(f"malformed parameter {item!r}; expected name=value")
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in names:
                raise ValueError(f"family {family} takes parameters {names}, got {key!r}")
            out[key] = _parse_param_value(ctx, value.strip())
    missing = [k for k in names if k not in out]
    if missing:
        raise ValueError(f"family {family} needs values for {', '.join(missing)}")
    return out


def _frac_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        p_min=args.p_min,
        p_max=args.p_max,
        families=tuple(t.strip() for t in args.families.split(",") if t.strip()),
        mode=args.mode,
        sample_count=args.count,
        seed=args.seed,
        threads=args.threads,
        timing=args.timing,
    )
    rows, summary = run_sweep(cfg)
    if args.csv:
        write_csv(rows, args.csv, timing=cfg.timing)
    if args.json:
        write_json(rows, summary, args.json, timing=cfg.timing)
    for r in rows:
        if not r.match:
            print(
                f"mismatch: p={r.p} family={r.family} {_fmt_params(r)} "
                f"brute={_frac_str(r.brute)} closed={_frac_str(r.closed)}"
            )
    print(
        "primes={primes} rows={rows} matches={matches} mismatches={mismatches} "
        "closed_unavailable={closed_unavailable}".format(**summary)
    )
    if summary["mismatches"]:
        print("MISMATCH: at least one closed form disagrees with brute force")
        return 1
    print("VERIFIED: every closed form matches its brute-force variance exactly")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    ctx = PrimeContext(args.p)
    params = parse_params(ctx, args.family, args.params)
    row = evaluate_instance(ctx, args.family, params)
    fam = Family(ctx, args.family, **params)
    print(f"{fam!r}")
    print(f"f_0(x) = {fam.poly(0)}")
    if ctx.p <= VECTOR_PRINT_CAP:
        print(f"fiber sums: {fam.fiber_sums()}")
    print(f"brute variance:  {_frac_str(row.brute)}")
    if row.closed is None:
        print("closed variance: n/a (untabulated parameters; brute force only)")
    else:
        print(f"closed variance: {_frac_str(row.closed)}")
        print(f"residuals: {_fmt_residuals(row) or '(none)'}")
    print(f"match: {'true' if row.match else 'false'}")
    return 0 if row.match else 1


def cmd_jacobsthal(args: argparse.Namespace) -> int:
    ctx = PrimeContext(args.p)
    kind = args.kind
    if kind == "phi2":
        brute = phi2_brute(ctx, args.c)
        closed: ClosedForm | None = phi2_closed(ctx, args.c)
    elif kind == "psi3":
        brute = psi3_brute(ctx, args.c)
        closed = psi3_closed(ctx, args.c)
    else:
        brute = rho_brute(ctx, args.c)
        closed = None
    print(f"{kind}({args.c % ctx.p}) mod {ctx.p}: brute = {brute}")
    if closed is None:
        print("closed form: n/a (no closed form for rho; brute force only)")
        return 0
    if closed.is_exact:
        print(f"closed form: {closed.exact}")
    else:
        print(f"closed form: candidates {sorted(closed.candidates)}")
    if kind == "phi2" and ctx.p % 4 == 1:
        d = two_square(ctx)
        print(f"decomposition: {d.p} = ({d.a})^2 + ({d.b})^2")
    elif kind == "psi3" and ctx.p % 3 == 1:
        d = eisenstein(ctx)
        print(f"decomposition: {d.p} = ({d.a})^2 + 3*({d.b})^2")
    else:
        print("decomposition: n/a (the sum vanishes in this residue class)")
    ok = brute in closed
    print(f"membership: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_decomp(args: argparse.Namespace) -> int:
    ctx = PrimeContext(args.p)
    try:
        d = two_square(ctx)
        print(f"two-square: {d.p} = ({d.a})^2 + ({d.b})^2")
    except WrongResidueError:
        print(f"two-square: n/a ({ctx.p} % 4 == 3)")
    try:
        e = eisenstein(ctx)
        print(f"eisenstein: {e.p} = ({e.a})^2 + 3*({e.b})^2")
    except WrongResidueError:
        print(f"eisenstein: n/a ({ctx.p} % 3 == 2)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicvar",
        description="Exact variance certification for one-parameter cubic families over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep primes and certify closed forms against brute force")
    v.add_argument("--p-min", type=int, default=5)
    v.add_argument("--p-max", type=int, default=61)
    v.add_argument("--families", default="A,B,C,D,T", help="comma list from A,B,C,D,T")
    v.add_argument("--mode", choices=("full", "sampled"), default="full")
    v.add_argument("--count", type=int, default=25, help="samples per (prime, family) in sampled mode")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int, default=0, help="worker threads; 0 = auto")
    v.add_argument("--csv", metavar="PATH", help="write rows as CSV")
    v.add_argument("--json", metavar="PATH", help="write rows and summary as JSON")
    v.add_argument(
        "--timing",
        action="store_true",
        help="write real elapsed_ns (opts out of byte-identical reports)",
    )
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate one family instance")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--family", choices=FAMILY_TAGS, required=True)
    e.add_argument("--params", default="", help="e.g. a=0,b=1; fractions like -1/2 allowed")
    e.set_defaults(func=cmd_eval)

    j = sub.add_parser("jacobsthal", help="evaluate one cubic character sum")
    j.add_argument("--p", type=int, required=True)
    j.add_argument("--kind", choices=("phi2", "psi3", "rho"), required=True)
    j.add_argument("--c", type=int, required=True)
    j.set_defaults(func=cmd_jacobsthal)

    d = sub.add_parser("decomp", help="signed prime decompositions")
    d.add_argument("--p", type=int, required=True)
    d.set_defaults(func=cmd_decomp)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
