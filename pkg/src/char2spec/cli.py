"""Command-line front end.

Subcommands: verify, scan-adapted, detect-hurdle, trk, choice, lemma,
acceptance.  Every command emits one UTF-8 JSON report (stdout or --out)
with the configuration echoed back; reports are byte-identical for
identical configurations except for the timing_ms fields.  Exit code 0
means every check held, 1 means some check failed, 2 means a usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .gf import FieldSpec, field_spec
from .matrix import Mat
from .subspace import BudgetExceeded, DEFAULT_BUDGET
from .spectra import check_space, parse_predicate
from .structure import adapted_scan, choice_solve, detect_hurdle, is_intransitive, transitive_rank
from .harnesses import LEMMA_NAMES, choice_lemma_audit, run_lemma
from .acceptance import AcceptanceConfig, run_acceptance
from .constructions import build_with_expected
from .upoly import poly

SCHEMA = "char2spec-report/1"


def _field(args) -> FieldSpec:
    return field_spec(args.field)


def _config_echo(args, extra: dict | None = None) -> dict:
    base = {"field": args.field, "budget": args.budget, "samples": args.samples,
            "seed": args.seed, "workers": args.workers}
    if extra:
        base.update(extra)
    return base


def _report(command: str, config: dict, checks: list[dict], t0: float) -> dict:
    failed = sum(1 for c in checks
                 if c.get("outcome") not in ("holds", "pass", "none", "budget"))
    return {"schema": SCHEMA, "version": __version__, "command": command,
            "config": config, "checks": checks,
            "summary": {"total": len(checks), "failed": failed},
            "timing_ms": round(1000 * (time.time() - t0), 3)}


def _emit(report: dict, out_path: str | None) -> int:
    text = json.dumps(report, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report["summary"]["failed"] == 0 else 1


def cmd_verify(args) -> int:
    t0 = time.time()
    fs = _field(args)
    space, expected = build_with_expected(fs, args.construction)
    pred = parse_predicate(args.pred, args.k)
    verdict = check_space(fs, space, pred, budget=args.budget, samples=args.samples,
                          seed=args.seed, workers=args.workers, label=args.construction)
    check = verdict.to_json()
    check["dim"] = space.dim
    check["expected_dim"] = expected
    if space.dim != expected:
        check["outcome"] = "fails"
    cfg = _config_echo(args, {"construction": args.construction, "pred": pred.name})
    return _emit(_report("verify", cfg, [check], t0), args.out)


def cmd_scan_adapted(args) -> int:
    t0 = time.time()
    fs = _field(args)
    space, _ = build_with_expected(fs, args.construction)
    report = adapted_scan(fs, space, label=args.construction)
    check = report.to_json()
    check["outcome"] = "holds"
    cfg = _config_echo(args, {"construction": args.construction})
    return _emit(_report("scan-adapted", cfg, [check], t0), args.out)


def cmd_detect_hurdle(args) -> int:
    t0 = time.time()
    fs = _field(args)
    space, _ = build_with_expected(fs, args.construction)
    try:
        cert = detect_hurdle(fs, space, budget=args.budget)
        if cert is None:
            check = {"outcome": "none"}
        else:
            check = {"outcome": "holds", "certificate": cert.to_json()}
    except BudgetExceeded as exc:
        check = {"outcome": "budget", "reason": str(exc)}
    cfg = _config_echo(args, {"construction": args.construction})
    return _emit(_report("detect-hurdle", cfg, [check], t0), args.out)


def cmd_trk(args) -> int:
    t0 = time.time()
    fs = _field(args)
    space, _ = build_with_expected(fs, args.construction)
    check = {"outcome": "holds", "trk": transitive_rank(fs, space),
             "intransitive": is_intransitive(fs, space)}
    cfg = _config_echo(args, {"construction": args.construction})
    return _emit(_report("trk", cfg, [check], t0), args.out)


def cmd_choice(args) -> int:
    t0 = time.time()
    fs = _field(args)
    if args.matrix:
        entries = [int(x) for x in args.matrix.split(",")]
        n = args.n
        m = Mat(n, n, entries)
        target = poly(int(x) for x in args.target.split(","))
        try:
            r = choice_solve(fs, m, target, args.p, budget=args.budget)
        except BudgetExceeded as exc:
            check = {"outcome": "budget", "reason": str(exc)}
        else:
            check = ({"outcome": "holds", "block": r.to_json()} if r is not None
                     else {"outcome": "fails", "reason": "no block achieves the target"})
        cfg = _config_echo(args, {"n": n, "p": args.p, "target": args.target})
        return _emit(_report("choice", cfg, [check], t0), args.out)
    verdict = choice_lemma_audit(fs, n=args.n, cap=args.cap, seed=args.seed)
    check = verdict.to_json()
    check["outcome"] = "holds" if verdict.holds else "fails"
    cfg = _config_echo(args, {"n": args.n, "cap": args.cap})
    return _emit(_report("choice", cfg, [check], t0), args.out)


def cmd_lemma(args) -> int:
    t0 = time.time()
    fs = _field(args)
    verdict = run_lemma(fs, args.name, trials=args.trials, seed=args.seed,
                        workers=args.workers)
    check = verdict.to_json()
    check["outcome"] = verdict.outcome if verdict.outcome != "hypothesis-violation" else "fails"
    cfg = _config_echo(args, {"lemma": args.name, "trials": args.trials})
    return _emit(_report("lemma", cfg, [check], t0), args.out)


def cmd_acceptance(args) -> int:
    t0 = time.time()
    cfg = AcceptanceConfig(budget=args.budget, samples=args.samples,
                           seed=args.seed, workers=args.workers)
    result = run_acceptance(cfg, with_determinism=not args.skip_determinism)
    checks = result["criteria"]
    report = {"schema": SCHEMA, "version": __version__, "command": "acceptance",
              "config": _config_echo(args), "checks": checks,
              "summary": {"total": result["summary"]["total"],
                          "failed": result["summary"]["failed"]},
              "timing_ms": round(1000 * (time.time() - t0), 3)}
    for c in checks:
        line = f"criterion {c['criterion']:>2} [{c['name']}]: {c['outcome']}"
        print(line, file=sys.stderr)
    return _emit(report, args.out)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", default="gf4", help="gf2/gf4/gf8/gf16 or gf2^k[:modulus]")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max objects per exhaustive pass (default 2^24)")
    p.add_argument("--samples", type=int, default=10 ** 6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="write the JSON report to a file")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="char2spec",
        description="Exact checks on bounded-spectrum matrix spaces over GF(2^k).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="build a space and verify a spectrum predicate")
    _add_common(p)
    p.add_argument("--construction", required=True)
    p.add_argument("--pred", required=True, help="e.g. 1-spec, 2bar-spec, 1bar*-spec")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("scan-adapted", help="adapted-vector scan of a space")
    _add_common(p)
    p.add_argument("--construction", required=True)
    p.set_defaults(fn=cmd_scan_adapted)

    p = sub.add_parser("detect-hurdle", help="search dual planes certifying a hurdle")
    _add_common(p)
    p.add_argument("--construction", required=True)
    p.set_defaults(fn=cmd_detect_hurdle)

    p = sub.add_parser("trk", help="transitive rank of a space")
    _add_common(p)
    p.add_argument("--construction", required=True)
    p.set_defaults(fn=cmd_trk)

    p = sub.add_parser("choice", help="choice solver audit (or one instance via --matrix)")
    _add_common(p)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--matrix", default=None, help="comma-separated row-major entries")
    p.add_argument("--target", default=None, help="comma-separated coefficients, degree 0 first")
    p.add_argument("--p", type=int, default=1)
    p.set_defaults(fn=cmd_choice)

    p = sub.add_parser("lemma", help="run a lemma harness")
    _add_common(p)
    p.add_argument("--name", required=True, choices=LEMMA_NAMES)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(fn=cmd_lemma)

    p = sub.add_parser("acceptance", help="run the acceptance suite")
    _add_common(p)
    p.add_argument("--skip-determinism", action="store_true",
                   help="skip the worker-count determinism criterion")
    # the acceptance criteria pin their own enumeration budget: the largest
    # exhaustive space has exactly 2^20 elements and the sampled criteria
    # must stay sampled
    p.set_defaults(fn=cmd_acceptance, budget=1 << 20)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
