"""Command-line entry point: ``iltt <command> ...``.

Exit status: 0 success, 1 domain or input error, 2 capacity exceeded,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import domination as dom
from .core import Tournament
from .embed import embed_target
from .errors import CapacityError, IlttError, NumericalFailure, SizeCapError
from .formats import read_tournament, resolve_base, to_dot, to_edgelist
from .generate import DEFAULT_NODE_CAP, ModelKind, check_capacity, iterate, iterate_final
from .hamilton import find_hamilton_cycle, lift_hamilton_cycle
from .metrics import count_alpha, predict_wiener_iltt, predict_wiener_ilttd, summarize
from .motifs import motif_census
from .spectral import (
    DIRECT_CAP,
    TAU_MATCH,
    TAU_ZERO,
    Spectrum,
    base_nonzero,
    direct_spectrum,
    recurrence_spectrum,
    set_distance,
    spectrum_csv,
)
from .verify import Corpus, REGISTRY, SCHEMA_VERSION, domination_checks, report_json, run_verify

EXIT_OK, EXIT_DOMAIN, EXIT_CAPACITY, EXIT_NUMERICAL = 0, 1, 2, 3
CAP_ENV = "ILTT_NODE_CAP"


@dataclass(frozen=True)
class RunConfig:
    node_cap: int = DEFAULT_NODE_CAP
    seed: int = 0
    threads: int = 1
    tau_match: float = TAU_MATCH
    tau_zero: float = TAU_ZERO

    def __post_init__(self):
        if self.node_cap < 2:
            raise IlttError(f"node cap must be >= 2, got {self.node_cap}")
        if self.threads < 1:
            raise IlttError(f"--threads must be >= 1, got {self.threads}")
        if not (self.tau_match > 0 and self.tau_zero > 0):
            raise IlttError("tolerances must be positive")


def _env_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_NODE_CAP
    try:
        return int(raw)
    except ValueError:
        raise IlttError(f"{CAP_ENV}={raw!r} is not an integer") from None


def config_from(args) -> RunConfig:
    return RunConfig(
        node_cap=args.cap if args.cap is not None else _env_cap(),
        seed=args.seed,
        threads=args.threads if args.threads is not None else (os.cpu_count() or 1),
        tau_match=getattr(args, "tau_match", TAU_MATCH),
        tau_zero=getattr(args, "tau_zero", TAU_ZERO),
    )


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _input(args) -> tuple[Tournament, Tournament | None]:
    """(tournament to work on, generating base or None when read from --in)."""
    if args.input is not None:
        g = read_tournament(args.input)
        if args.steps:
            return iterate_final(g, args.model, args.steps, node_cap=args.config.node_cap), g
        return g, g if args.from_base else None
    base = resolve_base(args.base)
    check_capacity(base.order, args.steps, args.config.node_cap)
    return iterate_final(base, args.model, args.steps, node_cap=args.config.node_cap), base


# -- commands ------------------------------------------------------------------


def cmd_generate(args) -> int:
    base = resolve_base(args.base)
    g = iterate_final(base, args.model, args.steps, node_cap=args.config.node_cap)
    _emit(args, to_edgelist(g) if args.out == "edgelist" else to_dot(g))
    return EXIT_OK


def _predictors(base: Tournament, model: ModelKind, t: int, measured: int | None) -> dict:
    out = {}
    b = summarize(base, workers=1)
    if model is ModelKind.ILTT:
        if b.strong and base.order >= 3:
            p = predict_wiener_iltt(base.order, b.wiener, t)
            out["wiener_iltt"] = {"predicted": p, "measured": measured, "match": p == measured}
        else:
            out["wiener_iltt"] = {"applicable": False, "reason": "base must be strong with order >= 3"}
    else:
        if b.strong and base.order >= 3 and t >= 1:
            p = predict_wiener_ilttd(base.order, count_alpha(base), t)
            out["wiener_ilttd"] = {"predicted": p, "measured": measured, "match": p == measured}
        else:
            out["wiener_ilttd"] = {"applicable": False, "reason": "needs a strong base of order >= 3 and t >= 1"}
    return out


def cmd_analyze(args) -> int:
    g, base = _input(args)
    s = summarize(g, workers=args.config.threads)
    report = {"schema_version": SCHEMA_VERSION}
    report.update(s.to_dict())
    if base is not None:
        model = ModelKind.parse(args.model)
        preds = _predictors(base, model, args.steps, s.wiener)
        report["model"] = model.value
        report["steps"] = args.steps
        report["predictors"] = preds
        flags = [p["match"] for p in preds.values() if "match" in p]
        report["match"] = all(flags) if flags else None
    _emit(args, _dump(report))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    cfg = args.config
    if args.input is not None:
        base = read_tournament(args.input)
    else:
        base = resolve_base(args.base)
    if ModelKind.parse(args.model) is not ModelKind.ILTT and args.method != "direct":
        raise IlttError("the eigenvalue recurrence holds for ILTT only; use --method direct")
    out: list[Spectrum] = []
    direct = None
    if args.method in ("direct", "both"):
        order = base.order << args.steps
        if order > DIRECT_CAP:
            raise SizeCapError("direct eigensolve", order, DIRECT_CAP)
        direct = direct_spectrum(iterate_final(base, args.model, args.steps, node_cap=cfg.node_cap))
        out.append(direct)
    if args.method in ("recurrence", "both"):
        rec = recurrence_spectrum(base_nonzero(direct_spectrum(base), cfg.tau_zero), args.steps)
        out.append(rec)
        if direct is not None:
            d = set_distance(direct.values, rec.values)
            if d > cfg.tau_match:
                raise NumericalFailure(
                    f"direct and recurrence spectra differ by {d:.3e} > {cfg.tau_match:g}", distance=d
                )
    _emit(args, spectrum_csv(out, include_zeros=not args.nonzero_only))
    return EXIT_OK


def cmd_hamilton(args) -> int:
    g, _ = _input(args)
    cyc = find_hamilton_cycle(g)
    model = ModelKind.parse(args.model)
    cur, step = g, 0
    if args.lift:
        trace = iterate(g, model, args.lift, keep_snapshots=True, node_cap=args.config.node_cap)
        for k in range(args.lift):
            cyc = lift_hamilton_cycle(cyc, model, cur.order, cur)
            cur, step = trace.snapshot(k + 1), k + 1
    report = {
        "schema_version": SCHEMA_VERSION,
        "order": cur.order,
        "lift_steps": step,
        "model": model.value,
        "cycle": list(cyc.nodes),
        "valid": cyc.is_valid(cur),
        "problems": cyc.problems(cur),
    }
    _emit(args, _dump(report))
    return EXIT_OK


def cmd_dominate(args) -> int:
    if args.check_lifts:
        base = read_tournament(args.input) if args.input is not None else resolve_base(args.base)
        t = args.steps or 1
        check_capacity(base.order, t, min(args.config.node_cap, dom.EXACT_CAP))
        _emit(args, _dump(domination_checks(base, t)))
        return EXIT_OK
    g, _ = _input(args)
    r = dom.domination_numbers(g)
    _emit(args, _dump({"schema_version": SCHEMA_VERSION, "order": g.order, **r.to_dict()}))
    return EXIT_OK


def cmd_motifs(args) -> int:
    g, _ = _input(args)
    sample = None if args.exact else args.sample
    m = motif_census(g, sample=sample, seed=args.config.seed)
    _emit(args, _dump({"schema_version": SCHEMA_VERSION, "order": g.order, **m.to_dict()}))
    return EXIT_OK


def cmd_embed(args) -> int:
    target = read_tournament(args.target)
    base = resolve_base(args.base)
    cert = embed_target(target, base, args.model, node_cap=args.config.node_cap)
    _emit(args, _dump({"schema_version": SCHEMA_VERSION, **cert.to_dict()}))
    return EXIT_OK if cert.is_valid() else EXIT_DOMAIN


def cmd_verify(args) -> int:
    only = [x.strip() for x in args.only.split(",")] if args.only else None
    if only:
        unknown = [x for x in only if x not in REGISTRY]
        if unknown:
            raise IlttError(f"unknown suites {unknown}; known: {', '.join(REGISTRY)}")
    report = run_verify(Corpus(seed=args.config.seed), only=only)
    _emit(args, report_json(report))
    return EXIT_DOMAIN if args.strict and not report["passed"] else EXIT_OK


# -- parser ----------------------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help=f"node cap (default ${CAP_ENV} or {DEFAULT_NODE_CAP})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None, help="worker threads (default: CPU count)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_mutually_exclusive_group()
    grp.add_argument("--in", dest="input", help="edge-list or DOT file")
    grp.add_argument("--base", default="c3", help="c3, linear:N, random:N:SEED or a file (default c3)")
    source.add_argument("--model", default="iltt", choices=[m.value for m in ModelKind])
    source.add_argument("--steps", type=_nonneg, default=0, help="generate this many steps first")
    source.add_argument(
        "--from-base", action="store_true", help="treat --in as a base for closed-form predictors"
    )

    p = argparse.ArgumentParser(prog="iltt", description="Iterated local transitivity tournaments.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="generate an iterate")
    g.add_argument("--base", default="c3")
    g.add_argument("--model", default="iltt", choices=[m.value for m in ModelKind])
    g.add_argument("--steps", type=_nonneg, default=1)
    g.add_argument("--out", default="edgelist", choices=["edgelist", "dot"])
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", parents=[common, source], help="distance report as JSON")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("spectrum", parents=[common], help="eigenvalues as CSV")
    sg = s.add_mutually_exclusive_group()
    sg.add_argument("--in", dest="input")
    sg.add_argument("--base", default="c3")
    s.add_argument("--model", default="iltt", choices=[m.value for m in ModelKind])
    s.add_argument("--steps", type=_nonneg, default=0)
    s.add_argument("--method", default="both", choices=["direct", "recurrence", "both"])
    s.add_argument("--tau-match", type=_positive_float, default=TAU_MATCH)
    s.add_argument("--tau-zero", type=_positive_float, default=TAU_ZERO)
    s.add_argument("--nonzero-only", action="store_true", help="omit the zero eigenvalues")
    s.set_defaults(func=cmd_spectrum)

    h = sub.add_parser("hamilton", parents=[common, source], help="Hamilton cycle, optionally lifted")
    h.add_argument("--lift", type=_nonneg, default=0, help="lift the cycle through this many steps")
    h.set_defaults(func=cmd_hamilton)

    d = sub.add_parser("dominate", parents=[common, source], help="domination numbers")
    d.add_argument("--check-lifts", action="store_true", help="run the lifting/projection checks")
    d.set_defaults(func=cmd_dominate)

    m = sub.add_parser("motifs", parents=[common, source], help="triad and four-node census")
    mg = m.add_mutually_exclusive_group()
    mg.add_argument("--exact", action="store_true")
    mg.add_argument("--sample", type=int, default=None, metavar="K")
    m.set_defaults(func=cmd_motifs)

    e = sub.add_parser("embed", parents=[common], help="embed a target into an ILTT_d iterate")
    e.add_argument("--target", required=True)
    e.add_argument("--base", default="c3")
    e.add_argument("--model", default="ilttd", choices=[m.value for m in ModelKind])
    e.set_defaults(func=cmd_embed)

    v = sub.add_parser("verify", parents=[common], help="run every theorem suite")
    v.add_argument("--only", help="comma-separated suite names")
    v.add_argument("--strict", action="store_true", help="exit 1 when any suite fails")
    v.set_defaults(func=cmd_verify)
    return p


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, (CapacityError, SizeCapError)):
        return EXIT_CAPACITY
    if isinstance(exc, NumericalFailure):
        return EXIT_NUMERICAL
    return EXIT_DOMAIN


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.config = config_from(args)
        return args.func(args)
    except (IlttError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
