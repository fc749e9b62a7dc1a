"""Command-line front end: signal ingestion, pipelines, report emission.

Subcommands: synth, factorize, unwind, denoise, phase, verify.  Signals
travel as JSON objects, either complex boundary samples
``{"m": M, "samples": [[re, im], ...]}`` or a real vector
``{"real": [u0, ...]}`` which is complexified on ingestion; CSV with two
columns re,im is accepted via ``--format csv``.  Reports are JSON on
stdout (or ``--out``); curve tables for external plotting are CSV files
with columns theta,re,im,abs,phase.  Reports are byte-identical for
identical inputs, seeds, and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import corpora, laws
from .analytic import analytic_signal
from .blaschke import phase_derivative_samples
from .errors import UnwindrError
from .spectral import (
    BoundarySamples,
    GammaWeights,
    negative_energy_fraction,
    to_samples,
    to_spectrum,
    winding_number,
)
from .unwind import UnwindConfig, reconstruct, unwind
from .weiss import ConstantStabilizer, ShiftStabilizer, stabilized_factorize, weiss_factorize

_ENV_GRID = "UNWINDR_DEFAULT_M"


def _default_grid_flag() -> int | None:
    raw = os.environ.get(_ENV_GRID)
    return int(raw) if raw else None


def _complex_pair(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def _samples_json(s: BoundarySamples) -> dict:
    return {"m": s.m, "samples": [_complex_pair(v) for v in s.values]}


def _parse_gamma(text: str) -> GammaWeights:
    if text == "dirichlet":
        return GammaWeights.dirichlet()
    if text == "h1":
        return GammaWeights.h1()
    if text.startswith("sobolev:"):
        return GammaWeights.sobolev(float(text.split(":", 1)[1]))
    raise argparse.ArgumentTypeError(
        f"gamma must be dirichlet, h1, or sobolev:<s>, got {text!r}"
    )


def _parse_stabilizer(text: str):
    if text == "none":
        return None
    if text.startswith("constant:"):
        return ConstantStabilizer(complex(text.split(":", 1)[1]))
    if text.startswith("shift:"):
        re_s, im_s = text.split(":", 1)[1].split(",")
        return ShiftStabilizer(complex(float(re_s), float(im_s)))
    raise argparse.ArgumentTypeError(
        f"stabilize must be none, constant:<c>, or shift:<re>,<im>, got {text!r}"
    )


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text()


def _ingest_signal(args) -> BoundarySamples:
    text = _read_text(getattr(args, "infile", None))
    if getattr(args, "format", "json") == "csv":
        rows = [line.split(",") for line in text.strip().splitlines() if line.strip()]
        values = np.array([complex(float(r[0]), float(r[1])) for r in rows])
        return BoundarySamples(values)
    payload = json.loads(text)
    if "real" in payload:
        return analytic_signal(np.asarray(payload["real"], dtype=float))
    if "samples" in payload:
        values = np.array([complex(p[0], p[1]) for p in payload["samples"]])
        declared = payload.get("m", values.size)
        if declared != values.size:
            raise ValueError(f"declared m={declared} but {values.size} samples given")
        return BoundarySamples(values)
    raise ValueError("signal JSON needs a 'samples' or 'real' field")


def _emit_report(report: dict, out: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _write_curve(prefix: str, name: str, s: BoundarySamples) -> None:
    path = Path(f"{prefix}_{name}.csv")
    lines = ["theta,re,im,abs,phase"]
    theta = s.theta
    for t, v in zip(theta, s.values):
        lines.append(
            "%.17g,%.17g,%.17g,%.17g,%.17g" % (t, v.real, v.imag, abs(v), np.angle(v))
        )
    path.write_text("\n".join(lines) + "\n")


def _factorize(samples: BoundarySamples, stabilizer):
    if stabilizer is None:
        return weiss_factorize(samples)
    return stabilized_factorize(samples, stabilizer)


def _cmd_synth(args) -> int:
    m = args.m or _default_grid_flag() or 1024
    if args.kind == "gaussian-chirp":
        sig = corpora.gaussian_chirp(m, carrier=args.carrier, width=args.width)
        payload = _samples_json(to_samples(sig, m))
    elif args.kind == "cubic":
        payload = _samples_json(to_samples(corpora.mixed_root_cubic(), m))
    elif args.kind == "noisy-cosine":
        u = corpora.multiplicative_noise_signal(m, seed=args.seed, terms=args.terms)
        payload = {"real": [float(v) for v in u]}
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown kind {args.kind}")
    _emit_report(payload, args.out)
    return 0


def _cmd_factorize(args) -> int:
    samples = _ingest_signal(args)
    fact = _factorize(samples, args.stabilize)
    inner, outer = fact.inner, fact.outer
    outer_boundary = fact.outer_boundary()
    report = {
        "m": samples.m,
        "min_modulus": float(np.min(np.abs(samples.values))),
        "negative_energy_fraction": negative_energy_fraction(samples),
        "disk_roots": winding_number(inner, 0.0),
        "outer_winding": winding_number(outer_boundary, 0.0),
        "max_inner_modulus_deviation": float(np.max(np.abs(np.abs(inner.values) - 1.0))),
        "max_modulus_mismatch": float(
            np.max(np.abs(np.abs(outer_boundary.values) - np.abs(samples.values)))
        ),
        "outer_mean": _complex_pair(outer.coeffs[0]),
        "outer_tail_fraction": float(fact.outer_tail_fraction),
        "stabilizer": fact.stabilizer,
        "perturbation": _complex_pair(fact.perturbation),
    }
    if args.emit_curves:
        _write_curve(args.emit_curves, "input", samples)
        _write_curve(args.emit_curves, "inner", inner)
        _write_curve(args.emit_curves, "outer", outer_boundary)
    _emit_report(report, args.out)
    return 0


def _cmd_unwind(args) -> int:
    samples = _ingest_signal(args)
    spectrum = to_spectrum(samples, max(2, samples.m // 8))
    grid = args.m or _default_grid_flag() or samples.m
    cfg = UnwindConfig(
        max_steps=args.steps,
        residual_tol=args.tol,
        gamma=args.gamma,
        shift_strategy="maximize_selector" if args.shift == "maximize" else "origin",
        grid=grid,
    )
    e = unwind(spectrum, cfg)
    report = {
        "status": e.status,
        "grid": e.grid,
        "terms": [
            {"a": _complex_pair(t.coefficient), "step": d.step}
            for t, d in zip(e.terms, e.diagnostics)
        ],
        "shifts": [_complex_pair(a) for a in e.shifts],
        "residuals": [float(d.residual_l2) for d in e.diagnostics],
        "residual_sup": [float(d.residual_sup) for d in e.diagnostics],
        "min_boundary_modulus": [float(d.min_boundary_modulus) for d in e.diagnostics],
        "norms": {
            "gamma": args.gamma.kind,
            "initial_x": float(e.initial_norm_x),
            "x": [float(d.norm_x) for d in e.diagnostics],
            "y": [float(d.norm_y) for d in e.diagnostics],
        },
        "law_checks": {},
    }
    if args.emit_curves:
        _write_curve(args.emit_curves, "input", samples)
        _write_curve(args.emit_curves, "reconstruction", reconstruct(e, len(e.terms)))
        _write_curve(args.emit_curves, "remainder", to_samples(e.remainder, e.grid))
    _emit_report(report, args.out)
    return 0


def _cmd_denoise(args) -> int:
    text = _read_text(args.infile)
    payload = json.loads(text)
    if "real" not in payload:
        raise ValueError("denoise expects a real signal: {'real': [...]}")
    u = np.asarray(payload["real"], dtype=float)

    from .weiss import denoise

    deviations = []
    result = None
    for r in range(1, args.rounds + 1):
        result = denoise(u, r)
        deviations.append(float(np.max(np.abs(np.abs(result.values) - 1.0))))
    spectrum = to_spectrum(result, result.m // 2)
    report = {
        "rounds": args.rounds,
        "modulus_deviation": deviations,
        "dominant_bin": int(np.argmax(np.abs(spectrum.coeffs))),
        "signal": _samples_json(result),
    }
    if args.emit_curves:
        _write_curve(args.emit_curves, "denoised", result)
    _emit_report(report, args.out)
    return 0


def _cmd_phase(args) -> int:
    samples = _ingest_signal(args)
    fact = _factorize(samples, args.stabilize)
    phi = phase_derivative_samples(fact.inner)
    report = {
        "m": samples.m,
        "winding": winding_number(fact.inner, 0.0),
        "mean": float(np.mean(phi)),
        "min": float(np.min(phi)),
        "max": float(np.max(phi)),
    }
    if args.emit_curves:
        _write_curve(args.emit_curves, "inner", fact.inner)
        path = Path(f"{args.emit_curves}_phase_derivative.csv")
        lines = ["theta,phase_derivative"]
        for t, v in zip(fact.inner.theta, phi):
            lines.append("%.17g,%.17g" % (t, v))
        path.write_text("\n".join(lines) + "\n")
    _emit_report(report, args.out)
    return 0


def _cmd_verify(args) -> int:
    names = list(laws.SUITES) if args.suite == "all" else [args.suite]
    results = [laws.run_suite(name, seed=args.seed) for name in names]
    width = max(len(r.name) for r in results)
    print(f"{'law':<{width}}  {'cases':>5}  {'result':6}  {'worst':>12}  {'bound':>9}")
    for r in results:
        verdict = "pass" if r.ok else "FAIL"
        print(f"{r.name:<{width}}  {r.cases:>5}  {verdict:6}  {r.worst:>12.3e}  {r.bound:>9.1e}")
    if args.out:
        _emit_report({"law_checks": {r.name: r.as_dict() for r in results}}, args.out)
    return 0 if all(r.ok for r in results) else 2


def _add_signal_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", default=None, help="input file (default: stdin)")
    p.add_argument("--format", choices=["json", "csv"], default="json")


def _add_common_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p.add_argument(
        "--emit-curves",
        default=None,
        metavar="PREFIX",
        help="write curve CSV tables (theta,re,im,abs,phase) with this path prefix",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unwindr",
        description="Blaschke factorization and unwinding-series toolkit on the unit circle",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="emit a synthetic signal as JSON")
    p.add_argument("--kind", choices=["gaussian-chirp", "cubic", "noisy-cosine"], required=True)
    p.add_argument("--carrier", type=int, default=10)
    p.add_argument("--width", type=float, default=1.0)
    p.add_argument("--terms", type=int, default=50)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--m", type=int, default=None, help="grid size (power of two)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("factorize", help="inner-outer factorization of a boundary signal")
    _add_signal_input(p)
    p.add_argument("--stabilize", type=_parse_stabilizer, default=None)
    _add_common_output(p)
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("unwind", help="run the unwinding iteration")
    _add_signal_input(p)
    p.add_argument("--steps", type=int, default=32)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--gamma", type=_parse_gamma, default=GammaWeights.dirichlet())
    p.add_argument("--shift", choices=["origin", "maximize"], default="origin")
    p.add_argument("--m", type=int, default=None)
    _add_common_output(p)
    p.set_defaults(func=_cmd_unwind)

    p = sub.add_parser("denoise", help="strip multiplicative amplitude noise")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--rounds", type=int, default=2)
    _add_common_output(p)
    p.set_defaults(func=_cmd_denoise)

    p = sub.add_parser("phase", help="instantaneous frequency of the unimodular part")
    _add_signal_input(p)
    p.add_argument("--stabilize", type=_parse_stabilizer, default=None)
    _add_common_output(p)
    p.set_defaults(func=_cmd_phase)

    p = sub.add_parser("verify", help="run the seeded law-checking suites")
    p.add_argument("--suite", default="all", choices=["all", *laws.SUITES])
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    """Entry point; returns the process exit code.

    0 success, 1 usage or input errors, 2 domain errors (the report names
    the failing error class).
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except UnwindrError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
