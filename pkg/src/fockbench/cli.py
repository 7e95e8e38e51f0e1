"""Command line front end: state export, verification suites, parameter
sweeps and coordinate-space wavefunctions.

Artifacts are deterministic: floats are printed with 17 significant
digits, complex amplitudes as [re, im] pairs, JSON carries no whitespace
that could vary between runs, and files are written atomically (temp
file plus rename).  Wall-clock timings go to stderr only so that two
runs with the same inputs produce byte-identical outputs.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition
error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import coherent as co
from . import phase as ph
from . import sqm
from . import squeezing as sq
from . import su11
from .fock import FockState, TwoModeState, quadrature_report
from .verify import SUITES, run_suite

__all__ = ["main"]

SCHEMA_VERSION = 1
BUILTIN_DIM = 64
MODAL_LEVELS = 12

FAMILIES = (
    "coherent",
    "squeezed",
    "theta-vacuum",
    "two-mode",
    "pair",
    "perelomov",
    "parity-pair",
    "phase-squeezed",
    "lambda-coherent",
    "lambda-squeezed",
)

# parameters each family insists on; phi defaults to 0 where it applies
REQUIRED_PARAMS = {
    "coherent": ("alpha",),
    "squeezed": ("r",),
    "theta-vacuum": ("theta",),
    "two-mode": ("theta",),
    "pair": ("zeta", "q"),
    "perelomov": ("k", "xi"),
    "parity-pair": ("zeta", "q"),
    "phase-squeezed": ("r", "m"),
    "lambda-coherent": ("lam", "z"),
    "lambda-squeezed": ("lam", "xi", "z"),
}


class UsageError(Exception):
    pass


# -------------------------------------------------------------- formatting


def _fmt_float(x) -> str:
    xf = float(x)
    if math.isnan(xf) or math.isinf(xf):
        raise ValueError("non-finite value in artifact")
    return "%.17g" % xf


def _emit_json(obj) -> str:
    if obj is None:
        return "null"
    if obj is True or (isinstance(obj, np.bool_) and bool(obj)):
        return "true"
    if obj is False or isinstance(obj, np.bool_):
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return _emit_json([obj.real, obj.imag])
    if isinstance(obj, dict):
        parts = (json.dumps(str(k)) + ":" + _emit_json(v) for k, v in obj.items())
        return "{" + ",".join(parts) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ",".join(_emit_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit_csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, (int, np.integer)) and not isinstance(cell, bool):
                cells.append(str(int(cell)))
            elif isinstance(cell, str):
                cells.append(cell)
            else:
                cells.append(_fmt_float(cell))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _write_text(path, text) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".fockbench-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _amp_pairs(amps: np.ndarray):
    flat = np.asarray(amps, dtype=complex).ravel()
    return [[float(c.real), float(c.imag)] for c in flat]


def _param_value(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


# ------------------------------------------------------------ CLI parsing


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=None, help="Fock truncation")
    common.add_argument("--config", default=None, help="key=value file with defaults")
    common.add_argument("--out", default=None, help="output path (stdout if omitted)")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    for name in ("r", "phi", "theta", "s", "k", "lam"):
        common.add_argument(f"--{name}", type=float, default=None)
    for name in ("alpha", "zeta", "xi", "z"):
        common.add_argument(f"--{name}", type=_complex_arg, default=None)
    for name in ("q", "m"):
        common.add_argument(f"--{name}", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="fockbench",
        description="states, sweeps and verification suites for the "
        "truncated bosonic oscillator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", parents=[common], help="export one state")
    p_state.add_argument("--family", choices=FAMILIES, default=None)

    p_verify = sub.add_parser("verify", parents=[common], help="run a named suite")
    p_verify.add_argument("--suite", choices=sorted(SUITES), default=None)
    p_verify.add_argument("--tol-scale", type=float, default=None, dest="tol_scale")

    p_sweep = sub.add_parser("sweep", parents=[common], help="sweep one parameter")
    p_sweep.add_argument("--family", choices=FAMILIES, default=None)
    p_sweep.add_argument("--param", default=None)
    p_sweep.add_argument("--start", type=float, default=None)
    p_sweep.add_argument("--stop", type=float, default=None)
    p_sweep.add_argument("--steps", type=int, default=None)

    p_wave = sub.add_parser(
        "wavefunction", parents=[common], help="coordinate-space profile"
    )
    p_wave.add_argument("--family", choices=FAMILIES, default=None)
    p_wave.add_argument("--x-min", type=float, default=None, dest="x_min")
    p_wave.add_argument("--x-max", type=float, default=None, dest="x_max")
    p_wave.add_argument("--points", type=int, default=None)
    return parser


def _parse_config_value(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        return text


def _apply_config(args: argparse.Namespace) -> None:
    """Fill unset options from a key=value file; flags always win."""
    if args.config is None:
        return
    try:
        with open(args.config, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{args.config}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        attr = key.strip().replace("-", "_")
        if not hasattr(args, attr) or attr in ("command", "config"):
            raise UsageError(f"{args.config}:{lineno}: unknown key {key.strip()!r}")
        if getattr(args, attr) is None:
            setattr(args, attr, _parse_config_value(value.strip()))


def _apply_defaults(args: argparse.Namespace) -> None:
    # record what the user pinned before defaults flow in; the verify
    # suites use their own tuned dimensions unless a value was pinned
    args.pinned = {
        name
        for name in ("dim", "alpha", "theta", "lam")
        if getattr(args, name, None) is not None
    }
    if args.dim is None:
        env = os.environ.get("FOCKBENCH_DIM")
        if env is not None:
            try:
                args.dim = int(env)
            except ValueError as exc:
                raise UsageError(f"FOCKBENCH_DIM is not an integer: {env!r}") from exc
            args.pinned.add("dim")
        else:
            args.dim = BUILTIN_DIM
    if args.dim < 2:
        raise UsageError("dimension must be at least 2")
    if getattr(args, "phi", None) is None:
        args.phi = 0.0
    if getattr(args, "tol_scale", None) is None and hasattr(args, "tol_scale"):
        args.tol_scale = 1.0
    if args.format is None:
        args.format = "csv" if args.command in ("sweep", "wavefunction") else "json"


def _require(args: argparse.Namespace, names) -> dict:
    values = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"family {args.family!r} needs --{name}")
        values[name] = value
    return values


# ----------------------------------------------------------------- state


def _report_payload(state: FockState):
    rep = quadrature_report(state)
    payload = {
        "mean_x": rep.mean_x,
        "mean_p": rep.mean_p,
        "var_x": rep.var_x,
        "var_p": rep.var_p,
        "product": rep.product,
    }
    return payload, rep.tail_warning


def _single_mode_payload(family, params, state: FockState, report=True) -> dict:
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "state",
        "family": family,
        "parameters": {k: _param_value(v) for k, v in params.items()},
        "dim": state.dim,
        "amplitudes": _amp_pairs(state.amps),
        "photon_distribution": [float(p) for p in np.abs(state.amps) ** 2],
    }
    if report:
        rep, warn = _report_payload(state)
        payload["quadrature_report"] = rep
        if warn:
            payload["tail_warning"] = True
    else:
        payload["quadrature_report"] = None
    return payload


def _two_mode_payload(family, params, state: TwoModeState) -> dict:
    noise = sq.two_mode_noise_report(state)
    return {
        "schema": SCHEMA_VERSION,
        "command": "state",
        "family": family,
        "parameters": {k: _param_value(v) for k, v in params.items()},
        "dim": list(state.dims),
        "amplitudes": _amp_pairs(state.amps),
        "photon_distribution": [float(p) for p in (np.abs(state.amps) ** 2).ravel()],
        "quadrature_report": {k: float(v) for k, v in noise.items()},
    }


def _modal_payload(family, params, coeffs: np.ndarray) -> dict:
    rep = sqm.modal_quadrature_report(coeffs)
    return {
        "schema": SCHEMA_VERSION,
        "command": "state",
        "family": family,
        "parameters": {k: _param_value(v) for k, v in params.items()},
        "dim": int(coeffs.size),
        "amplitudes": _amp_pairs(coeffs),
        "photon_distribution": [float(p) for p in np.abs(coeffs) ** 2],
        "quadrature_report": {k: float(v) for k, v in rep.items()},
    }


def _modal_levels(dim: int) -> int:
    return min(dim, MODAL_LEVELS)


def _build_state_payload(args: argparse.Namespace) -> dict:
    family, dim = args.family, args.dim
    if family == "coherent":
        p = _require(args, ("alpha",))
        return _single_mode_payload(
            family, p, co.coherent_ladder(co.CoherentSpec(p["alpha"], dim))
        )
    if family == "squeezed":
        p = _require(args, ("r",))
        p["phi"] = args.phi
        return _single_mode_payload(
            family, p, sq.squeezed_vacuum(sq.SqueezeSpec(p["r"], p["phi"], dim))
        )
    if family == "theta-vacuum":
        p = _require(args, ("theta",))
        return _single_mode_payload(family, p, sq.theta_vacuum(p["theta"], dim))
    if family == "phase-squeezed":
        p = _require(args, ("r", "m"))
        p["phi"] = args.phi
        _, state = ph.phase_squeeze_unitary(p["r"], p["phi"], p["m"], dim)
        return _single_mode_payload(family, p, state)
    if family == "perelomov":
        p = _require(args, ("k", "xi"))
        state = su11.perelomov_state(su11.SU11Rep(p["k"], dim), p["xi"])
        # the ladder index is a weight label, not a photon number, so no
        # quadrature report applies
        return _single_mode_payload(family, p, state, report=False)
    if family == "two-mode":
        p = _require(args, ("theta",))
        return _two_mode_payload(family, p, sq.two_mode_theta_vacuum(p["theta"], (dim, dim)))
    if family == "pair":
        p = _require(args, ("zeta", "q"))
        state = su11.pair_coherent(su11.PairCoherentSpec(p["zeta"], p["q"], dim))
        return _two_mode_payload(family, p, state)
    if family == "parity-pair":
        p = _require(args, ("zeta", "q"))
        return _two_mode_payload(family, p, su11.parity_pair_state(p["zeta"], p["q"], dim))
    if family == "lambda-coherent":
        p = _require(args, ("lam", "z"))
        coeffs = sqm.modal_coherent_coeffs(p["z"], _modal_levels(dim))
        return _modal_payload(family, p, coeffs)
    if family == "lambda-squeezed":
        p = _require(args, ("lam", "xi", "z"))
        coeffs = sqm.modal_squeezed_coeffs(p["xi"], p["z"], _modal_levels(dim))
        return _modal_payload(family, p, coeffs)
    raise UsageError("state needs --family")


def _state_csv(payload: dict) -> str:
    probs = payload["photon_distribution"]
    dim = payload["dim"]
    if isinstance(dim, list):
        d1, d2 = dim
        rows = [(n1, n2, probs[n1 * d2 + n2]) for n1 in range(d1) for n2 in range(d2)]
        return _emit_csv(("n1", "n2", "probability"), rows)
    return _emit_csv(("n", "probability"), list(enumerate(probs)))


def run_state(args: argparse.Namespace) -> int:
    if args.family is None:
        raise UsageError("state needs --family")
    payload = _build_state_payload(args)
    if args.format == "csv":
        _write_text(args.out, _state_csv(payload))
    else:
        _write_text(args.out, _emit_json(payload))
    return 0


# ---------------------------------------------------------------- verify


def run_verify(args: argparse.Namespace) -> int:
    if args.suite is None:
        raise UsageError("verify needs --suite")
    cfg = {name: getattr(args, name) for name in args.pinned}
    report = run_suite(args.suite, cfg, tol_scale=args.tol_scale)
    print(
        f"# suite {report.suite}: wall time {report.wall_time_s:.3f} s",
        file=sys.stderr,
    )
    for check in report.checks:
        if not check.passed:
            print(
                f"# FAIL {check.name}: {check.measured:.6e} > {check.bound:.6e}",
                file=sys.stderr,
            )
    if args.format == "csv":
        rows = [
            (c.name, c.measured, c.bound, int(c.passed)) for c in report.checks
        ]
        text = _emit_csv(("check", "measured", "bound", "passed"), rows)
    else:
        text = _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "command": "verify",
                "suite": report.suite,
                "tol_scale": args.tol_scale,
                "passed": report.passed,
                "checks": [
                    {
                        "name": c.name,
                        "measured": c.measured,
                        "bound": c.bound,
                        "passed": c.passed,
                    }
                    for c in report.checks
                ],
            }
        )
    _write_text(args.out, text)
    return 0 if report.passed else 1


# ----------------------------------------------------------------- sweep


def _mean_n(state: FockState) -> float:
    probs = np.abs(state.amps) ** 2
    return float(probs @ np.arange(state.dim))


def _sweep_squeezed_r(value: float, args) -> list:
    spec = sq.SqueezeSpec(value, args.phi, args.dim)
    state = sq.squeezed_vacuum(spec)
    rep = quadrature_report(state)
    fid = state.fidelity(sq.squeezed_vacuum_closed_form(spec))
    return [value, _mean_n(state), rep.var_x, rep.var_p, rep.product, fid]


def _sweep_coherent_t(value: float, args) -> list:
    alpha = args.alpha
    state = co.evolve_coherent(co.EvolutionSpec(alpha, value), args.dim)
    rep = quadrature_report(state)
    return [value, rep.mean_x, rep.mean_p, _mean_n(state)]


def _sweep_theta_vacuum(value: float, args) -> list:
    state = sq.theta_vacuum(value, args.dim)
    rep = quadrature_report(state)
    resid = sq.theta_vacuum_residual(value, args.dim)
    return [value, _mean_n(state), rep.var_x, rep.var_p, rep.product, resid]


def _sweep_two_mode(value: float, args) -> list:
    noise = sq.two_mode_noise_report(sq.two_mode_theta_vacuum(value, (args.dim, args.dim)))
    return [
        value,
        noise["cross_x"],
        noise["cross_p"],
        noise["cross_product"],
        noise["margin"],
    ]


SWEEPS = {
    ("squeezed", "r"): (
        ("r", "mean_n", "var_x", "var_p", "product", "closed_form_fidelity"),
        _sweep_squeezed_r,
        (),
    ),
    ("coherent", "t"): (
        ("t", "mean_x", "mean_p", "mean_n"),
        _sweep_coherent_t,
        ("alpha",),
    ),
    ("theta-vacuum", "theta"): (
        ("theta", "mean_n", "var_x", "var_p", "product", "annihilation_residual"),
        _sweep_theta_vacuum,
        (),
    ),
    ("two-mode", "theta"): (
        ("theta", "cross_x", "cross_p", "cross_product", "margin"),
        _sweep_two_mode,
        (),
    ),
}


def run_sweep(args: argparse.Namespace) -> int:
    for name in ("family", "param", "start", "stop", "steps"):
        if getattr(args, name, None) is None:
            raise UsageError(f"sweep needs --{name.replace('_', '-')}")
    key = (args.family, args.param)
    if key not in SWEEPS:
        supported = ", ".join(f"{f}/{p}" for f, p in sorted(SWEEPS))
        raise UsageError(
            f"unsupported sweep {args.family}/{args.param} (supported: {supported})"
        )
    if args.steps < 1:
        raise UsageError("sweep needs at least one step")
    header, fn, extra = SWEEPS[key]
    for name in extra:
        if getattr(args, name, None) is None:
            raise UsageError(f"sweep over {args.family} needs --{name}")
    values = np.linspace(args.start, args.stop, args.steps)
    rows = [fn(float(v), args) for v in values]
    if args.format == "json":
        text = _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "command": "sweep",
                "family": args.family,
                "param": args.param,
                "columns": list(header),
                "rows": [[float(c) for c in row] for row in rows],
            }
        )
    else:
        text = _emit_csv(header, rows)
    _write_text(args.out, text)
    return 0


# --------------------------------------------------------- wavefunction


def _default_grid(center: float, half_width: float, points: int) -> np.ndarray:
    return np.linspace(center - half_width, center + half_width, points)


def _build_wavefunction(args: argparse.Namespace):
    family = args.family
    points = args.points or 2001
    if points < 2:
        raise UsageError("wavefunction needs at least two points")

    def grid(center, half):
        lo = args.x_min if args.x_min is not None else center - half
        hi = args.x_max if args.x_max is not None else center + half
        if hi <= lo:
            raise UsageError("x-max must exceed x-min")
        return np.linspace(lo, hi, points)

    if family == "coherent":
        p = _require(args, ("alpha",))
        center = math.sqrt(2.0) * p["alpha"].real if isinstance(p["alpha"], complex) else math.sqrt(2.0) * p["alpha"]
        return co.coherent_wavefunction(p["alpha"], grid(center, 12.0))
    if family == "squeezed":
        p = _require(args, ("s",))
        alpha = args.alpha or 0.0
        x0 = math.sqrt(2.0) * complex(alpha).real
        p0 = math.sqrt(2.0) * complex(alpha).imag
        half = max(10.0, 8.0 * p["s"] + 2.0)
        return sq.squeezed_wavefunction(p["s"], x0, p0, grid(x0, half))
    if family == "lambda-coherent":
        p = _require(args, ("lam", "z"))
        fam = sqm.build_family(p["lam"])
        return sqm.lambda_coherent(p["z"], fam, _modal_levels(args.dim))
    if family == "lambda-squeezed":
        p = _require(args, ("lam", "xi", "z"))
        fam = sqm.build_family(p["lam"])
        return sqm.lambda_squeezed(p["xi"], p["z"], fam, _modal_levels(args.dim))
    raise UsageError(f"no coordinate profile for family {family!r}")


def run_wavefunction(args: argparse.Namespace) -> int:
    if args.family is None:
        raise UsageError("wavefunction needs --family")
    wf = _build_wavefunction(args)
    xs = wf.xs
    if args.format == "json":
        text = _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "command": "wavefunction",
                "family": args.family,
                "x_min": float(xs[0]),
                "dx": float(wf.dx),
                "values": _amp_pairs(wf.values),
            }
        )
    else:
        rows = [
            (float(x), float(v.real), float(v.imag), float(abs(v) ** 2))
            for x, v in zip(xs, wf.values)
        ]
        text = _emit_csv(("x", "re", "im", "abs2"), rows)
    _write_text(args.out, text)
    return 0


# ------------------------------------------------------------------ main


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _apply_config(args)
        _apply_defaults(args)
        handler = {
            "state": run_state,
            "verify": run_verify,
            "sweep": run_sweep,
            "wavefunction": run_wavefunction,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
