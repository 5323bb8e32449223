"""Command-line front end.

Subcommands: reproduce-paper, sweep, ratio, bind, fit, constants. Output is
CSV (17 significant digits, comma separator, LF endings, mandatory header),
JSON (same keys), or a plain table. Everything emitted is a pure function of
the flags, the optional config file, and the seed, so repeated runs are
byte-identical.

Exit codes: 0 success, 2 configuration error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .quantities import (
    ConfigurationError,
    Constants,
    DomainError,
    Energy,
    Length,
    Mass,
    constants_table,
)
from .forcelaws import (
    CutoffPolicy,
    Newtonian,
    ParticlePair,
    Proposed,
    Separation,
    Yukawa,
    detectable_range,
    force,
    force_newton,
    pion_mass_from_range,
    potential,
    range_from_pion_mass,
    strength_ratio,
)
from .boundstate import (
    RadialProblem,
    coulomb_problem,
    make_radial_problem,
    proposed_radial_problem,
    solve_bound_state,
    variational_upper_bound,
)
from .yukawafit import FitProblem, fit_yukawa

OUT_DIR_ENV = "SHORTGRAV_OUT_DIR"

_CONFIG_KEYS = ("mode", "dn-fm", "mass", "format", "out", "seed")
_MODES = ("paper", "codata")
_FORMATS = ("csv", "json", "table")


@dataclass(frozen=True)
class RunConfig:
    mode: str = "paper"
    d_n_fm: float = 1.0
    mass: str = "nucleon"
    fmt: str = "table"
    out: str | None = None
    seed: int = 0

    def constants(self) -> Constants:
        return Constants.for_mode(self.mode)

    def mass_kg(self, constants: Constants) -> float:
        if self.mass == "nucleon":
            return constants.nucleon_mass.kilograms
        return float(self.mass)

    def pair(self, constants: Constants) -> ParticlePair:
        m = Mass(self.mass_kg(constants))
        return ParticlePair(m, m, Length.from_fm(self.d_n_fm))


def _load_config_file(path: str) -> dict[str, str]:
    p = Path(path)
    if not p.is_file():
        raise ConfigurationError(f"config file not found: {path}")
    values: dict[str, str] = {}
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ConfigurationError(
                f"{path}:{lineno}: unknown key {key!r} (known: {', '.join(_CONFIG_KEYS)})"
            )
        values[key] = value
    return values


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    file_values = _load_config_file(args.config) if args.config else {}

    def pick(flag_value, key: str, default: str) -> str:
        if flag_value is not None:
            return str(flag_value)
        return file_values.get(key, default)

    mode = pick(args.mode, "mode", "paper")
    if mode not in _MODES:
        raise ConfigurationError(f"unknown mode {mode!r} (expected one of {_MODES})")
    fmt = pick(args.format, "format", "table")
    if fmt not in _FORMATS:
        raise ConfigurationError(f"unknown format {fmt!r} (expected one of {_FORMATS})")

    try:
        d_n_fm = float(pick(args.dn_fm, "dn-fm", "1.0"))
    except ValueError as exc:
        raise ConfigurationError(f"dn-fm must be a number: {exc}") from exc
    if not math.isfinite(d_n_fm) or d_n_fm <= 0.0:
        raise ConfigurationError(f"dn-fm must be positive, got {d_n_fm!r}")

    mass = pick(args.mass, "mass", "nucleon")
    if mass != "nucleon":
        try:
            mass_kg = float(mass)
        except ValueError as exc:
            raise ConfigurationError(f"mass must be 'nucleon' or a kg value: {exc}") from exc
        if not math.isfinite(mass_kg) or mass_kg <= 0.0:
            raise ConfigurationError(f"mass must be positive, got {mass!r}")

    try:
        seed = int(pick(args.seed, "seed", "0"))
    except ValueError as exc:
        raise ConfigurationError(f"seed must be an integer: {exc}") from exc
    if seed < 0:
        raise ConfigurationError(f"seed must be non-negative, got {seed}")

    out = pick(args.out, "out", "") or None
    return RunConfig(mode=mode, d_n_fm=d_n_fm, mass=mass, fmt=fmt, out=out, seed=seed)


def _fmt17(value: float) -> str:
    return format(float(value), ".17g")


def _fmt_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt17(value)
    return str(value)


def _fmt_table_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".10g")
    return str(value)


def render_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_table(header: list[str], rows: list[list]) -> str:
    cells = [[_fmt_table_cell(v) for v in row] for row in rows]
    widths = [
        max(len(header[i]), *(len(row[i]) for row in cells)) if cells else len(header[i])
        for i in range(len(header))
    ]
    def line(parts):
        return "  ".join(part.ljust(widths[i]) for i, part in enumerate(parts)).rstrip()
    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(row) for row in cells)
    return "\n".join(out) + "\n"


def render_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit_rows(cfg: RunConfig, header: list[str], rows: list[list]) -> str:
    if cfg.fmt == "csv":
        return render_csv(header, rows)
    if cfg.fmt == "json":
        return render_json([dict(zip(header, row)) for row in rows])
    return render_table(header, rows)


def _emit_record(cfg: RunConfig, record: dict) -> str:
    if cfg.fmt == "json":
        return render_json(record)
    scalars = {k: v for k, v in record.items() if not isinstance(v, (dict, list))}
    if cfg.fmt == "csv":
        return render_csv(list(scalars.keys()), [list(scalars.values())])
    rows = [[k, v] for k, v in record.items()
            if not isinstance(v, (dict, list))]
    rows.extend([k, json.dumps(v)] for k, v in record.items() if isinstance(v, (dict, list)))
    return render_table(["field", "value"], rows)


def write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    if not path.is_absolute():
        base = os.environ.get(OUT_DIR_ENV)
        if base:
            path = Path(base) / path
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise ConfigurationError(f"cannot write output to {path}: {exc}") from exc


# --- reproduce-paper -------------------------------------------------------

_REPRODUCE_FORMULA = "ratio=((s+dn)/s)^2; F_newton=G*m1*m2/(s+dn)^2; F_proposed=G*m1*m2/s^2"


def build_reproduction(constants: Constants, pair: ParticlePair):
    """The headline prediction table plus summary records for one config."""
    gaps = [constants.planck_length] + [Length.from_fm(x) for x in (1.0, 2.0, 3.0, 4.0, 5.0, 10.0)]
    rows = []
    for gap in gaps:
        sep = Separation(gap)
        rows.append(
            [
                gap.fm,
                strength_ratio(pair.d_n, gap),
                force_newton(pair, sep, constants).newtons,
                force(Proposed(), pair, sep, constants).newtons,
                _REPRODUCE_FORMULA,
            ]
        )

    well_depth_j = constants.G * pair.mass_product / constants.planck_length.meters
    pion_for_1fm = pion_mass_from_range(Length.from_fm(1.0), constants)
    range_for_100mev = range_from_pion_mass(Energy.from_mev(100.0), constants)
    summary = [
        {
            "quantity": "strength_ratio_at_planck_gap",
            "value": strength_ratio(pair.d_n, constants.planck_length),
            "unit": "dimensionless",
            "formula": "((s+dn)/s)^2 at s=planck_length",
        },
        {
            "quantity": "pion_rest_energy_for_range_1fm",
            "value": pion_for_1fm.mev,
            "unit": "MeV",
            "formula": "hbar*c/lambda",
        },
        {
            "quantity": "range_for_rest_energy_100MeV",
            "value": range_for_100mev.fm,
            "unit": "fm",
            "formula": "hbar*c/(m*c^2)",
        },
        {
            "quantity": "proposed_well_depth_at_cutoff",
            "value": well_depth_j,
            "unit": "J",
            "formula": "G*m1*m2/planck_length",
        },
        {
            "quantity": "proposed_well_depth_at_cutoff_mev",
            "value": well_depth_j / Energy.from_mev(1.0).joules,
            "unit": "MeV",
            "formula": "G*m1*m2/planck_length",
        },
    ]
    return rows, summary


_PREDICTION_HEADER = ["s_fm", "ratio", "force_newton_N", "force_proposed_N", "formula"]
_SUMMARY_HEADER = ["quantity", "value", "unit", "formula"]


def cmd_reproduce_paper(cfg: RunConfig, args: argparse.Namespace) -> str:
    constants = cfg.constants()
    pair = cfg.pair(constants)
    rows, summary = build_reproduction(constants, pair)
    summary_rows = [[rec[k] for k in _SUMMARY_HEADER] for rec in summary]
    if cfg.fmt == "json":
        return render_json(
            {
                "mode": constants.mode,
                "d_n_fm": pair.d_n.fm,
                "mass_kg": pair.m1.kilograms,
                "prediction_table": [dict(zip(_PREDICTION_HEADER, row)) for row in rows],
                "summary": summary,
            }
        )
    if cfg.fmt == "csv":
        return (
            render_csv(_PREDICTION_HEADER, rows)
            + "\n"
            + render_csv(_SUMMARY_HEADER, summary_rows)
        )
    return (
        render_table(_PREDICTION_HEADER, rows)
        + "\n"
        + render_table(_SUMMARY_HEADER, summary_rows)
    )


# --- sweep -----------------------------------------------------------------

_SWEEP_HEADER = ["s_fm", "D_fm", "force_N", "potential_J", "ratio"]


def _law_from_args(args: argparse.Namespace):
    if args.law == "newton":
        return Newtonian()
    if args.law == "proposed":
        policy = CutoffPolicy.CLAMP_TO_PLANCK if args.cutoff == "clamp" else CutoffPolicy.ERROR
        return Proposed(policy)
    if args.law == "yukawa":
        if args.g2 is None or args.lambda_fm is None:
            raise ConfigurationError("yukawa law needs --g2 and --lambda-fm")
        return Yukawa(args.g2, Length.from_fm(args.lambda_fm))
    raise ConfigurationError(f"unknown law {args.law!r}")


def build_sweep(spec, pair: ParticlePair, constants: Constants, s_lo_fm: float,
                s_hi_fm: float, n: int) -> list[list]:
    if not (s_lo_fm > 0.0 and s_hi_fm > s_lo_fm):
        raise ConfigurationError(
            f"sweep window must satisfy 0 < s_min < s_max, got [{s_lo_fm!r}, {s_hi_fm!r}] fm"
        )
    if n < 2:
        raise ConfigurationError(f"sweep needs at least 2 points, got {n}")
    rows = []
    for s_m in np.geomspace(s_lo_fm * 1e-15, s_hi_fm * 1e-15, n):
        sep = Separation(Length(float(s_m)))
        f = force(spec, pair, sep, constants)
        u = potential(spec, pair, sep, constants)
        f_newton = force_newton(pair, sep, constants)
        rows.append(
            [
                sep.surface_gap.fm,
                sep.center_distance(pair.d_n).fm,
                f.newtons,
                u.joules,
                f.newtons / f_newton.newtons,
            ]
        )
    return rows


def cmd_sweep(cfg: RunConfig, args: argparse.Namespace) -> str:
    constants = cfg.constants()
    pair = cfg.pair(constants)
    spec = _law_from_args(args)
    rows = build_sweep(spec, pair, constants, args.s_min_fm, args.s_max_fm, args.num)
    return _emit_rows(cfg, _SWEEP_HEADER, rows)


# --- ratio -----------------------------------------------------------------

def cmd_ratio(cfg: RunConfig, args: argparse.Namespace) -> str:
    constants = cfg.constants()
    d_n = Length.from_fm(cfg.d_n_fm)
    if args.epsilon:
        rows = [[eps, detectable_range(d_n, eps).fm] for eps in args.epsilon]
        return _emit_rows(cfg, ["epsilon", "s_fm"], rows)
    gaps_fm: list[float] = list(args.s_fm or [])
    if args.s_min_fm is not None or args.s_max_fm is not None:
        if args.s_min_fm is None or args.s_max_fm is None:
            raise ConfigurationError("a ratio window needs both --s-min-fm and --s-max-fm")
        if not (args.s_min_fm > 0.0 and args.s_max_fm > args.s_min_fm):
            raise ConfigurationError("ratio window must satisfy 0 < s_min < s_max")
        gaps_fm.extend(float(x) for x in np.geomspace(args.s_min_fm, args.s_max_fm, args.num))
    if not gaps_fm:
        raise ConfigurationError("nothing to do: pass --s-fm, a window, or --epsilon")
    rows = [[s, strength_ratio(d_n, Length.from_fm(s))] for s in gaps_fm]
    return _emit_rows(cfg, ["s_fm", "ratio"], rows)


# --- bind ------------------------------------------------------------------

def _coulomb_preset(constants: Constants) -> tuple[RadialProblem, dict]:
    mu = Mass(constants.nucleon_mass.kilograms / 2.0)
    bohr = Length.from_fm(1.0)
    strength = constants.hbar**2 / (mu.kilograms * bohr.meters)
    problem = coulomb_problem(
        strength,
        mu,
        r_min=Length(bohr.meters * 1e-5),
        r_max=Length(bohr.meters * 50.0),
        n_points=20000,
    )
    closed_form = -mu.kilograms * strength**2 / (2.0 * constants.hbar**2)
    return problem, {
        "preset": "coulomb",
        "strength_Jm": strength,
        "closed_form_ground_energy_J": closed_form,
    }


def _nucleon_proposed_preset(constants: Constants, d_n_fm: float) -> tuple[RadialProblem, dict]:
    pair = ParticlePair.nucleons(constants, Length.from_fm(d_n_fm))
    problem = proposed_radial_problem(pair, constants, gap_max=Length.from_fm(50.0), n_points=20000)
    return problem, {
        "preset": "nucleon-proposed",
        "variational_upper_bound_J": variational_upper_bound(problem).joules,
        "well_depth_J": constants.G * pair.mass_product / problem.r_min.meters,
    }


def _bind_problem(cfg: RunConfig, args: argparse.Namespace) -> tuple[RadialProblem, dict]:
    constants = cfg.constants()
    if args.preset == "coulomb":
        return _coulomb_preset(constants)
    if args.preset == "nucleon-proposed":
        return _nucleon_proposed_preset(constants, cfg.d_n_fm)
    if args.preset is not None:
        raise ConfigurationError(f"unknown preset {args.preset!r}")

    if args.potential is None:
        raise ConfigurationError("bind needs --preset or --potential")
    if args.r_max_fm is None:
        raise ConfigurationError("bind needs --r-max-fm")
    pair = cfg.pair(constants)
    extras: dict = {"potential": args.potential}
    if args.potential == "coulomb":
        if args.strength_jm is None:
            raise ConfigurationError("coulomb potential needs --strength-jm")
        if args.r_min_fm is None:
            raise ConfigurationError("coulomb potential needs --r-min-fm")
        mu = Mass(pair.m1.kilograms * pair.m2.kilograms / (pair.m1.kilograms + pair.m2.kilograms))
        problem = coulomb_problem(
            args.strength_jm,
            mu,
            r_min=Length.from_fm(args.r_min_fm),
            r_max=Length.from_fm(args.r_max_fm),
            n_points=args.n_points,
        )
        return problem, extras
    if args.potential == "proposed":
        gap_min = None if args.r_min_fm is None else Length.from_fm(args.r_min_fm)
        problem = proposed_radial_problem(
            pair, constants, gap_min=gap_min,
            gap_max=Length.from_fm(args.r_max_fm), n_points=args.n_points,
        )
        return problem, extras
    if args.potential in ("newton", "yukawa"):
        if args.r_min_fm is None:
            raise ConfigurationError(f"{args.potential} potential needs --r-min-fm")
        if args.potential == "newton":
            spec = Newtonian()
        else:
            if args.g2 is None or args.lambda_fm is None:
                raise ConfigurationError("yukawa potential needs --g2 and --lambda-fm")
            spec = Yukawa(args.g2, Length.from_fm(args.lambda_fm))
        problem = make_radial_problem(
            spec, pair, constants,
            r_min=Length.from_fm(args.r_min_fm),
            r_max=Length.from_fm(args.r_max_fm),
            n_points=args.n_points,
        )
        return problem, extras
    raise ConfigurationError(f"unknown potential {args.potential!r}")


def cmd_bind(cfg: RunConfig, args: argparse.Namespace) -> str:
    problem, extras = _bind_problem(cfg, args)
    result = solve_bound_state(problem, args.state)
    record = {
        **extras,
        "state_index": args.state,
        "energy_J": result.energy.joules,
        "energy_MeV": result.energy.mev,
        "node_count": result.node_count,
        "converged": result.converged,
        "bracket_width_J": result.bracket_width.joules,
        "coordinate": result.coordinate,
        "r_min_fm": problem.r_min.fm,
        "r_max_fm": problem.r_max.fm,
        "n_points": problem.n_points,
        "metadata": result.metadata,
    }
    if args.wavefunction_out:
        csv_text = render_csv(
            ["r_fm", "u"],
            [[r / 1e-15, u] for r, u in result.wavefunction_samples],
        )
        write_output(csv_text, args.wavefunction_out)
    return _emit_record(cfg, record)


# --- fit -------------------------------------------------------------------

def cmd_fit(cfg: RunConfig, args: argparse.Namespace) -> str:
    constants = cfg.constants()
    pair = cfg.pair(constants)
    if args.target == "yukawa":
        if args.target_g2 is None or args.target_lambda_fm is None:
            raise ConfigurationError("yukawa target needs --target-g2 and --target-lambda-fm")
        target = Yukawa(args.target_g2, Length.from_fm(args.target_lambda_fm))
    else:
        target = Proposed()
    problem = FitProblem.window_fm(
        pair, args.s_min_fm, args.s_max_fm,
        n_samples=args.n_samples, seed=cfg.seed, target=target,
    )
    result = fit_yukawa(problem, constants)
    record = {
        "g2": result.g2,
        "lambda_fm": result.lam.fm,
        "rms_relative_residual": result.rms_relative_residual,
        "iterations": result.iterations,
        "converged": result.converged,
        "window_fm": [args.s_min_fm, args.s_max_fm],
        "n_samples": args.n_samples,
        "seed": cfg.seed,
    }
    if cfg.fmt == "json":
        return render_json(record)
    flat = dict(record)
    window = flat.pop("window_fm")
    flat["s_lo_fm"], flat["s_hi_fm"] = window
    if cfg.fmt == "csv":
        return render_csv(list(flat.keys()), [list(flat.values())])
    return render_table(["field", "value"], [[k, v] for k, v in flat.items()])


# --- constants -------------------------------------------------------------

def cmd_constants(cfg: RunConfig, args: argparse.Namespace) -> str:
    table = constants_table(cfg.constants())
    header = ["key", "value", "unit", "source"]
    rows = [[rec[k] for k in header] for rec in table]
    if cfg.fmt == "json":
        return render_json({"mode": cfg.mode, "constants": table})
    return _emit_rows(cfg, header, rows)


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=_MODES, default=None,
                        help="Planck-length convention (default paper: 1e-35 m exactly)")
    common.add_argument("--dn-fm", dest="dn_fm", type=float, default=None,
                        help="contact distance d_n in fm (default 1)")
    common.add_argument("--mass", default=None,
                        help="'nucleon' or a mass in kg for both particles")
    common.add_argument("--format", choices=_FORMATS, default=None,
                        help="output format (default table)")
    common.add_argument("--out", default=None,
                        help=f"output path; relative paths resolve under ${OUT_DIR_ENV} if set")
    common.add_argument("--seed", type=int, default=None, help="seed for the fit multi-start grid")
    common.add_argument("--config", default=None, help="key = value config file; flags win")

    parser = argparse.ArgumentParser(
        prog="shortgrav",
        description="Surface-gap gravity laboratory: force laws, bound states, Yukawa fits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "reproduce-paper", parents=[common],
        help="emit the headline prediction table, pion mass/range pair, and well depth",
    )

    p_sweep = sub.add_parser("sweep", parents=[common], help="tabulate a law over a gap window")
    p_sweep.add_argument("--law", choices=("newton", "proposed", "yukawa"), required=True)
    p_sweep.add_argument("--s-min-fm", dest="s_min_fm", type=float, required=True)
    p_sweep.add_argument("--s-max-fm", dest="s_max_fm", type=float, required=True)
    p_sweep.add_argument("-n", "--num", type=int, default=50, help="number of log-spaced rows")
    p_sweep.add_argument("--g2", type=float, default=None, help="Yukawa coupling")
    p_sweep.add_argument("--lambda-fm", dest="lambda_fm", type=float, default=None,
                         help="Yukawa range in fm")
    p_sweep.add_argument("--cutoff", choices=("error", "clamp"), default="error",
                         help="behavior below the Planck cutoff (surface-gap law)")

    p_ratio = sub.add_parser("ratio", parents=[common],
                             help="strength ratio at given gaps, or detectable range for --epsilon")
    p_ratio.add_argument("--s-fm", dest="s_fm", type=float, action="append",
                         help="surface gap in fm (repeatable)")
    p_ratio.add_argument("--s-min-fm", dest="s_min_fm", type=float, default=None)
    p_ratio.add_argument("--s-max-fm", dest="s_max_fm", type=float, default=None)
    p_ratio.add_argument("-n", "--num", type=int, default=50)
    p_ratio.add_argument("--epsilon", type=float, action="append",
                         help="relative accuracy; emits the gap where the ratio is 1+epsilon")

    p_bind = sub.add_parser("bind", parents=[common], help="solve a radial bound-state problem")
    p_bind.add_argument("--preset", choices=("coulomb", "nucleon-proposed"), default=None)
    p_bind.add_argument("--potential", choices=("newton", "proposed", "yukawa", "coulomb"),
                        default=None)
    p_bind.add_argument("--g2", type=float, default=None)
    p_bind.add_argument("--lambda-fm", dest="lambda_fm", type=float, default=None)
    p_bind.add_argument("--strength-jm", dest="strength_jm", type=float, default=None,
                        help="Coulomb-form strength K in J*m (V = -K/r)")
    p_bind.add_argument("--r-min-fm", dest="r_min_fm", type=float, default=None,
                        help="inner edge in fm (gap coordinate for the surface-gap law)")
    p_bind.add_argument("--r-max-fm", dest="r_max_fm", type=float, default=None)
    p_bind.add_argument("--n-points", dest="n_points", type=int, default=20000)
    p_bind.add_argument("--state", type=int, default=0, help="state index (node count)")
    p_bind.add_argument("--wavefunction-out", dest="wavefunction_out", default=None,
                        help="write wavefunction samples as CSV (r_fm,u)")

    p_fit = sub.add_parser("fit", parents=[common],
                           help="fit a Yukawa force to a target law over a gap window")
    p_fit.add_argument("--target", choices=("proposed", "yukawa"), default="proposed")
    p_fit.add_argument("--target-g2", dest="target_g2", type=float, default=None)
    p_fit.add_argument("--target-lambda-fm", dest="target_lambda_fm", type=float, default=None)
    p_fit.add_argument("--s-min-fm", dest="s_min_fm", type=float, required=True)
    p_fit.add_argument("--s-max-fm", dest="s_max_fm", type=float, required=True)
    p_fit.add_argument("--n-samples", dest="n_samples", type=int, default=40)

    sub.add_parser("constants", parents=[common], help="dump the constants table")

    return parser


_DISPATCH = {
    "reproduce-paper": cmd_reproduce_paper,
    "sweep": cmd_sweep,
    "ratio": cmd_ratio,
    "bind": cmd_bind,
    "fit": cmd_fit,
    "constants": cmd_constants,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        text = _DISPATCH[args.command](cfg, args)
        write_output(text, cfg.out)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
