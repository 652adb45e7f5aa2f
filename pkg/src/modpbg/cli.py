"""Command-line front end: dispersion, dos, spectrum, decay and sweep runs.

All frequencies are in units of the emitter frequency omega0 and times in
1/omega0 (c = 1).  Parameters come from flags, optionally layered over a flat
``key = value`` config file; flags win.  Results go to CSV (17 significant
digits, LF line endings) or JSON (payload plus a ``meta`` block echoing the
resolved configuration); identical configurations produce byte-identical
output.

Exit codes: 0 success, 2 usage/configuration or I/O failure, 3 numerical
model breakdown.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass

import numpy as np

from .crystal import (
    CrystalParams,
    ModelBreakdownError,
    ModulationSpec,
    explicit_dispersion_static,
    refractive_modulation_model,
    EffectiveMassModel,
)
from .dos import dos_dynamic
from .emission import EmitterParams, spectrum, total_probability
from .sweep import fit_gap_edge, perturb_ratios, run_sweep

COMMANDS = ("dispersion", "dos", "spectrum", "decay", "sweep")


class ConfigError(Exception):
    """Bad key or value in a config file or flag combination."""


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved parameters of one CLI invocation.

    Defaults reproduce the driven-spectrum headline case, so bare
    ``modpbg spectrum --out run.csv`` emits it directly.
    """

    command: str
    omega0: float = 1.0
    prefactor: float = 1.0
    omega_g: float = 0.5
    curvature: float = 1.0
    k0: float = 1.0
    xi_bar: float = 0.01
    xi_prime: float = 0.0
    omega_c: float = 0.1
    t: float = 1200.0
    n0: float | None = None
    a: float | None = None
    xi: float | None = None
    band_index: int = 1
    omega_min: float | None = None
    omega_max: float = 2.0
    n_points: int = 4001
    k_min: float = 0.0
    k_max: float | None = None
    n_k: int = 201
    t_max: float = 2000.0
    n_t: int = 81
    omega_c_min: float = 0.05
    omega_c_max: float = 0.2
    n_omega_c: int = 10
    noise: float = 0.0
    seed: int = 0
    method: str = "closed_form"
    out: str | None = None
    format: str = "csv"


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(RunConfig)}
_INT_KEYS = {"band_index", "n_points", "n_k", "n_t", "n_omega_c", "seed"}
_STR_KEYS = {"command", "method", "out", "format"}


def _parse_config_file(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in _FIELD_TYPES or key == "command":
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            if key in _STR_KEYS:
                values[key] = value
                continue
            try:
                values[key] = int(value) if key in _INT_KEYS else float(value)
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: malformed number for key {key!r}: {value!r}")
    return values


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="modpbg",
        description=(
            "Emission of a two-level emitter in a slowly driven photonic-band-gap "
            "environment. Frequencies are in units of omega0, times in 1/omega0."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, extra):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="flat key = value file; flags override it")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
        p.add_argument("--omega0", type=float, help="emitter transition frequency (scale unit)")
        p.add_argument("--prefactor", type=float, help="overall spectrum normalization")
        for flag, kwargs in extra:
            p.add_argument(flag, **kwargs)
        return p

    model_flags = [
        ("--omega-g", dict(type=float, dest="omega_g", help="band-edge frequency")),
        ("--curvature", dict(type=float, help="band curvature A")),
        ("--k0", dict(type=float, help="gap wavenumber")),
        ("--xi-bar", dict(type=float, dest="xi_bar", help="edge modulation amplitude")),
        ("--xi-prime", dict(type=float, dest="xi_prime", help="curvature modulation amplitude")),
        ("--omega-c", dict(type=float, dest="omega_c", help="drive frequency")),
        ("--n0", dict(type=float, help="crystal mean refractive index (crystal route)")),
        ("--a", dict(type=float, help="crystal slab half-thickness (crystal route)")),
        ("--xi", dict(type=float, help="refractive-index drive amplitude (crystal route)")),
        ("--band-index", dict(type=int, dest="band_index", help="band/gap index")),
    ]
    grid_flags = [
        ("--omega-min", dict(type=float, dest="omega_min", help="grid start (default edge + 1e-3)")),
        ("--omega-max", dict(type=float, dest="omega_max", help="grid end")),
        ("--n-points", dict(type=int, dest="n_points", help="grid size")),
    ]

    add("dispersion", "static band omega(k) of the crystal",
        model_flags + [
            ("--k-min", dict(type=float, dest="k_min", help="wavenumber grid start")),
            ("--k-max", dict(type=float, dest="k_max", help="wavenumber grid end (default pi/L)")),
            ("--n-k", dict(type=int, dest="n_k", help="wavenumber grid size")),
        ])
    add("dos", "density of states over a frequency grid",
        model_flags + grid_flags + [("--t", dict(type=float, help="evaluation time"))])
    add("spectrum", "emission probability density P(omega, t)",
        model_flags + grid_flags + [
            ("--t", dict(type=float, help="evaluation time")),
            ("--method", dict(choices=("closed_form", "quadrature"), help="evaluation route")),
        ])
    add("decay", "total emission probability P(t) on a time grid",
        model_flags + [
            ("--t-max", dict(type=float, dest="t_max", help="time grid end")),
            ("--n-t", dict(type=int, dest="n_t", help="time grid size")),
        ])
    add("sweep", "sweep the drive frequency and fit the band edge",
        model_flags + [
            ("--t", dict(type=float, help="target evaluation time")),
            ("--omega-c-min", dict(type=float, dest="omega_c_min", help="drive grid start")),
            ("--omega-c-max", dict(type=float, dest="omega_c_max", help="drive grid end")),
            ("--n-omega-c", dict(type=int, dest="n_omega_c", help="drive grid size")),
            ("--noise", dict(type=float, help="multiplicative ratio noise fraction")),
            ("--seed", dict(type=int, help="noise seed")),
        ])
    return parser


def _validate(config: RunConfig, error):
    if config.prefactor <= 0.0:
        error("prefactor must be positive")
    crystal_route = any(v is not None for v in (config.n0, config.a, config.xi))
    if crystal_route and None in (config.n0, config.a):
        error("the crystal route needs both n0 and a")
    uses_emitter = config.command in ("spectrum", "decay", "sweep")
    if uses_emitter and not crystal_route and config.omega0 <= config.omega_g:
        error(f"omega_g = {config.omega_g} puts the emitter inside the gap (omega0 = {config.omega0})")
    if config.command in ("dos", "spectrum"):
        if config.n_points < 1:
            error("empty frequency grid: n_points must be >= 1")
        if config.omega_min is not None and config.omega_min <= config.omega_g and not crystal_route:
            error("omega_min must lie above the band edge")
        lo = config.omega_min if config.omega_min is not None else config.omega_g
        if config.omega_max <= lo:
            error("omega_max must exceed the grid start")
    if config.command == "dispersion":
        if not crystal_route:
            error("dispersion needs the crystal route flags --n0 and --a")
        if config.n_k < 1:
            error("empty wavenumber grid: n_k must be >= 1")
    if config.command == "decay":
        if config.n_t < 1:
            error("empty time grid: n_t must be >= 1")
        if config.t_max <= 0.0:
            error("t_max must be positive")
    if config.command == "sweep":
        if config.n_omega_c < 1:
            error("empty drive grid: n_omega_c must be >= 1")
        if not 0.0 < config.omega_c_min <= config.omega_c_max:
            error("need 0 < omega_c_min <= omega_c_max")
        if not crystal_route and config.omega_c_max >= config.omega0 - config.omega_g:
            error("omega_c_max must stay below omega0 - omega_g")
        if config.noise < 0.0:
            error("noise fraction must be >= 0")
    if config.t < 0.0:
        error("t must be >= 0")


def parse_args(argv=None) -> RunConfig:
    """Resolve flags and config file into a validated RunConfig."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    values = {}
    if args.config:
        try:
            values.update(_parse_config_file(args.config))
        except OSError as exc:
            parser.error(f"cannot read config file: {exc}")
        except ConfigError as exc:
            parser.error(str(exc))
    for key in _FIELD_TYPES:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            values[key] = flag_value
    values["command"] = args.command
    config = RunConfig(**values)
    _validate(config, parser.error)
    return config


def _crystal_from(config: RunConfig) -> CrystalParams:
    xi = config.xi if config.xi is not None else 0.0
    kind = "refractive_index" if xi > 0.0 else "none"
    mod = ModulationSpec(kind=kind, amplitude=xi, frequency=config.omega_c)
    return CrystalParams.matched(config.n0, config.a, mod)


def _model_from(config: RunConfig) -> EffectiveMassModel:
    if config.n0 is not None:
        return refractive_modulation_model(_crystal_from(config), config.band_index)
    return EffectiveMassModel(
        omega_g=config.omega_g,
        curvature=config.curvature,
        k0=config.k0,
        xi_bar=config.xi_bar,
        xi_prime=config.xi_prime,
        omega_c=config.omega_c,
    )


def _frequency_grid(config: RunConfig, model) -> np.ndarray:
    lo = config.omega_min
    if lo is None:
        lo = model.omega_g + 1e-3 * config.omega0
    return np.linspace(lo, config.omega_max, config.n_points)


def _run(config: RunConfig):
    """Compute the payload: (column names, columns, footer key/values)."""
    if config.command == "dispersion":
        params = _crystal_from(config)
        k_max = config.k_max if config.k_max is not None else np.pi / params.L
        k = np.linspace(config.k_min, k_max, config.n_k)
        omega = explicit_dispersion_static(params, k, config.band_index)
        return ("k", "omega"), (k, np.atleast_1d(omega)), {}
    model = _model_from(config)
    emitter = EmitterParams(omega0=config.omega0, prefactor=config.prefactor)
    if config.command == "dos":
        grid = _frequency_grid(config, model)
        values = dos_dynamic(model, grid, config.t)
        return ("omega", "value"), (grid, np.atleast_1d(values)), {}
    if emitter.omega0 <= model.omega_g:
        raise ModelBreakdownError(
            f"emitter frequency {emitter.omega0} is not above the band edge {model.omega_g}"
        )
    if config.command == "spectrum":
        grid = _frequency_grid(config, model)
        spec = spectrum(model, emitter, grid, config.t, method=config.method)
        return ("omega", "value"), (spec.omegas, spec.values), {}
    if config.command == "decay":
        ts = np.linspace(0.0, config.t_max, config.n_t)
        values = np.array([total_probability(model, emitter, float(tt)) for tt in ts])
        return ("t", "value"), (ts, values), {}
    if config.command == "sweep":
        wcs = np.linspace(config.omega_c_min, config.omega_c_max, config.n_omega_c)
        result = run_sweep(model, emitter, wcs, config.t)
        if config.noise > 0.0:
            result = perturb_ratios(result, config.noise, config.seed)
        fitted, residual = fit_gap_edge(result, emitter)
        footer = {"fitted_omega_g": fitted, "fit_residual": residual}
        return ("omega_c", "ratio"), (result.omega_c_values, result.ratios), footer
    raise ValueError(f"unknown command {config.command!r}")


def _render_csv(names, columns, footer):
    lines = [",".join(names)]
    for row in zip(*columns):
        lines.append(",".join(format(v, ".17g") for v in row))
    for key, value in footer.items():
        lines.append(f"# {key} = {format(value, '.17g')}")
    return "\n".join(lines) + "\n"


def _render_json(config, names, columns, footer):
    payload = {
        "command": config.command,
        "meta": dataclasses.asdict(config),
        "data": {name: [float(v) for v in col] for name, col in zip(names, columns)},
    }
    payload["data"].update(footer)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def execute(config: RunConfig) -> int:
    """Run the computation and write the result; returns the exit status."""
    try:
        names, columns, footer = _run(config)
    except ModelBreakdownError as exc:
        print(f"model breakdown: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    text = (_render_csv(names, columns, footer) if config.format == "csv"
            else _render_json(config, names, columns, footer))
    if config.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {config.out}: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    config = parse_args(argv)
    return execute(config)


if __name__ == "__main__":
    raise SystemExit(main())
