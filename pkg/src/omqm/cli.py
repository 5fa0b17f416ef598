"""Command-line frontend.

Subcommands map onto the calculator surface: `mangoldt` (weight table),
`zeros` (zeta zeros), `alpha` (fine-structure chain), `spectrum` (per-N
OM spectrum), `dynamics-report` (Lyapunov + Feigenbaum), `holography`
(curvature split for one scale).  Output is deterministic CSV or JSON;
exit codes: 0 success, 2 argument error, 3 resource error, 4 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import mpmath as mp

from . import dynamics, numtheory, quantities, zeta
from .constants import FEIGENBAUM_DELTA, FRACTAL_DIMENSION, OMConstants
from .emit import fmt_real, scatter_svg, table_csv, table_json
from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    ParseError,
    ResourceError,
)

_CONFIG_KEYS = {
    "delta": float,
    "D": float,
    "s_sign": int,
    "zeros": str,
    "zero_count": int,
    "format": str,
    "precision_digits": int,
    "mode": str,
    "threads": int,
}


@dataclass
class RunConfig:
    delta: float = FEIGENBAUM_DELTA
    dimension: float = FRACTAL_DIMENSION
    s_sign: int = 1
    zeros_path: str | None = None
    zero_count: int = 30
    output_format: str = "csv"
    precision_digits: int = 40
    mode: str = "derived"
    threads: int = 1

    def constants(self) -> OMConstants:
        return OMConstants(delta=self.delta, dimension=self.dimension, s_sign=self.s_sign)

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "dimension": self.dimension,
            "s_sign": self.s_sign,
            "zeros": self.zeros_path or "computed",
            "zero_count": self.zero_count,
            "format": self.output_format,
            "precision_digits": self.precision_digits,
            "mode": self.mode,
            "threads": self.threads,
        }


def load_config(path: str) -> dict:
    """Parse a key=value config file ('#' comments allowed)."""
    overrides: dict = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in _CONFIG_KEYS:
            raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
        try:
            overrides[key] = _CONFIG_KEYS[key](value)
        except ValueError:
            raise ParseError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return overrides


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        over = load_config(args.config)
        rename = {"D": "dimension", "zeros": "zeros_path", "format": "output_format"}
        cfg = replace(cfg, **{rename.get(k, k): v for k, v in over.items()})
    if args.delta is not None:
        cfg.delta = args.delta
    if args.D is not None:
        cfg.dimension = args.D
    if args.s_sign is not None:
        cfg.s_sign = args.s_sign
    if args.zeros is not None:
        cfg.zeros_path = args.zeros
    if args.zero_count is not None:
        cfg.zero_count = args.zero_count
    if args.format is not None:
        cfg.output_format = args.format
    if args.precision_digits is not None:
        cfg.precision_digits = args.precision_digits
    if args.mode is not None:
        cfg.mode = args.mode
    if args.threads is not None:
        cfg.threads = args.threads
    if cfg.output_format not in ("csv", "json"):
        raise DomainError(f"format must be csv or json, got {cfg.output_format!r}")
    if cfg.mode not in ("derived", "literal"):
        raise DomainError(f"mode must be derived or literal, got {cfg.mode!r}")
    if cfg.threads < 1:
        raise DomainError(f"threads must be >= 1, got {cfg.threads}")
    return cfg


def _zeros_for(cfg: RunConfig) -> list[zeta.ZetaZero]:
    if cfg.zeros_path:
        return zeta.load_zeros(cfg.zeros_path)
    if cfg.zero_count > 100:
        raise DomainError(f"can compute at most 100 zeros, asked for {cfg.zero_count}")
    return zeta.find_zeros(cfg.zero_count)


def _emit(cfg: RunConfig, columns, rows, provenance) -> None:
    if cfg.output_format == "json":
        sys.stdout.write(table_json(cfg.as_dict(), columns, rows, provenance))
    else:
        sys.stdout.write(table_csv(columns, rows, provenance))


def _write_svg(path: str, points, title: str, line: bool = False) -> None:
    Path(path).write_text(scatter_svg(points, title, line=line), encoding="utf-8")


def cmd_mangoldt(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    if args.n_max < 1:
        raise DomainError(f"Nmax must be >= 1, got {args.n_max}")
    lam = numtheory.mangoldt_sieve(args.n_max)
    rows = []
    psi = 0.0
    for n in range(1, args.n_max + 1):
        weight = float(lam[n])
        psi += weight
        rows.append((n, weight, weight > 0.0, psi))
    _emit(
        cfg,
        ("n", "mangoldt", "is_prime_power", "psi"),
        rows,
        {
            "mangoldt": "ln(p) if n = p**k else 0",
            "is_prime_power": "n = p**k with p prime, k >= 1",
            "psi": "running sum of mangoldt; equals ln(lcm(1..n))",
        },
    )
    if args.svg:
        _write_svg(args.svg, [(r[0], r[1]) for r in rows], f"mangoldt weights to n={args.n_max}")
    return 0


def cmd_zeros(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    zeros = zeta.find_zeros(args.count)
    rows = [(z.index, z.sigma, z.tolerance) for z in zeros]
    _emit(
        cfg,
        ("index", "sigma", "tolerance"),
        rows,
        {
            "sigma": "imaginary part of the k-th critical-line zeta zero",
            "tolerance": "absolute uncertainty bound of the bisection",
        },
    )
    if args.out:
        zeta.save_zeros(zeros, args.out)
    if args.svg:
        _write_svg(args.svg, [(z.index, z.sigma) for z in zeros], f"first {args.count} zeta zeros", line=True)
    return 0


def cmd_alpha(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    consts = cfg.constants()
    row = (
        consts.amplitude,
        consts.dimension,
        quantities.alpha_inverse(consts),
        quantities.om_permittivity(consts),
        consts.charge,
    )
    _emit(
        cfg,
        ("amplitude", "dimension", "alpha_inverse", "permittivity", "charge"),
        [row],
        {
            "amplitude": "exp(sqrt(pi*delta))",
            "alpha_inverse": "dimension * amplitude",
            "permittivity": "alpha_inverse / 2",
            "charge": "2*pi",
        },
    )
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    if args.n_max < 1:
        raise DomainError(f"Nmax must be >= 1, got {args.n_max}")
    zeros = _zeros_for(cfg)
    rows = [
        (r.n, r.is_prime_power, r.mass, r.curvature, r.energy_sq, r.sigma)
        for r in quantities.spectrum_rows(args.n_max, zeros, cfg.constants(), threads=cfg.threads)
    ]
    _emit(
        cfg,
        ("n", "is_prime_power", "mass", "curvature", "energy_sq", "sigma"),
        rows,
        {
            "mass": "spin/n at prime powers else 0",
            "curvature": "1/n at prime powers else 0",
            "energy_sq": "p0**2*(spin**2*sigma*p*ln(p) + spin/n + 2*spin**2/n**2) at prime powers else 0",
            "sigma": "zeta zero paired to n by prime-power rank",
        },
    )
    if args.svg:
        pts = [(r[0], abs(r[4])) for r in rows if r[1]]
        _write_svg(args.svg, pts, f"|energy_sq| over prime powers to n={args.n_max}")
    return 0


def cmd_dynamics_report(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    # validate cheap preconditions before the long integration
    if not 6 <= args.levels <= 20:
        raise DomainError(f"levels must lie in 6..20, got {args.levels}")
    if cfg.precision_digits < 30:
        raise DomainError(f"precision_digits must be >= 30, got {cfg.precision_digits}")
    lyap = dynamics.lyapunov_spectrum(
        dynamics.RosslerParams(), settle=args.settle, span=args.span, dt=args.dt
    )
    feig = dynamics.feigenbaum_delta(args.levels, cfg.precision_digits)
    delta_str = mp.nstr(feig.delta, min(feig.achieved_digits + 2, 20))
    note = (
        f"measured ky_dimension {lyap.ky_dimension:.3f} differs from configured "
        f"dimension {fmt_real(cfg.dimension)}; the configured value is kept for "
        f"derived quantities and is not reproduced by the classic flow"
    )
    row = (
        lyap.exponents[0],
        lyap.exponents[1],
        lyap.exponents[2],
        lyap.ky_dimension,
        cfg.dimension,
        delta_str,
        feig.achieved_digits,
        note,
    )
    _emit(
        cfg,
        (
            "lambda1",
            "lambda2",
            "lambda3",
            "ky_dimension",
            "configured_dimension",
            "feigenbaum_delta",
            "delta_digits",
            "note",
        ),
        [row],
        {
            "lambda1": "largest Lyapunov exponent of the classic flow (a=b=0.2; c=5.7)",
            "ky_dimension": "Kaplan-Yorke dimension from the measured exponents",
            "configured_dimension": "configuration value used by derived quantities",
            "feigenbaum_delta": "limit of superstable parameter-gap ratios",
        },
    )
    return 0


def cmd_holography(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    consts = cfg.constants()
    split = quantities.holography_split(args.n, consts)
    mass = quantities.om_mass(args.n, consts)
    g = quantities.gravitational_constant(consts, cfg.mode)
    rank = len(numtheory.prime_powers_upto(args.n))
    zeros = _zeros_for(cfg)
    lam = quantities.cosmological_constant(rank, zeros, consts)
    product_residual = abs(split.r_high * split.r_low - mass)
    square_residual = abs(
        split.r_total**2 - (split.r_high**2 + split.r_low**2 + 2.0 * mass)
    )
    entropy = split.entropy_low if split.entropy_low is not None else "undefined"
    row = (
        args.n,
        mass,
        split.r_high,
        split.r_low,
        split.r_total,
        split.area_low,
        split.area_high,
        entropy,
        cfg.mode,
        g,
        lam,
        product_residual,
        square_residual,
    )
    _emit(
        cfg,
        (
            "n",
            "mass",
            "r_high",
            "r_low",
            "r_total",
            "area_low",
            "area_high",
            "entropy_low",
            "g_mode",
            "g_constant",
            "cosmological_constant",
            "product_residual",
            "square_residual",
        ),
        [row],
        {
            "r_high": "hidden curvature = spin",
            "r_low": "observable curvature = mass/spin = 1/n",
            "area_low": "r_low**2",
            "area_high": "2*mass - area_low (area balance)",
            "entropy_low": "area_high/(4g) - mass/(2g); undefined when g = 0",
            "product_residual": "|r_high*r_low - mass|",
            "square_residual": "|r_total**2 - r_high**2 - r_low**2 - 2*mass|",
        },
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value config file")
    common.add_argument("--zeros", help="zero-list file (one sigma per line)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--D", type=float, help="fractal dimension")
    common.add_argument("--delta", type=float, help="Feigenbaum delta")
    common.add_argument("--s-sign", dest="s_sign", type=int, choices=(1, -1))
    common.add_argument("--mode", choices=("derived", "literal"))
    common.add_argument("--zero-count", dest="zero_count", type=int)
    common.add_argument("--precision-digits", dest="precision_digits", type=int)
    common.add_argument("--threads", type=int)

    parser = argparse.ArgumentParser(prog="omqm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mangoldt", parents=[common], help="von Mangoldt weight table")
    p.add_argument("n_max", type=int, metavar="NMAX")
    p.add_argument("--svg", help="write a scatter plot of the weights")
    p.set_defaults(func=cmd_mangoldt)

    p = sub.add_parser("zeros", parents=[common], help="compute zeta zeros")
    p.add_argument("count", type=int)
    p.add_argument("--out", help="write the zero-list file here")
    p.add_argument("--svg", help="write a line plot of sigma vs index")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("alpha", parents=[common], help="fine-structure chain report")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("spectrum", parents=[common], help="per-n OM spectrum table")
    p.add_argument("n_max", type=int, metavar="NMAX")
    p.add_argument("--svg", help="write a scatter plot of |energy_sq|")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser(
        "dynamics-report", parents=[common], help="Lyapunov spectrum and Feigenbaum delta"
    )
    p.add_argument("--levels", type=int, default=12, help="superstable levels (6..20)")
    p.add_argument("--settle", type=int, default=20_000)
    p.add_argument("--span", type=int, default=1_000_000)
    p.add_argument("--dt", type=float, default=0.01)
    p.set_defaults(func=cmd_dynamics_report)

    p = sub.add_parser("holography", parents=[common], help="curvature split for one scale")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=cmd_holography)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ConvergenceError, DivergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
