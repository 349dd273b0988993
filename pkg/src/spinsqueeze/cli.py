"""Command-line interface: ``spinsqueeze sweep|verify|moments``.

Exit codes: 0 success, 1 configuration or evaluation error, 2 failed check.
"""

import argparse
import sys

from . import analytic as an
from .errors import ConfigError, EvaluationError, ParseError, UndefinedSqueezingError
from .fnl import parse
from .sweep import SweepConfig, format_eta, parse_axes, parse_eta, run_sweep, write_csv
from .verification import run_verify

EXIT_OK, EXIT_CONFIG, EXIT_CHECK = 0, 1, 2

SWEEP_DEFAULTS = {
    "two_j": "10",
    "eta": "0.1",
    "f": "N^2",
    "t_min": "0",
    "t_max": "3",
    "steps": "601",
    "axes": "x,y,z",
    "out": "-",
    "workers": "1",
}


def read_config_file(path):
    """Parse ``key = value`` lines; ``#`` starts a comment.  Keys may use - or _."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key = key.strip().replace("-", "_")
        if key not in SWEEP_DEFAULTS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _int(name, text):
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {text!r}") from None


def _float(name, text):
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {text!r}") from None


def build_sweep(args):
    """Merge defaults, config file, and explicit flags (flags win)."""
    settings = dict(SWEEP_DEFAULTS)
    if args.config:
        settings.update(read_config_file(args.config))
    for key in SWEEP_DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    config = SweepConfig(
        two_j=_int("two-j", settings["two_j"]),
        eta=parse_eta(settings["eta"]),
        f_expr=settings["f"],
        t_min=_float("t-min", settings["t_min"]),
        t_max=_float("t-max", settings["t_max"]),
        steps=_int("steps", settings["steps"]),
        axes=parse_axes(settings["axes"]),
    )
    return config, settings["out"], _int("workers", settings["workers"])


def cmd_sweep(args):
    config, out, workers = build_sweep(args)
    rows = run_sweep(config, workers=workers)
    if out == "-":
        write_csv(rows, config.axes, sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, config.axes, fh)
    return EXIT_OK


def cmd_verify(args):
    ok, _ = run_verify(sys.stdout)
    return EXIT_OK if ok else EXIT_CHECK


def cmd_moments(args):
    two_j = args.two_j
    if two_j < 0:
        raise ConfigError("two-j must be nonnegative")
    eta = parse_eta(args.eta)
    try:
        F = parse(args.f)
    except ParseError as exc:
        raise ConfigError(f"bad F(N) expression: {exc}") from exc
    k, t = args.k, args.t
    if k < 0:
        raise ConfigError("k must be nonnegative")
    m = an.scs_number_moments(two_j, eta)
    means = [float(c) for c in an.scs_spin_means(two_j, eta)]
    vx, vy = an.scs_variances_xy(two_j, eta)
    lines = [
        f"two_j = {two_j}",
        f"eta = {format_eta(eta)}",
        f"F = {F.source}",
        f"t = {t!r}",
        f"k = {k}",
        f"G(lambda=0) = {an.generating_function(two_j, eta, 0.0)!r}",
        f"factorial_moment(k) = {an.factorial_moment(two_j, eta, k)!r}",
        f"<N> = {m.mean_n!r}",
        f"<N^2> = {m.mean_n2!r}",
        f"(Delta N)^2 = {m.var_n!r}",
        f"scs <J-^k> = {an.scs_jminus_k(two_j, eta, k)!r}",
        f"scs <Jx>, <Jy>, <Jz> = {means[0]!r}, {means[1]!r}, {means[2]!r}",
        f"scs (Delta Jx)^2, (Delta Jy)^2 = {vx!r}, {vy!r}",
        f"nonlinear <J-^k> = {an.nlscs_jminus_k(two_j, eta, F, t, k)!r}",
    ]
    try:
        xi_z = repr(an.nlscs_xi_z(two_j, eta, F, t))
    except (UndefinedSqueezingError, ValueError) as exc:
        xi_z = f"undef ({exc})"
    lines.append(f"nonlinear xi_z^2 = {xi_z}")
    print("\n".join(lines))
    return EXIT_OK


class _ArgumentParser(argparse.ArgumentParser):
    # usage errors are configuration errors (exit 1); 2 is reserved for failed checks
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _ArgumentParser(
        prog="spinsqueeze",
        description="Spin squeezing in spin coherent states and their nonlinear evolutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="time sweep of xi^2 along x, y, z as CSV")
    sweep.add_argument("--config", help="key = value file; explicit flags override it")
    sweep.add_argument("--two-j", dest="two_j", help="2j (default 10, i.e. j=5)")
    sweep.add_argument("--eta", help="complex eta as RE, RE+IMi or RE-IMi (default 0.1)")
    sweep.add_argument("--f", dest="f", help="Hamiltonian F(N), e.g. 'N^2' or 'sin(2*N)'")
    sweep.add_argument("--t-min", dest="t_min")
    sweep.add_argument("--t-max", dest="t_max")
    sweep.add_argument("--steps", help="number of grid points (default 601)")
    sweep.add_argument("--axes", help="subset of x,y,z (default x,y,z)")
    sweep.add_argument("--out", help="output path, or - for stdout")
    sweep.add_argument("--workers", help="threads used to evaluate grid points")
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="run the built-in acceptance checks")
    verify.set_defaults(func=cmd_verify)

    moments = sub.add_parser("moments", help="print closed-form values for one parameter set")
    moments.add_argument("--two-j", dest="two_j", type=int, default=10)
    moments.add_argument("--eta", default="0.1")
    moments.add_argument("--f", default="N^2")
    moments.add_argument("--t", type=float, default=0.0)
    moments.add_argument("--k", type=int, default=1)
    moments.set_defaults(func=cmd_moments)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, EvaluationError) as exc:
        print(f"spinsqueeze: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
