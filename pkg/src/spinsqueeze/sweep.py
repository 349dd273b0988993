"""Time sweeps of the squeezing parameters and their CSV encoding."""

import csv
import io
import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import coherent_states as cs
from . import spin_algebra as sa
from .errors import ArgumentError, ConfigError, ParseError
from .fnl import parse
from .squeezing import AXES, UndefinedSqueezingError, squeezing_parameter

UNDEF = "undef"
AXIS_ORDER = ("x", "y", "z")

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_ETA_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<sign>[+-])(?P<im>{_NUM})i)?$")


def parse_eta(text):
    """Parse ``RE``, ``RE+IMi`` or ``RE-IMi`` (no spaces) into a complex number."""
    m = _ETA_RE.match(text.strip())
    if m is None:
        raise ConfigError(f"cannot parse eta {text!r}; expected RE, RE+IMi or RE-IMi")
    im = 0.0
    if m.group("im") is not None:
        im = float(m.group("im")) * (1.0 if m.group("sign") == "+" else -1.0)
    return complex(float(m.group("re")), im)


def format_eta(eta):
    eta = complex(eta)
    if eta.imag == 0.0:
        return repr(eta.real)
    sign = "+" if math.copysign(1.0, eta.imag) > 0 else "-"
    return f"{eta.real!r}{sign}{abs(eta.imag)!r}i"


def parse_axes(text):
    """Accept ``x,y,z`` or ``xyz`` (any order, duplicates ignored); returns canonical order."""
    letters = set(text.replace(",", "").replace(" ", ""))
    if not letters or not letters <= set(AXIS_ORDER):
        raise ConfigError(f"axes must be a nonempty subset of x, y, z; got {text!r}")
    return tuple(a for a in AXIS_ORDER if a in letters)


@dataclass(frozen=True)
class SweepConfig:
    two_j: int = 10
    eta: complex = 0.1
    f_expr: str = "N^2"
    t_min: float = 0.0
    t_max: float = 3.0
    steps: int = 601
    axes: tuple = AXIS_ORDER

    def __post_init__(self):
        if int(self.two_j) != self.two_j or self.two_j < 0:
            raise ConfigError(f"two_j must be a nonnegative integer, got {self.two_j!r}")
        object.__setattr__(self, "two_j", int(self.two_j))
        if isinstance(self.eta, str):
            object.__setattr__(self, "eta", parse_eta(self.eta))
        object.__setattr__(self, "eta", complex(self.eta))
        for name in ("t_min", "t_max"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ConfigError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if self.t_min > self.t_max:
            raise ConfigError(f"t_min={self.t_min} exceeds t_max={self.t_max}")
        if int(self.steps) != self.steps or self.steps < 1:
            raise ConfigError(f"steps must be a positive integer, got {self.steps!r}")
        object.__setattr__(self, "steps", int(self.steps))
        if self.steps > 1 and self.t_min == self.t_max:
            raise ConfigError("t_min == t_max requires steps = 1 (rows must have increasing t)")
        axes = self.axes if isinstance(self.axes, str) else ",".join(self.axes)
        object.__setattr__(self, "axes", parse_axes(axes))

    def times(self):
        """Evenly spaced grid; point i is t_min + i (t_max - t_min) / (steps - 1)."""
        if self.steps == 1:
            return [self.t_min]
        span = self.t_max - self.t_min
        last = self.steps - 1
        return [self.t_min + i * span / last if i < last else self.t_max for i in range(self.steps)]


@dataclass(frozen=True)
class SweepRow:
    t: float
    xi2: dict = field(default_factory=dict)  # axis -> float, or None for "undef"


def evaluate_point(two_j, eta, F, t, axes=AXIS_ORDER):
    """One sweep row for a fixed time."""
    params = cs.EvolvedParams(cs.CoherentParams(eta, sa.make_space(two_j)), F, t)
    psi = cs.nonlinear_scs(params)
    values = {}
    for axis in axes:
        try:
            values[axis] = squeezing_parameter(psi, AXES[axis]).xi2
        except UndefinedSqueezingError:
            values[axis] = None
    return SweepRow(t, values)


def run_sweep(config, workers=1):
    """Evaluate xi^2 on every grid time.

    The F(N) expression is parsed and checked for finiteness on 0..2j
    before any state is built.  Rows come back in t order even when
    ``workers > 1``.
    """
    try:
        F = parse(config.f_expr)
    except ParseError as exc:
        raise ConfigError(f"bad F(N) expression: {exc}") from exc
    F.values(config.two_j)  # raises EvaluationError naming n

    def point(t):
        return evaluate_point(config.two_j, config.eta, F, t, config.axes)

    times = config.times()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(point, times))
    return [point(t) for t in times]


def format_float(x):
    """12 significant digits, scientific notation."""
    return f"{x:.11e}"


def write_csv(rows, axes, stream):
    """Write the sweep as ``t,xi2_x,...`` CSV with Unix newlines."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["t"] + [f"xi2_{a}" for a in axes])
    for row in rows:
        cells = [format_float(row.t)]
        for a in axes:
            v = row.xi2.get(a)
            cells.append(UNDEF if v is None else format_float(v))
        writer.writerow(cells)


def to_csv(rows, axes):
    buf = io.StringIO()
    write_csv(rows, axes, buf)
    return buf.getvalue()


def read_csv(text):
    """Parse CSV produced by :func:`write_csv` back into ``(axes, rows)``."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if not header or header[0] != "t" or not all(h.startswith("xi2_") for h in header[1:]):
        raise ArgumentError(f"unrecognized sweep header {header!r}")
    axes = tuple(h[4:] for h in header[1:])
    rows = []
    for cells in reader:
        values = {a: (None if c == UNDEF else float(c)) for a, c in zip(axes, cells[1:])}
        rows.append(SweepRow(float(cells[0]), values))
    return axes, rows
