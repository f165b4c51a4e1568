"""Long-range potential curves B j(j+1) + C5/R^5 + C6/R^6 and their features.

Energies are in hartree unless a name ends in ``_cm``; distances in bohr.
The energy origin is the atom-dimer pair at infinite separation with the
dimer in j = 0, so each curve tends to B j(j+1).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from importlib import resources
from itertools import combinations
from pathlib import Path

import numpy as np
from scipy.optimize import brentq

from .specdata import HARTREE_TO_CM

__all__ = [
    "PotentialCurve",
    "CurveFeature",
    "potential",
    "find_extrema",
    "find_crossings",
    "crossings_by_symmetry",
    "leroy_radius",
    "emit_curve_table",
    "CurveTable",
    "curve_labels",
    "load_curves",
    "published_curves",
    "DEFAULT_WINDOW",
    "CROSSING_GRID_POINTS",
]

DEFAULT_WINDOW = (30.0, 3000.0)
CROSSING_GRID_POINTS = 2000


@dataclass(frozen=True)
class PotentialCurve:
    symmetry: str
    j: int
    c5: float
    c6: float
    b_rot: float

    def __post_init__(self):
        if int(self.j) != self.j or self.j < 0:
            raise ValueError(f"j must be a non-negative integer, got {self.j}")
        if not self.b_rot > 0:
            raise ValueError(f"b_rot must be > 0, got {self.b_rot}")

    @property
    def label(self):
        return f"{self.symmetry}/{self.j}"

    @property
    def asymptote(self):
        return self.b_rot * self.j * (self.j + 1)


@dataclass(frozen=True)
class CurveFeature:
    """A stationary point (``minimum``/``maximum``) or a ``crossing``.

    ``value`` is the absolute energy; ``relative`` is measured from the
    asymptote of the (first) curve.
    """

    kind: str
    r: float
    value: float
    relative: float
    curve: str
    partner: str | None = None

    @property
    def value_cm(self):
        return self.value * HARTREE_TO_CM

    @property
    def relative_cm(self):
        return self.relative * HARTREE_TO_CM


def potential(c, r):
    """V(r) in hartree; accepts scalar or array r (all > 0)."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(~(r_arr > 0)):
        raise ValueError("potential needs r > 0")
    v = c.asymptote + c.c5 / r_arr**5 + c.c6 / r_arr**6
    return float(v) if v.ndim == 0 else v


def find_extrema(c):
    """The single stationary point of C5/r^5 + C6/r^6, present only when C5 C6 < 0."""
    if not c.c5 * c.c6 < 0:
        return []
    r = -6.0 * c.c6 / (5.0 * c.c5)
    kind = "maximum" if c.c5 > 0 else "minimum"
    v = potential(c, r)
    return [CurveFeature(kind, r, v, v - c.asymptote, c.label)]


def find_crossings(a, b, r_min=DEFAULT_WINDOW[0], r_max=DEFAULT_WINDOW[1]):
    """Roots of V_a - V_b in [r_min, r_max], sorted by r.

    Sign changes are located on a log grid of ``CROSSING_GRID_POINTS``
    points and each bracket is refined with Brent's method (tighter than
    bisection to 1e-6 in r).
    """
    if not (0 < r_min < r_max):
        raise ValueError(f"need 0 < r_min < r_max, got {r_min}, {r_max}")
    if a == b:
        raise ValueError("cannot cross a curve with itself")

    def diff(r):
        return potential(a, r) - potential(b, r)

    r = np.geomspace(r_min, r_max, CROSSING_GRID_POINTS)
    d = diff(r)
    roots = [float(x) for x in r[d == 0]]
    s = np.sign(d)
    for i in np.nonzero(s[:-1] * s[1:] < 0)[0]:
        roots.append(brentq(diff, r[i], r[i + 1], xtol=1e-14 * r[i], rtol=4 * np.finfo(float).eps))
    out = []
    for x in sorted(roots):
        v = potential(a, x)
        out.append(CurveFeature("crossing", x, v, v - a.asymptote, a.label, b.label))
    return out


def crossings_by_symmetry(curves, r_min=DEFAULT_WINDOW[0], r_max=DEFAULT_WINDOW[1]):
    """All crossings between curves sharing a symmetry label, sorted by r.

    Features are labeled with :func:`curve_labels`, so repeated "symmetry/j"
    labels stay distinguishable.
    """
    labels = curve_labels(curves)
    out = []
    for (la, a), (lb, b) in combinations(zip(labels, curves), 2):
        if a.symmetry == b.symmetry and a != b:
            out += [replace(f, curve=la, partner=lb) for f in find_crossings(a, b, r_min, r_max)]
    return sorted(out, key=lambda f: (f.r, f.curve, f.partner))


def leroy_radius(r2_a, r2_b):
    """2 (sqrt<r_A^2> + sqrt<r_B^2>) in bohr."""
    if r2_a < 0 or r2_b < 0:
        raise ValueError(f"<r^2> must be >= 0, got {r2_a}, {r2_b}")
    return 2.0 * (math.sqrt(r2_a) + math.sqrt(r2_b))


def curve_labels(curves):
    """Column labels "symmetry/j"; repeated labels get a (2), (3)... suffix."""
    seen = {}
    out = []
    for c in curves:
        n = seen[c.label] = seen.get(c.label, 0) + 1
        out.append(c.label if n == 1 else f"{c.label}({n})")
    return out


def _fmt(x):
    return f"{x:.12g}"


@dataclass(frozen=True, eq=False)
class CurveTable:
    """Curves sampled on a grid: ``values[i, k]`` is curve k at ``r[i]`` in cm-1."""

    r: np.ndarray
    labels: tuple
    values: np.ndarray

    def to_text(self, delimiter=","):
        """'#'-prefixed header, then one row per grid point, 12 significant digits."""
        buf = io.StringIO()
        buf.write("# V in cm-1, zero at infinite separation with the dimer in j = 0; R in bohr\n")
        buf.write("# " + delimiter.join(("R",) + self.labels) + "\n")
        for x, row in zip(self.r, self.values):
            buf.write(delimiter.join([_fmt(x)] + [_fmt(v) for v in row]) + "\n")
        return buf.getvalue()


def emit_curve_table(curves, r_min, r_max, points, scale="log"):
    """Tabulate curves in cm-1 on a linear or logarithmic grid of R (bohr)."""
    if int(points) != points or points < 2:
        raise ValueError(f"points must be an integer >= 2, got {points}")
    if not (0 < r_min < r_max and math.isfinite(r_max)):
        raise ValueError(f"need 0 < r_min < r_max, got {r_min}, {r_max}")
    if scale == "log":
        r = np.geomspace(r_min, r_max, int(points))
    elif scale == "linear":
        r = np.linspace(r_min, r_max, int(points))
    else:
        raise ValueError(f"scale must be 'linear' or 'log', got {scale!r}")
    r[0], r[-1] = r_min, r_max
    values = np.column_stack([potential(c, r) * HARTREE_TO_CM for c in curves])
    return CurveTable(r, tuple(curve_labels(curves)), values)


def _read_curves(handle, b_rot, source):
    rows = csv.DictReader(line for line in handle if line.strip() and not line.startswith("#"))
    out = []
    for k, row in enumerate(rows, start=1):
        try:
            out.append(PotentialCurve(row["symmetry"].strip(), int(row["j"]),
                                      float(row.get("c5") or 0.0), float(row["c6"]), b_rot))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{source}: data row {k}: {exc}") from None
    return out


def load_curves(path, b_rot):
    """Read curves from a CSV with columns symmetry, j, c5 (optional), c6 in au."""
    with open(Path(path), newline="") as fh:
        return _read_curves(fh, b_rot, str(path))


def published_curves(b_rot, table="table2"):
    """Curves from the published coefficient tables shipped with the package."""
    name = f"{table}.csv"
    with resources.files("atomdimer.data").joinpath(name).open(newline="") as fh:
        return _read_curves(fh, b_rot, name)
