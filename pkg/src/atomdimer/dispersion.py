"""C6 dispersion coefficients from polarizabilities at imaginary frequency.

The crossed coefficient between substates |mj1, lambda1> and |mj2, lambda2>
is

    C6cr = -sum_{M,M'} 4 w_M w_M' [ 1/(2 pi) int_0^inf a_rot(iw) a_atom(iw) dw
                                   + sum_{b downward} a_rot(|dE_b|) D_b ]

with w_M = 1/((1+M)!(1-M)!), a_rot the dimer polarizability matrix in its
rotational level, a_atom the atomic polarizability matrix and D_b the atomic
dipole product of a downward transition. The 1/(2 pi) follows from the
two-Lorentzian identity (2/pi) combined with the factor 2 in each
polarizability; it is pinned by the equality with the explicit double sum in
:mod:`atomdimer.sumoverstates` (tests/test_dispersion.py::test_oracle_*).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .angular import _cg, _check
from .polar import (
    CapabilityError,
    atomic_angular_factor,
    atomic_polarizability_matrix,
    core_polarizability,
    imag,
    isotropic_polarizability,
    molecular_polarizability,
    real,
    rotational_weights,
)
from .specdata import TransitionListSource
from .sumoverstates import atom_states, c6_sum_over_states, dimer_states

__all__ = [
    "QuadratureRule",
    "C6Result",
    "integrate_semi_infinite",
    "c6_sum_over_states",
    "c6_crossed",
    "c6_core",
    "c6_total",
    "c6_ground_atom",
    "ground_atom_weights",
    "c6_atom_atom",
    "c6_oracle",
    "default_scale",
]

_MS = (-1, 0, 1)
_W = {M: 1.0 / (math.factorial(1 + M) * math.factorial(1 - M)) for M in _MS}

# Bracket normalization of the imaginary-frequency term (see module docstring).
_INTEGRAL_NORM = 1.0 / (2.0 * math.pi)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre rule on (-1, 1) mapped to (0, inf) by w = w0 (1+t)/(1-t)."""

    nodes: int = 64
    scale: float | None = None

    def __post_init__(self):
        if int(self.nodes) != self.nodes or self.nodes < 8:
            raise ValueError(f"quadrature needs an integer number of nodes >= 8, got {self.nodes}")
        if self.scale is not None and not (self.scale > 0 and math.isfinite(self.scale)):
            raise ValueError(f"quadrature scale must be > 0, got {self.scale}")

    def resolved(self, energies):
        """This rule, with the scale defaulted from transition energies if unset."""
        if self.scale is not None:
            return self
        return replace(self, scale=default_scale(energies))

    def points(self):
        if self.scale is None:
            raise ValueError("quadrature scale is not set; use QuadratureRule(scale=...) or .resolved(energies)")
        t, w = _leggauss(self.nodes)
        omega = self.scale * (1 + t) / (1 - t)
        return omega, w * 2 * self.scale / (1 - t) ** 2


@lru_cache(maxsize=16)
def _leggauss(n):
    t, w = np.polynomial.legendre.leggauss(n)
    t.flags.writeable = False
    w.flags.writeable = False
    return t, w


def default_scale(energies):
    """Median of |dE| taken on a log scale (geometric mean of the middle pair for even counts)."""
    e = np.abs(np.asarray([x for x in energies if x != 0], dtype=float))
    if e.size == 0:
        raise ValueError("no transition energies to set the quadrature scale from")
    return float(np.exp(np.median(np.log(e))))


def integrate_semi_infinite(f, rule):
    """Integrate a vectorized f(omega) over [0, inf).

    `f` is called once with the array of mapped nodes.
    """
    omega, wts = rule.points()
    vals = np.asarray(f(omega), dtype=float)
    bad = ~np.isfinite(vals)
    if np.any(bad):
        raise FloatingPointError(f"integrand is not finite at omega = {omega[bad][0]:.10g}")
    return float(np.dot(wts, vals))


@dataclass(frozen=True)
class C6Result:
    valence_integral: float
    downward_term: float
    core_term: float

    @property
    def total(self):
        return self.valence_integral + self.downward_term + self.core_term


# ------------------------------------------------------------------ helpers

def _energies(d, atom):
    out = [t.delta_e for t in atom.transitions] if atom is not None else []
    if isinstance(d.molecule, TransitionListSource):
        out += [t.delta_e for t in d.molecule.transitions]
    return out


class _Context:
    """Quadrature nodes and frequency-only quantities shared across one sweep."""

    def __init__(self, d, atom, rule):
        self.d, self.atom = d, atom
        self.rule = rule.resolved(_energies(d, atom))
        self.omega, self.wts = self.rule.points()
        self.pair = molecular_polarizability(d.molecule, imag(self.omega))
        self._real = {}

    def real_pair(self, w):
        if w not in self._real:
            try:
                self._real[w] = molecular_polarizability(self.d.molecule, real(w))
            except CapabilityError as exc:
                raise CapabilityError(
                    f"the atom has downward transitions, which need the dimer polarizability at real "
                    f"frequency {w:.8g} au: {exc}"
                ) from None
        return self._real[w]

    def integrate(self, vals):
        bad = ~np.isfinite(vals)
        if np.any(bad):
            raise FloatingPointError(f"integrand is not finite at omega = {self.omega[bad][0]:.10g}")
        return float(np.dot(self.wts, vals))


def _crossed_parts(ctx, j, mj1, lambda1, mj2, lambda2):
    atom = ctx.atom
    if mj1 + lambda1 != mj2 + lambda2:
        raise ValueError(f"substates ({mj1},{lambda1}) and ({mj2},{lambda2}) belong to different mJ")
    _check(j, mj1)
    _check(j, mj2)
    down = [t for t in atom.transitions if t.delta_e < 0]
    valence = downward = 0.0
    iw = imag(ctx.omega)
    for M in _MS:
        for Mp in _MS:
            wpar, wperp = rotational_weights(j, mj1, mj2, M, Mp)
            if wpar == 0.0 and wperp == 0.0:
                continue
            pref = 4.0 * _W[M] * _W[Mp]
            a_atom = atomic_polarizability_matrix(atom, lambda1, lambda2, M, Mp, iw)
            a_rot = wpar * ctx.pair.par + wperp * ctx.pair.perp
            valence -= pref * _INTEGRAL_NORM * ctx.integrate(a_rot * a_atom)
            for t in down:
                g = atomic_angular_factor(atom.l, t.lp, lambda1, lambda2, M, Mp)
                if g == 0.0:
                    continue
                dprod = t.radial_element**2 * _cg(1, 0, atom.l, 0, t.lp, 0) ** 2 / 3.0 * g
                pr = ctx.real_pair(abs(t.delta_e))
                downward -= pref * (wpar * pr.par + wperp * pr.perp) * dprod
    return valence, downward


def _core_term(ctx, j, mj):
    core = core_polarizability(ctx.d.core, imag(ctx.omega)) if ctx.d.core is not None else None
    if core is None or not np.any(core):
        return 0.0
    _check(j, mj)
    total = 0.0
    for M in _MS:
        w2 = _W[M] ** 2
        for jp in range(abs(j - 1), j + 2):
            mp = mj + M
            if abs(mp) > jp:
                continue
            ang = (2 * j + 1) / (2 * jp + 1) * _cg(1, M, j, mj, jp, mp) ** 2
            if ang == 0.0:
                continue
            bracket = _cg(1, 0, j, 0, jp, 0) ** 2 * ctx.pair.par + 2 * _cg(1, 1, j, 0, jp, 1) ** 2 * ctx.pair.perp
            total += w2 * ang * ctx.integrate(core * bracket)
    return -2.0 / math.pi * total


def _atom(d, which):
    atom = d.atom(which)
    if atom is None or not atom.transitions:
        raise ValueError(f"dataset has no transitions for the {which} atom")
    return atom


# ------------------------------------------------------------------ public

def c6_crossed(d, j, mj1, lambda1, mj2, lambda2, rule=QuadratureRule(), atom="excited"):
    """Crossed coefficient between |mj1, lambda1> and |mj2, lambda2> (valence + downward parts)."""
    ctx = _Context(d, _atom(d, atom), rule)
    return sum(_crossed_parts(ctx, j, mj1, lambda1, mj2, lambda2))


def c6_core(d, j, mj, rule=QuadratureRule(), atom="excited"):
    """Core-polarizability contribution for dimer sublevel mj; always <= 0."""
    ctx = _Context(d, d.atom(atom), rule)
    return _core_term(ctx, j, mj)


def c6_total(d, s, rule=QuadratureRule()):
    """C6 of a symmetry eigenvector: sum of crossed terms plus the diagonal core terms."""
    ctx = _Context(d, _atom(d, s.atom), rule)
    valence = downward = core = 0.0
    for mj1, l1, c1 in s.coefficients:
        for mj2, l2, c2 in s.coefficients:
            v, w = _crossed_parts(ctx, s.j, mj1, l1, mj2, l2)
            valence += c1 * c2 * v
            downward += c1 * c2 * w
    core_cache = {}
    for mj1, _, c1 in s.coefficients:
        if mj1 not in core_cache:
            core_cache[mj1] = _core_term(ctx, s.j, mj1)
        core += c1 * c1 * core_cache[mj1]
    return C6Result(valence, downward, core)


def ground_atom_weights(j, mj):
    """Angular weights (w_par, w_perp) of an S atom + dimer level (j, mj).

    C6 = w_par I_par + w_perp I_perp with I = int alpha_atom(iw) alpha_{par,perp}(iw) dw.
    """
    _check(j, mj)
    wpar = wperp = 0.0
    for M in _MS:
        w2 = _W[M] ** 2
        for jp in range(abs(j - 1), j + 2):
            mp = mj + M
            if abs(mp) > jp:
                continue
            ang = w2 * (2 * j + 1) / (2 * jp + 1) * _cg(1, M, j, mj, jp, mp) ** 2
            wpar += ang * _cg(1, 0, j, 0, jp, 0) ** 2
            wperp += ang * 2 * _cg(1, 1, j, 0, jp, 1) ** 2
    return -2.0 / math.pi * wpar, -2.0 / math.pi * wperp


def c6_ground_atom(d, j, mj, rule=QuadratureRule()):
    """C6 for an S-state atom (core included in its polarizability) and dimer level (j, mj)."""
    atom = _atom(d, "ground")
    if any(t.delta_e <= 0 for t in atom.transitions):
        raise ValueError("ground-state atom must have only upward transitions")
    wpar, wperp = ground_atom_weights(j, mj)
    ctx = _Context(d, atom, rule)
    iw = imag(ctx.omega)
    alpha = isotropic_polarizability(atom, iw)
    if d.core is not None:
        alpha = alpha + core_polarizability(d.core, iw)
    return wpar * ctx.integrate(alpha * ctx.pair.par) + wperp * ctx.integrate(alpha * ctx.pair.perp)


def c6_atom_atom(atom_a, atom_b, rule=QuadratureRule()):
    """-(3/pi) int alpha_A(iw) alpha_B(iw) dw for two S-state atoms."""
    for a in (atom_a, atom_b):
        if a.transitions and (a.l != 0 or any(t.delta_e <= 0 for t in a.transitions)):
            raise ValueError(f"atom {a.name!r} must be an S state with only upward transitions")
    if not (atom_a.transitions and atom_b.transitions):
        return 0.0
    rule = rule.resolved([t.delta_e for a in (atom_a, atom_b) for t in a.transitions])

    def integrand(w):
        return isotropic_polarizability(atom_a, imag(w)) * isotropic_polarizability(atom_b, imag(w))

    return -3.0 / math.pi * integrate_semi_infinite(integrand, rule)


def c6_oracle(d, j, mj1, lambda1, mj2, lambda2, atom="excited"):
    """Explicit-state double sum for a dataset with a transition-list dimer source."""
    if not isinstance(d.molecule, TransitionListSource):
        raise CapabilityError("the sum-over-states oracle needs a transition-list molecular source")
    return c6_sum_over_states(dimer_states(d.molecule, j), atom_states(_atom(d, atom)),
                              mj1, lambda1, mj2, lambda2)

