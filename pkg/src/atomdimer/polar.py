"""Dynamic dipole polarizabilities at real or imaginary frequency.

Every oscillator term has the form 2 dE w / (dE^2 - z^2) with z^2 = -omega^2
on the imaginary axis and z^2 = +omega^2 on the real axis. All functions
accept an array of frequencies and evaluate them in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator

from ._accel import oscillator_sum
from .angular import _cg, _check
from .specdata import ConstantCore, EffectiveCore, GridSource, MolecularTransition, TransitionListSource

__all__ = [
    "POLE_TOLERANCE",
    "PoleError",
    "CapabilityError",
    "Frequency",
    "imag",
    "real",
    "PolarizabilityPair",
    "state_to_state_polarizability",
    "atomic_polarizability_matrix",
    "atomic_angular_factor",
    "isotropic_polarizability",
    "molecular_polarizability",
    "rotational_weights",
    "rotational_polarizability",
    "core_polarizability",
    "tabulate_source",
]

POLE_TOLERANCE = 1e-6


class PoleError(ValueError):
    """Real frequency too close to a transition energy."""


class CapabilityError(ValueError):
    """The requested evaluation is not supported by this source or model."""


@dataclass(frozen=True, eq=False)
class Frequency:
    omega: object  # float or ndarray, >= 0
    imaginary: bool = True

    @property
    def z2(self):
        w = np.asarray(self.omega, dtype=float)
        return -w * w if self.imaginary else w * w


def imag(omega):
    return Frequency(omega, True)


def real(omega):
    return Frequency(omega, False)


def _as_freq(z):
    return z if isinstance(z, Frequency) else imag(z)


def _shape_out(z, arr):
    return float(arr[0]) if np.ndim(z.omega) == 0 else arr.reshape(np.shape(z.omega))


def _check_poles(z, energies, names):
    if z.imaginary:
        return
    w = np.atleast_1d(np.asarray(z.omega, dtype=float))
    for de, name in zip(energies, names):
        near = np.abs(w - abs(de)) < POLE_TOLERANCE
        if np.any(near):
            raise PoleError(
                f"real frequency {w[near][0]:.10g} au is within {POLE_TOLERANCE:g} au of the pole of {name} "
                f"(|dE| = {abs(de):.10g} au)"
            )


@dataclass(frozen=True, eq=False)
class PolarizabilityPair:
    par: object
    perp: object

    @property
    def isotropic(self):
        return (np.asarray(self.par) + 2 * np.asarray(self.perp)) / 3


# ------------------------------------------------------------------ atom

def state_to_state_polarizability(t, z):
    """Partial polarizability of one n l -> n' l' transition.

    (2/3) dE / (dE^2 - z^2) r^2 <1 0 l 0 | l' 0>^2; negative for a downward
    transition at low frequency.
    """
    z = _as_freq(z)
    _check_poles(z, [t.delta_e], [t.name])
    w = t.radial_element**2 * _cg(1, 0, t.l, 0, t.lp, 0) ** 2 / 3.0
    return _shape_out(z, oscillator_sum([t.delta_e], [w], np.ravel(z.z2)))


def atomic_angular_factor(l, lp, lambda1, lambda2, M, Mp):
    """3 (2l+1)/(2l'+1) sum_lambda' <1 M l lambda1|l' lambda'> <1 M' l lambda2|l' lambda'>."""
    lam = M + lambda1
    if lam != Mp + lambda2 or abs(lam) > lp:
        return 0.0
    return 3.0 * (2 * l + 1) / (2 * lp + 1) * _cg(1, M, l, lambda1, lp, lam) * _cg(1, Mp, l, lambda2, lp, lam)


def atomic_polarizability_matrix(atom, lambda1, lambda2, M, Mp, z):
    """Polarizability matrix element alpha^{lambda1 lambda2}_{-M -M'}(z) of an atomic level.

    Sum over the transition series l -> l' of the state-to-state
    polarizabilities weighted by the angular factor of each series.
    """
    z = _as_freq(z)
    l = atom.l
    _check(l, lambda1, "l")
    _check(l, lambda2, "l")
    _check(1, M, "M")
    _check(1, Mp, "M'")
    trans = atom.transitions
    _check_poles(z, [t.delta_e for t in trans], [t.name for t in trans])
    de = np.array([t.delta_e for t in trans])
    wts = np.array([
        t.radial_element**2 * _cg(1, 0, l, 0, t.lp, 0) ** 2 / 3.0
        * atomic_angular_factor(l, t.lp, lambda1, lambda2, M, Mp)
        for t in trans
    ])
    if not np.any(wts):
        return _shape_out(z, np.zeros(np.size(z.omega)))
    return _shape_out(z, oscillator_sum(de, wts, np.ravel(z.z2)))


def isotropic_polarizability(atom, z):
    """Sublevel-averaged valence polarizability: sum of state-to-state terms."""
    z = _as_freq(z)
    trans = atom.transitions
    _check_poles(z, [t.delta_e for t in trans], [t.name for t in trans])
    de = np.array([t.delta_e for t in trans])
    wts = np.array([t.radial_element**2 * _cg(1, 0, t.l, 0, t.lp, 0) ** 2 / 3.0 for t in trans])
    return _shape_out(z, oscillator_sum(de, wts, np.ravel(z.z2)))


# ------------------------------------------------------------------ dimer

def _split_orientation(transitions):
    par = [t for t in transitions if t.orientation == "parallel"]
    perp = [t for t in transitions if t.orientation == "perpendicular"]
    if len(par) + len(perp) != len(transitions):
        bad = next(t for t in transitions if t.orientation not in ("parallel", "perpendicular"))
        raise ValueError(f"unknown orientation {bad.orientation!r}")
    return par, perp


def _grid_eval(src, w):
    interp = PchipInterpolator(src.omega, np.column_stack([src.alpha_par, src.alpha_perp]), extrapolate=False)
    w = np.asarray(w, dtype=float)
    out = np.empty((w.size, 2))
    flat = w.ravel()
    inside = flat <= src.omega[-1]
    out[inside] = interp(flat[inside])
    wl = src.omega[-1]
    tail = np.array([src.alpha_par[-1], src.alpha_perp[-1]]) * wl * wl
    out[~inside] = tail[None, :] / (flat[~inside, None] ** 2)
    return out[:, 0], out[:, 1]


def molecular_polarizability(src, z):
    """Parallel and perpendicular dimer polarizabilities.

    A transition list is summed directly (any frequency); a grid is
    interpolated with a monotone cubic in omega and continued with a matched
    1/omega^2 tail past its last node (imaginary axis only).
    """
    z = _as_freq(z)
    if isinstance(src, GridSource):
        if not z.imaginary:
            raise CapabilityError("a tabulated (grid) polarizability only supports imaginary frequencies")
        par, perp = _grid_eval(src, z.omega)
        return PolarizabilityPair(_shape_out(z, par), _shape_out(z, perp))
    if not isinstance(src, TransitionListSource):
        raise TypeError(f"unsupported polarizability source {type(src).__name__}")
    _check_poles(z, [t.delta_e for t in src.transitions],
                 [f"molecular {t.orientation} transition at {t.delta_e:.6g} au" for t in src.transitions])
    z2 = np.ravel(z.z2)
    out = []
    for group in _split_orientation(src.transitions):
        if group:
            v = oscillator_sum([t.delta_e for t in group], [t.dipole**2 for t in group], z2)
        else:
            v = np.zeros(z2.size)
        out.append(_shape_out(z, v))
    return PolarizabilityPair(*out)


def rotational_weights(j, mj1, mj2, M, Mp):
    """Coefficients (w_par, w_perp) so that alpha^{mj1 mj2}_{M M'} = w_par a_par + w_perp a_perp.

    Rotational spacing is neglected in the energy denominators, so the
    rotational level only enters through these Clebsch-Gordan weights.
    """
    _check(j, mj1)
    _check(j, mj2)
    _check(1, M, "M")
    _check(1, Mp, "M'")
    mp = mj1 - M
    if mp != mj2 - Mp:
        return 0.0, 0.0
    wpar = wperp = 0.0
    for jp in range(abs(j - 1), j + 2):
        if abs(mp) > jp:
            continue
        ang = (2 * j + 1) / (2 * jp + 1) * _cg(1, -M, j, mj1, jp, mp) * _cg(1, -Mp, j, mj2, jp, mp)
        if ang == 0.0:
            continue
        wpar += ang * _cg(1, 0, j, 0, jp, 0) ** 2
        wperp += ang * 2.0 * _cg(1, 1, j, 0, jp, 1) ** 2
    return wpar, wperp


def rotational_polarizability(j, mj1, mj2, M, Mp, pair):
    """Polarizability matrix alpha^{mj1 mj2}_{M M'} of the dimer in rotational level j."""
    wpar, wperp = rotational_weights(j, mj1, mj2, M, Mp)
    val = wpar * np.asarray(pair.par) + wperp * np.asarray(pair.perp)
    return float(val) if np.ndim(val) == 0 else val


# ------------------------------------------------------------------ core

def core_polarizability(core, z):
    """Core polarizability on the imaginary axis."""
    z = _as_freq(z)
    if not z.imaginary:
        raise CapabilityError("core polarizability is only defined on the imaginary axis "
                              "(no downward transitions out of the core)")
    w = np.asarray(z.omega, dtype=float)
    if core is None:
        val = np.zeros_like(w)
    elif isinstance(core, ConstantCore):
        val = np.full_like(w, core.alpha_c)
    elif isinstance(core, EffectiveCore):
        val = 2.0 * core.delta_e * core.strength / (core.delta_e**2 + w * w)
    else:
        raise TypeError(f"unsupported core model {type(core).__name__}")
    return float(val) if val.ndim == 0 else val


def tabulate_source(src, omega):
    """Sample a transition-list source on an imaginary-frequency grid."""
    pair = molecular_polarizability(src, imag(np.asarray(omega, dtype=float)))
    return GridSource(np.asarray(omega, dtype=float), np.asarray(pair.par), np.asarray(pair.perp))


def single_transition_source(delta_e, dipole, orientation="parallel"):
    return TransitionListSource((MolecularTransition(delta_e, dipole, orientation),))
