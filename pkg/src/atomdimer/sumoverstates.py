"""Brute-force second-order sums over explicit excited states.

This is the reference path for the dispersion coefficients: every excited
sublevel of the dimer and of the atom is enumerated with its dipole matrix
elements, and the second-order energy is summed pair by pair with the exact
energy denominators. Nothing here goes through the imaginary-frequency
factorization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._accel import sos_double_sum
from .angular import clebsch_gordan, rotational_dipole_element

__all__ = [
    "ExplicitStates",
    "DegenerateDenominatorError",
    "dimer_states",
    "atom_states",
    "atomic_dipole_element",
    "explicit_polarizability",
    "c6_sum_over_states",
]

_MS = (-1, 0, 1)
_W = {M: 1.0 / (math.factorial(1 + M) * math.factorial(1 - M)) for M in _MS}


class DegenerateDenominatorError(ZeroDivisionError):
    pass


@dataclass(frozen=True, eq=False)
class ExplicitStates:
    """Excited states of one partner.

    ``elements[a, q + 1, s + g]`` is <g s | Q^q_1 | a> for ground sublevel s
    (projection of ground momentum g) and spherical component q.
    """

    g: int
    energies: np.ndarray
    elements: np.ndarray
    labels: tuple = ()

    def column(self, sub, q):
        return self.elements[:, q + 1, sub + self.g]


def dimer_states(src, j):
    """Rovibronic excited states reached from rotational level j of a Sigma ground state.

    Parallel transitions reach Sigma levels (body projection 0); perpendicular
    ones reach both Pi components (body projection -mu for mu = +-1), each
    carrying the full transition dipole. Rotational energies are dropped.
    """
    energies, rows, labels = [], [], []
    for k, t in enumerate(src.transitions):
        mus = (0,) if t.orientation == "parallel" else (1, -1)
        for jp in range(abs(j - 1), j + 2):
            for mjp in range(-jp, jp + 1):
                for mu in mus:
                    el = np.zeros((3, 2 * j + 1))
                    for q in _MS:
                        for mj in range(-j, j + 1):
                            el[q + 1, mj + j] = rotational_dipole_element(j, mj, jp, mjp, q, mu) * t.dipole
                    if np.any(el):
                        energies.append(t.delta_e)
                        rows.append(el)
                        labels.append(f"mol{k}:j'={jp},m'={mjp},mu={mu}")
    els = np.array(rows) if rows else np.zeros((0, 3, 2 * j + 1))
    return ExplicitStates(j, np.array(energies, dtype=float), els, tuple(labels))


def atomic_dipole_element(l, lam, lp, lamp, q, radial):
    """<l lam | Q^q_1 | l' lam'> for a one-electron atom, via Wigner-Eckart.

    Uses <l' lam'|C^1_{-q}|l lam> = sqrt((2l+1)/(2l'+1)) <l 0 1 0|l' 0> <l lam 1 -q|l' lam'>
    and (Q^q)^dagger = (-1)^q Q^{-q}.
    """
    if abs(lamp) > lp or abs(lam) > l:
        return 0.0
    return (
        (-1) ** q * radial * math.sqrt((2 * l + 1) / (2 * lp + 1))
        * clebsch_gordan(l, 0, 1, 0, lp, 0) * clebsch_gordan(l, lam, 1, -q, lp, lamp)
    )


def atom_states(atom):
    l = atom.l
    energies, rows, labels = [], [], []
    for t in atom.transitions:
        for lamp in range(-t.lp, t.lp + 1):
            el = np.zeros((3, 2 * l + 1))
            for q in _MS:
                for lam in range(-l, l + 1):
                    el[q + 1, lam + l] = atomic_dipole_element(l, lam, t.lp, lamp, q, t.radial_element)
            energies.append(t.delta_e)
            rows.append(el)
            labels.append(f"{t.name}:lambda'={lamp}")
    els = np.array(rows) if rows else np.zeros((0, 3, 2 * l + 1))
    return ExplicitStates(l, np.array(energies, dtype=float), els, tuple(labels))


def explicit_polarizability(states, s1, s2, M, Mp, z2, negate_m=False):
    """Polarizability matrix 2(-1)^M sum_a dE <s1|Q^M|a><a|Q^{-M'}|s2> / (dE^2 - z^2).

    With ``negate_m`` the operator components are -M and M' instead (the atom's
    convention alpha^{lambda1 lambda2}_{-M -M'}).
    """
    q1, q2 = (-M, -Mp) if negate_m else (M, Mp)
    # <a|Q^{-q2}|s2> = (-1)^{q2} <s2|Q^{q2}|a>
    num = states.column(s1, q1) * states.column(s2, q2) * (-1) ** q2
    e = states.energies
    z2 = np.atleast_1d(np.asarray(z2, dtype=float))
    return 2 * (-1) ** M * np.sum(num[:, None] * e[:, None] / (e[:, None] ** 2 - z2[None, :]), axis=0)


def c6_sum_over_states(dimer, atom, mj1, lambda1, mj2, lambda2):
    """Crossed dispersion coefficient from the explicit second-order double sum.

    -4 sum_{a,b} <m1 l1|V|a b><a b|V|m2 l2> / (dE_a + dE_b), with the
    dipole-dipole coupling weights 1/((1+M)!(1-M)!).

    Parameters
    ----------
    dimer, atom : ExplicitStates
        From :func:`dimer_states` and :func:`atom_states`.
    """
    va1 = np.stack([_W[M] * dimer.column(mj1, M) for M in _MS], axis=1)
    va2 = np.stack([_W[M] * dimer.column(mj2, M) for M in _MS], axis=1)
    vb1 = np.stack([atom.column(lambda1, -M) for M in _MS], axis=1)
    vb2 = np.stack([atom.column(lambda2, -M) for M in _MS], axis=1)
    total, a, b = sos_double_sum(dimer.energies, va1, va2, atom.energies, vb1, vb2, 1e-10)
    if a >= 0:
        la = dimer.labels[a] if dimer.labels else a
        lb = atom.labels[b] if atom.labels else b
        raise DegenerateDenominatorError(
            f"energy denominator vanishes for dimer state {la} and atom state {lb} "
            f"({dimer.energies[a]:.12g} + {atom.energies[b]:.12g})"
        )
    return -4.0 * total
