"""Angular-momentum algebra for integer momenta.

Clebsch-Gordan coefficients use the Condon-Shortley phase convention and are
evaluated from the Racah formula in exact rational arithmetic, so the only
rounding happens in the final square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "AngularMomentumError",
    "AngularMomentum",
    "clebsch_gordan",
    "wigner_d",
    "rotational_dipole_element",
    "multipole_prefactor",
]


class AngularMomentumError(ValueError):
    """Raised for a negative momentum or a projection outside [-j, j]."""


@dataclass(frozen=True)
class AngularMomentum:
    j: int
    m: int

    def __post_init__(self):
        _check(self.j, self.m)


def _check(j, m=0, name="j"):
    if int(j) != j or int(m) != m:
        raise AngularMomentumError(f"{name}={j}, m={m}: only integer momenta are supported")
    if j < 0:
        raise AngularMomentumError(f"{name}={j} is negative")
    if abs(m) > j:
        raise AngularMomentumError(f"|m|={abs(m)} exceeds {name}={j}")


_fact = math.factorial


@lru_cache(maxsize=None)
def _cg_exact(j1, m1, j2, m2, J, M):
    """Signed square of the coefficient as a Fraction (sign carries the phase)."""
    if m1 + m2 != M:
        return Fraction(0)
    if abs(m1) > j1 or abs(m2) > j2 or abs(M) > J:
        return Fraction(0)
    if J < abs(j1 - j2) or J > j1 + j2:
        return Fraction(0)
    pref = Fraction(
        (2 * J + 1) * _fact(J + j1 - j2) * _fact(J - j1 + j2) * _fact(j1 + j2 - J)
        * _fact(J + M) * _fact(J - M)
        * _fact(j1 - m1) * _fact(j1 + m1) * _fact(j2 - m2) * _fact(j2 + m2),
        _fact(j1 + j2 + J + 1),
    )
    kmin = max(0, j2 - J - m1, j1 - J + m2)
    kmax = min(j1 + j2 - J, j1 - m1, j2 + m2)
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            _fact(k) * _fact(j1 + j2 - J - k) * _fact(j1 - m1 - k) * _fact(j2 + m2 - k)
            * _fact(J - j2 + m1 + k) * _fact(J - j1 - m2 + k)
        )
        total += Fraction((-1) ** k, den)
    sq = pref * total * total
    return sq if total >= 0 else -sq


@lru_cache(maxsize=None)
def _cg(j1, m1, j2, m2, J, M):
    # permissive: any projection or triangle violation gives 0
    s = _cg_exact(j1, m1, j2, m2, J, M)
    if s == 0:
        return 0.0
    v = math.sqrt(abs(s))
    return v if s > 0 else -v


def clebsch_gordan(j1: int, m1: int, j2: int, m2: int, J: int, M: int) -> float:
    """Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M>.

    The uncoupled momenta must be valid; a coupled state that violates the
    triangle rule, the projection sum rule or |M| <= J gives exactly zero.
    """
    _check(j1, m1, "j1")
    _check(j2, m2, "j2")
    if int(J) != J or int(M) != M:
        raise AngularMomentumError("only integer momenta are supported")
    if J < 0:
        raise AngularMomentumError(f"J={J} is negative")
    return _cg(int(j1), int(m1), int(j2), int(m2), int(J), int(M))


@lru_cache(maxsize=None)
def _wigner_d_terms(j, m, mp):
    # (coefficient, power of cos(b/2), power of sin(b/2))
    terms = []
    norm = math.sqrt(_fact(j + m) * _fact(j - m) * _fact(j + mp) * _fact(j - mp))
    for s in range(max(0, mp - m), min(j + mp, j - m) + 1):
        den = _fact(j + mp - s) * _fact(s) * _fact(m - mp + s) * _fact(j - m - s)
        terms.append(((-1) ** (m - mp + s) * norm / den, 2 * j + mp - m - 2 * s, m - mp + 2 * s))
    return tuple(terms)


def wigner_d(j: int, m: int, mp: int, beta):
    """Wigner small-d element d^j_{m, mp}(beta); `beta` may be an array."""
    _check(j, m)
    _check(j, mp)
    b = np.asarray(beta, dtype=float)
    c, s = np.cos(b / 2), np.sin(b / 2)
    out = np.zeros_like(b)
    for coef, pc, ps in _wigner_d_terms(int(j), int(m), int(mp)):
        out = out + coef * c**pc * s**ps
    return float(out) if out.ndim == 0 else out


def rotational_dipole_element(j: int, mj: int, jp: int, mjp: int, M: int, mu: int) -> float:
    """Rotational factor <j mj | d^1_{M mu} | j' mj'> of a dimer dipole element.

    The lower state is a Sigma level (body projection 0); the upper level
    carries body projection -mu.
    """
    _check(j, mj)
    _check(jp, mjp, "j'")
    _check(1, M, "M")
    _check(1, mu, "mu")
    if abs(mu) > jp:
        return 0.0
    return (
        math.sqrt((2 * jp + 1) / (2 * j + 1))
        * _cg(1, M, jp, mjp, j, mj)
        * _cg(1, mu, jp, -mu, j, 0)
    )


def multipole_prefactor(LA: int, LB: int, M: int) -> float:
    """Coupling prefactor of the 2^LA-pole / 2^LB-pole term of the multipolar expansion.

    The quantization axis points from A to B, hence the (-1)^LB sign.
    """
    if LA < 0 or LB < 0:
        raise AngularMomentumError("multipole orders must be non-negative")
    if abs(M) > min(LA, LB):
        raise AngularMomentumError(f"|M|={abs(M)} exceeds min(LA, LB)={min(LA, LB)}")
    return (-1) ** LB * _fact(LA + LB) / math.sqrt(
        _fact(LA + M) * _fact(LA - M) * _fact(LB + M) * _fact(LB - M)
    )
