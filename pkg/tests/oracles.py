"""Independent reference implementations used only by the tests.

Nothing here imports the package's angular algebra: Wigner small-d values
come from sympy and orientation integrals are done by brute-force quadrature.
"""

import math
from functools import lru_cache

import numpy as np
import sympy as sp
from sympy.physics.quantum.spin import Rotation
from sympy.physics.wigner import clebsch_gordan as sympy_cg


def cg(j1, m1, j2, m2, J, M):
    return float(sympy_cg(j1, j2, J, m1, m2, M))


@lru_cache(maxsize=None)
def _d_func(j, m, mp):
    b = sp.Symbol("b", real=True)
    expr = Rotation.d(j, m, mp, b).doit()
    return sp.lambdify(b, expr, "numpy")


def small_d(j, m, mp, beta):
    return np.real(np.asarray(_d_func(j, m, mp)(np.asarray(beta, dtype=float)), dtype=complex)) * np.ones_like(beta)


def big_d(j, m, k, alpha, beta, gamma):
    return np.exp(-1j * m * alpha) * small_d(j, m, k, beta) * np.exp(-1j * k * gamma)


def rotational_element_by_orientation(j, mj, jp, mjp, M, mu, n_angle=12, n_beta=40):
    """<j mj 0| D^{1*}_{M mu} |j' mj' -mu> by quadrature over Euler angles.

    Symmetric-top wavefunctions sqrt((2j+1)/(8 pi^2)) D^{j*}_{m k}.
    """
    if abs(mu) > jp:
        return 0.0
    t, w = np.polynomial.legendre.leggauss(n_beta)
    beta = (t + 1) * math.pi / 2
    wb = w * math.pi / 2 * np.sin(beta)
    ang = np.arange(n_angle) * 2 * math.pi / n_angle
    A, B, G = np.meshgrid(ang, beta, ang, indexing="ij")
    W = np.broadcast_to(wb[None, :, None], A.shape) * (2 * math.pi / n_angle) ** 2
    f = (big_d(j, mj, 0, A, B, G) * np.conj(big_d(1, M, mu, A, B, G))
         * np.conj(big_d(jp, mjp, -mu, A, B, G)))
    val = np.sum(W * f) * math.sqrt((2 * j + 1) * (2 * jp + 1)) / (8 * math.pi**2)
    return float(np.real(val))
