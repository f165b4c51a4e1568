"""Hot numeric kernels, JIT-compiled with numba when available.

Set ``ATOMDIMER_DISABLE_NUMBA=1`` to force the pure-numpy implementations
(useful for debugging and for the benchmark in ``benchmarks/``). Both paths
return identical results up to floating-point summation order.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["USE_NUMBA", "oscillator_sum", "sos_double_sum", "KERNELS"]

_disabled = os.environ.get("ATOMDIMER_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _disabled:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _disabled


# ---------------------------------------------------------------- numpy path

def _oscillator_sum_np(delta_e, weights, z2):
    """sum_k 2 w_k dE_k / (dE_k^2 - z2) for every entry of z2."""
    de = delta_e[:, None]
    return np.sum(2.0 * weights[:, None] * de / (de * de - z2[None, :]), axis=0)


def _sos_double_sum_np(x, va1, va2, y, vb1, vb2, tol):
    den = x[:, None] + y[None, :]
    bad = np.argwhere(np.abs(den) <= tol)
    if bad.size:
        return 0.0, int(bad[0, 0]), int(bad[0, 1])
    n1 = va1 @ vb1.T
    n2 = va2 @ vb2.T
    return float(np.sum(n1 * n2 / den)), -1, -1


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _oscillator_sum_nb(delta_e, weights, z2):
        out = np.zeros(z2.shape[0])
        for i in range(z2.shape[0]):
            acc = 0.0
            for k in range(delta_e.shape[0]):
                d = delta_e[k]
                acc += 2.0 * weights[k] * d / (d * d - z2[i])
            out[i] = acc
        return out

    @njit(cache=True)
    def _sos_double_sum_nb(x, va1, va2, y, vb1, vb2, tol):
        total = 0.0
        nm = va1.shape[1]
        for a in range(x.shape[0]):
            for b in range(y.shape[0]):
                den = x[a] + y[b]
                if abs(den) <= tol:
                    return 0.0, a, b
                s1 = 0.0
                s2 = 0.0
                for m in range(nm):
                    s1 += va1[a, m] * vb1[b, m]
                    s2 += va2[a, m] * vb2[b, m]
                total += s1 * s2 / den
        return total, -1, -1


KERNELS = {"numpy": (_oscillator_sum_np, _sos_double_sum_np)}
if HAVE_NUMBA:
    KERNELS["numba"] = (_oscillator_sum_nb, _sos_double_sum_nb)

_osc, _sos = KERNELS["numba" if USE_NUMBA else "numpy"]


def oscillator_sum(delta_e, weights, z2):
    """Evaluate sum_k 2 w_k dE_k / (dE_k^2 - z^2) on an array of z^2 values."""
    return _osc(
        np.ascontiguousarray(delta_e, dtype=np.float64),
        np.ascontiguousarray(weights, dtype=np.float64),
        np.ascontiguousarray(np.atleast_1d(z2), dtype=np.float64),
    )


def sos_double_sum(x, va1, va2, y, vb1, vb2, tol=1e-10):
    """Second-order double sum over excited-state pairs.

    Computes sum_{a,b} (va1[a].vb1[b]) (va2[a].vb2[b]) / (x[a] + y[b]).
    Returns ``(value, a, b)``; ``a, b`` are -1 unless a denominator is
    degenerate, in which case they name the offending pair.
    """
    args = [np.ascontiguousarray(v, dtype=np.float64) for v in (x, va1, va2, y, vb1, vb2)]
    value, a, b = _sos(*args, float(tol))
    return float(value), int(a), int(b)
