import os
import subprocess
import sys

import numpy as np
import pytest

from atomdimer import _accel

needs_numba = pytest.mark.skipif("numba" not in _accel.KERNELS, reason="numba not installed")


def _sos_args(rng, na=7, nb=5, nm=3):
    x = rng.uniform(0.1, 1.0, na)
    y = rng.uniform(-0.05, 1.0, nb)
    return (x, rng.normal(size=(na, nm)), rng.normal(size=(na, nm)),
            y, rng.normal(size=(nb, nm)), rng.normal(size=(nb, nm)))


@needs_numba
def test_oscillator_sum_backends_agree():
    rng = np.random.default_rng(0)
    de, w = rng.uniform(-0.3, 1.0, 9), rng.uniform(0, 5, 9)
    z2 = -rng.uniform(0, 10, 40)
    a = _accel.KERNELS["numpy"][0](de, w, z2)
    b = _accel.KERNELS["numba"][0](de, w, z2)
    np.testing.assert_allclose(a, b, rtol=1e-13)


@needs_numba
def test_sos_double_sum_backends_agree():
    rng = np.random.default_rng(1)
    for _ in range(10):
        args = _sos_args(rng)
        a = _accel.KERNELS["numpy"][1](*args, 1e-10)
        b = _accel.KERNELS["numba"][1](*args, 1e-10)
        assert a[1:] == (-1, -1) and tuple(b[1:]) == (-1, -1)
        assert b[0] == pytest.approx(a[0], rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("backend", sorted(_accel.KERNELS))
def test_degenerate_pair_reported(backend):
    x, y = np.array([0.3, 0.2]), np.array([0.5, -0.2])
    one = np.ones((2, 3))
    _, a, b = _accel.KERNELS[backend][1](x, one, one, y, one, one, 1e-10)
    assert (a, b) == (1, 1)


def test_public_wrappers_coerce_inputs():
    out = _accel.oscillator_sum([0.5], [1.0], 0.0)
    assert out.shape == (1,) and out[0] == pytest.approx(4.0)
    v, a, b = _accel.sos_double_sum([1.0], [[1.0]], [[1.0]], [1.0], [[2.0]], [[3.0]])
    assert (v, a, b) == (3.0, -1, -1)


def test_env_flag_disables_numba():
    env = dict(os.environ, ATOMDIMER_DISABLE_NUMBA="1")
    code = "from atomdimer import _accel; print(_accel.USE_NUMBA)"
    r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "False"
