"""Time the numba and numpy kernels on problem sizes typical of the shipped data.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from atomdimer._accel import KERNELS


def cases(rng):
    de, w = rng.uniform(0.01, 1.0, 20), rng.uniform(0, 10, 20)
    z2 = -rng.uniform(0, 50, 64)
    na, nb = 400, 60
    sos = (rng.uniform(0.1, 1, na), rng.normal(size=(na, 3)), rng.normal(size=(na, 3)),
           rng.uniform(0.1, 1, nb), rng.normal(size=(nb, 3)), rng.normal(size=(nb, 3)), 1e-10)
    return {"oscillator_sum": (0, (de, w, z2)), "sos_double_sum": (1, sos)}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=2000)
    args = p.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}{'backend':<8}{'us/call':>10}")
    for name, (k, a) in cases(rng).items():
        for backend, fns in KERNELS.items():
            fns[k](*a)  # compile / warm up
            t = min(timeit.repeat(lambda: fns[k](*a), number=args.repeat, repeat=3)) / args.repeat
            print(f"{name:<16}{backend:<8}{t * 1e6:>10.2f}")


if __name__ == "__main__":
    main()
