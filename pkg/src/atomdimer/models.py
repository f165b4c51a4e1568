"""Randomized finite models for checking the factorized C6 against the explicit sum."""

from __future__ import annotations

import numpy as np

from .specdata import AtomicSystem, Dataset, MolecularTransition, TransitionListSource

__all__ = ["random_model"]

_GAP = 2e-3  # minimum separation between |dE| of different partners


def _spread(rng, n, lo, hi, avoid=()):
    out = []
    while len(out) < n:
        x = float(rng.uniform(lo, hi))
        if all(abs(x - y) > _GAP for y in list(avoid) + out):
            out.append(x)
    return out


def random_model(rng):
    """Random P-state atom + dimer model and one pair of coupled substates.

    The atom has 1 to 5 transitions (0 to 2 of them downward, to S levels);
    the dimer has 1 to 5 transitions of random orientation; j <= 2.

    Returns
    -------
    dataset : Dataset
    substates : tuple
        ``(j, mj1, lambda1, mj2, lambda2)`` with mj1 + lambda1 = mj2 + lambda2.
    """
    n_down = int(rng.integers(0, 3))
    n_up = int(rng.integers(max(1 - n_down, 0), 6 - n_down))
    n_mol = int(rng.integers(1, 6))
    down = _spread(rng, n_down, 0.01, 0.3)
    mol = _spread(rng, n_mol, 0.01, 0.5, avoid=down)
    osc = [(-e, 0, float(rng.uniform(0.5, 6))) for e in down]
    osc += [(e, int(rng.choice([0, 2])), float(rng.uniform(0.5, 6))) for e in _spread(rng, n_up, 0.01, 0.5)]
    atom = AtomicSystem.from_oscillators(1, osc, name="excited")
    src = TransitionListSource(tuple(
        MolecularTransition(e, float(rng.uniform(0.5, 4)), str(rng.choice(["parallel", "perpendicular"])))
        for e in mol
    ))
    j = int(rng.integers(0, 3))
    while True:
        mj1, mj2 = (int(v) for v in rng.integers(-j, j + 1, size=2))
        l1 = int(rng.integers(-1, 2))
        l2 = mj1 + l1 - mj2
        if abs(l2) <= 1:
            break
    d = Dataset(None, atom, src, None, (), 1e-7)
    return d, (j, mj1, l1, mj2, l2)
