"""Regenerate src/atomdimer/data/cs_cs2.dat, the shipped Cs + Cs2 example dataset.

Ingredients
-----------
* Cs(6S): one effective oscillator fitted to alpha(0) = 402 au and the
  homonuclear C6 = 6840 au.
* Cs(6P): transitions to n'S (n' = 6..10) and n'D (n' = 5..10). Level
  energies are fine-structure centroids with degeneracy weights (2:4 for
  6P, 4:6 for the D levels); radial elements are approximate
  Coulomb-approximation values. Both are good to a few percent only.
* Cs2 X state, v = 0: one parallel and one perpendicular oscillator. Their
  static values satisfy (a_par + 2 a_perp)/3 = 707 au and their energies are
  chosen so that the ground-atom integrals int (a_6S + a_c) a_par dw and
  int (a_6S + a_c) a_perp dw match the values implied by the published
  Cs(6S) + Cs2 coefficients (least-squares fit of the 15 angular weights).
  The remaining freedom, a_par(0), is set by hand (A_PAR below).
* Core: constant 15.4 au.
* States: the symmetry eigenvectors fixed by angular momentum alone
  (single-row states and the Sigma- combinations), with published C5/C6.

Run ``python scripts/build_dataset.py`` from the repository root.
"""

import math
from pathlib import Path

from scipy.optimize import brentq

from atomdimer.dispersion import c6_ground_atom, c6_total
from atomdimer.specdata import (
    HARTREE_TO_CM,
    AtomicLevel,
    AtomicSystem,
    AtomicTransition,
    ConstantCore,
    Dataset,
    MolecularTransition,
    SymmetryState,
    TransitionListSource,
    fit_single_oscillator,
    save_dataset,
    single_oscillator_atom,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "atomdimer" / "data" / "cs_cs2.dat"

ALPHA_6S, C6_CS_CS = 402.0, 6840.0
ALPHA_BAR = 707.0
ALPHA_CORE = 15.4
A_PAR = 1130.0
# int (a_6S + a_c)(iw) a_{par,perp}(iw) dw fitted to the published ground-atom C6 table
I_PAR, I_PERP = 17276.34, 10370.64
B_ROT_CM = 1.17314e-2

# label: (n, l, energy in cm-1 above 6S)
LEVELS = {
    "6S": (6, 0, 0.0),
    "6P": (6, 1, (2 * 11178.268 + 4 * 11732.307) / 6),
    "7S": (7, 0, 18535.529),
    "8S": (8, 0, 24317.149),
    "9S": (9, 0, 26910.661),
    "10S": (10, 0, 28300.233),
    "5D": (5, 2, (4 * 14499.258 + 6 * 14596.842) / 10),
    "6D": (6, 2, (4 * 22588.821 + 6 * 22631.686) / 10),
    "7D": (7, 2, (4 * 26047.83 + 6 * 26068.83) / 10),
    "8D": (8, 2, (4 * 27636.99 + 6 * 27649.50) / 10),
    "9D": (9, 2, 28709.0),
    "10D": (10, 2, 29386.0),
}
# |<6P| r |n'l'>| in bohr
RADIAL = {"6S": 5.50, "7S": 5.48, "8S": 1.30, "9S": 0.70, "10S": 0.47,
          "5D": 6.15, "6D": 3.15, "7D": 1.55, "8D": 1.00, "9D": 0.72, "10D": 0.55}

_R = 1 / math.sqrt(2)
# (symmetry mJ, reflection, j, rows, C5, C6 published)
STATES = [
    (0, "+", 0, ((0, 0, 1.0),), 0.0, -42704.0),
    (0, "-", 1, ((1, -1, _R), (-1, 1, -_R)), 0.0, -43920.0),
    (0, "-", 2, ((1, -1, _R), (-1, 1, -_R)), 399.0, -45131.0),
    (0, "-", 3, ((1, -1, _R), (-1, 1, -_R)), 465.0, -45333.0),
    (0, "-", 4, ((1, -1, _R), (-1, 1, -_R)), 489.0, -45407.0),
    (1, None, 0, ((0, 1, 1.0),), 0.0, -23605.0),
    (2, None, 1, ((1, 1, 1.0),), -279.0, -18694.0),
    (3, None, 2, ((2, 1, 1.0),), -399.0, -16589.0),
    (4, None, 3, ((3, 1, 1.0),), -465.0, -15420.0),
    (5, None, 4, ((4, 1, 1.0),), -507.0, -14676.0),
]


def excited_atom():
    lv = {k: AtomicLevel(k, n, l, e / HARTREE_TO_CM) for k, (n, l, e) in LEVELS.items()}
    p = lv["6P"]
    trans = tuple(AtomicTransition(p, lv[k], lv[k].energy - p.energy, r) for k, r in RADIAL.items())
    return AtomicSystem("excited", tuple(lv.values()), trans)


def molecule(a_par):
    de_s, _ = fit_single_oscillator(ALPHA_6S, C6_CS_CS)
    a_perp = (3 * ALPHA_BAR - a_par) / 2

    # closed form of int [a_6S Lorentzian + a_c] * [A Lorentzian of width D] dw
    def mismatch(d, a, target):
        return a * math.pi / 2 * (ALPHA_6S * de_s * d / (de_s + d) + ALPHA_CORE * d) - target

    d_par = brentq(mismatch, 1e-4, 2.0, args=(a_par, I_PAR))
    d_perp = brentq(mismatch, 1e-4, 2.0, args=(a_perp, I_PERP))
    return TransitionListSource((
        MolecularTransition(d_par, math.sqrt(a_par * d_par / 2), "parallel"),
        MolecularTransition(d_perp, math.sqrt(a_perp * d_perp / 2), "perpendicular"),
    ))


def build(a_par=A_PAR):
    mol = molecule(a_par)
    notes = (
        "Cs(6S) + Cs2 and Cs(6P) + Cs2 example dataset; regenerate with scripts/build_dataset.py.",
        "Approximate data: effective oscillators and Coulomb-approximation radial elements.",
        "6P energy is the 6P1/2, 6P3/2 centroid with degeneracy weights 2:4.",
        f"Cs2 oscillators: a_par(0) = {a_par:g}, a_perp(0) = {(3 * ALPHA_BAR - a_par) / 2:g}, "
        f"isotropic {ALPHA_BAR:g} au.",
        "States: eigenvectors fixed by symmetry alone; c6_ref holds published values.",
    )
    states = tuple(SymmetryState(mJ, refl, j, 1, rows, c5, c6)
                   for mJ, refl, j, rows, c5, c6 in STATES)
    return Dataset(
        atom_ground=single_oscillator_atom(ALPHA_6S, C6_CS_CS),
        atom_excited=excited_atom(),
        molecule=mol,
        core=ConstantCore(ALPHA_CORE),
        states=states,
        b_rot=B_ROT_CM / HARTREE_TO_CM,
        r2_expectations={"ground": 42.0},
        notes=notes,
    )


def main():
    d = build()
    print(f"ground j=0: {c6_ground_atom(d, 0, 0):.0f} (published -12101)")
    for s in d.states:
        r = c6_total(d, s)
        print(f"{s.key:10s} {r.total:10.0f}  published {s.c6_ref:8.0f}  core {r.core_term:7.0f}")
    save_dataset(d, OUT)
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
