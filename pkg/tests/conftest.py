import pytest

from atomdimer.specdata import load_shipped_dataset

# Small but complete dataset used by the parser and CLI tests.
TOY_TEXT = """\
# toy dataset: one P atom, two dimer transitions
[constants]
b_rot = 1.17314e-2 cm-1
r2.ground = 42

[atom.excited.levels]
label = 2P
n = 2
l = 1
energy = 0.1 au

label = 1S
n = 1
l = 0
energy = 0 au

label = 3D
n = 3
l = 2
energy = 0.45 au

[atom.excited.transitions]
from = 2P
to = 1S
radial = 2.0

from = 2P
to = 3D
radial = 3.0

[molecule.polarizability]
kind = transitions

delta_e = 0.4 au
dipole = 1.5
orientation = parallel

delta_e = 0.25 au
dipole = 1.0
orientation = perpendicular

[core]
kind = constant
alpha = 2.0

[states]
symmetry = Sigma-
j = 1
ell = 1
mj = 1 -1
lambda = -1 1
c = 0.7071067811865476 -0.7071067811865476
c5 = 0

symmetry = Pi
j = 1
ell = 1
mj = 1 0
lambda = 0 1
c = 0.6 0.8
c5 = 10
"""


@pytest.fixture(scope="session")
def shipped():
    return load_shipped_dataset()


@pytest.fixture
def toy_path(tmp_path):
    p = tmp_path / "toy.dat"
    p.write_text(TOY_TEXT)
    return p
