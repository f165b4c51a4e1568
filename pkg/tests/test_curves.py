import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomdimer.curves import (
    PotentialCurve,
    crossings_by_symmetry,
    curve_labels,
    emit_curve_table,
    find_crossings,
    find_extrema,
    leroy_radius,
    load_curves,
    potential,
    published_curves,
)
from atomdimer.specdata import HARTREE_TO_CM

B0 = 1.17314e-2 / HARTREE_TO_CM
SIGMA0 = PotentialCurve("Sigma+", 0, 0.0, -42704.0, B0)
SIGMA1 = PotentialCurve("Sigma+", 1, -1674.0, 51249.0, B0)
PI1 = PotentialCurve("Pi", 1, 1116.0, -79756.0, B0)


def test_potential_examples():
    assert potential(SIGMA1, 1e12) == pytest.approx(2 * B0, rel=1e-12)
    assert potential(SIGMA0, 100.0) == pytest.approx(-4.2704e-8, rel=1e-14)
    depth = (potential(SIGMA1, 36.74) - SIGMA1.asymptote) * HARTREE_TO_CM
    assert depth == pytest.approx(-0.92, abs=0.02)


def test_potential_domain():
    with pytest.raises(ValueError):
        potential(SIGMA0, 0.0)
    with pytest.raises(ValueError):
        potential(SIGMA0, np.array([1.0, -2.0]))
    with pytest.raises(ValueError):
        PotentialCurve("Pi", -1, 0, 0, B0)
    with pytest.raises(ValueError):
        PotentialCurve("Pi", 1, 0, 0, 0.0)


@settings(max_examples=50)
@given(c5=st.floats(-2000, 2000), c6=st.floats(-1e5, 1e5), r=st.floats(5, 5000))
def test_potential_is_three_term(c5, c6, r):
    c = PotentialCurve("X", 0, c5, c6, B0)
    lhs = (potential(c, r) - c.asymptote) * r**6
    assert lhs == pytest.approx(c5 * r + c6, rel=1e-12, abs=1e-300)


@settings(max_examples=50)
@given(c5=st.floats(-2000, 2000), c6=st.floats(-1e5, 1e5), j=st.integers(1, 4), r=st.floats(5, 5000))
def test_potential_three_term_with_asymptote(c5, c6, j, r):
    # V is stored to one ulp of the (possibly dominant) asymptote
    c = PotentialCurve("X", j, c5, c6, B0)
    v = potential(c, r)
    lhs = (v - c.asymptote) * r**6
    tol = 1e-12 * abs(c5 * r + c6) + 4 * np.spacing(abs(v)) * r**6
    assert abs(lhs - (c5 * r + c6)) <= tol


def test_extrema_examples():
    (m,) = find_extrema(SIGMA1)
    assert m.kind == "minimum" and m.r == pytest.approx(36.74, abs=5e-3)
    assert m.r == pytest.approx(6 * 51249 / (5 * 1674), rel=1e-15)
    assert m.relative_cm == pytest.approx(-0.915, abs=1e-3)
    assert m.value == pytest.approx(m.relative + 2 * B0)
    assert find_extrema(SIGMA0) == []
    (b,) = find_extrema(PI1)
    assert b.kind == "maximum" and b.r == pytest.approx(85.76, abs=5e-3)
    # well below the quoted 0.1 cm-1; see the Pi barrier note in the README
    assert b.relative_cm == pytest.approx(0.0088, abs=1e-4)


@settings(max_examples=60)
@given(c5=st.floats(1, 2000), c6=st.floats(1, 1e5), sign=st.sampled_from([-1, 1]), j=st.integers(0, 4))
def test_extremum_is_stationary(c5, c6, sign, j):
    c = PotentialCurve("X", j, sign * c5, -sign * c6, B0)
    (f,) = find_extrema(c)
    r = f.r
    assert r == pytest.approx(-6 * c.c6 / (5 * c.c5), rel=1e-10)
    v = lambda x: c.c5 / x**5 + c.c6 / x**6  # V minus its constant asymptote
    exact_d2 = 30 * c.c5 / r**7 + 42 * c.c6 / r**8
    bound = 1e-10 * abs(exact_d2 * r)
    assert abs(-5 * c.c5 / r**6 - 6 * c.c6 / r**7) < bound
    h = 1e-4 * r
    # fourth-order central difference; the second-order one has truncation error ~1e-7 |V'' r|
    d1 = (-v(r + 2 * h) + 8 * v(r + h) - 8 * v(r - h) + v(r - 2 * h)) / (12 * h)
    assert abs(d1) < bound
    d2 = (v(r + h) - 2 * v(r) + v(r - h)) / h**2
    assert (d2 > 0) == (f.kind == "minimum")


def test_sigma_crossings():
    xs = find_crossings(SIGMA0, SIGMA1, 30, 3000)
    # the difference 2B - 1674/r^5 + 93953/r^6 has two roots in the window
    assert [round(f.r, 2) for f in xs] == [58.75, 89.95]
    assert xs[-1].r == pytest.approx(90, abs=1)
    for f in xs:
        assert abs(potential(SIGMA0, f.r) - potential(SIGMA1, f.r)) < 1e-12
        assert f.curve == "Sigma+/0" and f.partner == "Sigma+/1"


def test_crossing_edge_cases():
    a = PotentialCurve("Pi", 2, 0.0, -20000.0, B0)
    b = PotentialCurve("Pi", 2, 0.0, -30000.0, B0)
    assert find_crossings(a, b, 1.0, 1e4) == []
    with pytest.raises(ValueError):
        find_crossings(a, a, 30, 3000)
    with pytest.raises(ValueError):
        find_crossings(a, b, 300, 30)


def test_crossings_by_symmetry_sorted_and_grouped():
    curves = published_curves(B0)
    xs = crossings_by_symmetry(curves)
    assert xs == sorted(xs, key=lambda f: (f.r, f.curve, f.partner))
    sym = {lab: c.symmetry for lab, c in zip(curve_labels(curves), curves)}
    assert all(sym[f.curve] == sym[f.partner] for f in xs)
    assert any(f.curve == "Sigma+/0" and f.partner == "Sigma+/1" and abs(f.r - 90) < 1 for f in xs)


@pytest.mark.parametrize("a, b, expected", [(42, 42, 25.92), (0, 0, 0.0), (42, 144, 36.96)])
def test_leroy_radius(a, b, expected):
    assert leroy_radius(a, b) == pytest.approx(expected, abs=5e-3)


def test_leroy_radius_negative():
    with pytest.raises(ValueError):
        leroy_radius(-1, 4)


def _rows(text):
    return [line.split(",") for line in text.splitlines() if not line.startswith("#")]


def test_table_two_points_linear():
    t = emit_curve_table([SIGMA0], 30, 60, 2, "linear")
    assert t.values.shape == (2, 1)
    text = t.to_text()
    header = [line for line in text.splitlines() if line.startswith("#")]
    assert header[-1] == "# R,Sigma+/0"
    assert len(_rows(text)) == 2


def test_table_log_endpoints_and_consistency():
    curves = [SIGMA0, SIGMA1, PI1]
    t = emit_curve_table(curves, 30, 3000, 57, "log")
    assert t.r[0] == pytest.approx(30, rel=1e-12) and t.r[-1] == pytest.approx(3000, rel=1e-12)
    for k, c in enumerate(curves):
        np.testing.assert_allclose(t.values[:, k], potential(c, t.r) * HARTREE_TO_CM, rtol=1e-12)
    text = t.to_text()
    rows = np.array(_rows(text), dtype=float)
    np.testing.assert_allclose(rows, np.column_stack([t.r, t.values]), rtol=5e-12)
    assert text == emit_curve_table(curves, 30, 3000, 57, "log").to_text()


def test_table_duplicate_labels_and_delimiter():
    t = emit_curve_table([SIGMA1, SIGMA1], 30, 60, 3)
    assert t.labels == ("Sigma+/1", "Sigma+/1(2)")
    assert "# R\tSigma+/1\tSigma+/1(2)" in t.to_text("\t")


@pytest.mark.parametrize("kw", [dict(points=1), dict(scale="cubic"), dict(r_min=0.0), dict(r_min=50.0, r_max=40.0)])
def test_table_errors(kw):
    args = dict(curves=[SIGMA0], r_min=30.0, r_max=60.0, points=3, scale="log")
    args.update(kw)
    with pytest.raises(ValueError):
        emit_curve_table(**args)


def test_published_tables():
    t2 = published_curves(B0)
    assert len(t2) == 44
    assert (t2[1].c5, t2[1].c6) == (-1674.0, 51249.0)
    assert all(c.c6 < 0 for c in published_curves(B0, "table1"))
    assert len(published_curves(B0, "table1")) == 15


def test_load_curves(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("# comment\nsymmetry,j,c5,c6\nPi,1,1116,-79756\nSigma+,0,,-42704\n")
    cs = load_curves(p, B0)
    assert cs[0] == PI1 and cs[1] == SIGMA0
    p.write_text("symmetry,j,c6\nPi,x,3\n")
    with pytest.raises(ValueError, match="row 1"):
        load_curves(p, B0)
