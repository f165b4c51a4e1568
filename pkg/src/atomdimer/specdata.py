"""Spectroscopic input data: levels, transitions, polarizability sources, states.

Datasets are read from a sectioned ``key = value`` text format::

    [constants]
    b_rot = 1.17314e-2 cm-1
    r2.ground = 42

    [atom.excited.levels]
    label = 6P
    n = 6
    l = 1
    energy = 11547.63 cm-1

    [atom.excited.transitions]
    from = 6P
    to = 6S
    radial = 5.50

    [molecule.polarizability]
    kind = transitions

    delta_e = 0.06 au
    dipole = 4.1
    orientation = perpendicular

    [core]
    kind = constant
    alpha = 15.4

    [states]
    symmetry = Sigma-
    j = 1
    ell = 1
    mj = 1 -1
    lambda = -1 1
    c = 0.7071067811865476 -0.7071067811865476
    c5 = 0

Records inside a section are separated by blank lines, ``#`` starts a
comment, arrays are whitespace separated, and every energy carries an
explicit ``au`` or ``cm-1`` tag.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

__all__ = [
    "HARTREE_TO_CM",
    "to_au",
    "from_au",
    "AtomicLevel",
    "AtomicTransition",
    "AtomicSystem",
    "MolecularTransition",
    "TransitionListSource",
    "GridSource",
    "ConstantCore",
    "EffectiveCore",
    "SymmetryState",
    "Dataset",
    "ValidationReport",
    "DatasetParseError",
    "DatasetValidationError",
    "symmetry_label",
    "parse_symmetry_label",
    "load_dataset",
    "loads_dataset",
    "dumps_dataset",
    "save_dataset",
    "validate_dataset",
    "fit_single_oscillator",
    "single_oscillator_atom",
    "shipped_dataset_path",
    "load_shipped_dataset",
]

HARTREE_TO_CM = 219474.63137

_UNITS = ("au", "cm-1")


def to_au(value, unit):
    """Convert an energy tagged with `unit` ('au' or 'cm-1') to hartree."""
    if unit == "cm-1":
        return value / HARTREE_TO_CM
    if unit == "au":
        return value
    raise ValueError(f"unknown energy unit {unit!r} (expected 'au' or 'cm-1')")


def from_au(value, unit):
    if unit == "cm-1":
        return value * HARTREE_TO_CM
    if unit == "au":
        return value
    raise ValueError(f"unknown energy unit {unit!r} (expected 'au' or 'cm-1')")


# ------------------------------------------------------------------ types

@dataclass(frozen=True)
class AtomicLevel:
    label: str
    n: int
    l: int
    energy: float  # hartree


@dataclass(frozen=True)
class AtomicTransition:
    """Dipole transition out of the reference level; ``delta_e = E_final - E_initial``."""

    initial: AtomicLevel
    final: AtomicLevel
    delta_e: float
    radial_element: float  # bohr

    @property
    def l(self):
        return self.initial.l

    @property
    def lp(self):
        return self.final.l

    @property
    def downward(self):
        return self.delta_e < 0

    @property
    def name(self):
        return f"{self.initial.label}->{self.final.label}"


@dataclass(frozen=True)
class AtomicSystem:
    """All transitions out of one atomic level (the level whose polarizability is needed)."""

    name: str
    levels: tuple
    transitions: tuple

    @property
    def state(self):
        if not self.transitions:
            return None
        return self.transitions[0].initial

    @property
    def l(self):
        return self.state.l if self.transitions else None

    @classmethod
    def from_oscillators(cls, l, oscillators, name="toy"):
        """Build a system from ``(delta_e, l', radial)`` triples out of a level with momentum `l`."""
        ref = AtomicLevel("ref", 0, l, 0.0)
        levels = [ref]
        trans = []
        for i, (de, lp, r) in enumerate(oscillators):
            lev = AtomicLevel(f"x{i}", i + 1, lp, de)
            levels.append(lev)
            trans.append(AtomicTransition(ref, lev, de, r))
        return cls(name, tuple(levels), tuple(trans))


@dataclass(frozen=True)
class MolecularTransition:
    delta_e: float  # hartree, > 0
    dipole: float  # a.u.
    orientation: str  # 'parallel' | 'perpendicular'


@dataclass(frozen=True)
class TransitionListSource:
    transitions: tuple

    kind = "transitions"


@dataclass(frozen=True, eq=False)
class GridSource:
    """Tabulated alpha_par(i w), alpha_perp(i w) on an increasing grid starting at 0."""

    omega: np.ndarray
    alpha_par: np.ndarray
    alpha_perp: np.ndarray

    kind = "grid"


@dataclass(frozen=True)
class ConstantCore:
    alpha_c: float

    kind = "constant"


@dataclass(frozen=True)
class EffectiveCore:
    """Single effective core excitation, alpha_c(i w) = 2 dE s / (dE^2 + w^2)."""

    delta_e: float
    strength: float

    kind = "effective"

    @classmethod
    def from_static(cls, alpha_static, delta_e):
        return cls(delta_e, alpha_static * delta_e / 2.0)

    @property
    def static(self):
        return 2.0 * self.strength / self.delta_e


_SYMBOLS = ("Sigma", "Pi", "Delta", "Phi", "Gamma", "H")
_LOOKUP = {s.lower(): i for i, s in enumerate(_SYMBOLS)}


def symmetry_label(mJ, reflection=None):
    """'Sigma+', 'Pi', ... for |mJ| = 0..5."""
    base = _SYMBOLS[abs(mJ)]
    return base + (reflection or "") if mJ == 0 else base


def parse_symmetry_label(text):
    """'Sigma+' -> (0, '+'), 'Pi' -> (1, None)."""
    m = re.fullmatch(r"\s*([A-Za-z]+)\s*([+-]?)\s*", text)
    if not m or m.group(1).lower() not in _LOOKUP:
        raise ValueError(f"unknown symmetry label {text!r}")
    return _LOOKUP[m.group(1).lower()], (m.group(2) or None)


@dataclass(frozen=True)
class SymmetryState:
    """Zeroth-order eigenvector sum_{mj, lambda} c |mj, lambda> of one symmetry block."""

    mJ: int
    reflection: str | None
    j: int
    ell: int
    coefficients: tuple  # ((mj, lam, c), ...)
    c5: float = 0.0
    c6_ref: float | None = None
    atom: str = "excited"

    @property
    def label(self):
        return symmetry_label(self.mJ, self.reflection)

    @property
    def key(self):
        return f"{self.label}/{self.j}"


@dataclass(frozen=True)
class Dataset:
    atom_ground: AtomicSystem | None
    atom_excited: AtomicSystem | None
    molecule: TransitionListSource | GridSource | None
    core: ConstantCore | EffectiveCore | None
    states: tuple
    b_rot: float  # hartree
    r2_expectations: dict = field(default_factory=dict)
    notes: tuple = ()

    def atom(self, which):
        if which not in ("ground", "excited"):
            raise ValueError(f"atom must be 'ground' or 'excited', got {which!r}")
        return self.atom_ground if which == "ground" else self.atom_excited


# ------------------------------------------------------------------ errors

class DatasetParseError(ValueError):
    def __init__(self, message, line=None, source="<string>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


class DatasetValidationError(ValueError):
    def __init__(self, report):
        self.report = report
        lines = [f"  {f.record}: {f.message}" for f in report.failures]
        super().__init__("dataset failed validation:\n" + "\n".join(lines))


@dataclass(frozen=True)
class Check:
    record: str
    message: str
    ok: bool


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def add(self, record, ok, message):
        self.checks.append(Check(record, message, bool(ok)))

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self):
        return not self.failures

    def format(self):
        if self.ok:
            return f"OK: {len(self.checks)} checks passed"
        return "\n".join(f"FAIL {c.record}: {c.message}" for c in self.failures)


# ------------------------------------------------------------------ parsing

_SECTION = re.compile(r"^\[\s*([A-Za-z0-9_.\-]+)\s*\]$")
_ATOM_SECTION = re.compile(r"^atom\.(ground|excited)\.(levels|transitions)$")
_KNOWN = {"constants", "molecule.polarizability", "core", "states"}


@dataclass
class _Record:
    line: int
    fields: dict  # key -> (value, line)


def _split_records(text, source):
    sections = {}
    current = None
    record = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = re.sub(r"(^|\s)#.*$", "", raw).strip()
        if not line:
            record = None
            continue
        m = _SECTION.match(line)
        if m:
            name = m.group(1)
            if name not in _KNOWN and not _ATOM_SECTION.match(name):
                raise DatasetParseError(f"unknown section [{name}]", lineno, source)
            if name in sections:
                raise DatasetParseError(f"duplicate section [{name}]", lineno, source)
            current = sections[name] = []
            record = None
            continue
        if current is None:
            raise DatasetParseError("content before the first section header", lineno, source)
        if "=" not in line:
            raise DatasetParseError(f"expected 'key = value', got {line!r}", lineno, source)
        key, value = (s.strip() for s in line.split("=", 1))
        if not key or not value:
            raise DatasetParseError(f"empty key or value in {line!r}", lineno, source)
        if record is None:
            record = _Record(lineno, {})
            current.append(record)
        if key in record.fields:
            raise DatasetParseError(f"duplicate key {key!r} in record", lineno, source)
        record.fields[key] = (value, lineno)
    return sections


class _Fields:
    """Typed accessors with line-numbered errors for one record."""

    def __init__(self, rec, section, source):
        self.rec, self.section, self.source = rec, section, source
        self.used = set()

    def _get(self, key, required=True):
        if key not in self.rec.fields:
            if required:
                raise DatasetParseError(f"[{self.section}] record missing field {key!r}", self.rec.line, self.source)
            return None, self.rec.line
        self.used.add(key)
        return self.rec.fields[key]

    def err(self, key, msg):
        line = self.rec.fields.get(key, (None, self.rec.line))[1]
        return DatasetParseError(f"[{self.section}] field {key!r}: {msg}", line, self.source)

    def str(self, key, required=True):
        return self._get(key, required)[0]

    def int(self, key, required=True):
        v, _ = self._get(key, required)
        if v is None:
            return None
        try:
            return int(v)
        except ValueError:
            raise self.err(key, f"expected an integer, got {v!r}") from None

    def float(self, key, required=True):
        v, _ = self._get(key, required)
        if v is None:
            return None
        try:
            return float(v)
        except ValueError:
            raise self.err(key, f"expected a number, got {v!r}") from None

    def ints(self, key):
        v, _ = self._get(key)
        try:
            return [int(t) for t in v.split()]
        except ValueError:
            raise self.err(key, f"expected integers, got {v!r}") from None

    def floats(self, key):
        v, _ = self._get(key)
        try:
            return [float(t) for t in v.split()]
        except ValueError:
            raise self.err(key, f"expected numbers, got {v!r}") from None

    def energy(self, key, required=True, array=False):
        v, _ = self._get(key, required)
        if v is None:
            return None
        toks = v.split()
        if len(toks) < 2:
            raise self.err(key, "energy needs an explicit unit tag ('au' or 'cm-1')")
        unit = toks[-1]
        if unit not in _UNITS:
            raise self.err(key, f"unknown energy unit {unit!r} (expected 'au' or 'cm-1')")
        try:
            vals = [float(t) for t in toks[:-1]]
        except ValueError:
            raise self.err(key, f"expected numbers, got {v!r}") from None
        if not array:
            if len(vals) != 1:
                raise self.err(key, "expected a single value")
            return to_au(vals[0], unit)
        return to_au(np.array(vals), unit)

    def finish(self):
        extra = set(self.rec.fields) - self.used
        if extra:
            key = sorted(extra)[0]
            raise self.err(key, "unknown field")


def _parse_atom(name, level_recs, trans_recs, source):
    levels = {}
    for rec in level_recs:
        f = _Fields(rec, f"atom.{name}.levels", source)
        lev = AtomicLevel(f.str("label"), f.int("n"), f.int("l"), f.energy("energy"))
        f.finish()
        if lev.label in levels:
            raise DatasetParseError(f"duplicate level label {lev.label!r}", rec.line, source)
        levels[lev.label] = lev
    trans = []
    for rec in trans_recs:
        f = _Fields(rec, f"atom.{name}.transitions", source)
        a, b = f.str("from"), f.str("to")
        r = f.float("radial")
        de = f.energy("delta_e", required=False)
        f.finish()
        # unresolved references become placeholders; validation reports them
        lo = levels.get(a, AtomicLevel(a, -1, -1, math.nan))
        hi = levels.get(b, AtomicLevel(b, -1, -1, math.nan))
        if de is None:
            de = hi.energy - lo.energy
        trans.append(AtomicTransition(lo, hi, de, r))
    return AtomicSystem(name, tuple(levels.values()), tuple(trans))


def _parse_molecule(recs, source):
    kind = None
    data = []
    for rec in recs:
        if "kind" in rec.fields:
            kind = rec.fields["kind"][0]
            rec = _Record(rec.line, {k: v for k, v in rec.fields.items() if k != "kind"})
            if not rec.fields:
                continue
        data.append(rec)
    if kind not in ("transitions", "grid"):
        line = recs[0].line if recs else None
        raise DatasetParseError("[molecule.polarizability] needs 'kind = transitions' or 'kind = grid'", line, source)
    if kind == "transitions":
        out = []
        for rec in data:
            f = _Fields(rec, "molecule.polarizability", source)
            t = MolecularTransition(f.energy("delta_e"), f.float("dipole"), f.str("orientation"))
            f.finish()
            out.append(t)
        return TransitionListSource(tuple(out))
    if len(data) != 1:
        raise DatasetParseError("grid source takes exactly one record", data[1].line if len(data) > 1 else None, source)
    f = _Fields(data[0], "molecule.polarizability", source)
    omega = f.energy("omega", array=True)
    par = np.array(f.floats("alpha_par"))
    perp = np.array(f.floats("alpha_perp"))
    f.finish()
    if not (len(omega) == len(par) == len(perp)):
        raise DatasetParseError("omega, alpha_par and alpha_perp lengths differ", data[0].line, source)
    return GridSource(omega, par, perp)


def _parse_core(recs, source):
    if len(recs) != 1:
        raise DatasetParseError("[core] takes exactly one record", recs[-1].line if recs else None, source)
    f = _Fields(recs[0], "core", source)
    kind = f.str("kind")
    if kind == "constant":
        core = ConstantCore(f.float("alpha"))
    elif kind == "effective":
        core = EffectiveCore(f.energy("delta_e"), f.float("strength"))
    else:
        raise f.err("kind", f"expected 'constant' or 'effective', got {kind!r}")
    f.finish()
    return core


def _parse_states(recs, source):
    states = []
    for rec in recs:
        f = _Fields(rec, "states", source)
        try:
            mJ, refl = parse_symmetry_label(f.str("symmetry"))
        except ValueError as exc:
            raise f.err("symmetry", str(exc)) from None
        j, ell = f.int("j"), f.int("ell")
        mj, lam, c = f.ints("mj"), f.ints("lambda"), f.floats("c")
        if not (len(mj) == len(lam) == len(c)):
            raise f.err("c", "mj, lambda and c must have equal lengths")
        c5 = f.float("c5", required=False) or 0.0
        c6_ref = f.float("c6_ref", required=False)
        atom = f.str("atom", required=False) or "excited"
        f.finish()
        states.append(SymmetryState(mJ, refl, j, ell, tuple(zip(mj, lam, c)), c5, c6_ref, atom))
    return tuple(states)


def loads_dataset(text, source="<string>", validate=True):
    """Parse dataset text; see :func:`load_dataset`."""
    sections = _split_records(text, source)
    b_rot = None
    r2 = {}
    for rec in sections.get("constants", []):
        f = _Fields(rec, "constants", source)
        for key in list(rec.fields):
            if key == "b_rot":
                b_rot = f.energy("b_rot")
            elif key.startswith("r2."):
                r2[key[3:]] = f.float(key)
        f.finish()
    if b_rot is None:
        raise DatasetParseError("[constants] must define b_rot", None, source)

    atoms = {}
    for name in ("ground", "excited"):
        lv = sections.get(f"atom.{name}.levels")
        tr = sections.get(f"atom.{name}.transitions")
        if lv is None and tr is None:
            atoms[name] = None
        else:
            atoms[name] = _parse_atom(name, lv or [], tr or [], source)

    mol = sections.get("molecule.polarizability")
    core = sections.get("core")
    notes = tuple(
        line[1:].strip() for line in text.splitlines() if line.startswith("#")
    )
    ds = Dataset(
        atom_ground=atoms["ground"],
        atom_excited=atoms["excited"],
        molecule=_parse_molecule(mol, source) if mol is not None else None,
        core=_parse_core(core, source) if core is not None else None,
        states=_parse_states(sections.get("states", []), source),
        b_rot=b_rot,
        r2_expectations=r2,
        notes=notes,
    )
    if validate:
        report = validate_dataset(ds)
        if not report.ok:
            raise DatasetValidationError(report)
    return ds


def load_dataset(path, validate=True):
    """Read, convert to atomic units and validate a dataset file.

    Raises
    ------
    DatasetParseError
        Malformed syntax, missing fields, bad numbers or unit tags; the
        message carries the line number.
    DatasetValidationError
        Physical invariants violated; ``.report`` lists every failing record.
    """
    path = Path(path)
    return loads_dataset(path.read_text(), source=str(path), validate=validate)


def _fmt(x):
    return repr(float(x))


def dumps_dataset(d):
    """Serialize a dataset (all energies written in atomic units)."""
    out = [f"# {n}" for n in d.notes]
    out += ["[constants]", f"b_rot = {_fmt(d.b_rot)} au"]
    out += [f"r2.{k} = {_fmt(v)}" for k, v in d.r2_expectations.items()]
    for name in ("ground", "excited"):
        sysm = d.atom(name)
        if sysm is None:
            continue
        out += ["", f"[atom.{name}.levels]"]
        for lev in sysm.levels:
            out += [f"label = {lev.label}", f"n = {lev.n}", f"l = {lev.l}", f"energy = {_fmt(lev.energy)} au", ""]
        out += [f"[atom.{name}.transitions]"]
        for t in sysm.transitions:
            out += [f"from = {t.initial.label}", f"to = {t.final.label}",
                    f"radial = {_fmt(t.radial_element)}", f"delta_e = {_fmt(t.delta_e)} au", ""]
    if d.molecule is not None:
        out += ["", "[molecule.polarizability]", f"kind = {d.molecule.kind}", ""]
        if isinstance(d.molecule, TransitionListSource):
            for t in d.molecule.transitions:
                out += [f"delta_e = {_fmt(t.delta_e)} au", f"dipole = {_fmt(t.dipole)}",
                        f"orientation = {t.orientation}", ""]
        else:
            g = d.molecule
            out += ["omega = " + " ".join(_fmt(v) for v in g.omega) + " au",
                    "alpha_par = " + " ".join(_fmt(v) for v in g.alpha_par),
                    "alpha_perp = " + " ".join(_fmt(v) for v in g.alpha_perp), ""]
    if d.core is not None:
        out += ["", "[core]", f"kind = {d.core.kind}"]
        if isinstance(d.core, ConstantCore):
            out += [f"alpha = {_fmt(d.core.alpha_c)}"]
        else:
            out += [f"delta_e = {_fmt(d.core.delta_e)} au", f"strength = {_fmt(d.core.strength)}"]
    if d.states:
        out += ["", "[states]"]
        for s in d.states:
            out += [f"symmetry = {s.label}", f"j = {s.j}", f"ell = {s.ell}",
                    "mj = " + " ".join(str(r[0]) for r in s.coefficients),
                    "lambda = " + " ".join(str(r[1]) for r in s.coefficients),
                    "c = " + " ".join(_fmt(r[2]) for r in s.coefficients),
                    f"c5 = {_fmt(s.c5)}"]
            if s.c6_ref is not None:
                out.append(f"c6_ref = {_fmt(s.c6_ref)}")
            if s.atom != "excited":
                out.append(f"atom = {s.atom}")
            out.append("")
    return "\n".join(out).rstrip() + "\n"


def save_dataset(d, path):
    Path(path).write_text(dumps_dataset(d))


def shipped_dataset_path():
    """Path of the Cs + Cs2 example dataset installed with the package."""
    return Path(str(resources.files("atomdimer.data").joinpath("cs_cs2.dat")))


def load_shipped_dataset():
    return load_dataset(shipped_dataset_path())


# ------------------------------------------------------------------ validation

def _validate_atom(rep, sysm):
    tag = f"atom.{sysm.name}"
    labels = {lev.label for lev in sysm.levels}
    for lev in sysm.levels:
        rec = f"{tag} level {lev.label}"
        rep.add(rec, lev.l >= 0, f"orbital momentum l={lev.l} must be >= 0")
        rep.add(rec, math.isfinite(lev.energy), "energy must be finite")
    initial = {t.initial.label for t in sysm.transitions}
    rep.add(tag, len(initial) <= 1,
            f"all transitions must start from one reference level, found {sorted(initial)}")
    for t in sysm.transitions:
        rec = f"{tag} transition {t.name}"
        missing = [x for x in (t.initial.label, t.final.label) if x not in labels]
        rep.add(rec, not missing, f"references unknown level(s) {missing}")
        if missing:
            continue
        rep.add(rec, abs(t.lp - t.l) == 1,
                f"not dipole-allowed: l={t.l} -> l'={t.lp} (|delta l| must be 1)")
        rep.add(rec, t.radial_element >= 0 and math.isfinite(t.radial_element),
                f"radial element {t.radial_element} must be finite and >= 0")
        rep.add(rec, t.delta_e != 0 and math.isfinite(t.delta_e), "transition energy must be finite and non-zero")


def _validate_molecule(rep, mol):
    if isinstance(mol, TransitionListSource):
        for i, t in enumerate(mol.transitions):
            rec = f"molecule transition #{i + 1}"
            rep.add(rec, t.delta_e > 0,
                    f"delta_e={t.delta_e} must be > 0 (ground-state dimer has only upward transitions)")
            rep.add(rec, t.orientation in ("parallel", "perpendicular"),
                    f"orientation {t.orientation!r} must be 'parallel' or 'perpendicular'")
            rep.add(rec, math.isfinite(t.dipole), "dipole must be finite")
        return
    g = mol
    rec = "molecule grid"
    w = np.asarray(g.omega)
    rep.add(rec, len(w) >= 2, "grid needs at least two points")
    rep.add(rec, len(w) > 0 and w[0] == 0.0, "grid must start at omega = 0")
    rep.add(rec, bool(np.all(np.diff(w) > 0)), "omega grid must be strictly increasing")
    rep.add(rec, bool(np.all(np.isfinite(g.alpha_par)) and np.all(np.isfinite(g.alpha_perp))),
            "alpha values must be finite")
    rep.add(rec, len(w) > 0 and g.alpha_par[0] > 0 and g.alpha_perp[0] > 0,
            "static alpha_par and alpha_perp must be positive")


def _validate_state(rep, s, d, idx):
    rec = f"state #{idx + 1} {s.key}"
    rows = s.coefficients
    rep.add(rec, s.j >= 0, f"j={s.j} must be >= 0")
    rep.add(rec, s.mJ >= 0, f"mJ={s.mJ} must be stored as >= 0")
    if s.mJ == 0:
        rep.add(rec, s.reflection in ("+", "-"), "mJ = 0 state needs a +/- reflection parity")
    else:
        rep.add(rec, s.reflection is None, "reflection parity is only allowed for mJ = 0")
    rep.add(rec, bool(rows), "state has no coefficient rows")
    if rows:
        totals = {mj + lam for mj, lam, _ in rows}
        rep.add(rec, len(totals) == 1 and abs(next(iter(totals))) == s.mJ,
                f"mj + lambda must be the constant +/-mJ={s.mJ}, got {sorted(totals)}")
        for mj, lam, _ in rows:
            rep.add(rec, abs(mj) <= s.j, f"|mj|={abs(mj)} exceeds j={s.j}")
            rep.add(rec, abs(lam) <= s.ell, f"|lambda|={abs(lam)} exceeds ell={s.ell}")
        norm = sum(c * c for _, _, c in rows)
        rep.add(rec, abs(norm - 1.0) <= 1e-10, f"unnormalized eigenvector (sum c^2 = {norm:.12g})")
        keys = [(mj, lam) for mj, lam, _ in rows]
        rep.add(rec, len(set(keys)) == len(keys), "duplicate (mj, lambda) rows")
    if s.atom not in ("ground", "excited"):
        rep.add(rec, False, f"atom must be 'ground' or 'excited', got {s.atom!r}")
        return
    sysm = d.atom(s.atom)
    if sysm is not None and sysm.transitions:
        rep.add(rec, sysm.l == s.ell, f"ell={s.ell} does not match the {s.atom} atom level (l={sysm.l})")


def validate_dataset(d):
    """Check every invariant of a dataset; never raises, returns a report."""
    rep = ValidationReport()
    rep.add("constants", d.b_rot > 0 and math.isfinite(d.b_rot), f"b_rot={d.b_rot} must be > 0")
    for k, v in d.r2_expectations.items():
        rep.add(f"constants r2.{k}", v >= 0, f"<r^2>={v} must be >= 0")
    for name in ("ground", "excited"):
        if d.atom(name) is not None:
            _validate_atom(rep, d.atom(name))
    if d.molecule is not None:
        _validate_molecule(rep, d.molecule)
    if isinstance(d.core, ConstantCore):
        rep.add("core", d.core.alpha_c >= 0, f"alpha_c={d.core.alpha_c} must be >= 0")
    elif isinstance(d.core, EffectiveCore):
        rep.add("core", d.core.delta_e > 0 and d.core.strength > 0,
                "effective core needs delta_e > 0 and strength > 0")
    for i, s in enumerate(d.states):
        _validate_state(rep, s, d, i)
    return rep


# ------------------------------------------------------------------ single oscillator

def fit_single_oscillator(alpha_static, c6_homo):
    """One-transition S-state model with the given static alpha and homonuclear C6.

    ``c6_homo`` is the magnitude of the atom-atom dispersion coefficient.

    Returns
    -------
    (delta_e, radial_element)
        Transition energy (hartree) and S-P radial matrix element (bohr), from
        dE = 4 C6 / (3 alpha^2) and r^2 = 3 alpha dE / 2.
    """
    if not (alpha_static > 0 and c6_homo > 0):
        raise ValueError(f"need alpha_static > 0 and c6_homo > 0, got {alpha_static}, {c6_homo}")
    de = 4.0 * c6_homo / (3.0 * alpha_static**2)
    return de, math.sqrt(1.5 * alpha_static * de)


def single_oscillator_atom(alpha_static, c6_homo, name="ground"):
    de, r = fit_single_oscillator(alpha_static, c6_homo)
    s = AtomicLevel("S", 0, 0, 0.0)
    p = AtomicLevel("P_eff", 0, 1, de)
    return AtomicSystem(name, (s, p), (AtomicTransition(s, p, de, r),))
