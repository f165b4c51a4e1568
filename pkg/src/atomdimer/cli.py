"""Command-line interface: ``atomdimer {validate,c6,curves,oracle-check}``.

Exit status is 0 on success, 1 when the data fail validation or a physics
check, and 2 for missing files and other I/O problems. Printed C5/C6 are in
atomic units, energies in cm-1 and distances in bohr, all with 12
significant digits.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .curves import (
    DEFAULT_WINDOW,
    PotentialCurve,
    crossings_by_symmetry,
    curve_labels,
    emit_curve_table,
    find_extrema,
    load_curves,
    published_curves,
)
from .dispersion import QuadratureRule, c6_crossed, c6_ground_atom, c6_oracle, c6_total
from .models import random_model
from .polar import CapabilityError
from .specdata import (
    DatasetParseError,
    DatasetValidationError,
    load_dataset,
    parse_symmetry_label,
    shipped_dataset_path,
    symmetry_label,
    validate_dataset,
)

EXIT_OK, EXIT_FAIL, EXIT_IO = 0, 1, 2
ORACLE_TOLERANCE = 1e-6


class CliError(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


@dataclass(frozen=True)
class RunConfig:
    command: str
    dataset: Path | None
    nodes: int = 64
    out: Path | None = None
    rmin: float = 30.0
    rmax: float = 3000.0
    points: int = 200
    scale: str = "log"
    analyze: bool = False
    atom: str = "excited"
    gnuplot: Path | None = None
    curves: str | None = None
    j: tuple = ()
    symmetry: str | None = None
    oracle: bool = False
    random: int = 0
    seed: int = 0
    delimiter: str = ","

    def __post_init__(self):
        if self.nodes < 8:
            raise CliError(f"--nodes must be >= 8, got {self.nodes}", EXIT_FAIL)
        if self.command not in COMMANDS:
            raise CliError(f"unknown command {self.command!r}", EXIT_FAIL)


def _g(x):
    return f"{x:.12g}"


def _write(cfg, text):
    if cfg.out is None:
        sys.stdout.write(text)
        return
    try:
        Path(cfg.out).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {cfg.out}: {exc}", EXIT_IO) from None


def _load(cfg, validate=True):
    path = Path(cfg.dataset)
    if not path.is_file():
        raise CliError(f"dataset not found: {path}", EXIT_IO)
    try:
        return load_dataset(path, validate=validate)
    except DatasetParseError as exc:
        raise CliError(str(exc), EXIT_FAIL) from None
    except DatasetValidationError as exc:
        raise CliError(f"{path}: validation failed\n{exc.report.format()}", EXIT_FAIL) from None
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from None


_SYMMETRY_ORDER = {"Sigma+": (0, 0), "Sigma-": (0, 1)}


def _sym_key(label):
    if label in _SYMMETRY_ORDER:
        return _SYMMETRY_ORDER[label]
    mJ, _ = parse_symmetry_label(label)
    return (mJ, 0)


def _ordered_states(d):
    idx = sorted(range(len(d.states)), key=lambda i: (_sym_key(d.states[i].label), d.states[i].j, i))
    return [d.states[i] for i in idx]


# ------------------------------------------------------------------ commands

def cmd_validate(cfg):
    d = _load(cfg, validate=False)
    report = validate_dataset(d)
    _write(cfg, report.format() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _ground_rows(cfg, d, rule):
    js = cfg.j or (0, 1, 2, 3, 4)
    lines = ["# C6 of the ground atom + dimer (au); mJ = mj",
             "# " + cfg.delimiter.join(["symmetry", "j", "mj", "C6"])]
    for j in js:
        for mj in range(j + 1):
            label = symmetry_label(mj, "+")
            if cfg.symmetry and label != cfg.symmetry:
                continue
            c6 = c6_ground_atom(d, j, mj, rule)
            lines.append(cfg.delimiter.join([label, str(j), str(mj), _g(c6)]))
    return lines


def _state_oracle(d, s):
    total = 0.0
    for mj1, l1, c1 in s.coefficients:
        for mj2, l2, c2 in s.coefficients:
            total += c1 * c2 * c6_oracle(d, s.j, mj1, l1, mj2, l2, s.atom)
    return total


def cmd_c6(cfg):
    d = _load(cfg)
    rule = QuadratureRule(cfg.nodes)
    status = EXIT_OK
    if cfg.atom == "ground":
        lines = _ground_rows(cfg, d, rule)
    else:
        if not d.states:
            raise CliError("dataset defines no [states]", EXIT_FAIL)
        cols = ["symmetry", "j", "row", "C5", "C6", "valence", "downward", "core"]
        if cfg.oracle:
            cols += ["valence+downward", "sum_over_states", "rel_diff"]
        lines = ["# C5, C6 and the C6 parts in au", "# " + cfg.delimiter.join(cols)]
        for row, s in enumerate(_ordered_states(d)):
            if cfg.j and s.j not in cfg.j or cfg.symmetry and s.label != cfg.symmetry:
                continue
            try:
                r = c6_total(d, s, rule)
                fields = [s.label, str(s.j), str(row), _g(s.c5), _g(r.total),
                          _g(r.valence_integral), _g(r.downward_term), _g(r.core_term)]
                if cfg.oracle:
                    crossed = r.valence_integral + r.downward_term
                    ref = _state_oracle(d, s)
                    rel = abs(crossed - ref) / max(abs(ref), 1e-300)
                    if rel > ORACLE_TOLERANCE:
                        status = EXIT_FAIL
                    fields += [_g(crossed), _g(ref), f"{rel:.3e}"]
            except (ValueError, ArithmeticError) as exc:
                raise CliError(f"state {s.key} (row {row}): {exc}", EXIT_FAIL) from None
            lines.append(cfg.delimiter.join(fields))
    _write(cfg, "\n".join(lines) + "\n")
    return status


def _curve_set(cfg):
    if cfg.curves in ("table1", "table2"):
        curves = published_curves(_load(cfg).b_rot, cfg.curves)
    elif cfg.curves is not None:
        d = _load(cfg)
        path = Path(cfg.curves)
        if not path.is_file():
            raise CliError(f"curve file not found: {path}", EXIT_IO)
        try:
            curves = load_curves(path, d.b_rot)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_FAIL) from None
    else:
        d = _load(cfg)
        if not d.states:
            raise CliError("dataset defines no [states]; supply --curves", EXIT_FAIL)
        rule = QuadratureRule(cfg.nodes)
        curves = [PotentialCurve(s.label, s.j, s.c5, c6_total(d, s, rule).total, d.b_rot)
                  for s in _ordered_states(d)]
    if cfg.symmetry:
        curves = [c for c in curves if c.symmetry == cfg.symmetry]
    if cfg.j:
        curves = [c for c in curves if c.j in cfg.j]
    if not curves:
        raise CliError("no curves selected", EXIT_FAIL)
    return curves


def _feature_report(cfg, curves):
    dl = cfg.delimiter
    lines = ["#", "# features: kind, curve, partner, R (bohr), V (cm-1), V - asymptote (cm-1)"]
    for label, c in zip(curve_labels(curves), curves):
        for f in find_extrema(c):
            lines.append("# " + dl.join([f.kind, label, "", _g(f.r), _g(f.value_cm), _g(f.relative_cm)]))
    for f in crossings_by_symmetry(curves, cfg.rmin, cfg.rmax):
        lines.append("# " + dl.join([f.kind, f.curve, f.partner, _g(f.r), _g(f.value_cm), _g(f.relative_cm)]))
    return "\n".join(lines) + "\n"


def gnuplot_script(table_path, labels, delimiter=",", logscale=True):
    """A gnuplot script plotting every column of a curve table against R."""
    plots = ", \\\n     ".join(
        f"'{table_path}' using 1:{k + 2} with lines title '{lab}'" for k, lab in enumerate(labels)
    )
    return "\n".join([
        f"set datafile separator '{delimiter}'",
        "set datafile commentschars '#'",
        "set xlabel 'R (bohr)'",
        "set ylabel 'V (cm^{-1})'",
        "set logscale x" if logscale else "unset logscale x",
        f"plot {plots}",
        "",
    ])


def cmd_curves(cfg):
    curves = _curve_set(cfg)
    try:
        text = emit_curve_table(curves, cfg.rmin, cfg.rmax, cfg.points, cfg.scale).to_text(cfg.delimiter)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_FAIL) from None
    if cfg.analyze:
        text += _feature_report(cfg, curves)
    _write(cfg, text)
    if cfg.gnuplot is not None:
        if cfg.out is None:
            raise CliError("--gnuplot needs --out so the script can reference the table", EXIT_FAIL)
        script = gnuplot_script(cfg.out, curve_labels(curves), cfg.delimiter, cfg.scale == "log")
        try:
            Path(cfg.gnuplot).write_text(script)
        except OSError as exc:
            raise CliError(f"cannot write {cfg.gnuplot}: {exc}", EXIT_IO) from None
    return EXIT_OK


def cmd_oracle_check(cfg):
    """Factorized vs explicit-sum C6 for the dataset states and for random models."""
    lines = ["# " + cfg.delimiter.join(["case", "factorized", "sum_over_states", "rel_diff"])]
    worst = 0.0

    def record(name, a, b):
        nonlocal worst
        rel = abs(a - b) / max(abs(b), 1e-300)
        worst = max(worst, rel)
        lines.append(cfg.delimiter.join([name, _g(a), _g(b), f"{rel:.3e}"]))

    rule = QuadratureRule(cfg.nodes)
    if cfg.dataset is not None:
        d = _load(cfg)
        for s in _ordered_states(d):
            try:
                r = c6_total(d, s, rule)
                record(s.key, r.valence_integral + r.downward_term, _state_oracle(d, s))
            except CapabilityError as exc:
                raise CliError(f"state {s.key}: {exc}", EXIT_FAIL) from None
    rng = np.random.default_rng(cfg.seed)
    for k in range(cfg.random):
        d, sub = random_model(rng)
        ref = c6_oracle(d, *sub)
        if ref == 0.0:
            continue
        record(f"random{k}:" + ":".join(map(str, sub)), c6_crossed(d, *sub, rule=rule), ref)
    lines.append(f"# worst relative difference {worst:.3e} (tolerance {ORACLE_TOLERANCE:g})")
    _write(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if worst <= ORACLE_TOLERANCE else EXIT_FAIL


COMMANDS = {"validate": cmd_validate, "c6": cmd_c6, "curves": cmd_curves, "oracle-check": cmd_oracle_check}


# ------------------------------------------------------------------ parsing

def build_parser():
    p = argparse.ArgumentParser(prog="atomdimer", description="Atom + rotating dimer long-range coefficients.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--dataset", type=Path, default=None,
                        help="dataset file (default: the shipped Cs + Cs2 example)")
        sp.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
        sp.add_argument("--delimiter", default=",", help="column delimiter (default: comma)")
        return sp

    common(sub.add_parser("validate", help="check a dataset and list every failing record"))

    c6 = common(sub.add_parser("c6", help="C6 for every symmetry state of the dataset"))
    c6.add_argument("--nodes", type=int, default=64, help="Gauss-Legendre nodes (default 64)")
    c6.add_argument("--atom", choices=("ground", "excited"), default="excited",
                    help="ground: S atom (Table-I style rows); excited: dataset [states]")
    c6.add_argument("--j", type=int, nargs="+", default=(), help="restrict to these rotational levels")
    c6.add_argument("--symmetry", default=None, help="restrict to one symmetry label, e.g. Sigma+")
    c6.add_argument("--oracle", action="store_true", help="also print the explicit sum-over-states value")

    cv = common(sub.add_parser("curves", help="tabulate B j(j+1) + C5/R^5 + C6/R^6"))
    cv.add_argument("--curves", default=None,
                    help="CSV with symmetry,j,c5,c6 or 'table1'/'table2' for the published tables "
                         "(default: compute C6 from the dataset states)")
    cv.add_argument("--nodes", type=int, default=64)
    cv.add_argument("--rmin", type=float, default=DEFAULT_WINDOW[0])
    cv.add_argument("--rmax", type=float, default=DEFAULT_WINDOW[1])
    cv.add_argument("--points", type=int, default=200)
    cv.add_argument("--scale", choices=("linear", "log"), default="log")
    cv.add_argument("--analyze", action="store_true", help="append extrema and same-symmetry crossings")
    cv.add_argument("--gnuplot", type=Path, default=None, help="also write a gnuplot script here")
    cv.add_argument("--j", type=int, nargs="+", default=())
    cv.add_argument("--symmetry", default=None)

    oc = common(sub.add_parser("oracle-check", help="factorized C6 vs explicit sum over states"))
    oc.add_argument("--nodes", type=int, default=64)
    oc.add_argument("--random", type=int, default=0, help="also check this many random finite models")
    oc.add_argument("--seed", type=int, default=0)
    return p


def config_from_args(args):
    kw = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    kw["j"] = tuple(kw.get("j", ()))
    if args.dataset is None and not (args.command == "oracle-check" and args.random):
        kw["dataset"] = shipped_dataset_path()
    else:
        kw["dataset"] = args.dataset
    return RunConfig(**kw)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"atomdimer: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
