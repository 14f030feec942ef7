"""Matrix files, problem configs and report formatting.

Matrix files are UTF-8 comma-separated values. The header row is
``alternative`` followed by the criterion names; every other row is an
alternative id followed by one number per criterion (decimal point, no
thousands separators).

Config files are INI-style::

    [problem]
    matrix = l1_students.csv      ; relative to the config file
    method = cocofiso             ; cocoso | cocofiso | wsm | topsis | promethee2
    lambda = 0.5
    tie_tol = 1e-9
    auto_repair = false
    paper_exact_weights = false

    [criterion PC]
    direction = benefit           ; benefit | cost
    weight = 0.45

One ``[criterion NAME]`` section per matrix column. Every criterion named
in the matrix header needs a section and vice versa.
"""

from __future__ import annotations

import configparser
import csv
import io as _io
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from .core import DEFAULT_TIE_TOL, CriterionSpec, DecisionMatrix, Direction, Ranking, validate
from .exceptions import ConfigError, MatrixParseError

METHODS = ("cocoso", "cocofiso", "wsm", "topsis", "promethee2")
HEADER_ID = "alternative"


def _parse_rows(text: str, path=None):
    reader = csv.reader(_io.StringIO(text))
    rows = [(reader.line_num, row) for row in reader]
    rows = [(ln, r) for ln, r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise MatrixParseError("empty matrix file", path=path)
    ln, header = rows[0]
    header = [h.strip() for h in header]
    if len(header) < 2:
        raise MatrixParseError("header needs an id column and at least one criterion",
                               line=ln, path=path)
    names = header[1:]
    if any(not n for n in names):
        raise MatrixParseError("empty criterion name in header", line=ln, path=path)
    ids, values = [], []
    for ln, row in rows[1:]:
        if len(row) != len(header):
            raise MatrixParseError(f"ragged row: expected {len(header)} fields, got {len(row)}",
                                   line=ln, path=path)
        ids.append(row[0].strip())
        vals = []
        for col, cell in enumerate(row[1:], start=2):
            try:
                v = float(cell.strip())
            except ValueError:
                raise MatrixParseError(f"non-numeric cell {cell!r}", line=ln, column=col,
                                       path=path) from None
            if not math.isfinite(v):
                raise MatrixParseError(f"non-finite cell {cell!r}", line=ln, column=col, path=path)
            vals.append(v)
        values.append(vals)
    return names, ids, values


def load_matrix(path, criteria: Sequence[CriterionSpec] | None = None,
                weight_sum_waived: bool = False) -> DecisionMatrix:
    """Read a matrix file.

    ``criteria`` supplies directions and weights, matched by name to the
    header; reordered to header order. Without it every criterion is a
    benefit criterion with equal weight.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise MatrixParseError(f"cannot read file: {exc.strerror or exc}", path=path) from exc
    return parse_matrix(text, criteria, weight_sum_waived, path=path)


def parse_matrix(text: str, criteria: Sequence[CriterionSpec] | None = None,
                 weight_sum_waived: bool = False, path=None) -> DecisionMatrix:
    names, ids, values = _parse_rows(text, path)
    if criteria is None:
        specs = tuple(CriterionSpec(n, Direction.BENEFIT, 1.0 / len(names)) for n in names)
    else:
        by_name = {c.name: c for c in criteria}
        missing = [n for n in names if n not in by_name]
        extra = [n for n in by_name if n not in names]
        if missing or extra:
            raise ConfigError("criteria do not match matrix header"
                              + (f"; missing: {', '.join(missing)}" if missing else "")
                              + (f"; not in matrix: {', '.join(extra)}" if extra else ""))
        specs = tuple(by_name[n] for n in names)
    grid = np.array(values, dtype=float).reshape(len(ids), len(names))
    return DecisionMatrix(tuple(ids), specs, grid, weight_sum_waived)


def format_matrix(matrix: DecisionMatrix) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([HEADER_ID, *matrix.names])
    for a, row in zip(matrix.alternatives, matrix.values):
        w.writerow([a, *(repr(float(v)) for v in row)])
    return buf.getvalue()


def write_matrix(matrix: DecisionMatrix, path) -> None:
    Path(path).write_text(format_matrix(matrix), encoding="utf-8")


def _bool(section, key, default=False):
    try:
        return section.getboolean(key, fallback=default)
    except ValueError:
        raise ConfigError(f"{key} must be true/false, got {section.get(key)!r}") from None


def _float(section, key, default):
    raw = section.get(key)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {raw!r}") from None


@dataclass
class ProblemConfig:
    matrix_path: Path
    criteria: tuple[CriterionSpec, ...]
    method: str = "cocofiso"
    lam: float = 0.5
    tie_tol: float = DEFAULT_TIE_TOL
    auto_repair: bool = False
    paper_exact_weights: bool = False
    extra: dict = field(default_factory=dict)

    def load(self) -> DecisionMatrix:
        """Load the matrix and check it against the active weight-sum mode."""
        m = load_matrix(self.matrix_path, self.criteria, self.paper_exact_weights)
        report = validate(m)
        if not report.ok:
            raise ConfigError("; ".join(f"{v.code}: {v.message}" for v in report.violations))
        return m


def parse_config(text: str, base_dir=".") -> ProblemConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from None
    if not cp.has_section("problem"):
        raise ConfigError("config needs a [problem] section")
    prob = cp["problem"]
    if not prob.get("matrix"):
        raise ConfigError("[problem] needs a 'matrix' path")
    matrix_path = Path(prob["matrix"])
    if not matrix_path.is_absolute():
        matrix_path = Path(base_dir) / matrix_path

    method = prob.get("method", "cocofiso").strip().lower()
    if method not in METHODS:
        raise ConfigError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")

    criteria = []
    for sec in cp.sections():
        if sec == "problem":
            continue
        kind, _, name = sec.partition(" ")
        if kind != "criterion" or not name.strip():
            raise ConfigError(f"unexpected section [{sec}]")
        s = cp[sec]
        try:
            direction = Direction.parse(s.get("direction", "benefit"))
        except ValueError as exc:
            raise ConfigError(f"[{sec}] {exc}") from None
        if "weight" not in s:
            raise ConfigError(f"[{sec}] needs a weight")
        criteria.append(CriterionSpec(name.strip(), direction, _float(s, "weight", None)))
    if not criteria:
        raise ConfigError("config defines no [criterion NAME] sections")

    lam = _float(prob, "lambda", 0.5)
    if not 0.0 <= lam <= 1.0:
        raise ConfigError(f"lambda must lie in [0, 1], got {lam}")
    known = {"matrix", "method", "lambda", "tie_tol", "auto_repair", "paper_exact_weights"}
    return ProblemConfig(
        matrix_path=matrix_path,
        criteria=tuple(criteria),
        method=method,
        lam=lam,
        tie_tol=_float(prob, "tie_tol", DEFAULT_TIE_TOL),
        auto_repair=_bool(prob, "auto_repair"),
        paper_exact_weights=_bool(prob, "paper_exact_weights"),
        extra={k: v for k, v in prob.items() if k not in known},
    )


def load_config(path) -> ProblemConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from exc
    return parse_config(text, path.parent)


# -- bundled datasets --------------------------------------------------------

def data_path(name: str) -> Path:
    return Path(str(resources.files("cocofiso") / "data" / name))


def load_dataset(group: str) -> DecisionMatrix:
    """Bundled student-allocation matrices: ``"l1"`` (27 x 5) or ``"l2"`` (26 x 5)."""
    group = group.lower()
    if group not in ("l1", "l2"):
        raise ValueError(f"unknown dataset {group!r}")
    return load_config(data_path(f"{group}.cfg")).load()


# -- reports -----------------------------------------------------------------

def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(widths[i]) if i == 0 else c.rjust(widths[i])
                       for i, c in enumerate(r)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(header, rows) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def ranking_report(ranking: Ranking, pretty: bool = False) -> str:
    rows = [(e.alternative, f"{e.score:.6f}", e.rank) for e in ranking]
    return (_table if pretty else _csv)(("alternative", "score", "rank"), rows)


def compare_report(results: dict, pretty: bool = False) -> str:
    """``results`` maps (method_a, method_b) -> (spearman, kendall, agreement)."""
    if not pretty:
        rows = [(a, b, f"{s:.6f}", f"{k:.6f}", f"{p:.2f}") for (a, b), (s, k, p) in results.items()]
        return _csv(("method_a", "method_b", "spearman", "kendall", "agreement_pct"), rows)
    ref = next(iter(results))[0]
    others = [b for (a, b) in results if a == ref]
    out = [_table([ref, *others, ""], [
        ["", *(f"{results[(ref, b)][0]:.2f}" for b in others), "Spearman"],
        ["", *(f"{results[(ref, b)][1]:.2f}" for b in others), "Kendall"],
        ["", *(f"{results[(ref, b)][2]:.1f}%" for b in others), "Agreement"],
    ])]
    rest = {k: v for k, v in results.items() if k[0] != ref}
    if rest:
        out.append("\n")
        out.append(_table(("method_a", "method_b", "spearman", "kendall", "agreement_pct"),
                          [(a, b, f"{s:.4f}", f"{k:.4f}", f"{p:.2f}")
                           for (a, b), (s, k, p) in rest.items()]))
    return "".join(out)


def sensitivity_report(report, pretty: bool = False) -> str:
    header = ("alternative", *report.labels)
    rows = [(a, *map(int, report.rank_matrix[i])) for i, a in enumerate(report.alternatives)]
    fmt = _table if pretty else _csv
    parts = [fmt(header, rows)]
    if report.stability is not None:
        srows = []
        for crit in report.stability.criteria:
            pct = report.stability.percentages(crit)
            srows.append((crit, *(f"{v:.2f}" for v in pct.values())))
        parts.append("\n")
        parts.append(fmt(("criterion", "S1_pct", "S2_pct", "S3_pct", "S4_pct"), srows))
    return "".join(parts)
