"""Decision-problem data model, structural validation and tie-aware ranking."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .exceptions import InvalidMatrix

WEIGHT_SUM_TOL = 1e-6
DEFAULT_TIE_TOL = 1e-9


class Direction(str, Enum):
    BENEFIT = "benefit"
    COST = "cost"

    @classmethod
    def parse(cls, value) -> "Direction":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown criterion direction {value!r}; "
                             "expected 'benefit' or 'cost'") from None


@dataclass(frozen=True)
class CriterionSpec:
    name: str
    direction: Direction = Direction.BENEFIT
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction.parse(self.direction))
        object.__setattr__(self, "weight", float(self.weight))

    @property
    def is_cost(self) -> bool:
        return self.direction is Direction.COST


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """Alternatives x criteria grid of raw performance values.

    ``values`` is stored as a read-only float array. Set
    ``weight_sum_waived`` to accept weights that do not add up to one
    (used to replay published weight sets verbatim).
    """

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    values: np.ndarray
    weight_sum_waived: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        arr = np.array(self.values, dtype=float)
        if arr.ndim == 1 and len(self.criteria) == 1:
            arr = arr.reshape(-1, 1)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_rows(cls, alternatives: Sequence[str], criteria: Sequence[CriterionSpec],
                  rows, weight_sum_waived: bool = False) -> "DecisionMatrix":
        return cls(tuple(alternatives), tuple(criteria), rows, weight_sum_waived)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.alternatives), len(self.criteria)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.criteria)

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.criteria], dtype=float)

    @property
    def cost_mask(self) -> np.ndarray:
        return np.array([c.is_cost for c in self.criteria], dtype=bool)

    def with_weights(self, weights, waive_weight_sum: bool | None = None) -> "DecisionMatrix":
        weights = [float(w) for w in weights]
        if len(weights) != len(self.criteria):
            raise ValueError(f"expected {len(self.criteria)} weights, got {len(weights)}")
        crits = tuple(CriterionSpec(c.name, c.direction, w) for c, w in zip(self.criteria, weights))
        waived = self.weight_sum_waived if waive_weight_sum is None else waive_weight_sum
        return DecisionMatrix(self.alternatives, crits, self.values, waived)

    def select_criteria(self, keep: Sequence[int]) -> "DecisionMatrix":
        keep = list(keep)
        return DecisionMatrix(self.alternatives, tuple(self.criteria[j] for j in keep),
                              self.values[:, keep], self.weight_sum_waived)

    def permute_rows(self, order: Sequence[int]) -> "DecisionMatrix":
        order = list(order)
        return DecisionMatrix(tuple(self.alternatives[i] for i in order), self.criteria,
                              self.values[order, :], self.weight_sum_waived)

    def __eq__(self, other):
        if not isinstance(other, DecisionMatrix):
            return NotImplemented
        return (self.alternatives == other.alternatives
                and self.criteria == other.criteria
                and self.weight_sum_waived == other.weight_sum_waived
                and self.values.shape == other.values.shape
                and bool(np.array_equal(self.values, other.values)))

    __hash__ = None


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(v.code for v in self.violations)

    def __bool__(self):
        return self.ok


def validate(matrix: DecisionMatrix) -> ValidationReport:
    """Check every structural invariant and collect the violations.

    Never raises; use :func:`require_valid` for the raising form.
    """
    out: list[Violation] = []
    m, n = matrix.shape
    vals = matrix.values

    if vals.ndim != 2 or vals.shape != (m, n):
        out.append(Violation("dimension", f"values have shape {vals.shape}, "
                                          f"expected ({m}, {n})"))
    if m < 2:
        out.append(Violation("alternative-count", f"need m ≥ 2 alternatives, got {m}"))
    if n < 1:
        out.append(Violation("criterion-count", "need at least one criterion"))

    for label, names in (("alternative", matrix.alternatives), ("criterion", matrix.names)):
        dupes = sorted(k for k, c in Counter(names).items() if c > 1)
        if dupes:
            out.append(Violation("duplicate-name", f"duplicate {label} name(s): {', '.join(dupes)}"))

    if vals.size:
        if not np.all(np.isfinite(vals)):
            out.append(Violation("non-finite", "matrix contains NaN or infinite values"))
        elif np.any(vals < 0):
            i, j = map(int, np.argwhere(vals < 0)[0])
            who = matrix.alternatives[i] if i < m else i
            col = matrix.names[j] if j < n else j
            out.append(Violation("negative-value", f"x[{who}, {col}] = {vals[i, j]} < 0"))

    w = matrix.weights
    if np.any(~np.isfinite(w)) or np.any(w <= 0):
        bad = [c.name for c in matrix.criteria if not (math.isfinite(c.weight) and c.weight > 0)]
        out.append(Violation("weight", f"weights must be positive: {', '.join(bad)}"))
    elif n and not matrix.weight_sum_waived and abs(w.sum() - 1.0) > WEIGHT_SUM_TOL:
        out.append(Violation("weight-sum", f"weights sum to {w.sum():.6g}, expected 1"))

    return ValidationReport(tuple(out))


def require_valid(matrix: DecisionMatrix) -> DecisionMatrix:
    report = validate(matrix)
    if not report.ok:
        raise InvalidMatrix(report)
    return matrix


@dataclass(frozen=True)
class RankEntry:
    alternative: str
    score: float
    rank: int


@dataclass(frozen=True)
class Ranking:
    """Alternatives sorted by descending score with competition ranks."""

    entries: tuple[RankEntry, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def alternatives(self) -> tuple[str, ...]:
        return tuple(e.alternative for e in self.entries)

    @property
    def ranks(self) -> dict[str, int]:
        return {e.alternative: e.rank for e in self.entries}

    @property
    def scores(self) -> dict[str, float]:
        return {e.alternative: e.score for e in self.entries}

    def rank_of(self, alternative: str) -> int:
        return self.ranks[alternative]

    def ranks_for(self, alternatives: Iterable[str]) -> list[int]:
        r = self.ranks
        return [r[a] for a in alternatives]

    @property
    def top(self) -> str:
        return self.entries[0].alternative

    @property
    def bottom(self) -> str:
        return self.entries[-1].alternative

    def pairs(self) -> frozenset[tuple[str, int]]:
        return frozenset((e.alternative, e.rank) for e in self.entries)


def rank_from_scores(scores, tie_tolerance: float = DEFAULT_TIE_TOL) -> Ranking:
    """Rank ``(id, score)`` pairs, larger score first.

    Scores within ``tie_tolerance`` (absolute) of the first score of a tie
    group share that group's rank; the next group gets
    ``1 + number of strictly better alternatives`` ("1, 1, 3"). Ties keep
    their input order.
    """
    if hasattr(scores, "items"):
        scores = scores.items()
    pairs = [(str(a), float(s)) for a, s in scores]
    for a, s in pairs:
        if not math.isfinite(s):
            raise ValueError(f"score for {a!r} is not finite: {s}")
    order = sorted(range(len(pairs)), key=lambda i: -pairs[i][1])

    entries = []
    lead = None
    rank = 0
    for pos, i in enumerate(order):
        a, s = pairs[i]
        if lead is None or lead - s > tie_tolerance:
            lead = s
            rank = pos + 1
        entries.append(RankEntry(a, s, rank))
    return Ranking(tuple(entries))
