"""Min-max (classic CoCoSo) and vector (CoCoFISo) normalization."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import DecisionMatrix
from .exceptions import DegenerateCriterion


class Scheme(str, Enum):
    MINMAX = "minmax"
    VECTOR = "vector"


class ZeroColumnWarning(UserWarning):
    """A criterion column is all zeros under vector normalization."""


class DroppedCriterionWarning(UserWarning):
    """A degenerate criterion was removed by auto-repair."""


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    values: np.ndarray
    scheme: Scheme
    source: DecisionMatrix

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def alternatives(self):
        return self.source.alternatives

    def row(self, alternative: str) -> np.ndarray:
        return self.values[self.source.alternatives.index(alternative)]


def column_norms(x: np.ndarray) -> np.ndarray:
    """Euclidean column norms, pre-scaled by the column max against under/overflow."""
    peak = np.abs(x).max(axis=0)
    safe = np.where(peak == 0, 1.0, peak)
    return peak * np.sqrt(((x / safe) ** 2).sum(axis=0))


def degenerate_columns(matrix: DecisionMatrix) -> list[int]:
    x = matrix.values
    return [j for j in range(x.shape[1]) if x[:, j].max() == x[:, j].min()]


def normalize_minmax(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Linear min-max scaling to [0, 1].

    Benefit columns map min -> 0 and max -> 1, cost columns the reverse.

    Raises
    ------
    DegenerateCriterion
        On the first column whose values are all equal.
    """
    x = matrix.values
    lo = x.min(axis=0)
    hi = x.max(axis=0)
    span = hi - lo
    for j in range(x.shape[1]):
        if span[j] == 0:
            raise DegenerateCriterion(matrix.criteria[j].name, j)
    cost = matrix.cost_mask
    r = np.where(cost, (hi - x) / span, (x - lo) / span)
    return NormalizedMatrix(r, Scheme.MINMAX, matrix)


def normalize_vector(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Divide each column by its Euclidean norm.

    Cost columns are flipped to ``1 - x / ||x||`` so that larger is better
    downstream. An all-zero column yields zeros and a
    :class:`ZeroColumnWarning`.
    """
    x = matrix.values
    norms = column_norms(x)
    zero = norms == 0
    if np.any(zero):
        names = ", ".join(matrix.criteria[j].name for j in np.flatnonzero(zero))
        warnings.warn(f"all-zero criterion column(s) {names}; normalized to 0",
                      ZeroColumnWarning, stacklevel=2)
    safe = np.where(zero, 1.0, norms)
    r = x / safe
    r = np.where(matrix.cost_mask, 1.0 - r, r)
    r[:, zero] = 0.0
    return NormalizedMatrix(r, Scheme.VECTOR, matrix)


def drop_degenerate_criteria(matrix: DecisionMatrix) -> DecisionMatrix:
    """Remove constant columns and rescale the remaining weights to sum to one."""
    bad = degenerate_columns(matrix)
    if not bad:
        return matrix
    keep = [j for j in range(len(matrix.criteria)) if j not in bad]
    if not keep:
        raise DegenerateCriterion(matrix.criteria[bad[0]].name, bad[0])
    names = ", ".join(matrix.criteria[j].name for j in bad)
    warnings.warn(f"dropping degenerate criterion/criteria {names}",
                  DroppedCriterionWarning, stacklevel=2)
    reduced = matrix.select_criteria(keep)
    w = reduced.weights
    return reduced.with_weights(w / w.sum())
