"""Comparison methods: weighted sum, TOPSIS and PROMETHEE II."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import DEFAULT_TIE_TOL, DecisionMatrix, Ranking, rank_from_scores, require_valid
from .exceptions import DegenerateProblem
from .normalize import column_norms, normalize_vector


class Method(str, Enum):
    WSM = "wsm"
    TOPSIS = "topsis"
    PROMETHEE2 = "promethee2"


@dataclass(frozen=True, eq=False)
class BaselineResult:
    method: Method
    alternatives: tuple[str, ...]
    scores: np.ndarray
    ranking: Ranking


def _result(method, matrix, scores, tie_tol):
    scores = np.asarray(scores, float)
    scores.setflags(write=False)
    return BaselineResult(method, matrix.alternatives, scores,
                          rank_from_scores(zip(matrix.alternatives, scores), tie_tol))


def wsm(matrix: DecisionMatrix, tie_tol: float = DEFAULT_TIE_TOL) -> BaselineResult:
    """Weighted sum over vector-normalized values (cost columns flipped)."""
    require_valid(matrix)
    r = normalize_vector(matrix).values
    return _result(Method.WSM, matrix, r @ matrix.weights, tie_tol)


def topsis(matrix: DecisionMatrix, tie_tol: float = DEFAULT_TIE_TOL) -> BaselineResult:
    """Closeness to the ideal point, ``d- / (d+ + d-)``."""
    require_valid(matrix)
    x = matrix.values
    norms = column_norms(x)
    r = x / np.where(norms == 0, 1.0, norms)
    v = r * matrix.weights
    cost = matrix.cost_mask
    best = np.where(cost, v.min(axis=0), v.max(axis=0))
    worst = np.where(cost, v.max(axis=0), v.min(axis=0))
    d_best = np.sqrt(((v - best) ** 2).sum(axis=1))
    d_worst = np.sqrt(((v - worst) ** 2).sum(axis=1))
    denom = d_best + d_worst
    if np.all(denom == 0):
        raise DegenerateProblem("all alternatives coincide with both ideal points")
    # denom is zero either for every row or for none
    return _result(Method.TOPSIS, matrix, d_worst / denom, tie_tol)


def _preference(diff, kind, p):
    if kind == "usual":
        return (diff > 0).astype(float)
    if kind == "linear":
        if p is None or p <= 0:
            raise ValueError("linear preference needs a positive threshold p")
        return np.clip(diff / p, 0.0, 1.0)
    raise ValueError(f"unknown preference function {kind!r}")


def net_flows(matrix: DecisionMatrix, preference: str = "usual", thresholds=None) -> np.ndarray:
    """PROMETHEE II net outranking flows.

    ``preference`` is ``"usual"`` (strict step) or ``"linear"``, the latter
    taking one preference threshold per criterion in ``thresholds``.
    """
    x = np.where(matrix.cost_mask, -matrix.values, matrix.values)
    m, n = x.shape
    w = matrix.weights
    pi = np.zeros((m, m))
    for j in range(n):
        diff = x[:, j][:, None] - x[:, j][None, :]
        p = None if thresholds is None else thresholds[j]
        pi += w[j] * _preference(diff, preference, p)
    np.fill_diagonal(pi, 0.0)
    return (pi.sum(axis=1) - pi.sum(axis=0)) / (m - 1)


def promethee2(matrix: DecisionMatrix, tie_tol: float = DEFAULT_TIE_TOL,
               preference: str = "usual", thresholds=None) -> BaselineResult:
    require_valid(matrix)
    return _result(Method.PROMETHEE2, matrix, net_flows(matrix, preference, thresholds), tie_tol)


def run_baseline(method, matrix: DecisionMatrix, tie_tol: float = DEFAULT_TIE_TOL) -> BaselineResult:
    fn = {Method.WSM: wsm, Method.TOPSIS: topsis, Method.PROMETHEE2: promethee2}[Method(method)]
    return fn(matrix, tie_tol)
