"""Aggregation and appraisal scores for classic CoCoSo and CoCoFISo.

Both variants share the weighted-sum (S) and weighted-power (P) aggregates,
the k_ia share and the lambda-balanced k_ic, and fuse the three appraisal
scores the same way. They differ in normalization (min-max vs. vector) and
in k_ib: the classic ratio-to-minimum form divides by zero when an
alternative is worst on every criterion, the CoCoFISo form is total.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import DEFAULT_TIE_TOL, DecisionMatrix, Ranking, rank_from_scores, require_valid
from .exceptions import AllZeroScores, DegenerateLambda, ZeroMinAggregate
from .normalize import NormalizedMatrix, drop_degenerate_criteria, normalize_minmax, normalize_vector

DEFAULT_LAMBDA = 0.5


class Variant(str, Enum):
    CLASSIC = "cocoso"
    COCOFISO = "cocofiso"

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"classic": cls.CLASSIC, "cocoso": cls.CLASSIC,
                   "cocofiso": cls.COCOFISO, "fiso": cls.COCOFISO}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown variant {value!r}") from None


@dataclass(frozen=True, eq=False)
class ScoreTable:
    alternatives: tuple[str, ...]
    S: np.ndarray
    P: np.ndarray
    kia: np.ndarray
    kib: np.ndarray
    kic: np.ndarray
    k: np.ndarray
    variant: Variant
    lam: float

    def row(self, alternative: str) -> dict[str, float]:
        i = self.alternatives.index(alternative)
        return {name: float(getattr(self, name)[i])
                for name in ("S", "P", "kia", "kib", "kic", "k")}


def aggregate_sp(normalized, weights):
    """Weighted sum S_i and weighted power sum P_i of a normalized matrix.

    Uses ``0 ** w == 0`` for positive weights, so an all-zero row gets
    ``S = P = 0``.
    """
    r = normalized.values if isinstance(normalized, NormalizedMatrix) else np.asarray(normalized, float)
    w = np.asarray(weights, dtype=float)
    S = r @ w
    P = (r ** w).sum(axis=1)
    return S, P


def kia(S, P):
    total = np.asarray(S, float) + np.asarray(P, float)
    denom = total.sum()
    if denom == 0:
        raise AllZeroScores()
    return total / denom


def kib_classic(S, P, alternatives=None):
    """Relative-to-worst appraisal ``S/min S + P/min P``.

    Raises :class:`ZeroMinAggregate` naming the alternatives that sit at a
    zero minimum.
    """
    S = np.asarray(S, float)
    P = np.asarray(P, float)
    s_min, p_min = S.min(), P.min()
    if s_min <= 0 or p_min <= 0:
        bad = np.flatnonzero(((S == s_min) & (s_min <= 0)) | ((P == p_min) & (p_min <= 0)))
        if alternatives is None:
            names = [str(i) for i in bad]
        else:
            names = [alternatives[i] for i in bad]
        raise ZeroMinAggregate(names)
    return S / s_min + P / p_min


def kib_fiso(S, P):
    """Zero-safe appraisal ``(S + P) / (1 + S/(1+S) + P/(1+P))``.

    The denominator lies in [1, 3) for non-negative inputs, so the result is
    finite everywhere on the domain.
    """
    S = np.asarray(S, float)
    P = np.asarray(P, float)
    return (S + P) / (1.0 + S / (1.0 + S) + P / (1.0 + P))


def kic(S, P, lam=DEFAULT_LAMBDA):
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    S = np.asarray(S, float)
    P = np.asarray(P, float)
    denom = lam * S.max() + (1.0 - lam) * P.max()
    if denom == 0:
        raise DegenerateLambda(lam)
    return (lam * S + (1.0 - lam) * P) / denom


def k_final(ka, kb, kc):
    ka, kb, kc = (np.asarray(v, float) for v in (ka, kb, kc))
    return np.cbrt(ka * kb * kc) + (ka + kb + kc) / 3.0


def score_table(matrix: DecisionMatrix, variant=Variant.COCOFISO, lam: float = DEFAULT_LAMBDA,
                auto_repair: bool = False) -> ScoreTable:
    variant = Variant.parse(variant)
    require_valid(matrix)
    if variant is Variant.CLASSIC:
        if auto_repair:
            matrix = drop_degenerate_criteria(matrix)
        r = normalize_minmax(matrix)
    else:
        r = normalize_vector(matrix)
    S, P = aggregate_sp(r, matrix.weights)
    a = kia(S, P)
    if variant is Variant.CLASSIC:
        b = kib_classic(S, P, matrix.alternatives)
    else:
        b = kib_fiso(S, P)
    c = kic(S, P, lam)
    k = k_final(a, b, c)
    return ScoreTable(matrix.alternatives, S, P, a, b, c, k, variant, float(lam))


def evaluate(matrix: DecisionMatrix, variant=Variant.COCOFISO, lam: float = DEFAULT_LAMBDA, *,
             tie_tol: float = DEFAULT_TIE_TOL, auto_repair: bool = False) -> tuple[ScoreTable, Ranking]:
    """Run the full pipeline and rank alternatives by final score k.

    Parameters
    ----------
    matrix : DecisionMatrix
    variant : Variant or str
        ``"cocoso"`` (min-max + ratio k_ib) or ``"cocofiso"`` (vector + zero-safe k_ib).
    lam : float
        Balance between S and P in k_ic.
    tie_tol : float
        Absolute tolerance under which k values share a rank.
    auto_repair : bool
        Classic only: drop constant criteria (with a warning) instead of raising.

    Raises
    ------
    InvalidMatrix, DegenerateCriterion, ZeroMinAggregate, AllZeroScores, DegenerateLambda
    """
    table = score_table(matrix, variant, lam, auto_repair)
    ranking = rank_from_scores(zip(table.alternatives, table.k), tie_tol)
    return table, ranking
