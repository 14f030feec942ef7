"""Run several ranking methods on one matrix and correlate their rankings."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .analytics import agreement_percent, kendall, spearman
from .baselines import Method, run_baseline
from .core import DEFAULT_TIE_TOL, DecisionMatrix, Ranking
from .engine import DEFAULT_LAMBDA, Variant, evaluate

METHOD_NAMES = ("cocoso", "cocofiso", "wsm", "topsis", "promethee2")


def rank_with(method: str, matrix: DecisionMatrix, lam: float = DEFAULT_LAMBDA,
              tie_tol: float = DEFAULT_TIE_TOL, auto_repair: bool = False) -> Ranking:
    method = method.strip().lower()
    if method in ("cocoso", "cocofiso"):
        return evaluate(matrix, Variant.parse(method), lam, tie_tol=tie_tol,
                        auto_repair=auto_repair)[1]
    if method in {m.value for m in Method}:
        return run_baseline(method, matrix, tie_tol).ranking
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHOD_NAMES)}")


def compare_methods(matrix: DecisionMatrix, methods: Sequence[str], lam: float = DEFAULT_LAMBDA,
                    tie_tol: float = DEFAULT_TIE_TOL, auto_repair: bool = False):
    """Pairwise (spearman, kendall, agreement %) for every unordered pair.

    Keys are ``(a, b)`` with ``a`` before ``b`` in ``methods``; comparing a
    method with itself is allowed when it is listed twice.
    """
    if len(methods) < 2:
        raise ValueError("compare needs at least two methods")
    rankings = {}
    for m in methods:
        if m not in rankings:
            rankings[m] = rank_with(m, matrix, lam, tie_tol, auto_repair)
    out = {}
    for a, b in combinations(methods, 2):
        r1, r2 = rankings[a], rankings[b]
        out[(a, b)] = (spearman(r1, r2), kendall(r1, r2), agreement_percent(r1, r2))
    return out
