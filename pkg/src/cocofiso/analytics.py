"""Rank correlation, rank agreement and rank-stability classification."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .core import Ranking


class Situation(str, Enum):
    S1 = "S1"  # four different ranks
    S2 = "S2"  # a rank repeated twice
    S3 = "S3"  # a rank repeated three times
    S4 = "S4"  # the same rank in all four runs


@dataclass(frozen=True)
class CorrelationReport:
    spearman: float
    kendall: float
    n: int


def _aligned(r1: Ranking, r2: Ranking):
    a1, a2 = set(r1.alternatives), set(r2.alternatives)
    if a1 != a2 or len(a1) != len(r1) or len(a2) != len(r2):
        raise ValueError("rankings must cover the same set of alternatives")
    ids = r1.alternatives
    return (np.array(r1.ranks_for(ids), dtype=float),
            np.array(r2.ranks_for(ids), dtype=float))


def _midranks(x: np.ndarray) -> np.ndarray:
    order = np.argsort(x, kind="mergesort")
    xs = x[order]
    out = np.empty(len(x))
    i = 0
    while i < len(x):
        j = i
        while j + 1 < len(x) and xs[j + 1] == xs[i]:
            j += 1
        out[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return out


def spearman(r1: Ranking, r2: Ranking) -> float:
    """Spearman's rho: Pearson correlation of mid-ranks."""
    x, y = _aligned(r1, r2)
    if len(x) < 2:
        raise ValueError("need at least two alternatives")
    x = _midranks(x)
    y = _midranks(y)
    n = len(x)
    if len(set(x)) == n and len(set(y)) == n:
        d = x - y
        return float(1.0 - 6.0 * (d @ d) / (n * (n * n - 1)))
    xc = x - x.mean()
    yc = y - y.mean()
    denom = math.sqrt((xc @ xc) * (yc @ yc))
    if denom == 0:
        raise ValueError("spearman undefined: a ranking is entirely tied")
    return float((xc @ yc) / denom)


def kendall(r1: Ranking, r2: Ranking) -> float:
    """Kendall's tau-b over all unordered pairs."""
    x, y = _aligned(r1, r2)
    n = len(x)
    if n < 2:
        raise ValueError("need at least two alternatives")
    iu = np.triu_indices(n, k=1)
    dx = np.sign(x[:, None] - x[None, :])[iu]
    dy = np.sign(y[:, None] - y[None, :])[iu]
    n0 = len(dx)
    s = float((dx * dy).sum())  # concordant - discordant
    n1 = float((dx == 0).sum())
    n2 = float((dy == 0).sum())
    denom = math.sqrt((n0 - n1) * (n0 - n2))
    if denom == 0:
        raise ValueError("kendall tau-b undefined: a ranking is entirely tied")
    return s / denom


def correlate(r1: Ranking, r2: Ranking) -> CorrelationReport:
    return CorrelationReport(spearman(r1, r2), kendall(r1, r2), len(r1))


def agreement_percent(r1: Ranking, r2: Ranking) -> float:
    x, y = _aligned(r1, r2)
    return 100.0 * float((x == y).sum()) / len(x)


def situation_of(ranks: Sequence[int]) -> Situation:
    if len(ranks) != 4:
        raise ValueError(f"stability needs exactly 4 runs, got {len(ranks)}")
    top = max(Counter(ranks).values())
    return (Situation.S1, Situation.S2, Situation.S3, Situation.S4)[top - 1]


@dataclass(frozen=True)
class StabilityClassification:
    # criterion -> alternative -> situation
    situations: Mapping[str, Mapping[str, Situation]]

    def counts(self, criterion: str) -> dict[Situation, int]:
        c = Counter(self.situations[criterion].values())
        return {s: c.get(s, 0) for s in Situation}

    def percentages(self, criterion: str) -> dict[Situation, float]:
        counts = self.counts(criterion)
        total = sum(counts.values())
        return {s: 100.0 * v / total for s, v in counts.items()}

    @property
    def criteria(self) -> tuple[str, ...]:
        return tuple(self.situations)


def stability_classify(rank_runs: Mapping[str, Sequence[Ranking]],
                       alternatives: Sequence[str] | None = None) -> StabilityClassification:
    """Classify each alternative by how often it keeps a rank over 4 runs.

    ``rank_runs`` maps each prioritized criterion to the four rankings
    produced by the weight sets that favour it. The situation is set by the
    largest number of runs sharing one rank value, so a 2+2 split counts as
    S2. ``alternatives`` fixes the output order (default: first run's order).
    """
    out = {}
    for crit, runs in rank_runs.items():
        runs = list(runs)
        if len(runs) != 4:
            raise ValueError(f"criterion {crit!r}: stability needs exactly 4 runs, got {len(runs)}")
        ids = tuple(alternatives) if alternatives is not None else runs[0].alternatives
        for r in runs:
            if set(r.alternatives) != set(ids):
                raise ValueError("all runs must rank the same alternatives")
        maps = [r.ranks for r in runs]
        out[crit] = {a: situation_of([mp[a] for mp in maps]) for a in ids}
    return StabilityClassification(out)
