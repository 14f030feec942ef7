"""Weight-replacement sensitivity analysis.

The reference protocol gives a 0.45 priority weight to each of five
criteria in turn, four times each, spreading 0.18/0.18/0.1/0.1 over the
other four in fixed patterns (20 weight sets, W1..W20). Those rows add up
to 1.01, so they are replayed either verbatim with the weight-sum check
waived (``mode="paper-exact"``) or rescaled to sum to one
(``mode="normalized"``).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .analytics import StabilityClassification, stability_classify
from .core import DEFAULT_TIE_TOL, WEIGHT_SUM_TOL, CriterionSpec, DecisionMatrix, Ranking
from .engine import DEFAULT_LAMBDA, Variant, evaluate
from .exceptions import CoCoSoError, ScenarioFailed

THREADS_ENV = "COCOFISO_THREADS"

# Rows W1..W20, columns in criterion order.
TABLE11 = (
    (0.45, 0.1, 0.18, 0.18, 0.1),
    (0.45, 0.18, 0.1, 0.18, 0.1),
    (0.45, 0.1, 0.1, 0.18, 0.18),
    (0.45, 0.18, 0.18, 0.1, 0.1),
    (0.18, 0.45, 0.1, 0.1, 0.18),
    (0.18, 0.45, 0.18, 0.1, 0.1),
    (0.1, 0.45, 0.18, 0.18, 0.1),
    (0.1, 0.45, 0.1, 0.18, 0.18),
    (0.18, 0.1, 0.45, 0.1, 0.18),
    (0.1, 0.18, 0.45, 0.1, 0.18),
    (0.1, 0.1, 0.45, 0.18, 0.18),
    (0.18, 0.18, 0.45, 0.1, 0.1),
    (0.18, 0.18, 0.1, 0.45, 0.1),
    (0.1, 0.18, 0.18, 0.45, 0.1),
    (0.1, 0.1, 0.18, 0.45, 0.18),
    (0.18, 0.1, 0.1, 0.45, 0.18),
    (0.18, 0.1, 0.1, 0.18, 0.45),
    (0.1, 0.1, 0.18, 0.18, 0.45),
    (0.18, 0.18, 0.1, 0.1, 0.45),
    (0.1, 0.18, 0.1, 0.18, 0.45),
)

MODES = ("paper-exact", "normalized")


@dataclass(frozen=True)
class WeightScenario:
    label: str
    weights: tuple[float, ...]
    prioritized: str
    waived: bool = False

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        object.__setattr__(self, "weights", w)
        if not self.waived and abs(math.fsum(w) - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"{self.label}: weights sum to {math.fsum(w)}, expected 1")
        if sum(1 for v in w if v == max(w)) != 1:
            raise ValueError(f"{self.label}: exactly one criterion must hold the top weight")

    def apply(self, matrix: DecisionMatrix) -> DecisionMatrix:
        return matrix.with_weights(self.weights, waive_weight_sum=self.waived)


def generate_table11_scenarios(criteria: Sequence[CriterionSpec | str],
                               mode: str = "paper-exact") -> list[WeightScenario]:
    """The 20 reference weight sets mapped onto five criteria, in order."""
    if mode not in MODES:
        raise ValueError(f"unknown scenario mode {mode!r}; expected one of {MODES}")
    names = [c.name if isinstance(c, CriterionSpec) else str(c) for c in criteria]
    if len(names) != 5:
        raise ValueError(f"strict mode requires 5 criteria, got {len(names)}")
    out = []
    for k, row in enumerate(TABLE11, start=1):
        w = row if mode == "paper-exact" else tuple(v / math.fsum(row) for v in row)
        out.append(WeightScenario(f"W{k}", w, names[row.index(max(row))],
                                  waived=mode == "paper-exact"))
    return out


def generate_rotated_scenarios(criteria: Sequence[CriterionSpec | str], per_criterion: int = 4,
                               high: float = 0.45, tiers=(0.18, 0.1)) -> list[WeightScenario]:
    """Table-11-style sets for any number of criteria (not the reference protocol).

    Each criterion takes the ``high`` weight ``per_criterion`` times; the
    others are split into an upper and a lower tier, rotating which ones
    land in the upper tier. Every row is rescaled to sum to one.
    """
    names = [c.name if isinstance(c, CriterionSpec) else str(c) for c in criteria]
    n = len(names)
    if n == 1:
        return [WeightScenario("W1", (1.0,), names[0])]
    if not high > tiers[0] >= tiers[1] > 0:
        raise ValueError("need high > upper tier >= lower tier > 0")
    n_upper = math.ceil((n - 1) / 2)
    out = []
    for j in range(n):
        others = [i for i in range(n) if i != j]
        for r in range(per_criterion):
            shift = r % len(others)
            rot = others[shift:] + others[:shift]
            w = [0.0] * n
            w[j] = high
            for pos, i in enumerate(rot):
                w[i] = tiers[0] if pos < n_upper else tiers[1]
            total = math.fsum(w)
            out.append(WeightScenario(f"W{len(out) + 1}", tuple(v / total for v in w), names[j]))
    return out


@dataclass(frozen=True, eq=False)
class SensitivityReport:
    scenarios: tuple[WeightScenario, ...]
    alternatives: tuple[str, ...]
    rankings: tuple[Ranking, ...]
    rank_matrix: np.ndarray  # alternatives x scenarios
    stability: StabilityClassification | None

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.scenarios)

    def row(self, alternative: str) -> np.ndarray:
        return self.rank_matrix[self.alternatives.index(alternative)]

    def column(self, label: str) -> np.ndarray:
        return self.rank_matrix[:, self.labels.index(label)]


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if threads < 0:
        raise ValueError("thread count must be >= 0")
    return threads or min(32, os.cpu_count() or 1)


def run_sensitivity(matrix: DecisionMatrix, scenarios: Sequence[WeightScenario],
                    variant=Variant.COCOFISO, lam: float = DEFAULT_LAMBDA, *,
                    tie_tol: float = DEFAULT_TIE_TOL, threads: int | None = None,
                    auto_repair: bool = False) -> SensitivityReport:
    """Evaluate every scenario independently and collect the rank matrix.

    Stability is classified per prioritized criterion when every criterion
    group holds exactly four scenarios, and left as ``None`` otherwise.

    Raises
    ------
    ScenarioFailed
        Wrapping the first engine error, tagged with the scenario label.
    """
    scenarios = tuple(scenarios)
    if not scenarios:
        raise ValueError("no scenarios to run")

    def one(scn):
        try:
            return evaluate(scn.apply(matrix), variant, lam, tie_tol=tie_tol,
                            auto_repair=auto_repair)[1]
        except CoCoSoError as exc:
            raise ScenarioFailed(scn.label, exc) from exc

    workers = min(resolve_threads(threads), len(scenarios))
    if workers <= 1:
        rankings = [one(s) for s in scenarios]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rankings = list(pool.map(one, scenarios))

    ids = matrix.alternatives
    grid = np.array([r.ranks_for(ids) for r in rankings], dtype=int).T

    groups: dict[str, list[Ranking]] = {}
    for scn, r in zip(scenarios, rankings):
        groups.setdefault(scn.prioritized, []).append(r)
    stability = None
    if all(len(g) == 4 for g in groups.values()):
        stability = stability_classify(groups, ids)

    return SensitivityReport(scenarios, ids, tuple(rankings), grid, stability)
