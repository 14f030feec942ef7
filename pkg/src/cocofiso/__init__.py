"""CoCoSo and CoCoFISo multi-criteria ranking with validation tooling."""

from .analytics import (CorrelationReport, Situation, StabilityClassification, agreement_percent,
                        correlate, kendall, spearman, stability_classify)
from .baselines import BaselineResult, Method, net_flows, promethee2, topsis, wsm
from .compare import compare_methods, rank_with
from .core import (CriterionSpec, DecisionMatrix, Direction, RankEntry, Ranking, ValidationReport,
                   Violation, rank_from_scores, require_valid, validate)
from .engine import (ScoreTable, Variant, aggregate_sp, evaluate, k_final, kia, kib_classic,
                     kib_fiso, kic, score_table)
from .exceptions import (AllZeroScores, CoCoSoError, ConfigError, DegenerateCriterion,
                         DegenerateLambda, DegenerateProblem, InvalidMatrix, MatrixParseError,
                         ScenarioFailed, ZeroMinAggregate)
from .io import load_config, load_dataset, load_matrix, write_matrix
from .normalize import NormalizedMatrix, Scheme, normalize_minmax, normalize_vector
from .sensitivity import (SensitivityReport, WeightScenario, generate_rotated_scenarios,
                          generate_table11_scenarios, run_sensitivity)

__version__ = "0.1.0"
