import math

import numpy as np
import pytest

from cocofiso import CriterionSpec, DecisionMatrix, Direction, rank_from_scores, validate
from cocofiso.exceptions import InvalidMatrix
from cocofiso.core import require_valid


def test_bundled_l1_validates(l1):
    assert l1.shape == (27, 5)
    assert l1.names == ("PC", "DR", "DC", "PW", "OP")
    assert l1.weights.tolist() == [0.45, 0.18, 0.1, 0.1, 0.18]
    assert validate(l1).ok


def test_weight_sum_violation(matrix_factory):
    m = matrix_factory([[1, 2], [3, 4]], weights=[0.5, 0.4])
    report = validate(m)
    assert not report.ok
    assert "weight-sum" in report.codes


def test_weight_sum_waiver(matrix_factory):
    m = matrix_factory([[1, 2], [3, 4]], weights=[0.5, 0.4])
    assert validate(m.with_weights([0.5, 0.4], waive_weight_sum=True)).ok


def test_single_alternative(matrix_factory):
    report = validate(matrix_factory([[1, 2]], weights=[0.5, 0.5]))
    assert report.codes == ("alternative-count",)


@pytest.mark.parametrize("rows, code", [
    ([[1, -2], [3, 4]], "negative-value"),
    ([[1, math.nan], [3, 4]], "non-finite"),
    ([[1, math.inf], [3, 4]], "non-finite"),
])
def test_value_violations(matrix_factory, rows, code):
    assert code in validate(matrix_factory(rows)).codes


def test_duplicate_names():
    crits = (CriterionSpec("a", "benefit", 0.5), CriterionSpec("a", "cost", 0.5))
    m = DecisionMatrix(("x", "x"), crits, [[1, 2], [3, 4]])
    report = validate(m)
    assert report.codes.count("duplicate-name") == 2


def test_dimension_mismatch():
    crits = (CriterionSpec("a", "benefit", 1.0),)
    m = DecisionMatrix(("x", "y", "z"), crits, [[1], [2]])
    assert "dimension" in validate(m).codes


def test_nonpositive_weight(matrix_factory):
    assert "weight" in validate(matrix_factory([[1, 2], [3, 4]], weights=[1.0, 0.0])).codes


def test_require_valid_raises(matrix_factory):
    with pytest.raises(InvalidMatrix, match="weight-sum"):
        require_valid(matrix_factory([[1, 2], [3, 4]], weights=[0.2, 0.2]))


def test_matrix_is_immutable(matrix_factory):
    m = matrix_factory([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        m.values[0, 0] = 5
    with pytest.raises(AttributeError):
        m.alternatives = ("q",)


def test_direction_parse():
    assert CriterionSpec("a", "COST", 1).direction is Direction.COST
    with pytest.raises(ValueError):
        CriterionSpec("a", "sideways", 1)


def test_ranking_ties():
    r = rank_from_scores([("A", 0.9), ("B", 0.5), ("C", 0.9)], 1e-9)
    assert r.ranks == {"A": 1, "C": 1, "B": 3}
    assert r.alternatives == ("A", "C", "B")


def test_all_equal_scores():
    r = rank_from_scores({"A": 0.3, "B": 0.3, "C": 0.3})
    assert set(r.ranks.values()) == {1}


def test_tie_tolerance_is_absolute_and_unchained():
    r = rank_from_scores([("A", 1.0), ("B", 1.0 - 6e-10), ("C", 1.0 - 1.2e-9)], 1e-9)
    assert r.ranks == {"A": 1, "B": 1, "C": 3}


def test_untied_rank_set_is_contiguous():
    r = rank_from_scores([(str(i), s) for i, s in enumerate(np.random.default_rng(1).random(20))])
    assert sorted(r.ranks.values()) == list(range(1, 21))


def test_sorted_descending():
    r = rank_from_scores([("A", 0.1), ("B", 0.7), ("C", 0.4)])
    assert [e.score for e in r] == [0.7, 0.4, 0.1]
    assert r.top == "B" and r.bottom == "A"


def test_non_finite_score():
    with pytest.raises(ValueError):
        rank_from_scores([("A", math.nan), ("B", 1.0)])
