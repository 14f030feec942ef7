import numpy as np
import pytest
from scipy import stats

from cocofiso import Situation, agreement_percent, correlate, kendall, rank_from_scores, spearman, stability_classify
from cocofiso.core import RankEntry, Ranking


def ranking(ranks, ids=None):
    ids = ids or [f"A{i}" for i in range(len(ranks))]
    return Ranking(tuple(RankEntry(a, -float(r), int(r)) for a, r in zip(ids, ranks)))


def test_identical():
    r = ranking([1, 2, 3, 4])
    assert spearman(r, r) == 1.0
    assert kendall(r, r) == 1.0
    assert agreement_percent(r, r) == 100.0


def test_reversed():
    a, b = ranking([1, 2, 3, 4, 5]), ranking([5, 4, 3, 2, 1])
    assert spearman(a, b) == -1.0
    assert kendall(a, b) == -1.0
    assert agreement_percent(a, b) == 20.0


def test_small_swap():
    a, b = ranking([1, 2, 3]), ranking([1, 3, 2])
    assert spearman(a, b) == 0.5
    assert kendall(a, b) == pytest.approx(1 / 3, abs=1e-15)


def test_disjoint_agreement():
    assert agreement_percent(ranking([1, 2, 3]), ranking([2, 3, 1])) == 0.0


def test_agreement_arithmetic():
    a = ranking(list(range(1, 28)))
    b = ranking(list(range(1, 10)) + list(range(11, 28)) + [10])
    assert agreement_percent(a, b) == pytest.approx(100 * 9 / 27)


def test_symmetry_and_relabel():
    rng = np.random.default_rng(3)
    for _ in range(30):
        x = rng.integers(1, 6, 8)
        y = rng.integers(1, 6, 8)
        if len(set(x)) < 2 or len(set(y)) < 2:
            continue
        a, b = ranking(x), ranking(y)
        assert spearman(a, b) == pytest.approx(spearman(b, a), abs=1e-15)
        assert kendall(a, b) == pytest.approx(kendall(b, a), abs=1e-15)
        ids = [f"z{i}" for i in range(8)]
        assert spearman(ranking(x, ids), ranking(y, ids)) == pytest.approx(spearman(a, b), abs=1e-15)


def test_against_scipy_with_ties():
    rng = np.random.default_rng(5)
    for _ in range(200):
        n = int(rng.integers(2, 30))
        x, y = rng.integers(1, 6, n), rng.integers(1, 6, n)
        if len(set(x)) < 2 or len(set(y)) < 2:
            continue
        a, b = ranking(x), ranking(y)
        assert spearman(a, b) == pytest.approx(stats.spearmanr(x, y).statistic, abs=1e-12)
        assert kendall(a, b) == pytest.approx(stats.kendalltau(x, y, variant="b").statistic, abs=1e-12)


def test_order_alignment_by_id():
    a = rank_from_scores({"x": 3, "y": 2, "z": 1})
    b = rank_from_scores({"z": 3, "y": 2, "x": 1})
    assert spearman(a, b) == -1.0


def test_errors():
    with pytest.raises(ValueError):
        spearman(ranking([1, 2]), ranking([1, 2], ["p", "q"]))
    with pytest.raises(ValueError):
        kendall(ranking([1, 1, 1]), ranking([1, 2, 3]))
    with pytest.raises(ValueError):
        spearman(ranking([1]), ranking([1]))


def test_correlate_report():
    rep = correlate(ranking([1, 2, 3]), ranking([1, 3, 2]))
    assert (rep.spearman, rep.n) == (0.5, 3)


@pytest.mark.parametrize("ranks, situation", [
    ((5, 5, 5, 5), Situation.S4),
    ((1, 2, 3, 4), Situation.S1),
    ((2, 2, 7, 7), Situation.S2),
    ((2, 2, 3, 7), Situation.S2),
    ((4, 4, 4, 9), Situation.S3),
])
def test_situations(ranks, situation):
    runs = [ranking([r, 10], ["a", "b"]) for r in ranks]
    result = stability_classify({"PC": runs})
    assert result.situations["PC"]["a"] is situation
    assert result.situations["PC"]["b"] is Situation.S4


def test_percentages_sum_to_100():
    rng = np.random.default_rng(0)
    runs = {c: [ranking(rng.integers(1, 4, 12)) for _ in range(4)] for c in "XYZ"}
    result = stability_classify(runs)
    for c in "XYZ":
        assert sum(result.counts(c).values()) == 12
        assert sum(result.percentages(c).values()) == pytest.approx(100.0)


def test_run_count():
    with pytest.raises(ValueError):
        stability_classify({"PC": [ranking([1, 2])] * 3})
