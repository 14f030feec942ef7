import numpy as np
import pytest

from cocofiso import (ScenarioFailed, Variant, WeightScenario, ZeroMinAggregate, evaluate,
                      generate_rotated_scenarios, generate_table11_scenarios, run_sensitivity)
from cocofiso.sensitivity import resolve_threads

from reference_values import WEIGHT_SETS


def test_table11_exact(l1):
    scns = generate_table11_scenarios(l1.criteria)
    assert [s.weights for s in scns] == list(WEIGHT_SETS)
    assert scns[0].weights == (0.45, 0.1, 0.18, 0.18, 0.1)
    assert scns[-1].weights == (0.1, 0.18, 0.1, 0.18, 0.45)
    assert [s.label for s in scns] == [f"W{k}" for k in range(1, 21)]
    assert [s.prioritized for s in scns] == [c for c in ("PC", "DR", "DC", "PW", "OP") for _ in range(4)]
    assert all(s.waived and sum(s.weights) == pytest.approx(1.01) for s in scns)


def test_table11_normalized(l1):
    scns = generate_table11_scenarios(l1.criteria, "normalized")
    assert all(sum(s.weights) == pytest.approx(1.0, abs=1e-12) and not s.waived for s in scns)


def test_strict_mode_needs_five():
    with pytest.raises(ValueError, match="strict mode requires 5 criteria"):
        generate_table11_scenarios(["a", "b", "c", "d"])


def test_scenario_invariants():
    with pytest.raises(ValueError):
        WeightScenario("W", (0.5, 0.6), "a")
    with pytest.raises(ValueError):
        WeightScenario("W", (0.5, 0.5), "a")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7])
def test_rotated(n):
    scns = generate_rotated_scenarios([f"c{i}" for i in range(n)])
    assert len(scns) == (1 if n == 1 else 4 * n)
    for s in scns:
        assert sum(s.weights) == pytest.approx(1.0)
        assert s.weights[int(s.prioritized[1:])] == max(s.weights)


def test_l1_protocol(l1):
    rep = run_sensitivity(l1, generate_table11_scenarios(l1.criteria))
    assert rep.rank_matrix.shape == (27, 20)
    assert set(rep.row("L125")) <= {1, 2}
    assert rep.stability is not None
    assert rep.stability.criteria == ("PC", "DR", "DC", "PW", "OP")


def test_l2_protocol(l2):
    rep = run_sensitivity(l2, generate_table11_scenarios(l2.criteria))
    assert rep.row("L221").tolist() == [26] * 20


def test_column_equals_direct_evaluate(l2):
    scns = generate_table11_scenarios(l2.criteria)
    rep = run_sensitivity(l2, scns, threads=1)
    for s in scns[::5]:
        direct = evaluate(s.apply(l2))[1]
        assert rep.column(s.label).tolist() == direct.ranks_for(l2.alternatives)


def test_base_weights_column(l1):
    base = WeightScenario("base", tuple(l1.weights), "PC", waived=True)
    rep = run_sensitivity(l1, [base])
    assert rep.column("base").tolist() == evaluate(l1)[1].ranks_for(l1.alternatives)
    assert rep.stability is None


def test_order_independent(l1):
    scns = generate_table11_scenarios(l1.criteria)
    shuffled = [scns[i] for i in np.random.default_rng(2).permutation(20)]
    a = run_sensitivity(l1, scns, threads=4)
    b = run_sensitivity(l1, shuffled, threads=1)
    for s in scns:
        assert a.column(s.label).tolist() == b.column(s.label).tolist()


def test_errors_are_tagged(l2):
    scns = generate_table11_scenarios(l2.criteria)
    with pytest.raises(ScenarioFailed) as info:
        run_sensitivity(l2, scns, Variant.CLASSIC)
    assert info.value.label == "W1"
    assert isinstance(info.value.cause, ZeroMinAggregate)


def test_threads_env(monkeypatch):
    monkeypatch.setenv("COCOFISO_THREADS", "3")
    assert resolve_threads() == 3
    monkeypatch.setenv("COCOFISO_THREADS", "0")
    assert resolve_threads() >= 1
    monkeypatch.setenv("COCOFISO_THREADS", "lots")
    with pytest.raises(ValueError):
        resolve_threads()
