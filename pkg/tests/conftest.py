import numpy as np
import pytest

from cocofiso import CriterionSpec, DecisionMatrix, load_dataset


@pytest.fixture(scope="session")
def l1():
    return load_dataset("l1")


@pytest.fixture(scope="session")
def l2():
    return load_dataset("l2")


def make_matrix(rows, weights=None, directions=None, ids=None):
    rows = np.asarray(rows, dtype=float)
    m, n = rows.shape
    weights = [1.0 / n] * n if weights is None else weights
    directions = ["benefit"] * n if directions is None else directions
    ids = [f"A{i + 1}" for i in range(m)] if ids is None else ids
    crits = [CriterionSpec(f"C{j + 1}", d, w) for j, (d, w) in enumerate(zip(directions, weights))]
    return DecisionMatrix(tuple(ids), tuple(crits), rows)


@pytest.fixture
def matrix_factory():
    return make_matrix


# -- acceptance summary ------------------------------------------------------

def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion, summarized at the end")
    config._acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        item.config._acceptance.append((mark.args[0], mark.args[1], rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = sorted(getattr(config, "_acceptance", []))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, duration in rows:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{num:<3} {verdict}  {title}  ({duration:.2f}s)")
