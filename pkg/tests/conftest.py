from pathlib import Path

import pytest

from caserole import io
from caserole.stats import load_counts

DATA = Path(__file__).resolve().parent.parent / "data"

CRITERIA_TITLES = {
    1: "sample sentence parses to the expected case-role forest",
    2: "candidate generation matches the reference variable table",
    3: "hard unary filters admit and reject the documented cases",
    4: "scorer reproduces the reference metric tables",
    5: "relaxation matches the exhaustive oracle on >= 90% of random problems",
    6: "solver state stays a probability distribution and converges",
    7: "formula spot checks (mutual information, cosine, similarity)",
}

_acceptance_results = {}


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def lexicon():
    return io.load_lexicon(DATA / "lexicon.json")


@pytest.fixture(scope="session")
def ontology():
    return io.load_ontology(DATA / "ontology.tsv")


@pytest.fixture(scope="session")
def sentence():
    return io.load_sentences(DATA / "sentences.json")[0]


@pytest.fixture(scope="session")
def store():
    return load_counts(DATA / "counts.txt")


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(criterion): part of the acceptance suite"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        criterion = marker.args[0]
        _acceptance_results.setdefault(criterion, []).append(report.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_acceptance_results):
        ok = all(_acceptance_results[criterion])
        status = "PASS" if ok else "FAIL"
        title = CRITERIA_TITLES.get(criterion, "")
        terminalreporter.write_line(f"criterion {criterion}: {status} - {title}")
