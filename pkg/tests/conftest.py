import pytest
from hypothesis import strategies as st

from scarfposet import Poset


@st.composite
def posets(draw, max_size=12, prefix="p"):
    """Random finite posets with random external markers."""
    n = draw(st.integers(1, max_size))
    labels = [f"{prefix}{i}" for i in range(n)]
    order = draw(st.permutations(labels))
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    external = draw(st.lists(st.sampled_from(labels), unique=True))
    return Poset.from_covers(labels, edges, external)


@st.composite
def posets_with_subset(draw, max_size=12):
    poset = draw(posets(max_size))
    subset = draw(st.lists(st.sampled_from(poset.labels), min_size=1, unique=True))
    return poset, sorted(subset)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
