import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from onepmaxcut.generate import GenerationError, GenParams, gen_one_planar
from onepmaxcut.graph import WeightedGraph
from onepmaxcut.onep import Crossing, OnePlanarInstance

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def complete_graph(n, weight=1):
    return WeightedGraph(range(1, n + 1), {e: weight for e in itertools.combinations(range(1, n + 1), 2)})


def k5_instance():
    return OnePlanarInstance(complete_graph(5), (Crossing((1, 3), (2, 4)),))


def k6_instance():
    # triangular prism 1-2-3 / 4-5-6 plus both diagonals of its three quads
    return OnePlanarInstance(
        complete_graph(6),
        (Crossing((1, 5), (2, 4)), Crossing((2, 6), (3, 5)), Crossing((1, 6), (3, 4))),
    )


def cycle(n, weight=1):
    edges = {(i, i + 1): weight for i in range(1, n)}
    edges[(1, n)] = weight
    return WeightedGraph(range(1, n + 1), edges)


def generated(nodes, crossings, seed, lo=-5, hi=5, density=0.7, tries=64):
    """First instance that the generator can build, scanning seeds upward."""
    for s in range(seed, seed + tries):
        try:
            return gen_one_planar(GenParams(nodes, crossings, lo, hi, density, s))
        except GenerationError:
            continue
    raise GenerationError("no seed worked")


@st.composite
def weighted_graphs(draw, min_nodes=1, max_nodes=8, lo=-5, hi=5):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    weights = draw(st.lists(st.integers(lo, hi), min_size=len(chosen), max_size=len(chosen)))
    return WeightedGraph(range(1, n + 1), dict(zip(chosen, weights)))


@st.composite
def one_planar_instances(draw, max_nodes=9, max_crossings=3, lo=-5, hi=5):
    n = draw(st.integers(4, max_nodes))
    k = draw(st.integers(0, max_crossings))
    seed = draw(st.integers(0, 2**32))
    density = draw(st.sampled_from([0.5, 0.6, 0.7, 0.8]))
    try:
        return gen_one_planar(GenParams(n, k, lo, hi, density, seed))
    except GenerationError:
        return gen_one_planar(GenParams(n, 0, lo, hi, density, seed))


@pytest.fixture
def k5():
    return k5_instance()


@pytest.fixture
def k6():
    return k6_instance()


# One summary line per acceptance criterion, printed after the run.
_CRITERIA: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    detail = "; ".join(str(v) for k, v in report.user_properties if k == "detail")
    _CRITERIA[number] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title, detail = _CRITERIA[number]
        line = f"{status} criterion {number}: {title}"
        terminalreporter.write_line(f"{line} ({detail})" if detail else line)
