import re

import pytest
from hypothesis import HealthCheck, settings

from raagkit.fixtures import GRAPHS

from oracles import model_for

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture]
)
settings.load_profile("default")


@pytest.fixture(params=sorted(GRAPHS))
def graph(request):
    return GRAPHS[request.param]()


@pytest.fixture
def model(graph):
    return model_for(graph)


_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2).replace("_", " "))
    if report.failed:
        _outcomes[key] = "FAIL"
    elif report.skipped:
        _outcomes.setdefault(key, "SKIP")
    elif report.when == "call":
        _outcomes.setdefault(key, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (n, title), verdict in sorted(_outcomes.items()):
        terminalreporter.write_line(f"criterion {n:2d}  {verdict}  {title}")
