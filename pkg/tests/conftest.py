import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_ACCEPTANCE: dict[int, list[bool]] = {}

TITLES = {
    1: "Cauchy expansion coefficients",
    2: "defining eigenproperty",
    3: "operator algebra relations",
    4: "orthogonality and norms",
    5: "coefficient-norm product",
    6: "reproducing identity",
    7: "principal specializations",
    8: "kernel functional equations",
    9: "combinatorial identities",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is not None:
        _ACCEPTANCE.setdefault(crit, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        results = _ACCEPTANCE[crit]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {status}  {TITLES.get(crit, '')}")
