import pytest
from hypothesis import HealthCheck, core, settings

settings.register_profile(
    "fqc",
    max_examples=1000,
    deadline=None,
    database=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("fqc")

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for the property suites")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    if config.getoption("hypothesis_seed", None) is None:
        core.global_force_seed = config.getoption("--seed")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    num, name = marker
    prev = _CRITERIA.get(num, (name, "PASS"))[1]
    status = "PASS" if report.passed and prev == "PASS" else "FAIL"
    _CRITERIA[num] = (name, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = (m.args[0], m.args[1] if len(m.args) > 1 else item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        name, status = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  ({name})")
