import pytest

from lcdgc.groups import make_group

TEST_GROUPS = [
    "cyclic:1",
    "cyclic:4",
    "cyclic:9",
    "sym:3",
    "dihedral:4",
    "dihedral:5",
    "product:cyclic:3,cyclic:3",
]

_criteria: dict[str, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def groups():
    return {spec: make_group(spec) for spec in TEST_GROUPS + ["sym:4"]}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = getattr(report, "criterion", None) or report.nodeid.split("::")[-1]
        _criteria[report.nodeid] = (doc, report.outcome.upper())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    fn = getattr(item, "function", None)
    if fn is not None and fn.__doc__:
        rep.criterion = fn.__doc__.strip().splitlines()[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for doc, outcome in _criteria.values():
        mark = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {doc}")
