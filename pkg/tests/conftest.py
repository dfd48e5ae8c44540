import pytest

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid] = report


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    import test_acceptance

    terminalreporter.section("acceptance criteria")
    for nodeid, rep in sorted(_acceptance.items()):
        name = nodeid.split("::")[-1]
        title = test_acceptance.TITLES.get(name, name)
        verdict = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {title}")
