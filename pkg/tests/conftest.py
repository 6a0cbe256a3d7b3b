import re

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_(A\d+)_", report.nodeid)
    if m and report.when == "call":
        _ACCEPTANCE[m.group(1)] = report.passed
    elif m and report.when == "setup" and not report.passed:
        _ACCEPTANCE[m.group(1)] = False


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k[1:])):
        status = "PASS" if _ACCEPTANCE[key] else "FAIL"
        terminalreporter.write_line(f"{key:<4} {status}  {CRITERIA[key]}")
