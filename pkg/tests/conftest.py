"""Collects acceptance outcomes and prints one line per criterion at the end."""

import pytest

_ACCEPTANCE: dict[int, tuple[str, str, float, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number = marker.args[0]
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    note = dict(item.user_properties).get("note", "")
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _ACCEPTANCE[number] = (status, title, report.duration, note)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, seconds, note = _ACCEPTANCE[number]
        line = f"criterion {number:>2}  {status}  {title} ({seconds:.2f} s)"
        if note:
            line += f"  [{note}]"
        terminalreporter.write_line(line)
