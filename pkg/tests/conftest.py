"""Shared pytest wiring: the acceptance tests tag themselves with a
criterion number and description via record_property; the terminal summary
prints one pass/fail line per criterion so the gate is readable at a
glance even in a long -v run."""

_criteria_results = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "criterion":
            number, description = value
            _criteria_results.append((number, description, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number, description, outcome in sorted(_criteria_results):
        word = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} [{word}] {description}")
