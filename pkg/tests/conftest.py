"""Prints one PASS/FAIL line per acceptance criterion after the run."""

ACCEPTANCE_PREFIX = "test_criterion_"

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith(ACCEPTANCE_PREFIX):
        _results[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tw = terminalreporter
    tw.write_sep("-", "acceptance criteria")
    for name in sorted(_results, key=lambda s: int(s.split("_")[2])):
        num = name.split("_")[2]
        label = "_".join(name.split("_")[3:])
        outcome = _results[name].upper()
        tw.write_line(f"criterion {num:>2} ({label}): {outcome}")
