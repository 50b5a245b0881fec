ACCEPTANCE_RESULTS = []


def record_criterion(num, text, passed):
    """Collect one pass/fail line per acceptance criterion; printed in the
    terminal summary after the run."""
    ACCEPTANCE_RESULTS.append((num, text, bool(passed)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, text, passed in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(
            "criterion %2d: %s  %s" % (num, "PASS" if passed else "FAIL",
                                       text))
