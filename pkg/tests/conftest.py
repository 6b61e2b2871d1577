_criteria: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    title = dict(report.user_properties).get("criterion")
    if not title:
        return
    if report.when == "call" or report.failed:
        verdict = "PASS" if report.passed else "FAIL"
        _criteria[:] = [c for c in _criteria if c[1] != title]
        _criteria.append((verdict, title))


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for verdict, title in _criteria:
            terminalreporter.write_line(f"{verdict}  {title}")
