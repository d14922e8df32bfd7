"""Prints the acceptance-criteria verdict block at the end of the run."""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    module = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    if module is None:
        return
    criteria = getattr(module, "CRITERIA", {})
    results = getattr(module, "RESULTS", {})
    if not criteria:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(criteria):
        if number in results:
            status = "PASS" if results[number] else "FAIL"
        else:
            status = "FAIL (did not run)"
        terminalreporter.write_line(
            f"ACCEPTANCE CRITERION {number}: {status} - {criteria[number]}"
        )
