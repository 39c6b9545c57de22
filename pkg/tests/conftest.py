"""Terminal summary: one verdict line per acceptance criterion."""

import re

CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            match = CRITERION.search(getattr(report, "nodeid", ""))
            if not match:
                continue
            number = int(match.group(1))
            previous = verdicts.get(number, True)
            verdicts[number] = previous and outcome == "passed"
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        verdict = "PASS" if verdicts[number] else "FAIL"
        terminalreporter.write_line("criterion %d: %s" % (number, verdict))
