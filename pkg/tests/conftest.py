import re
import sys


def pytest_runtest_logreport(report):
    """Emit one machine-readable line per acceptance criterion."""
    if report.when != "call":
        return
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if match is None:
        return
    outcome = "PASS" if report.passed else "FAIL"
    sys.stdout.write(f"\n[ACCEPTANCE] criterion {match.group(1)}: {outcome}\n")
    sys.stdout.flush()
