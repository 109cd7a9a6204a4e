import re


def pytest_runtest_logreport(report):
    """Print the FAIL half of the acceptance pass/fail lines."""
    if report.when != "call" or not report.failed:
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if m:
        print(f"\nACCEPTANCE {m.group(1)} FAIL - {report.nodeid.split('::')[-1]}")
