import re

# acceptance tests are named test_criterion_<number>_<slug>; emit one
# verdict line per criterion on the terminal, outside capture
_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    found = _CRITERION.search(report.nodeid)
    if not found:
        return
    num, slug = found.group(1), found.group(2).replace("_", " ")
    outcome = "FAIL" if report.failed else ("SKIP" if report.skipped else "PASS")
    print(f"\ncriterion {num} ({slug}): {outcome}")
