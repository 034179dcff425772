import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    # one visible pass/fail line per acceptance criterion
    if report.when == "call" and "test_acceptance" in str(item.fspath):
        label = item.name.replace("test_", "", 1)
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {label}: {status}", flush=True)
