import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(test_acceptance.REPORT):
        terminalreporter.write_line(test_acceptance.REPORT[number])
