import os

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def permutations_of(min_size=0, max_size=10):
    return st.integers(min_size, max_size).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def jobs() -> int:
    return int(os.environ.get("PERMFRAC_JOBS") or 1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
