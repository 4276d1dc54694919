import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# criterion number -> (passed, detail); printed once at the end of the session
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    """Fold one part of criterion n into its overall verdict."""
    prev_ok, prev = ACCEPTANCE.get(n, (True, ""))
    ACCEPTANCE[n] = (prev_ok and bool(ok), f"{prev}; {detail}" if prev else detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def random_points(rng: random.Random, n: int, lo=-6, hi=6, den=1):
    """n distinct rational points with the given denominator bound."""
    seen = set()
    while len(seen) < n:
        seen.add((Fraction(rng.randint(lo * den, hi * den), den),
                  Fraction(rng.randint(lo * den, hi * den), den)))
    return sorted(seen)


@pytest.fixture
def rng():
    return random.Random(12345)
