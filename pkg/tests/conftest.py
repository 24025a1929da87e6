import itertools

import numpy as np
from hypothesis import HealthCheck, settings, strategies as st

from iltt.core import Tournament

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def tournament_from_bits(n: int, bits) -> Tournament:
    a = np.zeros((n, n), dtype=bool)
    for (i, j), b in zip(itertools.combinations(range(n), 2), bits):
        if b:
            a[i, j] = True
        else:
            a[j, i] = True
    return Tournament.from_adjacency(a)


@st.composite
def tournaments(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return tournament_from_bits(n, bits)


def all_tournaments(n: int):
    """Every labeled tournament of order n."""
    m = n * (n - 1) // 2
    for code in range(1 << m):
        yield tournament_from_bits(n, [(code >> k) & 1 for k in range(m)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
