import random
from fractions import Fraction

import pytest

from amtt.linalg import ExactMatrix

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_rational_matrix(rng: random.Random, n: int, bound: int = 9, max_den: int = 5) -> ExactMatrix:
    rows = [[Fraction(rng.randint(-bound, bound), rng.randint(1, max_den)) for _ in range(n)] for _ in range(n)]
    return ExactMatrix.from_rows(rows, cols=n)
