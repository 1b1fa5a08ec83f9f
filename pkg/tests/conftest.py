from itertools import permutations

import pytest


def brute_force_count(shape) -> int:
    """Try every placement of 1..n into the cells; keep the standard ones.

    Independent of every counting path in the package; only for n <= 8.
    """
    shape = [p for p in shape if p]
    n = sum(shape)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for perm in permutations(range(1, n + 1)):
        grid = dict(zip(cells, perm))
        ok = all(
            (j == 0 or grid[(i, j - 1)] < v) and (i == 0 or grid[(i - 1, j)] < v)
            for (i, j), v in grid.items()
        )
        count += ok
    return count


@pytest.fixture(scope="session")
def brute():
    return brute_force_count


_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def accept():
    """Record one acceptance line: accept(label, ok, detail)."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
