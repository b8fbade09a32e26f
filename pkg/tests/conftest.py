from pathlib import Path

import pytest

from weighcodes import fileio

GOLDEN = Path(__file__).parent / "golden"

ODD_PRIME_POWERS = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49]

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def golden():
    def load(name: str):
        text = (GOLDEN / name).read_text()
        if name.endswith(".oa"):
            return fileio.parse_oa(text)
        if name.endswith(".code"):
            return fileio.parse_code(text)
        return fileio.parse_grid(text)

    return load


def brute_distance(u, v) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def brute_distance_set(rows) -> set[int]:
    rows = [list(map(int, r)) for r in rows]
    return {
        brute_distance(rows[i], rows[j])
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    }


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
