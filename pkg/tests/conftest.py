from __future__ import annotations

from functools import lru_cache

import pytest

from conebound.enumeration import enumerate_connected
from conebound.spectra import spectra

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def connected_graphs(n: int):
    return tuple(enumerate_connected(n))


@lru_cache(maxsize=None)
def connected_spectra(n: int):
    return tuple(spectra(connected_graphs(n)))


@pytest.fixture(scope="session")
def graphs_upto_7():
    return [g for n in range(1, 8) for g in connected_graphs(n)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
