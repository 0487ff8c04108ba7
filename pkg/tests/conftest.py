"""Suite-wide configuration.

Acceptance tests (test_acceptance.py) run after everything else so the
runtime criterion can see the whole suite, and the terminal summary prints
one PASS/FAIL line per acceptance criterion.
"""

from __future__ import annotations

import time

import pytest
from hypothesis import settings

settings.register_profile(
    "suite", max_examples=25, deadline=None, derandomize=True
)
settings.load_profile("suite")

_CRITERIA = {
    "test_criterion_01_semiring_laws": "semiring law suite",
    "test_criterion_02_kernel_oracle_equivalence": "kernel-oracle equivalence",
    "test_criterion_03_bfs_oracle": "bfs vs queue oracle",
    "test_criterion_04_sssp_oracle": "sssp vs dijkstra oracle",
    "test_criterion_05_connected_components_oracle": "components vs union-find",
    "test_criterion_06_triangles_and_clustering": "triangles and clustering",
    "test_criterion_07_pagerank_oracle": "pagerank vs dense oracle",
    "test_criterion_08_format_round_trips": "format round trips",
    "test_criterion_09_purity_immutability": "kernel/algorithm purity",
    "test_criterion_10_suite_runtime": "suite runtime budget",
}


def pytest_sessionstart(session):
    session.config._suite_started = time.perf_counter()


@pytest.fixture(scope="session")
def suite_start_time(request) -> float:
    return request.config._suite_started


def pytest_collection_modifyitems(config, items):
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")


def _criterion_key(nodeid: str) -> str | None:
    name = nodeid.rsplit("::", 1)[-1]
    return name if name in _CRITERIA else None


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    outcome_of = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            key = _criterion_key(getattr(report, "nodeid", ""))
            if key is not None:
                outcome_of[key] = "PASS" if status == "passed" else "FAIL"
    if not outcome_of:
        return
    for idx, (name, label) in enumerate(_CRITERIA.items(), start=1):
        verdict = outcome_of.get(name, "FAIL (not run)")
        lines.append(f"criterion {idx:02d} {label}: {verdict}")
    elapsed = time.perf_counter() - config._suite_started
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
    terminalreporter.write_line(f"total suite time: {elapsed:.1f}s")
