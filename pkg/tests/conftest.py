"""Shared test fixtures and the independent dense-loop oracle.

The oracle deliberately avoids the library's sparse paths: it expands
counts into a dense nested-list array and loops over every cell, so any
bookkeeping error in the sparse marginalization shows up as a mismatch.
"""

import math
import random

import pytest


def dense_tri_oracle(cells: dict, dims: tuple[int, int, int]) -> dict:
    """All seven entropies plus transmissions for a (w, r, z) count dict."""
    W, R, Z = dims
    total = sum(cells.values())
    dense = [[[0] * Z for _ in range(R)] for _ in range(W)]
    for (w, r, z), n in cells.items():
        dense[w][r][z] += n

    def h(values):
        return -math.fsum(v / total * math.log2(v / total) for v in values if v > 0)

    p_w = [sum(dense[w][r][z] for r in range(R) for z in range(Z)) for w in range(W)]
    p_r = [sum(dense[w][r][z] for w in range(W) for z in range(Z)) for r in range(R)]
    p_z = [sum(dense[w][r][z] for w in range(W) for r in range(R)) for z in range(Z)]
    p_wr = [sum(dense[w][r][z] for z in range(Z)) for w in range(W) for r in range(R)]
    p_wz = [sum(dense[w][r][z] for r in range(R)) for w in range(W) for z in range(Z)]
    p_rz = [sum(dense[w][r][z] for w in range(W)) for r in range(R) for z in range(Z)]
    p_wrz = [dense[w][r][z] for w in range(W) for r in range(R) for z in range(Z)]

    out = {
        "h_w": h(p_w), "h_r": h(p_r), "h_z": h(p_z),
        "h_wr": h(p_wr), "h_wz": h(p_wz), "h_rz": h(p_rz),
        "h_wrz": h(p_wrz),
    }
    out["t_wr"] = out["h_w"] + out["h_r"] - out["h_wr"]
    out["t_wr_given_z"] = out["h_wz"] + out["h_rz"] - out["h_wrz"] - out["h_z"]
    out["mu"] = (
        out["h_w"] + out["h_r"] + out["h_z"]
        - out["h_wr"] - out["h_wz"] - out["h_rz"]
        + out["h_wrz"]
    )
    return out


def random_cells(rng: random.Random, max_w: int = 8, max_r: int = 8, z: int = 2):
    """A random sparse non-empty count dict and its dims."""
    W = rng.randint(1, max_w)
    R = rng.randint(1, max_r)
    density = rng.uniform(0.2, 1.0)
    cells = {}
    for w in range(W):
        for r in range(R):
            for s in range(z):
                if rng.random() < density:
                    cells[(w, r, s)] = rng.randint(1, 6)
    if not cells:
        cells[(0, 0, 0)] = 1
    return cells, (W, R, z)


@pytest.fixture
def rng():
    return random.Random(20260819)


# --- acceptance criterion reporting ---------------------------------------
# every test_criterion_* in test_acceptance.py gets one PASS/FAIL line in
# the terminal summary, labeled by its docstring

_criterion_docs: dict[str, str] = {}
_criterion_outcomes: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.module.__name__ == "test_acceptance" and item.name.startswith(
            "test_criterion_"
        ):
            doc = (item.obj.__doc__ or item.name).strip().splitlines()[0]
            _criterion_docs[item.nodeid] = doc


def pytest_runtest_logreport(report):
    if report.nodeid in _criterion_docs:
        if report.when == "call" or report.outcome == "failed":
            _criterion_outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criterion_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_criterion_outcomes.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {_criterion_docs[nodeid]}")
