"""Shared helpers: seeded random families and numpy brute-force oracles."""

import math
import random

import numpy as np

from gridcodes import Grid

FAMILY_SEED = 20260823

#: One "CRITERION n (...): PASS/FAIL" line per acceptance criterion, echoed
#: after the run (appended by tests/test_acceptance.py).
CRITERION_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for line in CRITERION_LINES:
        terminalreporter.write_line(line)


def random_grid_family(count=200, max_n=4, max_side=9, max_volume=20000):
    """The deterministic random grid family used across the suite."""
    rng = random.Random(FAMILY_SEED)
    family = []
    while len(family) < count:
        n = rng.randint(1, max_n)
        dims = tuple(rng.randint(1, max_side) for _ in range(n))
        if math.prod(dims) <= max_volume:
            family.append(dims)
    return family


def ball_size_table(dims):
    """sizes[i, r] = |B_r(p_i)| for every grid point p_i (lexicographic order).

    Chunked numpy distance histograms; the independent oracle for the
    eta/gamma/ball_size_at formulas.
    """
    grid = Grid(dims)
    pts = np.array(list(grid.points()), dtype=np.int16)
    volume = len(pts)
    diameter = grid.diameter()
    sizes = np.zeros((volume, diameter + 1), dtype=np.int32)
    width = diameter + 1
    for start in range(0, volume, 512):
        block = pts[start : start + 512]
        dists = np.abs(block[:, None, :] - pts[None, :, :]).sum(
            axis=2, dtype=np.int32
        )
        rows = len(block)
        flat = (dists + (np.arange(rows) * width)[:, None]).ravel()
        counts = np.bincount(flat, minlength=rows * width).reshape(rows, width)
        sizes[start : start + rows] = np.cumsum(counts, axis=1)
    return sizes
