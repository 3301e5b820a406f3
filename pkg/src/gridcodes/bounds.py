"""Sphere-packing upper bound and Gilbert-Varshamov lower bounds for grid codes.

The upper bound divides the grid volume by the smallest ball of the packing
radius; the lower bounds divide it by the largest ball of radius d-1 (strong)
or by the free-space ball size in Z^n (weak, always at most the strong one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .balls import cross_polytope_size, eta_value, gamma_value
from .errors import DomainError
from .grid import Grid


def zn_ball_size(n: int, r: int) -> int:
    """Size of the Manhattan r-ball in Z^n."""
    return cross_polytope_size(n, r)


@dataclass(frozen=True)
class BoundReport:
    grid: Grid
    distance: int
    packing_radius: int
    hamming_upper: int
    gv_lower_strong: int
    gv_lower_weak: int
    degenerate: bool  # distance exceeds diameter + 1: only one-point codes pair-free

    def to_json_dict(self) -> dict:
        return {
            "dims": list(self.grid.dims),
            "distance": self.distance,
            "packing_radius": self.packing_radius,
            "hamming_upper": self.hamming_upper,
            "gv_lower_strong": self.gv_lower_strong,
            "gv_lower_weak": self.gv_lower_weak,
            "degenerate": self.degenerate,
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def bound_report(grid: Grid, distance: int) -> BoundReport:
    if distance < 1:
        raise DomainError(f"design distance {distance} must be >= 1")
    volume = grid.volume()
    t = (distance - 1) // 2
    upper = volume // eta_value(grid.dims, t)
    strong = _ceil_div(volume, gamma_value(grid.dims, distance - 1))
    weak = _ceil_div(volume, zn_ball_size(grid.n, distance - 1))
    return BoundReport(
        grid=grid,
        distance=distance,
        packing_radius=t,
        hamming_upper=upper,
        gv_lower_strong=strong,
        gv_lower_weak=weak,
        degenerate=distance > grid.diameter() + 1,
    )


def hamming_bound(grid: Grid, distance: int) -> int:
    """Upper bound on the size of a code with minimum distance >= distance."""
    return bound_report(grid, distance).hamming_upper


def gv_bound(grid: Grid, distance: int) -> tuple[int, int]:
    """(weak, strong) lower bounds on the maximum code size."""
    report = bound_report(grid, distance)
    return report.gv_lower_weak, report.gv_lower_strong
