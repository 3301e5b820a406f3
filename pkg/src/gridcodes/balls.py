"""Exact Manhattan ball sizes in a grid.

The minimum ball size over all centers (attained at the corners) is computed
by an inclusion-exclusion over the coordinate directions in which the ball
overflows the box.  The maximum (attained at the central points) follows a
recursion that peels the ball into the union of its axis sections plus, when
the radius reaches the dimension, one piece per orthant; each orthant piece
is a corner-type sub-problem.  Both are cross-checked against brute-force
enumeration in the test suite.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cache

from .errors import BudgetError, DomainError
from .grid import DEFAULT_BUDGET, BallSpec, Grid, Point, enumerate_ball


def simplex_count(n: int, r: int) -> int:
    """Points of the nonnegative orthant of Z^n with coordinate sum <= r.

    Equals sum_{j=0}^{r} C(j+n-1, j); zero for negative r.
    """
    if n < 1:
        raise DomainError(f"dimension {n} must be >= 1")
    if r < 0:
        return 0
    return sum(math.comb(j + n - 1, j) for j in range(r + 1))


def cross_polytope_size(n: int, r: int) -> int:
    """Size of the radius-r Manhattan ball in Z^n (center-independent)."""
    if n < 1:
        raise DomainError(f"dimension {n} must be >= 1")
    if r < 0:
        return 0
    return sum(
        2**j * math.comb(n, j) * math.comb(r, j) for j in range(min(r, n) + 1)
    )


@dataclass(frozen=True)
class ExclusionIndex:
    """The k-subsets of coordinates whose side lengths sum to at most r.

    ``slacks[i]`` is r minus that sum for ``subsets[i]``.  These index the
    inclusion-exclusion terms of the corner ball size.
    """

    k: int
    subsets: tuple[tuple[int, ...], ...]
    slacks: tuple[int, ...]


def exclusion_levels(dims: tuple[int, ...], r: int) -> list[ExclusionIndex]:
    """Build the non-empty exclusion families level by level.

    A k-subset is admissible only if all its (k-1)-subsets are, so each level
    is grown from the previous one instead of scanning all of 2^n.
    """
    levels: list[ExclusionIndex] = []
    prev = [((), r)]
    k = 1
    while prev:
        cur = []
        for subset, slack in prev:
            start = subset[-1] + 1 if subset else 0
            for j in range(start, len(dims)):
                t = slack - dims[j]
                if t >= 0:
                    cur.append((subset + (j,), t))
        if not cur:
            break
        levels.append(
            ExclusionIndex(
                k,
                tuple(s for s, _ in cur),
                tuple(t for _, t in cur),
            )
        )
        prev = cur
        k += 1
    return levels


@dataclass(frozen=True)
class BallSizeReport:
    grid: Grid
    radius: int
    kind: str  # "eta" | "gamma" | "at-point"
    value: int
    path: str
    center: Point | None = None

    def to_json_dict(self) -> dict:
        out = {
            "dims": list(self.grid.dims),
            "radius": self.radius,
            "kind": self.kind,
            "value": self.value,
            "path": self.path,
        }
        if self.center is not None:
            out["center"] = list(self.center)
        return out


def innermost_set(grid: Grid) -> set[Point]:
    """Centers whose balls are largest: the (near-)middle points of the box."""
    return set(
        itertools.product(*(((m - 1) // 2, m // 2) for m in grid.dims))
    )


def outermost_set(grid: Grid) -> set[Point]:
    """Centers whose balls are smallest: the corners of the box."""
    return set(itertools.product(*((0, m - 1) for m in grid.dims)))


def _reduced(dims) -> tuple[int, ...]:
    """Drop frozen coordinates (side length 1); they never extend a ball."""
    return tuple(m for m in dims if m > 1)


@cache
def _eta(dims: tuple[int, ...], r: int) -> int:
    """Minimum ball size for the reduced, sorted dims tuple; 0 for r < 0."""
    if r < 0:
        return 0
    n = len(dims)
    if n == 0:
        return 1
    if r >= sum(m - 1 for m in dims):
        return math.prod(dims)
    if r < min(dims):
        return simplex_count(n, r)
    value = simplex_count(n, r)
    for level in exclusion_levels(dims, r):
        sign = 1 if level.k % 2 == 1 else -1
        value -= sign * sum(simplex_count(n, t) for t in level.slacks)
    if len(set(dims)) == 1:
        # Equal side lengths admit a binomial shortcut; it must agree with
        # the general inclusion-exclusion.
        m = dims[0]
        cube = simplex_count(n, r)
        for k in range(1, r // m + 1):
            sign = 1 if k % 2 == 1 else -1
            cube -= sign * math.comb(n, k) * simplex_count(n, r - k * m)
        assert cube == value, (dims, r, cube, value)
    return value


def eta_value(dims, r: int) -> int:
    return _eta(tuple(sorted(_reduced(dims))), r)


def eta(grid: Grid, r: int) -> BallSizeReport:
    """Exact minimum radius-r ball size over all centers of the grid."""
    if r < 0:
        raise DomainError(f"radius {r} must be >= 0")
    dims = _reduced(grid.dims)
    if r >= grid.diameter() or not dims:
        return BallSizeReport(grid, r, "eta", grid.volume(), "formula-direct")
    if r < min(dims):
        value = simplex_count(len(dims), r)
        return BallSizeReport(grid, r, "eta", value, "formula-direct")
    return BallSizeReport(
        grid, r, "eta", eta_value(grid.dims, r), "formula-inclusion-exclusion"
    )


def _innermost_rep(dims: tuple[int, ...]) -> tuple[int, ...]:
    # Any innermost point gives the same ball size; fix the low one so the
    # orthant sub-grids are reproducible.
    return tuple((m - 1) // 2 for m in dims)


def _orthant_signs(dims, x):
    """Sign vectors b with x + b still inside the box."""
    out = []
    for b in itertools.product((-1, 1), repeat=len(dims)):
        if all(0 <= xi + bi <= m - 1 for xi, bi, m in zip(x, b, dims)):
            out.append(b)
    return out


def _orthant_side(m: int, xi: int, bi: int) -> int:
    """Largest coordinate of the orthant piece after folding onto N_{r-n}."""
    return abs(m - (xi + 2)) if bi == 1 else abs(xi - 1)


@cache
def _gamma(dims: tuple[int, ...], r: int) -> int:
    """Maximum ball size for the reduced, sorted dims tuple."""
    n = len(dims)
    if n == 0:
        return 1
    if r <= min((m - 1) // 2 for m in dims):
        return cross_polytope_size(n, r)
    if r >= sum(m // 2 for m in dims):
        return math.prod(dims)
    x = _innermost_rep(dims)
    if n == 1:
        return 1 + sum(
            _eta((_orthant_side(dims[0], x[0], b[0]) + 1,), r - 1)
            for b in _orthant_signs(dims, x)
        )
    total = (-1) ** (n + 1)
    for k in range(1, n):
        sign = 1 if k % 2 == 1 else -1
        for drop in itertools.combinations(range(n), k):
            sub = tuple(m for i, m in enumerate(dims) if i not in drop)
            total += sign * _gamma(tuple(sorted(_reduced(sub))), r)
    if r >= n:
        for b in _orthant_signs(dims, x):
            sub = tuple(
                _orthant_side(m, xi, bi) + 1 for m, xi, bi in zip(dims, x, b)
            )
            total += _eta(tuple(sorted(_reduced(sub))), r - n)
    return total


def gamma_value(dims, r: int) -> int:
    return _gamma(tuple(sorted(_reduced(dims))), r)


def gamma(grid: Grid, r: int) -> BallSizeReport:
    """Exact maximum radius-r ball size over all centers of the grid."""
    if r < 0:
        raise DomainError(f"radius {r} must be >= 0")
    dims = _reduced(grid.dims)
    if not dims or r <= min((m - 1) // 2 for m in dims):
        n = max(len(dims), 1)
        value = cross_polytope_size(n, r) if dims else 1
        return BallSizeReport(grid, r, "gamma", value, "gamma-trivial-small")
    if r >= sum(m // 2 for m in dims):
        return BallSizeReport(grid, r, "gamma", grid.volume(), "gamma-trivial-large")
    return BallSizeReport(
        grid, r, "gamma", gamma_value(grid.dims, r), "gamma-recursive"
    )


@cache
def _ball_at(dims: tuple[int, ...], x: tuple[int, ...], r: int) -> int:
    """Size of the radius-r ball around x intersected with the box ``dims``.

    Inclusion-exclusion over the axis sections through x, plus one
    corner-type term per orthant touched when r >= n.
    """
    if r < 0:
        return 0
    keep = [i for i, m in enumerate(dims) if m > 1]
    dims = tuple(dims[i] for i in keep)
    x = tuple(x[i] for i in keep)
    n = len(dims)
    if n == 0:
        return 1
    if n == 1:
        total = 1
        if r >= 1:
            for b in _orthant_signs(dims, x):
                total += _eta((_orthant_side(dims[0], x[0], b[0]) + 1,), r - 1)
        return total
    total = (-1) ** (n + 1)
    for k in range(1, n):
        sign = 1 if k % 2 == 1 else -1
        for drop in itertools.combinations(range(n), k):
            sub_dims = tuple(m for i, m in enumerate(dims) if i not in drop)
            sub_x = tuple(xi for i, xi in enumerate(x) if i not in drop)
            total += sign * _ball_at(sub_dims, sub_x, r)
    if r >= n:
        for b in _orthant_signs(dims, x):
            sub = tuple(
                _orthant_side(m, xi, bi) + 1 for m, xi, bi in zip(dims, x, b)
            )
            total += _eta(tuple(sorted(_reduced(sub))), r - n)
    return total


def ball_size_at(grid: Grid, x: Point, r: int) -> BallSizeReport:
    """Exact ball size around an arbitrary center, without enumeration."""
    x = grid.require(x)
    if r < 0:
        raise DomainError(f"radius {r} must be >= 0")
    if r == 0:
        return BallSizeReport(grid, r, "at-point", 1, "formula-direct", center=x)
    if r >= grid.diameter():
        return BallSizeReport(
            grid, r, "at-point", grid.volume(), "formula-direct", center=x
        )
    value = _ball_at(grid.dims, x, r)
    return BallSizeReport(
        grid, r, "at-point", value, "formula-inclusion-exclusion", center=x
    )


@dataclass(frozen=True)
class SliceDecomposition:
    """The ball split by the last coordinate's offset from the center.

    ``plus[h]``/``minus[h]`` hold the points with last coordinate
    center +/- h for h = 1..r; ``zero`` holds the equatorial section.
    Only the pieces that meet the grid are guaranteed non-empty.
    """

    center: Point
    radius: int
    zero: tuple[Point, ...]
    plus: dict[int, tuple[Point, ...]]
    minus: dict[int, tuple[Point, ...]]

    def pieces(self):
        yield ("S0", self.radius), self.zero
        for h, pts in self.plus.items():
            yield ("S+", h), pts
        for h, pts in self.minus.items():
            yield ("S-", h), pts


def decompose_ball_slices(
    grid: Grid, x: Point, r: int, budget: int = DEFAULT_BUDGET
) -> SliceDecomposition:
    x = grid.require(x)
    ball = enumerate_ball(grid, BallSpec(x, r), "manhattan", budget=budget)
    zero = []
    plus: dict[int, list[Point]] = {h: [] for h in range(1, r + 1)}
    minus: dict[int, list[Point]] = {h: [] for h in range(1, r + 1)}
    last = grid.n - 1
    for p in ball:
        off = p[last] - x[last]
        if off == 0:
            zero.append(p)
        elif off > 0:
            plus[off].append(p)
        else:
            minus[-off].append(p)
    return SliceDecomposition(
        x,
        r,
        tuple(zero),
        {h: tuple(pts) for h, pts in plus.items()},
        {h: tuple(pts) for h, pts in minus.items()},
    )


@dataclass(frozen=True)
class OrthantDecomposition:
    """The ball split into its centric section and its open orthant pieces.

    The centric section is the union of the axis hyperplane sections through
    the center; the orthant pieces (present only when r >= n) collect the
    points offset from the center in every coordinate.
    """

    center: Point
    radius: int
    centric: tuple[Point, ...]
    orthants: dict[tuple[int, ...], tuple[Point, ...]]


def decompose_ball_orthants(
    grid: Grid, x: Point, r: int, budget: int = DEFAULT_BUDGET
) -> OrthantDecomposition:
    x = grid.require(x)
    ball = enumerate_ball(grid, BallSpec(x, r), "manhattan", budget=budget)
    centric = []
    orthants: dict[tuple[int, ...], list[Point]] = {}
    if r >= grid.n:
        for b in itertools.product((-1, 1), repeat=grid.n):
            orthants[b] = []
    for p in ball:
        if any(pi == xi for pi, xi in zip(p, x)):
            centric.append(p)
        else:
            b = tuple(1 if pi > xi else -1 for pi, xi in zip(p, x))
            orthants[b].append(p)
    return OrthantDecomposition(
        x,
        r,
        tuple(centric),
        {b: tuple(pts) for b, pts in orthants.items()},
    )


def orthant_subgrid_dims(grid: Grid, x: Point, b: tuple[int, ...]) -> tuple[int, ...]:
    """Side lengths of the corner sub-problem an orthant piece folds onto."""
    x = grid.require(x)
    return tuple(
        _orthant_side(m, xi, bi) + 1 for m, xi, bi in zip(grid.dims, x, b)
    )
