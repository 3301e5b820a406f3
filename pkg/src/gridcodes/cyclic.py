"""Cyclic subgroup codes of a finite abelian product group.

Elements are always exponent vectors with respect to the canonical
generating set implied by the component orders; the code generated by one
element is materialized through modular arithmetic only, never as abstract
group elements.  The minimum/maximum Hamming distances come from the family
of coordinate sets that can vanish simultaneously on a non-identity power.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import BudgetError, DomainError

#: Largest cyclic-code order the pairwise distance scans accept by default.
DEFAULT_ORDER_BUDGET = 5000

#: Support sizes past this make the vanishing-set enumeration intractable.
MAX_SUPPORT = 24


def _lcm(values) -> int:
    return reduce(math.lcm, values, 1)


@dataclass(frozen=True)
class CyclicCodeSpec:
    orders: tuple[int, ...]
    generator_exponents: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(m) for m in self.orders)
        exps = tuple(int(e) for e in self.generator_exponents)
        if not orders:
            raise DomainError("at least one cyclic component is required")
        if any(m < 2 for m in orders):
            raise DomainError("every component order must be >= 2")
        if len(exps) != len(orders):
            raise DomainError(
                f"generator has {len(exps)} exponents, group has {len(orders)} components"
            )
        for e, m in zip(exps, orders):
            if not 0 <= e <= m - 1:
                raise DomainError(f"exponent {e} outside [0, {m - 1}]")
        if all(e == 0 for e in exps):
            raise DomainError("trivial generator: all exponents are zero")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "generator_exponents", exps)

    @property
    def n(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class CyclicDerived:
    spec: CyclicCodeSpec
    support: tuple[int, ...]
    gcds: dict  # i -> gcd(e_i, m_i), for i in support
    cofactors: dict  # i -> e_i / gcd, for i in support
    min_gcd: int
    order: int
    hat_sides: dict  # i -> m_i / gcd, for i in support
    vanishing_sets: tuple[frozenset, ...]  # X: maximal proper-order subsets + empty set
    cosupport_sets: tuple[frozenset, ...]  # Y: complements of supports of powers


def derive(spec: CyclicCodeSpec) -> CyclicDerived:
    support = tuple(i for i, e in enumerate(spec.generator_exponents) if e != 0)
    if len(support) > MAX_SUPPORT:
        raise BudgetError(
            f"support size {len(support)} exceeds the limit of {MAX_SUPPORT}"
        )
    gcds = {i: math.gcd(spec.generator_exponents[i], spec.orders[i]) for i in support}
    cofactors = {i: spec.generator_exponents[i] // gcds[i] for i in support}
    hat_sides = {i: spec.orders[i] // gcds[i] for i in support}
    order = _lcm(hat_sides.values())

    vanishing: list[frozenset] = [frozenset()]
    for k in range(1, len(support) + 1):
        for combo in itertools.combinations(support, k):
            sub_order = _lcm(hat_sides[i] for i in combo)
            if sub_order >= order:
                continue
            # Maximal: no further support index vanishes at the same order.
            if all(
                sub_order % hat_sides[j] != 0
                for j in support
                if j not in combo
            ):
                vanishing.append(frozenset(combo))

    non_support = frozenset(range(spec.n)) - frozenset(support)
    cosupport = tuple(j | non_support for j in vanishing)
    return CyclicDerived(
        spec=spec,
        support=support,
        gcds=gcds,
        cofactors=cofactors,
        min_gcd=min(gcds.values()),
        order=order,
        hat_sides=hat_sides,
        vanishing_sets=tuple(vanishing),
        cosupport_sets=cosupport,
    )


def codeword(spec: CyclicCodeSpec, k: int) -> tuple[int, ...]:
    """Exponent vector of the k-th power of the generator."""
    return tuple((e * k) % m for e, m in zip(spec.generator_exponents, spec.orders))


def codewords(spec: CyclicCodeSpec, derived: CyclicDerived | None = None):
    derived = derived or derive(spec)
    return [codeword(spec, k) for k in range(derived.order)]


def min_hamming_distance(
    spec: CyclicCodeSpec, derived: CyclicDerived | None = None, verify: bool = False
) -> tuple[int, int]:
    """(minimum, maximum) Hamming distance of the cyclic code.

    With ``verify`` the closed form is checked against a scan of the
    supports of all non-identity powers.
    """
    derived = derived or derive(spec)
    n = spec.n
    if derived.order < 2:
        raise DomainError("the code has a single element; distances are undefined")
    sizes = [len(j) for j in derived.cosupport_sets]
    d_h = n - max(sizes)
    delta_h = n - min(sizes)
    if verify:
        supports = [
            sum(1 for c in codeword(spec, k) if c != 0)
            for k in range(1, derived.order)
        ]
        assert d_h == min(supports) and delta_h == max(supports), (
            spec,
            d_h,
            delta_h,
            min(supports),
            max(supports),
        )
    return d_h, delta_h


def hat_coordinates(derived: CyclicDerived, k: int) -> tuple[int, ...]:
    """Exponents of the k-th power over the refined generators g_i^{l_i}."""
    return tuple(
        (derived.cofactors[i] * k) % derived.hat_sides[i] for i in derived.support
    )


def codeword_distance(spec: CyclicCodeSpec, k1: int, k2: int) -> int:
    """Exact Manhattan distance between the k1-th and k2-th generator powers."""
    derived = derive(spec)
    for k in (k1, k2):
        if not 0 <= k < derived.order:
            raise DomainError(f"exponent {k} outside [0, {derived.order - 1}]")
    a = hat_coordinates(derived, k1)
    b = hat_coordinates(derived, k2)
    return sum(
        derived.gcds[i] * abs(x - y) for i, x, y in zip(derived.support, a, b)
    )


@dataclass(frozen=True)
class DistanceChain:
    """All members of the layered lower-bound chain for the Manhattan distance."""

    spec: CyclicCodeSpec
    order: int
    min_gcd: int
    d_hamming: int
    delta_hamming: int
    d_lee: int
    d_manhattan: int
    delta_manhattan: int
    hat_d_lee: int
    hat_d_manhattan: int
    delta_upper: int

    @property
    def links(self) -> tuple[int, int, int, int]:
        """(l*d_H, l*hat_d_L, max(d_L, l*hat_d), d) - non-decreasing."""
        return (
            self.min_gcd * self.d_hamming,
            self.min_gcd * self.hat_d_lee,
            max(self.d_lee, self.min_gcd * self.hat_d_manhattan),
            self.d_manhattan,
        )

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "d_hamming": self.d_hamming,
            "delta_hamming": self.delta_hamming,
            "chain": {
                "l": self.min_gcd,
                "l_times_d_hamming": self.links[0],
                "l_times_hat_d_lee": self.links[1],
                "d_lee": self.d_lee,
                "l_times_hat_d_manhattan": self.min_gcd * self.hat_d_manhattan,
                "max_mid": self.links[2],
                "d_manhattan": self.d_manhattan,
                "delta_manhattan": self.delta_manhattan,
                "delta_upper": self.delta_upper,
            },
        }


def _lee(a, b, sides) -> int:
    return sum(min(abs(x - y), m - abs(x - y)) for x, y, m in zip(a, b, sides))


def _pairwise_extremes(rows: np.ndarray, chunk: int = 512) -> tuple[int, int]:
    """(min, max) Manhattan distance over all distinct pairs of rows."""
    rows = rows.astype(np.int32)
    count = len(rows)
    big = np.iinfo(np.int32).max
    lo, hi = None, 0
    for start in range(0, count, chunk):
        block = rows[start : start + chunk]
        dists = np.abs(block[:, None, :] - rows[None, :, :]).sum(
            axis=2, dtype=np.int32
        )
        # Only pairs (i, j) with j > i; blank out the rest for the minimum.
        mask = (
            np.arange(count)[None, :]
            <= np.arange(start, start + len(block))[:, None]
        )
        hi = max(hi, int(dists.max(initial=0)))
        dists[mask] = big
        block_min = int(dists.min(initial=big))
        if lo is None or block_min < lo:
            lo = block_min
    return lo, hi


def bound_chain(
    spec: CyclicCodeSpec, order_budget: int = DEFAULT_ORDER_BUDGET
) -> DistanceChain:
    """Exact distance parameters of the cyclic code, with the chain asserted.

    Hamming and Lee minima shift with the group action, so scanning the
    powers against the identity suffices; the Manhattan minima (in both the
    ambient and refined coordinates) do not, and need the full pairwise scan.
    """
    derived = derive(spec)
    order = derived.order
    if order < 2:
        raise DomainError("the code has a single element; distances are undefined")
    if order > order_budget:
        raise BudgetError(
            f"order {order} exceeds the pairwise-scan budget {order_budget}"
        )

    d_h, delta_h = min_hamming_distance(spec, derived)
    identity = codeword(spec, 0)
    d_lee = min(
        _lee(identity, codeword(spec, k), spec.orders) for k in range(1, order)
    )
    hat_sides = [derived.hat_sides[i] for i in derived.support]
    hat_identity = hat_coordinates(derived, 0)
    hat_d_lee = min(
        _lee(hat_identity, hat_coordinates(derived, k), hat_sides)
        for k in range(1, order)
    )

    words = np.array([codeword(spec, k) for k in range(order)], dtype=np.int64)
    hat_words = np.array(
        [hat_coordinates(derived, k) for k in range(order)], dtype=np.int64
    )
    d_man, delta_man = _pairwise_extremes(words)
    hat_d_man, _ = _pairwise_extremes(hat_words)

    delta_upper = sum(
        spec.orders[i] - derived.gcds[i] for i in derived.support
    )
    chain = DistanceChain(
        spec=spec,
        order=order,
        min_gcd=derived.min_gcd,
        d_hamming=d_h,
        delta_hamming=delta_h,
        d_lee=d_lee,
        d_manhattan=d_man,
        delta_manhattan=delta_man,
        hat_d_lee=hat_d_lee,
        hat_d_manhattan=hat_d_man,
        delta_upper=delta_upper,
    )
    a, b, c, d = chain.links
    assert a <= b <= c <= d <= chain.delta_upper, chain
    assert delta_man <= delta_upper, chain
    return chain
