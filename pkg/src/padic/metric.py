"""Valuations and p-adic distances, answered to a finite precision.

Two streams can only ever be compared on a finite prefix, so every query
takes a precision ``N`` and answers either exactly (``d = p**-i`` with
``i < N``) or with the certificate ``d <= p**-N``.  Distances are kept as
exponents; nothing here touches floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, TypeVar

from .coalgebra import CheckReport, CoalgebraStep
from .digits import PadicInt

S = TypeVar("S")

__all__ = [
    "Kind",
    "DistanceBound",
    "valuation_bound",
    "distance",
    "first_difference",
    "check_ultrametric",
    "nat_distance",
    "nat_pair_distance",
    "check_nonexpanding_step",
]


class Kind(enum.Enum):
    EXACT = "exact"
    AT_MOST = "at_most"


@dataclass(frozen=True)
class DistanceBound:
    """``EXACT, i``: the value is ``p**-i``.  ``AT_MOST, N``: it is ``<= p**-N``."""

    kind: Kind
    exponent: int

    @classmethod
    def exact(cls, i: int) -> "DistanceBound":
        return cls(Kind.EXACT, i)

    @classmethod
    def at_most(cls, n: int) -> "DistanceBound":
        return cls(Kind.AT_MOST, n)

    @property
    def is_exact(self) -> bool:
        return self.kind is Kind.EXACT

    def __str__(self) -> str:
        if self.is_exact:
            return f"p^-{self.exponent}"
        return f"<= p^-{self.exponent}"


def _first_nonzero(a: PadicInt, n: int) -> int:
    for i in range(n):
        if a.digit(i):
            return i
    return n


def first_difference(a: PadicInt, b: PadicInt, n: int) -> int:
    """Least ``i < n`` with ``a_i != b_i``, or ``n`` if the prefixes agree."""
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: p={a.p} vs p={b.p}")
    for i in range(n):
        if a.digit(i) != b.digit(i):
            return i
    return n


def _bound(i: int, n: int) -> DistanceBound:
    return DistanceBound.exact(i) if i < n else DistanceBound.at_most(n)


def valuation_bound(a: PadicInt, n: int) -> DistanceBound:
    """Index of the first nonzero digit, looking at ``n`` digits at most."""
    if n < 1:
        raise ValueError(f"precision must be >= 1, got {n}")
    return _bound(_first_nonzero(a, n), n)


def distance(a: PadicInt, b: PadicInt, n: int) -> DistanceBound:
    if n < 1:
        raise ValueError(f"precision must be >= 1, got {n}")
    return _bound(first_difference(a, b, n), n)


def check_ultrametric(a: PadicInt, b: PadicInt, c: PadicInt, n: int) -> bool:
    """``d(a, c) <= max(d(a, b), d(b, c))`` at precision ``n``.

    In first-difference indices the inequality reads
    ``idx(a, c) >= min(idx(a, b), idx(b, c))``.
    """
    ab = first_difference(a, b, n)
    bc = first_difference(b, c, n)
    ac = first_difference(a, c, n)
    return ac >= min(ab, bc)


def nat_distance(x: int, y: int, p: int, n: int) -> DistanceBound:
    """p-adic distance between two integers, capped at precision ``n``."""
    diff = x - y
    i = 0
    while i < n and diff % p == 0:
        diff //= p
        i += 1
    return _bound(i, n)


def nat_pair_distance(p: int) -> Callable[[tuple[int, int], tuple[int, int], int], DistanceBound]:
    """Product distance on pairs: the larger of the two coordinate distances."""

    def dist(s: tuple[int, int], t: tuple[int, int], n: int) -> DistanceBound:
        i = min(_index(nat_distance(s[0], t[0], p, n)), _index(nat_distance(s[1], t[1], p, n)))
        return _bound(i, n)

    return dist


def _index(d: DistanceBound) -> int:
    # AT_MOST(N) means "agree on N digits", which orders like index N.
    return d.exponent


def check_nonexpanding_step(
    step: CoalgebraStep[S],
    dist: Callable[[S, S, int], DistanceBound],
    pairs: Iterable[tuple[S, S]],
    n: int,
) -> CheckReport:
    """Check that ``step`` is nonexpanding into ``(1/p)S x V_p``.

    For states at distance ``p**-i`` with ``i >= 1`` the emitted digits must
    agree and the next states may be at most one factor of ``p`` further
    apart, i.e. their first-difference index must be ``>= i - 1``.  Pairs at
    distance 1 pass vacuously.
    """
    report = CheckReport(f"nonexpanding[{step.name}]", step.p, precision=n)
    for s, t in pairs:
        report.samples += 1
        i = _index(dist(s, t, n))
        if i == 0:
            continue
        (s1, ds), (t1, dt) = step(s), step(t)
        if ds != dt:
            report.record([s, t], 0, reason="digits differ", digits=[ds, dt])
            continue
        j = _index(dist(s1, t1, n))
        if j < i - 1:
            report.record([s, t], j, reason="next states too far apart", input_index=i)
    return report
