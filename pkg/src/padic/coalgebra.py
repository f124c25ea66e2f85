"""Coalgebras for ``X -> (1/p)X x V_p`` and their unfolds into Z_p.

A coalgebra step maps a state to ``(next_state, digit)``.  Z_p itself is such
a coalgebra with step :func:`phi`, and it is the final one: every step has
exactly one digit stream compatible with it, namely :func:`unfold`.

The ``1/p`` scaling of the functor only affects distances, so a step carries
no data for it; the nonexpansion checker in :mod:`padic.metric` accounts for
it instead.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Iterable, Iterator, NamedTuple, TypeVar

from .digits import PadicInt, Prime, carry_quot, residue, tail, to_record

S = TypeVar("S")

__all__ = [
    "CoalgebraStep",
    "NatPairState",
    "CheckReport",
    "phi",
    "phi_coalgebra",
    "unfold",
    "A_step",
    "M_step",
    "A_coalgebra",
    "M_coalgebra",
    "check_homomorphism_square",
]


@dataclass(frozen=True)
class CoalgebraStep(Generic[S]):
    step: Callable[[S], tuple[S, int]]
    p: int
    name: str = "step"

    def __post_init__(self):
        object.__setattr__(self, "p", Prime(self.p))

    def __call__(self, state: S) -> tuple[S, int]:
        return self.step(state)


class NatPairState(NamedTuple):
    m: int
    n: int


def phi(a: PadicInt) -> tuple[PadicInt, int]:
    """Structure map of Z_p: ``a -> (T(a), a_0)``."""
    return tail(a), a[0]


def phi_coalgebra(p: int) -> CoalgebraStep[PadicInt]:
    return CoalgebraStep(phi, p, "phi")


def _unfold_digits(c: CoalgebraStep[S], state: S) -> Iterator[int]:
    p = c.p
    while True:
        state, d = c.step(state)
        if not 0 <= d < p:
            raise ValueError(f"{c.name} emitted digit {d} outside 0..{p - 1}")
        yield d


def unfold(c: CoalgebraStep[S], s0: S) -> PadicInt:
    """The unique map from ``(S, c)`` into Z_p, evaluated at ``s0``.

    Digit ``i`` is the digit emitted by the ``i``-th application of the step.
    """
    return PadicInt(c.p, _unfold_digits(c, s0))


def A_step(s: tuple[int, int], p: int) -> tuple[NatPairState, int]:
    """Addition coalgebra on pairs of naturals.

    ``(m, n) -> ((k(m) + k([m] + [n]), k(n)), [m + n])`` where ``k`` and
    ``[.]`` are the base-``p`` carry and residue.
    """
    m, n = s
    nxt = NatPairState(
        carry_quot(m, p) + carry_quot(residue(m, p) + residue(n, p), p),
        carry_quot(n, p),
    )
    return nxt, residue(m + n, p)


def M_step(s: tuple[int, int], p: int) -> tuple[NatPairState, int]:
    """Multiplication coalgebra on pairs of naturals.

    Emits ``[m*n]``.  When ``p | n`` the state becomes ``(m, k(n))``, else
    ``(k(m*n), 1)``; in both cases the product of the next state carries the
    rest of ``m*n``.
    """
    m, n = s
    mn = m * n
    if residue(n, p) == 0:
        nxt = NatPairState(m, carry_quot(n, p))
    else:
        nxt = NatPairState(carry_quot(mn, p), 1)
    return nxt, residue(mn, p)


def A_coalgebra(p: int) -> CoalgebraStep[NatPairState]:
    return CoalgebraStep(lambda s: A_step(s, p), p, "A")


def M_coalgebra(p: int) -> CoalgebraStep[NatPairState]:
    return CoalgebraStep(lambda s: M_step(s, p), p, "M")


def _jsonable(x: Any, n: int) -> Any:
    if isinstance(x, PadicInt):
        return to_record(x, n)
    if isinstance(x, (tuple, list)):
        return [_jsonable(v, n) for v in x]
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    return repr(x)


@dataclass
class CheckReport:
    """Outcome of a sampled property check; violations are recorded, not raised."""

    check: str
    p: int
    samples: int = 0
    violations: list[dict] = field(default_factory=list)
    precision: int = 1

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, inputs: Any, index: int, **detail: Any) -> None:
        entry = {"inputs": _jsonable(inputs, self.precision), "index": index}
        entry.update(detail)
        self.violations.append(entry)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "p": int(self.p),
            "samples": self.samples,
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_homomorphism_square(
    c: CoalgebraStep[S],
    g: Callable[[S], PadicInt],
    states: Iterable[S],
    n: int,
) -> CheckReport:
    """Check ``phi(g(s)) == (g(s'), d)`` to ``n`` digits for each ``s``.

    Here ``c(s) == (s', d)``.  A violation records the state and the first
    digit index of ``g(s)`` where the square fails.
    """
    if n < 1:
        raise ValueError(f"precision must be >= 1, got {n}")
    report = CheckReport(f"homomorphism_square[{c.name}]", c.p, precision=n)
    for s in states:
        report.samples += 1
        image = g(s)
        nxt, d = c(s)
        rest, d0 = phi(image)
        if d0 != d:
            report.record(s, 0, expected=d, found=d0)
            continue
        lhs, rhs = rest.prefix(n - 1), g(nxt).prefix(n - 1)
        if lhs != rhs:
            j = next(j for j, (u, v) in enumerate(zip(lhs, rhs)) if u != v)
            report.record(s, j + 1, expected=rhs[j], found=lhs[j])
    return report
