"""Ground truth in Z/p^N computed with Python big integers.

Deliberately independent of the stream code: nothing from the rest of the
package is imported here.  Streams are compared through their ``truncate``
method only.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

__all__ = [
    "Op",
    "OracleQuery",
    "oracle_mod",
    "schoolbook_mod",
    "reduce",
    "valuation",
    "compare_stream_to_oracle",
]


class Op(enum.Enum):
    ADD = "+"
    MUL = "*"


@dataclass(frozen=True)
class OracleQuery:
    lhs: int
    rhs: int
    op: Op
    p: int
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")


def reduce(x: int, p: int, n: int) -> int:
    """Least nonnegative residue of ``x`` modulo ``p**n``."""
    return x % p**n


def oracle_mod(q: OracleQuery) -> int:
    value = q.lhs + q.rhs if q.op is Op.ADD else q.lhs * q.rhs
    return reduce(value, q.p, q.N)


def _base_digits(x: int, p: int, n: int) -> list[int]:
    x %= p**n
    out = []
    for _ in range(n):
        x, d = divmod(x, p)
        out.append(d)
    return out


def schoolbook_mod(q: OracleQuery) -> int:
    """Same answer as :func:`oracle_mod` by pencil-and-paper digit arithmetic.

    Used only to cross-check the oracle itself.
    """
    p, n = q.p, q.N
    xs, ys = _base_digits(q.lhs, p, n), _base_digits(q.rhs, p, n)
    if q.op is Op.ADD:
        cols = [x + y for x, y in zip(xs, ys)]
    else:
        cols = [0] * n
        for i, x in enumerate(xs):
            if x:
                for j in range(n - i):
                    cols[i + j] += x * ys[j]
    result, carry, scale = 0, 0, 1
    for c in cols:
        carry, d = divmod(c + carry, p)
        result += d * scale
        scale *= p
    return result


def valuation(x: int, p: int, cap: int) -> int:
    """Largest ``v <= cap`` with ``p**v | x``; ``cap`` for ``x == 0``."""
    if x == 0:
        return cap
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v


def compare_stream_to_oracle(a, q: OracleQuery, n: int | None = None) -> bool:
    """Whether the first ``n`` digits of stream ``a`` match the oracle.

    ``n`` defaults to ``q.N``.
    """
    if n is not None and n != q.N:
        q = replace(q, N=n)
    return a.truncate(q.N) == oracle_mod(q)
