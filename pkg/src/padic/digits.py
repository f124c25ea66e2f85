"""Digits, carries and the lazy p-adic digit stream.

A :class:`PadicInt` is an infinite little-endian stream ``(..., a_2, a_1, a_0)``
of digits in ``{0, ..., p-1}``.  Digits are produced on demand by an iterator
and cached, so a digit is computed at most once no matter how many other
streams consult it.
"""
from __future__ import annotations

import json
import threading
from functools import lru_cache
from itertools import chain, count, islice, repeat
from typing import Iterable, Iterator

__all__ = [
    "Prime",
    "PadicInt",
    "residue",
    "carry_quot",
    "lemma_tech_check",
    "embed_nat",
    "embed_int",
    "digit_at",
    "truncate",
    "tail",
    "zero",
    "one",
    "from_digits",
    "format_digits",
    "to_json",
    "from_json",
]

# Bases for which Miller-Rabin is deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=256)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """An ``int`` that is known to be prime.

    >>> Prime(5)
    Prime(5)
    >>> Prime(6)
    Traceback (most recent call last):
    ...
    ValueError: 6 is not prime
    """

    def __new__(cls, p: int) -> "Prime":
        if isinstance(p, Prime):
            return p
        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError(f"prime modulus must be an int, got {type(p).__name__}")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return super().__new__(cls, p)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"

    def __str__(self) -> str:
        return int.__repr__(self)


def residue(n: int, p: int) -> int:
    """``[n]_p``: the representative of ``n`` modulo ``p`` in ``{0, ..., p-1}``."""
    return n % p


def carry_quot(n: int, p: int) -> int:
    """``k_p(n)``: the unique integer with ``n == k_p(n) * p + [n]_p``."""
    return n // p


def lemma_tech_check(m: int, n: int, p: int) -> bool:
    """Check ``k_p(m*p + n) == m + k_p(n)``; always true."""
    return carry_quot(m * p + n, p) == m + carry_quot(n, p)


class PadicInt:
    """A lazy, memoized element of Z_p.

    ``source`` yields the digits in index order.  It is advanced only as far
    as the highest index ever requested, and every produced digit is cached.
    Reading a cached digit needs no lock; extending the cache is serialized
    so concurrent readers see one consistent stream.
    """

    __slots__ = ("p", "_digits", "_source", "_lock")

    def __init__(self, p: int, source: Iterable[int]):
        self.p = Prime(p)
        self._digits: list[int] = []
        self._source: Iterator[int] = iter(source)
        self._lock = threading.RLock()

    def digit(self, i: int) -> int:
        digits = self._digits
        if i < len(digits):
            return digits[i]
        if i < 0:
            raise IndexError(f"digit index must be >= 0, got {i}")
        with self._lock:
            missing = i + 1 - len(digits)
            if missing == 1:
                digits.append(next(self._source))
            elif missing > 1:
                digits.extend(islice(self._source, missing))
        return digits[i]

    __getitem__ = digit

    def prefix(self, n: int) -> list[int]:
        """The first ``n`` digits, little-endian."""
        if n <= 0:
            return []
        self.digit(n - 1)
        return self._digits[:n]

    def truncate(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"truncation length must be >= 0, got {n}")
        value = 0
        p = self.p
        for d in reversed(self.prefix(n)):
            value = value * p + d
        return value

    @property
    def forced(self) -> int:
        """How many digits have been computed so far."""
        return len(self._digits)

    def __iter__(self) -> Iterator[int]:
        return (self.digit(i) for i in count())

    def __add__(self, other: PadicInt | int) -> PadicInt:
        from .arithmetic import add

        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __mul__(self, other: PadicInt | int) -> PadicInt:
        from .arithmetic import mul

        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> PadicInt:
        from .arithmetic import negate

        return negate(self)

    def __sub__(self, other: PadicInt | int) -> PadicInt:
        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        return self + -other

    def __rsub__(self, other: int) -> PadicInt:
        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        return other + -self

    def __repr__(self) -> str:
        return f"PadicInt({format_digits(self, 8)})"


def _coerce(x: PadicInt | int, p: int) -> PadicInt:
    if isinstance(x, PadicInt):
        return x
    if isinstance(x, int):
        return embed_int(x, p)
    return NotImplemented


def _int_digits(z: int, p: int) -> Iterator[int]:
    # z -> (z - [z]_p) / p reaches 0 for z >= 0 and -1 for z < 0; both are
    # fixed points with constant digit 0 and p-1 respectively.
    while z not in (0, -1):
        z, d = divmod(z, p)
        yield d
    yield from repeat(0 if z == 0 else p - 1)


def embed_nat(n: int, p: int) -> PadicInt:
    """The finite stream of base-``p`` digits of the natural ``n``."""
    if n < 0:
        raise ValueError(f"embed_nat expects a natural number, got {n}")
    return PadicInt(p, _int_digits(n, p))


def embed_int(z: int, p: int) -> PadicInt:
    """Embed any integer; negatives get the eventually ``p-1`` complement."""
    return PadicInt(p, _int_digits(z, p))


def zero(p: int) -> PadicInt:
    return PadicInt(p, repeat(0))


def one(p: int) -> PadicInt:
    return PadicInt(p, chain((1,), repeat(0)))


def from_digits(digits: Iterable[int], p: int, fill: int = 0) -> PadicInt:
    """A stream starting with ``digits`` (little-endian) followed by ``fill``."""
    p = Prime(p)
    digits = list(digits)
    for d in chain(digits, (fill,)):
        if not 0 <= d < p:
            raise ValueError(f"digit {d} out of range for p={p}")
    return PadicInt(p, chain(digits, repeat(fill)))


def digit_at(a: PadicInt, i: int) -> int:
    return a.digit(i)


def truncate(a: PadicInt, n: int) -> int:
    """``sum(a_i * p**i for i < n)``, the image of ``a`` in Z/p^n.

    Note the half-open range: ``truncate(a, n)`` covers digits ``0 .. n-1``.
    """
    return a.truncate(n)


def tail(a: PadicInt) -> PadicInt:
    """Drop the units digit.  Nothing is forced until the result is read."""
    return PadicInt(a.p, (a.digit(i) for i in count(1)))


def format_digits(a: PadicInt, n: int, sep: str | None = None) -> str:
    """Big-endian text of the first ``n`` digits, e.g. ``…1201 (base 3)``.

    Digits are concatenated for ``p <= 10`` and space separated otherwise,
    unless ``sep`` is given explicitly.
    """
    if sep is None:
        sep = " " if a.p > 10 else ""
    body = sep.join(str(d) for d in reversed(a.prefix(n)))
    return f"…{body} (base {a.p})"


def to_json(a: PadicInt, n: int) -> str:
    return json.dumps(to_record(a, n))


def to_record(a: PadicInt, n: int) -> dict:
    return {"p": int(a.p), "digits_le": a.prefix(n), "truncated_at": n}


def from_json(text: str | dict) -> PadicInt:
    """Rebuild a stream from :func:`to_json` output.

    Digits past ``truncated_at`` are unknown in the serialized form; the
    rebuilt stream continues with zeros.
    """
    record = json.loads(text) if isinstance(text, str) else text
    digits = record["digits_le"]
    if len(digits) != record["truncated_at"]:
        raise ValueError("digits_le length does not match truncated_at")
    return from_digits(digits, record["p"])
