"""Addition, multiplication and negation of digit streams.

``add`` and ``mul`` run the carry recurrences digit by digit: digit ``n`` of
the result is ``[x_n]_p`` where ``x_n`` is the raw column value and
``k_p(x_n)`` is carried into column ``n + 1``.  For addition the column is
``a_n + b_n``; for multiplication it is the convolution
``sum(a_i * b_(n-i) for i in 0..n)``.  Either way, digit ``n`` reads only
digits ``0..n`` of the operands.

``alpha_raw`` and ``mu_raw`` recompute the raw column values straight from
the recurrences and are kept for cross-checking the production paths.
"""
from __future__ import annotations

import operator
from itertools import count
from typing import Iterator

from .coalgebra import CoalgebraStep
from .digits import PadicInt, carry_quot, embed_nat, one, residue, tail

__all__ = [
    "alpha_raw",
    "mu_raw",
    "add",
    "mul",
    "negate",
    "tilde_A_step",
    "tilde_M_step",
    "tilde_A_coalgebra",
    "tilde_M_coalgebra",
]


def _same_modulus(a: PadicInt, b: PadicInt) -> int:
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: p={a.p} vs p={b.p}")
    return a.p


def alpha_raw(a: PadicInt, b: PadicInt, n: int) -> int:
    """Raw column value of the sum: ``a_0 + b_0``, then ``a_i + b_i + k_p(prev)``."""
    p = _same_modulus(a, b)
    value = a[0] + b[0]
    for i in range(1, n + 1):
        value = a[i] + b[i] + carry_quot(value, p)
    return value


def mu_raw(a: PadicInt, b: PadicInt, n: int) -> int:
    """Raw column value of the product, by the plain convolution recurrence.

    ``mu_n = sum(a_i * b_(n-i)) + k_p(mu_(n-1))`` with ``mu_(-1) = 0``.
    Quadratic in ``n`` per call; meant for tests.
    """
    p = _same_modulus(a, b)
    value = 0
    for k in range(n + 1):
        column = sum(a[i] * b[k - i] for i in range(k + 1))
        value = column + carry_quot(value, p)
    return value


def _add_digits(a: PadicInt, b: PadicInt, p: int) -> Iterator[int]:
    carry = 0
    for i in count():
        carry, d = divmod(a.digit(i) + b.digit(i) + carry, p)
        yield d


def add(a: PadicInt, b: PadicInt) -> PadicInt:
    p = _same_modulus(a, b)
    return PadicInt(p, _add_digits(a, b, p))


def _mul_digits(a: PadicInt, b: PadicInt, p: int) -> Iterator[int]:
    # Column n is conv_n = sum(x_i * y_(n-i) for i in 0..n).  Writing the
    # operand digits as x_i = tx - u_i and y_j = ty - w_j, with shifts tx, ty
    # in {0, p-1}, gives
    #   conv_n = tx sum(y) + ty sum(x) - (n+1) tx ty + sum(u_i w_(n-i))
    # where the last sum runs only over the support of u (or of w).  With the
    # right shift an embedded natural or negative integer has a small support.
    top = p - 1
    xd: list[int] = []
    yd: list[int] = []
    # indices where the digit is nonzero / differs from p-1
    x_zero: list[int] = []
    x_top: list[int] = []
    y_zero: list[int] = []
    y_top: list[int] = []
    x_sum = y_sum = 0
    carry = 0
    for n in count():
        u = a.digit(n)
        v = b.digit(n)
        xd.append(u)
        yd.append(v)
        x_sum += u
        y_sum += v
        if u:
            x_zero.append(n)
        if u != top:
            x_top.append(n)
        if v:
            y_zero.append(n)
        if v != top:
            y_top.append(n)
        tx, sx = (0, x_zero) if len(x_zero) <= len(x_top) else (top, x_top)
        ty, sy = (0, y_zero) if len(y_zero) <= len(y_top) else (top, y_top)
        size = n + 1
        if 3 * min(len(sx), len(sy)) > size:
            column = sum(map(operator.mul, xd, reversed(yd)))
        else:
            if len(sx) <= len(sy):
                cross = sum([(tx - xd[i]) * (ty - yd[n - i]) for i in sx])
            else:
                cross = sum([(ty - yd[j]) * (tx - xd[n - j]) for j in sy])
            column = tx * y_sum + ty * x_sum - size * tx * ty + cross
        carry, d = divmod(column + carry, p)
        yield d


def mul(a: PadicInt, b: PadicInt) -> PadicInt:
    p = _same_modulus(a, b)
    return PadicInt(p, _mul_digits(a, b, p))


def _negate_digits(a: PadicInt, p: int) -> Iterator[int]:
    # -a = (complement of a) + 1
    carry = 1
    top = p - 1
    for i in count():
        carry, d = divmod(top - a.digit(i) + carry, p)
        yield d


def negate(a: PadicInt) -> PadicInt:
    return PadicInt(a.p, _negate_digits(a, a.p))


def tilde_A_step(a: PadicInt, b: PadicInt) -> tuple[tuple[PadicInt, PadicInt], int]:
    """Coalgebra step on stream pairs whose unfold is addition.

    Emits ``[a_0 + b_0]_p`` and moves to ``(T(a) + k_p(a_0 + b_0), T(b))``.
    """
    p = _same_modulus(a, b)
    s = a[0] + b[0]
    carried = add(tail(a), embed_nat(carry_quot(s, p), p))
    return (carried, tail(b)), residue(s, p)


def tilde_M_step(a: PadicInt, b: PadicInt) -> tuple[tuple[PadicInt, PadicInt], int]:
    """Coalgebra step on stream pairs whose unfold is multiplication.

    If ``b_0 == 0`` the state shifts to ``(a, T(b))``; otherwise the rest of
    the product is handed over as ``(T(a*b), 1)``.  The second branch calls
    :func:`mul`, so this step cross-checks ``mul`` rather than replacing it.
    """
    p = _same_modulus(a, b)
    d = residue(a[0] * b[0], p)
    if b[0] == 0:
        return (a, tail(b)), d
    return (tail(mul(a, b)), one(p)), d


def tilde_A_coalgebra(p: int) -> CoalgebraStep:
    return CoalgebraStep(lambda s: tilde_A_step(*s), p, "tilde_A")


def tilde_M_coalgebra(p: int) -> CoalgebraStep:
    return CoalgebraStep(lambda s: tilde_M_step(*s), p, "tilde_M")
