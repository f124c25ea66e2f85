import json
import random

import pytest
from hypothesis import given, strategies as st

from padic.coalgebra import (
    A_coalgebra,
    A_step,
    CoalgebraStep,
    M_coalgebra,
    M_step,
    NatPairState,
    check_homomorphism_square,
    phi,
    phi_coalgebra,
    unfold,
)
from padic.digits import embed_int, embed_nat, truncate, zero
from support import PRIMES, random_stream

primes = st.sampled_from(PRIMES)
naturals = st.integers(min_value=0, max_value=2**130)


def test_phi_examples():
    rest, d = phi(embed_nat(26, 5))
    assert d == 1
    assert rest.prefix(8) == embed_nat(5, 5).prefix(8)

    rest, d = phi(zero(3))
    assert d == 0 and rest.prefix(8) == [0] * 8

    rest, d = phi(embed_int(-1, 2))
    assert d == 1 and rest.prefix(8) == [1] * 8


def test_unfold_constant_zero_step():
    c = CoalgebraStep(lambda s: (s, 0), 7, "zero")
    assert unfold(c, "anything").prefix(20) == [0] * 20


def test_unfold_phi_is_identity():
    rng = random.Random(5)
    for p in PRIMES:
        a = random_stream(p, rng)
        assert unfold(phi_coalgebra(p), a).prefix(50) == a.prefix(50)


def test_unfold_is_lazy():
    seen = []

    def step(s):
        seen.append(s)
        return s + 1, s % 3

    a = unfold(CoalgebraStep(step, 3), 0)
    assert seen == []
    assert a.prefix(4) == [0, 1, 2, 0]
    assert seen == [0, 1, 2, 3]


def test_unfold_rejects_bad_digits():
    a = unfold(CoalgebraStep(lambda s: (s, 5), 5, "bad"), 0)
    with pytest.raises(ValueError):
        a.digit(0)


def test_A_step_examples():
    # k_5(3) = 0, k_5(3 + 4) = 1, k_5(4) = 0, [7]_5 = 2
    assert A_step((3, 4), 5) == ((1, 0), 2)
    assert A_step((0, 0), 5) == ((0, 0), 0)
    for p in PRIMES:
        assert A_step((p - 1, 1), p) == ((1, 0), 0)


def test_M_step_examples():
    # 12 = 2*5 + 2 with [4]_5 != 0
    assert M_step((3, 4), 5) == ((2, 1), 2)
    # [10]_5 == 0, k_5(10) == 2
    assert M_step((7, 10), 5) == ((7, 2), 0)
    assert M_step((9, 0), 5) == ((9, 0), 0)


def test_steps_return_named_pairs():
    nxt, _ = A_step(NatPairState(12, 30), 7)
    assert isinstance(nxt, NatPairState)
    assert nxt == (2, 4) and nxt.m == 2


def test_unfold_A_example():
    assert unfold(A_coalgebra(5), (3, 4)).prefix(10) == embed_nat(7, 5).prefix(10)


@given(naturals, naturals, primes)
def test_A_step_sum_invariant(m, n, p):
    (m1, n1), d = A_step((m, n), p)
    assert m + n == (m1 + n1) * p + d


@given(naturals, naturals, primes)
def test_M_step_product_invariant(m, n, p):
    (m1, n1), d = M_step((m, n), p)
    assert m * n == (m1 * n1) * p + d


@given(naturals, naturals, primes, st.integers(min_value=1, max_value=80))
def test_unfold_A_adds(m, n, p, N):
    assert truncate(unfold(A_coalgebra(p), (m, n)), N) == (m + n) % p**N


@given(naturals, naturals, primes, st.integers(min_value=1, max_value=80))
def test_unfold_M_multiplies(m, n, p, N):
    assert truncate(unfold(M_coalgebra(p), (m, n)), N) == (m * n) % p**N


def _pairs(rng, k):
    out = [(0, 0), (1, 0), (0, 1)]
    while len(out) < k:
        out.append((rng.randrange(10**6), rng.randrange(10**6)))
    return out


def test_square_commutes_for_addition():
    rng = random.Random(1)
    for p in PRIMES:
        report = check_homomorphism_square(
            A_coalgebra(p), lambda s: embed_nat(s[0] + s[1], p), _pairs(rng, 50), 16
        )
        assert report.ok and report.samples == 50


def test_square_commutes_for_multiplication():
    rng = random.Random(2)
    for p in PRIMES:
        report = check_homomorphism_square(
            M_coalgebra(p), lambda s: embed_nat(s[0] * s[1], p), _pairs(rng, 50), 16
        )
        assert report.ok


def test_square_commutes_for_trivial_step():
    report = check_homomorphism_square(
        CoalgebraStep(lambda s: (s, 0), 3, "zero"), lambda s: zero(3), range(10), 5
    )
    assert report.ok


def test_square_commutes_for_unfold():
    for p in PRIMES:
        c = M_coalgebra(p)
        report = check_homomorphism_square(c, lambda s: unfold(c, s), _pairs(random.Random(p), 20), 24)
        assert report.ok


def test_square_reports_a_wrong_map():
    # embedding m - n instead of m + n breaks the addition square
    report = check_homomorphism_square(
        A_coalgebra(5), lambda s: embed_int(s[0] - s[1], 5), [(7, 0), (3, 4)], 8
    )
    assert report.samples == 2
    assert len(report.violations) == 1
    violation = report.violations[0]
    assert violation["inputs"] == [3, 4]
    assert violation["index"] == 0


def test_square_reports_index_past_units_digit():
    # agrees with m + n on the units digit but not on the next one
    report = check_homomorphism_square(
        A_coalgebra(5), lambda s: embed_nat((s[0] + s[1]) % 5, 5), [(3, 4)], 8
    )
    assert [v["index"] for v in report.violations] == [1]


def test_report_json_envelope():
    report = check_homomorphism_square(
        A_coalgebra(5), lambda s: embed_int(s[0] - s[1], 5), [(3, 4)], 8
    )
    record = json.loads(report.to_json())
    assert set(record) == {"check", "p", "samples", "violations"}
    assert record["p"] == 5 and record["samples"] == 1
    assert {"inputs", "index"} <= set(record["violations"][0])


def test_square_needs_positive_precision():
    with pytest.raises(ValueError):
        check_homomorphism_square(A_coalgebra(5), lambda s: zero(5), [(0, 0)], 0)
