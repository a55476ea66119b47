import random

import pytest

from quivermut import (
    LaurentPoly,
    LaurentViolationError,
    Quiver,
    SeedCapExceeded,
    apply_seed_sequence,
    enumerate_seeds,
    initial_seed,
    make,
    mutate_seed,
    seeds_equal_up_to_relabeling,
)


def test_poly_arithmetic_and_str():
    x1 = LaurentPoly.variable(0, 2)
    x2 = LaurentPoly.variable(1, 2)
    one = LaurentPoly.constant(1, 2)
    p = x1 * x2 + one + one
    assert str(p) == "x1*x2 + 2"
    inv = LaurentPoly.from_dict(2, {(-1, 0): 1})
    assert str(p * inv) == "x2 + 2*x1^-1"
    assert (p + LaurentPoly.constant(-1, 2) * p).is_zero
    assert str(x1 ** 3) == "x1^3"


def test_exact_div():
    x1 = LaurentPoly.variable(0, 2)
    x2 = LaurentPoly.variable(1, 2)
    one = LaurentPoly.constant(1, 2)
    prod = (x1 + x2) * (x1 + one)
    assert prod.exact_div(x1 + x2) == x1 + one
    with pytest.raises(LaurentViolationError):
        (x1 + one).exact_div(x2 + one)
    with pytest.raises(LaurentViolationError):
        one.exact_div(LaurentPoly.constant(0, 2))


def test_initial_seed_is_the_variable_tuple():
    s = initial_seed(make("A", 3))
    assert [str(p) for p in s.cluster] == ["x1", "x2", "x3"]
    assert s.quiver == make("A", 3)


def test_mutate_seed_is_involutive():
    s = initial_seed(make("A", 3))
    rng = random.Random(9)
    cur = s
    for _ in range(6):
        cur = mutate_seed(cur, rng.randrange(3))
    for k in range(3):
        assert mutate_seed(mutate_seed(cur, k), k) == cur


def test_first_exchange_value():
    s = mutate_seed(initial_seed(Quiver([[0, -1], [1, 0]])), 0)
    assert str(s.cluster[0]) == "x1^-1*x2 + x1^-1"
    assert str(s.cluster[1]) == "x2"
    assert s.quiver.b == ((0, 1), (-1, 0))


def test_seeds_equal_up_to_relabeling():
    s = initial_seed(make("A", 2))
    five = apply_seed_sequence(s, (0, 1, 0, 1, 0))
    assert seeds_equal_up_to_relabeling(five, s)
    assert not seeds_equal_up_to_relabeling(mutate_seed(s, 0), s)


def test_enumerate_seeds_counts():
    assert len(enumerate_seeds(initial_seed(make("A", 2)))) == 5
    assert len(enumerate_seeds(initial_seed(make("A", 3)))) == 14


def test_enumerate_seeds_cap():
    kron = initial_seed(make("Theta", 2))
    with pytest.raises(SeedCapExceeded):
        # the class has infinitely many seeds; polynomial growth makes a
        # small cap mandatory here
        enumerate_seeds(kron, cap=40)


def test_seed_sequence_validation():
    s = initial_seed(make("A", 2))
    with pytest.raises(Exception):
        apply_seed_sequence(s, (5,))
