"""Fox free derivatives on the integral group ring of a free group."""

import random

from foxcalc.fox import ONE, ZERO, GroupRingElement, fox_derive
from foxcalc.presentations import IDENTITY, Word


def gen(i):
    return Word(((i, 1),))


def elem(w):
    return GroupRingElement.from_word(w)


def rand_word(rng, size, ngens=3):
    return Word(
        tuple((rng.randrange(ngens), rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(size))
    )


def test_derivative_of_generator_is_kronecker_delta():
    for i in range(3):
        for j in range(3):
            want = ONE if i == j else ZERO
            assert fox_derive(gen(j), i) == want


def test_derivative_of_inverse_generator():
    # d(x^-1)/dx = -x^-1
    xinv = Word(((0, -1),))
    assert fox_derive(xinv, 0) == -GroupRingElement.from_word(xinv)


def test_positive_power_closed_form():
    # d(x^p)/dx = 1 + x + ... + x^(p-1)
    for p in range(1, 13):
        w = gen(0) ** p
        want = GroupRingElement(
            {Word(((0, k),)): 1 for k in range(p)} | {IDENTITY: 1}
        )
        assert fox_derive(w, 0) == want


def test_negative_power_closed_form():
    # d(x^-p)/dx = -(x^-1 + ... + x^-p)
    for p in range(1, 13):
        w = gen(0) ** -p
        want = GroupRingElement({Word(((0, -k),)): -1 for k in range(1, p + 1)})
        assert fox_derive(w, 0) == want


def test_product_rule():
    rng = random.Random(23)
    for _ in range(300):
        u = rand_word(rng, rng.randrange(6))
        v = rand_word(rng, rng.randrange(6))
        for i in range(3):
            lhs = fox_derive(u * v, i)
            rhs = fox_derive(u, i) + elem(u) * fox_derive(v, i)
            assert lhs == rhs


def test_inverse_rule():
    # d(w^-1)/dx = -w^-1 * dw/dx
    rng = random.Random(29)
    for _ in range(200):
        w = rand_word(rng, rng.randrange(8))
        for i in range(3):
            lhs = fox_derive(w.inverse(), i)
            rhs = -(elem(w.inverse()) * fox_derive(w, i))
            assert lhs == rhs


def test_fundamental_identity_small():
    # sum_i dw/dx_i (x_i - 1) = w - 1
    rng = random.Random(31)
    for _ in range(300):
        w = rand_word(rng, rng.randrange(10))
        total = ZERO
        for i in range(3):
            total = total + fox_derive(w, i) * (elem(gen(i)) - ONE)
        assert total == elem(w) - ONE


def test_group_ring_multiplication_collects_terms():
    x = elem(gen(0))
    e = ONE
    assert (x - e) * (x - e) == elem(gen(0) ** 2) - x - x + e
