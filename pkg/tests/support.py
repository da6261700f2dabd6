"""Shared strategies and generators for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from derivimage.poly import Polynomial

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def polynomials(max_degree=6, elements=small_rationals):
    return st.lists(elements, max_size=max_degree + 1).map(Polynomial)


def nonzero_polynomials(max_degree=6, elements=small_rationals):
    return polynomials(max_degree, elements).filter(lambda p: not p.is_zero)


def random_poly(rng, max_degree, span=3, nonzero=False):
    while True:
        deg = rng.randint(0, max_degree)
        p = Polynomial([rng.randint(-span, span) for _ in range(deg + 1)])
        if not nonzero or not p.is_zero:
            return p


def random_rational(rng, span=3, dens=(1, 2), nonzero=False):
    while True:
        q = Fraction(rng.randint(-span, span), rng.choice(dens))
        if not nonzero or q:
            return q
