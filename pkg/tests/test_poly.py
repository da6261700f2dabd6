import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derivimage.poly import (
    LinearPower,
    Polynomial,
    PolynomialSyntaxError,
    as_linear_power,
    format_polynomial,
    gcd,
    has_repeated_root,
    parse_polynomial,
)
from support import nonzero_polynomials, polynomials, small_rationals

P = Polynomial


class TestStructure:
    def test_zero_polynomial_has_no_degree(self):
        with pytest.raises(ValueError):
            P.zero().degree

    def test_trailing_zeros_stripped(self):
        assert P([1, 2, 0, 0]) == P([1, 2])
        assert P([0, 0]).is_zero

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            P([0.5])

    def test_constant_and_monomial(self):
        assert P.monomial(3, 2) == P("2x^3")
        assert P.constant(Fraction(5, 3)) == P("5/3")
        assert P.monomial(2, 0).is_zero

    def test_from_roots(self):
        assert P.from_roots([1, -1]) == P("x^2 - 1")
        assert P.from_roots([0, 0, 1], 2) == P("2x^3 - 2x^2")


class TestArithmetic:
    def test_divrem_examples(self):
        assert divmod(P("x^2 - 1"), P("x - 1")) == (P("x + 1"), P.zero())
        assert divmod(P("x"), P("x^2")) == (P.zero(), P("x"))
        q, r = divmod(P("x^3 + 1"), P("2x - 1"))
        assert q == P("1/2*x^2 + 1/4*x + 1/8")
        assert r == P("9/8")

    def test_division_by_zero_polynomial(self):
        with pytest.raises(ZeroDivisionError):
            divmod(P("x"), P.zero())

    def test_scalar_division(self):
        assert P("3x") / 3 == P("x")
        with pytest.raises(ZeroDivisionError):
            P("x") / 0

    def test_pow(self):
        assert P("x + 1") ** 0 == P.one()
        assert P("x + 1") ** 2 == P("x^2 + 2x + 1")
        with pytest.raises(ValueError):
            P("x") ** -1

    @given(polynomials(), polynomials(), polynomials())
    def test_distributivity(self, f, g, h):
        assert (f + g) * h == f * h + g * h

    @given(polynomials(3), polynomials(3), polynomials(2))
    @settings(max_examples=40)
    def test_compose_associativity(self, f, g, h):
        assert f.compose(g).compose(h) == f.compose(g.compose(h))

    @given(polynomials(), nonzero_polynomials())
    def test_divrem_reconstruction(self, f, g):
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero or r.degree < g.degree


class TestCalculus:
    def test_derivative_examples(self):
        assert P("x^3").derivative() == P("3x^2")
        assert P("5").derivative().is_zero
        b3 = P("x^3 - 3/2*x^2 + 1/2*x")
        b2 = P("x^2 - x + 1/6")
        assert b3.derivative() == 3 * b2

    def test_antiderivative_examples(self):
        assert P("x").antiderivative() == P("1/2*x^2")
        assert P.zero().antiderivative().is_zero
        b2 = P("x^2 - x + 1/6")
        assert b2.antiderivative() == P("1/3*x^3 - 1/2*x^2 + 1/6*x")

    @given(polynomials())
    def test_derivative_of_antiderivative(self, f):
        assert f.antiderivative().derivative() == f
        assert f.antiderivative().constant_term == 0


class TestComposition:
    def test_examples(self):
        assert P("x^2").compose(P("x + 1")) == P("x^2 + 2x + 1")
        f = P("x^5 - 2x + 7")
        assert f.compose(P.x()) == f
        assert P("x^2 - x + 1/6").compose(P("x + 1")) == P("x^2 + x + 1/6")

    def test_degree_multiplies(self):
        f = P("x^3 + x")
        g = P("2x^2 - 1")
        assert f.compose(g).degree == 6

    def test_translate(self):
        assert P("x^2").translate(1) == P("x^2 + 2x + 1")

    def test_evaluate(self):
        assert P("x^2 - 1")(Fraction(3, 2)) == Fraction(5, 4)


class TestGcd:
    def test_examples(self):
        assert gcd(P("x^2 - 1"), P("x - 1")) == P("x - 1")
        assert gcd(P("3x + 3"), P.zero()) == P("x + 1")
        assert gcd(P("x^3 - x^2"), P("x^2")) == P("x^2")

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd(P.zero(), P.zero())

    @given(nonzero_polynomials(4), nonzero_polynomials(4))
    @settings(max_examples=60)
    def test_gcd_divides_both(self, f, g):
        d = gcd(f, g)
        assert d.divides(f) and d.divides(g)
        assert d.leading_coefficient == 1


class TestRepeatedRoots:
    def test_examples(self):
        assert has_repeated_root(P("x^2"))
        assert not has_repeated_root(P("x^2 - 1"))
        assert not has_repeated_root(P("x^2 + 1"))

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            has_repeated_root(P("3"))
        with pytest.raises(ValueError):
            has_repeated_root(P.zero())

    def test_constructed_multiplicities(self):
        rng = random.Random(7)
        irreducibles = [P("x"), P("x - 1"), P("x + 2"), P("x^2 + 1"), P("x^2 + x + 1")]
        for _ in range(60):
            chosen = rng.sample(irreducibles, rng.randint(1, 3))
            mults = [rng.randint(1, 3) for _ in chosen]
            u = P.one()
            for base, m in zip(chosen, mults):
                u = u * base**m
            assert has_repeated_root(u) == any(m > 1 for m in mults)


class TestLinearPower:
    def test_examples(self):
        assert as_linear_power(P("2x^2 - 4x + 2")) == LinearPower(
            Fraction(1), 2, Fraction(2)
        )
        assert as_linear_power(P("x^2 - 1")) is None
        assert as_linear_power(P("7")) == LinearPower(Fraction(0), 0, Fraction(7))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            as_linear_power(P.zero())

    def test_irrational_center_rejected(self):
        # (x^2 - 2) = (x - sqrt2)(x + sqrt2) has no rational linear-power form
        assert as_linear_power(P("x^2 - 2")) is None

    @given(
        st.fractions(min_value=-3, max_value=3, max_denominator=3),
        st.integers(min_value=1, max_value=5),
        st.fractions(min_value=-3, max_value=3, max_denominator=2).filter(bool),
    )
    @settings(max_examples=60)
    def test_roundtrip(self, c, n, scale):
        u = scale * P((-c, Fraction(1))) ** n
        assert as_linear_power(u) == LinearPower(c, n, scale)


class TestTextFormat:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("x^2 - x + 1/6", P([Fraction(1, 6), -1, 1])),
            ("0", P.zero()),
            ("-3/2*x^3", P([0, 0, 0, Fraction(-3, 2)])),
            ("x", P.x()),
            ("-x", -P.x()),
            ("2x", P([0, 2])),
            ("2*x", P([0, 2])),
            ("x + x", P([0, 2])),
            ("1 - x", P([1, -1])),
            ("x - -3", P([3, 1])),
            ("  x ^ 2  ", P.monomial(2)),
            ("5/3", P.constant(Fraction(5, 3))),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_polynomial(text) == expected

    @pytest.mark.parametrize("bad", ["", "x +", "^2", "1/0", "x^", "3..2", "y", "x**2"])
    def test_parse_errors(self, bad):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial(bad)

    def test_error_carries_position(self):
        try:
            parse_polynomial("x + $")
        except PolynomialSyntaxError as exc:
            assert exc.position == 4
        else:
            pytest.fail("no syntax error raised")

    @pytest.mark.parametrize(
        "poly,text",
        [
            (P([Fraction(1, 6), -1, 1]), "x^2 - x + 1/6"),
            (P.zero(), "0"),
            (-P.monomial(3) + P.x(), "-x^3 + x"),
            (P([2, -4, 2]), "2*x^2 - 4*x + 2"),
            (P.constant(Fraction(-5, 3)), "-5/3"),
            (P([0, 0, Fraction(-3, 2)]), "-3/2*x^2"),
        ],
    )
    def test_canonical_format(self, poly, text):
        assert format_polynomial(poly) == text
        assert parse_polynomial(text) == poly

    @given(polynomials(8))
    def test_roundtrip(self, f):
        assert parse_polynomial(format_polynomial(f)) == f

    def test_json_roundtrip(self):
        f = P("x^2 - x + 1/6")
        assert P.from_json_dict(f.to_json_dict()) == f
        assert f.to_json_dict() == {"coeffs": ["1/6", "-1", "1"]}
