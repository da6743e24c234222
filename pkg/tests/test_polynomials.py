"""Polynomial layer: parsing, printing, exact arithmetic, weights."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lndfilt.polynomials import MultiPoly, ParseError, VarSet, WeightFunction, parse_poly

XSYZ = VarSet(("X", "S", "Y", "Z"))


def P(text: str) -> MultiPoly:
    return parse_poly(text, XSYZ)


# ------------------------------------------------------------------- parsing


def test_parse_defining_polynomial_expansion():
    # (Y^2 - X*Z)^2 = Y^4 - 2*X*Y^2*Z + X^2*Z^2, expanded by hand
    p = P("X^2*Y - (Y^2 - X*Z)^2")
    expected = {
        (2, 0, 1, 0): Fraction(1),
        (0, 0, 4, 0): Fraction(-1),
        (1, 0, 2, 1): Fraction(2),
        (2, 0, 0, 2): Fraction(-1),
    }
    assert p.terms == expected


def test_parse_rational_literals_and_precedence():
    p = P("1/2*X + 3*Y^2 - 5/7")
    assert p.coefficient((1, 0, 0, 0)) == Fraction(1, 2)
    assert p.coefficient((0, 0, 2, 0)) == Fraction(3)
    assert p.coefficient((0, 0, 0, 0)) == Fraction(-5, 7)
    # ^ binds tighter than *, which binds tighter than +/-
    assert P("2*X^3") == P("2*(X^3)")
    assert P("-X^2") == -(P("X") ** 2)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        P("X + ?")
    assert err.value.position == 4


def test_parse_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable 'W'"):
        P("X + W")


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(ParseError):
        P("2X")


def test_parse_rejects_trailing_garbage():
    with pytest.raises(ParseError):
        P("X + Y)")


def test_zero_denominator_rejected():
    with pytest.raises(ParseError):
        P("1/0")


# ------------------------------------------------------------------ printing


def test_print_graded_lex_descending():
    p = P("S + X^2*Y - 3")
    assert str(p) == "X^2*Y + S - 3"
    assert str(MultiPoly.zero(XSYZ)) == "0"
    assert str(P("-X - 1/2")) == "-X - 1/2"


def test_print_parse_roundtrip():
    samples = [
        "X^2*Y - Y^4 + 2*X*Y^2*Z - X^2*Z^2",
        "1/3*S^2 - 7*Z + 2",
        "-S",
        "0",
        "5/6",
    ]
    for text in samples:
        p = P(text)
        assert parse_poly(str(p), XSYZ) == p


# ---------------------------------------------------------------- arithmetic


def _coeffs():
    return st.fractions(min_value=-9, max_value=9, max_denominator=7)


def _exps():
    return st.tuples(*[st.integers(min_value=0, max_value=3)] * 4)


def _polys():
    return st.dictionaries(_exps(), _coeffs(), max_size=5).map(lambda t: MultiPoly(XSYZ, t))


@given(_polys(), _polys(), _polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + MultiPoly.zero(XSYZ) == a
    assert a * 1 == a
    assert a - a == MultiPoly.zero(XSYZ)


@given(_polys(), st.integers(min_value=0, max_value=5))
def test_power_matches_repeated_product(a, k):
    expected = MultiPoly.constant(XSYZ, 1)
    for _ in range(k):
        expected = expected * a
    assert a ** k == expected


def test_scalar_coercion():
    x = P("X")
    assert 2 * x + 1 == P("2*X + 1")
    assert Fraction(1, 2) * x == P("1/2*X")
    assert 1 - x == P("1 - X")


# ------------------------------------------------------- calculus and weights


def test_partial_derivative():
    p = P("X^2*Y - (Y^2 - X*Z)^2")
    assert p.derivative("Y") == P("X^2 - 4*Y*(Y^2 - X*Z)")
    assert p.derivative("S") == MultiPoly.zero(XSYZ)
    assert P("7").derivative("X").is_zero()


def test_substitute_shift():
    xsyzt = VarSet(("X", "S", "Y", "Z", "T"))
    images = {nm: MultiPoly.variable(xsyzt, nm) for nm in XSYZ.names}
    images["S"] = parse_poly("S + X^2*T", xsyzt)
    assert P("S").substitute(images) == parse_poly("S + X^2*T", xsyzt)
    assert P("S^2 + X").substitute(images) == parse_poly("(S + X^2*T)^2 + X", xsyzt)


def test_substitute_requires_image_for_used_variables():
    with pytest.raises(ValueError, match="no substitution image"):
        P("X + S").substitute({"X": P("X")})
    # unused variables need no image
    assert P("X^2").substitute({"X": P("X + 1")}) == P("(X + 1)^2")


@given(_polys(), _polys())
def test_substitution_is_a_ring_map(a, b):
    images = {
        "X": P("X + 1"),
        "S": P("S^2"),
        "Y": P("Y - X"),
        "Z": P("2"),
    }
    assert (a + b).substitute(images) == a.substitute(images) + b.substitute(images)
    assert (a * b).substitute(images) == a.substitute(images) * b.substitute(images)


def test_weight_degree_and_top_component():
    w = WeightFunction(XSYZ, (0, 1, 2, 4))
    p = P("X^2*Y - S^2")
    assert p.weight_degree(w) == 2
    assert p.top_component(w) == p
    q = P("Y^2 - X*Z + S + 3")
    assert q.weight_degree(w) == 4
    assert q.top_component(w) == P("Y^2 - X*Z")
    assert MultiPoly.zero(XSYZ).weight_degree(w) is None


def test_weight_function_validation():
    with pytest.raises(ValueError):
        WeightFunction(XSYZ, (0, 1, 2))
    with pytest.raises(ValueError):
        WeightFunction(XSYZ, (0, -1, 2, 4))


def test_divide_exact():
    p = P("X^3*Y + 2*X^2*S")
    assert p.divide_exact(P("X^2")) == P("X*Y + 2*S")
    with pytest.raises(ValueError, match="non-exact division"):
        P("X^2 + S").divide_exact(P("X"))
    with pytest.raises(ValueError, match="one-term divisor"):
        p.divide_exact(P("X + 1"))


def test_rename_transports_between_varsets():
    small = VarSet(("X",))
    p = parse_poly("X^2 + 1", small)
    q = p.rename(XSYZ)
    assert q == P("X^2 + 1")
    with pytest.raises(ValueError):
        P("S").rename(small)


def test_varset_mismatch_raises():
    other = VarSet(("X", "S", "Y"))
    with pytest.raises(ValueError, match="varset mismatch"):
        P("X") + parse_poly("X", other)


def test_varset_rejects_duplicates_and_bad_names():
    with pytest.raises(ValueError):
        VarSet(("X", "X"))
    with pytest.raises(ValueError):
        VarSet(("X", "2Y"))
