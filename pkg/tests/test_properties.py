"""Property-based tests for the algebraic identities and the parser."""

import math
import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from phasestar.algebra import ComplexFraction, MultiIndex, PhasePolynomial
from phasestar.checks import random_phase_polynomial
from phasestar.expressions import (ParseError, format_canonical,
                                   parse_expression, tokenize)
from phasestar.star import (DeformationParameter, classical_limit_bracket,
                            poisson_bracket, star_commutator, star_first_order,
                            star_product)

PARAM = DeformationParameter(N=2)


def polynomials(dimension, max_degree=4, max_terms=4, max_hbar=0,
                complex_coefficients=True):
    """Strategy producing sparse integer-coefficient polynomials."""

    def build(draw):
        terms = []
        for _ in range(draw(st.integers(1, max_terms))):
            exponents = [0] * (2 * dimension)
            for _ in range(draw(st.integers(0, max_degree))):
                exponents[draw(st.integers(0, 2 * dimension - 1))] += 1
            coefficient = ComplexFraction(
                draw(st.integers(-5, 5)),
                draw(st.integers(-5, 5)) if complex_coefficients else 0)
            index = MultiIndex(tuple(exponents[:dimension]),
                               tuple(exponents[dimension:]),
                               draw(st.integers(0, max_hbar)))
            terms.append((index, coefficient))
        return PhasePolynomial(dimension, terms)

    return st.composite(lambda draw: build(draw))()


@given(st.integers(1, 2).flatmap(
    lambda d: st.tuples(polynomials(d), polynomials(d), polynomials(d))))
@settings(max_examples=60, deadline=None)
def test_star_associativity(triple):
    f, g, h = triple
    assert star_product(star_product(f, g, PARAM), h, PARAM) == \
        star_product(f, star_product(g, h, PARAM), PARAM)


@given(st.integers(1, 2).flatmap(
    lambda d: st.tuples(polynomials(d, max_hbar=2), polynomials(d, max_hbar=2))))
@settings(max_examples=80, deadline=None)
def test_grade_zero_of_star_is_pointwise_product(pair):
    f, g = pair
    assert star_product(f, g, PARAM).hbar_component(0) == (f * g).hbar_component(0)


@given(st.integers(1, 2).flatmap(
    lambda d: st.tuples(polynomials(d), polynomials(d), polynomials(d))),
    st.sampled_from([2, Fraction(1, 2), ComplexFraction(0, 1),
                     ComplexFraction(3, -2)]))
@settings(max_examples=60, deadline=None)
def test_star_is_bilinear(triple, scale):
    # scalars pull out of either slot and the product distributes over sums;
    # this is what lets normalizations be applied after the product exactly
    f, g, h = triple
    assert star_product(f * scale, g, PARAM) == star_product(f, g, PARAM) * scale
    assert star_product(f, g * scale, PARAM) == star_product(f, g, PARAM) * scale
    assert star_product(f + g, h, PARAM) == \
        star_product(f, h, PARAM) + star_product(g, h, PARAM)


@given(st.integers(1, 2).flatmap(
    lambda d: st.tuples(polynomials(d), polynomials(d))),
    st.sampled_from([1.0, 2.0, 3.0, 10.0]))
@settings(max_examples=80, deadline=None)
def test_classical_limit_recovers_poisson_bracket(pair, n_value):
    f, g = pair
    bracket = classical_limit_bracket(f, g, DeformationParameter(N=n_value))
    assert bracket.hbar_component(0) == poisson_bracket(f, g)


@given(st.integers(1, 2).flatmap(
    lambda d: st.tuples(polynomials(d), polynomials(d))))
@settings(max_examples=80, deadline=None)
def test_truncation_differs_from_second_order_up(pair):
    f, g = pair
    difference = star_product(f, g, PARAM) - star_first_order(f, g, PARAM)
    lowest = difference.min_hbar_power()
    assert lowest is None or lowest >= 2


@given(st.integers(1, 2).flatmap(lambda d: polynomials(d)))
@settings(max_examples=80, deadline=None)
def test_self_star_corrections_are_even_and_second_order_up(f):
    difference = star_product(f, f, PARAM) - f * f
    lowest = difference.min_hbar_power()
    assert lowest is None or lowest >= 2
    assert all(index.hbar_power % 2 == 0 for index in difference.terms)


@given(st.integers(1, 2).flatmap(lambda d: polynomials(d)))
@settings(max_examples=60, deadline=None)
def test_self_commutators_vanish(f):
    assert star_commutator(f, f, PARAM).is_zero
    assert poisson_bracket(f, f).is_zero


def test_commutator_canon_all_pairs():
    for dimension in (1, 2, 3):
        for i in range(dimension):
            for j in range(dimension):
                q = PhasePolynomial.variable_q(dimension, i)
                p = PhasePolynomial.variable_p(dimension, j)
                commutator = star_commutator(q, p, PARAM)
                if i == j:
                    assert commutator == PhasePolynomial.hbar(
                        dimension, coefficient=ComplexFraction(0, 1))
                else:
                    assert commutator.is_zero


@given(st.integers(0, 10 ** 9))
@settings(max_examples=60, deadline=None)
def test_seeded_generator_is_deterministic(seed):
    a = random_phase_polynomial(random.Random(seed), 2)
    b = random_phase_polynomial(random.Random(seed), 2)
    assert a == b


@given(st.integers(1, 2).flatmap(
    lambda d: st.tuples(st.just(d), polynomials(d, max_degree=4, max_hbar=1,
                                                complex_coefficients=True))))
@settings(max_examples=120, deadline=None)
def test_parse_format_round_trip(case):
    dimension, poly = case
    assert parse_expression(format_canonical(poly), dimension) == poly


@given(st.text(min_size=1, max_size=40))
@settings(max_examples=150, deadline=None)
def test_tokenizer_positions_are_sane(source):
    try:
        tokens = tokenize(source)
    except ParseError as error:
        assert 0 <= error.position < len(source)
        return
    positions = [t.position for t in tokens]
    assert positions == sorted(positions)
    assert len(set(positions)) == len(positions)
    for token in tokens:
        assert source[token.position:token.position + len(token.text)] == token.text


@given(st.text(min_size=1, max_size=30))
@settings(max_examples=150, deadline=None)
def test_parser_rejections_carry_offsets_inside_source(source):
    try:
        parse_expression(source, 2, {"omega": 2.0})
    except ParseError as error:
        assert 0 <= error.position <= len(source)


@given(st.floats(min_value=0.05, max_value=30.0, allow_nan=False),
       st.floats(min_value=0.01, max_value=100.0, allow_nan=False))
@settings(max_examples=60, deadline=None)
def test_ladder_ratio_is_scale_invariant(x, scale):
    # any positive rescaling of the Boltzmann weights cancels in the average
    n_max = 400
    weights = [math.exp(-(n + 0.5) * x) for n in range(n_max + 1)]
    energies = [n + 0.5 for n in range(n_max + 1)]
    plain = sum(e * w for e, w in zip(energies, weights)) / sum(weights)
    scaled_weights = [scale * w for w in weights]
    scaled = sum(e * w for e, w in zip(energies, scaled_weights)) / sum(scaled_weights)
    assert math.isclose(plain, scaled, rel_tol=1e-12)
