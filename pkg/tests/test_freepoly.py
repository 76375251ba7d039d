import random
from fractions import Fraction

import pytest

from gradedpi.errors import GradingError
from gradedpi.fields import Field
from gradedpi.freepoly import (
    GradedPolynomial,
    GradedVariable,
    expand_x,
    is_multilinear,
    lie_bracket,
    multilinear_signature,
    multilinear_variables,
    substitute,
    word_degree,
)
from gradedpi.groups import cyclic_group, symmetric_group

Q = Field.rationals()
Z2 = cyclic_group(2)


def var(fam, i, g):
    return GradedVariable(fam, i, g)


def poly(group, *words, field=Q):
    terms = {}
    for w, c in words:
        terms[tuple(w)] = terms.get(tuple(w), Fraction(0)) + Fraction(c)
    return GradedPolynomial(field, group, terms)


def test_word_degree_examples():
    assert word_degree((), Z2) == 0
    assert word_degree((var("y", 1, 1), var("y", 2, 1)), Z2) == 0
    assert word_degree((var("y", 1, 1), var("x", 2, 0), var("y", 3, 1)), Z2) == 0


def test_word_degree_multiplicative_over_small_groups():
    rng = random.Random(7)
    groups = [cyclic_group(n) for n in (2, 3, 5, 8)] + [symmetric_group(3)]
    for group in groups:
        for _ in range(60):
            u = tuple(var("x", i + 1, rng.randrange(group.order)) for i in range(rng.randrange(4)))
            v = tuple(var("x", i + 5, rng.randrange(group.order)) for i in range(rng.randrange(4)))
            assert word_degree(u + v, group) == group.mul(word_degree(u, group), word_degree(v, group))


def test_mul_by_zero():
    f = poly(Z2, ([var("y", 1, 1)], 1))
    zero = GradedPolynomial.zero(Q, Z2)
    assert (f * zero).is_zero
    assert (zero * f).is_zero


def test_product_single_words():
    f = poly(Z2, ([var("y", 1, 1)], 1))
    g = poly(Z2, ([var("y", 2, 1)], 1))
    fg = f * g
    assert fg.terms == {(var("y", 1, 1), var("y", 2, 1)): Fraction(1)}


def test_distributivity_example():
    f = poly(Z2, ([var("y", 1, 1)], 1), ([var("z", 1, 1)], 1))
    g = poly(Z2, ([var("y", 2, 1)], 1))
    fg = f * g
    assert set(fg.terms) == {
        (var("y", 1, 1), var("y", 2, 1)),
        (var("z", 1, 1), var("y", 2, 1)),
    }


def test_ring_axioms_randomized():
    rng = random.Random(41)

    def rand_poly():
        words = []
        for _ in range(rng.randrange(4)):
            w = [var(rng.choice("xyz"), rng.randrange(1, 4), rng.randrange(2)) for _ in range(rng.randrange(3))]
            if w:
                words.append((w, rng.choice([-2, -1, 1, 2, 3])))
        return poly(Z2, *words) if words else GradedPolynomial.zero(Q, Z2)

    for _ in range(40):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h


def test_homogeneous_product_degrees():
    rng = random.Random(5)
    group = symmetric_group(3)
    for _ in range(30):
        w1 = [var("x", 1, rng.randrange(6)), var("x", 2, rng.randrange(6))]
        w2 = [var("x", 3, rng.randrange(6))]
        f = GradedPolynomial(Q, group, {tuple(w1): Fraction(1)})
        g = GradedPolynomial(Q, group, {tuple(w2): Fraction(1)})
        assert (f * g).homogeneous_degree() == group.mul(
            f.homogeneous_degree(), g.homogeneous_degree()
        )


def test_substitute_identity_assignment():
    f = poly(Z2, ([var("x", 1, 0), var("x", 2, 0)], 1), ([var("x", 2, 0), var("x", 1, 0)], -1))
    assert substitute(f, {}) == f
    sigma = {v: GradedPolynomial.variable(Q, Z2, v) for v in f.variables()}
    assert substitute(f, sigma) == f


def test_substitute_commutator_by_shifted_letters():
    # x1 -> x1*w, x2 -> x2*w with w a neutral variable: four-letter polynomial
    # with two distinct words
    x1, x2, w = var("x", 1, 0), var("x", 2, 0), var("x", 9, 0)
    f = poly(Z2, ([x1, x2], 1), ([x2, x1], -1))
    sigma = {
        x1: poly(Z2, ([x1, w], 1)),
        x2: poly(Z2, ([x2, w], 1)),
    }
    out = substitute(f, sigma)
    assert len(out.terms) == 2
    assert all(len(word) == 4 for word in out.terms)
    assert not out.is_zero


def test_substitute_degree_violation():
    x1 = var("x", 1, 1)
    f = poly(Z2, ([x1], 1))
    with pytest.raises(GradingError):
        substitute(f, {x1: poly(Z2, ([var("x", 2, 0)], 1))})


def test_substitute_rejects_inhomogeneous_image():
    x1 = var("x", 1, 1)
    f = poly(Z2, ([x1], 1))
    bad = poly(Z2, ([var("x", 2, 1)], 1), ([var("x", 2, 0)], 1))
    with pytest.raises(GradingError, match="not homogeneous"):
        substitute(f, {x1: bad})


def test_substitute_multiplicative():
    rng = random.Random(11)
    x1, x2 = var("x", 1, 0), var("x", 2, 1)
    sigma = {
        x1: poly(Z2, ([var("x", 3, 0)], 2), ([var("x", 4, 1), var("x", 5, 1)], 1)),
        x2: poly(Z2, ([var("x", 6, 1)], 1)),
    }
    for _ in range(20):
        words_f = [[rng.choice([x1, x2]) for _ in range(rng.randrange(1, 3))]]
        words_g = [[rng.choice([x1, x2]) for _ in range(rng.randrange(1, 3))]]
        f = poly(Z2, *[(w, 1) for w in words_f])
        g = poly(Z2, *[(w, 1) for w in words_g])
        assert substitute(f * g, sigma) == substitute(f, sigma) * substitute(g, sigma)


def test_expand_x_examples():
    f = poly(Z2, ([var("x", 1, 1)], 1))
    assert expand_x(f) == poly(Z2, ([var("y", 1, 1)], 1), ([var("z", 1, 1)], 1))
    g = poly(Z2, ([var("y", 1, 1)], 1))
    assert expand_x(g) == g
    h = poly(Z2, ([var("x", 1, 1), var("x", 2, 1)], 1))
    assert len(expand_x(h).terms) == 4


def test_expand_x_is_a_homomorphism():
    rng = random.Random(23)

    def rand_poly():
        words = []
        for _ in range(rng.randrange(1, 3)):
            words.append(([var("x", rng.randrange(1, 4), rng.randrange(2)) for _ in range(rng.randrange(1, 3))], rng.choice([1, -1, 2])))
        return poly(Z2, *words)

    for _ in range(25):
        f, g = rand_poly(), rand_poly()
        assert expand_x(f * g) == expand_x(f) * expand_x(g)
        assert expand_x(f + g) == expand_x(f) + expand_x(g)


def test_is_multilinear():
    f = poly(Z2, ([var("x", 1, 0), var("x", 2, 0)], 1), ([var("x", 2, 0), var("x", 1, 0)], -1))
    assert is_multilinear(f, (2, 0))
    sq = poly(Z2, ([var("x", 1, 0), var("x", 1, 0)], 1))
    assert not is_multilinear(sq, (2, 0))
    assert not is_multilinear(sq, (1, 0))


def test_is_multilinear_mixed_families():
    from gradedpi.semiidentities import sp_d

    f = sp_d(2, 1, Z2)
    # two degree-1 slots (indices 1, 2) and one more (index 3): over Z2 the
    # x-variable of degree g^-1 = 1 lands in the same block
    assert is_multilinear(f, (0, 3))


def test_multilinear_variables_and_signature():
    f = poly(Z2, ([var("x", 1, 0), var("x", 2, 1)], 1), ([var("x", 2, 1), var("x", 1, 0)], 1))
    assert multilinear_variables(f) == (var("x", 1, 0), var("x", 2, 1))
    assert multilinear_signature(f) == (1, 1)
    g = poly(Z2, ([var("x", 1, 0)], 1), ([var("x", 2, 1)], 1))
    assert multilinear_variables(g) is None


def test_lie_bracket():
    x1, x2 = var("x", 1, 1), var("x", 2, 1)
    f = GradedPolynomial.variable(Q, Z2, x1)
    g = GradedPolynomial.variable(Q, Z2, x2)
    br = lie_bracket(f, g)
    assert br == poly(Z2, ([x1, x2], 1), ([x2, x1], -1))
    assert lie_bracket(f, f).is_zero


def test_field_and_group_mismatch():
    f = poly(Z2, ([var("x", 1, 0)], 1))
    g3 = GradedPolynomial(Q, cyclic_group(3), {(var("x", 1, 0),): Fraction(1)})
    with pytest.raises(GradingError):
        f + g3
    f5 = GradedPolynomial(Field.prime(5), Z2, {(var("x", 1, 0),): 1})
    with pytest.raises(GradingError):
        f * f5


def test_zero_coefficients_dropped():
    f = poly(Z2, ([var("x", 1, 0)], 1), ([var("x", 1, 0)], -1))
    assert f.is_zero
    assert f.terms == {}
