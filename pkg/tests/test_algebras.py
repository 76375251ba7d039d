import random
from fractions import Fraction

import pytest

from gradedpi.algebras import (
    GradedAlgebra,
    SubalgebraPair,
    Subspace,
    counterexample_A,
    counterexample_direct_sum,
    direct_power,
    evaluate,
    group_algebra,
    homogeneous_component,
    ideal_example_UT2,
    lie_evaluate,
    matrix_algebra_elementary,
    semi_example,
    truncated_free_algebra,
)
from gradedpi.errors import AlgebraError, EvaluationError, GradingError
from gradedpi.fields import Field
from gradedpi.freepoly import GradedPolynomial, GradedVariable
from gradedpi.grammar import parse_poly
from gradedpi.groups import cyclic_group, symmetric_group, trivial_group

Q = Field.rationals()
Z2 = cyclic_group(2)


# -- constructors -----------------------------------------------------------


def test_matrix_algebra_elementary_degrees():
    A = matrix_algebra_elementary(2, (0, 1), Z2)
    A.validate()
    degs = {A.labels[i]: A.grading[i] for i in range(A.dim)}
    assert degs == {"e11": 0, "e22": 0, "e12": 1, "e21": 1}


def test_matrix_algebra_size_one():
    A = matrix_algebra_elementary(1, (0,), Z2)
    A.validate()
    assert A.dim == 1
    assert A.grading == (0,)


def test_matrix_algebra_trivial_degrees():
    A = matrix_algebra_elementary(2, (0, 0), Z2)
    A.validate()
    assert set(A.grading) == {0}


def test_group_algebra_z2():
    A = group_algebra(Z2)
    A.validate()
    assert A.dim == 2
    u0, u1 = A.basis_vector(0), A.basis_vector(1)
    assert A.mul_vec(u1, u1) == u0


def test_group_algebra_trivial():
    A = group_algebra(trivial_group())
    A.validate()
    assert A.dim == 1


def test_group_algebra_s3_noncommutative():
    g = symmetric_group(3)
    A = group_algebra(g)
    A.validate()
    found = any(
        A.mul_vec(A.basis_vector(a), A.basis_vector(b))
        != A.mul_vec(A.basis_vector(b), A.basis_vector(a))
        for a in range(6)
        for b in range(6)
    )
    assert found


def test_truncated_free_small():
    D = truncated_free_algebra(1, 2)
    D.validate()
    assert D.dim == 2  # t, t^2
    t, t2 = D.basis_vector(0), D.basis_vector(1)
    assert D.mul_vec(t, t) == t2
    assert D.mul_vec(t, t2) == {}
    assert D.mul_vec(t2, t2) == {}


def test_truncated_free_dimension():
    D = truncated_free_algebra(2, 3)
    D.validate(check_associativity=False)
    assert D.dim == 2 + 4 + 8


def test_truncated_free_associative_m2_n3():
    truncated_free_algebra(2, 3).validate()


def test_truncated_products_past_depth_vanish():
    D = truncated_free_algebra(2, 2)
    rng = random.Random(2)
    for _ in range(20):
        i, j = rng.randrange(D.dim), rng.randrange(D.dim)
        li = D.labels[i].count("t")
        lj = D.labels[j].count("t")
        prod = D.mul_vec(D.basis_vector(i), D.basis_vector(j))
        assert (prod == {}) == (li + lj > 2)


def test_counterexample_A_shape():
    A, pair = counterexample_A(1, 1)
    A.validate()
    assert A.dim == 4
    assert A.component_dim(0) == 2
    assert A.component_dim(1) == 2
    assert pair.b.dim == 3 and pair.c.dim == 3
    pair.validate()


def test_counterexample_A_intersection_is_diagonal():
    A, pair = counterexample_A(2, 2)
    d_dim = 2 + 4
    assert pair.b.intersection_dim(pair.c) == 2 * d_dim


def test_counterexample_direct_sum_splits():
    A, pair = counterexample_direct_sum(2, 2)
    A.validate(check_associativity=False)
    pair.validate()
    assert pair.b.dim + pair.c.dim == A.dim
    assert pair.b.intersection_dim(pair.c) == 0
    assert pair.b.closed_under_product()


def test_ideal_example_ut2():
    A, pair = ideal_example_UT2()
    A.validate()
    pair.validate()
    e12 = A.basis_vector(1)
    assert A.mul_vec(e12, e12) == {}  # B^2 = 0
    assert pair.c.component_rows(1) == []  # C_1 = 0
    assert pair.b.is_ideal()


def test_semi_example_structure():
    A, pair = semi_example(2, 2)
    A.validate()
    pair.validate()
    # B sits in degree 0 only
    assert pair.b.component_rows(1) == []
    assert pair.b.dim > 0
    # the (1,1)-block entries of B and C together span all of D: S1 + S2 = D
    d_dim = 2 + 4
    block11 = [i for i, lab in enumerate(A.labels) if lab.startswith("E11[")]
    assert len(block11) == d_dim


def test_semi_example_s2_is_ideal_of_d():
    D = truncated_free_algebra(2, 2)
    s2 = Subspace(D, [D.basis_vector(i) for i, lab in enumerate(D.labels) if "t1" in lab])
    assert s2.is_ideal()
    s1 = Subspace(D, [D.basis_vector(i) for i, lab in enumerate(D.labels) if "t1" not in lab])
    assert s1.closed_under_product()
    assert not s1.is_ideal()


def test_semi_example_requires_two_generators():
    with pytest.raises(AlgebraError):
        semi_example(1, 2)


# -- subspaces ---------------------------------------------------------------


def test_subspace_homogeneity_detection():
    A = group_algebra(Z2)
    hom = Subspace(A, [A.basis_vector(0)])
    assert hom.homogeneous
    mixed = Subspace(A, [{0: Fraction(1), 1: Fraction(1)}])
    assert not mixed.homogeneous
    # spanned differently but equal to the whole algebra: homogeneous again
    full = Subspace(A, [{0: Fraction(1), 1: Fraction(1)}, {0: Fraction(1), 1: Fraction(-1)}])
    assert full.homogeneous


def test_homogeneous_component_examples():
    A = group_algebra(Z2)
    comp = homogeneous_component(A, 0)
    assert comp.rows == [{0: Fraction(1)}]

    CA, pair = counterexample_A(1, 1)
    b1 = homogeneous_component(pair.b, 1)
    assert b1.dim == 1  # upper-right block of M2(D), one word
    lab = CA.labels[next(iter(b1.rows[0]))]
    assert lab.startswith("E12[")


def test_homogeneous_component_rejects_mixed_subspace():
    A = group_algebra(Z2)
    mixed = Subspace(A, [{0: Fraction(1), 1: Fraction(1)}])
    with pytest.raises(GradingError):
        homogeneous_component(mixed, 0)


def test_validate_flags_grading_violation():
    # u1*u1 = u1 breaks compatibility (degree 1+1=0 but target has degree 1)
    bad = GradedAlgebra(Q, Z2, ["a", "b"], [0, 1], {(1, 1): {1: Fraction(1)}})
    with pytest.raises(AlgebraError, match="grading incompatibility"):
        bad.validate()


def test_validate_flags_non_associativity():
    mult = {(0, 0): {1: Fraction(1)}, (1, 0): {0: Fraction(1)}}
    bad = GradedAlgebra(Q, Z2, ["a", "b"], [0, 0], mult)
    with pytest.raises(AlgebraError, match="associativity fails"):
        bad.validate()


# -- evaluation ---------------------------------------------------------------


def test_evaluate_identity_on_b():
    A, pair = counterexample_A(2, 2)
    f = parse_poly("y1{1}*y2{1}", Z2)
    rows = pair.b.component_rows(1)
    y1, y2 = GradedVariable("y", 1, 1), GradedVariable("y", 2, 1)
    for u in rows:
        for v in rows:
            assert evaluate(A, f, {y1: u, y2: v}) == {}


def test_evaluate_single_variable():
    A = group_algebra(Z2)
    f = parse_poly("x1{0}", Z2)
    a = {0: Fraction(3)}
    assert evaluate(A, f, {GradedVariable("x", 1, 0): a}) == a


def test_evaluate_off_diagonal_product_nonzero():
    A, pair = counterexample_A(2, 2)
    e12 = next(i for i, lab in enumerate(A.labels) if lab.startswith("E12["))
    e21 = next(i for i, lab in enumerate(A.labels) if lab.startswith("E21["))
    f = parse_poly("z1{1}*z2{1}", Z2)
    out = evaluate(A, f, {
        GradedVariable("z", 1, 1): A.basis_vector(e12),
        GradedVariable("z", 2, 1): A.basis_vector(e21),
    })
    assert out
    assert all(A.labels[k].startswith("E11[") for k in out)


def test_evaluate_errors():
    A = group_algebra(Z2)
    f = parse_poly("x1{1}", Z2)
    with pytest.raises(GradingError):
        evaluate(A, f, {GradedVariable("x", 1, 1): A.basis_vector(0)})
    with pytest.raises(EvaluationError):
        evaluate(A, f, {})
    mixed = {0: Fraction(1), 1: Fraction(1)}
    with pytest.raises(GradingError):
        evaluate(A, f, {GradedVariable("x", 1, 1): mixed})


def test_evaluate_multilinearity():
    A = matrix_algebra_elementary(2, (0, 1), Z2)
    f = parse_poly("x1{1}*x2{1}", Z2)
    x1, x2 = GradedVariable("x", 1, 1), GradedVariable("x", 2, 1)
    rng = random.Random(8)
    rows = [A.basis_vector(i) for i in A.component_indices(1)]
    for _ in range(10):
        a, b = rng.choice(rows), rng.choice(rows)
        w = rng.choice(rows)
        alpha, beta = Fraction(rng.randrange(-3, 4)), Fraction(rng.randrange(-3, 4))
        combo = {}
        for k, v in a.items():
            combo[k] = combo.get(k, Fraction(0)) + alpha * v
        for k, v in b.items():
            combo[k] = combo.get(k, Fraction(0)) + beta * v
        combo = {k: v for k, v in combo.items() if v}
        left = evaluate(A, f, {x1: combo, x2: w})
        right = {}
        for k, v in evaluate(A, f, {x1: a, x2: w}).items():
            right[k] = right.get(k, Fraction(0)) + alpha * v
        for k, v in evaluate(A, f, {x1: b, x2: w}).items():
            right[k] = right.get(k, Fraction(0)) + beta * v
        right = {k: v for k, v in right.items() if v}
        assert left == right


def test_lie_evaluate():
    A, pair = counterexample_A(2, 2)
    x1, x2 = GradedVariable("x", 1, 1), GradedVariable("x", 2, 1)
    from gradedpi.algebras import lie_expand

    expanded = lie_expand(Q, Z2, (x1, x2))
    assert expanded == parse_poly("x1{1}*x2{1} - x2{1}*x1{1}", Z2)
    rows = pair.b.component_rows(1)
    for u in rows[:5]:
        for v in rows[:5]:
            assert lie_evaluate(A, (x1, x2), {x1: u, x2: v}) == {}
    assert lie_evaluate(A, (x1, x1), {x1: rows[0]}) == {}


def test_direct_power():
    A = group_algebra(Z2)
    P1 = direct_power(A, 1)
    assert P1.dim == A.dim
    P3 = direct_power(A, 3)
    P3.validate()
    assert P3.dim == 3 * A.dim
    # components multiply within their copy and annihilate across copies
    assert P3.mul_vec(P3.basis_vector(0), P3.basis_vector(2)) == {}
    assert P3.mul_vec(P3.basis_vector(2), P3.basis_vector(3)) == P3.basis_vector(2)


def test_subalgebra_pair_validate_catches_bad_flag():
    A, pair = counterexample_A(1, 1)
    flagged = SubalgebraPair(pair.b, pair.c, b_is_ideal=True)
    with pytest.raises(AlgebraError, match="flagged as an ideal"):
        flagged.validate()
