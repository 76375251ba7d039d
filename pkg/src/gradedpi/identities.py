"""Graded identity checking, codimension computation, and the symbolic
no-identity certificate for the 2x2 block counterexample.

Multilinear identity testing evaluates on basis tuples only, which is
sufficient by multilinearity.  Codimension builds the matrix whose rows are
the n! monomials of the multilinear space and whose columns are evaluations
at (assignment tuple, output coordinate); its rank is the codimension and
its left kernel is the identity space.  Since the rank can never exceed n!,
the computation first samples a deterministic schedule of sparse
homogeneous tuples and stops as soon as the rank reaches n! (no identities
to find); the exhaustive basis sweep, guarded by the cell budget, runs only
when a kernel may exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial
import random

from .algebras import GradedAlgebra, Subspace, SubalgebraPair, evaluate
from .errors import GradingError, NonMultilinearError, ResourceGuardError
from .fields import Field
from .freepoly import (
    GradedPolynomial,
    GradedVariable,
    _substitute_raw,
    canonical_variables,
    multilinear_variables,
    substitute,
    word_key,
)
from .groups import GroupTable
from .linalg import RowReducer, Vec, fraction_free_rank, nullspace

DEFAULT_BUDGET = 10_000_000
_SAMPLE_SEED = 0x5EED


@dataclass(frozen=True)
class SignatureSpace:
    """The multilinear space for per-degree variable counts.

    ``counts[g]`` variables of each degree g, indexed globally 1..n in
    group-element order.  The X-variable space has dimension n!; the Y/Z
    variant has dimension 2^n * n!.
    """

    group: GroupTable
    counts: tuple

    def __post_init__(self):
        if len(self.counts) != self.group.order:
            raise GradingError(
                f"signature needs {self.group.order} counts, got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise GradingError("signature counts must be >= 0")

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def dim_p(self) -> int:
        return factorial(self.n)

    @property
    def dim_v(self) -> int:
        return 2 ** self.n * factorial(self.n)

    def variables(self, family: str = "x") -> tuple:
        return canonical_variables(self.group, self.counts, family)

    def p_words(self):
        """The n! monomials of the X-space, in a fixed deterministic order."""
        return [perm for perm in permutations(self.variables("x"))]

    def v_words(self):
        """The 2^n n! monomials of the Y/Z-space."""
        out = []
        for perm in permutations(range(self.n)):
            for mask in product("yz", repeat=self.n):
                base = self.variables("x")
                out.append(tuple(
                    GradedVariable(mask[p], base[p].index, base[p].degree) for p in perm
                ))
        return out


@dataclass
class IdentityReport:
    """Result of a codimension computation."""

    counts: tuple
    codimension: int
    identities: tuple
    strategy: str

    def as_dict(self) -> dict:
        from .grammar import print_poly

        return {
            "signature": list(self.counts),
            "codimension": self.codimension,
            "identities": [print_poly(f) for f in self.identities],
            "strategy": self.strategy,
        }


def _component_basis(target, g: int) -> list[Vec]:
    if isinstance(target, GradedAlgebra):
        return [target.basis_vector(i) for i in target.component_indices(g)]
    if isinstance(target, Subspace):
        return target.component_rows(g)
    raise TypeError(f"expected GradedAlgebra or Subspace, got {type(target).__name__}")


def _parent_algebra(target) -> GradedAlgebra:
    return target if isinstance(target, GradedAlgebra) else target.parent


def check_identity_multilinear(f: GradedPolynomial, target) -> bool:
    """True iff the multilinear ``f`` vanishes under every assignment of
    basis elements of matching degrees (sufficient by multilinearity)."""
    variables = multilinear_variables(f)
    if variables is None:
        raise NonMultilinearError("check_identity_multilinear needs a multilinear polynomial")
    if f.is_zero:
        return True
    algebra = _parent_algebra(target)
    bases = [_component_basis(target, v.degree) for v in variables]
    for choice in product(*bases):
        assignment = dict(zip(variables, choice))
        if evaluate(algebra, f, assignment):
            return False
    return True


def check_identity_general(f: GradedPolynomial, target, budget: int = DEFAULT_BUDGET) -> bool:
    """Exact identity test for arbitrary polynomials over the rationals.

    For each variable of degree d in f, evaluation points run over the full
    grid of coordinate combinations {0..d}^dim of its component; since the
    evaluation is polynomial of degree <= d in each coordinate, vanishing on
    the grid is equivalent to vanishing identically (interpolation over a
    characteristic-0 field).  Prime fields are rejected: for small p the
    grid does not separate polynomials.
    """
    if f.field.kind != "rational":
        raise GradingError("check_identity_general requires the rational field")
    if f.is_zero:
        return True
    algebra = _parent_algebra(target)
    variables = sorted(f.variables())
    degrees = {
        v: max(sum(1 for u in word if u == v) for word in f.terms) for v in variables
    }
    grids = []
    total = 1
    for v in variables:
        basis = _component_basis(target, v.degree)
        pts = []
        for coords in product(range(degrees[v] + 1), repeat=len(basis)):
            vec: Vec = {}
            for c, row in zip(coords, basis):
                if c:
                    for k, val in row.items():
                        acc = vec.get(k, Fraction(0)) + c * val
                        if acc:
                            vec[k] = acc
                        else:
                            vec.pop(k, None)
            pts.append(vec)
        grids.append(pts)
        total *= len(pts)
        if total > budget:
            raise ResourceGuardError(
                f"evaluation grid of size {total} exceeds the budget {budget}"
            )
    for choice in product(*grids):
        assignment = dict(zip(variables, choice))
        if evaluate(algebra, f, assignment):
            return False
    return True


def _evaluate_monomials(algebra, words, variables, choice):
    assignment = dict(zip(variables, choice))
    out = []
    for word in words:
        acc = None
        for v in word:
            acc = assignment[v] if acc is None else algebra.mul_vec(acc, assignment[v])
            if not acc:
                acc = {}
                break
        out.append(acc if acc is not None else {})
    return out


def _sample_schedule(rng, bases, trial, n):
    """A deterministic sparse homogeneous element per variable slot.

    Support is drawn from a growing prefix of each component basis; the
    canonical basis order puts short words first, so early trials stay below
    any truncation threshold while still mixing blocks.
    """
    out = []
    for basis in bases:
        dim = len(basis)
        prefix = min(dim, (trial + 1) * max(4, 2 * n))
        k = min(dim, 2 + trial % 3)
        picks = rng.sample(range(prefix), min(k, prefix))
        vec: Vec = {}
        for p in picks:
            c = Fraction(rng.randrange(1, 7))
            for kk, val in basis[p].items():
                vec[kk] = vec.get(kk, Fraction(0)) + c * val
        out.append(vec)
    return out


def codimension(A: GradedAlgebra, counts, budget: int = DEFAULT_BUDGET,
                exhaustive_preference: int = 1_000_000) -> IdentityReport:
    """Codimension and identity basis of the multilinear space of ``counts``.

    When the exhaustive sweep is affordable it runs directly and the exact
    left kernel is returned as canonical polynomials (distinct leading
    monomials).  Otherwise sampling may certify codimension n! early; a
    rank below n! with an over-budget sweep raises ResourceGuardError
    because the kernel could not be certified.
    """
    sig = SignatureSpace(A.group, tuple(counts))
    if sig.n < 1:
        raise GradingError("codimension needs at least one variable")
    words = sig.p_words()
    variables = sig.variables("x")
    bases = [
        [A.basis_vector(i) for i in A.component_indices(v.degree)] for v in variables
    ]
    n_fact = sig.dim_p
    tuple_count = 1
    for b in bases:
        tuple_count *= len(b)
    full_cells = tuple_count * A.dim

    reducer = RowReducer(A.field)
    key_index: dict = {}

    def rows_from(choice) -> None:
        evals = _evaluate_monomials(A, words, variables, choice)
        coords: dict = {}
        for pos, vec in enumerate(evals):
            for k, c in vec.items():
                coords.setdefault(k, {})[pos] = c
        for k in sorted(coords, key=lambda kk: key_index.setdefault(kk, len(key_index))):
            reducer.add(coords[k])

    strategy = "exhaustive"
    if (full_cells > min(budget, exhaustive_preference)
            and A.field.kind == "rational" and all(bases)):
        rng = random.Random(_SAMPLE_SEED)
        for trial in range(8 * n_fact + 16):
            rows_from(_sample_schedule(rng, bases, trial, sig.n))
            if reducer.rank == n_fact:
                return IdentityReport(sig.counts, n_fact, (), "sampled-full-rank")
        strategy = "exhaustive-after-sampling"

    if full_cells > budget:
        raise ResourceGuardError(
            f"evaluation matrix of {full_cells} cells exceeds the budget {budget} "
            f"and sampling did not certify full rank"
        )
    for choice in product(*bases):
        rows_from(choice)
        if reducer.rank == n_fact:
            return IdentityReport(sig.counts, n_fact, (), strategy)

    # left kernel: coefficient vectors orthogonal to every collected row
    dense_rows = []
    for row in reducer.rows():
        dense_rows.append([row.get(i, A.field.zero) for i in range(n_fact)])
    kernel = nullspace(A.field, dense_rows, n_fact)
    # normalize the kernel basis against the canonical word order so the
    # reported polynomials have pairwise distinct leading monomials
    order = sorted(range(n_fact), key=lambda i: word_key(words[i]))
    rank_of = {i: r for r, i in enumerate(order)}
    canon = RowReducer(A.field)
    for coeffs in kernel:
        canon.add({rank_of[i]: c for i, c in enumerate(coeffs) if not A.field.is_zero(c)})
    identities = []
    for row in canon.rows():
        terms = {words[order[r]]: c for r, c in row.items()}
        identities.append(GradedPolynomial(A.field, A.group, terms))
    return IdentityReport(sig.counts, reducer.rank, tuple(identities), strategy)


# ---------------------------------------------------------------------------
# the symbolic generic-matrix certificate
# ---------------------------------------------------------------------------


def _sym_mul(a, b):
    """Multiply 2x2 matrices whose entries are sparse free-algebra polynomials
    (dict word-tuple -> Fraction)."""
    out = [[{}, {}], [{}, {}]]
    for i in range(2):
        for j in range(2):
            acc: dict = {}
            for k in range(2):
                for w1, c1 in a[i][k].items():
                    for w2, c2 in b[k][j].items():
                        w = w1 + w2
                        acc[w] = acc.get(w, Fraction(0)) + c1 * c2
            out[i][j] = {w: c for w, c in acc.items() if c}
    return out


def generic_no_identity_check(n0: int, n1: int):
    """Certify that the block counterexample satisfies no identity of the
    given signature, by the generic substitution a_i = diag(u_i, v_i),
    b_i = antidiag(w_i, t_i) over the untruncated free algebra.

    Returns ``(rank == (n0+n1)!, rank)`` where the rank is that of the n!
    monomial evaluations flattened over the (block, word) basis.
    """
    if n0 < 0 or n1 < 0:
        raise GradingError("signature counts must be >= 0")
    gens = []
    for i in range(1, n0 + 1):
        gens.append([[{(("u", i),): Fraction(1)}, {}], [{}, {(("v", i),): Fraction(1)}]])
    for i in range(1, n1 + 1):
        gens.append([[{}, {(("w", i),): Fraction(1)}], [{(("t", i),): Fraction(1)}, {}]])
    unit = [[{(): Fraction(1)}, {}], [{}, {(): Fraction(1)}]]

    rows = []
    keys: dict = {}
    for perm in permutations(range(n0 + n1)):
        acc = unit
        for p in perm:
            acc = _sym_mul(acc, gens[p])
        flat = {}
        for i in range(2):
            for j in range(2):
                for w, c in acc[i][j].items():
                    flat[((i, j), w)] = c
        row = {}
        for key, c in flat.items():
            row[keys.setdefault(key, len(keys))] = c
        rows.append(row)
    width = len(keys)
    dense = [[row.get(c, Fraction(0)) for c in range(width)] for row in rows]
    r = fraction_free_rank(dense)
    return r == factorial(n0 + n1), r


# ---------------------------------------------------------------------------
# the left-ideal witness and the composition corollaries
# ---------------------------------------------------------------------------


def left_ideal_witness(f: GradedPolynomial, w: GradedPolynomial) -> GradedPolynomial:
    """Substitute x_i^(h_i) * w for each variable of the multilinear ``f``,
    where h_i = deg_i * deg(w)^-1, inside the free graded algebra.

    The result is degree-preserving (each image is homogeneous of the
    original degree) and is always a nonzero polynomial, which witnesses
    that the homogeneous left ideal generated by w satisfies no identity.
    """
    f._require_compatible(w)
    variables = multilinear_variables(f)
    if variables is None or f.is_zero:
        raise NonMultilinearError("left_ideal_witness needs a nonzero multilinear polynomial")
    if w.is_zero:
        raise GradingError("w must be nonzero")
    g = w.homogeneous_degree()
    if g is None:
        raise GradingError("w must be homogeneous")
    group = f.group
    sigma = {}
    fresh = set()
    for v in variables:
        h = group.mul(v.degree, group.inv(g))
        marker = GradedVariable("x", v.index, h)
        if marker in fresh:
            raise GradingError("variables of f must carry distinct indices")
        fresh.add(marker)
        sigma[v] = GradedPolynomial.variable(f.field, group, marker) * w
    out = substitute(f, sigma)
    assert not out.is_zero, "left ideal witness vanished; this contradicts the lemma"
    return out


def _renamed_copy(g: GradedPolynomial, copy_index: int, stride: int, degree_for_slot) -> GradedPolynomial:
    """Rebuild ``g`` on fresh doubly-indexed x-variables: slot j becomes
    x_{copy_index*stride + j} with the degree prescribed by degree_for_slot(j)."""
    g_vars = multilinear_variables(g)
    mapping = {}
    for j, v in enumerate(g_vars, start=1):
        mapping[v] = GradedVariable("x", copy_index * stride + j, degree_for_slot(j, v))
    terms = {}
    for word, coeff in g.terms.items():
        terms[tuple(mapping[v] for v in word)] = coeff
    return GradedPolynomial(g.field, g.group, terms)


def compose_outer_ordinary(f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
    """f(g(x_11,...,x_1n), ..., g(x_m1,...,x_mn)) for an ordinary multilinear
    outer polynomial f (neutral degrees only) and a graded multilinear g."""
    f_vars = multilinear_variables(f)
    g_vars = multilinear_variables(g)
    if f_vars is None or g_vars is None:
        raise NonMultilinearError("composition needs multilinear polynomials")
    if any(v.degree != f.group.identity for v in f_vars):
        raise GradingError("the outer polynomial must use neutral variables only")
    stride = 10 ** len(str(max(1, len(g_vars))))
    images = {}
    for i, v in enumerate(f_vars, start=1):
        images[v] = _renamed_copy(g, i, stride, lambda j, gv: gv.degree)
    return _substitute_raw(f, images)


def compose_outer_graded(f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
    """f's i-th slot receives a copy of the ordinary multilinear g whose
    first variable carries f's i-th degree and whose tail is neutral."""
    f_vars = multilinear_variables(f)
    g_vars = multilinear_variables(g)
    if f_vars is None or g_vars is None:
        raise NonMultilinearError("composition needs multilinear polynomials")
    if any(v.degree != g.group.identity for v in g_vars):
        raise GradingError("the inner polynomial must be ordinary (neutral variables)")
    stride = 10 ** len(str(max(1, len(g_vars))))
    neutral = f.group.identity
    images = {}
    for i, v in enumerate(f_vars, start=1):
        deg_i = v.degree
        images[v] = _renamed_copy(
            g, i, stride, lambda j, gv, d=deg_i: d if j == 1 else neutral
        )
    return substitute(f, images)


# ---------------------------------------------------------------------------
# sum decomposition report
# ---------------------------------------------------------------------------


@dataclass
class DegreeDecomposition:
    degree: int
    dim_a: int
    dim_b: int
    dim_c: int
    dim_sum: int

    @property
    def holds(self) -> bool:
        return self.dim_sum == self.dim_a


def check_sum_decomposition(A: GradedAlgebra, pair: SubalgebraPair) -> list[DegreeDecomposition]:
    """Verify A_g = B_g + C_g for every degree, via exact ranks."""
    if not (pair.b.homogeneous and pair.c.homogeneous):
        raise GradingError("sum decomposition needs homogeneous subalgebras")
    out = []
    for g in A.group.elements():
        rows_b = pair.b.component_rows(g)
        rows_c = pair.c.component_rows(g)
        red = RowReducer(A.field)
        for r in rows_b:
            red.add(r)
        for r in rows_c:
            red.add(r)
        out.append(
            DegreeDecomposition(g, A.component_dim(g), len(rows_b), len(rows_c), red.rank)
        )
    return out
