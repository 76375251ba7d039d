"""Finite-dimensional group-graded algebras given by sparse structure constants.

Elements are sparse coordinate vectors (dict basis index -> scalar).  The
module also provides homogeneous subspaces in reduced echelon form, the
subalgebra pairs (B, C) studied throughout, and constructors for every
model the test suites exercise: elementary-graded matrix algebras, group
algebras, truncated free algebras and the 2x2 block constructions over
them, plus finite direct powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import AlgebraError, EvaluationError, GradingError
from .fields import Field
from .freepoly import GradedPolynomial, GradedVariable
from .groups import GroupTable, cyclic_group, trivial_group
from .linalg import RowReducer, Vec, vec_add_scaled

ASSOC_CHECK_DIM_CAP = 200


class GradedAlgebra:
    """An associative algebra with basis labels, a grading map and sparse
    structure constants ``mult[(i, j)] = {k: coeff}``."""

    def __init__(self, field: Field, group: GroupTable, labels: Sequence[str],
                 grading: Sequence[int], mult: Mapping, name: str = ""):
        self.field = field
        self.group = group
        self.labels = tuple(labels)
        self.grading = tuple(grading)
        self.name = name or "algebra"
        if len(self.grading) != len(self.labels):
            raise AlgebraError("grading must assign a degree to every basis vector")
        for g in self.grading:
            if not 0 <= g < group.order:
                raise AlgebraError(f"grading degree {g} outside group of order {group.order}")
        self.mult = {}
        for (i, j), out in mult.items():
            clean = {k: c for k, c in out.items() if not field.is_zero(c)}
            if clean:
                self.mult[(i, j)] = clean
        self._components: dict[int, tuple[int, ...]] = {}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> Vec:
        return {i: self.field.one}

    def component_indices(self, g: int) -> tuple[int, ...]:
        if g not in self._components:
            self._components[g] = tuple(i for i, d in enumerate(self.grading) if d == g)
        return self._components[g]

    def component_dim(self, g: int) -> int:
        return len(self.component_indices(g))

    def basis_product(self, i: int, j: int) -> Vec:
        return self.mult.get((i, j), {})

    def mul_vec(self, u: Vec, v: Vec) -> Vec:
        f = self.field
        out: Vec = {}
        for i, ci in u.items():
            for j, cj in v.items():
                prod_ij = self.mult.get((i, j))
                if not prod_ij:
                    continue
                c = f.mul(ci, cj)
                for k, ck in prod_ij.items():
                    acc = f.add(out.get(k, f.zero), f.mul(c, ck))
                    if f.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    def vec_degree(self, v: Vec) -> int | None:
        """Homogeneous degree of a vector; identity for zero, None if mixed."""
        if not v:
            return self.group.identity
        degrees = {self.grading[i] for i in v}
        return degrees.pop() if len(degrees) == 1 else None

    def validate(self, check_associativity: bool = True) -> None:
        """Exhaustive grading-compatibility and associativity checks.

        Associativity over all basis triples is cubic in the dimension and
        is refused above ASSOC_CHECK_DIM_CAP.
        """
        grp = self.group
        for (i, j), out in self.mult.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraError(f"mult entry ({i},{j}) out of basis range")
            expected = grp.mul(self.grading[i], self.grading[j])
            for k in out:
                if not 0 <= k < self.dim:
                    raise AlgebraError(f"mult entry ({i},{j}) hits invalid basis index {k}")
                if self.grading[k] != expected:
                    raise AlgebraError(
                        f"grading incompatibility at ({i},{j},{k}): product of degrees "
                        f"{grp.label(self.grading[i])},{grp.label(self.grading[j])} is "
                        f"{grp.label(expected)} but basis vector {k} has degree "
                        f"{grp.label(self.grading[k])}"
                    )
        if not check_associativity:
            return
        if self.dim > ASSOC_CHECK_DIM_CAP:
            raise AlgebraError(
                f"associativity check refused for dim {self.dim} > {ASSOC_CHECK_DIM_CAP}"
            )
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.basis_product(i, j)
                for k in range(self.dim):
                    left = self.mul_vec(ij, self.basis_vector(k))
                    right = self.mul_vec(self.basis_vector(i), self.basis_product(j, k))
                    if left != right:
                        raise AlgebraError(f"associativity fails at triple ({i},{j},{k})")

    def format_vec(self, v: Vec) -> str:
        if not v:
            return "0"
        bits = []
        for i in sorted(v):
            c = self.field.fmt(v[i])
            bits.append(f"{self.labels[i]}" if c == "1" else f"{c}*{self.labels[i]}")
        return " + ".join(bits)

    def __repr__(self):
        return f"GradedAlgebra({self.name}, dim={self.dim}, group order {self.group.order})"


class Subspace:
    """Span of vectors inside a GradedAlgebra, kept in reduced echelon form.

    The homogeneity flag is detected on construction: a subspace is
    homogeneous exactly when every reduced basis row is supported in a
    single degree (projections of members of a homogeneous subspace stay
    inside it, which forces reduced rows to be homogeneous).
    """

    def __init__(self, parent: GradedAlgebra, vectors: Iterable[Vec]):
        self.parent = parent
        red = RowReducer(parent.field)
        for v in vectors:
            red.add(v)
        self.rows = red.rows()
        self._red = red
        self.homogeneous = all(parent.vec_degree(r) is not None for r in self.rows)

    @classmethod
    def full(cls, parent: GradedAlgebra) -> "Subspace":
        return cls(parent, (parent.basis_vector(i) for i in range(parent.dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec: Vec) -> bool:
        return self._red.contains(vec)

    def component(self, g: int) -> "Subspace":
        """Basis of the intersection with the degree-g component."""
        if not self.homogeneous:
            raise GradingError("component requires a homogeneous subspace")
        return Subspace(self.parent, [r for r in self.rows if self.parent.vec_degree(r) == g])

    def component_rows(self, g: int) -> list[Vec]:
        if not self.homogeneous:
            raise GradingError("component requires a homogeneous subspace")
        return [r for r in self.rows if self.parent.vec_degree(r) == g]

    def closed_under_product(self) -> bool:
        return all(
            self.contains(self.parent.mul_vec(u, v)) for u in self.rows for v in self.rows
        )

    def is_ideal(self) -> bool:
        A = self.parent
        for i in range(A.dim):
            e = A.basis_vector(i)
            for r in self.rows:
                if not self.contains(A.mul_vec(e, r)) or not self.contains(A.mul_vec(r, e)):
                    return False
        return True

    def intersection_dim(self, other: "Subspace") -> int:
        joint = RowReducer(self.parent.field)
        for r in self.rows:
            joint.add(r)
        for r in other.rows:
            joint.add(r)
        return self.dim + other.dim - joint.rank

    def __repr__(self):
        return f"Subspace(dim={self.dim}, homogeneous={self.homogeneous})"


@dataclass
class SubalgebraPair:
    """Homogeneous subalgebras B, C of a common parent, with B optionally an ideal."""

    b: Subspace
    c: Subspace
    b_is_ideal: bool = False

    def validate(self) -> None:
        A = self.b.parent
        if self.c.parent is not A:
            raise AlgebraError("B and C must live in the same algebra")
        if not (self.b.homogeneous and self.c.homogeneous):
            raise AlgebraError("B and C must be homogeneous")
        if not self.b.closed_under_product():
            raise AlgebraError("B is not closed under multiplication")
        if not self.c.closed_under_product():
            raise AlgebraError("C is not closed under multiplication")
        if self.b_is_ideal and not self.b.is_ideal():
            raise AlgebraError("B is flagged as an ideal but is not one")
        joint = RowReducer(A.field)
        for r in self.b.rows:
            joint.add(r)
        for r in self.c.rows:
            joint.add(r)
        if joint.rank != A.dim:
            raise AlgebraError(f"B + C spans dimension {joint.rank} < dim A = {A.dim}")


def homogeneous_component(obj, g: int) -> Subspace:
    """The degree-g part of an algebra or of a homogeneous subspace."""
    if isinstance(obj, GradedAlgebra):
        return Subspace(obj, (obj.basis_vector(i) for i in obj.component_indices(g)))
    if isinstance(obj, Subspace):
        return obj.component(g)
    raise TypeError(f"expected GradedAlgebra or Subspace, got {type(obj).__name__}")


# ---------------------------------------------------------------------------
# evaluation of graded polynomials
# ---------------------------------------------------------------------------


def evaluate(algebra: GradedAlgebra, f: GradedPolynomial, assignment: Mapping[GradedVariable, Vec]) -> Vec:
    """Image of ``f`` under the graded homomorphism sending each variable to
    the assigned (homogeneous, degree-matching) element."""
    if f.field != algebra.field:
        raise EvaluationError("polynomial and algebra have different fields")
    if f.group != algebra.group:
        raise EvaluationError("polynomial and algebra have different groups")
    for var, vec in assignment.items():
        deg = algebra.vec_degree(vec)
        if deg is None:
            raise GradingError(f"assignment for {var} is not homogeneous")
        if vec and deg != var.degree:
            raise GradingError(
                f"assignment for {var} has degree {algebra.group.label(deg)}, "
                f"expected {algebra.group.label(var.degree)}"
            )
    field = algebra.field
    out: Vec = {}
    for word, coeff in f.terms.items():
        if not word:
            raise EvaluationError("cannot evaluate the empty word in a non-unital algebra")
        acc: Vec | None = None
        for v in word:
            if v not in assignment:
                raise EvaluationError(f"unassigned variable {v}")
            acc = dict(assignment[v]) if acc is None else algebra.mul_vec(acc, assignment[v])
            if not acc:
                break
        out = vec_add_scaled(field, out, coeff, acc or {})
    return out


def lie_evaluate(algebra: GradedAlgebra, expr, assignment: Mapping[GradedVariable, Vec]) -> Vec:
    """Evaluate a Lie word given as nested pairs over GradedVariable leaves.

    ``(a, b)`` denotes the bracket [a, b]; the expression is expanded to an
    associative polynomial with [a, b] = ab - ba and then evaluated.
    """
    return evaluate(algebra, lie_expand(algebra.field, algebra.group, expr), assignment)


def lie_expand(field: Field, group: GroupTable, expr) -> GradedPolynomial:
    if isinstance(expr, GradedVariable):
        return GradedPolynomial.variable(field, group, expr)
    if isinstance(expr, GradedPolynomial):
        return expr
    if isinstance(expr, tuple) and len(expr) == 2:
        left = lie_expand(field, group, expr[0])
        right = lie_expand(field, group, expr[1])
        return left * right - right * left
    raise EvaluationError(f"not a Lie word: {expr!r}")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def matrix_algebra_elementary(n: int, degrees: Sequence[int], group: GroupTable,
                              field: Field | None = None) -> GradedAlgebra:
    """M_n(F) with the elementary grading deg(e_ij) = degrees[i]^-1 * degrees[j]."""
    field = field or Field.rationals()
    if n < 1:
        raise AlgebraError("matrix size must be >= 1")
    if len(degrees) != n:
        raise AlgebraError(f"need {n} degrees, got {len(degrees)}")
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    grading = [group.mul(group.inv(degrees[i]), degrees[j]) for i in range(n) for j in range(n)]
    mult = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # e_ij * e_jk = e_ik
                mult[(i * n + j, j * n + k)] = {i * n + k: field.one}
    return GradedAlgebra(field, group, labels, grading, mult, name=f"M{n}(F) elementary")


def group_algebra(group: GroupTable, field: Field | None = None) -> GradedAlgebra:
    """The group algebra FG with its natural grading deg(u_g) = g."""
    field = field or Field.rationals()
    labels = [f"u_{group.label(g)}" for g in group.elements()]
    grading = list(group.elements())
    mult = {(g, h): {group.mul(g, h): field.one} for g in group.elements() for h in group.elements()}
    return GradedAlgebra(field, group, labels, grading, mult, name=f"F[{'G' if group.order > 1 else '1'}]")


def _words_up_to(m: int, depth: int) -> list[tuple[int, ...]]:
    """All words of length 1..depth over letters 0..m-1, length-then-lex order."""
    out: list[tuple[int, ...]] = []
    for length in range(1, depth + 1):
        out.extend(product(range(m), repeat=length))
    return out


def _word_label(word: tuple[int, ...]) -> str:
    return ".".join(f"t{i + 1}" for i in word)


def truncated_free_algebra(m: int, depth: int, group: GroupTable | None = None,
                           field: Field | None = None) -> GradedAlgebra:
    """Non-unital truncation of the free algebra on m letters: words of
    length <= depth with concatenation, longer products set to zero.  The
    grading is trivial (every word neutral)."""
    field = field or Field.rationals()
    group = group or trivial_group()
    if m < 1 or depth < 1:
        raise AlgebraError("need at least one generator and depth >= 1")
    words = _words_up_to(m, depth)
    pos = {w: i for i, w in enumerate(words)}
    labels = [_word_label(w) for w in words]
    grading = [group.identity] * len(words)
    by_len: dict[int, list] = {}
    for w in words:
        by_len.setdefault(len(w), []).append(w)
    mult = {}
    for w1 in words:
        for l2 in range(1, depth - len(w1) + 1):
            for w2 in by_len[l2]:
                mult[(pos[w1], pos[w2])] = {pos[w1 + w2]: field.one}
    return GradedAlgebra(field, group, labels, grading, mult, name=f"D<= {depth} on {m} letters")


def _block_matrix_algebra(m: int, depth: int, allowed, name: str,
                          field: Field | None = None) -> GradedAlgebra:
    """2x2 matrices over the truncated free algebra, with entry (r, c)
    restricted to the word set ``allowed(r, c, word)`` and the Z_2-grading
    that puts diagonal blocks in degree 0 and off-diagonal ones in degree 1.
    """
    field = field or Field.rationals()
    group = cyclic_group(2)
    words = _words_up_to(m, depth)
    # word-major order: all four blocks of a short word precede longer words,
    # so basis prefixes of each degree component mix both blocks
    basis = []  # (row, col, word)
    for w in words:
        for r in range(2):
            for c in range(2):
                if allowed(r, c, w):
                    basis.append((r, c, w))
    pos = {b: i for i, b in enumerate(basis)}
    labels = [f"E{r + 1}{c + 1}[{_word_label(w)}]" for r, c, w in basis]
    grading = [0 if r == c else 1 for r, c, _ in basis]
    # partners grouped by left block-row and word length keeps the sweep
    # proportional to the number of nonzero products
    partners: dict[tuple[int, int], list] = {}
    for j, (r2, c2, w2) in enumerate(basis):
        partners.setdefault((r2, len(w2)), []).append((j, c2, w2))
    mult = {}
    for i, (r1, c1, w1) in enumerate(basis):
        for l2 in range(1, depth - len(w1) + 1):
            for j, c2, w2 in partners.get((c1, l2), ()):
                key = (r1, c2, w1 + w2)
                if key not in pos:
                    raise AlgebraError(f"entry sets are not multiplicatively closed at {key}")
                mult[(i, j)] = {pos[key]: field.one}
    alg = GradedAlgebra(field, group, labels, grading, mult, name=name)
    alg._block_basis = basis  # type: ignore[attr-defined]
    return alg


def _block_span(alg: GradedAlgebra, keep) -> Subspace:
    basis = alg._block_basis  # type: ignore[attr-defined]
    return Subspace(alg, (alg.basis_vector(i) for i, b in enumerate(basis) if keep(*b)))


def counterexample_A(m: int, depth: int, field: Field | None = None) -> tuple[GradedAlgebra, SubalgebraPair]:
    """M_2 over the truncated free algebra with the Z_2-grading by block
    parity; B is the upper-triangular and C the lower-triangular subalgebra.

    Both B and C satisfy x1{1}*x2{1} = 0 while A itself has no graded
    identities up to the truncation degree.
    """
    A = _block_matrix_algebra(m, depth, lambda r, c, w: True, f"M2(D<={depth})", field=field)
    b = _block_span(A, lambda r, c, w: (r, c) != (1, 0))
    c = _block_span(A, lambda r, c, w: (r, c) != (0, 1))
    return A, SubalgebraPair(b, c, b_is_ideal=False)


def counterexample_direct_sum(m: int, depth: int, field: Field | None = None) -> tuple[GradedAlgebra, SubalgebraPair]:
    """Same block algebra, with B the top row and C the bottom row, so that
    A = B (+) C is a direct sum of homogeneous subalgebras."""
    A = _block_matrix_algebra(m, depth, lambda r, c, w: True, f"M2(D<={depth})", field=field)
    b = _block_span(A, lambda r, c, w: r == 0)
    c = _block_span(A, lambda r, c, w: r == 1)
    return A, SubalgebraPair(b, c, b_is_ideal=False)


def ideal_example_UT2(field: Field | None = None) -> tuple[GradedAlgebra, SubalgebraPair]:
    """Upper-triangular 2x2 matrices over F with deg(e12) = 1; B = span{e12}
    is a homogeneous ideal, C the diagonal."""
    field = field or Field.rationals()
    group = cyclic_group(2)
    labels = ["e11", "e12", "e22"]
    grading = [0, 1, 0]
    one = field.one
    mult = {
        (0, 0): {0: one},
        (0, 1): {1: one},
        (1, 2): {1: one},
        (2, 2): {2: one},
    }
    A = GradedAlgebra(field, group, labels, grading, mult, name="UT2")
    b = Subspace(A, [A.basis_vector(1)])
    c = Subspace(A, [A.basis_vector(0), A.basis_vector(2)])
    return A, SubalgebraPair(b, c, b_is_ideal=True)


def semi_example(m: int, depth: int, field: Field | None = None) -> tuple[GradedAlgebra, SubalgebraPair]:
    """The 2x2 block algebra over D split as S1 + S2 (words avoiding versus
    containing the first letter): diagonal entries from D, off-diagonal from
    S2; B is the diagonal S1 pair and C the all-S2 block matrix.

    B's degree-1 component is zero, so y1{1} is a semi-identity for the
    pair, and it is non-trivial because A1 != 0.
    """
    if m < 2:
        raise AlgebraError("the split needs at least two generators")

    def contains_first(w):
        return 0 in w

    A = _block_matrix_algebra(
        m, depth, lambda r, c, w: True if r == c else contains_first(w), "semi M2 split", field=field
    )
    b = _block_span(A, lambda r, c, w: r == c and not contains_first(w))
    c = _block_span(A, lambda r, c, w: contains_first(w))
    return A, SubalgebraPair(b, c, b_is_ideal=False)


def direct_power(A: GradedAlgebra, t: int) -> GradedAlgebra:
    """The finite direct power A^t with componentwise operations."""
    if t < 1:
        raise AlgebraError("direct power exponent must be >= 1")
    labels = [f"{A.labels[i]}#{s + 1}" for s in range(t) for i in range(A.dim)]
    grading = [A.grading[i] for _ in range(t) for i in range(A.dim)]
    mult = {}
    for s in range(t):
        off = s * A.dim
        for (i, j), out in A.mult.items():
            mult[(off + i, off + j)] = {off + k: c for k, c in out.items()}
    return GradedAlgebra(A.field, A.group, labels, grading, mult, name=f"{A.name}^{t}")
