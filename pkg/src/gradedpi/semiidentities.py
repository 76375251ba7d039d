"""Graded semi-identities for a decomposition A = B + C, the staircase
polynomials Sp_d, pattern decomposition of the Y/Z-variable spaces, good
monomial generation, and the degree-bound calculators.

A semi-identity is a polynomial over the Y and Z variable families that
vanishes whenever Y-slots take values in B and Z-slots in C.  Contexts are
immutable: registering a verified semi-identity yields a new context.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import Iterator, Mapping, Sequence

from .algebras import GradedAlgebra, SubalgebraPair, evaluate
from .combinatorics import d_y_good_monomial
from .enclosures import PowerEnclosure, power_self_enclosure
from .errors import (
    DegenerateBoundError,
    GradedPiError,
    GradingError,
    NonMultilinearError,
    ResourceGuardError,
)
from .fields import Field
from .freepoly import GradedPolynomial, GradedVariable, expand_x, multilinear_variables
from .groups import GroupTable
from .identities import DEFAULT_BUDGET, check_identity_general, check_identity_multilinear
from .linalg import RowReducer

SPANNING_DEGREE_CAP = 3


@dataclass(frozen=True)
class SemiContext:
    """An algebra with a fixed decomposition A = B + C and the semi-identities
    registered (and verified) against it."""

    algebra: GradedAlgebra
    pair: SubalgebraPair
    registered: tuple = ()
    sp_forms: frozenset = dataclass_field(default_factory=frozenset)

    @classmethod
    def create(cls, algebra: GradedAlgebra, pair: SubalgebraPair) -> "SemiContext":
        if not (pair.b.homogeneous and pair.c.homogeneous):
            raise GradingError("the decomposition must use homogeneous subalgebras")
        return cls(algebra, pair)

    def register(self, f: GradedPolynomial) -> "SemiContext":
        if not is_semi_identity(f, self):
            raise GradingError("polynomial is not a semi-identity for this decomposition")
        return SemiContext(self.algebra, self.pair, self.registered + (f,), self.sp_forms)

    def register_sp(self, d: int, g: int, alpha=None) -> "SemiContext":
        """Register Sp_d[Y^(g), X^(g^-1)] after verifying it is a semi-identity."""
        f = sp_d(d, g, self.algebra.group, self.algebra.field, alpha)
        if not is_semi_identity(f, self):
            raise GradingError(f"Sp_{d} at degree {g} is not a semi-identity here")
        return SemiContext(
            self.algebra, self.pair, self.registered + (f,),
            self.sp_forms | {(d, g)},
        )

    def has_sp(self, d: int, g: int) -> bool:
        return (d, g) in self.sp_forms


def _split_families(variables) -> tuple[list, list]:
    ys = [v for v in variables if v.family == "y"]
    zs = [v for v in variables if v.family == "z"]
    return ys, zs


def is_semi_identity(f: GradedPolynomial, ctx: SemiContext,
                     budget: int = DEFAULT_BUDGET) -> bool:
    """True iff ``f`` vanishes for all Y-values in B and Z-values in C.

    X-family variables are first expanded as x = y + z.  Multilinear
    polynomials are checked on basis tuples; the general case uses the
    exact evaluation grid (rational field only).
    """
    f = expand_x(f)
    if f.is_zero:
        return True
    variables = multilinear_variables(f)
    A = ctx.algebra
    if variables is not None:
        bases = []
        for v in variables:
            source = ctx.pair.b if v.family == "y" else ctx.pair.c
            bases.append(source.component_rows(v.degree))
        for choice in product(*bases):
            if evaluate(A, f, dict(zip(variables, choice))):
                return False
        return True
    # general case: per-family grids over the subspace components
    if A.field.kind != "rational":
        raise GradingError("general semi-identity checking requires the rational field")
    var_list = sorted(f.variables())
    degrees = {v: max(sum(1 for u in word if u == v) for word in f.terms) for v in var_list}
    grids = []
    total = 1
    for v in var_list:
        source = ctx.pair.b if v.family == "y" else ctx.pair.c
        rows = source.component_rows(v.degree)
        pts = []
        for coords in product(range(degrees[v] + 1), repeat=len(rows)):
            vec: dict = {}
            for c, row in zip(coords, rows):
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
            raise ResourceGuardError(f"evaluation grid of size {total} exceeds {budget}")
    for choice in product(*grids):
        if evaluate(A, f, dict(zip(var_list, choice))):
            return False
    return True


def is_trivial_semi(f: GradedPolynomial, ctx: SemiContext,
                    budget: int = DEFAULT_BUDGET) -> bool:
    """A semi-identity is trivial when it is already a graded identity of A,
    i.e. it vanishes with every variable (either family) ranging over the
    whole matching component of A."""
    f = expand_x(f)
    if f.is_zero:
        return True
    if multilinear_variables(f) is not None:
        return check_identity_multilinear(f, ctx.algebra)
    return check_identity_general(f, ctx.algebra, budget)


# ---------------------------------------------------------------------------
# pattern decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """Which local slots carry Y-variables, per group degree."""

    y_slots: tuple  # tuple over degrees of sorted local index tuples

    @property
    def r(self) -> tuple:
        return tuple(len(t) for t in self.y_slots)


def _infer_signature(f: GradedPolynomial) -> tuple:
    variables = multilinear_variables(f)
    if variables is None:
        raise NonMultilinearError("pattern decomposition needs a multilinear polynomial")
    counts = [0] * f.group.order
    for v in variables:
        counts[v.degree] += 1
    offsets = []
    acc = 0
    for c in counts:
        offsets.append(acc)
        acc += c
    for v in variables:
        local = v.index - offsets[v.degree]
        if not 1 <= local <= counts[v.degree]:
            raise NonMultilinearError(
                "pattern decomposition needs the canonical global variable indexing"
            )
    return tuple(counts), tuple(offsets)


def word_pattern(word, counts, offsets) -> Pattern:
    slots = [[] for _ in counts]
    for v in word:
        if v.family == "y":
            slots[v.degree].append(v.index - offsets[v.degree])
    return Pattern(tuple(tuple(sorted(s)) for s in slots))


def pattern_split(f: GradedPolynomial) -> dict:
    """Split a multilinear Y/Z-polynomial into its pattern components.

    The components sum to ``f``; all words of one component share the same
    choice of which slots are Y and which are Z.
    """
    counts, offsets = _infer_signature(f)
    buckets: dict = {}
    for word, coeff in f.terms.items():
        pat = word_pattern(word, counts, offsets)
        buckets.setdefault(pat, {})[word] = coeff
    return {
        pat: GradedPolynomial(f.field, f.group, terms) for pat, terms in buckets.items()
    }


# ---------------------------------------------------------------------------
# Sp_d and good monomials
# ---------------------------------------------------------------------------


def sp_d(d: int, g: int, group: GroupTable, field: Field | None = None,
         alpha=None, normalize: bool = True) -> GradedPolynomial:
    """The staircase polynomial over Y^(g) and X^(g^-1):

        sum over permutations s of {1..d} of
            alpha_s * y_s(1) x_{d+1} y_s(2) x_{d+2} ... x_{2d-1} y_s(d)

    ``alpha`` maps permutation tuples to scalars (or lists them in
    lexicographic permutation order); it defaults to the alternating signs.
    The identity permutation's coefficient must be nonzero and is scaled to
    one unless ``normalize`` is disabled.
    """
    field = field or Field.rationals()
    if d < 1:
        raise GradedPiError(f"d must be >= 1, got {d}")
    if not 0 <= g < group.order:
        raise GradingError(f"degree index {g} outside group of order {group.order}")
    perms = list(permutations(range(1, d + 1)))
    if alpha is None:
        coeffs = {p: field.from_int(_sign(p)) for p in perms}
    elif isinstance(alpha, Mapping):
        coeffs = {tuple(p): c for p, c in alpha.items()}
        legal = set(perms)
        for p in coeffs:
            if p not in legal:
                raise GradedPiError(f"{p} is not a permutation of 1..{d}")
    else:
        alpha = list(alpha)
        if len(alpha) != len(perms):
            raise GradedPiError(f"need {len(perms)} coefficients, got {len(alpha)}")
        coeffs = dict(zip(perms, alpha))
    identity = tuple(range(1, d + 1))
    lead = coeffs.get(identity, field.zero)
    if field.is_zero(lead):
        raise GradedPiError("the identity permutation's coefficient must be nonzero")
    g_inv = group.inv(g)
    terms = {}
    for p, c in coeffs.items():
        if field.is_zero(c):
            continue
        word = []
        for pos, idx in enumerate(p):
            word.append(GradedVariable("y", idx, g))
            if pos < d - 1:
                word.append(GradedVariable("x", d + 1 + pos, g_inv))
        terms[tuple(word)] = field.div(c, lead) if normalize else c
    return GradedPolynomial(field, group, terms)


def _sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i + 1:
            j = p[i] - 1
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def v_pattern_words(n: int, r: int, g: int) -> list:
    """The n! monomials with Y-variables 1..r and Z-variables r+1..n, all of
    degree g, in permutation order."""
    variables = [
        GradedVariable("y" if i <= r else "z", i, g) for i in range(1, n + 1)
    ]
    return [tuple(word) for word in permutations(variables)]


def good_monomials(n: int, r: int, d: int, g: int, group: GroupTable) -> list:
    """The D-y-good monomials of the leading pattern space, where
    D = (2d - 1) * o(g); for D > r every monomial qualifies."""
    if not 0 <= r <= n:
        raise GradedPiError(f"need 0 <= r <= n, got r={r}, n={n}")
    if d < 1:
        raise GradedPiError(f"d must be >= 1, got {d}")
    D = (2 * d - 1) * group.elt_order[g]
    return [w for w in v_pattern_words(n, r, g) if d_y_good_monomial(w, D)]


def spanning_check(ctx: SemiContext, n: int, r: int, d: int, g: int,
                   budget: int = DEFAULT_BUDGET) -> bool:
    """Rank test for the generation lemma: the good monomials span the whole
    pattern space modulo the kernel of the (B, C)-evaluation map.

    Both spaces are mapped through evaluation at every (B, C) basis tuple;
    the check is that the images have equal rank.  Requires the matching
    Sp_d form to be registered in the context.
    """
    if not ctx.has_sp(d, g):
        raise GradedPiError(f"Sp_{d} at degree {g} must be registered and verified first")
    if n > SPANNING_DEGREE_CAP:
        raise ResourceGuardError(f"spanning check refused for n = {n} > {SPANNING_DEGREE_CAP}")
    words = v_pattern_words(n, r, g)
    good = set(good_monomials(n, r, d, g, ctx.algebra.group))
    A = ctx.algebra
    b_rows = ctx.pair.b.component_rows(g)
    c_rows = ctx.pair.c.component_rows(g)
    tuple_count = len(b_rows) ** r * len(c_rows) ** (n - r)
    if tuple_count * A.dim * len(words) > budget:
        raise ResourceGuardError("spanning check exceeds the evaluation budget")

    variables = [GradedVariable("y" if i <= r else "z", i, g) for i in range(1, n + 1)]
    bases = [b_rows if i <= r else c_rows for i in range(1, n + 1)]
    key_index: dict = {}
    eval_rows = {}
    for w in words:
        eval_rows[w] = {}
    for t_idx, choice in enumerate(product(*bases)):
        assignment = dict(zip(variables, choice))
        for w in words:
            acc = None
            for v in w:
                acc = assignment[v] if acc is None else A.mul_vec(acc, assignment[v])
                if not acc:
                    acc = {}
                    break
            for coord, c in (acc or {}).items():
                eval_rows[w][key_index.setdefault((t_idx, coord), len(key_index))] = c
    all_red = RowReducer(A.field)
    good_red = RowReducer(A.field)
    for w in words:
        all_red.add(dict(eval_rows[w]))
        if w in good:
            good_red.add(dict(eval_rows[w]))
    return good_red.rank == all_red.rank


# ---------------------------------------------------------------------------
# bound calculators
# ---------------------------------------------------------------------------


def riley_bound(group_order: int, d: int, n: int) -> int:
    """(|G| d - 1)^(2n): codimension bound when the neutral component
    satisfies an identity of degree d."""
    if group_order < 1 or d < 1 or n < 1:
        raise GradedPiError("all parameters must be >= 1")
    return (group_order * d - 1) ** (2 * n)


def lemma10_bound(n: int, r: int, d1: int, d2: int, o_g: int, group_order: int) -> int:
    """2^n ((2 d1 - 1) o(g) - 1)^(2r) (|G| d2 - 1)^(2(n-r)) (r+1)^(n-r)."""
    if not 0 <= r <= n:
        raise GradedPiError(f"need 0 <= r <= n, got r={r}, n={n}")
    if min(n, d1, d2, o_g, group_order) < 1:
        raise GradedPiError("n, d1, d2, o_g and the group order must be >= 1")
    return (
        2 ** n
        * ((2 * d1 - 1) * o_g - 1) ** (2 * r)
        * (group_order * d2 - 1) ** (2 * (n - r))
        * (r + 1) ** (n - r)
    )


def l8_threshold(n: int) -> Fraction:
    """n!/2^n, the per-pattern dimension threshold forcing an identity."""
    if n < 1:
        raise GradedPiError(f"n must be >= 1, got {n}")
    return Fraction(factorial(n), 2 ** n)


def l8_check(dims: Sequence[int], n: int) -> bool:
    """True iff every supplied per-pattern dimension is strictly below n!/2^n."""
    threshold = l8_threshold(n)
    return all(Fraction(d) < threshold for d in dims)


def dim_v(n: int) -> int:
    """Dimension 2^n n! of the full Y/Z multilinear space."""
    if n < 1:
        raise GradedPiError(f"n must be >= 1, got {n}")
    return 2 ** n * factorial(n)


def theorem_degree(d1: int, d2: int, o_g: int, group_order: int,
                   digit_cap: int = 100_000,
                   precision_bits: int | None = None) -> PowerEnclosure:
    """Degree bound for the main semi-identity theorem.

    alpha = 8 e ((2 d1 - 1) o(g) - 1)^2 (|G| d2 - 1)^2, and the guaranteed
    identity degree is n = ceil(alpha^alpha).  Returns rigorous interval
    enclosures (exact Fraction endpoints) for alpha and log10(n), plus the
    exact integer n whenever its digit count fits under ``digit_cap``.
    Degenerate parameters (alpha = 0) raise instead of being clamped.
    """
    if min(d1, d2, o_g, group_order) < 1:
        raise GradedPiError("all parameters must be >= 1")
    k = 8 * ((2 * d1 - 1) * o_g - 1) ** 2 * (group_order * d2 - 1) ** 2
    if k == 0:
        raise DegenerateBoundError(
            "alpha = 0: the bound degenerates for these parameters "
            f"(d1={d1}, d2={d2}, o_g={o_g}, |G|={group_order})"
        )
    return power_self_enclosure(k, digit_cap=digit_cap, precision_bits=precision_bits)


# ---------------------------------------------------------------------------
# block shapes (used only for counting checks)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockShape:
    """Alternating y/z block sizes: p1 may be zero, q_u may be zero, the
    interior blocks are positive; sum(p) = r and sum(q) = n - r."""

    p: tuple
    q: tuple

    @property
    def u(self) -> int:
        return len(self.p)


def _compositions_with(first_zero_ok: bool, total: int, parts: int) -> Iterator[tuple]:
    """Ordered tuples of the given length summing to total, all parts
    positive except possibly the first (or last, by reversing outside)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    first_min = 0 if first_zero_ok else 1
    for first in range(first_min, total + 1):
        for rest in _compositions_with(False, total - first, parts - 1):
            yield (first,) + rest


def block_shapes(n: int, r: int) -> Iterator[BlockShape]:
    """Enumerate the alternating block decompositions of the leading pattern
    space; there are exactly C(n, r) of them, at most 2^n."""
    if not 0 <= r <= n:
        raise GradedPiError(f"need 0 <= r <= n, got r={r}, n={n}")
    for u in range(1, n + 2):
        for p in _compositions_with(True, r, u):
            for q_rev in _compositions_with(True, n - r, u):
                yield BlockShape(p, tuple(reversed(q_rev)))
