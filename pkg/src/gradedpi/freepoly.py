"""The free group-graded associative algebra: variables, words, polynomials.

A variable carries a family tag (``x``, ``y`` or ``z``), a positive index
and a homogeneous degree (a group element index).  Words are tuples of
variables; a polynomial is a sparse map from words to nonzero scalars.
Everything is immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import GradingError
from .fields import Field
from .groups import GroupTable

FAMILIES = ("x", "y", "z")


@dataclass(frozen=True, order=True)
class GradedVariable:
    """A free generator, uniquely identified by (family, index, degree)."""

    family: str
    index: int
    degree: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GradingError(f"variable family must be one of {FAMILIES}, got {self.family!r}")
        if self.index < 1:
            raise GradingError(f"variable index must be >= 1, got {self.index}")

    def format(self, group: GroupTable) -> str:
        return f"{self.family}{self.index}{{{group.label(self.degree)}}}"


Word = tuple  # tuple[GradedVariable, ...]


def word_degree(word: Word, group: GroupTable) -> int:
    """Ordered Cayley product of the letters' degrees; empty word -> identity."""
    return group.product(v.degree for v in word)


def word_key(word: Word):
    """Canonical order: length, then lexicographic on (family, index, degree)."""
    return (len(word), tuple((v.family, v.index, v.degree) for v in word))


class GradedPolynomial:
    """Sparse polynomial in the free graded algebra over a fixed field and group."""

    __slots__ = ("field", "group", "terms")

    def __init__(self, field: Field, group: GroupTable, terms: Mapping[Word, object]):
        self.field = field
        self.group = group
        clean = {}
        for word, coeff in terms.items():
            if not field.is_zero(coeff):
                for v in word:
                    if not 0 <= v.degree < group.order:
                        raise GradingError(f"variable degree {v.degree} outside group of order {group.order}")
                clean[tuple(word)] = coeff
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, group: GroupTable) -> "GradedPolynomial":
        return cls(field, group, {})

    @classmethod
    def variable(cls, field: Field, group: GroupTable, var: GradedVariable) -> "GradedPolynomial":
        return cls(field, group, {(var,): field.one})

    @classmethod
    def monomial(cls, field: Field, group: GroupTable, word: Iterable[GradedVariable], coeff=None) -> "GradedPolynomial":
        return cls(field, group, {tuple(word): field.one if coeff is None else coeff})

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def variables(self) -> set:
        return {v for word in self.terms for v in word}

    def coefficient(self, word: Word):
        return self.terms.get(tuple(word), self.field.zero)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all words, or None if mixed.  Zero has every
        degree; by convention this returns the group identity for it."""
        if self.is_zero:
            return self.group.identity
        degrees = {word_degree(w, self.group) for w in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    # -- arithmetic -----------------------------------------------------------

    def _require_compatible(self, other: "GradedPolynomial"):
        if self.field != other.field:
            raise GradingError("polynomials over different fields")
        if self.group != other.group:
            raise GradingError("polynomials over different groups")

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self._require_compatible(other)
        terms = dict(self.terms)
        f = self.field
        for word, coeff in other.terms.items():
            acc = f.add(terms.get(word, f.zero), coeff)
            if f.is_zero(acc):
                terms.pop(word, None)
            else:
                terms[word] = acc
        return GradedPolynomial(self.field, self.group, terms)

    def __neg__(self) -> "GradedPolynomial":
        f = self.field
        return GradedPolynomial(self.field, self.group, {w: f.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def scale(self, scalar) -> "GradedPolynomial":
        f = self.field
        return GradedPolynomial(self.field, self.group, {w: f.mul(scalar, c) for w, c in self.terms.items()})

    def __mul__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        """Bilinear juxtaposition product."""
        self._require_compatible(other)
        f = self.field
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                acc = f.add(terms.get(w, f.zero), f.mul(c1, c2))
                if f.is_zero(acc):
                    terms.pop(w, None)
                else:
                    terms[w] = acc
        return GradedPolynomial(self.field, self.group, terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPolynomial)
            and self.field == other.field
            and self.group == other.group
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __str__(self) -> str:
        from .grammar import print_poly

        return print_poly(self)

    def __repr__(self) -> str:
        return f"GradedPolynomial({self})"


def _substitute_raw(f: GradedPolynomial, images: Mapping[GradedVariable, GradedPolynomial]) -> GradedPolynomial:
    out = GradedPolynomial.zero(f.field, f.group)
    for word, coeff in f.terms.items():
        acc = GradedPolynomial.monomial(f.field, f.group, (), coeff)
        for v in word:
            acc = acc * images.get(v, GradedPolynomial.variable(f.field, f.group, v))
        out = out + acc
    return out


def substitute(f: GradedPolynomial, sigma: Mapping[GradedVariable, GradedPolynomial]) -> GradedPolynomial:
    """Apply the graded endomorphism sending each variable to its image.

    Every image must be homogeneous of the same degree as the variable it
    replaces; variables not in ``sigma`` map to themselves.
    """
    for var, image in sigma.items():
        f._require_compatible(image)
        deg = image.homogeneous_degree()
        if deg is None:
            raise GradingError(f"image of {var} is not homogeneous")
        if not image.is_zero and deg != var.degree:
            raise GradingError(
                f"image of {var} has degree {f.group.label(deg)}, expected {f.group.label(var.degree)}"
            )
    return _substitute_raw(f, sigma)


def expand_x(f: GradedPolynomial) -> GradedPolynomial:
    """Replace every x-family variable by the sum of the matching y and z ones."""
    sigma = {}
    for v in f.variables():
        if v.family == "x":
            y = GradedVariable("y", v.index, v.degree)
            z = GradedVariable("z", v.index, v.degree)
            sigma[v] = GradedPolynomial.variable(f.field, f.group, y) + GradedPolynomial.variable(
                f.field, f.group, z
            )
    return _substitute_raw(f, sigma)


def canonical_variables(group: GroupTable, counts, family: str = "x") -> tuple:
    """The standard multilinear variable list for per-degree counts.

    Degree blocks follow the group element order; indices run 1..n across
    blocks, so the block for element g starts right after the previous one.
    """
    if len(counts) != group.order:
        raise GradingError(f"signature needs {group.order} counts, got {len(counts)}")
    out = []
    idx = 0
    for g, n_g in enumerate(counts):
        if n_g < 0:
            raise GradingError("signature counts must be >= 0")
        for _ in range(n_g):
            idx += 1
            out.append(GradedVariable(family, idx, g))
    return tuple(out)


def is_multilinear(f: GradedPolynomial, counts) -> bool:
    """True iff every word of ``f`` uses each declared variable slot exactly once.

    The declared slots are the canonical (index, degree) pairs of the
    signature; the family tag may vary freely (so both the X-space and the
    Y/Z-spaces of a signature qualify).
    """
    declared = {(v.index, v.degree) for v in canonical_variables(f.group, counts)}
    for word in f.terms:
        seen = [(v.index, v.degree) for v in word]
        if len(seen) != len(declared) or len({i for i, _ in seen}) != len(seen):
            return False
        if set(seen) != declared:
            return False
    return True


def multilinear_variables(f: GradedPolynomial) -> tuple | None:
    """If every word of ``f`` is a permutation of one common set of distinct
    variables, return that set sorted canonically; otherwise None."""
    if f.is_zero:
        return ()
    words = iter(f.terms)
    first = sorted(next(words))
    if len(set(first)) != len(first):
        return None
    for word in words:
        if sorted(word) != first:
            return None
    return tuple(first)


def multilinear_signature(f: GradedPolynomial) -> tuple | None:
    """Per-degree counts of ``f``'s variables if it is multilinear with the
    canonical global indexing, otherwise None."""
    var_list = multilinear_variables(f)
    if var_list is None:
        return None
    counts = [0] * f.group.order
    for v in var_list:
        counts[v.degree] += 1
    if not f.is_zero and not is_multilinear(f, counts):
        return None
    return tuple(counts)


def lie_bracket(f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
    """The commutator fg - gf."""
    return f * g - g * f
