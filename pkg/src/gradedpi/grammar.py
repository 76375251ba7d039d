"""Text grammar for graded polynomials.

::

    poly   := ["+"|"-"] term (("+"|"-") term)*
    term   := [coeff "*"] factor ("*" factor)*
    factor := ("x"|"y"|"z") INT "{" LABEL "}"
    coeff  := INT | INT "/" INT

Degree labels resolve against the active group's element labels, whitespace
is insignificant, and ``print_poly . parse_poly`` normalizes while
``parse_poly . print_poly`` is the identity.
"""

from __future__ import annotations

from .errors import PolySyntaxError
from .fields import Field
from .freepoly import GradedPolynomial, GradedVariable, word_key
from .groups import GroupTable


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def expect(self, char: str):
        c = self.peek()
        if c != char:
            raise PolySyntaxError(f"expected {char!r}, found {c!r}" if c else f"expected {char!r}, found end of input", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolySyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def label(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in "}":
            self.pos += 1
        if self.pos == start:
            raise PolySyntaxError("empty degree label", start)
        return self.text[start:self.pos].strip(), start

    @property
    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_poly(text: str, group: GroupTable, field: Field | None = None) -> GradedPolynomial:
    """Parse polynomial text against a group's element labels."""
    field = field or Field.rationals()
    sc = _Scanner(text)
    terms: dict = {}

    def resolve(label: str, pos: int) -> int:
        try:
            return group.labels.index(label)
        except ValueError:
            raise PolySyntaxError(f"unknown degree label {label!r}", pos) from None

    def parse_factor() -> GradedVariable:
        fam = sc.peek()
        if fam not in ("x", "y", "z"):
            raise PolySyntaxError(f"expected a variable (x/y/z), found {fam!r}" if fam else "unexpected end of input", sc.pos)
        sc.take()
        index = sc.integer()
        if index < 1:
            raise PolySyntaxError("variable index must be >= 1", sc.pos)
        sc.expect("{")
        label, label_pos = sc.label()
        sc.expect("}")
        return GradedVariable(fam, index, resolve(label, label_pos))

    def parse_term(sign: int):
        coeff = field.one if sign > 0 else field.neg(field.one)
        if sc.peek().isdigit():
            num = sc.integer()
            if sc.peek() == "/":
                sc.take()
                den = sc.integer()
                if den == 0:
                    raise PolySyntaxError("zero denominator", sc.pos)
                scalar = field.div(field.from_int(num), field.from_int(den))
            else:
                scalar = field.from_int(num)
            coeff = field.mul(coeff, scalar)
            sc.expect("*")
        word = [parse_factor()]
        while sc.peek() == "*":
            sc.take()
            word.append(parse_factor())
        key = tuple(word)
        acc = field.add(terms.get(key, field.zero), coeff)
        if field.is_zero(acc):
            terms.pop(key, None)
        else:
            terms[key] = acc

    if sc.done:
        raise PolySyntaxError("empty polynomial", 0)
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    parse_term(sign)
    while not sc.done:
        op = sc.peek()
        if op not in "+-":
            raise PolySyntaxError(f"expected '+' or '-', found {op!r}", sc.pos)
        sc.take()
        parse_term(-1 if op == "-" else 1)
    return GradedPolynomial(field, group, terms)


def _coeff_parts(field: Field, coeff) -> tuple[bool, str]:
    """Split a scalar into (negative?, magnitude text); prime fields never negate."""
    if field.kind == "rational":
        if coeff < 0:
            return True, field.fmt(-coeff)
        return False, field.fmt(coeff)
    return False, field.fmt(coeff)


def print_poly(f: GradedPolynomial) -> str:
    """Canonical text form: terms in canonical word order, unit coefficients omitted."""
    if f.is_zero:
        return "0"
    parts = []
    for i, (word, coeff) in enumerate(f.sorted_terms()):
        neg, mag = _coeff_parts(f.field, coeff)
        body = "*".join(v.format(f.group) for v in word)
        if mag != "1":
            body = f"{mag}*{body}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)
