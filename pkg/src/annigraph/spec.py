"""Text syntax for ring constructions.

Grammar::

    spec := atom ( "x" atom )*
    atom := "Z" INT | "Z" PRIME "[x]/(" poly ")" | "N(" PRIME "," INT ")"
    poly := term ( "+" term )*
    term := [INT] ["x" ["^" INT]]

Products associate to the left.  Whitespace is allowed between tokens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidCharacteristic, InvalidModulus, InvalidOrder, RingSpecSyntaxError
from .ring import (
    FiniteRing,
    cyclic_ring,
    is_prime,
    null_square_local_ring,
    poly_quotient_ring,
    product_ring,
    render_poly,
)


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class PolyQuot:
    p: int
    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class NullSquare:
    p: int
    d: int


@dataclass(frozen=True)
class Product:
    left: "RingSpec"
    right: "RingSpec"


RingSpec = Union[Cyclic, PolyQuot, NullSquare, Product]


def render(spec: RingSpec) -> str:
    if isinstance(spec, Cyclic):
        return f"Z{spec.n}"
    if isinstance(spec, PolyQuot):
        return f"Z{spec.p}[x]/({render_poly(spec.coeffs)})"
    if isinstance(spec, NullSquare):
        return f"N({spec.p},{spec.d})"
    return f"{render(spec.left)} x {render(spec.right)}"


def spec_order(spec: RingSpec) -> int:
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, PolyQuot):
        return spec.p ** (len(spec.coeffs) - 1)
    if isinstance(spec, NullSquare):
        return spec.p ** (spec.d + 1)
    return spec_order(spec.left) * spec_order(spec.right)


def build(spec: RingSpec) -> FiniteRing:
    if isinstance(spec, Cyclic):
        return cyclic_ring(spec.n)
    if isinstance(spec, PolyQuot):
        return poly_quotient_ring(spec.p, spec.coeffs)
    if isinstance(spec, NullSquare):
        return null_square_local_ring(spec.p, spec.d)
    return product_ring(build(spec.left), build(spec.right))


def ring_from_text(text: str) -> FiniteRing:
    return build(parse_ring_spec(text))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, pos: int | None = None):
        raise RingSpecSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip()
        if not self.text.startswith(literal, self.pos):
            self.fail(f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected integer")
        return int(self.text[start:self.pos])

    def spec(self) -> RingSpec:
        node = self.atom()
        while self.peek() == "x":
            self.pos += 1
            node = Product(node, self.atom())
        if self.peek():
            self.fail("unexpected character")
        return node

    def atom(self) -> RingSpec:
        c = self.peek()
        start = self.pos
        if c == "Z":
            self.pos += 1
            n = self.integer()
            if self.peek() == "[":
                self.expect("[")
                self.expect("x")
                self.expect("]")
                self.expect("/")
                self.expect("(")
                coeffs = self.poly(n)
                self.expect(")")
                if not is_prime(n):
                    raise InvalidCharacteristic(f"characteristic {n} is not prime (position {start})")
                return _checked_poly(n, coeffs)
            if n < 2:
                raise InvalidOrder(f"Z{n}: order must be at least 2 (position {start})")
            return Cyclic(n)
        if c == "N":
            self.pos += 1
            self.expect("(")
            p = self.integer()
            self.expect(",")
            d = self.integer()
            self.expect(")")
            if not is_prime(p):
                raise InvalidCharacteristic(f"characteristic {p} is not prime (position {start})")
            if d < 1:
                raise InvalidOrder(f"N({p},{d}): dimension must be at least 1")
            return NullSquare(p, d)
        self.fail("expected 'Z' or 'N('" if c else "unexpected end of input")

    def poly(self, p: int) -> dict[int, int]:
        coeffs: dict[int, int] = {}
        while True:
            deg, c = self.term()
            coeffs[deg] = coeffs.get(deg, 0) + c
            if self.peek() != "+":
                return coeffs
            self.pos += 1

    def term(self) -> tuple[int, int]:
        self.skip()
        start = self.pos
        coeff = None
        if self.peek().isdigit():
            coeff = self.integer()
        if self.peek() == "x":
            self.pos += 1
            deg = 1
            if self.peek() == "^":
                self.pos += 1
                deg = self.integer()
            return deg, 1 if coeff is None else coeff
        if coeff is None:
            self.fail("expected polynomial term", start)
        return 0, coeff


def _checked_poly(p: int, by_degree: dict[int, int]) -> PolyQuot:
    d = max(by_degree)
    coeffs = tuple(by_degree.get(k, 0) for k in range(d + 1))
    if d < 1:
        raise InvalidModulus(f"modulus {render_poly(coeffs)} has degree < 1")
    if any(c >= p for c in coeffs):
        raise InvalidModulus(f"coefficients of {render_poly(coeffs)} must lie in 0..{p - 1}")
    if coeffs[-1] != 1:
        raise InvalidModulus(f"modulus {render_poly(coeffs)} is not monic")
    return PolyQuot(p, coeffs)


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``text`` into a :data:`RingSpec`.

    Raises :class:`RingSpecSyntaxError` (with position) on malformed input,
    :class:`InvalidCharacteristic` for a non-prime characteristic and
    :class:`InvalidModulus` for a modulus that is not monic.
    """
    return _Parser(text).spec()
