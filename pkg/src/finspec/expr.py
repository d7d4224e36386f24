"""Ring expressions.

Grammar (whitespace is ignored)::

    expr := atom | expr "x" atom | expr "/" "(" gens ")"
    atom := "Z/" nat | "GF(" primepower ")" | atom "[x]/(" poly ")" | "(" expr ")"
    gens := int ("," int)*
    poly := monic polynomial in x with integer coefficients, e.g. x^2+x+1, x^3-2x+1

Quotient generators are element indices of the ring on the left (for ``Z/n``
these are the residues).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from sympy import factorint

from .ring import FiniteRing, ideal_generated, quotient_ring, ring_poly_quotient, ring_product, ring_zmod


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# -- AST --------------------------------------------------------------------------------


@dataclass(frozen=True)
class ZMod:
    n: int

    def __str__(self):
        return f"Z/{self.n}"

    def evaluate(self) -> FiniteRing:
        return ring_zmod(self.n)


@dataclass(frozen=True)
class GF:
    q: int

    def __str__(self):
        return f"GF({self.q})"

    def evaluate(self) -> FiniteRing:
        return galois_field(self.q)


@dataclass(frozen=True)
class PolyQuotient:
    base: object
    coeffs: tuple  # integer coefficients, constant term first

    def __str__(self):
        return f"{_paren(self.base)}[x]/({format_int_poly(self.coeffs)})"

    def evaluate(self) -> FiniteRing:
        r = self.base.evaluate()
        f = [r.from_int(c) for c in self.coeffs]
        return ring_poly_quotient(r, f, label=str(self))


@dataclass(frozen=True)
class Product:
    left: object
    right: object

    def __str__(self):
        return f"{self.left} x {_paren(self.right)}"

    def evaluate(self) -> FiniteRing:
        a, b = self.left.evaluate(), self.right.evaluate()
        r = ring_product(a, b)
        r.label = str(self)
        return r


@dataclass(frozen=True)
class Quotient:
    base: object
    gens: tuple

    def __str__(self):
        return f"{self.base}/({','.join(map(str, self.gens))})"

    def evaluate(self) -> FiniteRing:
        r = self.base.evaluate()
        bad = [g for g in self.gens if not 0 <= g < r.size]
        if bad:
            raise ValueError(f"generator {bad[0]} is not an element of {r.label}")
        q, _ = quotient_ring(r, ideal_generated(r, self.gens), label=str(self))
        return q


def _paren(node) -> str:
    return f"({node})" if isinstance(node, (Product, Quotient)) else str(node)


def format_int_poly(coeffs) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        mag = abs(c)
        body = mono if (mag == 1 and k > 0) else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


# -- finite fields ----------------------------------------------------------------------


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``b`` over F_p, coefficients constant term first."""
    a = [c % p for c in a]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        lead = a[-1]
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - lead * c) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Monic ``f`` over F_p has no monic factor of degree 1 .. deg(f)/2."""
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            g = list(reversed(tail)) + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def least_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically least monic irreducible polynomial of degree ``k`` over F_p.

    Lower coefficients are compared from ``x^(k-1)`` down to the constant term.
    """
    for tail in itertools.product(range(p), repeat=k):
        f = list(reversed(tail)) + [1]
        if is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {k} over F_{p}")


def galois_field(q: int) -> FiniteRing:
    fac = factorint(q)
    if q < 2 or len(fac) != 1:
        raise ValueError(f"GF({q}): {q} is not a prime power")
    (p, k), = fac.items()
    if k == 1:
        r = ring_zmod(p)
        r.label = f"GF({p})"
        return r
    f = least_irreducible(p, k)
    return ring_poly_quotient(ring_zmod(p), f, label=f"GF({q})")


# -- parser -----------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.positions = [i for i, ch in enumerate(text) if not ch.isspace()]
        self.s = "".join(ch for ch in text if not ch.isspace())
        self.i = 0
        self.raw_len = len(text)

    def pos(self) -> int:
        return self.positions[self.i] if self.i < len(self.positions) else self.raw_len

    def fail(self, msg: str):
        raise ParseError(msg, self.pos())

    def startswith(self, tok: str) -> bool:
        return self.s.startswith(tok, self.i)

    def expect(self, tok: str) -> None:
        if not self.startswith(tok):
            self.fail(f"expected {tok!r}")
        self.i += len(tok)

    def nat(self) -> int:
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            self.fail("expected a natural number")
        value = int(self.s[self.i : j])
        self.i = j
        return value

    def integer(self) -> int:
        sign = 1
        if self.startswith("-"):
            sign = -1
            self.i += 1
        return sign * self.nat()

    def parse(self):
        if not self.s:
            raise ParseError("empty expression", 0)
        node = self.expr()
        if self.i != len(self.s):
            self.fail(f"unexpected {self.s[self.i]!r}")
        return node

    def expr(self):
        node = self.atom()
        while True:
            if self.startswith("x") and self.s[self.i + 1 : self.i + 2] in ("Z", "G", "("):
                self.i += 1
                node = Product(node, self.atom())
            elif self.startswith("/("):
                self.i += 2
                gens = [self.integer()]
                while self.startswith(","):
                    self.i += 1
                    gens.append(self.integer())
                self.expect(")")
                node = Quotient(node, tuple(gens))
            else:
                return node

    def atom(self):
        start = self.pos()
        if self.startswith("Z/"):
            self.i += 2
            n = self.nat()
            if n < 1:
                raise ParseError("modulus must be positive", start)
            node = ZMod(n)
        elif self.startswith("GF("):
            self.i += 3
            q = self.nat()
            fac = factorint(q) if q > 1 else {}
            if len(fac) != 1:
                raise ParseError(f"GF argument {q} is not a prime power", start)
            self.expect(")")
            node = GF(q)
        elif self.startswith("("):
            self.i += 1
            node = self.expr()
            self.expect(")")
        else:
            self.fail("expected 'Z/', 'GF(' or '('")
        while self.startswith("[x]/("):
            self.i += 5
            node = PolyQuotient(node, self.poly())
            self.expect(")")
        return node

    def poly(self) -> tuple:
        start = self.pos()
        coeffs: dict[int, int] = {}
        first = True
        while True:
            sign = 1
            if self.startswith("+") or self.startswith("-"):
                sign = -1 if self.s[self.i] == "-" else 1
                self.i += 1
            elif not first:
                break
            first = False
            coef = None
            if self.i < len(self.s) and self.s[self.i].isdigit():
                coef = self.nat()
                if self.startswith("*"):
                    self.i += 1
            if self.startswith("x"):
                self.i += 1
                deg = 1
                if self.startswith("^"):
                    self.i += 1
                    deg = self.nat()
            elif coef is None:
                self.fail("expected a polynomial term")
            else:
                deg = 0
            coeffs[deg] = coeffs.get(deg, 0) + sign * (1 if coef is None else coef)
        degree = max((d for d, c in coeffs.items() if c), default=0)
        if degree < 1:
            raise ParseError("polynomial must have degree at least 1", start)
        if coeffs[degree] != 1:
            raise ParseError("polynomial is not monic", start)
        return tuple(coeffs.get(k, 0) for k in range(degree + 1))


def parse_ring_expr(text: str):
    """Parse ``text`` into an expression tree with an ``evaluate()`` method."""
    return _Parser(text).parse()


def build_ring(text: str) -> FiniteRing:
    """Parse and evaluate; the ring's label is the normalized expression."""
    node = parse_ring_expr(text)
    r = node.evaluate()
    r.label = str(node)
    return r
