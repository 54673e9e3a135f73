"""Sparse integer Laurent polynomials in one variable.

Values are immutable and hashable so they can key dictionaries (the knot
table is indexed by pairs of them).  The text form is a comma separated list
of ``coeff:exp`` pairs sorted by exponent, e.g. ``-1:-16,1:-12,1:-4``; the
zero polynomial is written ``0``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """An integer Laurent polynomial stored as sorted ``(exponent, coeff)`` terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(terms, int):
            terms = {0: terms}
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            acc: dict[int, int] = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            items = acc.items()
        self._terms = tuple(sorted((int(e), int(c)) for e, c in items if c))
        self._hash = hash(self._terms)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        text = text.strip()
        if text in ("", "0"):
            return cls()
        terms = {}
        for chunk in text.split(","):
            coeff, _, exp = chunk.partition(":")
            if not _:
                raise ValueError(f"malformed polynomial term {chunk!r}")
            e = int(exp)
            if e in terms:
                raise ValueError(f"repeated exponent {e} in {text!r}")
            terms[e] = int(coeff)
        return cls(terms)

    # -- accessors ---------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def coeff(self, exp: int) -> int:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def __call__(self, value):
        """Evaluate at a number (Fraction for negative exponents on ints)."""
        from fractions import Fraction

        total = 0
        for e, c in self._terms:
            total += c * (Fraction(value) ** e if e < 0 else value ** e)
        return total

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1 and self._terms[0][1] in (1, -1):
                (e, c), = self._terms
                return LaurentPolynomial({e * k: c ** (-k)})
            raise ValueError("only unit monomials have negative powers")
        result = LaurentPolynomial({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient ``self / divisor``; raises ValueError on a remainder."""
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        lead_e, lead_c = divisor._terms[-1]
        low = divisor.min_exp
        floor = self.min_exp if self._terms else 0
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - lead_e + low < floor:
                break
            c = rem[top]
            if c % lead_c:
                raise ValueError("inexact division")
            q = c // lead_c
            shift = top - lead_e
            quot[shift] = q
            for e, dc in divisor._terms:
                v = rem.get(e + shift, 0) - q * dc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        if rem:
            raise ValueError("inexact division")
        return LaurentPolynomial(quot)

    # -- transforms --------------------------------------------------------

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """Replace the variable ``x`` by ``x**k`` (``k = -1`` is the mirror map)."""
        return LaurentPolynomial({e * k: c for e, c in self._terms})

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self._terms})

    def is_palindromic(self) -> bool:
        return self == self.substitute_power(-1)

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        return ",".join(f"{c}:{e}" for e, c in self._terms)

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    def pretty(self, var: str = "A") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if e == 0:
                body = str(mag)
            else:
                body = (str(mag) if mag != 1 else "") + (var if e == 1 else f"{var}^{e}")
            parts.append(f"{sign} {body}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial({0: value})
    return NotImplemented


ONE = LaurentPolynomial({0: 1})
ZERO = LaurentPolynomial()
# loop value of the Kauffman bracket, -A^2 - A^-2
LOOP = LaurentPolynomial({2: -1, -2: -1})
