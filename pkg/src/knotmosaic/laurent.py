"""Integer Laurent polynomials in one variable ``A``."""
from __future__ import annotations

import re
from typing import Iterable, Mapping


# one signed term: coefficient digits and/or A with an optional exponent
_TERM = re.compile(r"([+-]?)(\d*)(A(?:\^(-?\d+))?)?")


class LaurentPolynomial:
    """Exact polynomial ``sum c_k A^k`` with integer coefficients and exponents.

    Immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = hash(tuple(self._terms.items()))

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPolynomial:
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPolynomial({-e * -k: c ** -k})
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by ``A^k``."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPolynomial:
        """Substitute ``A -> A^-1``."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("A" if e == 1 else f"A^{e}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """Inverse of ``str``: parse e.g. ``"-A^-4 - A^4"`` or ``"1"``."""
        s = text.replace(" ", "").replace("−", "-")
        if s == "0":
            return cls()
        if not s:
            raise ValueError("empty polynomial")
        terms = []
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not (m.group(2) or m.group(3)) or (pos > 0 and not m.group(1)):
                raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
            sign, digits, var, exp = m.groups()
            coeff = int(digits) if digits else 1
            e = 0 if not var else (int(exp) if exp is not None else 1)
            terms.append((e, -coeff if sign == "-" else coeff))
            pos = m.end()
        return cls(terms)


A = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.constant(1)
# value of a disjoint trivial circle
LOOP = LaurentPolynomial({2: -1, -2: -1})
