"""Exact integer polynomials in the field-size parameter q.

Cardinalities of Grassmannians and flag varieties over a finite field
F_q are polynomials in q with non-negative integer coefficients, and
the bounds this package produces are most useful in that exact form.
This module provides the polynomial arithmetic, the Gaussian binomial
coefficients [n choose k]_q, and the flag variety sizes built from
them.

Gaussian binomials are computed by the q-Pascal recurrence

    [n, k]_q = [n-1, k-1]_q + q^k * [n-1, k]_q

with memoization, rather than by polynomial division; this keeps every
intermediate value a genuine polynomial and makes the non-negativity of
the coefficients true by construction.

Polynomials are written highest power first in a small text grammar
shared by the CLI and the bound-override file format:

    poly := term (('+' | '-') term)*
    term := INT | 'q' | 'q^' INT | INT '*' 'q' | INT '*' 'q^' INT

e.g. ``q^4+q^2+1`` or ``q^3+2*q^2+2*q+1``. Whitespace is ignored when
parsing, and a coefficient may be written without the star (``2q^2``).
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Sequence


class QPolynomial:
    """An integer polynomial in q; immutable and hashable.

    Coefficients are stored densely in ascending order of the power of
    q, with no trailing zeros, so two equal polynomials always compare
    and hash equal. The zero polynomial stores no coefficients.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, coefficient: int = 1, power: int = 1) -> "QPolynomial":
        """The polynomial coefficient * q^power."""
        if power < 0:
            raise ValueError(f"negative power {power}")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def parse(cls, text: str) -> "QPolynomial":
        return parse_polynomial(text)

    @property
    def coefficients(self) -> tuple:
        """Coefficients in ascending order of the power of q."""
        return self._c

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._c) - 1

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial((other,))
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-x for x in self._c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"bad exponent {exponent!r}")
        result = QPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, q: int) -> int:
        """Value at an integer q, by Horner's rule (exact)."""
        value = 0
        for c in reversed(self._c):
            value = value * q + c
        return value

    __call__ = evaluate

    def dominates(self, other: "QPolynomial") -> bool:
        """True when every coefficient is >= the other's coefficient."""
        a, b = self._c, other._c
        n = max(len(a), len(b))
        a += (0,) * (n - len(a))
        b += (0,) * (n - len(b))
        return all(x >= y for x, y in zip(a, b))

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                body = "q" if k == 1 else f"q^{k}"
                if a != 1:
                    body = f"{a}*{body}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __repr__(self):
        return f"QPolynomial({str(self)!r})"


_TERM = r"(?:\d+\*?q(?:\^\d+)?|q(?:\^\d+)?|\d+)"
_POLY_RE = re.compile(rf"^[+-]?{_TERM}(?:[+-]{_TERM})*$")
_TERM_RE = re.compile(r"([+-]?)(?:(\d+)\*?)?(q(?:\^(\d+))?)?")


def parse_polynomial(text: str) -> QPolynomial:
    """Parse the polynomial grammar; inverse of str() on QPolynomial.

    Accepts the printed form plus harmless variations: whitespace
    anywhere, and coefficients written without the star (``2q^2``).
    Raises ValueError on anything else.
    """
    compact = "".join(text.split())
    if not _POLY_RE.match(compact):
        raise ValueError(f"not a polynomial in the q grammar: {text!r}")
    coeffs: dict[int, int] = {}
    for term in re.findall(rf"[+-]?{_TERM}", compact):
        sign, digits, qpart, power = _TERM_RE.fullmatch(term).groups()
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        k = 0 if qpart is None else (1 if power is None else int(power))
        coeffs[k] = coeffs.get(k, 0) + c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return QPolynomial(out)


@functools.cache
def gaussian_binomial(n: int, k: int) -> QPolynomial:
    """The Gaussian binomial [n choose k]_q as an exact polynomial.

    Counts the k-dimensional subspaces of F_q^n when evaluated at a
    prime power q. Zero polynomial when k < 0 or k > n.
    """
    if n < 0:
        raise ValueError(f"negative n={n}")
    if k < 0 or k > n:
        return QPolynomial.zero()
    if k == 0 or k == n:
        return QPolynomial.one()
    return gaussian_binomial(n - 1, k - 1) + QPolynomial.monomial(1, k) * gaussian_binomial(n - 1, k)


def flag_variety_size(dims: Sequence[int], n: int) -> QPolynomial:
    """Number of flags with subspace dimensions ``dims`` in F_q^n.

    The count telescopes: choose the smallest subspace in the ambient
    space, then each next subspace in the quotient, giving a product of
    Gaussian binomials. An empty ``dims`` yields 1.
    """
    dims = tuple(int(d) for d in dims)
    if n < 1:
        raise ValueError(f"ambient dimension n={n} must be >= 1")
    if any(d < 1 or d > n - 1 for d in dims) or any(
        a >= b for a, b in zip(dims, dims[1:])
    ):
        raise ValueError(f"dims {dims} must be strictly increasing within 1..{n - 1}")
    size = QPolynomial.one()
    prev = 0
    for d in dims:
        size = size * gaussian_binomial(n - prev, d - prev)
        prev = d
    return size
