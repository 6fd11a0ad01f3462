"""Exact arithmetic on integer-coefficient polynomials in the indeterminate q.

Polynomials are stored densely: coeffs[i] is the coefficient of q^i, with no
trailing zero (the zero polynomial has an empty coefficient tuple).  All
coefficients are Python ints, so arithmetic is exact at any size.  Values are
immutable; every operation returns a fresh polynomial.
"""

from __future__ import annotations

from typing import Iterable

from .errors import IndexOutOfRange, NonExactDivision


class QPolynomial:
    """Dense polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        """Build coeff * q^power."""
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (QPolynomial([other])).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out)

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> list[int]:
        """Coefficient array, ascending powers."""
        return list(self.coeffs)


ZERO = QPolynomial()
ONE = QPolynomial([1])
Q = QPolynomial([0, 1])
Q_MINUS_ONE = QPolynomial([-1, 1])


def q_power_minus_one(d: int) -> QPolynomial:
    """q^d - 1."""
    if d < 0:
        raise ValueError("negative power")
    return QPolynomial.monomial(d) - ONE


def add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a + b


def sub(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a - b


def mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a * b


def div_exact(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Return c with a = b*c, raising NonExactDivision if no such c exists."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ZERO
    if a.degree < b.degree:
        raise NonExactDivision(f"({a}) is not divisible by ({b})")
    rem = list(a.coeffs)
    div = b.coeffs
    lead = div[-1]
    out = [0] * (len(rem) - len(div) + 1)
    for k in range(len(out) - 1, -1, -1):
        top = rem[k + len(div) - 1]
        if top % lead != 0:
            raise NonExactDivision(f"({a}) is not divisible by ({b})")
        c = top // lead
        out[k] = c
        if c:
            for j, d in enumerate(div):
                rem[k + j] -= c * d
    if any(rem):
        raise NonExactDivision(f"({a}) is not divisible by ({b})")
    return QPolynomial(out)


def eval_big(p: QPolynomial, q0: int) -> int:
    """Exact value p(q0) for an integer q0 >= 2."""
    if q0 < 2:
        raise ValueError("evaluation point must be >= 2")
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc


def gaussian_binomial(n: int, r: int, base_power: int = 1) -> QPolynomial:
    """q-binomial [n, r] in the variable q^base_power.

    Counts r-dimensional subspaces of an n-dimensional space over a field
    with q^base_power elements.  Computed by exact division of the defining
    quotient of (Q^i - 1) factors; the result always has nonnegative
    coefficients.
    """
    if base_power < 1:
        raise ValueError("base_power must be >= 1")
    if r < 0 or n < 0 or r > n:
        raise IndexOutOfRange(f"need 0 <= r <= n, got n={n}, r={r}")
    acc = ONE
    for i in range(1, r + 1):
        acc = div_exact(
            acc * q_power_minus_one(base_power * (n - r + i)),
            q_power_minus_one(base_power * i),
        )
    return acc


def is_palindromic(p: QPolynomial) -> bool:
    """True iff the coefficient sequence reads the same in both directions."""
    return p.coeffs == tuple(reversed(p.coeffs))
