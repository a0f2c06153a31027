"""Exact integer polynomials and characteristic polynomials of 0/1 matrices."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisorZero, NotSquare

__all__ = [
    "IntPolynomial",
    "charpoly",
    "poly_mul",
    "divides_exactly",
    "cyclotomic_like",
]


def _trim(coeffs: list[int]) -> list[int]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs or [0]


class IntPolynomial:
    """Polynomial in one variable with Python-int coefficients, ascending order.

    ``IntPolynomial([-1, 0, 1])`` is l^2 - 1.  The zero polynomial is ``[0]``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "l") -> str:
        """Descending powers, e.g. ``l^3 - l^2 - l + 1``."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPolynomial":
        return cls(int(c) for c in obj["coeffs"])


# Plain-list kernels; the Bareiss loop below calls these tens of thousands of
# times and wrapping each intermediate in IntPolynomial would dominate runtime.
# Lists here use [] for zero.

def _mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _sub(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    out = a[:]
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def _div_monic(p: list[int], d: list[int]) -> list[int]:
    """Exact quotient p / d for monic d; asserts the remainder is zero."""
    dd = len(d) - 1
    if dd == 0:
        return p
    if not p:
        return []
    p = p[:]
    q = [0] * (len(p) - dd)
    for k in range(len(p) - 1, dd - 1, -1):
        c = p[k]
        if c:
            q[k - dd] = c
            for i in range(dd):
                p[k - dd + i] -= c * d[i]
            p[k] = 0
    if any(p[:dd]):
        raise ArithmeticError("Bareiss step produced a non-exact division")
    return q


def charpoly(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(l*I - m) by fraction-free Bareiss elimination over Z[l].

    The k-th pivot is the k-th leading principal minor of l*I - m, a monic
    polynomial of degree k, so no pivoting is ever needed and every division
    is an exact division by a monic polynomial.
    """
    d = len(m)
    if any(len(row) != d for row in m):
        raise NotSquare(f"matrix with {d} rows is not square")
    if d == 0:
        return IntPolynomial([1])
    a: list[list[list[int]]] = [
        [([-int(m[i][j])] if m[i][j] else []) for j in range(d)] for i in range(d)
    ]
    for i in range(d):
        a[i][i] = _sub([0, 1], [int(m[i][i])])
    prev = [1]
    for k in range(d - 1):
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, d):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, d):
                t = _mul(pivot, row_i[j])
                if aik and row_k[j]:
                    t = _sub(t, _mul(aik, row_k[j]))
                row_i[j] = _div_monic(t, prev) if t else []
        prev = pivot
    return IntPolynomial(a[d - 1][d - 1])


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(_mul(list(a.coeffs), list(b.coeffs)) or [0])


def divides_exactly(d: IntPolynomial, p: IntPolynomial) -> IntPolynomial | None:
    """Quotient q with p == d*q over the integers, or None if there is none."""
    if d.is_zero():
        raise DivisorZero("division by the zero polynomial")
    if p.is_zero():
        return IntPolynomial([0])
    rem = list(p.coeffs)
    dc = d.coeffs
    dd = len(dc) - 1
    lead = dc[-1]
    if len(rem) - 1 < dd:
        return None
    q = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lead:
            return None
        t = c // lead
        q[k - dd] = t
        for i in range(dd + 1):
            rem[k - dd + i] -= t * dc[i]
    if any(rem):
        return None
    return IntPolynomial(q)


def cyclotomic_like(n: int) -> IntPolynomial:
    """l^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntPolynomial([-1] + [0] * (n - 1) + [1])
