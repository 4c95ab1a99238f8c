"""Exact univariate polynomial arithmetic over the rationals.

Dense coefficient tuples with ``Fraction`` entries; deliberately small.
One class covers three roles in this package:

* characteristic polynomials and probe expansions in ``t``;
* symbolic sweep coefficients in ``x`` (for degree bookkeeping);
* the coefficient ring for the lexicographic pair group, whose structure
  constants live in Q[w] for a formal unit ``w`` exceeding every rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rat = Union[int, Fraction]


def _rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class Poly:
    """Immutable c0 + c1*X + c2*X^2 + ... with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat] = ()):
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            (self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly((-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly((-_rat(other),)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly((c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shifted(self, k: int) -> "Poly":
        """Multiply by X^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly((i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, value):
        """Evaluate; ``value`` may itself be a Poly (composition)."""
        out = value * 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
            if not bits:
                bits.append(("-" if c < 0 else "") + body)
            else:
                bits.append(("- " if c < 0 else "+ ") + body)
        return " ".join(bits)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def x_power(n: int) -> Poly:
    return Poly((0,) * n + (1,))
