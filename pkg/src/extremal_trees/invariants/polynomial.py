"""Dense univariate polynomials with Python-int coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence


class IntPolynomial:
    """Immutable polynomial; ``coefficients[k]`` multiplies ``x**k``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, a: int) -> "IntPolynomial":
        return cls((a,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, a in enumerate(self.coefficients):
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(a) == 1:
                coef = "-" if a < 0 else ""
            else:
                coef = str(a) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.coefficients, o.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-a for a in self.coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b = self.coefficients, o.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntPolynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic (or -monic) divisor; stays in Z[x]."""
        lead = divisor.coefficients[-1] if divisor else 0
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coefficients)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] * lead  # lead is its own inverse
            if q:
                quot[k - dd] = q
                for j, c in enumerate(divisor.coefficients):
                    rem[k - dd + j] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod_monic(divisor)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def __call__(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc

    def substitute_neg(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial([a if k % 2 == 0 else -a for k, a in enumerate(self.coefficients)])

    def dominated_by(self, other: "IntPolynomial") -> bool:
        """Coefficientwise self <= other."""
        m = max(len(self), len(other))
        return all(self[k] <= other[k] for k in range(m))

    def to_json(self) -> str:
        return json.dumps([str(a) for a in self.coefficients])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(int(a) for a in json.loads(text))


def product(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    return reduce(lambda a, b: a * b, polys, IntPolynomial.constant(1))


def fraction_str(q: Fraction) -> str:
    """Rational as ``p/q`` (``p`` alone when the denominator is 1)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())
