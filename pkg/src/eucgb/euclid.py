"""Euclidean coefficient domains.

Elements are plain Python values (``int`` for the integers, ``Fraction`` for
the rationals).  A domain object carries the arithmetic that the basis
algorithms need: the Euclidean grading ``delta``, the injective refinement
``hat_delta`` used to pick canonical remainders and unit normalizations, and
the two minimization tasks built on top of it.

All gradings are encoded as non-negative Python integers, so comparing two
grades is plain integer comparison.
"""
from __future__ import annotations

import re
from abc import ABC, abstractmethod
from fractions import Fraction


class EuclideanDomain(ABC):
    """Abstract Euclidean domain with gradings ``delta`` and ``hat_delta``."""

    name: str = "?"

    zero = 0
    one = 1

    @abstractmethod
    def convert(self, value): ...

    @abstractmethod
    def delta(self, a) -> int: ...

    @abstractmethod
    def hat_delta(self, a) -> int: ...

    @abstractmethod
    def min_quotient(self, b, a): ...

    @abstractmethod
    def normalizing_unit(self, a): ...

    @abstractmethod
    def is_unit(self, a) -> bool: ...

    @abstractmethod
    def ext_gcd(self, a, b): ...

    @abstractmethod
    def divides(self, a, b) -> bool: ...

    @abstractmethod
    def parse(self, text: str): ...

    def quo_rem(self, b, a):
        """Return ``(q, r)`` with ``b == q*a + r`` and ``delta(r) < delta(a)``."""
        q = self.min_quotient(b, a)
        return q, b - q * a

    def exact_quotient(self, b, a):
        if not self.divides(a, b):
            raise ArithmeticError(f"{self.format(a)} does not divide {self.format(b)}")
        return self.min_quotient(b, a)

    def normalize(self, a):
        if a == 0:
            return a
        return self.normalizing_unit(a) * a

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (domain_from_name, (self.name,))


class IntegerDomain(EuclideanDomain):
    """The integers with ``delta(z) = |z|`` and ``hat_delta(z) = 3|z| - sgn(z)``.

    ``hat_delta`` orders the integers as ``0, 1, -1, 2, -2, ...``.
    """

    name = "Z"

    def convert(self, value):
        if isinstance(value, bool):
            raise TypeError("booleans are not coefficients")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {value!r} to an integer coefficient")

    def delta(self, a):
        return abs(a)

    def hat_delta(self, a):
        if a == 0:
            return 0
        return 3 * abs(a) - (1 if a > 0 else -1)

    def min_quotient(self, b, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Z")
        m = abs(a)
        r = b % m
        # remainder in (-m/2, m/2]; on a tie the positive one wins
        if 2 * r > m:
            r -= m
        return (b - r) // a

    def normalizing_unit(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no normalizing unit")
        return 1 if a > 0 else -1

    def is_unit(self, a):
        return a in (1, -1)

    def ext_gcd(self, a, b):
        if a == 0 and b == 0:
            raise ZeroDivisionError("gcd(0, 0) is undefined")
        old_r, r = a, b
        old_u, u = 1, 0
        old_v, v = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_u, u = u, old_u - q * u
            old_v, v = v, old_v - q * v
        if old_r < 0:
            old_r, old_u, old_v = -old_r, -old_u, -old_v
        return old_r, old_u, old_v

    def divides(self, a, b):
        if a == 0:
            return b == 0
        return b % a == 0

    def parse(self, text):
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ValueError(f"not an integer literal: {text!r}")
        return int(text)


def _zigzag(z: int) -> int:
    return 2 * z if z >= 0 else -2 * z - 1


class RationalDomain(EuclideanDomain):
    """The rationals as a field: ``delta`` is 0 on zero and 1 elsewhere.

    ``hat_delta`` sends 0 to 0, 1 to 1, and every other ``p/q`` (lowest terms,
    ``q > 0``) to ``2 + cantor(zigzag(p), q)``, which is injective.
    """

    name = "Q"
    one = Fraction(1)
    zero = Fraction(0)

    def convert(self, value):
        if isinstance(value, bool):
            raise TypeError("booleans are not coefficients")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {value!r} to a rational coefficient")

    def delta(self, a):
        return 0 if a == 0 else 1

    def hat_delta(self, a):
        if a == 0:
            return 0
        if a == 1:
            return 1
        x, y = _zigzag(a.numerator), a.denominator
        return 2 + (x + y) * (x + y + 1) // 2 + y

    def min_quotient(self, b, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(b) / a

    def normalizing_unit(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no normalizing unit")
        return 1 / Fraction(a)

    def is_unit(self, a):
        return a != 0

    def ext_gcd(self, a, b):
        if a == 0 and b == 0:
            raise ZeroDivisionError("gcd(0, 0) is undefined")
        if a != 0:
            return Fraction(1), 1 / Fraction(a), Fraction(0)
        return Fraction(1), Fraction(0), 1 / Fraction(b)

    def divides(self, a, b):
        return a != 0 or b == 0

    def parse(self, text):
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"not a rational literal: {text!r}")
        value = Fraction(text)
        return value

    def format(self, a):
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


ZZ = IntegerDomain()
QQ = RationalDomain()


def domain_from_name(name: str) -> EuclideanDomain:
    try:
        return {"Z": ZZ, "ZZ": ZZ, "Q": QQ, "QQ": QQ}[name.upper()]
    except KeyError:
        raise ValueError(f"unknown coefficient domain {name!r} (expected Z or Q)") from None
