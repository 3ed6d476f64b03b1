"""Polynomial vectors in R[x_1..x_n]^k, admissible orders and the gradings on them.

A monomial vector ``x^alpha e_i`` is the plain tuple ``(alpha, i)`` where
``alpha`` is a tuple of exponents and ``i`` a 0-based component index.  A
term vector is ``(coeff, (alpha, i))``.  A :class:`PolyVector` maps monomial
vectors to nonzero coefficients; a polynomial is a vector of rank 1.
"""
from __future__ import annotations

from enum import IntEnum
from operator import le
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .euclid import EuclideanDomain, ZZ, domain_from_name


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _cmp(a, b) -> Ordering:
    if a < b:
        return Ordering.LT
    if a > b:
        return Ordering.GT
    return Ordering.EQ


class RingMismatchError(ValueError):
    """Objects from different rings or of different rank were combined."""


class PolyRing:
    """The coefficient domain together with the variable names."""

    __slots__ = ("domain", "variables")

    def __init__(self, domain: EuclideanDomain | str = ZZ, variables: Iterable[str] = ("x",)):
        if isinstance(domain, str):
            domain = domain_from_name(domain)
        self.domain = domain
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for v in self.variables:
            if not v.isidentifier():
                raise ValueError(f"invalid variable name {v!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.domain is other.domain
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.domain.name, self.variables))

    def __repr__(self):
        return f"PolyRing({self.domain.name}, {list(self.variables)})"

    @property
    def zero_exponent(self) -> tuple:
        return (0,) * self.nvars

    def zero(self, rank: int = 1) -> "PolyVector":
        return PolyVector(self, rank, {})

    def constant(self, c, rank: int = 1, comp: int = 0) -> "PolyVector":
        return PolyVector.from_terms(self, rank, [(c, (self.zero_exponent, comp))])

    def gen(self, name: str) -> "PolyVector":
        i = self.variables.index(name)
        alpha = tuple(1 if j == i else 0 for j in range(self.nvars))
        return PolyVector(self, 1, {(alpha, 0): self.domain.one})

    def poly(self, text: str) -> "PolyVector":
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def vector(self, entries) -> "PolyVector":
        """Build a vector from a string ``"(p1, p2, ...)"`` or a sequence of entries."""
        from .parsing import parse_vector

        if isinstance(entries, str):
            return parse_vector(entries, self)
        polys = [self.poly(e) if isinstance(e, str) else self._as_poly(e) for e in entries]
        return PolyVector.from_entries(self, polys)

    def _as_poly(self, e) -> "PolyVector":
        if isinstance(e, PolyVector):
            if e.rank != 1:
                raise RingMismatchError("vector entries must be polynomials")
            return e
        return self.constant(self.domain.convert(e))


# ---------------------------------------------------------------------------
# orders


class MonomialOrder:
    """An admissible order on exponent vectors, given by a sort key."""

    def key(self, alpha: tuple) -> tuple:
        raise NotImplementedError


class LexOrder(MonomialOrder):
    """Lexicographic order, variables ranked by declaration order."""

    def key(self, alpha):
        return alpha

    def __eq__(self, other):
        return isinstance(other, LexOrder)

    def __hash__(self):
        return hash("lex")

    def __repr__(self):
        return "LexOrder()"


def _rational_rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


class MatrixOrder(MonomialOrder):
    """``alpha <= beta`` iff ``U alpha <=_lex U beta``.

    ``U`` must be an integer matrix with trivial rational kernel whose columns
    each start (top-down) with a positive entry.
    """

    def __init__(self, matrix: Sequence[Sequence[int]]):
        rows = [tuple(int(x) for x in row) for row in matrix]
        if not rows or not rows[0]:
            raise ValueError("order matrix must be non-empty")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("order matrix rows have different lengths")
        for x, row in zip(matrix, rows):
            if any(isinstance(v, float) and v != int(v) for v in x):
                raise ValueError("order matrix entries must be integers")
        if _rational_rank(rows) != n:
            raise ValueError("order matrix has a nontrivial rational kernel")
        for j in range(n):
            first = next(row[j] for row in rows if row[j] != 0)
            if first < 0:
                raise ValueError(f"first nonzero entry of column {j} is negative")
        self.matrix = tuple(rows)
        self._cache: dict[tuple, tuple] = {}

    @property
    def nvars(self) -> int:
        return len(self.matrix[0])

    def key(self, alpha):
        k = self._cache.get(alpha)
        if k is None:
            k = tuple(sum(u * a for u, a in zip(row, alpha)) for row in self.matrix)
            self._cache[alpha] = k
        return k

    def __eq__(self, other):
        return isinstance(other, MatrixOrder) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"MatrixOrder({[list(r) for r in self.matrix]})"


class AdmissibleOrder:
    """Position-over-term order on monomial vectors.

    ``(alpha, i) < (beta, j)`` iff ``perm[i] > perm[j]``, or ``i == j`` and
    ``alpha`` is smaller than ``beta`` under the term order of component ``i``.
    ``term_orders`` is a single :class:`MonomialOrder` or one per component.
    With the identity permutation, component 0 is the most significant.
    """

    def __init__(self, term_orders: MonomialOrder | Sequence[MonomialOrder] | None = None,
                 perm: Sequence[int] | None = None):
        if term_orders is None:
            term_orders = LexOrder()
        if isinstance(term_orders, MonomialOrder):
            self._single = term_orders
            self.term_orders = None
        else:
            self._single = None
            self.term_orders = tuple(term_orders)
            if not self.term_orders:
                raise ValueError("need at least one term order")
        if perm is not None:
            perm = tuple(int(p) for p in perm)
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{list(perm)} is not a permutation of 0..{len(perm) - 1}")
            if self.term_orders is not None and len(perm) != len(self.term_orders):
                raise ValueError("permutation and per-component orders disagree on rank")
        self.perm = perm

    def term_order(self, comp: int) -> MonomialOrder:
        if self._single is not None:
            return self._single
        return self.term_orders[comp]

    def key(self, mono) -> tuple:
        alpha, comp = mono
        p = comp if self.perm is None else self.perm[comp]
        return (-p, self.term_order(comp).key(alpha))

    def check_rank(self, rank: int) -> None:
        if self.term_orders is not None and len(self.term_orders) != rank:
            raise RingMismatchError(
                f"order has {len(self.term_orders)} component orders, vectors have rank {rank}")
        if self.perm is not None and len(self.perm) != rank:
            raise RingMismatchError(f"order permutes {len(self.perm)} components, vectors have rank {rank}")

    def _ident(self):
        return (self._single, self.term_orders, self.perm)

    def __eq__(self, other):
        return isinstance(other, AdmissibleOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        inner = repr(self._single) if self._single is not None else list(self.term_orders)
        return f"AdmissibleOrder({inner}, perm={self.perm})"


def lex_order() -> AdmissibleOrder:
    """Lexicographic position-over-term order (component 0 most significant)."""
    return AdmissibleOrder(LexOrder())


def matrix_order(matrix, perm=None) -> AdmissibleOrder:
    return AdmissibleOrder(MatrixOrder(matrix), perm)


def compare_mono(order: AdmissibleOrder, m1, m2) -> Ordering:
    if len(m1[0]) != len(m2[0]):
        raise RingMismatchError(f"monomials over {len(m1[0])} and {len(m2[0])} variables")
    return _cmp(order.key(m1), order.key(m2))


# ---------------------------------------------------------------------------
# monomial and term divisibility


def divides_mono(m1, m2) -> bool:
    return m1[1] == m2[1] and all(map(le, m1[0], m2[0]))


def quotient_mono(m2, m1) -> tuple:
    """Exponent ``gamma`` with ``x^gamma * m1 == m2``."""
    if not divides_mono(m1, m2):
        raise ArithmeticError(f"{m1} does not divide {m2}")
    return tuple(y - x for x, y in zip(m1[0], m2[0]))


def lcm_exponent(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def divides_term(domain: EuclideanDomain, s, t) -> bool:
    return domain.divides(s[0], t[0]) and divides_mono(s[1], t[1])


def quotient_term(domain: EuclideanDomain, t, s):
    """Term ``(q, gamma)`` with ``q x^gamma * s == t``."""
    if not divides_term(domain, s, t):
        raise ArithmeticError("term does not divide")
    return domain.exact_quotient(t[0], s[0]), quotient_mono(t[1], s[1])


# ---------------------------------------------------------------------------
# polynomial vectors


class Leading(NamedTuple):
    mono: tuple
    coeff: object

    @property
    def term(self):
        return (self.coeff, self.mono)


class PolyVector:
    """Immutable element of ``R[x]^rank``."""

    __slots__ = ("ring", "rank", "terms", "_lead", "_hash")

    def __init__(self, ring: PolyRing, rank: int, terms: dict):
        # terms must already be free of zero coefficients; use from_terms otherwise
        self.ring = ring
        self.rank = rank
        self.terms = terms
        self._lead = None
        self._hash = None

    @classmethod
    def from_terms(cls, ring: PolyRing, rank: int, terms) -> "PolyVector":
        conv = ring.domain.convert
        out: dict = {}
        for c, (alpha, comp) in terms:
            alpha = tuple(alpha)
            if len(alpha) != ring.nvars:
                raise RingMismatchError(f"exponent {alpha} has wrong length for {ring}")
            if any(a < 0 for a in alpha):
                raise ValueError("exponents must be non-negative")
            if not 0 <= comp < rank:
                raise RingMismatchError(f"component {comp} out of range for rank {rank}")
            key = (alpha, comp)
            v = out.get(key, 0) + conv(c)
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
        return cls(ring, rank, out)

    @classmethod
    def from_entries(cls, ring: PolyRing, entries: Sequence["PolyVector"]) -> "PolyVector":
        terms = {}
        for j, p in enumerate(entries):
            if p.ring != ring or p.rank != 1:
                raise RingMismatchError("entries must be polynomials over the same ring")
            for (alpha, _), c in p.terms.items():
                terms[(alpha, j)] = c
        return cls(ring, len(entries), terms)

    # -- basic protocol ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.ring == other.ring and self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def coeff(self, mono):
        return self.terms.get(mono, 0)

    def _check(self, other: "PolyVector"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring {self.ring} vs {other.ring}")
        if self.rank != other.rank:
            raise RingMismatchError(f"rank {self.rank} vs {other.rank}")

    # -- arithmetic -------------------------------------------------------

    def add_scaled(self, c, gamma: tuple, other: "PolyVector") -> "PolyVector":
        """Return ``self + c * x^gamma * other``."""
        self._check(other)
        if c == 0 or not other.terms:
            return self
        out = dict(self.terms)
        for (alpha, comp), b in other.terms.items():
            key = (tuple(x + y for x, y in zip(alpha, gamma)), comp)
            v = out.get(key, 0) + c * b
            if v == 0:
                del out[key]
            else:
                out[key] = v
        return PolyVector(self.ring, self.rank, out)

    def __add__(self, other):
        return self.add_scaled(1, self.ring.zero_exponent, other)

    def __sub__(self, other):
        return self.add_scaled(-1, self.ring.zero_exponent, other)

    def __neg__(self):
        return PolyVector(self.ring, self.rank, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "PolyVector":
        if c == 0:
            return self.ring.zero(self.rank)
        return PolyVector(self.ring, self.rank, {m: c * v for m, v in self.terms.items()})

    def mul_term(self, c, gamma: tuple) -> "PolyVector":
        """Return ``c * x^gamma * self``."""
        if c == 0:
            return self.ring.zero(self.rank)
        return PolyVector(
            self.ring,
            self.rank,
            {(tuple(x + y for x, y in zip(a, gamma)), i): c * v for (a, i), v in self.terms.items()},
        )

    def mul_poly(self, p: "PolyVector") -> "PolyVector":
        """Multiply by the polynomial ``p`` (a rank-1 vector)."""
        if p.rank != 1:
            raise RingMismatchError("multiplier must be a polynomial")
        out = self.ring.zero(self.rank)
        for (gamma, _), c in p.terms.items():
            out = out.add_scaled(c, gamma, self)
        return out

    def __mul__(self, other):
        if isinstance(other, PolyVector):
            if self.rank == 1:
                return other.mul_poly(self)
            return self.mul_poly(other)
        return self.scale(self.ring.domain.convert(other))

    __rmul__ = __mul__

    # -- structure --------------------------------------------------------

    def entry(self, j: int) -> "PolyVector":
        if not 0 <= j < self.rank:
            raise IndexError(j)
        return PolyVector(self.ring, 1, {(a, 0): c for (a, i), c in self.terms.items() if i == j})

    def entries(self) -> list["PolyVector"]:
        buckets: list[dict] = [{} for _ in range(self.rank)]
        for (a, i), c in self.terms.items():
            buckets[i][(a, 0)] = c
        return [PolyVector(self.ring, 1, b) for b in buckets]

    def components(self) -> set[int]:
        return {i for (_, i) in self.terms}

    def embed(self, rank: int, offset: int = 0) -> "PolyVector":
        """Shift components by ``offset`` into a vector of the given rank."""
        return PolyVector(self.ring, rank, {(a, i + offset): c for (a, i), c in self.terms.items()})

    def restrict(self, start: int, stop: int) -> "PolyVector":
        """Components ``start..stop-1`` as a vector of rank ``stop - start``."""
        return PolyVector(
            self.ring, stop - start,
            {(a, i - start): c for (a, i), c in self.terms.items() if start <= i < stop},
        )

    def total_degree(self) -> int:
        return max((sum(a) for (a, _) in self.terms), default=-1)

    # -- leading data -----------------------------------------------------

    def leading(self, order: AdmissibleOrder) -> Leading:
        if not self.terms:
            raise ValueError("leading data is undefined for the zero vector")
        cached = self._lead
        if cached is not None and cached[0] is order:
            return cached[1]
        key = order.key
        mono = max(self.terms, key=key)
        lead = Leading(mono, self.terms[mono])
        self._lead = (order, lead)
        return lead

    def lm(self, order):
        return self.leading(order).mono

    def lc(self, order):
        return self.leading(order).coeff

    def lt(self, order):
        return self.leading(order).term

    def sorted_terms(self, order: AdmissibleOrder) -> list:
        """``(mono, coeff)`` pairs in strictly decreasing order."""
        key = order.key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def __repr__(self):
        from .parsing import format_vector

        text = format_vector(self) if self.rank > 1 else format_vector(self)[1:-1]
        return f"PolyVector({text!r})"

    def __str__(self):
        from .parsing import format_polynomial, format_vector

        return format_polynomial(self) if self.rank == 1 else format_vector(self)


def poly_add(f: PolyVector, g: PolyVector) -> PolyVector:
    return f + g


def poly_sub(f: PolyVector, g: PolyVector) -> PolyVector:
    return f - g


def poly_negate(f: PolyVector) -> PolyVector:
    return -f


def scale_by_term(f: PolyVector, coeff, gamma) -> PolyVector:
    return f.mul_term(coeff, tuple(gamma))


# ---------------------------------------------------------------------------
# gradings and the orders built on them


class DegDelta(NamedTuple):
    mono: tuple
    grade: int


def deg_delta(f: PolyVector, order: AdmissibleOrder) -> DegDelta:
    lead = f.leading(order)
    return DegDelta(lead.mono, f.ring.domain.delta(lead.coeff))


def div_delta_leq(d1: DegDelta, d2: DegDelta) -> bool:
    """``d1`` is below ``d2``: monomial divides, same component, grade not larger."""
    return d1.grade <= d2.grade and divides_mono(d1.mono, d2.mono)


def min_elements(degs: Iterable[DegDelta]) -> set[DegDelta]:
    items = set(degs)
    return {d for d in items if not any(e != d and div_delta_leq(e, d) for e in items)}


def lep_key(p: PolyVector, order: AdmissibleOrder) -> list:
    """Sort key realizing the total order on polynomial vectors.

    Compares the coefficient ``hat_delta`` grades at the largest monomial
    vector where two vectors differ.
    """
    hd = p.ring.domain.hat_delta
    key = order.key
    return [(key(m), hd(c)) for m, c in p.sorted_terms(order)]


def lep_compare(p: PolyVector, q: PolyVector, order: AdmissibleOrder) -> Ordering:
    p._check(q)
    if p == q:
        return Ordering.EQ
    m = (p - q).lm(order)
    hd = p.ring.domain.hat_delta
    return _cmp(hd(p.coeff(m)), hd(q.coeff(m)))
