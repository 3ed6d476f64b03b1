"""Linear algebra over R[x]: Gröbner normal form, kernels, and linear systems.

A matrix is a list of row vectors; the Gröbner normal form of a matrix is
the reduced strong Gröbner basis of its row module under the
position-over-term order built from per-column term orders, with rows
sorted strictly decreasing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .division import exact_divide
from .euclid import QQ, ZZ
from .groebner import RunStats, reduced_strong_groebner
from .polyvec import (
    AdmissibleOrder,
    LexOrder,
    MonomialOrder,
    PolyRing,
    PolyVector,
    RingMismatchError,
)


class PolyMatrix:
    """An ``r x s`` matrix over ``R[x]`` stored as ``r`` row vectors of rank ``s``."""

    def __init__(self, ring: PolyRing, ncols: int, rows: Sequence[PolyVector] = ()):
        self.ring = ring
        self.ncols = ncols
        self.rows = list(rows)
        for row in self.rows:
            if row.ring != ring or row.rank != ncols:
                raise RingMismatchError(
                    f"row of rank {row.rank} over {row.ring} in a {ncols}-column matrix over {ring}")

    @classmethod
    def from_entries(cls, ring: PolyRing, entries) -> "PolyMatrix":
        """Build from nested lists of polynomials, strings or scalars."""
        entries = [list(r) for r in entries]
        if not entries or not entries[0]:
            raise ValueError("empty matrix")
        ncols = len(entries[0])
        if any(len(r) != ncols for r in entries):
            raise ValueError("matrix rows have different lengths")
        return cls(ring, ncols, [ring.vector(r) for r in entries])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def entry(self, i: int, j: int) -> PolyVector:
        return self.rows[i].entry(j)

    def to_entries(self) -> list[list[PolyVector]]:
        return [row.entries() for row in self.rows]

    def transpose(self) -> "PolyMatrix":
        cols: list[list[PolyVector]] = [[] for _ in range(self.ncols)]
        for row in self.rows:
            for j, e in enumerate(row.entries()):
                cols[j].append(e)
        return PolyMatrix(self.ring, len(self.rows), [PolyVector.from_entries(self.ring, c) for c in cols])

    def apply(self, x: PolyVector) -> PolyVector:
        """The column vector ``A x`` as a vector of rank ``r``."""
        if x.rank != self.ncols:
            raise RingMismatchError(f"vector of rank {x.rank} for a matrix with {self.ncols} columns")
        xs = x.entries()
        out = []
        for row in self.rows:
            acc = self.ring.zero(1)
            for a, b in zip(row.entries(), xs):
                acc = acc + a * b
            out.append(acc)
        return PolyVector.from_entries(self.ring, out)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ring == other.ring \
            and self.ncols == other.ncols and self.rows == other.rows

    def __repr__(self):
        from .parsing import format_vector

        return "PolyMatrix([" + ", ".join(format_vector(r) for r in self.rows) + "])"


def column_order(column_orders, ncols: int) -> AdmissibleOrder:
    if column_orders is None:
        column_orders = LexOrder()
    if isinstance(column_orders, MonomialOrder):
        return AdmissibleOrder(column_orders)
    column_orders = list(column_orders)
    if len(column_orders) != ncols:
        raise ValueError(f"{len(column_orders)} column orders for {ncols} columns")
    return AdmissibleOrder(column_orders)


class Blocks(NamedTuple):
    """Row blocks of a normal form ``H`` of ``[[-b^T | 1 0], [A^T | 0 I]]``.

    ``B`` holds the rows with a nonzero entry among the first ``r`` columns,
    ``v`` the column-``r`` entries of the next rows and ``S`` their last ``s``
    entries; ``D`` is the remaining rows restricted to the last ``s`` columns.
    """

    B: list
    v: list
    S: list
    D: list


@dataclass
class GnfResult:
    H: PolyMatrix
    order: AdmissibleOrder

    def blocks(self, r: int) -> Blocks:
        """Split ``H`` at column ``r`` (number of equations of the system)."""
        width = self.H.ncols
        if not 0 <= r < width:
            raise IndexError(f"split column {r} out of range for {width} columns")
        B, v, S, D = [], [], [], []
        for row in self.H.rows:
            first = _first_component(row)
            if first < r:
                B.append(row)
            elif first == r:
                v.append(row.entry(r))
                S.append(row.restrict(r + 1, width))
            else:
                D.append(row.restrict(r + 1, width))
        return Blocks(B, v, S, D)


def gnf(A: PolyMatrix, column_orders=None, coprime: bool = True,
        stats: RunStats | None = None) -> GnfResult:
    """Gröbner normal form of ``A``; zero rows are discarded."""
    if A.ncols == 0:
        raise ValueError("empty matrix")
    order = column_order(column_orders, A.ncols)
    rows = [r for r in A.rows if r]
    if not rows:
        return GnfResult(PolyMatrix(A.ring, A.ncols, []), order)
    basis = reduced_strong_groebner(rows, order, coprime=coprime, stats=stats)
    return GnfResult(PolyMatrix(A.ring, A.ncols, basis), order)


def fork_basis(H: PolyMatrix, i: int) -> list[PolyVector]:
    """Step ``i`` of a normal form: column ``i`` entries of rows vanishing before ``i``."""
    if not 0 <= i < H.ncols:
        raise IndexError(f"column {i} out of range")
    out = []
    for row in H.rows:
        if any(c < i for c in row.components()):
            continue
        e = row.entry(i)
        if e:
            out.append(e)
    return out


@dataclass
class Solution:
    particular: PolyVector
    kernel: PolyMatrix
    H: PolyMatrix

    solvable = True


@dataclass
class NoSolution:
    colon_basis: list[PolyVector]
    kernel: PolyMatrix
    H: PolyMatrix

    solvable = False


def _first_component(row: PolyVector) -> int:
    return min(row.components())


def solve(A: PolyMatrix, b: PolyVector | Sequence, orders=None, coprime: bool = True,
          stats: RunStats | None = None):
    """Solve ``A x = b`` over ``R[x]``.

    ``orders`` is ``None`` (lex everywhere) or a triple
    ``(order_rows, order_rhs, [order_1, ..., order_s])`` of term orders.
    Returns :class:`Solution` with the minimal particular solution and a
    kernel basis, or :class:`NoSolution` with a basis of the colon ideal
    ``{p : p b in col(A)}``.
    """
    ring = A.ring
    r, s = A.shape
    if not isinstance(b, PolyVector):
        b = ring.vector(list(b))
    if b.rank != r:
        raise RingMismatchError(f"right-hand side of length {b.rank} for a system with {r} equations")
    if orders is None:
        col_orders = None
    else:
        o_rows, o_rhs, o_cols = orders
        o_cols = list(o_cols)
        if len(o_cols) != s:
            raise ValueError(f"{len(o_cols)} unknown orders for {s} unknowns")
        col_orders = [o_rows] * r + [o_rhs] + o_cols
    width = r + s + 1
    At = A.transpose()
    rows = [(-b).embed(width) + ring.constant(ring.domain.one, width, r)]
    for j in range(s):
        unit = ring.constant(ring.domain.one, width, r + 1 + j)
        rows.append(At.rows[j].embed(width) + unit if r else unit)
    res = gnf(PolyMatrix(ring, width, rows), col_orders, coprime=coprime, stats=stats)
    blocks = res.blocks(r)
    kernel = PolyMatrix(ring, s, blocks.D)
    one = ring.constant(ring.domain.one)
    if blocks.v == [one]:
        return Solution(blocks.S[0], kernel, res.H)
    return NoSolution(blocks.v, kernel, res.H)


def kernel(A: PolyMatrix, column_orders=None, coprime: bool = True) -> PolyMatrix:
    """A matrix ``D`` in Gröbner normal form with ``row(D) = ker(A)``."""
    ring = A.ring
    r, s = A.shape
    width = r + s
    At = A.transpose()
    rows = []
    for j in range(s):
        unit = ring.constant(ring.domain.one, width, r + j)
        rows.append(At.rows[j].embed(width) + unit if r else unit)
    if column_orders is not None and not isinstance(column_orders, MonomialOrder):
        column_orders = [LexOrder()] * r + list(column_orders)
    H = gnf(PolyMatrix(ring, width, rows), column_orders, coprime=coprime).H
    return PolyMatrix(ring, s, [row.restrict(r, width) for row in H.rows if _first_component(row) >= r])


def ideal_member(d: PolyVector, generators: Sequence[PolyVector]) -> bool:
    """Whether ``d`` lies in the ideal generated by ``generators``."""
    ring = d.ring
    A = PolyMatrix(ring, len(generators), [PolyVector.from_entries(ring, list(generators))])
    return solve(A, PolyVector.from_entries(ring, [d])).solvable


def lcm_gcd(d1: PolyVector, d2: PolyVector) -> tuple[PolyVector, PolyVector]:
    """Least common multiple and greatest common divisor of two nonzero polynomials.

    The lcm generates the intersection ``<d1> & <d2>``, read off the first
    column of the kernel of ``[[1, -d1, 0], [1, 0, -d2]]``; the gcd is
    ``d1 * d2 / lcm``, normalized.
    """
    if d1.is_zero() or d2.is_zero():
        raise ValueError("lcm/gcd of zero")
    ring = d1.ring
    one = ring.constant(ring.domain.one)
    zero = ring.zero(1)
    A = PolyMatrix(ring, 3, [
        PolyVector.from_entries(ring, [one, -d1, zero]),
        PolyVector.from_entries(ring, [one, zero, -d2]),
    ])
    D = kernel(A)
    step = fork_basis(D, 0)
    lcm = step[-1]
    order = column_order(None, 1)
    gcd = exact_divide(d1 * d2, lcm, order)
    gcd = gcd.scale(ring.domain.normalizing_unit(gcd.lc(order)))
    return lcm, gcd


def _constant_matrix(ring: PolyRing, M) -> PolyMatrix:
    M = [list(r) for r in M]
    ncols = len(M[0]) if M else 0
    rows = [PolyVector.from_terms(ring, ncols, [(c, (ring.zero_exponent, j)) for j, c in enumerate(r)])
            for r in M]
    return PolyMatrix(ring, ncols, rows)


def _constant_rows(H: PolyMatrix) -> list[list]:
    zero = H.ring.zero_exponent
    conv = H.ring.domain.convert
    return [[conv(row.coeff((zero, j))) for j in range(H.ncols)] for row in H.rows]


def hermite_normal_form(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Hermite normal form of an integer matrix (zero rows dropped).

    Pivots are positive and entries above a pivot ``p`` lie in ``(-p/2, p/2]``.
    """
    M = [[ZZ.convert(x) for x in row] for row in M]
    if not M or not M[0]:
        return []
    ring = PolyRing(ZZ, ["x"])
    return _constant_rows(gnf(_constant_matrix(ring, M)).H)


def row_reduce(M: Sequence[Sequence]) -> list[list[Fraction]]:
    """Reduced row echelon form over the rationals (zero rows dropped)."""
    M = [[QQ.convert(x) for x in row] for row in M]
    if not M or not M[0]:
        return []
    ring = PolyRing(QQ, ["x"])
    return _constant_rows(gnf(_constant_matrix(ring, M)).H)
