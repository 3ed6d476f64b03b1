"""Degree-bounded brute-force oracles.

These answer membership and kernel questions by equating coefficients up to
a fixed total degree and running plain integer or rational linear algebra.
They share no code with the basis algorithms and serve as an independent
check on them.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .euclid import QQ, ZZ
from .polyvec import PolyRing, PolyVector

MAX_CELLS = 400_000


class OracleCapacityError(RuntimeError):
    """The coefficient-matching system is too large for brute force."""


def monomials_up_to(nvars: int, degree: int) -> list[tuple]:
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            alpha = [0] * nvars
            for v in combo:
                alpha[v] += 1
            out.append(tuple(alpha))
    return out


# ---------------------------------------------------------------------------
# integer lattices


def _sym_mod(e: int, p: int) -> int:
    """Residue of ``e`` modulo ``p > 0`` in ``(-p/2, p/2]``."""
    r = e % p
    return r - p if 2 * r > p else r


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix, zero rows dropped.

    Pivots positive; each entry above a pivot ``p`` reduced into ``(-p/2, p/2]``.
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    top = 0
    pivots = []
    for col in range(ncols):
        while True:
            live = [i for i in range(top, len(m)) if m[i][col] != 0]
            if not live:
                break
            i_min = min(live, key=lambda i: abs(m[i][col]))
            m[top], m[i_min] = m[i_min], m[top]
            p = m[top][col]
            done = True
            for i in range(top + 1, len(m)):
                if m[i][col]:
                    q = m[i][col] // p
                    m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                    if m[i][col]:
                        done = False
            if done:
                break
        if top < len(m) and m[top][col] != 0:
            if m[top][col] < 0:
                m[top] = [-a for a in m[top]]
            pivots.append((top, col))
            top += 1
            if top == len(m):
                break
    for t, col in pivots:
        p = m[t][col]
        for i in range(t):
            e = m[i][col]
            r = _sym_mod(e, p)
            q = (e - r) // p
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[t])]
    return [r for r in m if any(r)]


def _lattice_contains(basis: list[list[int]], v: list[int]) -> bool:
    v = list(v)
    for row in basis:
        col = next(j for j, a in enumerate(row) if a)
        if any(v[:col]):
            return False
        if v[col] % row[col]:
            return False
        q = v[col] // row[col]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def integer_kernel(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the lattice of integer vectors ``c`` with ``sum c_i rows[i] == 0``."""
    n = len(rows)
    if n == 0:
        return []
    width = len(rows[0])
    aug = [list(r) + [1 if j == i else 0 for j in range(n)] for i, r in enumerate(rows)]
    out = []
    for r in hermite_rows(aug):
        if not any(r[:width]):
            out.append(r[width:])
    return out


# ---------------------------------------------------------------------------
# rational vector spaces


def rref_rows(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Reduced row echelon form by Gauss-Jordan elimination, zero rows dropped."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        p = m[top][col]
        m[top] = [a / p for a in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[top])]
        top += 1
        if top == len(m):
            break
    return [r for r in m if any(r)]


def _span_contains(basis: list[list[Fraction]], v) -> bool:
    return len(rref_rows(basis + [list(v)])) == len(basis)


def rational_kernel(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    if n == 0:
        return []
    width = len(rows[0])
    aug = [list(r) + [1 if j == i else 0 for j in range(n)] for i, r in enumerate(rows)]
    return [r[width:] for r in rref_rows(aug) if not any(r[:width])]


# ---------------------------------------------------------------------------
# coefficient matching


def _coefficient_rows(products: list[PolyVector], extra: PolyVector | None = None):
    index: dict = {}
    for p in products + ([extra] if extra is not None else []):
        for m in p.terms:
            index.setdefault(m, len(index))
    if len(index) * (len(products) + 1) > MAX_CELLS:
        raise OracleCapacityError(f"{len(products)} x {len(index)} system exceeds oracle capacity")

    def dense(p: PolyVector):
        row = [0] * len(index)
        for m, c in p.terms.items():
            row[index[m]] = c
        return row

    return [dense(p) for p in products], (dense(extra) if extra is not None else None)


def membership_bruteforce(f: PolyVector, generators: Sequence[PolyVector], degree_bound: int) -> bool:
    """Whether ``f = sum h_i g_i`` with every ``deg(h_i) <= degree_bound``."""
    if f.is_zero():
        return True
    ring = f.ring
    products = [g.mul_term(1, gamma) for g in generators if g
                for gamma in monomials_up_to(ring.nvars, degree_bound)]
    if not products:
        return False
    rows, target = _coefficient_rows(products, f)
    if ring.domain is QQ:
        return _span_contains(rref_rows(rows), target)
    return _lattice_contains(hermite_rows(rows), target)


def kernel_bruteforce(A, degree_bound: int) -> list[PolyVector]:
    """Spanning set of the kernel vectors of ``A`` whose entries have degree ``<= degree_bound``.

    Over the integers this is a lattice basis, over the rationals a vector
    space basis, of the truncated solution set.
    """
    ring = A.ring
    r, s = A.shape
    cols = A.transpose().rows
    unknowns = [(j, gamma) for j in range(s) for gamma in monomials_up_to(ring.nvars, degree_bound)]
    products = [cols[j].mul_term(1, gamma) if r else ring.zero(0) for j, gamma in unknowns]
    rows, _ = _coefficient_rows(products)
    if rows and not rows[0]:
        rows = [[] for _ in rows]
    if ring.domain is QQ:
        basis = rational_kernel(rows) if rows and rows[0] else [
            [Fraction(int(i == k)) for i in range(len(unknowns))] for k in range(len(unknowns))]
    else:
        basis = integer_kernel(rows) if rows and rows[0] else [
            [int(i == k) for i in range(len(unknowns))] for k in range(len(unknowns))]
    return [
        PolyVector.from_terms(ring, s, [(c, (gamma, j)) for c, (j, gamma) in zip(vec, unknowns) if c])
        for vec in basis
    ]


def in_truncated_span(v: PolyVector, spanning: Sequence[PolyVector]) -> bool:
    """Whether ``v`` is an integer (resp. rational) combination of ``spanning``."""
    if v.is_zero():
        return True
    if not spanning:
        return False
    rows, target = _coefficient_rows(list(spanning), v)
    if v.ring.domain is QQ:
        return _span_contains(rref_rows(rows), target)
    return _lattice_contains(hermite_rows(rows), target)


# ---------------------------------------------------------------------------
# random instances for property suites

SUITE_BOUNDS = {
    "max_vars": 3,
    "max_rank": 3,
    "max_degree": 2,
    "max_terms": 3,
    "max_generators": 4,
    "coeff_bound": 20,
}


def random_coefficient(rng: random.Random, domain, coeff_bound: int = 20):
    a = rng.randint(-coeff_bound, coeff_bound)
    if domain is QQ:
        return Fraction(a, rng.randint(1, 5))
    return a


def random_element(rng: random.Random, ring: PolyRing, rank: int, max_degree: int = 2,
                   max_terms: int = 3, coeff_bound: int = 20) -> PolyVector:
    """Random vector with at most ``max_terms`` terms of total degree ``<= max_degree``."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        alpha = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            alpha[rng.randrange(ring.nvars)] += 1
        terms[(tuple(alpha), rng.randrange(rank))] = random_coefficient(rng, ring.domain, coeff_bound)
    return PolyVector.from_terms(ring, rank, [(c, m) for m, c in terms.items()])


def random_generators(rng: random.Random, ring: PolyRing, rank: int, max_generators: int = 4,
                      **element_bounds) -> list[PolyVector]:
    """Between one and ``max_generators`` nonzero random vectors."""
    out: list[PolyVector] = []
    target = rng.randint(1, max_generators)
    while len(out) < target:
        g = random_element(rng, ring, rank, **element_bounds)
        if g:
            out.append(g)
    return out


def random_instance(rng: random.Random, domain=None, max_vars: int = 3, max_rank: int = 3,
                    max_generators: int = 4, **element_bounds):
    """A random ring, rank and generator set within the suite bounds."""
    domain = domain or ZZ
    names = ["x", "y", "z"][: rng.randint(1, max_vars)]
    ring = PolyRing(domain, names)
    rank = rng.randint(1, max_rank)
    return ring, rank, random_generators(rng, ring, rank, max_generators, **element_bounds)
