"""Euclidean division of polynomial vectors and checks on the resulting expressions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .polyvec import (
    AdmissibleOrder,
    PolyVector,
    deg_delta,
    div_delta_leq,
    divides_mono,
    quotient_mono,
)


class Step(NamedTuple):
    """One summand ``coeff * x^gamma * divisor``."""

    coeff: object
    gamma: tuple
    divisor: PolyVector


@dataclass
class Expression:
    """``dividend == sum(a * x^gamma * g for a, gamma, g in steps) + remainder``."""

    steps: list[Step] = field(default_factory=list)
    remainder: PolyVector | None = None

    def reconstruct(self, ring, rank) -> PolyVector:
        out = self.remainder if self.remainder is not None else ring.zero(rank)
        for a, gamma, g in self.steps:
            out = out.add_scaled(a, gamma, g)
        return out


def _pick_divisor(r: PolyVector, divisors, order):
    """Among ``g`` with ``Deg_delta(g)`` below ``Deg_delta(r)`` pick the smallest
    ``delta(Lc(g))``; ties go to the earlier divisor."""
    delta = r.ring.domain.delta
    d_r = deg_delta(r, order)
    best = None
    for pos, g in enumerate(divisors):
        d_g = deg_delta(g, order)
        if div_delta_leq(d_g, d_r):
            cand = (d_g.grade, pos)
            if best is None or cand < best[0]:
                best = (cand, g)
    return None if best is None else best[1]


def euclidean_divide(f: PolyVector, divisors: Sequence[PolyVector], order: AdmissibleOrder) -> Expression:
    """Divide ``f`` by ``divisors`` until the remainder's leading term is out of reach.

    Each step subtracts ``q * Lm(r)/Lm(g) * g`` where ``q`` minimizes the
    refined grade of ``Lc(r) - q Lc(g)``.  Only leading terms are touched,
    so lower terms of the remainder may still be reducible.
    """
    divisors = list(divisors)
    if f.is_zero():
        raise ValueError("cannot divide the zero vector")
    if any(g.is_zero() for g in divisors):
        raise ValueError("divisors must be nonzero")
    dom = f.ring.domain
    steps: list[Step] = []
    r = f
    while r:
        g = _pick_divisor(r, divisors, order)
        if g is None:
            break
        lead_r = r.leading(order)
        lead_g = g.leading(order)
        q = dom.min_quotient(lead_r.coeff, lead_g.coeff)
        gamma = quotient_mono(lead_r.mono, lead_g.mono)
        r = r.add_scaled(-q, gamma, g)
        steps.append(Step(q, gamma, g))
    return Expression(steps, r)


def lead_reduce(f: PolyVector, divisors: Sequence[PolyVector], order: AdmissibleOrder) -> Expression:
    """Repeatedly cancel the whole leading term of ``f`` by some ``Lt(g) | Lt(r)``.

    Every step strictly lowers the leading monomial, so with remainder 0 the
    steps form a strong standard representation.
    """
    dom = f.ring.domain
    steps: list[Step] = []
    r = f
    while r:
        lead_r = r.leading(order)
        for g in divisors:
            lead_g = g.leading(order)
            if divides_mono(lead_g.mono, lead_r.mono) and dom.divides(lead_g.coeff, lead_r.coeff):
                q = dom.exact_quotient(lead_r.coeff, lead_g.coeff)
                gamma = quotient_mono(lead_r.mono, lead_g.mono)
                r = r.add_scaled(-q, gamma, g)
                steps.append(Step(q, gamma, g))
                break
        else:
            break
    return Expression(steps, r)


def _in_set(g, divisors) -> bool:
    return any(g == d for d in divisors)


def check_euclidean(f: PolyVector, divisors: Sequence[PolyVector], expr: Expression,
                    order: AdmissibleOrder) -> bool:
    """Reconstruction, degree bounds and the terminal-remainder condition."""
    divisors = list(divisors)
    r = expr.remainder if expr.remainder is not None else f.ring.zero(f.rank)
    if any(not _in_set(g, divisors) for _, _, g in expr.steps):
        return False
    if expr.reconstruct(f.ring, f.rank) != f:
        return False
    if f:
        top = order.key(f.lm(order))
        for a, gamma, g in expr.steps:
            if a == 0:
                continue
            if order.key(g.mul_term(1, gamma).lm(order)) > top:
                return False
    if r:
        d_r = deg_delta(r, order)
        if any(div_delta_leq(deg_delta(g, order), d_r) for g in divisors):
            return False
    return True


def check_strong_standard(f: PolyVector, divisors: Sequence[PolyVector], steps: Sequence[Step],
                          order: AdmissibleOrder) -> bool:
    """True iff ``steps`` is a strong standard representation of ``f``."""
    divisors = list(divisors)
    if f.is_zero() or not steps:
        return False
    if any(not _in_set(g, divisors) for _, _, g in steps):
        return False
    if Expression(list(steps), None).reconstruct(f.ring, f.rank) != f:
        return False
    top = order.key(f.lm(order))
    first = steps[0]
    if order.key(first.divisor.mul_term(1, first.gamma).lm(order)) != top:
        return False
    return all(order.key(g.mul_term(1, gamma).lm(order)) < top for _, gamma, g in steps[1:])


def compose_representations(outer: Sequence[Step], inner: dict) -> list[Step]:
    """Substitute a representation of each divisor into ``outer``.

    ``inner`` maps each divisor used in ``outer`` to a strong standard
    representation of it.  Multiplying out keeps the first summand on top.
    """
    out = []
    for a, gamma, g in outer:
        for b, delta_, h in inner[g]:
            out.append(Step(a * b, tuple(x + y for x, y in zip(gamma, delta_)), h))
    return out


def exact_divide(f: PolyVector, g: PolyVector, order: AdmissibleOrder) -> PolyVector:
    """The polynomial ``p`` with ``p * g == f``; raises if ``g`` does not divide ``f``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f.ring.zero(1)
    expr = lead_reduce(f, [g], order)
    if expr.remainder:
        raise ArithmeticError("not an exact division")
    terms = [(a, (gamma, 0)) for a, gamma, _ in expr.steps]
    return PolyVector.from_terms(f.ring, 1, terms)
