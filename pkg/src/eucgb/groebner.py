"""Strong and reduced strong Gröbner bases of submodules of R[x]^k.

The reduced completion interleaves three kinds of steps, always in the same
priority: normalize an element, else softly reduce one (carried on until that
element is irreducible by the others), else augment the basis by the
S-polynomial vector of an uncertified pair with the smallest lcm of leading
monomials.
"""
from __future__ import annotations

import heapq
import logging
import random
from dataclasses import dataclass, field
from operator import le
from typing import Iterable, NamedTuple, Sequence

from .division import check_strong_standard, euclidean_divide, lead_reduce
from .polyvec import (
    AdmissibleOrder,
    PolyVector,
    deg_delta,
    div_delta_leq,
    divides_mono,
    lcm_exponent,
    lep_key,
    quotient_mono,
)

log = logging.getLogger(__name__)


def _dedupe(F: Iterable[PolyVector]) -> list[PolyVector]:
    out: list[PolyVector] = []
    seen = set()
    for f in F:
        if f.is_zero():
            raise ValueError("generators must be nonzero")
        if f not in seen:
            seen.add(f)
            out.append(f)
    if not out:
        raise ValueError("need at least one generator")
    ring, rank = out[0].ring, out[0].rank
    for f in out[1:]:
        f._check(out[0])
    del ring, rank
    return out


# ---------------------------------------------------------------------------
# S-polynomial vectors


def spoly(f: PolyVector, g: PolyVector, order: AdmissibleOrder) -> PolyVector:
    """S-polynomial vector of the ordered pair ``(f, g)``.

    Requires equal leading components and ``delta(Lc f) >= delta(Lc g)``.
    Returns ``x^beta' f - q x^alpha' g`` where ``q`` minimizes the refined
    grade of ``Lc f - q Lc g``.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero vector")
    if f == g:
        raise ValueError("S-polynomial needs two distinct vectors")
    dom = f.ring.domain
    (alpha, i), a = f.leading(order)
    (beta, j), b = g.leading(order)
    if i != j:
        raise ValueError("leading terms lie in different components")
    if dom.delta(a) < dom.delta(b):
        raise ValueError("first leading coefficient has the smaller grade")
    join = lcm_exponent(alpha, beta)
    alpha_s = tuple(x - y for x, y in zip(join, beta))
    beta_s = tuple(x - y for x, y in zip(join, alpha))
    q = dom.min_quotient(a, b)
    return f.mul_term(1, beta_s).add_scaled(-q, alpha_s, g)


def spoly_of_set(f: PolyVector, g: PolyVector, order: AdmissibleOrder) -> PolyVector:
    """S-polynomial vector of the set ``{f, g}``; zero when leading components differ."""
    if f.lm(order)[1] != g.lm(order)[1]:
        return f.ring.zero(f.rank)
    delta = f.ring.domain.delta
    if delta(f.lc(order)) >= delta(g.lc(order)):
        return spoly(f, g, order)
    return spoly(g, f, order)


def coprime_skip(f: PolyVector, g: PolyVector, order: AdmissibleOrder) -> bool:
    """Whether the pair is certified without reduction by the coprime criterion.

    Needs both vectors supported in one and the same component, a unit
    leading coefficient on at least one side and coprime leading monomials.
    """
    cf, cg = f.components(), g.components()
    if len(cf) != 1 or cf != cg:
        return False
    dom = f.ring.domain
    if not (dom.is_unit(f.lc(order)) or dom.is_unit(g.lc(order))):
        return False
    alpha, beta = f.lm(order)[0], g.lm(order)[0]
    return all(x == 0 or y == 0 for x, y in zip(alpha, beta))


# ---------------------------------------------------------------------------
# Augment


class AugmentOutcome(NamedTuple):
    basis: list
    certified: bool
    branch: str


def _min_delta_divisor(f, G, order, want_term_division: bool):
    dom = f.ring.domain
    d_f = deg_delta(f, order)
    lc_f = f.lc(order)
    best = None
    for pos, g in enumerate(G):
        d_g = deg_delta(g, order)
        if not div_delta_leq(d_g, d_f):
            continue
        if want_term_division and not dom.divides(g.lc(order), lc_f):
            continue
        cand = (d_g.grade, pos)
        if best is None or cand < best[0]:
            best = (cand, g)
    return None if best is None else best[1]


def augment(G: Sequence[PolyVector], pair, order: AdmissibleOrder) -> AugmentOutcome:
    """One augmentation step on the pair ``{p, q}`` of ``G``.

    Returns the (possibly enlarged) basis and whether the pair is now
    certified, i.e. its S-polynomial vector is zero or has a strong standard
    representation by the returned basis.
    """
    p, q = pair
    G = list(G)
    if p == q or p not in G or q not in G:
        raise ValueError("pair must consist of two distinct basis elements")
    dom = p.ring.domain
    f = spoly_of_set(p, q, order)
    if f.is_zero():
        return AugmentOutcome(G, True, "zero")
    g = _min_delta_divisor(f, G, order, want_term_division=True)
    if g is not None:
        lead_f, lead_g = f.leading(order), g.leading(order)
        c = dom.exact_quotient(lead_f.coeff, lead_g.coeff)
        f1 = f.add_scaled(-c, quotient_mono(lead_f.mono, lead_g.mono), g)
        if f1:
            r = euclidean_divide(f1, G, order).remainder
            if r:
                G.append(r)
        return AugmentOutcome(G, True, "divisible")
    g = _min_delta_divisor(f, G, order, want_term_division=False)
    if g is not None:
        lead_f, lead_g = f.leading(order), g.leading(order)
        c = dom.min_quotient(lead_f.coeff, lead_g.coeff)
        G.append(f.add_scaled(-c, quotient_mono(lead_f.mono, lead_g.mono), g))
        return AugmentOutcome(G, False, "coefficient")
    G.append(f)
    return AugmentOutcome(G, False, "new")


# ---------------------------------------------------------------------------
# strong Gröbner bases


@dataclass
class RunStats:
    augment: int = 0
    soft_reduce: int = 0
    normalize: int = 0
    coprime_skipped: list = field(default_factory=list)


def strong_groebner(F: Iterable[PolyVector], order: AdmissibleOrder, coprime: bool = True,
                    stats: RunStats | None = None) -> list[PolyVector]:
    """A strong Gröbner basis of the module generated by ``F`` (elements are only added).

    Pairs are taken smallest lcm of leading monomials first.
    """
    G = _dedupe(F)
    order.check_rank(G[0].rank)
    stats = stats if stats is not None else RunStats()
    pending: list = []

    def push(i, j):
        (bi, ci), _ = G[i].leading(order)
        (bj, cj), _ = G[j].leading(order)
        if ci != cj:
            return  # the S-polynomial vanishes
        heapq.heappush(pending, (order.key((lcm_exponent(bi, bj), ci)), j, i))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    while pending:
        _, j, i = heapq.heappop(pending)
        p, q = G[i], G[j]
        if coprime and coprime_skip(p, q, order):
            stats.coprime_skipped.append((p, q))
            continue
        while True:
            n = len(G)
            G, certified, branch = augment(G, (p, q), order)
            stats.augment += 1
            log.debug("augment %s: certified=%s, basis size %d", branch, certified, len(G))
            for b in range(n, len(G)):
                for a in range(b):
                    push(a, b)
            if certified:
                break
    return G


# ---------------------------------------------------------------------------
# soft reduction and normalization


class SoftReduction(NamedTuple):
    target: PolyVector
    reducer: PolyVector
    mono: tuple
    quotient: object


def _reducer(mono, a, is_leading: bool, leads, dom):
    """Best ``(h, q)`` reducing the term ``a * mono``, or ``None``.

    ``leads`` holds ``(exponent, component, Lc(h), h)``.  The leading term
    needs exact division; a lower term needs a strict drop in the refined grade.
    """
    alpha, comp = mono
    if is_leading:
        for e, c, b, h in leads:
            if c == comp and all(map(le, e, alpha)) and dom.divides(b, a):
                return h, dom.exact_quotient(a, b)
        return None
    best = None
    hd = dom.hat_delta
    ha = hd(a)
    for e, c, b, h in leads:
        if c == comp and all(map(le, e, alpha)):
            q = dom.min_quotient(a, b)
            val = hd(a - q * b)
            if val < ha and (best is None or val < best[0]):
                best = (val, h, q)
    return None if best is None else best[1:]


def _lead_table(G, order):
    out = []
    for g in G:
        (e, c), b = g.leading(order)
        out.append((e, c, b, g))
    return out


def find_soft_reduction(G: Sequence[PolyVector], order: AdmissibleOrder,
                        fresh: set | None = None, rank_key=None) -> SoftReduction | None:
    """First applicable soft reduction, scanning elements from the largest down
    (in the total order on vectors) and their terms top-down.

    With ``fresh`` given, only pairs involving a fresh element are examined;
    the caller guarantees all other pairs were found irreducible before.
    """
    if not G:
        return None
    dom = G[0].ring.domain
    G = sorted(G, key=rank_key or (lambda g: lep_key(g, order)), reverse=True)
    table = _lead_table(G, order)
    is_fresh = [fresh is None or g in fresh for g in G]
    for fi, f in enumerate(G):
        cands = [t for hi, t in enumerate(table) if hi != fi and (is_fresh[fi] or is_fresh[hi])]
        if not cands:
            continue
        for k, (mono, a) in enumerate(f.sorted_terms(order)):
            hit = _reducer(mono, a, k == 0, cands, dom)
            if hit is not None:
                return SoftReduction(f, hit[0], mono, hit[1])
    return None


def reduce_element(f: PolyVector, others: Sequence[PolyVector], order: AdmissibleOrder,
                   start: SoftReduction | None = None) -> tuple[PolyVector, int]:
    """Apply soft reduction steps to ``f`` by ``others`` until none applies.

    Returns the result (possibly zero) and the number of steps.  Terms above
    a reduced term are never touched again, so the scan resumes there.
    """
    dom = f.ring.domain
    table = _lead_table(others, order)
    steps = 0
    floor = None
    if start is not None:
        f = f.add_scaled(-start.quotient, quotient_mono(start.mono, start.reducer.lm(order)), start.reducer)
        steps = 1
        floor = order.key(start.mono)
    while f:
        terms = f.sorted_terms(order)
        lead_mono = terms[0][0]
        hit = None
        for mono, a in terms:
            if floor is not None and order.key(mono) > floor:
                continue
            hit = _reducer(mono, a, mono == lead_mono, table, dom)
            if hit is not None:
                break
        if hit is None:
            break
        h, q = hit
        f = f.add_scaled(-q, quotient_mono(mono, h.lm(order)), h)
        floor = order.key(mono)
        steps += 1
    return f, steps


def is_softly_reduced(G: Sequence[PolyVector], order: AdmissibleOrder) -> bool:
    return find_soft_reduction(G, order) is None


def _replace(G: list, old: PolyVector, new: PolyVector | None) -> list:
    H = [g for g in G if g != old]
    if new is not None and new and new not in H:
        H.insert(G.index(old), new)
    return H


def apply_soft_reduction(G: Sequence[PolyVector], red: SoftReduction, order: AdmissibleOrder) -> list:
    f, h, mono, q = red
    r = f.add_scaled(-q, quotient_mono(mono, h.lm(order)), h)
    return _replace(list(G), f, r if r else None)


def softly_reduce_step(G: Sequence[PolyVector], order: AdmissibleOrder) -> list[PolyVector]:
    """One soft reduction step; raises ``ValueError`` if ``G`` is softly reduced."""
    red = find_soft_reduction(G, order)
    if red is None:
        raise ValueError("basis is already softly reduced")
    return apply_soft_reduction(G, red, order)


def is_normalized(g: PolyVector, order: AdmissibleOrder) -> bool:
    return bool(g) and g.ring.domain.normalizing_unit(g.lc(order)) == 1


def normalize_step(G: Sequence[PolyVector], order: AdmissibleOrder) -> list[PolyVector]:
    """Replace the first non-normalized element ``g`` by ``u g`` for the normalizing unit ``u``."""
    for g in G:
        if not is_normalized(g, order):
            u = g.ring.domain.normalizing_unit(g.lc(order))
            return _replace(list(G), g, g.scale(u))
    raise ValueError("basis is already normalized")


def sort_basis(G: Iterable[PolyVector], order: AdmissibleOrder, descending: bool = True) -> list[PolyVector]:
    return sorted(G, key=lambda g: lep_key(g, order), reverse=descending)


# ---------------------------------------------------------------------------
# reduced strong Gröbner bases


def _select_pair(G, certified, order, key):
    """Next uncertified pair: leading terms in different components first, then
    the smallest lcm of leading monomials; ties go to the lower-ranked pair."""
    ranked = sorted(G, key=key)
    best = None
    for j, q in enumerate(ranked):
        (bq, cq), _ = q.leading(order)
        for p in ranked[:j]:
            if frozenset((p, q)) in certified:
                continue
            (bp, cp), _ = p.leading(order)
            if cp != cq:
                return p, q
            k = (order.key((lcm_exponent(bp, bq), cp)), j)
            if best is None or k < best[0]:
                best = (k, (p, q))
    return None if best is None else best[1]


def reduced_strong_groebner(F: Iterable[PolyVector], order: AdmissibleOrder, coprime: bool = True,
                            stats: RunStats | None = None) -> list[PolyVector]:
    """The unique reduced strong Gröbner basis of the module generated by ``F``.

    The result is sorted in strictly decreasing order of the total order on
    polynomial vectors.
    """
    G = _dedupe(F)
    order.check_rank(G[0].rank)
    stats = stats if stats is not None else RunStats()
    certified: set[frozenset] = set()
    keys: dict[PolyVector, list] = {}

    def key(g):
        k = keys.get(g)
        if k is None:
            k = keys[g] = lep_key(g, order)
        return k

    fresh: set | None = None  # None: every pair still needs a reducibility check
    while True:
        before = set(G)
        red = None
        bad = next((g for g in G if not is_normalized(g, order)), None)
        if bad is not None:
            G = normalize_step(G, order)
            stats.normalize += 1
            log.debug("normalize: basis size %d", len(G))
        else:
            red = find_soft_reduction(G, order, fresh, key)
            if red is not None:
                others = [g for g in G if g != red.target]
                r, steps = reduce_element(red.target, others, order, red)
                G = _replace(G, red.target, r if r else None)
                stats.soft_reduce += steps
                log.debug("soft-reduce: %d steps, basis size %d", steps, len(G))
            else:
                fresh = set()
        if bad is not None or red is not None:
            if fresh is not None:  # only new or rewritten elements can create reducible pairs
                fresh = {g for g in G if g in fresh or g not in before}
            continue
        pair = _select_pair(G, certified, order, key)
        if pair is None:
            break
        if coprime and coprime_skip(pair[0], pair[1], order):
            certified.add(frozenset(pair))
            stats.coprime_skipped.append(pair)
            log.debug("coprime skip")
            continue
        G, ok, branch = augment(G, pair, order)
        fresh = {g for g in G if g in fresh or g not in before}
        stats.augment += 1
        log.debug("augment %s: certified=%s, basis size %d", branch, ok, len(G))
        if ok:
            certified.add(frozenset(pair))
        live = set(G)
        certified = {c for c in certified if c <= live}
    return sort_basis(G, order)


# ---------------------------------------------------------------------------
# verification


def uncertified_pairs(G: Sequence[PolyVector], order: AdmissibleOrder) -> list[tuple]:
    """Pairs whose S-polynomial vector is nonzero and not reducible to zero by
    leading-term cancellation (so no strong standard representation was found)."""
    G = list(G)
    bad = []
    for j, q in enumerate(G):
        for p in G[:j]:
            h = spoly_of_set(p, q, order)
            if h.is_zero():
                continue
            expr = lead_reduce(h, G, order)
            if expr.remainder or not check_strong_standard(h, G, expr.steps, order):
                bad.append((p, q))
    return bad


def random_combination(G: Sequence[PolyVector], rng: random.Random, nterms: int = 3,
                       max_degree: int = 2, coeff_bound: int = 5) -> PolyVector:
    """Random element ``sum a x^gamma g`` of the module generated by ``G``."""
    G = list(G)
    ring, rank = G[0].ring, G[0].rank
    out = ring.zero(rank)
    for _ in range(nterms):
        g = rng.choice(G)
        a = rng.randint(-coeff_bound, coeff_bound)
        gamma = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            gamma[rng.randrange(ring.nvars)] += 1
        out = out.add_scaled(ring.domain.convert(a), tuple(gamma), g)
    return out


def verify_strong_gb(G: Sequence[PolyVector], order: AdmissibleOrder, samples: int = 0,
                     rng: random.Random | None = None) -> bool:
    """Check the pair criterion on ``G`` and Euclidean-divide ``samples`` random
    module elements, which must all leave remainder 0."""
    G = list(G)
    if any(g.is_zero() for g in G):
        raise ValueError("basis contains zero")
    if uncertified_pairs(G, order):
        return False
    rng = rng or random.Random(0)
    for _ in range(samples):
        f = random_combination(G, rng)
        if f and euclidean_divide(f, G, order).remainder:
            return False
    return True


def is_reducible_by(g: PolyVector, others: Sequence[PolyVector], order: AdmissibleOrder) -> bool:
    """Whether some term of ``g`` is reducible by the leading data of ``others``."""
    dom = g.ring.domain
    hd = dom.hat_delta
    leads = [h.leading(order) for h in others]
    for mono, a in g.terms.items():
        for lead in leads:
            if divides_mono(lead.mono, mono):
                q = dom.min_quotient(a, lead.coeff)
                if hd(a - q * lead.coeff) < hd(a):
                    return True
    return False


def is_reduced_basis(G: Sequence[PolyVector], order: AdmissibleOrder) -> bool:
    """Definitional check: every element normalized and irreducible by the others
    (the strong Gröbner property is checked separately)."""
    G = list(G)
    return all(
        is_normalized(g, order) and not is_reducible_by(g, G[:i] + G[i + 1:], order)
        for i, g in enumerate(G)
    )


def member(f: PolyVector, G: Sequence[PolyVector], order: AdmissibleOrder) -> bool:
    """Module membership, given that ``G`` is a strong Gröbner basis."""
    if f.is_zero():
        return True
    return euclidean_divide(f, G, order).remainder.is_zero()
