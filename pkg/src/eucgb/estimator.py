"""scikit-learn style wrappers.

``StrongGroebnerBasis`` learns the reduced strong Gröbner basis of a set of
generators in ``fit``; ``transform`` maps elements to their Euclidean
remainders and ``predict`` answers module membership.  ``MatrixNormalForm``
is a stateless transformer producing the Gröbner normal form of a matrix.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .division import euclidean_divide
from .groebner import RunStats, reduced_strong_groebner
from .linsys import PolyMatrix, gnf
from .parsing import parse_element
from .polyvec import AdmissibleOrder, MatrixOrder, PolyRing, PolyVector, RingMismatchError, lex_order


def make_ring(ring, variables) -> PolyRing:
    if isinstance(ring, PolyRing):
        return ring
    if variables is None:
        raise ValueError("variables must be given when ring is a coefficient name")
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    return PolyRing(ring, variables)


def make_order(order) -> AdmissibleOrder:
    """``"lex"``, an integer weight matrix, or an :class:`AdmissibleOrder`."""
    if order is None or order == "lex":
        return lex_order()
    if isinstance(order, AdmissibleOrder):
        return order
    if isinstance(order, MatrixOrder):
        return AdmissibleOrder(order)
    if isinstance(order, str):
        raise ValueError(f"unknown order {order!r}")
    return AdmissibleOrder(MatrixOrder(order))


def check_elements(X, ring: PolyRing, rank: int | None = None) -> list[PolyVector]:
    """Coerce strings and vectors to elements of ``ring``, all of one rank."""
    if isinstance(X, (str, PolyVector)):
        raise TypeError("expected a sequence of elements, got a single element")
    out = []
    for x in X:
        if isinstance(x, str):
            x = parse_element(x, ring)
        elif not isinstance(x, PolyVector):
            raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial vector")
        if x.ring != ring:
            raise RingMismatchError(f"element over {x.ring}, expected {ring}")
        if rank is None:
            rank = x.rank
        elif x.rank != rank:
            raise RingMismatchError(f"element of rank {x.rank}, expected rank {rank}")
        out.append(x)
    if not out:
        raise ValueError("empty input")
    return out


class StrongGroebnerBasis(BaseEstimator, TransformerMixin):
    """Reduced strong Gröbner basis of the module spanned by the training elements.

    Parameters
    ----------
    ring : {"Z", "Q"} or PolyRing
    variables : list of str or comma separated str, ignored if ``ring`` is a PolyRing
    order : "lex", integer weight matrix, or AdmissibleOrder
    coprime_skip : bool, enable the coprime pair criterion

    Attributes
    ----------
    basis_ : list of PolyVector, sorted decreasing
    rank_ : int
    stats_ : RunStats
    """

    def __init__(self, ring="Z", variables=None, order="lex", coprime_skip=True):
        self.ring = ring
        self.variables = variables
        self.order = order
        self.coprime_skip = coprime_skip

    def fit(self, X, y=None):
        ring = make_ring(self.ring, self.variables)
        order = make_order(self.order)
        gens = [g for g in check_elements(X, ring) if g]
        if not gens:
            raise ValueError("all generators are zero")
        self.ring_ = ring
        self.order_ = order
        self.rank_ = gens[0].rank
        self.stats_ = RunStats()
        self.basis_ = reduced_strong_groebner(gens, order, coprime=self.coprime_skip, stats=self.stats_)
        return self

    def _remainders(self, X) -> list[PolyVector]:
        check_is_fitted(self, "basis_")
        out = []
        for f in check_elements(X, self.ring_, self.rank_):
            out.append(f if f.is_zero() else euclidean_divide(f, self.basis_, self.order_).remainder)
        return out

    def transform(self, X) -> list[PolyVector]:
        """Euclidean remainder of each element modulo the basis."""
        return self._remainders(X)

    def predict(self, X) -> np.ndarray:
        """Boolean membership of each element in the fitted module."""
        return np.array([r.is_zero() for r in self._remainders(X)], dtype=bool)

    def score(self, X, y) -> float:
        return float(np.mean(self.predict(X) == np.asarray(y, dtype=bool)))


class MatrixNormalForm(BaseEstimator, TransformerMixin):
    """Stateless transformer: a matrix, given as rows, to its Gröbner normal form rows."""

    def __init__(self, ring="Z", variables=None, column_orders=None, coprime_skip=True):
        self.ring = ring
        self.variables = variables
        self.column_orders = column_orders
        self.coprime_skip = coprime_skip

    def fit(self, X=None, y=None):
        self.ring_ = make_ring(self.ring, self.variables)
        return self

    def transform(self, X: Iterable) -> list[PolyVector]:
        check_is_fitted(self, "ring_")
        rows = check_elements(X, self.ring_)
        A = PolyMatrix(self.ring_, rows[0].rank, rows)
        return gnf(A, self.column_orders, coprime=self.coprime_skip).H.rows
