"""scikit-learn compatible front end.

Rows of ``X`` are trivectors: 20 coordinates in lexicographic triple order
(``y_123, y_124, ..., y_456``), a :class:`Multivector`, an expression string or
a ``{"123": "1/2", ...}`` document. Values stay exact; output arrays have
``object`` dtype holding :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exterior import TRIPLES, Multivector, code
from .expression import from_document, parse_trivector
from .invariants import (i1_appendix, i1_structural, i2_appendix, i2_permutation,
                         i2_structural)
from .scalar import as_rational
from .symplectic import act, is_symplectic

FEATURE_NAMES = tuple(f"y{code(t)}" for t in TRIPLES)

_ROUTES = {
    "structural": (i1_structural, i2_structural),
    "appendix": (i1_appendix, i2_appendix),
    "permutation": (i1_structural, i2_permutation),
}


def _exact(value) -> Fraction:
    if isinstance(value, (float, np.floating)):
        if not float(value).is_integer():
            raise ValueError(f"non-integral float {value!r}; pass a Fraction or a 'p/q' string")
        return Fraction(int(value))
    return as_rational(value)


def check_trivectors(X) -> list[Multivector]:
    """Validate ``X`` and return one exact trivector per row."""
    if isinstance(X, (Multivector, str, dict)):
        raise ValueError("expected a 2D collection of trivectors, got a single sample; wrap it in a list")
    rows = list(X)
    if not rows:
        raise ValueError("found 0 samples; at least 1 is required")
    out = []
    for k, row in enumerate(rows):
        if isinstance(row, Multivector):
            if row.grade != 3:
                raise ValueError(f"row {k}: expected grade 3, got {row.grade}")
            out.append(row)
        elif isinstance(row, str):
            out.append(parse_trivector(row))
        elif isinstance(row, dict):
            out.append(from_document(row))
        else:
            values = list(row)
            if len(values) != len(TRIPLES):
                raise ValueError(f"row {k}: expected {len(TRIPLES)} coordinates, got {len(values)}")
            try:
                out.append(Multivector(3, [_exact(v) for v in values]))
            except TypeError as exc:
                raise ValueError(f"row {k}: {exc}") from None
    return out


def check_symplectic(A) -> list[list[Fraction]]:
    m = [[_exact(v) for v in row] for row in A]
    if len(m) != 6 or any(len(row) != 6 for row in m):
        raise ValueError("expected a 6x6 matrix")
    if not is_symplectic(m):
        raise ValueError("matrix does not preserve the symplectic form")
    return m


class SymplecticInvariants(TransformerMixin, BaseEstimator):
    """Map trivectors to ``(I1, I2)``.

    Stateless: ``fit`` only validates input and records ``n_features_in_``.

    Parameters
    ----------
    route : {"structural", "appendix", "permutation"}
        Which computation to use. All agree exactly.
    """

    def __init__(self, route: str = "structural"):
        self.route = route

    def fit(self, X, y=None):
        if self.route not in _ROUTES:
            raise ValueError(f"route must be one of {sorted(_ROUTES)}, got {self.route!r}")
        check_trivectors(X)
        self.n_features_in_ = len(TRIPLES)
        self.feature_names_in_ = np.asarray(FEATURE_NAMES, dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        f1, f2 = _ROUTES[self.route]
        thetas = check_trivectors(X)
        out = np.empty((len(thetas), 2), dtype=object)
        for k, theta in enumerate(thetas):
            out[k, 0] = f1(theta)
            out[k, 1] = f2(theta)
        return out

    def get_feature_names_out(self, input_features=None):
        return np.asarray(["I1", "I2"], dtype=object)


class SymplecticAction(TransformerMixin, BaseEstimator):
    """Move trivectors by a fixed symplectic matrix; output rows are the 20
    coordinates of ``A . theta``."""

    def __init__(self, matrix=None):
        self.matrix = matrix

    def fit(self, X, y=None):
        if self.matrix is None:
            raise ValueError("matrix must be set")
        self.matrix_ = check_symplectic(self.matrix)
        check_trivectors(X)
        self.n_features_in_ = len(TRIPLES)
        return self

    def transform(self, X):
        check_is_fitted(self, "matrix_")
        thetas = check_trivectors(X)
        return np.asarray([list(act(self.matrix_, t).coeffs) for t in thetas], dtype=object)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(FEATURE_NAMES, dtype=object)
