"""Sparse exact row reduction over the rationals.

:class:`EchelonBasis` maintains a reduced row-echelon basis of a growing
subspace.  Vectors are sparse mappings from column keys to Fractions; keys
only need to be hashable and mutually orderable (exponent tuples and
super-monomials both qualify).  The pivot of a row is its smallest key.

The basis is kept *fully* reduced: each pivot column is zero in every
other row.  That is what lets callers read coordinates of a subspace
vector directly off the pivot columns, which is how traces on invariant
subspaces are computed.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)

Vector = dict  # column key -> Fraction


class EchelonBasis:
    """Growing subspace in reduced row-echelon form."""

    def __init__(self):
        self._rows: dict = {}  # pivot key -> row (dict, pivot coefficient 1)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list:
        return sorted(self._rows)

    def rows(self) -> list[tuple[object, Vector]]:
        """(pivot, row) pairs in pivot order.  Rows are live; do not mutate."""
        return [(p, self._rows[p]) for p in sorted(self._rows)]

    def reduce(self, vec: Vector) -> Vector:
        """Residual of vec after eliminating every pivot coordinate."""
        v = {k: Fraction(c) for k, c in vec.items() if c}
        # Full reduction means no row can reintroduce another pivot, so one
        # pass over the pivots initially present suffices.
        for p in [k for k in v if k in self._rows]:
            c = v.get(p, _ZERO)
            if not c:
                continue
            for k, rc in self._rows[p].items():
                nc = v.get(k, _ZERO) - c * rc
                if nc:
                    v[k] = nc
                else:
                    v.pop(k, None)
        return v

    def insert(self, vec: Vector) -> bool:
        """Add vec to the span; returns True when the rank grew."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        new_row = {k: c * inv for k, c in r.items()}
        for other in self._rows.values():
            c = other.get(p, _ZERO)
            if not c:
                continue
            for k, rc in new_row.items():
                nc = other.get(k, _ZERO) - c * rc
                if nc:
                    other[k] = nc
                else:
                    other.pop(k, None)
        self._rows[p] = new_row
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)
