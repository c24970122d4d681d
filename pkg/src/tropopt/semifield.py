"""Linearly ordered, radicable, idempotent semifields.

Four concrete instances are provided::

    MAX_PLUS   R u {-inf}   zero=-inf  one=0  (+) = max  (x) = +
    MIN_PLUS   R u {+inf}   zero=+inf  one=0  (+) = min  (x) = +
    MAX_TIMES  R+ u {0}     zero=0     one=1  (+) = max  (x) = *
    MIN_TIMES  R+ u {+inf}  zero=+inf  one=1  (+) = min  (x) = *

Elements are plain floats (or numpy float arrays); the semifield is carried
by whoever holds the data. Every operation below works elementwise on
arrays as well as on scalars.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "Semifield",
    "MAX_PLUS",
    "MIN_PLUS",
    "MAX_TIMES",
    "MIN_TIMES",
    "SEMIFIELDS",
    "get_semifield",
]


@dataclass(frozen=True)
class Semifield:
    """An idempotent semifield over extended reals.

    Parameters
    ----------
    name : str
        Tag used in serialized data, e.g. ``"max-plus"``.
    zero, one : float
        Neutral elements of addition and multiplication.
    maximizing : bool
        True when addition is ``max`` (the semifield order agrees with the
        numeric order); False when it is ``min`` (order reversed).
    multiplicative : bool
        True when multiplication is the ordinary product, False when it is
        the ordinary sum.
    """

    name: str
    zero: float
    one: float
    maximizing: bool
    multiplicative: bool

    def __repr__(self):
        return f"Semifield({self.name!r})"

    def __str__(self):
        return self.name

    # -- elementwise predicates -------------------------------------------

    def is_zero(self, a):
        return np.asarray(a) == self.zero

    def in_carrier(self, a):
        """Elementwise membership test for the carrier set."""
        a = np.asarray(a, dtype=float)
        if self.multiplicative:
            if self.maximizing:
                return np.isfinite(a) & (a >= 0.0)
            return (a > 0.0) & ~np.isnan(a)
        return ~np.isnan(a) & (np.isfinite(a) | (a == self.zero))

    def validate(self, a, what="value"):
        """Return ``a`` as a float array, raising DomainError outside the carrier."""
        arr = np.asarray(a, dtype=float)
        if not np.all(self.in_carrier(arr)):
            bad = arr[~self.in_carrier(arr)].ravel()[0]
            raise DomainError(f"{what} contains {bad!r}, not an element of {self.name}")
        return arr

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        """Idempotent addition: selection of the larger element in semifield order."""
        if self.maximizing:
            return np.maximum(a, b)
        return np.minimum(a, b)

    def mul(self, a, b):
        """Semifield multiplication; zero is absorbing."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        with np.errstate(invalid="ignore"):
            raw = a * b if self.multiplicative else a + b
        out = np.where((a == self.zero) | (b == self.zero), self.zero, raw)
        return out[()] if out.ndim == 0 else out

    def inv(self, a):
        """Multiplicative inverse. Raises DomainError on zero."""
        a = np.asarray(a, dtype=float)
        if np.any(a == self.zero):
            raise DomainError(f"zero of {self.name} has no inverse")
        out = 1.0 / a if self.multiplicative else -a
        return out[()] if out.ndim == 0 else out

    def pseudo_inv(self, a):
        """Inverse on nonzero entries, zero kept as zero (the conjugation rule)."""
        a = np.asarray(a, dtype=float)
        nz = a != self.zero
        safe = np.where(nz, a, self.one)
        out = np.where(nz, 1.0 / safe if self.multiplicative else -safe, self.zero)
        return out[()] if out.ndim == 0 else out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, r):
        """Rational power ``a**r`` in the semifield.

        For the plus semifields this is ``r * a``; for the times semifields it
        is the real power. ``pow(zero, r)`` is zero for ``r > 0`` and a
        DomainError for ``r <= 0``.
        """
        a = np.asarray(a, dtype=float)
        r = float(r)
        z = a == self.zero
        if r <= 0 and np.any(z):
            raise DomainError(f"zero of {self.name} raised to non-positive power {r}")
        safe = np.where(z, self.one, a)
        with np.errstate(invalid="ignore", over="ignore"):
            raw = safe**r if self.multiplicative else r * safe
        out = np.where(z, self.zero, raw)
        return out[()] if out.ndim == 0 else out

    # -- order --------------------------------------------------------------

    def leq(self, a, b):
        """``a <= b`` in the order induced by addition (``a + b == b``)."""
        if self.maximizing:
            return np.asarray(a) <= np.asarray(b)
        return np.asarray(a) >= np.asarray(b)

    def lt(self, a, b):
        if self.maximizing:
            return np.asarray(a) < np.asarray(b)
        return np.asarray(a) > np.asarray(b)

    def leq_approx(self, a, b, rtol=1e-9, atol=1e-9):
        """Order test that forgives floating round-off of size ``rtol``/``atol``."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        with np.errstate(invalid="ignore"):
            close = np.isclose(a, b, rtol=rtol, atol=atol) | (a == b)
        return self.leq(a, b) | close

    def sum(self, a, axis=None):
        """Semifield sum (``max`` or ``min``) along an axis; empty sums are zero."""
        a = np.asarray(a, dtype=float)
        if a.size == 0:
            shape = np.delete(a.shape, axis) if axis is not None else ()
            return np.full(shape, self.zero)[()]
        return a.max(axis=axis) if self.maximizing else a.min(axis=axis)

    # -- isomorphism to the additive form ------------------------------------

    def to_additive(self, a):
        """Map into the plus semifield with the same order (log for times tags)."""
        a = np.asarray(a, dtype=float)
        if not self.multiplicative:
            return a
        with np.errstate(divide="ignore"):
            return np.log(a)


MAX_PLUS = Semifield("max-plus", -np.inf, 0.0, maximizing=True, multiplicative=False)
MIN_PLUS = Semifield("min-plus", np.inf, 0.0, maximizing=False, multiplicative=False)
MAX_TIMES = Semifield("max-times", 0.0, 1.0, maximizing=True, multiplicative=True)
MIN_TIMES = Semifield("min-times", np.inf, 1.0, maximizing=False, multiplicative=True)

SEMIFIELDS = {sf.name: sf for sf in (MAX_PLUS, MIN_PLUS, MAX_TIMES, MIN_TIMES)}


def get_semifield(tag) -> Semifield:
    """Resolve a tag string (``"max-plus"`` etc.) or pass a Semifield through."""
    if isinstance(tag, Semifield):
        return tag
    try:
        return SEMIFIELDS[str(tag).strip().lower()]
    except KeyError:
        raise DomainError(
            f"unknown semifield {tag!r}; expected one of {sorted(SEMIFIELDS)}"
        ) from None
