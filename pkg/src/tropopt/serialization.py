"""JSON encoding of semifield data.

Scalars are JSON numbers rounded to 12 significant digits, except the
semifield zero, which is the string ``"zero"``. A matrix is::

    {"tag": "max-plus", "rows": 2, "cols": 2, "data": [[0, "zero"], [1, 2]]}

and a vector is a plain list (a ``{"data": [...]}`` object is also accepted
on input). Output is canonical: sorted keys and one trailing newline, so
encoding a decoded document reproduces it byte for byte.
"""
from __future__ import annotations

import json

import numpy as np

from .errors import DomainError, MalformedInput
from .semifield import get_semifield

__all__ = [
    "ZERO",
    "encode_scalar",
    "decode_scalar",
    "matrix_to_json",
    "matrix_from_json",
    "vector_to_json",
    "vector_from_json",
    "resolve_tag",
    "dumps",
    "loads",
]

ZERO = "zero"
_SIG_DIGITS = 12


def encode_scalar(v, sf):
    v = float(v)
    if np.isnan(v):
        return None
    if v == get_semifield(sf).zero:
        return ZERO
    if not np.isfinite(v):
        raise DomainError(f"{v} is not an element of {sf}")
    out = float(f"{v:.{_SIG_DIGITS}g}")
    return 0.0 if out == 0 else out


def decode_scalar(v, sf):
    sf = get_semifield(sf)
    if v == ZERO:
        return sf.zero
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise MalformedInput(f"expected a number or {ZERO!r}, got {v!r}")
    return float(v)


def matrix_to_json(A, sf):
    sf = get_semifield(sf)
    A = np.asarray(A, dtype=float)
    return {
        "tag": sf.name,
        "rows": int(A.shape[0]),
        "cols": int(A.shape[1]),
        "data": [[encode_scalar(v, sf) for v in row] for row in A],
    }


def vector_to_json(x, sf):
    return [encode_scalar(v, sf) for v in np.asarray(x, dtype=float)]


def resolve_tag(*tags):
    """The single semifield named by the non-None ``tags``; they must agree."""
    names = []
    for t in tags:
        if t is None:
            continue
        try:
            names.append(get_semifield(t).name)
        except DomainError as exc:
            raise MalformedInput(str(exc)) from None
    if not names:
        raise MalformedInput("no semifield tag given")
    if len(set(names)) > 1:
        raise MalformedInput(f"conflicting semifield tags: {sorted(set(names))}")
    return get_semifield(names[0])


def matrix_from_json(obj, sf=None):
    """Decode a matrix object (or a bare list of rows when ``sf`` is given).

    Returns ``(array, semifield)``.
    """
    if isinstance(obj, dict):
        if "data" not in obj:
            raise MalformedInput("matrix object lacks 'data'")
        sf = resolve_tag(obj.get("tag"), sf)
        rows = obj["data"]
    else:
        sf = resolve_tag(sf)
        rows = obj
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MalformedInput("matrix data must be a non-empty list of rows")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise MalformedInput("matrix rows must be non-empty and of equal length")
    A = np.array([[decode_scalar(v, sf) for v in r] for r in rows], dtype=float)
    if isinstance(obj, dict):
        if obj.get("rows", A.shape[0]) != A.shape[0] or obj.get("cols", A.shape[1]) != A.shape[1]:
            raise MalformedInput("declared rows/cols disagree with data")
    if not np.all(sf.in_carrier(A)):
        raise MalformedInput(f"matrix has entries outside the carrier of {sf.name}")
    return A, sf


def vector_from_json(obj, sf):
    sf = get_semifield(sf)
    if isinstance(obj, dict):
        sf = resolve_tag(obj.get("tag"), sf)
        obj = obj.get("data")
    if not isinstance(obj, list) or not obj:
        raise MalformedInput("vector must be a non-empty list")
    x = np.array([decode_scalar(v, sf) for v in obj], dtype=float)
    if not np.all(sf.in_carrier(x)):
        raise MalformedInput(f"vector has entries outside the carrier of {sf.name}")
    return x


def _reject_constant(name):
    raise MalformedInput(f"non-finite JSON constant {name}; use {ZERO!r} for the semifield zero")


def loads(text):
    return json.loads(text, parse_constant=_reject_constant)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, allow_nan=False, ensure_ascii=False) + "\n"
