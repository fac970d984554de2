"""JSON wire format: multivectors as blade-name coefficient maps.

A document is {"algebra": "aps" | "sta", "coeffs": {<blade>: <float>}}.
Omitted blades are zero; zero coefficients are omitted on output so that
golden files diff cleanly.  The APS bivector names follow the cyclic
convention (e23, e31, e12), so "e31" carries sign -1 relative to the
canonical ascending blade e1 e3.
"""

from __future__ import annotations

import math
from typing import Mapping

import numpy as np

from .aps import MvAps
from .sta import MvSta

APS_ALGEBRA = "aps"
STA_ALGEBRA = "sta"


class DocumentError(ValueError):
    """The document is malformed: unknown blade key, non-finite or
    non-numeric coefficient, or unknown algebra."""


# name -> (canonical blade mask, sign of the named blade on it)
APS_BLADES: dict[str, tuple[int, float]] = {
    "1": (0b000, 1.0),
    "e1": (0b001, 1.0),
    "e2": (0b010, 1.0),
    "e3": (0b100, 1.0),
    "e23": (0b110, 1.0),
    "e31": (0b101, -1.0),
    "e12": (0b011, 1.0),
    "e123": (0b111, 1.0),
}

STA_BLADES: dict[str, tuple[int, float]] = {"1": (0b0000, 1.0)}
for _name, _mask in [
    ("g0", 0b0001), ("g1", 0b0010), ("g2", 0b0100), ("g3", 0b1000),
    ("g01", 0b0011), ("g02", 0b0101), ("g03", 0b1001),
    ("g12", 0b0110), ("g13", 0b1010), ("g23", 0b1100),
    ("g012", 0b0111), ("g013", 0b1011), ("g023", 0b1101), ("g123", 0b1110),
    ("g0123", 0b1111),
]:
    STA_BLADES[_name] = (_mask, 1.0)

_TABLES = {APS_ALGEBRA: APS_BLADES, STA_ALGEBRA: STA_BLADES}
_DIMS = {APS_ALGEBRA: 8, STA_ALGEBRA: 16}


def validate_coeffs(algebra: str, coeffs: Mapping[str, object]) -> None:
    """Raise DocumentError unless every key is a known blade of the algebra
    and every value a finite real number."""
    table = _TABLES.get(algebra)
    if table is None:
        raise DocumentError(f"unknown algebra {algebra!r}")
    for name, value in coeffs.items():
        if name not in table:
            raise DocumentError(f"unknown blade key {name!r} for algebra {algebra!r}")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise DocumentError(f"coefficient of {name!r} is not a number")
        if not math.isfinite(value):
            raise DocumentError(f"coefficient of {name!r} is not finite")


def decode(algebra: str, coeffs: Mapping[str, float]) -> "MvAps | MvSta":
    validate_coeffs(algebra, coeffs)
    table = _TABLES[algebra]
    arr = np.zeros(_DIMS[algebra])
    for name, value in coeffs.items():
        mask, sign = table[name]
        arr[mask] += sign * float(value)
    return MvAps(arr) if algebra == APS_ALGEBRA else MvSta(arr)


def encode(mv: "MvAps | MvSta") -> dict[str, float]:
    """Blade-name map of the nonzero coefficients, in canonical name order."""
    algebra = APS_ALGEBRA if isinstance(mv, MvAps) else STA_ALGEBRA
    out: dict[str, float] = {}
    for name, (mask, sign) in _TABLES[algebra].items():
        value = sign * float(mv.coeffs[mask])
        if value != 0.0:
            out[name] = value
    return out


def algebra_of(mv: "MvAps | MvSta") -> str:
    return APS_ALGEBRA if isinstance(mv, MvAps) else STA_ALGEBRA
