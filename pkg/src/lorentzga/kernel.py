"""Signature-generic Clifford blade-product engine.

Both algebras used by this package, Cl(3) and Cl(1,3), are instantiated
from here.  A basis blade is a bitmask over generators (bit i set means
generator i is a factor, factors in ascending index order), a multivector
is a dense array of 2**n real coefficients, and products reduce to table
lookups built once per signature.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Absolute comparison tolerance for unit-scale data; every closed form in
# this package is a handful of multiplies away from its inputs.
DEFAULT_ATOL = 1e-12


class AlgebraMismatchError(ValueError):
    """Operands belong to algebras with different signatures."""


class GradeError(ValueError):
    """A grade index is out of range, or an element carries grade content
    that the requested operation does not admit."""


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q): p generators square to +1, q to -1.

    The +1 generators come first, so Cl(1,3) puts its timelike generator
    at index 0.  Only p + q <= 4 is supported (blade tables stay tiny).
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0 or self.p + self.q > 4:
            raise ValueError(f"unsupported signature ({self.p},{self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    def square_of(self, generator: int) -> int:
        """Metric square (+1 or -1) of one generator."""
        if not 0 <= generator < self.n:
            raise ValueError(f"generator {generator} out of range")
        return 1 if generator < self.p else -1


APS_SIG = Signature(3, 0)
STA_SIG = Signature(1, 3)


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of two basis blades as (sign, result mask).

    The sign is the parity of the transpositions needed to interleave the
    two ascending generator lists, times the metric square of every
    generator the blades share; the surviving factors are a XOR b.
    """
    if not (0 <= a < sig.dim and 0 <= b < sig.dim):
        raise ValueError(f"blade mask out of range for signature {sig}")
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    gen = 0
    while common:
        if common & 1 and gen >= sig.p:
            sign = -sign
        common >>= 1
        gen += 1
    return sign, a ^ b


class BladeTables:
    """Product and grade tables for one signature, built once."""

    def __init__(self, sig: Signature):
        dim = sig.dim
        self.sig = sig
        self.grades = np.array([m.bit_count() for m in range(dim)])
        sign = np.zeros((dim, dim), dtype=np.int8)
        product = np.zeros((dim * dim, dim))
        for a in range(dim):
            for b in range(dim):
                s, m = blade_product(a, b, sig)
                sign[a, b] = s
                product[a * dim + b, m] = float(s)
        self.sign = sign
        # Row a*dim + b scatters coefficient a_i * b_j into mask a ^ b, so a
        # geometric product is one flattened outer product times this matrix.
        self.product = product
        k = self.grades
        self.reverse_signs = np.where(k * (k - 1) // 2 % 2, -1.0, 1.0)
        self.involute_signs = np.where(k % 2, -1.0, 1.0)


@lru_cache(maxsize=None)
def tables(sig: Signature) -> BladeTables:
    return BladeTables(sig)


class Multivector:
    """Dense element of Cl(p, q): one real coefficient per basis blade.

    Instances are immutable after construction and every operation is a
    pure function returning a new instance, so values are safe to share
    across threads.
    """

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs):
        arr = np.array(coeffs, dtype=float)
        if arr.shape != (sig.dim,):
            raise ValueError(
                f"expected {sig.dim} coefficients for signature "
                f"({sig.p},{sig.q}), got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("non-finite coefficient")
        arr.setflags(write=False)
        self.sig = sig
        self.coeffs = arr

    # Subclasses pin the signature; all derived values go through here so
    # operations preserve the concrete type.
    @classmethod
    def _make(cls, sig: Signature, coeffs) -> "Multivector":
        return cls(sig, coeffs)

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls._make(sig, np.zeros(sig.dim))

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> "Multivector":
        c = np.zeros(sig.dim)
        c[0] = value
        return cls._make(sig, c)

    @classmethod
    def blade(cls, sig: Signature, mask: int, value: float = 1.0) -> "Multivector":
        if not 0 <= mask < sig.dim:
            raise ValueError(f"blade mask {mask} out of range")
        c = np.zeros(sig.dim)
        c[mask] = value
        return cls._make(sig, c)

    @classmethod
    def basis_vector(cls, sig: Signature, generator: int) -> "Multivector":
        if not 0 <= generator < sig.n:
            raise ValueError(f"generator {generator} out of range")
        return cls.blade(sig, 1 << generator)

    def _require_same(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise AlgebraMismatchError(
                f"mixed signatures ({self.sig.p},{self.sig.q}) and "
                f"({other.sig.p},{other.sig.q})"
            )

    def __getitem__(self, mask: int) -> float:
        return float(self.coeffs[mask])

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def grade(self, k: int) -> "Multivector":
        return grade_project(self, k)

    @property
    def grades(self) -> tuple[int, ...]:
        """Grades carrying a nonzero coefficient."""
        t = tables(self.sig)
        return tuple(sorted({int(g) for g, c in zip(t.grades, self.coeffs) if c != 0.0}))

    def reverse(self) -> "Multivector":
        return reverse(self)

    def grade_involute(self) -> "Multivector":
        return grade_involute(self)

    def norm(self) -> float:
        """Euclidean norm of the coefficient array."""
        return float(np.linalg.norm(self.coeffs))

    def allclose(self, other: "Multivector", atol: float = DEFAULT_ATOL) -> bool:
        self._require_same(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= atol)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None  # compares by value; not hashable

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same(other)
        return self._make(self.sig, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same(other)
        return self._make(self.sig, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Multivector.scalar(self.sig, other).__sub__(self)
        return NotImplemented

    def __neg__(self):
        return self._make(self.sig, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return self._make(self.sig, self.coeffs * other)
        if isinstance(other, Multivector):
            return gp(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self._make(self.sig, self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self._make(self.sig, self.coeffs / other)
        return NotImplemented

    def __repr__(self) -> str:
        terms = []
        for mask, c in enumerate(self.coeffs):
            if c == 0.0:
                continue
            if mask == 0:
                terms.append(f"{c:g}")
            else:
                name = "".join(str(i) for i in range(self.sig.n) if mask >> i & 1)
                terms.append(f"{c:g}*b{name}")
        body = " + ".join(terms) if terms else "0"
        return f"<Cl({self.sig.p},{self.sig.q}) {body}>"


def gp(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product, the bilinear extension of the blade table."""
    a._require_same(b)
    t = tables(a.sig)
    out = np.outer(a.coeffs, b.coeffs).ravel() @ t.product
    return type(a)._make(a.sig, out)


def grade_project(a: Multivector, k: int) -> Multivector:
    """Restriction of a to its grade-k part."""
    if not 0 <= k <= a.sig.n:
        raise GradeError(f"grade {k} out of range for Cl({a.sig.p},{a.sig.q})")
    t = tables(a.sig)
    return type(a)._make(a.sig, np.where(t.grades == k, a.coeffs, 0.0))


def reverse(a: Multivector) -> Multivector:
    """Reversion: each grade-k blade scaled by (-1)**(k(k-1)/2)."""
    t = tables(a.sig)
    return type(a)._make(a.sig, a.coeffs * t.reverse_signs)


def grade_involute(a: Multivector) -> Multivector:
    """Grade involution: each grade-k blade scaled by (-1)**k."""
    t = tables(a.sig)
    return type(a)._make(a.sig, a.coeffs * t.involute_signs)


def exp_scalar_square(x: Multivector, series_eps: float = 2.5e-9) -> Multivector:
    """exp(x) for an element whose square lies in span{1, pseudoscalar}.

    The pseudoscalar must commute with x (true for everything in Cl(3) and
    for even elements of Cl(1,3)).  Then x*x acts as a complex scalar z and

        exp(x) = C(z) + S(z) * x,
        C(z) = cosh(sqrt(z)),  S(z) = sinh(sqrt(z)) / sqrt(z),

    where C and S are entire functions of z, evaluated with the principal
    complex square root, or by their Taylor series below `series_eps` where
    the closed form is 0/0.
    """
    sq = gp(x, x)
    pss = x.sig.dim - 1
    resid = np.linalg.norm(np.delete(sq.coeffs, [0, pss]))
    if resid > 1e-9 * max(1.0, sq.norm()):
        raise GradeError("square of argument is not a complex scalar")
    z = complex(sq.coeffs[0], sq.coeffs[pss])
    if abs(z) < series_eps:
        c = sum(z**k / math.factorial(2 * k) for k in range(6))
        s = sum(z**k / math.factorial(2 * k + 1) for k in range(6))
    else:
        w = cmath.sqrt(z)
        c = cmath.cosh(w)
        s = cmath.sinh(w) / w
    dim = x.sig.dim
    c_coeffs = np.zeros(dim)
    c_coeffs[0], c_coeffs[pss] = c.real, c.imag
    s_coeffs = np.zeros(dim)
    s_coeffs[0], s_coeffs[pss] = s.real, s.imag
    return type(x)._make(x.sig, c_coeffs) + gp(type(x)._make(x.sig, s_coeffs), x)
