"""The algebra of physical space, Cl(3).

Paravectors (scalar + vector) model spacetime vectors, biparavectors
(vector + bivector) model spacetime planes, and unimodular rotors
L = exp(W/2) generate restricted Lorentz transformations through the
sandwich p -> L p L^dagger.  The pseudoscalar e1 e2 e3 is central and
squares to -1, so grade-0/grade-3 pairs behave as complex scalars.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass, field

import numpy as np

from .kernel import (
    APS_SIG,
    GradeError,
    Multivector,
    exp_scalar_square,
    gp,
    grade_involute,
    reverse,
)

# Default gate on ||L Lbar - 1|| before a rotor is trusted.
ROTOR_TOL = 1e-10

# Blade masks: generators 0,1,2 are e1,e2,e3.
_E1, _E2, _E3 = 0b001, 0b010, 0b100
_E12, _E13, _E23 = 0b011, 0b101, 0b110
_PSS = 0b111

# i*e1 = e2e3, i*e2 = e3e1 = -e1e3, i*e3 = e1e2: the coefficient of i*e_k
# lives at these masks with these signs.
_DUAL_MASKS = (_E23, _E13, _E12)
_DUAL_SIGNS = (1.0, -1.0, 1.0)


class NonUnimodularError(ValueError):
    """A rotor failed the unimodularity gate L Lbar = 1."""

    def __init__(self, defect: float, tol: float):
        super().__init__(f"rotor is not unimodular: defect {defect:.3e} exceeds {tol:.3e}")
        self.defect = defect
        self.tol = tol


class NonOrthochronousError(ValueError):
    """L L^dagger has non-positive scalar part, so the boost square root is
    undefined; such elements are not restricted Lorentz rotors."""


class SuperluminalError(ValueError):
    """Requested boost speed is >= 1 (units with c = 1)."""


class MvAps(Multivector):
    """Element of Cl(3) on the blade basis {1, e1, e2, e3, e23, e31, e12, e123}."""

    __slots__ = ()

    def __init__(self, coeffs):
        super().__init__(APS_SIG, coeffs)

    @classmethod
    def _make(cls, sig, coeffs):
        return cls(coeffs)

    @property
    def vector(self) -> np.ndarray:
        """Coefficients of (e1, e2, e3)."""
        return self.coeffs[[_E1, _E2, _E3]].copy()

    @property
    def bivector(self) -> np.ndarray:
        """Coefficients of (e23, e31, e12); equally the dual-vector
        (pseudovector) components of the bivector part, since e23 = i e1
        and so on."""
        return self.coeffs[list(_DUAL_MASKS)] * np.array(_DUAL_SIGNS)

    pseudovector = bivector

    @property
    def pseudoscalar_part(self) -> float:
        return float(self.coeffs[_PSS])


def _mv(coeffs) -> MvAps:
    return MvAps(coeffs)


ONE = MvAps.scalar(APS_SIG, 1.0)
E1 = MvAps.blade(APS_SIG, _E1)
E2 = MvAps.blade(APS_SIG, _E2)
E3 = MvAps.blade(APS_SIG, _E3)
I = MvAps.blade(APS_SIG, _PSS)

#: Paravector basis e0..e3 with e0 = 1.
E = (ONE, E1, E2, E3)


@dataclass(frozen=True)
class Paravector:
    """Real scalar plus real 3-vector: the covariant representative of a
    spacetime vector, with components on the basis (e0, e1, e2, e3), e0 = 1."""

    t: float
    x: float
    y: float
    z: float

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def components(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    def as_mv(self) -> MvAps:
        c = np.zeros(8)
        c[0], c[_E1], c[_E2], c[_E3] = self.t, self.x, self.y, self.z
        return _mv(c)

    @classmethod
    def from_mv(cls, a: Multivector, atol: float = 1e-9) -> "Paravector":
        """Extract a real paravector; bivector/trivector residue above atol
        is an error."""
        resid = float(np.max(np.abs(a.coeffs[[_E12, _E13, _E23, _PSS]])))
        if resid > atol:
            raise GradeError(f"element is not a real paravector (residue {resid:.3e})")
        return cls(*(float(a.coeffs[m]) for m in (0, _E1, _E2, _E3)))


@dataclass(frozen=True)
class Biparavector:
    """Oriented spacetime plane: real vector part w plus bivector part b,
    stored as the coefficients of e_k and i e_k.  Its square is always a
    complex scalar, (w.w - b.b) + 2i (w.b)."""

    w: tuple[float, float, float] = (0.0, 0.0, 0.0)
    b: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def as_mv(self) -> MvAps:
        c = np.zeros(8)
        c[[_E1, _E2, _E3]] = self.w
        c[list(_DUAL_MASKS)] = np.array(self.b) * np.array(_DUAL_SIGNS)
        return _mv(c)

    @classmethod
    def from_mv(cls, a: Multivector, atol: float = 1e-9) -> "Biparavector":
        resid = float(max(abs(a.coeffs[0]), abs(a.coeffs[_PSS])))
        if resid > atol:
            raise GradeError(f"element is not a biparavector (residue {resid:.3e})")
        w = a.coeffs[[_E1, _E2, _E3]]
        b = a.coeffs[list(_DUAL_MASKS)] * np.array(_DUAL_SIGNS)
        return cls(tuple(float(v) for v in w), tuple(float(v) for v in b))

    def norm(self) -> float:
        return math.hypot(*self.w, *self.b)


#: A biparavector read as an electromagnetic field F = E + iB.
FieldBiparavector = Biparavector


def clifford_conjugate(a: Multivector) -> Multivector:
    """Clifford conjugation, grade involution composed with reversion.

    On a paravector p0 + p it gives p0 - p; it fixes grades 0 and 3 and
    flips grades 1 and 2, and is an antiautomorphism.
    """
    return grade_involute(reverse(a))


def dagger(a: Multivector) -> Multivector:
    """Reversion, the hermitian conjugation of Cl(3); flips the sign of the
    bivector and trivector parts, complex-conjugating complex coefficients."""
    return reverse(a)


def split_hermitian(a: MvAps) -> tuple[MvAps, MvAps]:
    """Split into hermitian-real (grades 0, 1) and -imaginary (grades 2, 3)
    parts, (A + A^dagger)/2 and (A - A^dagger)/2."""
    d = dagger(a)
    return (a + d) / 2, (a - d) / 2


def split_bar(a: MvAps) -> tuple[MvAps, MvAps]:
    """Split into scalarlike (grades 0, 3) and vectorlike (grades 1, 2)
    parts, (A + Abar)/2 and (A - Abar)/2."""
    c = clifford_conjugate(a)
    return (a + c) / 2, (a - c) / 2


def quadratic_form(p: Paravector) -> float:
    """Q(p) = p pbar = t**2 - p.p, the Minkowski square."""
    return float(p.t * p.t - p.vec @ p.vec)


def minkowski_inner(p: Paravector, q: Paravector) -> float:
    """(p, q) = p_mu q_nu eta^{mu nu} with eta = diag(1, -1, -1, -1)."""
    return float(p.t * q.t - p.vec @ q.vec)


def biparavector_of(p: Paravector, q: Paravector) -> Biparavector:
    """Vectorlike part of p qbar: the spacetime plane spanned by p and q.
    Antisymmetric under exchange of p and q."""
    _, v = split_bar(gp(p.as_mv(), clifford_conjugate(q.as_mv())))
    return Biparavector.from_mv(v)


def unimodularity_defect(a: Multivector) -> float:
    """|| a abar - 1 ||, zero exactly for Lorentz rotors."""
    return (gp(a, clifford_conjugate(a)) - 1.0).norm()


@dataclass(frozen=True, eq=False)
class ApsRotor:
    """Unimodular element L (L Lbar = 1 within `tol`), generating a
    restricted Lorentz rotation of paravectors via p -> L p L^dagger."""

    mv: MvAps
    tol: InitVar[float] = ROTOR_TOL
    defect: float = field(init=False)

    def __post_init__(self, tol: float) -> None:
        d = unimodularity_defect(self.mv)
        if not d <= tol:
            raise NonUnimodularError(d, tol)
        object.__setattr__(self, "defect", float(d))


def as_rotor(L: "ApsRotor | MvAps", tol: float = ROTOR_TOL) -> ApsRotor:
    """Coerce to a validated rotor; raw elements pass the unimodularity gate."""
    return L if isinstance(L, ApsRotor) else ApsRotor(L, tol)


def rotor_exp(w: Biparavector, tol: float = ROTOR_TOL) -> ApsRotor:
    """L = exp(W/2) for the plane W; unimodular for every biparavector.

    W*W is a complex scalar c, so the exponential closes to
    cosh(sqrt(c)/2) + W sinh(sqrt(c)/2)/sqrt(c), with a Taylor fallback
    below |c| = 1e-8 where the closed form degenerates (null planes).
    """
    # exp_scalar_square thresholds on |x*x| with x = W/2, i.e. |c|/4.
    return ApsRotor(exp_scalar_square(w.as_mv() / 2, series_eps=1e-8 / 4), tol)


def rotate_paravector(L: "ApsRotor | MvAps", p: Paravector) -> Paravector:
    """Lorentz rotation p -> L p L^dagger; preserves the quadratic form and
    returns a real paravector."""
    rot = as_rotor(L).mv
    return Paravector.from_mv(gp(gp(rot, p.as_mv()), dagger(rot)))


def factor_boost_rotation(L: "ApsRotor | MvAps") -> tuple[ApsRotor, ApsRotor]:
    """Factor L = B R into a boost B (B = B^dagger) and a spatial rotation
    R (R R^dagger = 1).

    L L^dagger is the square of the boost, a positive real paravector u
    with Q(u) = 1, so B = (1 + u)/sqrt(2(1 + u0)) is its exact, branch-free
    square root and R = Bbar L.
    """
    rot = as_rotor(L).mv
    u = gp(rot, dagger(rot))
    gamma = u.scalar_part
    if gamma <= 0.0:
        raise NonOrthochronousError(
            f"L L^dagger has scalar part {gamma:.3e}; cannot take the boost square root"
        )
    boost = (1.0 + u) / math.sqrt(2.0 * (1.0 + gamma))
    rotation = gp(clifford_conjugate(boost), rot)
    return ApsRotor(boost), ApsRotor(rotation)


def boost_rotor(velocity) -> ApsRotor:
    """Boost rotor exp(w vhat / 2) for a coordinate velocity |v| < 1."""
    v = np.asarray(velocity, dtype=float)
    if v.shape != (3,) or not np.all(np.isfinite(v)):
        raise ValueError("velocity must be three finite numbers")
    speed = float(np.linalg.norm(v))
    if speed >= 1.0:
        raise SuperluminalError(f"superluminal velocity |v| = {speed:g} >= 1")
    if speed == 0.0:
        return ApsRotor(ONE)
    return boost_rotor_rapidity(math.atanh(speed), v / speed)


def boost_rotor_rapidity(rapidity: float, direction) -> ApsRotor:
    """Boost rotor exp(w nhat / 2) from a rapidity and a direction."""
    n = np.asarray(direction, dtype=float)
    if n.shape != (3,) or not np.all(np.isfinite(n)) or not math.isfinite(rapidity):
        raise ValueError("need a finite rapidity and a three-component direction")
    length = float(np.linalg.norm(n))
    if length == 0.0:
        raise ValueError("boost direction must be nonzero")
    w = rapidity * n / length
    return rotor_exp(Biparavector(w=tuple(w)))
