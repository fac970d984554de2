"""The spacetime algebra, Cl(1,3).

Observer frames are stored as the rotor carrying a fixed fiducial tetrad
onto the observer's tetrad, so orthonormality and handedness hold by
construction.  Hermitian conjugation K -> g0 K~ g0 is defined per
observer, and the proper basis sigma_mu = gamma_mu gamma_0 spans the even
subalgebra each observer uses for measurable quantities.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from functools import cached_property

import numpy as np

from .kernel import (
    STA_SIG,
    GradeError,
    Multivector,
    exp_scalar_square,
    gp,
    grade_project,
    reverse,
    tables,
)

ROTOR_TOL = 1e-10

_ODD_MASKS = [m for m in range(16) if m.bit_count() % 2]


class NonUnimodularStaError(ValueError):
    """A spacetime rotor failed L L~ = 1 (or carries odd-grade content)."""

    def __init__(self, defect: float, tol: float):
        super().__init__(f"rotor is not unimodular: defect {defect:.3e} exceeds {tol:.3e}")
        self.defect = defect
        self.tol = tol


class MvSta(Multivector):
    """Element of Cl(1,3) on the sixteen gamma blades; generator 0 is the
    timelike gamma_0."""

    __slots__ = ()

    def __init__(self, coeffs):
        super().__init__(STA_SIG, coeffs)

    @classmethod
    def _make(cls, sig, coeffs):
        return cls(coeffs)

    def odd_norm(self) -> float:
        return float(np.linalg.norm(self.coeffs[_ODD_MASKS]))


G0 = MvSta.blade(STA_SIG, 0b0001)
G1 = MvSta.blade(STA_SIG, 0b0010)
G2 = MvSta.blade(STA_SIG, 0b0100)
G3 = MvSta.blade(STA_SIG, 0b1000)
I = MvSta.blade(STA_SIG, 0b1111)
GAMMA = (G0, G1, G2, G3)


def sta_reverse(k: Multivector) -> Multivector:
    """Reversion (tilde) in the spacetime algebra."""
    return reverse(k)


def unimodularity_defect(a: Multivector) -> float:
    return (gp(a, reverse(a)) - 1.0).norm()


@dataclass(frozen=True, eq=False)
class StaRotor:
    """Even, unimodular element L with L L~ = 1, generating a restricted
    Lorentz rotation of spacetime vectors via a -> L a L~."""

    mv: MvSta
    tol: InitVar[float] = ROTOR_TOL
    defect: float = field(init=False)

    def __post_init__(self, tol: float) -> None:
        d = max(unimodularity_defect(self.mv), self.mv.odd_norm())
        if not d <= tol:
            raise NonUnimodularStaError(d, tol)
        object.__setattr__(self, "defect", float(d))


def rotor_exp(bivector: MvSta, tol: float = ROTOR_TOL) -> StaRotor:
    """L = exp(B/2) for a spacetime bivector B.

    B*B lands in span{1, I}, which is central in the even subalgebra, so
    the same cosh/sinh closed form as for Cl(3) planes applies.
    """
    resid = (bivector - grade_project(bivector, 2)).norm()
    if resid > 1e-9 * max(1.0, bivector.norm()):
        raise GradeError(f"rotor generator must be a bivector (residue {resid:.3e})")
    return StaRotor(exp_scalar_square(bivector / 2, series_eps=1e-8 / 4), tol)


class ObserverFrame:
    """An inertial observer's tetrad gamma_mu = L gamma_mu^fid L~.

    The fiducial frame is the canonical generator basis; gamma_0 is the
    observer's proper velocity.  Frames compare and hash by their rotor
    coefficients, so per-frame caches work.
    """

    def __init__(self, rotor: StaRotor):
        self.rotor = rotor

    @classmethod
    def fiducial(cls) -> "ObserverFrame":
        return cls(StaRotor(MvSta.scalar(STA_SIG, 1.0)))

    @cached_property
    def tetrad(self) -> tuple[MvSta, ...]:
        L = self.rotor.mv
        Lt = sta_reverse(L)
        return tuple(gp(gp(L, g), Lt) for g in GAMMA)

    def gamma(self, mu: int) -> MvSta:
        return self.tetrad[mu]

    @property
    def proper_velocity(self) -> MvSta:
        return self.tetrad[0]

    @cached_property
    def sigma(self) -> tuple[MvSta, ...]:
        """Proper basis sigma_mu = gamma_mu gamma_0; sigma_0 = 1 and the
        spatial elements are the observer's timelike bivectors."""
        g0 = self.tetrad[0]
        return tuple(gp(g, g0) for g in self.tetrad)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ObserverFrame):
            return NotImplemented
        return bool(np.array_equal(self.rotor.mv.coeffs, other.rotor.mv.coeffs))

    def __hash__(self) -> int:
        return hash(self.rotor.mv.coeffs.tobytes())

    def __repr__(self) -> str:
        return f"ObserverFrame(rotor={self.rotor.mv!r})"


FIDUCIAL = ObserverFrame.fiducial()


def hermitian_conjugate(k: Multivector, obs: ObserverFrame) -> MvSta:
    """Observer-dependent hermitian conjugation K -> g0 K~ g0 built on the
    observer's proper velocity; fixes the observer's own proper basis."""
    g0 = obs.gamma(0)
    return gp(gp(g0, sta_reverse(k)), g0)


def transform_frame(L: StaRotor, obs: ObserverFrame) -> ObserverFrame:
    """Frame reached from obs by the rotor L: gamma_mu -> L gamma_mu L~."""
    return ObserverFrame(StaRotor(gp(L.mv, obs.rotor.mv)))


def proper_basis(obs: ObserverFrame) -> tuple[MvSta, ...]:
    """(sigma_0, sigma_1, sigma_2, sigma_3) for the observer."""
    return obs.sigma


def spacetime_split(r: MvSta, obs: ObserverFrame, atol: float = 1e-9) -> tuple[float, MvSta]:
    """Split a spacetime vector r against an observer: r gamma_0 = t + r_rel
    with t the observer's time coefficient and r_rel the relative-position
    bivector; (t + r_rel) gamma_0 recovers r."""
    resid = (r - grade_project(r, 1)).norm()
    if resid > atol:
        raise GradeError(f"space-time split needs a grade-1 vector (residue {resid:.3e})")
    prod = gp(r, obs.gamma(0))
    return prod.scalar_part, grade_project(prod, 2)


def frame_metric(obs: ObserverFrame) -> np.ndarray:
    """Symmetrized products of the tetrad: exactly eta for a valid frame."""
    out = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            sym = gp(obs.gamma(mu), obs.gamma(nu)) + gp(obs.gamma(nu), obs.gamma(mu))
            out[mu, nu] = sym.scalar_part / 2
    return out


def eta() -> np.ndarray:
    """The Minkowski metric diag(1, -1, -1, -1) straight from the blade table."""
    t = tables(STA_SIG)
    out = np.zeros((4, 4))
    for mu in range(4):
        out[mu, mu] = float(t.sign[1 << mu, 1 << mu])
    return out
