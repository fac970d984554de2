"""Observer-dependent isomorphism between Cl(3) and the even subalgebra
of Cl(1,3).

For an observer with proper basis sigma_mu, the map sends 1 -> 1,
e_k -> sigma_k, blade products to products of images, and the volume
element i -> I.  Clifford conjugation corresponds to reversion on the
other side, and reversion to the observer's hermitian conjugation.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .aps import ApsRotor, MvAps
from .kernel import gp
from .sta import MvSta, ObserverFrame, StaRotor

EVEN_TOL = 1e-10

_EVEN_MASKS = [m for m in range(16) if m.bit_count() % 2 == 0]
_ODD_MASKS = [m for m in range(16) if m.bit_count() % 2]


class OddGradeError(ValueError):
    """An element headed for Cl(3) carries odd spacetime grades, which have
    no counterpart there."""

    def __init__(self, magnitude: float, tol: float):
        super().__init__(
            f"element has odd-grade content {magnitude:.3e} above tolerance {tol:.3e}"
        )
        self.magnitude = magnitude
        self.tol = tol


@lru_cache(maxsize=None)
def _blade_images(obs: ObserverFrame) -> tuple[np.ndarray, np.ndarray]:
    """(M, inv): M[j] holds the 16 spacetime coefficients of the image of
    Cl(3) blade j; inv inverts M restricted to the even masks."""
    s1, s2, s3 = obs.sigma[1], obs.sigma[2], obs.sigma[3]
    one = MvSta.scalar(s1.sig, 1.0)
    images = [
        one,            # 1
        s1,             # e1
        s2,             # e2
        gp(s1, s2),     # e1 e2
        s3,             # e3
        gp(s1, s3),     # e1 e3
        gp(s2, s3),     # e2 e3
        gp(gp(s1, s2), s3),  # e1 e2 e3
    ]
    m = np.stack([im.coeffs for im in images])
    inv = np.linalg.inv(m[:, _EVEN_MASKS])
    return m, inv


def aps_to_sta(a: MvAps, obs: ObserverFrame) -> MvSta:
    """Image of a Cl(3) element in the observer's even subalgebra."""
    m, _ = _blade_images(obs)
    return MvSta(a.coeffs @ m)


def sta_even_to_aps(k: MvSta, obs: ObserverFrame, tol: float = EVEN_TOL) -> MvAps:
    """Inverse of aps_to_sta for the same observer; rejects elements whose
    odd-grade coefficients exceed `tol`."""
    odd = float(np.max(np.abs(k.coeffs[_ODD_MASKS])))
    if odd > tol:
        raise OddGradeError(odd, tol)
    _, inv = _blade_images(obs)
    return MvAps(k.coeffs[_EVEN_MASKS] @ inv)


def rotor_to_aps(L: StaRotor, obs: ObserverFrame, tol: float = EVEN_TOL) -> ApsRotor:
    """Image of a spacetime rotor; unimodular in Cl(3) because Clifford
    conjugation there corresponds to spacetime reversion."""
    return ApsRotor(sta_even_to_aps(L.mv, obs, tol))
