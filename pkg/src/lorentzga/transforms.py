"""Transformation laws for measurable quantities.

A Lorentz rotor can transform the observed object (active), the observer
(passive), or both at once, and the induced map on measured coefficients
differs in each case.  Independently of that choice, a spatial vector
transforms one way when it is part of a spacetime vector (paravector law)
and another when it is part of a spacetime plane (biparavector law, the
electromagnetic-field case); conflating the two gives wrong physics, so
the two laws are kept on separate types here.
"""

from __future__ import annotations

import enum
from typing import Literal, Sequence

import numpy as np

from .aps import (
    ApsRotor,
    Biparavector,
    FieldBiparavector,
    MvAps,
    Paravector,
    as_rotor,
    clifford_conjugate,
    dagger,
    split_bar,
)
from .bridge import aps_to_sta
from .kernel import gp
from .sta import MvSta, ObserverFrame, sta_reverse


class TransformMode(enum.Enum):
    PASSIVE = "passive"
    ACTIVE = "active"
    BOTH = "both"


def transform_measurables(
    r: Paravector,
    L: "ApsRotor | MvAps",
    mode: TransformMode,
    observer: ObserverFrame | None = None,
) -> Paravector:
    """Transformed coefficients of a spacetime vector on one observer's
    proper basis.

    passive: r -> Lbar r Lbar^dagger   (the observer is transformed)
    active:  r -> L r L^dagger         (the object is transformed)
    both:    r -> r                    (coefficients unchanged, exactly)

    Passive and active are mutually inverse for the same rotor.  The
    coefficients do not depend on which observer's basis is declared
    (`observer` documents the choice; any inertial frame gives the same
    numbers).
    """
    rot = as_rotor(L).mv
    if mode is TransformMode.BOTH:
        return r
    if mode is TransformMode.PASSIVE:
        rot = clifford_conjugate(rot)
    return Paravector.from_mv(gp(gp(rot, r.as_mv()), dagger(rot)))


def compose_seen_by(L: "ApsRotor | MvAps", L_ca: "ApsRotor | MvAps") -> ApsRotor:
    """The rotor L re-expressed in the basis of a third observer reached by
    L_ca: L' = L_ca L Lbar_ca.  With L_ca = 1 this is L itself, and the
    measurable relations computed with L' in the third observer's basis
    match those computed with L in the original basis."""
    rot = as_rotor(L).mv
    carol = as_rotor(L_ca).mv
    return ApsRotor(gp(gp(carol, rot), clifford_conjugate(carol)))


def field_split(f: FieldBiparavector) -> tuple[np.ndarray, np.ndarray]:
    """Electric and magnetic 3-vectors of a field F = E + iB: the
    hermitian-real part is E, the hermitian-imaginary part is iB."""
    mv = f.as_mv()
    return mv.vector, mv.pseudovector


def transform_field(
    f: FieldBiparavector,
    L: "ApsRotor | MvAps",
    mode: TransformMode,
) -> FieldBiparavector:
    """Lorentz transform of a spacetime plane (e.g. the electromagnetic
    field): passive F -> Lbar F L, active F -> L F Lbar, both F -> F.
    The complex scalar F*F (E.E - B.B and E.B) is invariant in every mode.
    """
    rot = as_rotor(L).mv
    if mode is TransformMode.BOTH:
        return f
    bar = clifford_conjugate(rot)
    if mode is TransformMode.PASSIVE:
        out = gp(gp(bar, f.as_mv()), rot)
    else:
        out = gp(gp(rot, f.as_mv()), bar)
    return Biparavector.from_mv(out)


def transform_basis_element(
    mu: int,
    L: "ApsRotor | MvAps",
    obs: ObserverFrame,
    as_kind: Literal["paravector", "bivector"],
) -> MvSta:
    """Transform of the proper basis element e_mu = sigma_mu, seen in
    spacetime.

    As part of a spacetime vector (paravector kind) only the object-frame
    factor gamma_mu moves: e_mu -> (L gamma_mu L~) gamma_0.  As part of a
    spacetime plane (bivector kind) both factors move: sigma_mu -> L
    sigma_mu L~, which is how a boosted basis vector picks up a spatial
    bivector part.
    """
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"basis index must be 0..3, got {mu}")
    rot = aps_to_sta(as_rotor(L).mv, obs)
    if as_kind == "paravector":
        return gp(gp(gp(rot, obs.gamma(mu)), sta_reverse(rot)), obs.gamma(0))
    if as_kind == "bivector":
        return gp(gp(rot, obs.sigma[mu]), sta_reverse(rot))
    raise ValueError(f"unknown kind {as_kind!r}")


def coefficients_on_basis(x: MvAps, basis: Sequence[MvAps]) -> np.ndarray:
    """Coefficients of x on a Lorentz-transported paravector basis u_mu,
    using the scalarlike Minkowski pairing: x^mu = eta^{mu nu} <x ubar_nu>_S.

    Transported bases keep <u_mu ubar_nu>_S = eta_mu_nu, so this recovers
    the expansion coefficients whenever x lies in the real span of the
    basis.
    """
    out = np.empty(len(basis))
    for nu, u in enumerate(basis):
        s, _ = split_bar(gp(x, clifford_conjugate(u)))
        eta = 1.0 if nu == 0 else -1.0
        out[nu] = eta * s.scalar_part
    return out
