"""Morse potential curves and their closed-form vibrational spectrum.

The analytic level formula acts as the oracle against which the numerical
eigensolver is validated, so it is kept deliberately independent of the
grid machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import HBARSQ_CM1_AMU_ANG2


@dataclass(frozen=True)
class MorseParams:
    """Morse curve D_e * (1 - exp(-beta*(r - r_e)))^2 + t_e.

    Parameters
    ----------
    d_e : float
        Well depth in cm^-1, measured from the potential minimum.
    r_e : float
        Equilibrium bond length in angstrom.
    beta : float
        Range parameter in 1/angstrom.
    t_e : float
        Electronic offset of the minimum in cm^-1 (zero for the ground
        electronic state).
    """

    d_e: float
    r_e: float
    beta: float
    t_e: float = 0.0

    def __post_init__(self) -> None:
        if not (self.d_e > 0.0):
            raise ValueError(f"well depth must be positive, got {self.d_e}")
        if not (self.r_e > 0.0):
            raise ValueError(f"equilibrium length must be positive, got {self.r_e}")
        if not (self.beta > 0.0):
            raise ValueError(f"range parameter must be positive, got {self.beta}")


def morse_potential(params: MorseParams, r: np.ndarray) -> np.ndarray:
    """Evaluate the well-relative Morse curve at bond lengths ``r``.

    The electronic offset ``t_e`` is not added here; eigenvalues are kept
    relative to each well's own minimum and offsets enter only when
    transition energies between two curves are formed.
    """
    x = 1.0 - np.exp(-params.beta * (np.asarray(r, dtype=float) - params.r_e))
    return params.d_e * x * x


def harmonic_wavenumber(params: MorseParams, reduced_mass: float) -> float:
    """Harmonic constant omega_e in cm^-1 for the given reduced mass (amu)."""
    return params.beta * math.sqrt(
        2.0 * params.d_e * HBARSQ_CM1_AMU_ANG2 / reduced_mass
    )


def anharmonicity(params: MorseParams, reduced_mass: float) -> float:
    """First anharmonic constant omega_e x_e = omega_e^2 / (4 D_e) in cm^-1."""
    w = harmonic_wavenumber(params, reduced_mass)
    return w * w / (4.0 * params.d_e)


def bound_state_count(params: MorseParams, reduced_mass: float) -> int:
    """Number of bound vibrational levels supported by the curve."""
    lam = harmonic_wavenumber(params, reduced_mass) / (
        2.0 * anharmonicity(params, reduced_mass)
    )
    return int(math.floor(lam - 0.5)) + 1


def morse_analytic_levels(
    params: MorseParams, reduced_mass: float, n_levels: int
) -> np.ndarray:
    """Closed-form energies of the lowest ``n_levels`` vibrational states.

    Returns energies in cm^-1 relative to the well minimum:
    E_n = omega_e*(n + 1/2) - omega_e x_e*(n + 1/2)^2.

    Raises
    ------
    ValueError
        If more levels are requested than the curve binds.
    """
    if n_levels < 1:
        raise ValueError(f"need at least one level, got {n_levels}")
    n_bound = bound_state_count(params, reduced_mass)
    if n_levels > n_bound:
        raise ValueError(
            f"requested {n_levels} levels but the curve binds only {n_bound}"
        )
    w = harmonic_wavenumber(params, reduced_mass)
    wx = anharmonicity(params, reduced_mass)
    n_half = np.arange(n_levels, dtype=float) + 0.5
    return w * n_half - wx * n_half * n_half


def turning_points(
    params: MorseParams, energy: float
) -> tuple[float, float]:
    """Inner and outer classical turning points at a well-relative energy."""
    if not (0.0 < energy < params.d_e):
        raise ValueError(
            f"energy {energy} cm^-1 outside the open interval (0, {params.d_e})"
        )
    s = math.sqrt(energy / params.d_e)
    inner = params.r_e - math.log(1.0 + s) / params.beta
    outer = params.r_e - math.log(1.0 - s) / params.beta
    return inner, outer
