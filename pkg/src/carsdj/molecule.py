"""Two-surface vibronic model: bound states on both curves plus overlaps.

The model couples the ground (X) and excited (B) electronic curves of a
diatomic through the Condon approximation, so every optical matrix element
factorises into an electronic constant (set to one) times a vibrational
overlap.  Overlaps are plain Euclidean dot products of the grid coefficient
vectors, which is the exact DVR quadrature of the wavefunction product on a
uniform grid.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .constants import C_CM_PER_FS
from .dvr import EigenSolution, Grid, build_hamiltonian, solve_bound_states
from .morse import MorseParams, morse_potential, turning_points

# Iodine B-X parameters; energies cm^-1, lengths angstrom.
IODINE_X = MorseParams(d_e=12550.0, r_e=2.666, beta=1.858, t_e=0.0)
IODINE_B = MorseParams(d_e=4500.0, r_e=3.016, beta=1.850, t_e=15647.0)
IODINE_REDUCED_MASS = 126.904473 / 2.0

# Default grid: comfortably brackets the turning points of every retained
# state on both curves, with enough points that the retained eigenvalues
# are converged well below 1e-6 cm^-1 (checked by the test suite).
DEFAULT_GRID = Grid(r_min=2.0, r_max=6.5, n_points=512)

DEFAULT_N_X = 40
DEFAULT_N_B = 40

# Outermost retained wavefunctions decay over a few de Broglie lengths
# beyond the classical turning point; demand this much clearance.
_TURNING_MARGIN_ANG = 0.25


@dataclass(frozen=True)
class VibronicModel:
    """Bound states of both curves plus the Franck-Condon overlap matrix.

    Attributes
    ----------
    x_states, b_states : EigenSolution
        Retained vibrational states of the lower and upper curve; energies
        are relative to each curve's own minimum.
    fc : np.ndarray
        Shape (n_b, n_x); fc[w, v] is the signed overlap of upper state w
        with lower state v.
    t_e : float
        Electronic offset between the two minima in cm^-1.
    reduced_mass : float
        Reduced mass in amu.
    """

    x_states: EigenSolution
    b_states: EigenSolution
    fc: np.ndarray
    t_e: float
    reduced_mass: float

    @property
    def n_x(self) -> int:
        return self.x_states.n_bound

    @property
    def n_b(self) -> int:
        return self.b_states.n_bound


def _solve_curve(
    params: MorseParams,
    grid: Grid,
    reduced_mass: float,
    n_requested: int,
    label: str,
) -> EigenSolution:
    h = build_hamiltonian(grid, lambda r: morse_potential(params, r), reduced_mass)
    sol = solve_bound_states(h, n_requested, grid)
    # Bound-state cutoff: keep levels below the dissociation limit by at
    # least one local level spacing, so near-threshold grid artefacts are
    # never retained.
    energies = sol.energies
    keep = sol.n_bound
    while keep > 1:
        spacing = energies[keep - 1] - energies[keep - 2]
        if energies[keep - 1] < params.d_e - spacing:
            break
        keep -= 1
    if keep < 1 or energies[0] >= params.d_e:
        raise ValueError(f"{label} curve binds no retainable state on this grid")
    if keep < sol.n_bound:
        sol = EigenSolution(
            energies=energies[:keep],
            wavefunctions=sol.wavefunctions[:keep],
            grid=grid,
            n_bound=keep,
        )
    top = sol.energies[-1]
    inner, outer = turning_points(params, top)
    if (inner - grid.r_min) < _TURNING_MARGIN_ANG or (
        grid.r_max - outer
    ) < _TURNING_MARGIN_ANG:
        raise ValueError(
            f"grid [{grid.r_min}, {grid.r_max}] angstrom too small for {label} "
            f"level {sol.n_bound - 1}: turning points ({inner:.3f}, {outer:.3f}) "
            f"need {_TURNING_MARGIN_ANG} angstrom clearance"
        )
    return sol


def build_model(
    x_params: MorseParams = IODINE_X,
    b_params: MorseParams = IODINE_B,
    reduced_mass: float = IODINE_REDUCED_MASS,
    grid: Grid = DEFAULT_GRID,
    n_x: int = DEFAULT_N_X,
    n_b: int = DEFAULT_N_B,
) -> VibronicModel:
    """Solve both curves on a shared grid and form the overlap matrix.

    ``n_x`` and ``n_b`` are upper bounds; levels failing the bound-state
    cutoff are dropped.  Raises if the grid cannot contain the turning
    points of every retained state with a safe margin.
    """
    x_sol = _solve_curve(x_params, grid, reduced_mass, n_x, "lower")
    b_sol = _solve_curve(b_params, grid, reduced_mass, n_b, "upper")
    fc = b_sol.wavefunctions @ x_sol.wavefunctions.T
    return VibronicModel(
        x_states=x_sol,
        b_states=b_sol,
        fc=fc,
        t_e=b_params.t_e - x_params.t_e,
        reduced_mass=reduced_mass,
    )


def transition_wavenumber(model: VibronicModel, w: int, v: int) -> float:
    """Vertical transition energy t_e + E_B(w) - E_X(v) in cm^-1."""
    if not (0 <= w < model.n_b):
        raise ValueError(f"upper level {w} outside retained range [0, {model.n_b})")
    if not (0 <= v < model.n_x):
        raise ValueError(f"lower level {v} outside retained range [0, {model.n_x})")
    return float(model.t_e + model.b_states.energies[w] - model.x_states.energies[v])


def vibrational_period(model: VibronicModel, surface: str, level: int) -> float:
    """Classical period 1 / (c * local spacing) in fs at the given level.

    The local spacing is E(level+1) - E(level), so ``level`` must not be
    the top retained state.
    """
    if surface == "X":
        states = model.x_states
    elif surface == "B":
        states = model.b_states
    else:
        raise ValueError(f"surface must be 'X' or 'B', got {surface!r}")
    if not (0 <= level < states.n_bound - 1):
        raise ValueError(
            f"need level and level+1 retained on {surface}; "
            f"got level {level} with {states.n_bound} states"
        )
    spacing = float(states.energies[level + 1] - states.energies[level])
    return 1.0 / (C_CM_PER_FS * spacing)


def fc_window_score(
    model: VibronicModel, v_target: int, w_window: tuple[int, int]
) -> np.ndarray:
    """|fc[w, 0] * fc[w, v_target]| for w over an inclusive window.

    Returns an array of shape (len(window), 2) with columns (w, score).
    This scores how strongly each upper level couples the v=0 -> v_target
    Raman channel.
    """
    w_lo, w_hi = w_window
    if not (0 <= w_lo <= w_hi < model.n_b):
        raise ValueError(
            f"window [{w_lo}, {w_hi}] outside retained upper levels [0, {model.n_b})"
        )
    if not (0 <= v_target < model.n_x):
        raise ValueError(f"target level {v_target} not retained")
    ws = np.arange(w_lo, w_hi + 1)
    scores = np.abs(model.fc[ws, 0] * model.fc[ws, v_target])
    return np.column_stack([ws.astype(float), scores])


def with_equalized_fc(
    model: VibronicModel, w_window: tuple[int, int], v_target: int
) -> VibronicModel:
    """Model copy with uniform channel overlaps inside the window.

    Every fc[w, 0] and fc[w, v_target] for w in the inclusive window is
    replaced by the geometric mean of the replaced column's magnitudes,
    keeping each entry's original sign.  This is the idealised limit in
    which all Raman channels carry equal weight.
    """
    w_lo, w_hi = w_window
    if not (0 <= w_lo <= w_hi < model.n_b):
        raise ValueError(
            f"window [{w_lo}, {w_hi}] outside retained upper levels [0, {model.n_b})"
        )
    if not (0 <= v_target < model.n_x):
        raise ValueError(f"target level {v_target} not retained")
    fc = model.fc.copy()
    ws = np.arange(w_lo, w_hi + 1)
    for v in (0, v_target):
        col = fc[ws, v]
        if np.any(col == 0.0):
            raise ValueError(
                f"cannot equalise: zero overlap at v={v} inside window "
                f"[{w_lo}, {w_hi}]"
            )
        mean = float(np.exp(np.mean(np.log(np.abs(col)))))
        fc[ws, v] = np.sign(col) * mean
    return replace(model, fc=fc)
