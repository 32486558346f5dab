"""Perturbative coherence transfer through the two-colour Raman sequence.

Sign and phase conventions (used consistently everywhere):

* free evolution of a level at energy E carries exp(-i 2 pi c E t),
  E in cm^-1, t in fs, c in cm/fs;
* absorption samples the spectral amplitude at the transition wavenumber,
  stimulated emission samples its complex conjugate;
* a pulse delayed by tau carries the spectral phase exp(+i 2 pi c nu tau);
* first order (pump, lower 0 -> upper w):
      c_w = i * fc[w, 0] * A_P(nu(w, 0));
* second order (Stokes, upper w -> lower v, arriving at tau):
      a_v = sum_w fc[w, v] * conj(A_S0(nu(w, v)))
                 * exp(-i 2 pi c nu(w, 0) tau) * c_w,
  where A_S0 is the Stokes spectrum evaluated in its own frame (delay
  stripped) and the explicit phase carries the upper-state free evolution
  over the delay.

The second-order product form is the exact non-time-ordered perturbative
amplitude: both time orderings of the two interactions are summed, which
factorises the double time integral into a product of two Fourier
transforms.  Relative to that exact amplitude the expression above differs
only by a w-independent phase (Fourier shift theorem), so every observable
|a_v| is identical; ``time_domain_oracle`` checks this equivalence by
brute-force quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .constants import TWO_PI_C
from .molecule import VibronicModel, transition_wavenumber
from .pulses import PulseSpec, spectral_amplitude, time_profile


@dataclass(frozen=True)
class FirstOrderCoherence:
    """Upper-state coherence amplitudes prepared by the pump.

    Attributes
    ----------
    w_levels : np.ndarray
        Upper levels carrying amplitude, ascending.
    c : np.ndarray
        Complex amplitude per level in ``w_levels`` (bra fixed at the
        lower-state ground level).
    """

    w_levels: np.ndarray
    c: np.ndarray


@dataclass(frozen=True)
class SecondOrderCoherence:
    """Lower-state coherence amplitudes after the Stokes interaction.

    ``a[v]`` is the complex amplitude of lower level v against the frozen
    ground-state bra, for every retained lower level.
    """

    a: np.ndarray
    tau: float


@dataclass(frozen=True)
class CarsSpectrum:
    """Anti-Stokes emission lines radiated after the probe.

    One line per retained upper level w: wavenumber nu(w, 0) and complex
    amplitude b_w * fc[w, 0].
    """

    w_levels: np.ndarray
    wavenumbers: np.ndarray
    amplitudes: np.ndarray


def prepare_first_order(
    model: VibronicModel, pump: PulseSpec, w_window: tuple[int, int]
) -> FirstOrderCoherence:
    """First-order amplitudes c_w = i fc[w, 0] A_P(nu(w, 0)) over a window."""
    w_lo, w_hi = w_window
    if not (0 <= w_lo <= w_hi < model.n_b):
        raise ValueError(
            f"window [{w_lo}, {w_hi}] outside retained upper levels [0, {model.n_b})"
        )
    ws = np.arange(w_lo, w_hi + 1)
    nus = np.array([transition_wavenumber(model, int(w), 0) for w in ws])
    amps = spectral_amplitude(pump, nus)
    c = 1j * model.fc[ws, 0] * amps
    return FirstOrderCoherence(w_levels=ws, c=c)


def apply_stokes(
    model: VibronicModel,
    first: FirstOrderCoherence,
    stokes: PulseSpec,
    tau: float,
) -> SecondOrderCoherence:
    """Transfer the upper-state coherence down to every retained lower level.

    The Stokes spectrum is evaluated in the pulse's own frame; the arrival
    delay ``tau`` enters through the explicit upper-state evolution phase
    (see the module docstring).  Any ``stokes.delay`` is ignored here so
    callers may carry it for bookkeeping.
    """
    stokes_local = replace(stokes, delay=0.0)
    ws = first.w_levels
    # nu matrix over (window level, every retained lower level)
    nu_wv = (
        model.t_e
        + model.b_states.energies[ws][:, None]
        - model.x_states.energies[None, :]
    )
    emission = np.conj(spectral_amplitude(stokes_local, nu_wv.ravel())).reshape(
        nu_wv.shape
    )
    nu_w0 = model.t_e + model.b_states.energies[ws] - model.x_states.energies[0]
    evolution = np.exp(-1j * TWO_PI_C * nu_w0 * tau)
    weights = first.c * evolution
    a = np.einsum("wv,wv,w->v", model.fc[ws, :], emission, weights)
    return SecondOrderCoherence(a=a, tau=tau)


def signal_magnitude(second: SecondOrderCoherence, v_target: int) -> float:
    """|a_{v_target}|, the observable channel amplitude."""
    if not (0 <= v_target < second.a.size):
        raise ValueError(
            f"target level {v_target} outside retained range [0, {second.a.size})"
        )
    return float(np.abs(second.a[v_target]))


def cars_spectrum(
    model: VibronicModel, second: SecondOrderCoherence, probe: PulseSpec
) -> CarsSpectrum:
    """Third-order anti-Stokes line amplitudes after the probe.

    b_w = sum_v fc[w, v] A_Pr(nu(w, v)) a_v for every retained upper
    level; the line radiated at nu(w, 0) has amplitude b_w * fc[w, 0].
    """
    if second.a.size != model.n_x:
        raise ValueError(
            f"coherence has {second.a.size} lower levels, model retains {model.n_x}"
        )
    nu_wv = (
        model.t_e
        + model.b_states.energies[:, None]
        - model.x_states.energies[None, :]
    )
    probe_amps = spectral_amplitude(probe, nu_wv.ravel()).reshape(nu_wv.shape)
    b = (model.fc * probe_amps) @ second.a
    ws = np.arange(model.n_b)
    return CarsSpectrum(
        w_levels=ws,
        wavenumbers=nu_wv[:, 0],
        amplitudes=b * model.fc[:, 0],
    )


def time_domain_oracle(
    model: VibronicModel,
    pump: PulseSpec,
    stokes: PulseSpec,
    tau: float,
    v_target: int,
    w_window: tuple[int, int],
    dt: float = 0.25,
    window_sigmas: float = 8.0,
) -> float:
    """|a_{v_target}| by explicit double time integration of the fields.

    Both time orderings of the pump and Stokes interactions are included,
    so the double integral factorises into the product of two single
    integrals, each evaluated here with the trapezoidal rule on a uniform
    grid (step ``dt``, halved once as a convergence check).  This is the
    independent cross-check of the frequency-domain product form.

    Raises
    ------
    ValueError
        If the target or window levels are not retained.
    RuntimeError
        If halving the time step while widening the window moves the
        result by more than 1e-7 relative (quadrature not converged;
        hard-edged masks with long 1/t field tails trigger this at any
        practical window).
    """
    if not (0 <= v_target < model.n_x):
        raise ValueError(f"target level {v_target} not retained")
    w_lo, w_hi = w_window
    if not (0 <= w_lo <= w_hi < model.n_b):
        raise ValueError(
            f"window [{w_lo}, {w_hi}] outside retained upper levels [0, {model.n_b})"
        )
    if dt <= 0.0 or dt > 0.25:
        raise ValueError(f"time step must be in (0, 0.25] fs, got {dt}")
    ws = np.arange(w_lo, w_hi + 1)
    nu_w0 = model.t_e + model.b_states.energies[ws] - model.x_states.energies[0]
    nu_wv = (
        model.t_e
        + model.b_states.energies[ws]
        - model.x_states.energies[v_target]
    )
    stokes_delayed = replace(stokes, delay=tau)

    def amplitude(step: float, sigmas: float) -> complex:
        # Pump integral I_P(w) = int E_P(t) exp(+i 2 pi c nu(w,0) t) dt
        half = sigmas * pump.sigma_t
        n_pts = max(int(np.ceil(2.0 * half / step)) + 1, 9)
        t_p = pump.delay + np.linspace(-half, half, n_pts)
        field_p = time_profile(pump, t_p)
        phase_p = np.exp(1j * TWO_PI_C * np.outer(nu_w0, t_p))
        i_pump = np.trapezoid(phase_p * field_p[None, :], t_p, axis=1)
        # Stokes integral conj(I_S(w)) = int conj(E_S(t)) exp(-i ...) dt
        half_s = sigmas * stokes.sigma_t
        n_pts_s = max(int(np.ceil(2.0 * half_s / step)) + 1, 9)
        t_s = tau + np.linspace(-half_s, half_s, n_pts_s)
        field_s = np.conj(time_profile(stokes_delayed, t_s))
        phase_s = np.exp(-1j * TWO_PI_C * np.outer(nu_wv, t_s))
        i_stokes = np.trapezoid(phase_s * field_s[None, :], t_s, axis=1)
        fc_prod = model.fc[ws, v_target] * model.fc[ws, 0]
        return complex(-np.sum(fc_prod * i_stokes * i_pump))

    coarse = amplitude(dt, window_sigmas)
    fine = amplitude(dt / 2.0, 1.5 * window_sigmas)
    scale = max(abs(fine), 1e-300)
    if abs(fine - coarse) / scale > 1e-7:
        raise RuntimeError(
            "time-domain quadrature did not converge: refining the grid "
            f"moved the amplitude by {abs(fine - coarse) / scale:.3e} relative"
        )
    return abs(fine)
