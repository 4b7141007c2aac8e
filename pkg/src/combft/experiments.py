"""Windowed-signal experiments: builders, window spectrum, and the
principal-value convolution check.

The central numerical test: a rectangular window of N signed step samples
has a DTFT that is purely imaginary, and that same spectrum must come out of
convolving the continuous window's spectrum with the step comb's cosecant
spectrum.  The convolution integrand has a pole at every multiple of the
sample rate, so it is evaluated as a principal value: midpoint quadrature
nodes are placed symmetrically about every pole, making the divergent
neighborhoods cancel pairwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .combs import dense_spectrum
from .core import (
    DEFAULT_SINGULARITY_TOL,
    DenseSpectrum,
    DiscreteSignal,
    FrequencyGrid,
    SamplingSpec,
    SingularFrequencyError,
    sinc,
    singularity_guard,
)
from .transforms import dtft_direct

#: Verification thresholds for the convolution experiment.
CONVOLUTION_MIN_CORRELATION = 0.99
CONVOLUTION_MAX_RELATIVE_L2 = 0.05

EXPERIMENT_NAMES = ("fig6", "fig7", "fig8")


def default_grid(f_s: float = 20.0, n: int = 20, step_bins: float = 0.1) -> FrequencyGrid:
    """Symmetric grid spanning half the bin range: -n/2 .. n/2 bins."""
    bin_hz = f_s / n
    return FrequencyGrid.from_range(-n / 2 * bin_hz, n / 2 * bin_hz, step_bins * bin_hz)


@dataclass(frozen=True, eq=False)
class ExperimentConfig:
    """Knobs of the windowed-spectrum experiments.

    ``truncation_k`` bounds the convolution domain at +-k * f_s and
    ``quadrature_step`` (Hz) is the midpoint-rule node spacing.
    """

    f_s: float = 20.0
    n: int = 20
    grid: FrequencyGrid = field(default_factory=default_grid)
    truncation_k: int = 25
    quadrature_step: float = 0.01

    def __post_init__(self) -> None:
        if self.f_s <= 0:
            raise ValueError(f"f_s must be > 0, got {self.f_s}")
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if self.truncation_k < 1:
            raise ValueError(f"truncation_k must be >= 1, got {self.truncation_k}")
        if self.quadrature_step <= 0:
            raise ValueError(f"quadrature_step must be > 0, got {self.quadrature_step}")
        if not self.grid.is_symmetric():
            raise ValueError("frequency grid must be symmetric about 0")


@dataclass(frozen=True)
class ComparisonMetrics:
    max_abs_diff: float
    relative_l2: float
    pearson_correlation: float
    points_compared: int

    def __post_init__(self) -> None:
        if self.relative_l2 < 0:
            raise ValueError("relative_l2 must be >= 0")
        if abs(self.pearson_correlation) > 1 + 1e-12:
            raise ValueError("correlation must lie in [-1, 1]")


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    """Named spectra on a common grid, plus comparison metrics when relevant."""

    name: str
    grid: FrequencyGrid
    series: dict[str, DenseSpectrum]
    metrics: ComparisonMetrics | None = None


# -----------------------------
# Signal builders
# -----------------------------
def build_rect_even(n: int, f_s: float) -> DiscreteSignal:
    """Rectangular window of N ones at centered half-integer times (n+0.5) dt."""
    if n % 2 or n < 2:
        raise ValueError(f"centered window needs even n >= 2, got {n}")
    dt = 1.0 / f_s
    positions = (np.arange(-n // 2, n // 2) + 0.5) * dt
    return DiscreteSignal(positions, np.ones(n), SamplingSpec.even(f_s), n)


def build_rect_step(n: int, f_s: float) -> DiscreteSignal:
    """Signed rectangular window: -1 on the negative half, +1 on the positive."""
    if n % 2 or n < 2:
        raise ValueError(f"signed window needs even n >= 2, got {n}")
    dt = 1.0 / f_s
    idx = np.arange(-n // 2, n // 2)
    positions = (idx + 0.5) * dt
    return DiscreteSignal(positions, np.where(idx < 0, -1.0, 1.0), SamplingSpec.step(f_s), n)


def build_rect_ordinary(n: int, f_s: float) -> DiscreteSignal:
    """Rectangular window of N ones at one-sided integer times n dt, n = 0..N-1."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    dt = 1.0 / f_s
    return DiscreteSignal(np.arange(n) * dt, np.ones(n), SamplingSpec.odd(f_s), n)


# -----------------------------
# Closed forms
# -----------------------------
def rect_window_ft(n: int, f_s: float, f):
    """Spectrum of the continuous rectangular window: N dt sinc(N pi f dt).

    Real-valued and aperiodic; the first zero sits one bin away from 0.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if f_s <= 0:
        raise ValueError(f"f_s must be > 0, got {f_s}")
    dt = 1.0 / f_s
    return n * dt * sinc(n * np.pi * np.asarray(f, dtype=float) * dt)


def closed_form_step_spectrum(n: int, f_s: float, f, tol: float = DEFAULT_SINGULARITY_TOL):
    """Exact DTFT of the signed rectangular window, as a closed form.

    -2i sin^2(N pi f dt / 2) / sin(pi f dt); follows from pairing each
    positive-time sample with its mirrored negative-time partner and summing
    the resulting sine series in closed form.
    """
    if n % 2 or n < 2:
        raise ValueError(f"signed window needs even n >= 2, got {n}")
    theta = np.pi * np.asarray(f, dtype=float) / f_s
    s = np.sin(theta)
    if np.min(np.abs(s)) < tol:
        raise SingularFrequencyError("closed form undefined where sin(pi f dt) vanishes")
    out = -2j * np.sin(n * theta / 2.0) ** 2 / s
    return complex(out) if np.ndim(out) == 0 else out


# -----------------------------
# Principal-value convolution
# -----------------------------
def pv_nodes(f_s: float, truncation_k: int, h: float) -> np.ndarray:
    """Midpoint quadrature nodes on [-k f_s, k f_s], symmetric about every pole.

    Requires h to divide f_s evenly so the poles (multiples of f_s) fall
    exactly midway between adjacent nodes; a non-dividing step would place
    nodes on poles and is rejected outright.
    """
    ratio = f_s / h
    if abs(ratio - round(ratio)) > 1e-9 * ratio:
        raise ValueError(
            f"quadrature step {h} must divide the pole spacing {f_s} evenly; "
            "nodes would collide with singularities"
        )
    half_count = int(round(truncation_k * ratio))
    return (np.arange(-half_count, half_count) + 0.5) * h


def pv_convolve(
    n: int, f_s: float, grid: FrequencyGrid, truncation_k: int, h: float
) -> DenseSpectrum:
    """Convolve the window spectrum with the step-comb spectrum, PV style.

    X(f) = sum_g W(f - g) S(g) h over midpoint nodes g.  Node placement is
    symmetric about every cosecant pole, so the locally odd divergent parts
    cancel pairwise and the sum converges to the principal value.  W is real
    and S purely imaginary, so the output is purely imaginary; only its
    imaginary part is computed.

    The sinc in W(f - g) is expanded via sin(a - b) = sin a cos b - cos a
    sin b so that all node-side trig is hoisted out of the per-frequency
    loop; each output point then costs four real dot products.
    """
    g = pv_nodes(f_s, truncation_k, h)
    dt = 1.0 / f_s
    # W(f-g) S(g) h = sin(a - b) / (pi (f - g)) * (-i h / sin(pi g dt))
    # with a = n pi f dt, b = n pi g dt.
    b = n * np.pi * g * dt
    w_im = -(h / np.pi) / np.sin(np.pi * g * dt)
    cos_term = np.cos(b) * w_im
    sin_term = np.sin(b) * w_im

    points = grid.points()
    values = np.empty(grid.count, dtype=complex)
    for i, f in enumerate(points):
        d = f - g
        near = np.abs(d) < 1e-9 * h
        if np.any(near):
            d = np.where(near, 1.0, d)
        r = 1.0 / d
        a = n * np.pi * f * dt
        im = np.sin(a) * np.dot(r, cos_term) - np.cos(a) * np.dot(r, sin_term)
        if np.any(near):
            # grid point sits on a node: swap the broken 1/(f-g) terms for
            # the exact sinc limit of W there
            broken = np.sin(a - b[near]) * w_im[near]
            exact = n * dt * np.pi * w_im[near] * sinc(a - b[near])
            im += np.sum(exact - broken)
        values[i] = 1j * im
    return DenseSpectrum.unmasked(grid, values)


# -----------------------------
# Comparison metrics
# -----------------------------
def compare(a: DenseSpectrum, b: DenseSpectrum) -> ComparisonMetrics:
    """Pointwise metrics over the grid points unmasked in both spectra.

    relative_l2 is ||a - b|| / ||a||; the correlation is Pearson's r over the
    stacked real and imaginary parts.
    """
    if (a.grid.start, a.grid.step, a.grid.count) != (b.grid.start, b.grid.step, b.grid.count):
        raise ValueError("spectra must share a grid to be compared")
    keep = ~(a.mask | b.mask)
    x = a.values[keep]
    y = b.values[keep]
    if len(x) == 0:
        raise ValueError("no unmasked points in common")
    diff = x - y
    max_abs = float(np.max(np.abs(diff)))
    norm_a = float(np.linalg.norm(x))
    rel_l2 = float(np.linalg.norm(diff)) / norm_a if norm_a > 0 else float(np.linalg.norm(diff))
    xr = np.concatenate([x.real, x.imag])
    yr = np.concatenate([y.real, y.imag])
    xc = xr - xr.mean()
    yc = yr - yr.mean()
    denom = np.linalg.norm(xc) * np.linalg.norm(yc)
    corr = float(np.dot(xc, yc) / denom) if denom > 0 else 1.0
    corr = min(1.0, max(-1.0, corr))
    return ComparisonMetrics(max_abs, rel_l2, corr, int(np.sum(keep)))


# -----------------------------
# Experiment driver
# -----------------------------
def _mask_singular(spectrum: DenseSpectrum, spec: SamplingSpec) -> DenseSpectrum:
    mask = singularity_guard(spectrum.grid.points(), spec)
    return DenseSpectrum(spectrum.grid, np.asarray(spectrum.values), spectrum.mask | mask)


def run_experiment(which: str, config: ExperimentConfig) -> ExperimentResult:
    """Run one of the named experiments and return its plot-ready table.

    * fig6: spectra of the centered even window and the signed step window;
    * fig7: window spectrum, step-comb spectrum, PV convolution, and the
      step window DTFT, plus metrics comparing the last two (the pole at
      f = 0 is masked out of the comparison);
    * fig8: one-sided ordinary window versus the sum of the fig6 signals.
    """
    if which not in EXPERIMENT_NAMES:
        raise ValueError(f"unknown experiment {which!r}; expected one of {EXPERIMENT_NAMES}")
    if config.n % 2:
        raise ValueError(f"{which} uses centered even-length windows; got n = {config.n}")
    f_s, n, grid = config.f_s, config.n, config.grid

    even = build_rect_even(n, f_s)
    step = build_rect_step(n, f_s)

    if which == "fig6":
        series = {
            "even_rect_dtft": dtft_direct(even, grid),
            "step_rect_dtft": dtft_direct(step, grid),
        }
        return ExperimentResult(which, grid, series)

    if which == "fig7":
        step_spec = SamplingSpec.step(f_s)
        window = DenseSpectrum.unmasked(
            grid, rect_window_ft(n, f_s, grid.points()).astype(complex)
        )
        comb = dense_spectrum(step_spec, grid)
        pv = _mask_singular(
            pv_convolve(n, f_s, grid, config.truncation_k, config.quadrature_step), step_spec
        )
        reference = dtft_direct(step, grid)
        metrics = compare(pv, _mask_singular(reference, step_spec))
        series = {
            "window_ft": window,
            "step_comb_ft": comb,
            "pv_convolution": pv,
            "step_rect_dtft": reference,
        }
        return ExperimentResult(which, grid, series, metrics)

    # fig8
    ordinary = build_rect_ordinary(n, f_s)
    combined = DiscreteSignal(
        even.positions, even.values + step.values, SamplingSpec.even(f_s), n
    )
    series = {
        "ordinary_rect_dtft": dtft_direct(ordinary, grid),
        "combined_rect_dtft": dtft_direct(combined, grid),
    }
    return ExperimentResult(which, grid, series)
