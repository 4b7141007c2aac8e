"""DFT variants, direct DTFT evaluation, and zero-padded spectral interpolation.

Four forward transforms are provided: the ordinary DFT over n = 0..N-1, the
centered form for odd N (n = -k..k), the legacy centered form for even N
(n = -k..k-1, asymmetric about 0), and the corrected centered form whose
index set n = -(N-1)/2 .. (N-1)/2 is symmetric for every N, at the cost of
half-integer indices when N is even.

Frequency ordering: the ordinary form reports m = 0..N-1 as usual; all
centered forms report ascending frequency indices m = -floor(N/2) ..
ceil(N/2)-1.  Evaluation is plain O(N^2) kernel multiplication; inputs here
are desk-scale.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import DenseSpectrum, DiscreteSignal, FrequencyGrid


class ParityError(ValueError):
    """Signal length has the wrong parity for the requested transform form."""


class DftForm(enum.Enum):
    ORDINARY = "odft"
    SYMMETRIC_ODD = "sdft-odd"
    SYMMETRIC_EVEN_LEGACY = "sdft-even-legacy"
    SYMMETRIC_CORRECTED = "sdft-corrected"


def time_indices(form: DftForm, n: int) -> np.ndarray:
    """Time index of each ordinal sample position (half-integers where needed)."""
    k = np.arange(n, dtype=float)
    if form is DftForm.ORDINARY:
        return k
    if form is DftForm.SYMMETRIC_ODD:
        return k - (n - 1) // 2
    if form is DftForm.SYMMETRIC_EVEN_LEGACY:
        return k - n // 2
    return k - (n - 1) / 2.0  # corrected: symmetric for every parity


def freq_indices(form: DftForm, n: int) -> np.ndarray:
    """Frequency index m of each output slot, in reporting order."""
    k = np.arange(n, dtype=float)
    if form is DftForm.ORDINARY:
        return k
    return k - n // 2


@dataclass(frozen=True, eq=False)
class DftResult:
    values: np.ndarray
    form: DftForm
    n: int

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.n,):
            raise ValueError(f"values must have length {self.n}, got {values.shape}")
        object.__setattr__(self, "values", values)

    def freq_indices(self) -> np.ndarray:
        return freq_indices(self.form, self.n)

    def time_indices(self) -> np.ndarray:
        return time_indices(self.form, self.n)


def _forward(x, form: DftForm) -> DftResult:
    x = np.asarray(x)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("input must be a non-empty 1-d sequence")
    n = len(x)
    t = time_indices(form, n)
    m = freq_indices(form, n)
    kernel = np.exp(-2j * np.pi * np.outer(m, t) / n)
    return DftResult(values=kernel @ x, form=form, n=n)


def odft(x) -> DftResult:
    """Ordinary DFT: X(m) = sum_{n=0}^{N-1} x(n) e^{-i 2 pi m n / N}."""
    return _forward(x, DftForm.ORDINARY)


def sdft_odd(x) -> DftResult:
    """Centered DFT for odd N = 2k+1 over n = -k..k; x[0] holds n = -k."""
    if len(x) % 2 == 0:
        raise ParityError(f"odd-length form needs odd N, got {len(x)}")
    return _forward(x, DftForm.SYMMETRIC_ODD)


def sdft_even_legacy(x) -> DftResult:
    """Legacy centered DFT for even N = 2k over n = -k..k-1 (asymmetric about 0)."""
    if len(x) % 2 == 1:
        raise ParityError(f"legacy even form needs even N, got {len(x)}")
    return _forward(x, DftForm.SYMMETRIC_EVEN_LEGACY)


def sdft_corrected(x) -> DftResult:
    """Centered DFT over n = -(N-1)/2 .. (N-1)/2, symmetric for every N.

    For even N the indices are half-integers; samples are addressed by
    ordinal position n + (N-1)/2 and the half-integer phase is carried
    explicitly in the kernel.
    """
    return _forward(x, DftForm.SYMMETRIC_CORRECTED)


def inverse(result: DftResult) -> np.ndarray:
    """Invert any forward form: conjugated kernel with 1/N scaling."""
    if not isinstance(result.form, DftForm):
        raise ValueError(f"unknown transform form: {result.form!r}")
    t = result.time_indices()
    m = result.freq_indices()
    kernel = np.exp(2j * np.pi * np.outer(t, m) / result.n)
    return (kernel @ result.values) / result.n


def dtft_direct(signal: DiscreteSignal, grid: FrequencyGrid) -> DenseSpectrum:
    """Exact DTFT of a finite sample train on a frequency grid.

    X(f) = sum_k values[k] e^{-i 2 pi f positions[k]}, with the physical
    sample times (possibly half-integer multiples of delta_t) in the phase.
    This is the reference spectrum every other evaluation is checked against.
    """
    if len(signal.values) == 0:
        raise ValueError("signal must contain at least one sample")
    f = grid.points()
    phases = np.exp(-2j * np.pi * np.outer(f, signal.positions))
    return DenseSpectrum.unmasked(grid, phases @ signal.values)


def sdft_zero_padded(x, factor: int, sample_rate: float = 1.0) -> DenseSpectrum:
    """Corrected centered DFT interpolated onto an L-times denser grid.

    Zero samples are appended past the window; the original samples keep
    their physical times t = (k - (N-1)/2) * delta_t, and the padded
    transform carries the matching phase so that the result equals the DTFT
    of the physical signal at every native grid frequency m * f_s / (L N).
    Frequencies are reported in ascending order over one period.
    """
    if int(factor) != factor or factor < 1:
        raise ValueError(f"padding factor must be an integer >= 1, got {factor}")
    x = np.asarray(x)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("input must be a non-empty 1-d sequence")
    n = len(x)
    total = int(factor) * n
    delta_t = 1.0 / sample_rate
    t0 = -(n - 1) / 2.0 * delta_t

    padded = np.concatenate([np.asarray(x, dtype=complex), np.zeros(total - n, dtype=complex)])
    spectrum = np.fft.fftshift(np.fft.fft(padded))
    m = np.arange(total) - total // 2
    freqs = m * sample_rate / total
    spectrum = spectrum * np.exp(-2j * np.pi * freqs * t0)

    grid = FrequencyGrid(start=freqs[0], step=sample_rate / total, count=total)
    return DenseSpectrum.unmasked(grid, spectrum)
