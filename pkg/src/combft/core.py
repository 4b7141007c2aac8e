"""Shared domain types, frequency grids, and singularity guards.

Conventions used across the package:

* frequencies ``f`` are in Hz, times ``t`` in seconds, ``delta_t = 1 / sample_rate``;
* complex amplitudes are plain Python/numpy complex values, validated for
  finiteness where domain objects are built;
* delta lines are always symbolic: a line spectrum stores the coefficient of
  each delta, never a numeric stand-in for the delta itself;
* all types are immutable after construction and all operations are pure.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

#: Default threshold on the magnitude of a closed form's trig denominator.
#: Points below it are treated as singular and masked, never evaluated.
DEFAULT_SINGULARITY_TOL = 1e-9

#: Value stored in a dense spectrum at masked (excluded) grid points.
EXCLUDED = complex(np.nan, np.nan)


class SingularFrequencyError(ValueError):
    """A closed form was evaluated where its denominator vanishes."""


def finite_complex(re: float, im: float = 0.0) -> complex:
    """Build a complex amplitude, rejecting non-finite components."""
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ValueError(f"complex amplitude must have finite components, got ({re}, {im})")
    return complex(re, im)


# -----------------------------
# Sampling functions
# -----------------------------
class SamplingKind(enum.Enum):
    ODD = "odd"
    SHIFTED = "shifted"
    EVEN = "even"
    QUARTER_FORWARD = "quarter-forward"
    QUARTER_BACKWARD = "quarter-backward"
    ODD_REVERSAL = "odd-reversal"
    EVEN_REVERSAL = "even-reversal"
    HALF = "half"
    HALF_REVERSAL = "half-reversal"
    STEP = "step"


#: Infinite two-sided combs: their spectra are symbolic delta lines.
COMB_KINDS = frozenset({
    SamplingKind.ODD,
    SamplingKind.SHIFTED,
    SamplingKind.EVEN,
    SamplingKind.QUARTER_FORWARD,
    SamplingKind.QUARTER_BACKWARD,
    SamplingKind.ODD_REVERSAL,
    SamplingKind.EVEN_REVERSAL,
})

#: One-sided or signed combs: their spectra are dense complex closed forms.
DENSE_KINDS = frozenset({
    SamplingKind.HALF,
    SamplingKind.HALF_REVERSAL,
    SamplingKind.STEP,
})

_CASE_RANGE = {SamplingKind.HALF: range(1, 7), SamplingKind.HALF_REVERSAL: range(1, 5)}

#: Comb shift amounts, as fractions of the sample interval.
_SHIFT_AMOUNT = {
    SamplingKind.ODD: 0.0,
    SamplingKind.EVEN: 0.5,
    SamplingKind.QUARTER_FORWARD: 0.25,
    SamplingKind.QUARTER_BACKWARD: -0.25,
}


@dataclass(frozen=True)
class SamplingSpec:
    """One of the supported sampling functions at a given sample rate.

    ``shift`` is only meaningful for the generic shifted comb; ``case``
    selects among the half-infinite (1..6) or half-infinite reversal (1..4)
    variants.  ``delta_t`` is always derived from the rate, never stored.
    """

    kind: SamplingKind
    sample_rate: float
    shift: float | None = None
    case: int | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.sample_rate) and self.sample_rate > 0):
            raise ValueError(f"sample_rate must be finite and > 0, got {self.sample_rate}")
        if self.kind is SamplingKind.SHIFTED:
            if self.shift is None or not math.isfinite(self.shift):
                raise ValueError("shifted sampling requires a finite shift")
        elif self.shift is not None:
            raise ValueError(f"{self.kind.value} sampling does not take a shift")
        if self.kind in _CASE_RANGE:
            if self.case not in _CASE_RANGE[self.kind]:
                raise ValueError(
                    f"{self.kind.value} sampling requires case in "
                    f"{_CASE_RANGE[self.kind]}, got {self.case}"
                )
        elif self.case is not None:
            raise ValueError(f"{self.kind.value} sampling does not take a case")

    @property
    def delta_t(self) -> float:
        """Sample interval in seconds (1 / sample_rate)."""
        return 1.0 / self.sample_rate

    @property
    def shift_amount(self) -> float:
        """Effective shift r for comb kinds (even == shifted by 0.5, etc.)."""
        if self.kind is SamplingKind.SHIFTED:
            assert self.shift is not None
            return self.shift
        try:
            return _SHIFT_AMOUNT[self.kind]
        except KeyError:
            raise ValueError(f"{self.kind.value} sampling has no single shift") from None

    @property
    def position_spacing(self) -> float:
        """Spacing between consecutive delta positions (delta_t / 2 for reversal kinds)."""
        if self.kind in (
            SamplingKind.ODD_REVERSAL,
            SamplingKind.EVEN_REVERSAL,
            SamplingKind.HALF_REVERSAL,
        ):
            return self.delta_t / 2.0
        return self.delta_t

    # convenience constructors
    @classmethod
    def odd(cls, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.ODD, sample_rate)

    @classmethod
    def shifted(cls, sample_rate: float, shift: float) -> "SamplingSpec":
        return cls(SamplingKind.SHIFTED, sample_rate, shift=shift)

    @classmethod
    def even(cls, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.EVEN, sample_rate)

    @classmethod
    def quarter_forward(cls, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.QUARTER_FORWARD, sample_rate)

    @classmethod
    def quarter_backward(cls, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.QUARTER_BACKWARD, sample_rate)

    @classmethod
    def odd_reversal(cls, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.ODD_REVERSAL, sample_rate)

    @classmethod
    def even_reversal(cls, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.EVEN_REVERSAL, sample_rate)

    @classmethod
    def half(cls, case: int, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.HALF, sample_rate, case=case)

    @classmethod
    def half_reversal(cls, case: int, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.HALF_REVERSAL, sample_rate, case=case)

    @classmethod
    def step(cls, sample_rate: float) -> "SamplingSpec":
        return cls(SamplingKind.STEP, sample_rate)


# -----------------------------
# Grids and spectra
# -----------------------------
@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform frequency grid: points are start + k*step for k in [0, count)."""

    start: float
    step: float
    count: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.start) and math.isfinite(self.step)):
            raise ValueError("grid start and step must be finite")
        if self.step <= 0:
            raise ValueError(f"grid step must be > 0, got {self.step}")
        if int(self.count) != self.count or self.count < 1:
            raise ValueError(f"grid count must be a positive integer, got {self.count}")

    @classmethod
    def from_range(cls, start: float, stop: float, step: float) -> "FrequencyGrid":
        """Inclusive [start, stop] grid; stop must be start + k*step."""
        if stop <= start:
            raise ValueError(f"grid stop must exceed start, got [{start}, {stop}]")
        count = int(round((stop - start) / step)) + 1
        return cls(start=start, step=step, count=count)

    def points(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count)

    @property
    def stop(self) -> float:
        return self.start + self.step * (self.count - 1)

    def is_symmetric(self, tol: float = 1e-9) -> bool:
        """True when the grid is mirror-symmetric about 0."""
        return abs(self.start + self.stop) <= tol * max(abs(self.start), self.step)


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class LineSpectrum:
    """Symbolic delta-comb spectrum: (frequency, complex weight) pairs.

    The weight is the coefficient multiplying a symbolic delta at that
    frequency; no numeric value is ever assigned to the delta itself.
    ``period`` is the frequency period of the line pattern, or None when the
    weight pattern never repeats.  ``truncation`` records the index bound J
    the lines were emitted for.
    """

    lines: tuple[tuple[float, complex], ...]
    period: float | None
    truncation: int

    def __post_init__(self) -> None:
        freqs = [f for f, _ in self.lines]
        if any(f2 <= f1 for f1, f2 in zip(freqs, freqs[1:])):
            raise ValueError("line frequencies must be strictly increasing")
        for f, w in self.lines:
            if not math.isfinite(f):
                raise ValueError("line frequencies must be finite")
            finite_complex(w.real, w.imag)
        if self.period is not None and self.period <= 0:
            raise ValueError("period must be positive or None (aperiodic)")
        if self.truncation < 0:
            raise ValueError("truncation must be >= 0")

    def frequencies(self) -> np.ndarray:
        return np.array([f for f, _ in self.lines])

    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.lines], dtype=complex)


@dataclass(frozen=True, eq=False)
class DenseSpectrum:
    """Complex spectrum values tabulated on a uniform frequency grid.

    Masked points are excluded by the singularity guard; they carry the
    designated EXCLUDED value and must be skipped by consumers.
    """

    grid: FrequencyGrid
    values: np.ndarray
    mask: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=complex)
        mask = np.asarray(self.mask, dtype=bool)
        if values.shape != (self.grid.count,) or mask.shape != (self.grid.count,):
            raise ValueError(
                f"values and mask must both have length {self.grid.count}, "
                f"got {values.shape} and {mask.shape}"
            )
        if not np.all(np.isfinite(values[~mask].view(float))):
            raise ValueError("unmasked spectrum values must be finite")
        values = values.copy()
        values[mask] = EXCLUDED
        object.__setattr__(self, "values", _readonly(values))
        object.__setattr__(self, "mask", _readonly(mask))

    @classmethod
    def unmasked(cls, grid: FrequencyGrid, values: np.ndarray) -> "DenseSpectrum":
        return cls(grid, values, np.zeros(grid.count, dtype=bool))

    def frequencies(self) -> np.ndarray:
        return self.grid.points()


@dataclass(frozen=True, eq=False)
class DiscreteSignal:
    """Finite real-valued sample train at uniformly spaced time positions.

    Positions may sit at half-integer multiples of delta_t (even, step and
    reversal samplings); the spacing must match the nominal sampling kind.
    """

    positions: np.ndarray
    values: np.ndarray
    nominal_spec: SamplingSpec
    window_length: int

    def __post_init__(self) -> None:
        positions = np.asarray(self.positions, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if positions.shape != values.shape or positions.ndim != 1:
            raise ValueError("positions and values must be 1-d arrays of equal length")
        if len(positions) != self.window_length:
            raise ValueError(
                f"window_length {self.window_length} != number of samples {len(positions)}"
            )
        if len(positions) > 1:
            gaps = np.diff(positions)
            spacing = self.nominal_spec.position_spacing
            if np.any(gaps <= 0):
                raise ValueError("positions must be strictly increasing")
            if not np.allclose(gaps, spacing, rtol=1e-9, atol=1e-12 * spacing):
                raise ValueError("positions must be uniformly spaced by the sampling spacing")
        object.__setattr__(self, "positions", _readonly(positions))
        object.__setattr__(self, "values", _readonly(values))


# -----------------------------
# Operations
# -----------------------------
def sinc(x):
    """sin(x)/x with the removable singularity filled in: sinc(0) = 1.

    Unnormalized convention; callers fold pi into the argument themselves.
    Accepts scalars or arrays.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("sinc argument must be finite")
    out = np.sinc(arr / np.pi)
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def bins_to_hz(b, f_s: float, n: int):
    """Convert DFT-bin units to Hz: one bin is f_s / n."""
    _check_bin_config(f_s, n)
    return b * f_s / n


def hz_to_bins(f, f_s: float, n: int):
    """Convert Hz to DFT-bin units (inverse of bins_to_hz)."""
    _check_bin_config(f_s, n)
    return f * n / f_s


def _check_bin_config(f_s: float, n: int) -> None:
    if not (math.isfinite(f_s) and f_s > 0):
        raise ValueError(f"f_s must be finite and > 0, got {f_s}")
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def denominator_magnitude(f, spec: SamplingSpec):
    """|denominator| of the dense closed form for spec's kind at frequency f.

    Returns None for kinds whose spectrum is a symbolic line comb (no dense
    denominator to guard).
    """
    if spec.kind in (SamplingKind.HALF, SamplingKind.STEP):
        return np.abs(np.sin(np.pi * np.asarray(f) * spec.delta_t))
    if spec.kind is SamplingKind.HALF_REVERSAL:
        return np.abs(np.cos(np.pi * np.asarray(f) * spec.delta_t / 2.0))
    return None


def singularity_guard(f, spec: SamplingSpec, tol: float = DEFAULT_SINGULARITY_TOL):
    """True where the closed form for spec is singular (denominator below tol).

    Guarded points are masked by dense evaluators, never evaluated.
    """
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    mag = denominator_magnitude(f, spec)
    if mag is None:
        out = np.zeros(np.shape(f), dtype=bool)
        return bool(out) if out.ndim == 0 else out
    out = mag < tol
    return bool(out) if np.ndim(out) == 0 else out
