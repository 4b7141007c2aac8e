"""Closed-form spectra of the sampling functions, plus a summation oracle.

Two families:

* infinite two-sided combs (odd, shifted, even, quarter shifts, reversals)
  whose spectra are symbolic delta-line combs, emitted as LineSpectrum;
* one-sided combs (the six half-infinite cases, the four half-infinite
  reversal cases) and the signed step comb, whose spectra are dense complex
  closed forms built from a cosecant or secant.

The one-sided series do not converge pointwise; their closed forms are the
Abel/Cesaro regularized values of the defining sums.  ``cesaro_oracle``
recomputes those values directly from the series, independently of the
closed forms, so every formula here can be cross-checked numerically.
Values at singular frequencies (zeros of the trig denominator, the homes of
the symbolic delta lines) are never produced; dense evaluation masks them.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_SINGULARITY_TOL,
    COMB_KINDS,
    DenseSpectrum,
    DiscreteSignal,
    FrequencyGrid,
    LineSpectrum,
    SamplingKind,
    SamplingSpec,
    SingularFrequencyError,
    singularity_guard,
)

#: Default line-index bound for emitted line spectra.
DEFAULT_TRUNCATION = 16

# exact powers of the imaginary unit, i**j = _I_POW[j % 4]
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)


# -----------------------------
# Series descriptions
# -----------------------------
class SignRule(enum.Enum):
    ALL_PLUS = "all-plus"
    ALTERNATING = "alternating"
    STEP_SIGN = "step-sign"


@dataclass(frozen=True)
class SeriesSpec:
    """Delta-train series: term n sits at (n + offset) * spacing seconds.

    ``start_index`` / ``end_index`` of None mark an infinite end; one-sided
    series have exactly one infinite end.
    """

    start_index: int | None
    end_index: int | None
    offset: float
    spacing: float
    sign_rule: SignRule

    def __post_init__(self) -> None:
        if self.spacing <= 0 or not math.isfinite(self.spacing):
            raise ValueError(f"spacing must be finite and > 0, got {self.spacing}")
        if self.start_index is not None and self.end_index is not None:
            raise ValueError("at least one end of the series must be infinite")

    @property
    def one_sided(self) -> bool:
        return (self.start_index is None) != (self.end_index is None)

    def positions(self, n: np.ndarray) -> np.ndarray:
        return (n + self.offset) * self.spacing

    def signs(self, n: np.ndarray) -> np.ndarray:
        if self.sign_rule is SignRule.ALL_PLUS:
            return np.ones_like(n, dtype=float)
        if self.sign_rule is SignRule.ALTERNATING:
            return np.where(n % 2 == 0, 1.0, -1.0)
        return np.sign(self.positions(n))


def half_infinite_series(case: int, delta_t: float) -> SeriesSpec:
    """Defining delta train of half-infinite sampling case 1..6."""
    table = {
        1: (0, None, 0.0),
        2: (1, None, 0.0),
        3: (None, -1, 0.0),
        4: (None, 0, 0.0),
        5: (None, 0, -0.5),
        6: (0, None, 0.5),
    }
    if case not in table:
        raise ValueError(f"half-infinite case must be 1..6, got {case}")
    start, end, offset = table[case]
    return SeriesSpec(start, end, offset, delta_t, SignRule.ALL_PLUS)


def half_reversal_series(case: int, delta_t: float) -> SeriesSpec:
    """Defining alternating delta train of half-infinite reversal case 1..4.

    Spacing is delta_t / 2; each case is the unique one-sided alternating
    train whose regularized sum reproduces the corresponding closed form.
    """
    table = {
        1: (0, None, 0.0),
        2: (0, None, 1.0),
        3: (0, None, 0.5),
        4: (None, 0, -0.5),
    }
    if case not in table:
        raise ValueError(f"half-reversal case must be 1..4, got {case}")
    start, end, offset = table[case]
    return SeriesSpec(start, end, offset, delta_t / 2.0, SignRule.ALTERNATING)


# -----------------------------
# Time-domain combs
# -----------------------------
def comb_time(spec: SamplingSpec, t_min: float, t_max: float) -> DiscreteSignal:
    """Delta positions and coefficients of a sampling function on [t_min, t_max]."""
    if not (t_min < t_max):
        raise ValueError(f"empty window: [{t_min}, {t_max}]")
    series = _time_series(spec)
    spacing = series.spacing
    lo = math.ceil(t_min / spacing - series.offset - 1e-12)
    hi = math.floor(t_max / spacing - series.offset + 1e-12)
    if series.start_index is not None:
        lo = max(lo, series.start_index)
    if series.end_index is not None:
        hi = min(hi, series.end_index)
    n = np.arange(lo, hi + 1)
    return DiscreteSignal(
        positions=series.positions(n),
        values=series.signs(n),
        nominal_spec=spec,
        window_length=len(n),
    )


def _time_series(spec: SamplingSpec) -> SeriesSpec:
    dt = spec.delta_t
    kind = spec.kind
    if kind in COMB_KINDS:
        if kind is SamplingKind.ODD_REVERSAL:
            return SeriesSpec(None, None, 0.0, dt / 2.0, SignRule.ALTERNATING)
        if kind is SamplingKind.EVEN_REVERSAL:
            return SeriesSpec(None, None, 1.0, dt / 2.0, SignRule.ALTERNATING)
        return SeriesSpec(None, None, spec.shift_amount, dt, SignRule.ALL_PLUS)
    if kind is SamplingKind.STEP:
        return SeriesSpec(None, None, 0.5, dt, SignRule.STEP_SIGN)
    if kind is SamplingKind.HALF:
        assert spec.case is not None
        return half_infinite_series(spec.case, dt)
    assert spec.case is not None
    return half_reversal_series(spec.case, dt)


# -----------------------------
# Line spectra of infinite combs
# -----------------------------
def comb_ft_lines(spec: SamplingSpec, truncation: int = DEFAULT_TRUNCATION) -> LineSpectrum:
    """Symbolic line spectrum of an infinite comb, truncated at |j| <= truncation.

    Weights per kind, at line frequency j*f_s (or (2j-1)*f_s for reversals):

    * odd:                 f_s
    * shifted by r:        f_s * e^{-i 2 pi j r}
    * even:                f_s * (-1)^j
    * quarter-forward:     f_s * i^j        (as published)
    * quarter-backward:    f_s * (-i)^j     (as published)
    * odd-reversal:        2 f_s
    * even-reversal:       2 f_s * i^(2j-1) (as published)

    The quarter and even-reversal weights follow the published comb formulas,
    which differ by conjugation from the plain shift-by-r specialization;
    use SHIFTED for the translation-property weights.
    """
    if spec.kind not in COMB_KINDS:
        raise ValueError(
            f"{spec.kind.value} sampling has no line spectrum; use the dense closed form"
        )
    if truncation < 0:
        raise ValueError(f"truncation must be >= 0, got {truncation}")
    f_s = spec.sample_rate
    j = range(-truncation, truncation + 1)
    kind = spec.kind

    if kind is SamplingKind.ODD:
        lines = [(i * f_s, complex(f_s)) for i in j]
        period: float | None = f_s
    elif kind is SamplingKind.EVEN:
        lines = [(i * f_s, complex((-1) ** i * f_s)) for i in j]
        period = 2 * f_s
    elif kind is SamplingKind.QUARTER_FORWARD:
        lines = [(i * f_s, f_s * _I_POW[i % 4]) for i in j]
        period = 4 * f_s
    elif kind is SamplingKind.QUARTER_BACKWARD:
        lines = [(i * f_s, f_s * _I_POW[-i % 4]) for i in j]
        period = 4 * f_s
    elif kind is SamplingKind.SHIFTED:
        r = spec.shift_amount
        lines = [(i * f_s, f_s * cmath.exp(-2j * cmath.pi * i * r)) for i in j]
        period = _shift_period(r, f_s)
    elif kind is SamplingKind.ODD_REVERSAL:
        lines = [((2 * i - 1) * f_s, complex(2 * f_s)) for i in j]
        period = 2 * f_s
    else:  # EVEN_REVERSAL
        lines = [((2 * i - 1) * f_s, 2 * f_s * _I_POW[(2 * i - 1) % 4]) for i in j]
        period = 4 * f_s

    return LineSpectrum(lines=tuple(lines), period=period, truncation=truncation)


def _shift_period(r: float, f_s: float) -> float | None:
    # weight pattern e^{-i 2 pi j r} repeats after q lines iff q*r is an integer
    for q in range(1, 129):
        if abs(q * r - round(q * r)) < 1e-12:
            return q * f_s
    return None


def add_line_spectra(a: LineSpectrum, b: LineSpectrum, drop_zero: bool = True) -> LineSpectrum:
    """Superpose two line spectra (union of lines, weights summed)."""
    merged: dict[float, complex] = {}
    for f, w in (*a.lines, *b.lines):
        merged[f] = merged.get(f, 0j) + w
    if drop_zero:
        merged = {f: w for f, w in merged.items() if w != 0}
    period = None
    if a.period is not None and b.period is not None:
        period = max(a.period, b.period)
        if period % min(a.period, b.period) != 0:
            period = None
    return LineSpectrum(
        lines=tuple(sorted(merged.items())),
        period=period,
        truncation=min(a.truncation, b.truncation),
    )


# -----------------------------
# Dense closed forms
# -----------------------------
def _check_guard(denom_mag, tol: float, what: str) -> None:
    bad = np.min(np.abs(denom_mag))
    if bad < tol:
        raise SingularFrequencyError(
            f"{what} is singular here: |denominator| = {bad:.3e} < tol {tol:.3e}"
        )


def half_ft(case: int, f, delta_t: float, tol: float = DEFAULT_SINGULARITY_TOL):
    """Regularized spectrum of half-infinite sampling case 1..6.

    With theta = pi * f * delta_t:

    * case 1:  e^{i theta} / (2i sin theta)
    * case 2:  e^{-i theta} / (2i sin theta)
    * case 3:  e^{i theta} / (2i sin(-theta))
    * case 4:  e^{-i theta} / (2i sin(-theta))
    * case 5:  1 / (2i sin(-theta))
    * case 6:  1 / (2i sin theta)

    Raises SingularFrequencyError where sin(theta) vanishes.
    """
    theta = np.pi * np.asarray(f, dtype=float) * delta_t
    s = np.sin(theta)
    _check_guard(s, tol, "half-infinite spectrum")
    if case == 1:
        out = np.exp(1j * theta) / (2j * s)
    elif case == 2:
        out = np.exp(-1j * theta) / (2j * s)
    elif case == 3:
        out = np.exp(1j * theta) / (-2j * s)
    elif case == 4:
        out = np.exp(-1j * theta) / (-2j * s)
    elif case == 5:
        out = 1.0 / (-2j * s)
    elif case == 6:
        out = 1.0 / (2j * s)
    else:
        raise ValueError(f"half-infinite case must be 1..6, got {case}")
    return complex(out) if np.ndim(out) == 0 else out


def step_ft(f, delta_t: float, tol: float = DEFAULT_SINGULARITY_TOL):
    """Spectrum of the signed step comb: -i / sin(pi f delta_t).

    Purely imaginary and periodic with period 2 * f_s.
    """
    theta = np.pi * np.asarray(f, dtype=float) * delta_t
    s = np.sin(theta)
    _check_guard(s, tol, "step-comb spectrum")
    out = -1j / s
    return complex(out) if np.ndim(out) == 0 else out


def half_reversal_ft(case: int, f, delta_t: float, tol: float = DEFAULT_SINGULARITY_TOL):
    """Regularized spectrum of half-infinite reversal sampling case 1..4.

    With phi = pi * f * delta_t / 2 (cosine is even, so cos(-phi) = cos phi):

    * case 1:  e^{i phi} / (2 cos phi)
    * case 2:  e^{-i phi} / (2 cos(-phi))
    * case 3:  1 / (2 cos phi)
    * case 4:  1 / (2 cos(-phi))
    """
    phi = np.pi * np.asarray(f, dtype=float) * delta_t / 2.0
    c = np.cos(phi)
    _check_guard(c, tol, "half-reversal spectrum")
    if case == 1:
        out = np.exp(1j * phi) / (2 * c)
    elif case == 2:
        out = np.exp(-1j * phi) / (2 * c)
    elif case in (3, 4):
        out = np.ones_like(c) / (2 * c) + 0j
    else:
        raise ValueError(f"half-reversal case must be 1..4, got {case}")
    return complex(out) if np.ndim(out) == 0 else out


def dense_spectrum(
    spec: SamplingSpec, grid: FrequencyGrid, tol: float = DEFAULT_SINGULARITY_TOL
) -> DenseSpectrum:
    """Closed-form spectrum of a one-sided or step comb on a grid.

    Grid points failing the singularity guard are masked, never evaluated.
    """
    if spec.kind not in (SamplingKind.HALF, SamplingKind.HALF_REVERSAL, SamplingKind.STEP):
        raise ValueError(f"{spec.kind.value} sampling has no dense closed form; use comb_ft_lines")
    f = grid.points()
    mask = singularity_guard(f, spec, tol)
    values = np.zeros(grid.count, dtype=complex)
    good = ~mask
    if np.any(good):
        if spec.kind is SamplingKind.HALF:
            assert spec.case is not None
            values[good] = half_ft(spec.case, f[good], spec.delta_t, tol)
        elif spec.kind is SamplingKind.STEP:
            values[good] = step_ft(f[good], spec.delta_t, tol)
        else:
            assert spec.case is not None
            values[good] = half_reversal_ft(spec.case, f[good], spec.delta_t, tol)
    return DenseSpectrum(grid, values, mask)


# -----------------------------
# Summation oracle
# -----------------------------
def cesaro_oracle(series: SeriesSpec, f: float, terms: int) -> complex:
    """Cesaro mean of the partial sums of sum_n sign(n) e^{-i 2 pi f position(n)}.

    Terms are taken from the finite end of the series outward; the mean of
    the first ``terms`` partial sums converges (at rate O(1/terms)) to the
    Abel value that the dense closed forms represent.   Only one-sided series
    are summable this way.
    """
    if not series.one_sided:
        raise ValueError("cesaro_oracle requires a one-sided series")
    if terms < 10:
        raise ValueError(f"need at least 10 terms for a meaningful mean, got {terms}")
    if series.start_index is not None:
        n = series.start_index + np.arange(terms)
    else:
        assert series.end_index is not None
        n = series.end_index - np.arange(terms)
    increments = series.signs(n) * np.exp(-2j * np.pi * f * series.positions(n))
    partial_sums = np.cumsum(increments)
    return complex(np.mean(partial_sums))
