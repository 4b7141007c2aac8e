"""Residual evaluators for the algebraic relations between the closed forms.

Each identity states that a combination of one-sided spectra equals either a
constant or a delta comb.  Away from the delta supports (equivalently, away
from the singular frequencies) the comb contributes nothing, so the residual
LHS - constant must vanish.  Everything here is evaluated strictly off the
singular points; the statements at the singular points themselves are out of
scope and are reported as excluded, never evaluated.

All residuals depend on frequency only through theta = pi * f * delta_t, so
they are invariant under rescaling the sample rate with f * delta_t held
fixed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .combs import (
    DEFAULT_TRUNCATION,
    add_line_spectra,
    comb_ft_lines,
    half_ft,
    half_reversal_ft,
)
from .core import SamplingSpec

#: Residual threshold used by the batch driver and the CLI exit code.
RESIDUAL_TOL = 1e-12

#: Guarded band for random frequency draws, in units of f * delta_t:
#: (0.01, 0.49) u (0.51, 0.99) keeps every denominator above sin(0.005 pi).
_BAND_LO, _BAND_GAP_LO, _BAND_GAP_HI, _BAND_HI = 0.01, 0.49, 0.51, 0.99


class IdentityId(enum.Enum):
    """Catalog of the verified relations, named by what each one states."""

    # adjacent one-sided pairs differ by a single delta at the origin
    RIGHT_PAIR_UNIT_DIFFERENCE = "right_pair_unit_difference"
    LEFT_PAIR_UNIT_DIFFERENCE = "left_pair_unit_difference"
    # a one-sided comb plus its half-spaced partner is the same case at twice the rate
    RATE_DOUBLING_CASE_1 = "rate_doubling_case_1"
    RATE_DOUBLING_CASE_2 = "rate_doubling_case_2"
    RATE_DOUBLING_CASE_3 = "rate_doubling_case_3"
    RATE_DOUBLING_CASE_4 = "rate_doubling_case_4"
    # two one-sided combs superpose into a two-sided comb (plus a possible unit)
    EVEN_COMB_SUPERPOSITION = "even_comb_superposition"
    ODD_COMB_SUPERPOSITION_PLUS_UNIT = "odd_comb_superposition_plus_unit"
    ODD_COMB_SUPERPOSITION_MINUS_UNIT = "odd_comb_superposition_minus_unit"
    ODD_COMB_SHIFT_FORWARD = "odd_comb_shift_forward"
    ODD_COMB_SHIFT_BACKWARD = "odd_comb_shift_backward"
    # the two symmetric half-reversal spectra coincide off the lines
    REVERSAL_PAIR_DIFFERENCE = "reversal_pair_difference"
    # odd comb + even comb = rate-doubled odd comb, line by line
    COMB_DOUBLING = "comb_doubling"


_DOUBLING_CASE = {
    IdentityId.RATE_DOUBLING_CASE_1: 1,
    IdentityId.RATE_DOUBLING_CASE_2: 2,
    IdentityId.RATE_DOUBLING_CASE_3: 3,
    IdentityId.RATE_DOUBLING_CASE_4: 4,
}


@dataclass(frozen=True)
class IdentityReport:
    identity_id: IdentityId
    sample_count: int
    max_abs_residual: float
    frequencies_tested: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.max_abs_residual < 0:
            raise ValueError("max_abs_residual must be >= 0")


def superposition_residual(identity: IdentityId, f, delta_t: float):
    """LHS minus its expected off-singularity value, for a superposition identity.

    The expected value is the constant part of the right-hand side; the delta
    comb part vanishes away from its support, which the guard ensures.
    """
    if identity is IdentityId.EVEN_COMB_SUPERPOSITION:
        return half_ft(6, f, delta_t) + half_ft(5, f, delta_t)
    if identity is IdentityId.ODD_COMB_SUPERPOSITION_PLUS_UNIT:
        return half_ft(1, f, delta_t) + half_ft(4, f, delta_t) - 1.0
    if identity is IdentityId.ODD_COMB_SUPERPOSITION_MINUS_UNIT:
        return half_ft(2, f, delta_t) + half_ft(3, f, delta_t) + 1.0
    if identity is IdentityId.ODD_COMB_SHIFT_FORWARD:
        return half_ft(1, f, delta_t) + half_ft(3, f, delta_t)
    if identity is IdentityId.ODD_COMB_SHIFT_BACKWARD:
        return half_ft(2, f, delta_t) + half_ft(4, f, delta_t)
    if identity is IdentityId.REVERSAL_PAIR_DIFFERENCE:
        return half_reversal_ft(4, f, delta_t) - half_reversal_ft(3, f, delta_t)
    if identity is IdentityId.RIGHT_PAIR_UNIT_DIFFERENCE:
        return half_ft(1, f, delta_t) - half_ft(2, f, delta_t) - 1.0
    if identity is IdentityId.LEFT_PAIR_UNIT_DIFFERENCE:
        return half_ft(4, f, delta_t) - half_ft(3, f, delta_t) - 1.0
    raise ValueError(f"{identity} is not a superposition identity")


def doubling_residual(case: int, f, delta_t: float):
    """Residual of: case + its partner at rate f_s equals case at rate 2 f_s.

    Partners: cases 1 and 2 pair with case 6, cases 3 and 4 with case 5.
    Both theta and theta/2 must be off-singular.
    """
    if case not in (1, 2, 3, 4):
        raise ValueError(f"doubling is defined for cases 1..4, got {case}")
    partner = 6 if case in (1, 2) else 5
    doubled = half_ft(case, f, delta_t / 2.0)
    return half_ft(case, f, delta_t) + half_ft(partner, f, delta_t) - doubled


def comb_doubling_residual(
    f_s: float = 1.0, truncation: int = DEFAULT_TRUNCATION
) -> tuple[float, tuple[float, ...]]:
    """Line-by-line residual of odd(f_s) + even(f_s) against odd(2 f_s).

    Returns (max weight/frequency mismatch, line frequencies compared).
    """
    summed = add_line_spectra(
        comb_ft_lines(SamplingSpec.odd(f_s), truncation),
        comb_ft_lines(SamplingSpec.even(f_s), truncation),
    )
    doubled = comb_ft_lines(SamplingSpec.odd(2 * f_s), truncation // 2)
    if len(summed.lines) != len(doubled.lines):
        return float("inf"), tuple(summed.frequencies())
    freq_err = np.max(np.abs(summed.frequencies() - doubled.frequencies()))
    weight_err = np.max(np.abs(summed.weights() - doubled.weights()))
    return float(max(freq_err, weight_err)), tuple(summed.frequencies())


def guarded_frequencies(rng: np.random.Generator, samples: int, f_s: float = 1.0) -> np.ndarray:
    """Draw frequencies with f * delta_t in (0.01, 0.49) u (0.51, 0.99)."""
    width = (_BAND_GAP_LO - _BAND_LO) + (_BAND_HI - _BAND_GAP_HI)
    u = rng.uniform(0.0, width, size=samples)
    low = u < (_BAND_GAP_LO - _BAND_LO)
    scaled = np.where(low, _BAND_LO + u, _BAND_GAP_HI + (u - (_BAND_GAP_LO - _BAND_LO)))
    return scaled * f_s


def run_identity_suite(seed: int, samples: int, f_s: float = 1.0) -> list[IdentityReport]:
    """Evaluate every identity at deterministic guarded random frequencies."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    delta_t = 1.0 / f_s
    reports = []
    for identity in IdentityId:
        if identity is IdentityId.COMB_DOUBLING:
            residual, freqs = comb_doubling_residual(f_s)
            reports.append(
                IdentityReport(identity, len(freqs), residual, freqs)
            )
            continue
        freqs = guarded_frequencies(rng, samples, f_s)
        if identity in _DOUBLING_CASE:
            res = doubling_residual(_DOUBLING_CASE[identity], freqs, delta_t)
        else:
            res = superposition_residual(identity, freqs, delta_t)
        reports.append(
            IdentityReport(
                identity,
                samples,
                float(np.max(np.abs(res))),
                tuple(float(f) for f in freqs),
            )
        )
    return reports
