"""combft: spectra of sampling combs, centered DFT forms, and their cross-checks.

The library covers three layers:

* ``core`` / ``combs``: sampling-function descriptions, symbolic line
  spectra of infinite combs, dense closed-form spectra of one-sided combs,
  and a Cesaro summation oracle that re-derives every closed form from its
  defining series;
* ``transforms``: the ordinary and centered DFT variants (including the
  half-integer-index corrected form for even lengths), direct DTFT
  evaluation, and zero-padded spectral interpolation;
* ``identities`` / ``experiments``: residual evaluators for the algebraic
  relations between the closed forms, and the windowed-signal experiments
  with the principal-value convolution check.
"""
from .core import (
    DEFAULT_SINGULARITY_TOL,
    DenseSpectrum,
    DiscreteSignal,
    FrequencyGrid,
    LineSpectrum,
    SamplingKind,
    SamplingSpec,
    SingularFrequencyError,
    bins_to_hz,
    finite_complex,
    hz_to_bins,
    sinc,
    singularity_guard,
)
from .combs import (
    SeriesSpec,
    SignRule,
    add_line_spectra,
    cesaro_oracle,
    comb_ft_lines,
    comb_time,
    dense_spectrum,
    half_ft,
    half_infinite_series,
    half_reversal_ft,
    half_reversal_series,
    step_ft,
)
from .transforms import (
    DftForm,
    DftResult,
    ParityError,
    dtft_direct,
    inverse,
    odft,
    sdft_corrected,
    sdft_even_legacy,
    sdft_odd,
    sdft_zero_padded,
)
from .identities import (
    IdentityId,
    IdentityReport,
    doubling_residual,
    run_identity_suite,
    superposition_residual,
)
from .experiments import (
    ComparisonMetrics,
    ExperimentConfig,
    ExperimentResult,
    build_rect_even,
    build_rect_ordinary,
    build_rect_step,
    closed_form_step_spectrum,
    compare,
    pv_convolve,
    rect_window_ft,
    run_experiment,
)

__version__ = "0.1.0"
