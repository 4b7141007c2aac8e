import numpy as np
import pytest

from combft.core import FrequencyGrid, SingularFrequencyError
from combft.experiments import (
    ExperimentConfig,
    build_rect_even,
    build_rect_ordinary,
    build_rect_step,
    closed_form_step_spectrum,
    compare,
    pv_convolve,
    pv_nodes,
    rect_window_ft,
    run_experiment,
)
from combft.transforms import dtft_direct, sdft_zero_padded


def brute_force_step_spectrum(n, f_s, f):
    """Independent oracle: direct term-by-term sum over the signed window."""
    dt = 1.0 / f_s
    acc = 0j
    for k in range(-n // 2, n // 2):
        sign = -1.0 if k < 0 else 1.0
        acc += sign * np.exp(-2j * np.pi * f * (k + 0.5) * dt)
    return acc


# -----------------------------
# builders
# -----------------------------
def test_build_rect_even_small():
    sig = build_rect_even(2, 1.0)
    assert np.allclose(sig.positions, [-0.5, 0.5])
    assert np.all(sig.values == 1)


def test_build_rect_even_reference_window():
    sig = build_rect_even(20, 20.0)
    assert len(sig.positions) == 20
    assert sig.positions[0] == pytest.approx(-0.475)  # window spans (-0.5s, 0.5s)
    assert sig.positions[-1] == pytest.approx(0.475)
    assert np.sum(sig.values) == 20


def test_build_rect_step_signs():
    sig = build_rect_step(4, 1.0)
    assert np.allclose(sig.values, [-1, -1, 1, 1])


def test_step_plus_even_is_doubled_positive_half():
    even = build_rect_even(8, 1.0)
    step = build_rect_step(8, 1.0)
    combined = even.values + step.values
    assert np.allclose(combined[:4], 0)
    assert np.allclose(combined[4:], 2)


def test_build_rect_ordinary_positions():
    sig = build_rect_ordinary(3, 1.0)
    assert np.allclose(sig.positions, [0, 1, 2])
    at_zero = dtft_direct(sig, FrequencyGrid(0.0, 1.0, 1)).values[0]
    assert at_zero == pytest.approx(3 + 0j)


def test_ordinary_window_spectrum_magnitude_is_dirichlet():
    n, f_s = 16, 1.0
    grid = FrequencyGrid(start=0.03, step=0.021, count=20)
    spectrum = dtft_direct(build_rect_ordinary(n, f_s), grid)
    f = grid.points()
    dirichlet = np.abs(np.sin(n * np.pi * f / f_s) / np.sin(np.pi * f / f_s))
    assert np.max(np.abs(np.abs(spectrum.values) - dirichlet)) < 1e-10


def test_builders_reject_odd_length():
    with pytest.raises(ValueError):
        build_rect_even(5, 1.0)
    with pytest.raises(ValueError):
        build_rect_step(5, 1.0)


# -----------------------------
# window spectrum
# -----------------------------
def test_window_ft_at_zero_is_duration():
    assert rect_window_ft(20, 20.0, 0.0) == pytest.approx(1.0)


def test_window_ft_first_zero_at_one_bin():
    assert rect_window_ft(20, 20.0, 1.0) == pytest.approx(0.0, abs=1e-15)


def test_window_ft_half_bin():
    assert rect_window_ft(20, 20.0, 0.5) == pytest.approx(2 / np.pi)


# -----------------------------
# closed-form signed-window spectrum
# -----------------------------
def test_closed_form_limit_at_zero_frequency():
    # value scales linearly to 0 as f -> 0
    near = abs(closed_form_step_spectrum(20, 20.0, 1e-6))
    nearer = abs(closed_form_step_spectrum(20, 20.0, 1e-7))
    assert near < 1e-4
    assert nearer == pytest.approx(near / 10, rel=1e-3)


def test_closed_form_reference_value():
    value = closed_form_step_spectrum(20, 20.0, 1.0)
    expected = brute_force_step_spectrum(20, 20.0, 1.0)
    assert value == pytest.approx(expected, abs=1e-10)
    assert value.imag == pytest.approx(-12.784906442999324)


def test_closed_form_matches_direct_sum_everywhere():
    rng = np.random.default_rng(0)
    for f in rng.uniform(0.1, 9.9, 50):
        direct = brute_force_step_spectrum(20, 20.0, f)
        assert abs(closed_form_step_spectrum(20, 20.0, f) - direct) < 1e-10


def test_closed_form_rejects_singular_frequency():
    with pytest.raises(SingularFrequencyError):
        closed_form_step_spectrum(20, 20.0, 20.0)


# -----------------------------
# principal-value convolution
# -----------------------------
def test_pv_nodes_straddle_every_pole():
    nodes = pv_nodes(20.0, 2, 0.01)
    for pole in (-20.0, 0.0, 20.0):
        d = nodes - pole
        below = np.max(d[d < 0])
        above = np.min(d[d > 0])
        assert below == pytest.approx(-0.005)
        assert above == pytest.approx(0.005)


def test_pv_nodes_reject_colliding_step():
    with pytest.raises(ValueError):
        pv_nodes(20.0, 2, 0.3)  # 20/0.3 is not an integer


def test_pv_convolution_vanishes_at_zero_by_symmetry():
    grid = FrequencyGrid(0.0, 1.0, 1)
    pv = pv_convolve(20, 20.0, grid, 25, 0.01)
    assert abs(pv.values[0]) < 1e-10


def test_pv_convolution_tracks_direct_spectrum():
    grid = FrequencyGrid.from_range(-9.5, 9.5, 1.9)
    pv = pv_convolve(20, 20.0, grid, 25, 0.01)
    reference = dtft_direct(build_rect_step(20, 20.0), grid)
    scale = np.max(np.abs(reference.values))
    assert np.max(np.abs(pv.values - reference.values)) < 0.05 * scale


def test_pv_convolution_output_is_purely_imaginary():
    grid = FrequencyGrid.from_range(-9.5, 9.5, 0.5)
    pv = pv_convolve(20, 20.0, grid, 10, 0.05)
    assert np.max(np.abs(pv.values.real)) == 0.0


# -----------------------------
# comparison metrics
# -----------------------------
def test_compare_identical_spectra():
    grid = FrequencyGrid(0.0, 1.0, 8)
    rng = np.random.default_rng(1)
    from combft.core import DenseSpectrum

    x = DenseSpectrum.unmasked(grid, rng.normal(size=8) + 1j * rng.normal(size=8))
    metrics = compare(x, x)
    assert metrics.max_abs_diff == 0.0
    assert metrics.relative_l2 == 0.0
    assert metrics.pearson_correlation == pytest.approx(1.0)
    assert metrics.points_compared == 8


def test_compare_scaled_spectrum():
    grid = FrequencyGrid(0.0, 1.0, 8)
    rng = np.random.default_rng(2)
    from combft.core import DenseSpectrum

    values = rng.normal(size=8) + 1j * rng.normal(size=8)
    x = DenseSpectrum.unmasked(grid, values)
    y = DenseSpectrum.unmasked(grid, 2 * values)
    metrics = compare(x, y)
    assert metrics.pearson_correlation == pytest.approx(1.0)
    assert metrics.relative_l2 == pytest.approx(1.0)


def test_compare_skips_masked_points():
    grid = FrequencyGrid(0.0, 1.0, 4)
    from combft.core import DenseSpectrum

    a = DenseSpectrum(grid, np.array([1, 0, 2, 3], dtype=complex), np.array([False, True, False, False]))
    b = DenseSpectrum.unmasked(grid, np.array([1, 99, 2, 3], dtype=complex))
    metrics = compare(a, b)
    assert metrics.points_compared == 3
    assert metrics.max_abs_diff == 0.0


def test_compare_rejects_grid_mismatch():
    from combft.core import DenseSpectrum

    a = DenseSpectrum.unmasked(FrequencyGrid(0.0, 1.0, 4), np.zeros(4, dtype=complex))
    b = DenseSpectrum.unmasked(FrequencyGrid(0.0, 2.0, 4), np.zeros(4, dtype=complex))
    with pytest.raises(ValueError):
        compare(a, b)


# -----------------------------
# experiment driver
# -----------------------------
def test_fig6_real_and_imaginary_parts_split_cleanly():
    result = run_experiment("fig6", ExperimentConfig())
    even = result.series["even_rect_dtft"].values
    step = result.series["step_rect_dtft"].values
    assert np.max(np.abs(step.real)) < 1e-9 * np.max(np.abs(step.imag))
    assert np.max(np.abs(even.imag)) < 1e-9 * np.max(np.abs(even.real))


def test_fig6_step_spectrum_is_oddly_symmetric():
    result = run_experiment("fig6", ExperimentConfig())
    im = result.series["step_rect_dtft"].values.imag
    assert np.max(np.abs(im + im[::-1])) < 1e-10


def test_fig6_rejects_odd_window_length():
    with pytest.raises(ValueError):
        run_experiment("fig6", ExperimentConfig(n=19))


def test_fig7_metrics_meet_thresholds():
    result = run_experiment("fig7", ExperimentConfig())
    assert result.metrics is not None
    assert result.metrics.pearson_correlation > 0.99
    assert result.metrics.relative_l2 < 0.05
    assert result.series["step_comb_ft"].mask[100]  # pole at f = 0 masked
    assert result.series["pv_convolution"].mask[100]


def test_fig8_superposition_is_exact():
    config = ExperimentConfig()
    result = run_experiment("fig8", config)
    combined = result.series["combined_rect_dtft"].values
    s1 = dtft_direct(build_rect_even(config.n, config.f_s), config.grid).values
    s2 = dtft_direct(build_rect_step(config.n, config.f_s), config.grid).values
    assert np.max(np.abs(combined - (s1 + s2))) < 1e-12


def test_unknown_experiment_rejected():
    with pytest.raises(ValueError):
        run_experiment("fig9", ExperimentConfig())


def test_config_requires_symmetric_grid():
    with pytest.raises(ValueError):
        ExperimentConfig(grid=FrequencyGrid(0.0, 0.1, 11))


# -----------------------------
# cross-route consistency
# -----------------------------
def test_spectrum_oracle_chain_agrees():
    # direct DTFT, closed form, and zero-padded transform all coincide
    n, f_s = 20, 20.0
    zp = sdft_zero_padded(build_rect_step(n, f_s).values, 10, sample_rate=f_s)
    direct = dtft_direct(build_rect_step(n, f_s), zp.grid)
    f = zp.grid.points()
    good = np.abs(np.sin(np.pi * f / f_s)) > 1e-9
    closed = closed_form_step_spectrum(n, f_s, f[good])
    assert np.max(np.abs(zp.values - direct.values)) < 1e-10
    assert np.max(np.abs(closed - direct.values[good])) < 1e-10


def test_step_spectrum_inherits_comb_periodicity():
    sig = build_rect_step(20, 20.0)
    base = FrequencyGrid(0.7, 0.093, 100)
    shifted = FrequencyGrid(0.7 + 40.0, 0.093, 100)
    a = dtft_direct(sig, base).values
    b = dtft_direct(sig, shifted).values
    assert np.max(np.abs(a - b)) < 1e-10


def test_convergence_ladder_strictly_improves():
    grid = FrequencyGrid.from_range(-9.5, 9.5, 0.5)
    reference = dtft_direct(build_rect_step(20, 20.0), grid)
    errors = []
    for k, h in [(25, 0.01), (50, 0.005), (100, 0.0025)]:
        pv = pv_convolve(20, 20.0, grid, k, h)
        errors.append(compare(pv, reference).relative_l2)
    assert errors[0] > errors[1] > errors[2]
