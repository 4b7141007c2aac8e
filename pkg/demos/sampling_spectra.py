"""Gallery of sampling functions and their spectra.

Top row: delta trains in time (stems carry the +-1 coefficients).
Bottom row: the matching spectra, either symbolic line combs (stems) or the
dense closed forms of the one-sided kinds (curves, singular points masked).
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from combft import FrequencyGrid, SamplingSpec, comb_ft_lines, comb_time, dense_spectrum

OUT = "demos/output"

f_s = 1.0
specs = [
    ("odd comb", SamplingSpec.odd(f_s)),
    ("even comb", SamplingSpec.even(f_s)),
    ("odd reversal", SamplingSpec.odd_reversal(f_s)),
    ("step", SamplingSpec.step(f_s)),
    ("half-infinite case 6", SamplingSpec.half(6, f_s)),
    ("half-reversal case 1", SamplingSpec.half_reversal(1, f_s)),
]

fig, axes = plt.subplots(2, len(specs), figsize=(4 * len(specs), 6))

for col, (label, spec) in enumerate(specs):
    sig = comb_time(spec, -3.2, 3.2)
    ax = axes[0, col]
    ax.stem(sig.positions, sig.values, basefmt=" ")
    ax.set_title(label)
    ax.set_xlabel("t [s]")
    ax.set_ylim(-1.5, 1.5)
    ax.grid(ls=":")

    ax = axes[1, col]
    if spec.kind.value in ("half", "half-reversal", "step"):
        grid = FrequencyGrid.from_range(-2.5, 2.5, 0.01)
        spectrum = dense_spectrum(spec, grid)
        f = spectrum.frequencies()
        ax.plot(f, spectrum.values.real, label="Re")
        ax.plot(f, spectrum.values.imag, label="Im")
        ax.set_ylim(-4, 4)
        ax.legend(fontsize="small")
        n_masked = int(np.sum(spectrum.mask))
        print(f"{label}: dense spectrum, {n_masked} of {grid.count} points masked as singular")
    else:
        lines = comb_ft_lines(spec, truncation=3)
        ax.stem(lines.frequencies(), lines.weights().real, linefmt="C0-", basefmt=" ")
        markerline, *_ = ax.stem(
            lines.frequencies(), lines.weights().imag, linefmt="C1--", basefmt=" "
        )
        markerline.set_marker("x")
        print(f"{label}: line spectrum with period {lines.period}, {len(lines.lines)} lines shown")
    ax.set_xlabel("f [Hz]")
    ax.grid(ls=":")

axes[1, 0].set_ylabel("spectrum")
axes[0, 0].set_ylabel("delta coefficients")
fig.tight_layout()
import os

os.makedirs(OUT, exist_ok=True)
fig.savefig(f"{OUT}/sampling_spectra.png", dpi=130)
print(f"wrote {OUT}/sampling_spectra.png")
