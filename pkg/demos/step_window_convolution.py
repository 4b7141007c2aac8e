"""The convolution route to a windowed spectrum, end to end.

A signed rectangular window (N step samples) has a purely imaginary DTFT.
The same spectrum must come out of convolving the continuous window's sinc
spectrum with the step comb's cosecant spectrum; the cosecant poles make
that a principal-value integral, handled by symmetric midpoint quadrature.

Panels mirror the classic presentation: (a) window spectrum, (b) comb
spectrum, (c) their PV convolution, (d) the direct DTFT it must reproduce.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from combft import ExperimentConfig, run_experiment

OUT = "demos/output"

config = ExperimentConfig()  # f_s = 20 Hz, N = 20, 0.1-bin grid, K = 25, h = 0.01 bins
result = run_experiment("fig7", config)
f = result.grid.points()

fig, axes = plt.subplots(2, 2, figsize=(11, 7))

panels = [
    ("window spectrum (real)", result.series["window_ft"].values.real, "C0"),
    ("step comb spectrum (imag, pole masked)", result.series["step_comb_ft"].values.imag, "C1"),
    ("PV convolution (imag)", result.series["pv_convolution"].values.imag, "C2"),
    ("direct DTFT of the signed window (imag)", result.series["step_rect_dtft"].values.imag, "C3"),
]
for ax, (title, y, color) in zip(axes.flat, panels):
    ax.plot(f, y, color=color, lw=1)
    ax.set_title(title, fontsize=10)
    ax.set_xlabel("f [Hz]")
    ax.grid(ls=":")

fig.tight_layout()
import os

os.makedirs(OUT, exist_ok=True)
fig.savefig(f"{OUT}/step_window_convolution.png", dpi=130)

m = result.metrics
print(f"convolution vs direct DTFT over {m.points_compared} unmasked points:")
print(f"  max |difference|     = {m.max_abs_diff:.4f}")
print(f"  relative L2 error    = {m.relative_l2:.4%}")
print(f"  Pearson correlation  = {m.pearson_correlation:.6f}")
print(f"wrote {OUT}/step_window_convolution.png")

# refining the quadrature tightens the match monotonically
from combft import build_rect_step, compare, dtft_direct, pv_convolve

reference = dtft_direct(build_rect_step(config.n, config.f_s), config.grid)
print("\nconvergence as the domain doubles and the node spacing halves:")
for k, h in [(25, 0.01), (50, 0.005), (100, 0.0025)]:
    pv = pv_convolve(config.n, config.f_s, config.grid, k, h)
    metrics = compare(pv, reference)
    print(f"  K={k:>3}, h={h:<7}: relative L2 = {metrics.relative_l2:.4%}")
