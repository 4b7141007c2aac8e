"""One-sided delta trains: divergent sums, regularized values.

The defining series of a half-infinite comb oscillates forever and never
settles; averaging its partial sums (Cesaro) converges to a finite value,
and that value is exactly what the closed-form cosecant/secant spectra
report.  The plot shows the raw partial sums orbiting the closed-form value
while the running average spirals into it.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from combft import cesaro_oracle, half_ft, half_infinite_series, half_reversal_ft, half_reversal_series

OUT = "demos/output"

delta_t = 1.0
f = 0.17  # f * delta_t, comfortably away from the singular integers

series = half_infinite_series(6, delta_t)
closed = half_ft(6, f, delta_t)

n = np.arange(3000)
increments = np.exp(-2j * np.pi * f * series.positions(n))
partials = np.cumsum(increments)
running_mean = np.cumsum(partials) / np.arange(1, len(partials) + 1)

fig, axes = plt.subplots(1, 2, figsize=(11, 4.5))
ax = axes[0]
ax.plot(partials.real[:300], partials.imag[:300], ".", ms=2, alpha=0.4, label="partial sums")
ax.plot(running_mean.real, running_mean.imag, "-", lw=1, label="running average")
ax.plot(closed.real, closed.imag, "r*", ms=12, label="closed form")
ax.set_xlabel("Re")
ax.set_ylabel("Im")
ax.set_title(f"half-infinite case 6 at f dt = {f}")
ax.legend(fontsize="small")
ax.grid(ls=":")

# convergence rate: O(1/M) for every one-sided kind
ms = np.unique(np.logspace(1.3, 4.7, 30).astype(int))
ax = axes[1]
for label, series_k, closed_k in [
    ("half-infinite 6", half_infinite_series(6, delta_t), half_ft(6, f, delta_t)),
    ("half-infinite 1", half_infinite_series(1, delta_t), half_ft(1, f, delta_t)),
    ("half-reversal 1", half_reversal_series(1, delta_t), half_reversal_ft(1, f, delta_t)),
]:
    errs = [abs(cesaro_oracle(series_k, f, int(m)) - closed_k) for m in ms]
    ax.loglog(ms, errs, ".-", label=label)
ax.loglog(ms, 1.0 / ms, "k--", lw=0.8, label="1/M guide")
ax.set_xlabel("averaged terms M")
ax.set_ylabel("|average - closed form|")
ax.set_title("Cesaro convergence")
ax.legend(fontsize="small")
ax.grid(ls=":", which="both")

fig.tight_layout()
import os

os.makedirs(OUT, exist_ok=True)
fig.savefig(f"{OUT}/one_sided_sums.png", dpi=130)
print(f"closed form: {closed:.6f}")
print(f"average of 10^5 partial sums: {cesaro_oracle(series, f, 10**5):.6f}")
print(f"wrote {OUT}/one_sided_sums.png")
