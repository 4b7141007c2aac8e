"""Numerical audit of the closed-form algebra.

Every relation between the one-sided spectra (pair differences, rate
doubling, comb superpositions) is evaluated at a thousand random guarded
frequencies; residuals at double precision mean the algebra is exact.
"""
from combft import run_identity_suite

reports = run_identity_suite(seed=0, samples=1000)

width = max(len(r.identity_id.value) for r in reports)
print(f"{'identity':<{width}}  samples  max |residual|")
print("-" * (width + 26))
for r in reports:
    print(f"{r.identity_id.value:<{width}}  {r.sample_count:>7}  {r.max_abs_residual:.3e}")

worst = max(r.max_abs_residual for r in reports)
print("-" * (width + 26))
print(f"worst residual: {worst:.3e}  ({'exact to double precision' if worst < 1e-12 else 'FAILED'})")

# residuals depend only on f * delta_t, not on the rate itself
for f_s in (1.0, 20.0, 1000.0):
    r = run_identity_suite(seed=0, samples=200, f_s=f_s)
    print(f"f_s = {f_s:>6.0f} Hz: worst residual {max(x.max_abs_residual for x in r):.3e}")
