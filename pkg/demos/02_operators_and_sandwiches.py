"""Hardy-type operators on decreasing step functions.

head(p, r) g(t) = (t^{-r/p} int_0^t g^r s^{r/p-1} ds)^{1/r}
tail(q, r) g(t) = (t^{-r/q} int_t^oo g^r s^{r/q-1} ds)^{1/r}
S = average + tail  (the generalized Calderon sum)

For step functions these are exact.  The distribution of the image is
bracketed on both sides by integrals of m_g alone (the "sandwich"), which
is what makes level-by-level certification possible.
"""

import numpy as np

from orliczkit import (
    Average,
    CalderonSum,
    HardyHead,
    HardyTail,
    StepFunction,
    distribution_of,
    sandwich_calderon,
    sandwich_hardy_head,
    tail_reduction_bound,
)

chi = StepFunction.indicator(1.0, 1.0)

# on the support the head operator of an indicator is the constant
# (p/r)^{1/r}; beyond the support it decays exactly like t^{-1/p}
H = HardyHead(2.0, 1.0)
print("head(2,1) chi:", [round(H(chi, t), 6) for t in (0.25, 1.0, 4.0, 16.0)])

S = CalderonSum(2.0, 1.0)
print("S_{2,1} chi:   ", [round(S(chi, t), 6) for t in (0.01, 0.25, 1.0, 4.0)])
print("  (blows up like t^{-1/q} near 0, decays like 1/t at infinity)")

# exact distribution of the image: m(level) solves H chi = level
print("m_{H chi}(1.0) =", distribution_of(H, chi, 1.0), " (exact: 4)")

# sandwich for the head operator, level t: lower <= t^p m_{Hg}(t) <= upper
rng = np.random.default_rng(1)
g = StepFunction(np.cumsum(rng.lognormal(0, 1, 5)), np.sort(rng.lognormal(0, 1, 5))[::-1])
print("\nrandom decreasing g with 5 steps")
print(" t       lower      t^p m(t)    upper")
for t in np.geomspace(0.1, 10.0, 5):
    lo, mid, up = sandwich_hardy_head(2.0, 1.0, g, t)
    print(f" {t:7.3f} {lo:10.4g} {mid:10.4g} {up:10.4g}")
    assert lo <= mid * (1 + 1e-9) and mid <= up * (1 + 1e-9)

print("\nsame bracket for the Calderon sum S_{2,2}")
for t in np.geomspace(0.1, 10.0, 5):
    lo, mid, up = sandwich_calderon(2.0, 2.0, g, t)
    print(f" {t:7.3f} {lo:10.4g} {mid:10.4g} {up:10.4g}")
    assert lo <= mid * (1 + 1e-9) and mid <= up * (1 + 1e-9)

# for r >= q the tail operator reduces to the r = q case up to a dilation
print("\ntail(2, 3) g(t) <= (2/3)^{1/3} tail(2, 2) g(2^{-1/3} t):")
for t in (0.5, 2.0, 8.0):
    lhs, rhs = tail_reduction_bound(2.0, 3.0, g, t)
    print(f"  t = {t}: {lhs:.6f} <= {rhs:.6f}")
    assert lhs <= rhs * (1 + 1e-9)
