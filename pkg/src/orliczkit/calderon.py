"""Averaging operators of Hardy type acting on step functions.

For a nonnegative step function g the following operators are evaluated in
closed form (the integrals of powers against power weights are exact on
each piece):

    head(p, r):   (t**(-r/p) * int_0^t g(s)**r s**(r/p-1) ds)**(1/r)
    tail(q, r):   (t**(-r/q) * int_t^oo g(s)**r s**(r/q-1) ds)**(1/r)
    average:      (1/t) int_0^t g            (= head(1, 1))
    calderon(q,r): average + tail(q, r)
    joint(p0,r0,p1,r1): head(p0, r0) + tail(p1, r1)

All of these map nonincreasing functions to continuous nonincreasing
functions, so level sets are intervals and distribution functions can be
found by bisection.  Beyond the support of g the head part equals
C * t**(-1/p) exactly, which downstream modules use for analytic tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .stepfn import StepFunction

__all__ = [
    "HardyHead",
    "HardyTail",
    "Average",
    "CalderonSum",
    "JointHardy",
    "distribution_of",
    "sandwich_hardy_head",
    "sandwich_calderon",
    "tail_reduction_bound",
]


def _scaled_root(val, t, a, r):
    """(t**(-a) * val)**(1/r), evaluated in logs when the plain product
    would overflow or underflow a float."""
    if val == 0.0:
        return 0.0
    if math.isinf(val):
        return math.inf
    prod = t ** (-a) * val
    if 1e-300 < prod < 1e300:
        return prod ** (1.0 / r)
    return math.exp((math.log(val) - a * math.log(t)) / r)


@dataclass(frozen=True)
class HardyHead:
    p: float
    r: float

    def __call__(self, g, t):
        t = float(t)
        if t <= 0:
            raise ValueError("t must be positive")
        a = self.r / self.p
        val = g.power_integral(theta=self.r, a=a, hi=t)
        return _scaled_root(val, t, a, self.r)

    def tail_form(self, g):
        """(C, p) with op(t) = C * t**(-1/p) exactly for t >= supp g."""
        a = self.r / self.p
        return (g.power_integral(theta=self.r, a=a) ** (1.0 / self.r), self.p)

    def head_blowup(self, g):
        return 0.0  # bounded near zero: value (p/r)**(1/r) * g(0+)


@dataclass(frozen=True)
class HardyTail:
    q: float
    r: float

    def __call__(self, g, t):
        t = float(t)
        if t <= 0:
            raise ValueError("t must be positive")
        a = self.r / self.q
        val = g.power_integral(theta=self.r, a=a, lo=t)
        return _scaled_root(val, t, a, self.r)

    def tail_form(self, g):
        return (0.0, 1.0)  # vanishes beyond the support

    def head_blowup(self, g):
        return 1.0 / self.q if g.integral() > 0 else 0.0


@dataclass(frozen=True)
class Average:
    def __call__(self, g, t):
        return HardyHead(1.0, 1.0)(g, t)

    def tail_form(self, g):
        return (g.integral(), 1.0)

    def head_blowup(self, g):
        return 0.0


@dataclass(frozen=True)
class CalderonSum:
    q: float
    r: float

    def __call__(self, g, t):
        return Average()(g, t) + HardyTail(self.q, self.r)(g, t)

    def tail_form(self, g):
        return (g.integral(), 1.0)

    def head_blowup(self, g):
        return HardyTail(self.q, self.r).head_blowup(g)


@dataclass(frozen=True)
class JointHardy:
    p0: float
    r0: float
    p1: float
    r1: float

    def __call__(self, g, t):
        return HardyHead(self.p0, self.r0)(g, t) + HardyTail(self.p1, self.r1)(g, t)

    def tail_form(self, g):
        return HardyHead(self.p0, self.r0).tail_form(g)

    def head_blowup(self, g):
        return HardyTail(self.p1, self.r1).head_blowup(g)


def distribution_of(op, g, level, iters=60):
    """Measure of {op g > level} for nonincreasing step g.

    op g is continuous and nonincreasing, so the set is an interval
    (0, m); m is located by bisection in log t on the bracket
    [supp(g)*1e-9, supp(g)*1e9].
    """
    level = float(level)
    if level < 0:
        raise ValueError("level must be nonnegative")
    T = g.support
    if T == 0.0:
        return 0.0
    lo, hi = T * 1e-9, T * 1e9
    if op(g, lo) <= level:
        # the level may only be exceeded in the t -> 0 blow-up range
        if op.head_blowup(g) == 0.0:
            return 0.0
        while lo > 1e-290 and op(g, lo) <= level:
            hi = lo
            lo *= 1e-30
        if op(g, lo) <= level:
            return 0.0
    if op(g, hi) > level:
        # beyond the support op g = C t**(-1/p) exactly, so the level set
        # extends to (0, (C/level)**p)
        if level == 0.0:
            return math.inf
        C, p = op.tail_form(g)
        if C == 0.0:
            return math.inf
        m = (C / level) ** p
        return m if m >= T else math.inf
    llo, lhi = math.log(lo), math.log(hi)
    for _ in range(iters):
        mid = 0.5 * (llo + lhi)
        if op(g, math.exp(mid)) > level:
            llo = mid
        else:
            lhi = mid
    return math.exp(0.5 * (llo + lhi))


def sandwich_hardy_head(p, r, g, t):
    """Two-sided bound for the distribution of head(p, r) g at level t.

    Returns (lower, mid, upper) with

        lower = p**(p/r) * M(t)**(p/r)
        mid   = t**p * m_{head g}(t)
        upper = 2**(2p+1) * p**(p/r) * M(t/beta)**(p/r)

    where M(x) = int_x^oo m_g(s)**(r/p) s**(r-1) ds and
    beta = 2**(3-1/r) * (p/r)**(1/r).
    """
    m = g.distribution_step()
    beta = 2.0 ** (3.0 - 1.0 / r) * (p / r) ** (1.0 / r)

    def mom(x):
        return m.power_integral(theta=r / p, a=r, lo=x)

    lower = p ** (p / r) * mom(t) ** (p / r)
    mid = t**p * distribution_of(HardyHead(p, r), g, t)
    upper = 2.0 ** (2.0 * p + 1.0) * p ** (p / r) * mom(t / beta) ** (p / r)
    return lower, mid, upper


def sandwich_calderon(q, r, g, t):
    """Two-sided bound for the distribution of calderon(q, r) g at level t.

    Returns (lower, mid, upper) with

        lower = [2**q (1 + (r/q)**(q/r))]**(-1)
                * [A1(t)/t + (A2(t))**(q/r) / t**q]
        mid   = m_{S g}(t)
        upper = E * [(beta/t) A1(t/beta) + (beta/t)**q (A2(t/beta))**(q/r)]

    where A1(x) = int_x^oo m_g, A2(x) = int_0^x m_g(s)**(r/q) s**(r-1) ds,
    beta = 2**(3-1/r) (1 + (q'/r)**(1/r)) and
    E = 2 max[1, q**(q/r) (((q'/r')**(1/r') + 1) / ((q'/r)**(1/r) + 1))**q]
    (the r' factor is 1 when r = 1).
    """
    m = g.distribution_step()
    qp = q / (q - 1.0)
    beta = 2.0 ** (3.0 - 1.0 / r) * (1.0 + (qp / r) ** (1.0 / r))
    if r > 1.0:
        rp = r / (r - 1.0)
        top = (qp / rp) ** (1.0 / rp) + 1.0
    else:
        top = 2.0
    E = 2.0 * max(1.0, q ** (q / r) * (top / ((qp / r) ** (1.0 / r) + 1.0)) ** q)
    c0 = 1.0 / (2.0**q * (1.0 + (r / q) ** (q / r)))

    def a1(x):
        return m.power_integral(theta=1.0, a=1.0, lo=x)

    def a2(x):
        return m.power_integral(theta=r / q, a=r, hi=x)

    lower = c0 * (a1(t) / t + a2(t) ** (q / r) / t**q)
    mid = distribution_of(CalderonSum(q, r), g, t)
    upper = E * ((beta / t) * a1(t / beta) + (beta / t) ** q * a2(t / beta) ** (q / r))
    return lower, mid, upper


def tail_reduction_bound(q, r, g, t):
    """For r >= q: tail(q, r) g(t) <= (q/r)**(1/r) tail(q, q) g(2**(q/r-1) t).

    Returns (lhs, rhs); at r = q the two sides coincide exactly.
    """
    if r < q:
        raise ValueError("requires r >= q")
    lhs = HardyTail(q, r)(g, t)
    rhs = (q / r) ** (1.0 / r) * HardyTail(q, q)(g, 2.0 ** (q / r - 1.0) * t)
    return lhs, rhs
