"""Nonnegative step functions with exact rearrangement arithmetic.

A step function is determined by breakpoints 0 < t_1 < ... < t_n and
values a_1, ..., a_n, taking value a_i on (t_{i-1}, t_i] (t_0 = 0) and 0
beyond t_n.  All arithmetic (sums, pointwise min, distribution function,
decreasing rearrangement, maximal function, power moments) is exact in
floating point: no quadrature is involved anywhere in this module.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["StepFunction"]


class StepFunction:
    def __init__(self, breaks, values):
        breaks = np.asarray(breaks, dtype=float)
        values = np.asarray(values, dtype=float)
        if breaks.ndim != 1 or breaks.shape != values.shape:
            raise ValueError("breaks and values must be matching 1-d arrays")
        if len(breaks) and (np.any(np.diff(breaks) <= 0) or breaks[0] <= 0):
            raise ValueError("breaks must be positive and strictly increasing")
        if np.any(values < 0):
            raise ValueError("values must be nonnegative")
        # canonical form: merge equal neighbours, drop trailing zeros
        keep_b, keep_v = [], []
        for b, v in zip(breaks, values):
            if keep_v and v == keep_v[-1]:
                keep_b[-1] = b
            else:
                keep_b.append(b)
                keep_v.append(v)
        while keep_v and keep_v[-1] == 0.0:
            keep_b.pop()
            keep_v.pop()
        self.breaks = np.array(keep_b, dtype=float)
        self.values = np.array(keep_v, dtype=float)

    # -- basics ---------------------------------------------------------

    def __repr__(self):
        parts = ", ".join(f"({b:g}]={v:g}" for b, v in zip(self.breaks, self.values))
        return f"StepFunction[{parts}]"

    def __eq__(self, other):
        return (
            isinstance(other, StepFunction)
            and self.breaks.shape == other.breaks.shape
            and np.array_equal(self.breaks, other.breaks)
            and np.array_equal(self.values, other.values)
        )

    @property
    def support(self):
        """Length of the interval (0, t_n] containing the support."""
        return float(self.breaks[-1]) if len(self.breaks) else 0.0

    @property
    def sup(self):
        return float(self.values.max()) if len(self.values) else 0.0

    def is_decreasing(self):
        return np.all(np.diff(self.values) <= 0) if len(self.values) else True

    def __call__(self, x, side="left"):
        """Value at x.  side='left' uses the (t_{i-1}, t_i] convention
        (left-continuous); side='right' is right-continuous."""
        x = float(x)
        if x <= 0 or not len(self.breaks):
            return 0.0
        which = "left" if side == "left" else "right"
        i = int(np.searchsorted(self.breaks, x, side=which))
        return float(self.values[i]) if i < len(self.values) else 0.0

    # -- pointwise arithmetic --------------------------------------------

    def _merged(self, other):
        breaks = np.union1d(self.breaks, other.breaks)
        va = np.array([self(b) for b in breaks])
        vb = np.array([other(b) for b in breaks])
        return breaks, va, vb

    def _binary(self, other, op):
        if np.isscalar(other):
            other = StepFunction(self.breaks, np.full_like(self.values, float(other)))
        breaks, va, vb = self._merged(other)
        return StepFunction(breaks, op(va, vb))

    def __add__(self, other):
        return self._binary(other, np.add)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: np.maximum(a - b, 0.0))

    def __mul__(self, k):
        return StepFunction(self.breaks, self.values * float(k))

    __rmul__ = __mul__

    def minimum(self, other):
        """Pointwise min; `other` may be a scalar or StepFunction."""
        if np.isscalar(other):
            return StepFunction(self.breaks, np.minimum(self.values, float(other)))
        return self._binary(other, np.minimum)

    def product_integral(self, other):
        """int f*g, exact (Hardy-Littlewood pairing)."""
        breaks, va, vb = self._merged(other)
        widths = np.diff(np.concatenate(([0.0], breaks)))
        return float(np.sum(va * vb * widths))

    # -- integrals --------------------------------------------------------

    def power_integral(self, theta=1.0, a=1.0, lo=0.0, hi=math.inf):
        """int_lo^hi f(s)**theta * s**(a-1) ds, exact.

        With a == 0 the weight is 1/s and pieces integrate to log ratios.
        Requires theta > 0 (pieces with value 0 contribute nothing).
        """
        if not len(self.breaks):
            return 0.0
        prev = np.concatenate(([0.0], self.breaks[:-1]))
        left = np.maximum(prev, lo)
        right = np.minimum(self.breaks, hi)
        good = (right > left) & (self.values > 0)
        if not np.any(good):
            return 0.0
        left, right, vals = left[good], right[good], self.values[good]
        if a <= 0.0 and left[0] <= 0.0:
            return math.inf
        with np.errstate(over="ignore", invalid="ignore"):
            if a == 0.0:
                seg = np.log(right / left)
            else:
                seg = (right**a - left**a) / a
            contrib = vals**theta * seg
        if np.all(np.isfinite(contrib)):
            return float(np.sum(contrib))
        # extreme values or weights: per-piece evaluation in log space
        # (|r**a - l**a| = exp(M) * (1 - exp(-|a| |log(r/l)|)), M the larger)
        logv = theta * np.log(vals)
        if a == 0.0:
            logc = logv + np.log(np.log(right / left))
        else:
            alr = a * np.log(right)
            with np.errstate(divide="ignore"):
                al = np.where(left > 0.0, a * np.log(left), -math.inf)
            m = np.maximum(alr, al)
            logdiff = m + np.log(-np.expm1(-np.abs(alr - al)))
            logc = logv + logdiff - math.log(abs(a))
        with np.errstate(over="ignore"):
            return float(np.sum(np.exp(logc)))

    def integral(self):
        return self.power_integral()

    def integral_upto(self, t):
        return self.power_integral(hi=t)

    # -- rearrangement machinery -----------------------------------------

    def distribution(self, s):
        """m_f(s) = measure of {f > s}."""
        if not len(self.breaks):
            return 0.0
        widths = np.diff(np.concatenate(([0.0], self.breaks)))
        return float(np.sum(widths[self.values > float(s)]))

    def distribution_step(self):
        """The distribution function m_f as a StepFunction of the level s.

        m_f is right-continuous; this returns the step function whose
        integrals against any weight agree with m_f (endpoint convention
        differs only on a null set).
        """
        if not len(self.breaks):
            return StepFunction([], [])
        widths = np.diff(np.concatenate(([0.0], self.breaks)))
        levels = np.unique(self.values[self.values > 0])  # ascending
        meas = [float(np.sum(widths[self.values >= v])) for v in levels]
        return StepFunction(levels, meas)

    def rearrangement(self):
        """Decreasing rearrangement f* as a StepFunction on (0, |supp f|]."""
        if not len(self.breaks):
            return StepFunction([], [])
        widths = np.diff(np.concatenate(([0.0], self.breaks)))
        order = np.argsort(-self.values, kind="stable")
        v = self.values[order]
        w = widths[order]
        pos = v > 0
        if not np.any(pos):
            return StepFunction([], [])
        return StepFunction(np.cumsum(w[pos]), v[pos])

    def rstar(self, t):
        """f*(t), right-continuous (equals inf{s : m_f(s) <= t})."""
        return self.rearrangement()(t, side="right")

    def maximal(self, t):
        """f**(t) = (1/t) int_0^t f*."""
        t = float(t)
        if t <= 0:
            raise ValueError("t must be positive")
        return self.rearrangement().integral_upto(t) / t

    def decompose(self, t):
        """Split f = f0 + f1 at level f*(t): f1 = min(f, f*(t)), f0 = f - f1.

        Then f0* = (f* - f*(t))_+ and f1* = min(f*, f*(t)).
        """
        level = self.rstar(t)
        f1 = self.minimum(level)
        f0 = self - f1
        return f0, f1

    # -- construction helpers ---------------------------------------------

    @staticmethod
    def indicator(length=1.0, height=1.0):
        return StepFunction([float(length)], [float(height)])

    @staticmethod
    def from_samples(t, y, max_pieces=1024):
        """Step function with value y_i on (t_{i-1}, t_i], thinned to at
        most max_pieces pieces (every stride-th sample kept, last kept)."""
        t = np.asarray(t, dtype=float)
        y = np.asarray(y, dtype=float)
        if len(t) != len(y):
            raise ValueError("t and y must have the same length")
        if len(t) > max_pieces:
            stride = int(np.ceil(len(t) / max_pieces))
            idx = np.unique(np.concatenate((np.arange(0, len(t), stride), [len(t) - 1])))
            t, y = t[idx], y[idx]
        return StepFunction(t, y)

    @staticmethod
    def from_callable(func, breaks, point="geometric"):
        """Quantize a callable to a step function on the given breakpoints.

        The value on (a, b] is func at the geometric mean (default), the
        left endpoint ('left'), or the right endpoint ('right')."""
        breaks = np.asarray(breaks, dtype=float)
        prev = np.concatenate(([0.0], breaks[:-1]))
        if point == "geometric":
            lo = np.maximum(prev, breaks * 1e-12)
            # log-space midpoint: the plain product underflows for tiny breaks
            where = np.exp(0.5 * (np.log(lo) + np.log(breaks)))
        elif point == "left":
            where = np.maximum(prev, breaks * 1e-12)
        elif point == "right":
            where = breaks
        else:
            raise ValueError("point must be geometric/left/right")
        vals = np.array([max(float(func(x)), 0.0) for x in where])
        return StepFunction(breaks, vals)
