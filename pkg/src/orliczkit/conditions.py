"""Integral growth conditions between pairs of Young functions.

Each checker decides whether a supremum of the form

    sup_t  (inner integral(s) of Phi1/phi1)  /  (or times)  Phi2-term

is finite, searching the free scale constant over a dyadic grid.  The
verdict is one of:

* holds: with the certified constant (the supremum), the scale at which it
  was certified, and the argmax location;
* inner divergence: an inner integral is infinite for every cutoff; the
  growth rate of truncations is fitted and reported;
* sup divergence: the inner integrals are finite but the supremand grows
  without bound at one end; the growth is fitted against t**g or
  (log t)**g.

Integrands are asymptotically power-log, so convergence at the ends is
decided analytically from the leading exponents; values are computed on a
dense log grid with a per-segment power rule (exact on pure powers).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

__all__ = [
    "ConditionReport",
    "sup_search",
    "check_zs_lower",
    "check_zs_upper",
    "check_average",
    "check_cianchi_lower",
    "check_cianchi_upper",
    "check_stepanov_pair",
    "check_theorem_joint",
]

SCALE_CANDIDATES = [2.0**k for k in range(0, 21)] + [2.0**k for k in range(-1, -7, -1)]

_SCAN_LO, _SCAN_HI = 1e-8, 1e8          # reported sup is searched here
_EXT_LO, _EXT_HI = 1e-24, 1e24          # divergence classification range
_GRID_LO, _GRID_HI = 1e-32, 1e32        # dense integrand grid


# ---------------------------------------------------------------------------
# dense-grid integration with a power rule per segment


def _segment_integrals(grid, vals):
    """Integral over each grid segment, modelling the integrand as a pure
    power between nodes (exact for power integrands); trapezoid fallback
    where values vanish or are not finite."""
    y0, y1 = grid[:-1], grid[1:]
    f0, f1 = vals[:-1], vals[1:]
    out = np.zeros_like(y0)
    ok = (f0 > 0) & (f1 > 0) & np.isfinite(f0) & np.isfinite(f1)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        a = np.where(ok, np.log(np.where(ok, f1 / f0, 1.0)) / np.log(y1 / y0), 0.0)
        ap1 = a + 1.0
        ratio = y1 / y0
        power = np.where(np.abs(ap1) > 1e-12, (ratio**ap1 - 1.0) / np.where(ap1 != 0, ap1, 1.0), np.log(ratio))
        out[ok] = (f0 * y0 * power)[ok]
    trap = ~ok & np.isfinite(f0) & np.isfinite(f1)
    out[trap] = (0.5 * (f0 + f1) * (y1 - y0))[trap]
    out[~np.isfinite(out)] = np.inf
    return out


class _GridIntegrand:
    """Cumulative integrals of a positive integrand on a dense log grid,
    with power extrapolation beyond both ends."""

    def __init__(self, func, per_decade=80, lo=_GRID_LO, hi=_GRID_HI):
        decades = math.log10(hi / lo)
        self.grid = np.geomspace(lo, hi, int(decades * per_decade) + 1)
        vals = np.empty_like(self.grid)
        for i, y in enumerate(self.grid):
            try:
                vals[i] = float(func(y))
            except OverflowError:
                vals[i] = math.inf
        vals[~np.isfinite(vals)] = np.inf
        self.vals = vals
        self.seg = _segment_integrals(self.grid, vals)
        with np.errstate(invalid="ignore"):
            self.cum = np.concatenate(([0.0], np.cumsum(self.seg)))
            # reverse cumulative, summed from the top to avoid cancellation
            self.revcum = np.concatenate((np.cumsum(self.seg[::-1])[::-1], [0.0]))
        # boundary log-log slopes
        self.a0 = self._slope(0)
        self.a1 = self._slope(-1)

    def _slope(self, end):
        v = self.vals
        g = self.grid
        if end == 0:
            i = np.argmax((v > 0) & np.isfinite(v))
            j = i + 1
            while j < len(v) and not (v[j] > 0 and np.isfinite(v[j])):
                j += 1
            if j >= len(v):
                return 0.0
            return math.log(v[j] / v[i]) / math.log(g[j] / g[i])
        i = len(v) - 1
        while i >= 0 and not (v[i] > 0 and np.isfinite(v[i])):
            i -= 1
        j = i - 1
        while j >= 0 and not (v[j] > 0 and np.isfinite(v[j])):
            j -= 1
        if j < 0:
            return 0.0
        return math.log(v[i] / v[j]) / math.log(g[i] / g[j])

    def _head0(self):
        """int_0^{grid[0]}, assuming convergence (a0 > -1)."""
        if self.vals[0] <= 0:
            return 0.0
        if self.a0 <= -1.0:
            return math.inf
        return self.vals[0] * self.grid[0] / (self.a0 + 1.0)

    def _tail_end(self):
        """int_{grid[-1]}^oo, assuming convergence (a1 < -1)."""
        if self.vals[-1] <= 0:
            return 0.0
        if not np.isfinite(self.vals[-1]) or self.a1 >= -1.0:
            return math.inf
        return self.vals[-1] * self.grid[-1] / (-self.a1 - 1.0)

    def _upto(self, x):
        """int_{grid[0]}^x for x inside the grid."""
        g = self.grid
        if x <= g[0]:
            if self.vals[0] <= 0:
                return 0.0
            return self.vals[0] * g[0] / (self.a0 + 1.0) * ((x / g[0]) ** (self.a0 + 1.0) - 1.0) if self.a0 > -1 else 0.0
        if x >= g[-1]:
            return float(self.cum[-1])
        i = int(np.searchsorted(g, x, side="right")) - 1
        base = float(self.cum[i])
        y0, y1 = g[i], g[i + 1]
        f0, f1 = self.vals[i], self.vals[i + 1]
        if f0 <= 0 or f1 <= 0 or not np.isfinite(f1):
            return base + 0.5 * (max(f0, 0.0) + max(f1 if np.isfinite(f1) else f0, 0.0)) * (x - y0)
        a = math.log(f1 / f0) / math.log(y1 / y0)
        if abs(a + 1.0) > 1e-12:
            part = f0 * y0 * ((x / y0) ** (a + 1.0) - 1.0) / (a + 1.0)
        else:
            part = f0 * y0 * math.log(x / y0)
        return base + part

    def head(self, x):
        """int_0^x of the integrand."""
        h0 = self._head0()
        if math.isinf(h0):
            return math.inf
        return h0 + self._upto(x)

    def tail(self, x):
        """int_x^oo of the integrand."""
        end = self._tail_end()
        if math.isinf(end):
            return math.inf
        g = self.grid
        if x >= g[-1]:
            return self.vals[-1] * g[-1] / (-self.a1 - 1.0) * (x / g[-1]) ** (self.a1 + 1.0) if self.vals[-1] > 0 else 0.0
        if x <= g[0]:
            # integrand assumed integrable below the grid only if a0 > -1
            below = self._head0() - self._upto(x) if np.isfinite(self._head0()) else 0.0
            return float(self.revcum[0]) + end + max(below, 0.0)
        i = int(np.searchsorted(g, x, side="right")) - 1
        y0, y1 = g[i], g[i + 1]
        f0, f1 = self.vals[i], self.vals[i + 1]
        if f0 > 0 and f1 > 0 and np.isfinite(f0) and np.isfinite(f1):
            a = math.log(f1 / f0) / math.log(y1 / y0)
            if abs(a + 1.0) > 1e-12:
                part = f0 * y0 * ((y1 / y0) ** (a + 1.0) - (x / y0) ** (a + 1.0)) / (a + 1.0)
            else:
                part = f0 * y0 * math.log(y1 / x)
        else:
            fa = f0 if np.isfinite(f0) else 0.0
            fb = f1 if np.isfinite(f1) else 0.0
            part = 0.5 * (fa + fb) * (y1 - x)
        return part + float(self.revcum[i + 1]) + end

    def truncated(self, lo, hi):
        return self._upto(hi) - self._upto(lo)


# ---------------------------------------------------------------------------
# convergence of power-log integrals from leading exponents


def _tail_converges(a, b):
    """int^oo y**a (log y)**b dy < oo ?"""
    return a < -1.0 or (a == -1.0 and b < -1.0)


def _head_converges(a):
    """int_0 y**a dy < oo ? (integrands are pure powers near zero)"""
    return a > -1.0


def _fit_rate(xs, vals, toward="inf"):
    """Fit the growth of truncated divergent integrals.

    Returns (rate_type, exponent, residual): 'power' when values grow like
    X**g, else 'log' with values ~ (log X)**g fitted through decade
    differences (offset-insensitive)."""
    xs = np.asarray(xs, dtype=float)
    vals = np.asarray(vals, dtype=float)
    good = np.isfinite(vals) & (vals > 0)
    xs, vals = xs[good], vals[good]
    if len(xs) < 3:
        return ("unknown", math.nan, math.nan)
    lx = np.log(xs) if toward == "inf" else np.log(1.0 / xs)
    coef, res = np.polyfit(lx, np.log(vals), 1, full=False), None
    slope = float(coef[0])
    pred = np.polyval(coef, lx)
    res_pow = float(np.sqrt(np.mean((pred - np.log(vals)) ** 2)))
    if slope >= 0.2:
        return ("power", slope, res_pow)
    # fit vals ~ A + B (log X)**g directly (offset-insensitive)
    try:
        from scipy.optimize import curve_fit

        def model(x, A, B, g):
            return A + B * np.power(x, g)

        popt, _ = curve_fit(
            model, lx, vals, p0=(0.0, vals[-1] / lx[-1] ** 0.5, 0.5),
            bounds=([-np.inf, 1e-12, 0.01], [np.inf, np.inf, 5.0]), maxfev=20000,
        )
        gamma = float(popt[2])
        res2 = float(np.sqrt(np.mean((model(lx, *popt) - vals) ** 2)) / max(vals[-1], 1e-300))
        return ("log", gamma, res2)
    except Exception:
        diffs = np.diff(vals)
        mids = 0.5 * (lx[1:] + lx[:-1])
        good = diffs > 0
        if good.sum() < 2:
            return ("log", 0.0, res_pow)
        c2 = np.polyfit(np.log(mids[good]), np.log(diffs[good]), 1)
        return ("log", 1.0 + float(c2[0]), res_pow)


# ---------------------------------------------------------------------------
# supremum scan with divergence classification at the ends


def sup_search(F, tmin=_SCAN_LO, tmax=_SCAN_HI, per_decade=33, ext=(_EXT_LO, _EXT_HI)):
    """Scan sup_t F(t) on a log grid, with growth classification.

    F is evaluated on [tmin, tmax] (per_decade nodes per decade) for the
    reported supremum and on the wider ext range to distinguish a genuine
    plateau from slow unbounded growth at either end.

    Returns a dict with keys sup, argmax, divergent, side, rate_type,
    rate, residual.
    """
    n = int(math.log10(tmax / tmin) * per_decade) + 1
    grid = np.geomspace(tmin, tmax, n)
    ext_grid = np.geomspace(ext[0], ext[1], int(math.log10(ext[1] / ext[0]) * 17) + 1)
    full = np.unique(np.concatenate((grid, ext_grid)))
    vals = np.array([float(F(t)) for t in full])
    finite = np.isfinite(vals)
    if not np.any(finite & (vals > 0)):
        return {"sup": 0.0, "argmax": math.nan, "divergent": False,
                "side": None, "rate_type": None, "rate": None, "residual": None}
    in_scan = (full >= tmin) & (full <= tmax) & finite
    scan_vals = np.where(in_scan, vals, -np.inf)
    i_max = int(np.argmax(scan_vals))
    sup, argmax = float(vals[i_max]), float(full[i_max])
    curve = list(zip(full[in_scan].tolist(), vals[in_scan].tolist()))

    def _edge(side):
        # growth analysis toward one end of the finite extended range
        idx = np.where(finite)[0]
        if side == "top":
            sel = idx[full[idx] >= tmax / 10.0]
            ts = full[sel]
        else:
            sel = idx[full[idx] <= tmin * 10.0]
            ts = full[sel]
        vs = vals[sel]
        pos = vs > 0
        ts, vs = ts[pos], vs[pos]
        if len(ts) < 8:
            return None
        if side == "bottom":
            ts, vs = ts[::-1], vs[::-1]
            x = np.log(1.0 / ts)
        else:
            x = np.log(ts)
        # use the outermost six decades
        keep = x >= x[-1] - 6.0 * math.log(10.0)
        x, vs = x[keep], vs[keep]
        if len(x) < 8:
            return None
        slope = float(np.polyfit(x, np.log(vs), 1)[0])
        if slope > 0.02:
            return ("power", slope, 0.0)
        # log-growth: monotone over last 3 decades and visibly increasing
        last3 = x >= x[-1] - 3.0 * math.log(10.0)
        v3 = vs[last3]
        monotone = np.all(np.diff(v3) >= -1e-12 * np.abs(v3[:-1]))
        ratio = v3[-1] / v3[0] if v3[0] > 0 else math.inf
        llx = np.log(np.maximum(x, 1e-9))
        gamma = float(np.polyfit(llx, np.log(vs), 1)[0])
        if monotone and ratio > 1.02 and gamma > 0.1:
            resid = float(np.sqrt(np.mean((np.polyval(np.polyfit(llx, np.log(vs), 1), llx) - np.log(vs)) ** 2)))
            return ("log", gamma, resid)
        return None

    for side in ("top", "bottom"):
        hit = _edge(side)
        if hit is not None:
            rate_type, rate, resid = hit
            return {"sup": sup, "argmax": argmax, "divergent": True, "side": side,
                    "rate_type": rate_type, "rate": rate, "residual": resid,
                    "curve": curve}
    # golden-section refinement around the argmax
    if 0 < i_max < len(full) - 1:
        lo, hi = math.log(full[i_max - 1]), math.log(full[i_max + 1])
        phi = (math.sqrt(5.0) - 1.0) / 2.0
        a, b = lo, hi
        c, d = b - phi * (b - a), a + phi * (b - a)
        fc, fd = F(math.exp(c)), F(math.exp(d))
        for _ in range(40):
            if fc >= fd:
                b, d, fd = d, c, fc
                c = b - phi * (b - a)
                fc = F(math.exp(c))
            else:
                a, c, fc = c, d, fd
                d = a + phi * (b - a)
                fd = F(math.exp(d))
        cand = max(fc, fd)
        if np.isfinite(cand) and cand > sup:
            sup = float(cand)
            argmax = math.exp(0.5 * (a + b))
    return {"sup": sup, "argmax": argmax, "divergent": False, "side": None,
            "rate_type": None, "rate": None, "residual": None, "curve": curve}


# ---------------------------------------------------------------------------
# reports


@dataclass
class ConditionReport:
    name: str
    holds: bool
    mode: str | None = None          # None | 'inner-divergence' | 'sup-divergence'
    constant: float | None = None    # certified sup (A)
    scale: float | None = None       # certified scale (B, D, L, ...)
    argmax: float | None = None
    rate_type: str | None = None
    rate: float | None = None
    residual: float | None = None
    notes: str = ""
    parts: list = field(default_factory=list)
    curve: list = field(default_factory=list)  # (t, F(t)) samples, CSV export

    def to_dict(self):
        d = asdict(self)
        d.pop("curve", None)
        d["parts"] = [p.to_dict() if isinstance(p, ConditionReport) else p for p in self.parts]
        return d


def _search_scales(name, make_F, scales=None, divergence_probe=None):
    """Try scale candidates in order; report the first bounded sup."""
    scales = SCALE_CANDIDATES if scales is None else scales
    last = None
    for s in scales:
        res = sup_search(make_F(s))
        if not res["divergent"]:
            return ConditionReport(
                name=name, holds=True, constant=res["sup"], scale=s, argmax=res["argmax"],
                curve=res["curve"],
            )
        if s == 1.0:
            last = res
    if last is None:
        last = sup_search(make_F(1.0))
    return ConditionReport(
        name=name, holds=False, mode="sup-divergence",
        rate_type=last["rate_type"], rate=last["rate"], residual=last["residual"],
        notes=f"grows at the {last['side']} end", curve=last["curve"],
    )


def _inner_divergence(name, gi, end, base=1.0):
    """Report for an inner integral divergent at `end` ('inf' or 'zero'),
    certified by truncations over three decades-spaced cutoffs."""
    if end == "inf":
        cutoffs = [10.0**k for k in range(3, 10)]
        vals = [gi.truncated(base, X) for X in cutoffs]
        rt, rate, res = _fit_rate(cutoffs, vals, toward="inf")
    else:
        cutoffs = [10.0**-k for k in range(3, 10)]
        vals = [gi.truncated(eps, base) for eps in cutoffs]
        rt, rate, res = _fit_rate(cutoffs, vals, toward="zero")
    return ConditionReport(
        name=name, holds=False, mode="inner-divergence",
        rate_type=rt, rate=rate, residual=res,
        notes=f"inner integral diverges at {end}",
        curve=list(zip(cutoffs, vals)),
    )


# ---------------------------------------------------------------------------
# leading-exponent helpers for the concrete integrands


def _phi_over_power_inf(young, q):
    """(a, b) of phi-primitive ratio Phi(y)/y**(q+1) at infinity."""
    c, p, al = young.leading("inf")
    return (p - q - 1.0, al)


def _density_ratio_tail_exponents(young, conj, rpow):
    """(a, b) at infinity of phi(y) * Phi(y)**(-conj) * y**rpow."""
    c, p, al = young.leading("inf")
    if math.isinf(p):
        return (-math.inf, 0.0)  # exponential decay, always integrable
    return (p - 1.0 - p * conj + rpow, al * (1.0 - conj))


def _density_ratio_head_exponent(young, conj, rpow):
    """a at zero of phi(y) * Phi(y)**(-conj) * y**rpow (pure power there)."""
    c, p, _ = young.leading("zero")
    return p - 1.0 - p * conj + rpow


def _density_ratio(young, conj, rpow, scale=1.0):
    """Overflow-safe phi(Sy) * Phi(Sy)**(-conj) * y**rpow, computed in logs."""

    def f(y):
        big = young(scale * y)
        den = young.phi(scale * y)
        if big <= 0.0 or den <= 0.0:
            return 0.0
        if math.isinf(den) or math.isinf(big):
            return 0.0 if conj > 1.0 else math.inf
        lv = math.log(den) - conj * math.log(big) + rpow * math.log(y)
        if lv > 700.0:
            return math.inf
        if lv < -700.0:
            return 0.0
        return math.exp(lv)

    return f


# ---------------------------------------------------------------------------
# checkers


def check_zs_lower(phi1, phi2, p, scales=None):
    """sup_t t**p int_0^t Phi1(s) s**(-p-1) ds / Phi2(B t) over a dyadic
    grid of B; the head integral must converge at zero."""
    c0, b0, _ = phi1.leading("zero")
    integrand = lambda s: phi1(s) * s ** (-p - 1.0)
    gi = _GridIntegrand(integrand)
    if not _head_converges(b0 - p - 1.0):
        return _inner_divergence("zs-lower", gi, "zero")

    def make_F(B):
        def F(t):
            d = phi2(B * t)
            if d <= 0 or math.isinf(d):
                return math.nan
            return t**p * gi.head(t) / d
        return F

    return _search_scales("zs-lower", make_F, scales)


def check_zs_upper(phi1, phi2, q, scales=None):
    """sup_t t**q int_t^oo Phi1(s) s**(-q-1) ds / Phi2(B t)."""
    a, b = _phi_over_power_inf(phi1, q)
    integrand = lambda s: phi1(s) * s ** (-q - 1.0)
    gi = _GridIntegrand(integrand)
    if math.isinf(phi1.leading("inf")[1]) or not _tail_converges(a, b):
        return _inner_divergence("zs-upper", gi, "inf")

    def make_F(B):
        def F(t):
            d = phi2(B * t)
            if d <= 0 or math.isinf(d):
                return math.nan
            return t**q * gi.tail(t) / d
        return F

    return _search_scales("zs-upper", make_F, scales)


def check_average(phi1, phi2, scales=None):
    """Condition for the plain averaging operator: zs-lower with p = 1."""
    rep = check_zs_lower(phi1, phi2, 1.0, scales)
    rep.name = "average"
    return rep


def check_cianchi_lower(phi1, phi2, p, r, head_exponent="p1", scales=None, per_decade=80):
    """For 1 <= r < p, with p1 = p/r and p1' its conjugate:

        sup_x (int_x^oo phi2(D y) Phi2(D y)**(-p1') y**(r p1') dy)**(1/p1')
              * (int_0^x phi1(y) y**(-p) dy)**(1/e)

    where e = p1 (default) or e = p (variant), D over a dyadic grid."""
    if not (1.0 <= r < p):
        raise ValueError("requires 1 <= r < p")
    p1 = p / r
    p1c = p1 / (p1 - 1.0)
    e = p1 if head_exponent == "p1" else p

    tail_int = _GridIntegrand(_density_ratio(phi2, p1c, r * p1c), per_decade=per_decade)
    head_int = _GridIntegrand(lambda y: phi1.phi(y) * y ** (-p), per_decade=per_decade)

    a, b = _density_ratio_tail_exponents(phi2, p1c, r * p1c)
    if not _tail_converges(a, b):
        return _inner_divergence("cianchi-lower", tail_int, "inf")
    c0, b0, _ = phi1.leading("zero")
    if not _head_converges(b0 - 1.0 - p):
        return _inner_divergence("cianchi-lower", head_int, "zero")

    pref = lambda D: D ** (-(r * p1c + 1.0))

    def make_F(D):
        k = pref(D)

        def F(x):
            tl = k * tail_int.tail(D * x)
            hd = head_int.head(x)
            if tl <= 0 or hd <= 0:
                return 0.0
            return tl ** (1.0 / p1c) * hd ** (1.0 / e)
        return F

    return _search_scales("cianchi-lower", make_F, scales)


def check_cianchi_upper(phi1, phi2, q, r, scales=None):
    """For 1 <= r < q, with q1 = q/r and q1' its conjugate:

        sup_t (int_0^t phi2(C y) Phi2(C y)**(-q1') y**(r q1') dy)**(1/q1')
              * (int_t^oo phi1(y) y**(-q) dy)**(1/q1)
    """
    if not (1.0 <= r < q):
        raise ValueError("requires 1 <= r < q")
    q1 = q / r
    q1c = q1 / (q1 - 1.0)

    head_int = _GridIntegrand(_density_ratio(phi2, q1c, r * q1c))
    tail_int = _GridIntegrand(lambda y: phi1.phi(y) * y ** (-q))

    a0 = _density_ratio_head_exponent(phi2, q1c, r * q1c)
    if not _head_converges(a0):
        return _inner_divergence("cianchi-upper", head_int, "zero")
    c, pt, al = phi1.leading("inf")
    if math.isinf(pt) or not _tail_converges(pt - 1.0 - q, al):
        return _inner_divergence("cianchi-upper", tail_int, "inf")

    def make_F(C):
        k = C ** (-(r * q1c + 1.0))

        def F(t):
            hd = k * head_int.head(C * t)
            tl = tail_int.tail(t)
            if hd <= 0 or tl <= 0:
                return 0.0
            return hd ** (1.0 / q1c) * tl ** (1.0 / q1)
        return F

    return _search_scales("cianchi-upper", make_F, scales)


def check_stepanov_pair(phi1, phi2, p, r, scales=None, per_decade=9):
    """Weighted pair of conditions equivalent to the lower-endpoint Hardy
    inequality (p1 = p/r, p1' its conjugate, scale C over a dyadic grid):

      (int_x^oo (y**r - x**r)**p1' phi2(Cy) Phi2(Cy)**(-p1') dy)**(1/p1')
          * (int_0^x phi1(y) y**(-p) dy)**(1/p1)   <= A      and
      (int_x^oo phi2(Cy) Phi2(Cy)**(-p1') dy)**(1/p1')
          * (int_0^x (x**r - y**r)**p1 phi1(y) y**(-p) dy)**(1/p1) <= A
    """
    if not (1.0 <= r < p):
        raise ValueError("requires 1 <= r < p")
    p1 = p / r
    p1c = p1 / (p1 - 1.0)

    # shared dense grid of the unweighted factors
    grid = np.geomspace(_GRID_LO, _GRID_HI, int(64 * 40) + 1)
    ratio1 = np.array([phi1.phi(y) * y ** (-p) for y in grid])

    a, b = _density_ratio_tail_exponents(phi2, p1c, r * p1c)
    if not _tail_converges(a, b):
        gi = _GridIntegrand(_density_ratio(phi2, p1c, r * p1c))
        return _inner_divergence("stepanov-pair", gi, "inf")
    c0, b0, _ = phi1.leading("zero")
    if not _head_converges(b0 - 1.0 - p):
        gi = _GridIntegrand(lambda y: phi1.phi(y) * y ** (-p))
        return _inner_divergence("stepanov-pair", gi, "zero")

    a_plain, _ = _density_ratio_tail_exponents(phi2, p1c, 0.0)

    def _ratio2(C):
        f = _density_ratio(phi2, p1c, 0.0, scale=C)
        return np.array([f(y) for y in grid])

    def weighted_tail(x, ratio2C):
        sel = grid > x
        y = grid[sel]
        if not len(y):
            return 0.0
        w = (y**r - x**r) ** p1c * ratio2C[sel]
        segs = _segment_integrals(y, w)
        # remainder beyond the grid: integrand ~ y**a (log y)**b with a < -1
        rest = w[-1] * y[-1] / (-a - 1.0) if w[-1] > 0 and a < -1.0 else 0.0
        return float(np.sum(segs)) + 0.5 * w[0] * (y[0] - x) + rest

    def plain_tail(x, ratio2C):
        sel = grid > x
        y = grid[sel]
        if not len(y):
            return 0.0
        w = ratio2C[sel]
        segs = _segment_integrals(y, w)
        rest = w[-1] * y[-1] / (-a_plain - 1.0) if w[-1] > 0 and a_plain < -1.0 else 0.0
        return float(np.sum(segs)) + rest

    def weighted_head(x):
        sel = grid < x
        y = grid[sel]
        if not len(y):
            return 0.0
        w = (x**r - y**r) ** p1 * ratio1[sel]
        segs = _segment_integrals(y, w)
        head0 = w[0] * y[0] / (b0 - p) if b0 - p > 0 and w[0] > 0 else 0.0
        return float(np.sum(segs)) + head0

    head_int = _GridIntegrand(lambda y: phi1.phi(y) * y ** (-p))

    def make_F1(C):
        ratio2C = _ratio2(C)

        def F(x):
            tl = weighted_tail(x, ratio2C)
            hd = head_int.head(x)
            return tl ** (1.0 / p1c) * hd ** (1.0 / p1) if tl > 0 and hd > 0 else 0.0
        return F

    def make_F2(C):
        ratio2C = _ratio2(C)

        def F(x):
            tl = plain_tail(x, ratio2C)
            hd = weighted_head(x)
            return tl ** (1.0 / p1c) * hd ** (1.0 / p1) if tl > 0 and hd > 0 else 0.0
        return F

    kw = dict(tmin=1e-6, tmax=1e6, per_decade=per_decade, ext=(1e-12, 1e12))
    for C in scales if scales is not None else SCALE_CANDIDATES:
        r1 = sup_search(make_F1(C), **kw)
        if r1["divergent"]:
            continue
        r2 = sup_search(make_F2(C), **kw)
        if r2["divergent"]:
            continue
        return ConditionReport(
            name="stepanov-pair", holds=True,
            constant=max(r1["sup"], r2["sup"]), scale=C,
            argmax=r1["argmax"] if r1["sup"] >= r2["sup"] else r2["argmax"],
            parts=[
                ConditionReport("stepanov-1", True, constant=r1["sup"], argmax=r1["argmax"]),
                ConditionReport("stepanov-2", True, constant=r2["sup"], argmax=r2["argmax"]),
            ],
        )
    res = sup_search(make_F1(1.0), **kw)
    if not res["divergent"]:
        res = sup_search(make_F2(1.0), **kw)
    return ConditionReport(
        name="stepanov-pair", holds=False, mode="sup-divergence",
        rate_type=res["rate_type"], rate=res["rate"], residual=res["residual"],
    )


def _check_joint_lower(phi1, phi2, p0, r0, scales):
    """Lower-endpoint branch of the joint condition."""
    if r0 >= p0:
        rep = check_zs_lower(phi1, phi2, p0, scales)
        rep.name = "joint-lower"
        return rep
    rho = p0 / r0
    rhoc = rho / (rho - 1.0)
    tail_int = _GridIntegrand(_density_ratio(phi2, rhoc, r0 * rhoc))
    head_int = _GridIntegrand(lambda s: phi1(s) * s ** (-p0 - 1.0))

    a, b = _density_ratio_tail_exponents(phi2, rhoc, r0 * rhoc)
    if not _tail_converges(a, b):
        rep = _inner_divergence("joint-lower", tail_int, "inf")
        return rep
    c0, b0, _ = phi1.leading("zero")
    if not _head_converges(b0 - p0 - 1.0):
        return _inner_divergence("joint-lower", head_int, "zero")

    def make_F(L):
        k = L ** (-(r0 * rhoc + 1.0))

        def F(t):
            tl = k * tail_int.tail(L * t)
            hd = head_int.head(t)
            return tl ** (1.0 / rhoc) * hd ** (1.0 / rho) if tl > 0 and hd > 0 else 0.0
        return F

    return _search_scales("joint-lower", make_F, scales)


def _check_joint_upper(phi1, phi2, p1, r1, scales):
    """Upper-endpoint branch of the joint condition."""
    if r1 >= p1:
        rep = check_zs_upper(phi1, phi2, p1, scales)
        rep.name = "joint-upper"
        return rep
    rho = p1 / r1
    rhoc = rho / (rho - 1.0)
    head_int = _GridIntegrand(_density_ratio(phi2, rhoc, r1 * rhoc))
    tail_int = _GridIntegrand(lambda s: phi1(s) * s ** (-p1 - 1.0))

    a0 = _density_ratio_head_exponent(phi2, rhoc, r1 * rhoc)
    if not _head_converges(a0):
        return _inner_divergence("joint-upper", head_int, "zero")
    c, pt, al = phi1.leading("inf")
    if math.isinf(pt) or not _tail_converges(pt - p1 - 1.0, al):
        return _inner_divergence("joint-upper", tail_int, "inf")

    def make_F(L):
        k = L ** (-(r1 * rhoc + 1.0))

        def F(t):
            hd = k * head_int.head(L * t)
            tl = tail_int.tail(t)
            return hd ** (1.0 / rhoc) * tl ** (1.0 / rho) if hd > 0 and tl > 0 else 0.0
        return F

    return _search_scales("joint-upper", make_F, scales)


def check_theorem_joint(phi1, phi2, p0, r0, p1, r1, scales=None):
    """Two-endpoint condition governing the joint operator
    head(p0, r0) + tail(p1, r1): indicator-branched at each endpoint
    (plain ratio form when r >= p at that endpoint, conjugate-exponent
    product form otherwise).  Holds iff both endpoints hold."""
    if not (p0 < p1):
        raise ValueError("requires p0 < p1")
    low = _check_joint_lower(phi1, phi2, p0, r0, scales)
    up = _check_joint_upper(phi1, phi2, p1, r1, scales)
    holds = low.holds and up.holds
    rep = ConditionReport(
        name="joint",
        holds=holds,
        mode=None if holds else (low.mode or up.mode),
        constant=max(low.constant or 0.0, up.constant or 0.0) if holds else None,
        scale=None,
        parts=[low, up],
    )
    if not holds:
        bad = low if not low.holds else up
        rep.rate_type, rep.rate, rep.residual = bad.rate_type, bad.rate, bad.residual
        rep.notes = f"{bad.name}: {bad.notes}"
    return rep
