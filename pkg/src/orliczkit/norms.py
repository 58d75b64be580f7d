"""Lorentz functionals, Orlicz modulars and the Luxemburg gauge.

Inputs are step functions (see stepfn), for which Lorentz norms and plain
modulars are exact sums.  The modular of an operator image, e.g.
int Phi(op g), mixes exact closed forms with quadrature:

* beyond the support of g the operator equals C * t**(-1/p) exactly and
  the tail integral is transformed to int_0^u Phi(u) u**(-p-1) du, whose
  convergence is decided from the power of Phi near zero;
* near zero the operator may blow up like t**(-1/q);  convergence is
  decided from the growth power of Phi at infinity;
* divergent integrals are reported as math.inf rather than approximated.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

__all__ = ["lorentz_norm", "modular", "gauge_norm", "modular_of_operator"]


def lorentz_norm(f, p, r, form="primary"):
    """Lorentz functional of a step function.

    form='primary':       ((r/p) int_0^oo (t**(1/p) f*(t))**r dt/t)**(1/r)
    form='distribution':  (r int_0^oo m_f(s)**(r/p) s**(r-1) ds)**(1/r)
    r = math.inf:         sup_t t**(1/p) f*(t)
    """
    if p <= 0:
        raise ValueError("p must be positive")
    star = f.rearrangement()
    if not len(star.breaks):
        return 0.0
    if math.isinf(r):
        # t**(1/p) increases, f* is constant on pieces: sup at right ends
        return float(np.max(star.breaks ** (1.0 / p) * star.values))
    if r <= 0:
        raise ValueError("r must be positive")
    if form == "primary":
        val = (r / p) * star.power_integral(theta=r, a=r / p)
    elif form == "distribution":
        val = r * f.distribution_step().power_integral(theta=r / p, a=r)
    else:
        raise ValueError("form must be 'primary' or 'distribution'")
    return val ** (1.0 / r)


def modular(young, f, scale=1.0):
    """int Phi(scale * f), exact for a step function f."""
    total = 0.0
    prev = 0.0
    for b, v in zip(f.breaks, f.values):
        if v > 0:
            term = young(scale * v)
            if math.isinf(term):
                return math.inf
            total += term * (b - prev)
        prev = b
    return total


def gauge_norm(young, f, tol=1e-12, max_iter=200):
    """Luxemburg gauge inf{lam > 0 : int Phi(f/lam) <= 1} by bisection."""
    if not len(f.breaks) or f.sup == 0.0:
        return 0.0

    def mod(lam):
        return modular(young, f, scale=1.0 / lam)

    lo = hi = max(f.sup, 1e-30)
    for _ in range(200):
        if mod(hi) <= 1.0:
            break
        hi *= 2.0
    else:
        raise ArithmeticError("gauge bracket failed (upper)")
    for _ in range(200):
        if mod(lo) > 1.0:
            break
        lo /= 2.0
    else:
        return 0.0  # modular stays below 1 for every positive scale
    llo, lhi = math.log(lo), math.log(hi)
    for _ in range(max_iter):
        if lhi - llo < tol:
            break
        mid = 0.5 * (llo + lhi)
        if mod(math.exp(mid)) > 1.0:
            llo = mid
        else:
            lhi = mid
    return math.exp(lhi)


def _young_head_integral(young, p, u_top):
    """int_0^{u_top} Phi(u) u**(-p-1) du, or math.inf if divergent.

    Divergence happens iff the power of Phi near zero is <= p.  Below the
    pure-power range of Phi the integral is evaluated in closed form.
    """
    c0, p0, _ = young.leading("zero")
    if p0 <= p:
        return math.inf
    # largest u with Phi(u) = c0 u**p0 exactly (pure-power range)
    pieces = getattr(young, "pieces", None)
    nodes = getattr(young, "nodes", None)
    if pieces is not None:
        u_pp = pieces[1].lo if len(pieces) > 1 else math.inf
        if pieces[0].alpha != 0.0:
            u_pp = min(u_pp, 1.0)
    elif nodes is not None:
        u_pp = float(nodes[0])
    else:
        # no exact power range (e.g. exponential type): substitute
        # u = u_top * exp(-x); integrand decays like exp(-(p0-p) x)
        kappa = p0 - p
        x_max = min(60.0 / max(kappa, 1e-3), 600.0)

        def integrand(x):
            u = u_top * math.exp(-x)
            return young(u) * u ** (-p)

        val, _ = quad(integrand, 0.0, x_max, limit=200)
        return val + integrand(x_max) / max(kappa, 1e-3)
    if math.isinf(u_pp):
        u_pp = u_top
    u_c = min(u_pp, u_top)
    exact = c0 * u_c ** (p0 - p) / (p0 - p) if u_c > 0 else 0.0
    if u_c >= u_top:
        return exact
    rest, _ = quad(lambda u: young(u) * u ** (-p - 1.0), u_c, u_top, limit=200)
    return exact + rest


def _blowup_head_integral(young, op, g, q, t_top):
    """int_0^{t_top} Phi(op g(t)) dt when op g(t) ~ t**(-1/q) near zero.

    Divergent iff Phi grows at least like u**q at infinity (power q with
    log exponent >= -1, or faster).  Convergent integrals are computed
    with the substitution t = t_top * exp(-x)."""
    c_inf, p_inf, a_inf = young.leading("inf")
    if p_inf > q or (p_inf == q and a_inf >= -1.0):
        return math.inf
    kappa = 1.0 - p_inf / q  # exponential decay rate of the integrand in x

    def integrand(x):
        t = t_top * math.exp(-x)
        if t <= 0.0:
            return 0.0
        u = op(g, t)
        val = young(u)
        if math.isinf(val) and u > 1.0:
            # Phi(u) overflows alone but Phi(u) * t may not: use the
            # leading power-log behaviour of Phi in log space
            lu = math.log(u)
            logval = math.log(c_inf) + p_inf * lu + a_inf * math.log(lu) if a_inf else \
                math.log(c_inf) + p_inf * lu
            try:
                return math.exp(logval + math.log(t))
            except OverflowError:
                return math.inf
        return val * t

    x_max = min(60.0 * (1.0 + abs(a_inf)) / max(kappa, 1e-3), 600.0)
    val, _ = quad(integrand, 0.0, x_max, limit=200)
    remainder = integrand(x_max) / max(kappa, 1e-3)
    return val + remainder


def modular_of_operator(young, op, g, rel_tol=1e-10):
    """int_0^oo Phi((op g)(t)) dt for a step function g.

    Returns math.inf when the head (t -> 0) or tail (t -> oo) part
    diverges; this is decided analytically from the asymptotic powers, not
    by truncation.
    """
    if not len(g.breaks):
        return 0.0
    T = g.support
    b1 = float(g.breaks[0])

    # tail: op g(t) = C t**(-1/p) exactly for t >= T
    C, p = op.tail_form(g)
    if C > 0.0:
        u_top = C * T ** (-1.0 / p)
        inner = _young_head_integral(young, p, u_top)
        if math.isinf(inner):
            return math.inf
        tail = p * C**p * inner
    else:
        tail = 0.0

    # head: possible blow-up t**(-1/q) as t -> 0
    blow = op.head_blowup(g)
    if blow > 0.0:
        head = _blowup_head_integral(young, op, g, 1.0 / blow, b1)
        if math.isinf(head):
            return math.inf
        lo = b1
    else:
        head = 0.0
        lo = 0.0

    # middle: bounded continuous integrand on [lo, T]
    mid = 0.0
    if T > lo:
        pts = [b for b in g.breaks if lo < b < T]
        mid, _ = quad(
            lambda t: young(op(g, t)),
            lo,
            T,
            points=pts if pts else None,
            limit=max(200, 10 * len(pts) + 50),
        )
    return head + mid + tail
