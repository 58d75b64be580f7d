"""Young functions with piecewise power-logarithm densities.

A Young function is Phi(t) = int_0^t phi(s) ds with phi nonnegative,
nondecreasing, left-continuous and phi(0+) = 0.  The canonical concrete
family here is piecewise "power-log": on each piece the primitive has the
shape

    Phi(t) ~ c * t**p * (log t)**alpha,

with density phi = d/dt of that expression.  Wherever log t <= 0 (t <= 1)
the piece falls back to the pure power c * t**p, so values near zero are
always plain powers.

Pieces are glued continuously: the coefficient c of every piece after the
first is rescaled so that the primitive chains without jumps.  Rescalings
are reported through the module logger.

Also provided: a tabulated variant (log-spaced density samples with
monotone interpolation), used for complementary functions obtained by
inverting the density, and an exponential-type Young function.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass

import numpy as np

logger = logging.getLogger(__name__)

__all__ = [
    "Piece",
    "YoungFunction",
    "TabulatedYoungFunction",
    "ExpYoungFunction",
    "complementary",
    "power_young",
    "load_young",
]


@dataclass(frozen=True)
class Piece:
    """One power-log piece, valid on (lo, hi]."""

    lo: float
    c: float
    p: float
    alpha: float


def _unit_primitive(p, alpha, t):
    """t**p * (log t)**alpha with pure-power fallback for t <= 1."""
    if t <= 0.0:
        return 0.0
    try:
        if alpha == 0.0 or t <= 1.0:
            return t**p
        return t**p * math.log(t) ** alpha
    except OverflowError:
        return math.inf


def _piece_increment(c, p, alpha, a, b):
    """Increase of the piece primitive over (a, b], splitting at t = 1."""
    if b <= a:
        return 0.0
    try:
        if alpha == 0.0 or b <= 1.0:
            return c * (b**p - a**p)
        if a < 1.0:
            # pure power up to 1, power-log beyond
            return c * (1.0 - a**p) + c * b**p * math.log(b) ** alpha
        return c * (b**p * math.log(b) ** alpha - a**p * math.log(a) ** alpha)
    except OverflowError:
        return math.inf


def _piece_density(c, p, alpha, t):
    if t <= 0.0:
        return 0.0
    try:
        if alpha == 0.0 or t <= 1.0:
            return c * p * t ** (p - 1.0)
        lt = math.log(t)
        return c * t ** (p - 1.0) * lt ** (alpha - 1.0) * (p * lt + alpha)
    except OverflowError:
        return math.inf


class YoungFunction:
    """Piecewise power-log Young function.

    Parameters
    ----------
    pieces : sequence of Piece (or (lo, c, p, alpha) tuples)
        Sorted by lo; the first piece must start at lo = 0 and the last
        extends to infinity.  Coefficients of pieces after the first are
        rescaled for continuity of the primitive.
    """

    def __init__(self, pieces):
        pieces = [p if isinstance(p, Piece) else Piece(*p) for p in pieces]
        if not pieces:
            raise ValueError("need at least one piece")
        if pieces[0].lo != 0.0:
            raise ValueError("first piece must start at 0")
        los = [q.lo for q in pieces]
        if any(b <= a for a, b in zip(los, los[1:])):
            raise ValueError("piece boundaries must be strictly increasing")
        for q in pieces:
            if q.c <= 0 or q.p <= 0:
                raise ValueError("pieces need c > 0 and p > 0")
            if q.alpha < 0.0 and q.lo <= 1.0:
                raise ValueError("alpha < 0 requires the piece to start above 1")

        # glue: base[i] = Phi(lo_i); rescale c so the raw primitive chains
        glued = [pieces[0]]
        bases = [0.0]
        for q in pieces[1:]:
            prev = glued[-1]
            base = bases[-1] + _piece_increment(prev.c, prev.p, prev.alpha, prev.lo, q.lo)
            unit = _unit_primitive(q.p, q.alpha, q.lo)
            c = base / unit if unit > 0.0 else q.c
            if q.c > 0 and abs(c / q.c - 1.0) > 1e-12:
                logger.info(
                    "rescaled piece at t=%g: c %g -> %g for continuity", q.lo, q.c, c
                )
            glued.append(Piece(q.lo, c, q.p, q.alpha))
            bases.append(base)
        self.pieces = glued
        self._bases = bases
        self._los = np.array([q.lo for q in glued])

    def _piece_index(self, t):
        # piece i covers (lo_i, lo_{i+1}]
        i = int(np.searchsorted(self._los, t, side="left")) - 1
        return max(i, 0)

    def __call__(self, t):
        if np.ndim(t) > 0:
            return np.array([self(x) for x in np.asarray(t, dtype=float).ravel()]).reshape(np.shape(t))
        t = float(t)
        if t <= 0.0:
            return 0.0
        i = self._piece_index(t)
        q = self.pieces[i]
        return self._bases[i] + _piece_increment(q.c, q.p, q.alpha, q.lo, t)

    def phi(self, t):
        """Density; left-continuous at piece boundaries."""
        if np.ndim(t) > 0:
            return np.array([self.phi(x) for x in np.asarray(t, dtype=float).ravel()]).reshape(np.shape(t))
        t = float(t)
        if t <= 0.0:
            return 0.0
        i = self._piece_index(t)
        q = self.pieces[i]
        return _piece_density(q.c, q.p, q.alpha, t)

    def leading(self, end):
        """Asymptotic (c, p, alpha) of Phi at end = 'zero' or 'inf'.

        Near zero the first piece is a pure power; at infinity the last
        piece's parameters give the leading term (the glue offset is lower
        order).
        """
        if end == "zero":
            q = self.pieces[0]
            return (q.c, q.p, 0.0)
        if end == "inf":
            q = self.pieces[-1]
            return (q.c, q.p, q.alpha)
        raise ValueError("end must be 'zero' or 'inf'")

    @property
    def breakpoints(self):
        return [q.lo for q in self.pieces[1:]]

    def validate(self, grid=None):
        """Check phi >= 0 and nondecreasing on a log grid; raise if not."""
        if grid is None:
            grid = np.geomspace(1e-8, 1e8, 2049)
        vals = self.phi(grid)
        if np.any(vals < 0):
            raise ValueError("density takes negative values")
        if np.any(np.diff(vals) < -1e-9 * np.maximum(vals[:-1], 1e-300)):
            raise ValueError("density is not nondecreasing")


class TabulatedYoungFunction:
    """Young function given by log-spaced samples of its density.

    Density is interpolated linearly in log t between nodes and
    extrapolated by the boundary power-law slopes; the primitive is the
    cumulative trapezoid of the interpolant.
    """

    def __init__(self, nodes, densities):
        nodes = np.asarray(nodes, dtype=float)
        densities = np.asarray(densities, dtype=float)
        if nodes.ndim != 1 or nodes.shape != densities.shape or len(nodes) < 2:
            raise ValueError("need matching 1-d nodes/densities, length >= 2")
        if np.any(np.diff(nodes) <= 0) or nodes[0] <= 0:
            raise ValueError("nodes must be positive and increasing")
        keep = densities > 0
        if keep.sum() < 2:
            raise ValueError("need at least two positive density samples")
        first = np.argmax(keep)
        nodes, densities = nodes[first:], densities[first:]
        densities = np.maximum.accumulate(densities)  # enforce monotone
        self.nodes = nodes
        self.densities = densities
        self._log_t = np.log(nodes)
        self._log_d = np.log(densities)
        # boundary log-log slopes for power extrapolation
        self._k0 = (self._log_d[1] - self._log_d[0]) / (self._log_t[1] - self._log_t[0])
        self._k1 = (self._log_d[-1] - self._log_d[-2]) / (self._log_t[-1] - self._log_t[-2])
        self._k0 = max(self._k0, 1e-12)
        # cumulative primitive at the nodes (trapezoid in t)
        incr = 0.5 * (densities[1:] + densities[:-1]) * np.diff(nodes)
        head = densities[0] * nodes[0] / (self._k0 + 1.0)  # power tail below node 0
        self._cum = np.concatenate(([head], head + np.cumsum(incr)))

    def phi(self, t):
        if np.ndim(t) > 0:
            return np.array([self.phi(x) for x in np.asarray(t, dtype=float).ravel()]).reshape(np.shape(t))
        t = float(t)
        if t <= 0.0:
            return 0.0
        if t <= self.nodes[0]:
            return self.densities[0] * (t / self.nodes[0]) ** self._k0
        if t >= self.nodes[-1]:
            return self.densities[-1] * (t / self.nodes[-1]) ** max(self._k1, 0.0)
        return float(np.exp(np.interp(math.log(t), self._log_t, self._log_d)))

    def __call__(self, t):
        if np.ndim(t) > 0:
            return np.array([self(x) for x in np.asarray(t, dtype=float).ravel()]).reshape(np.shape(t))
        t = float(t)
        if t <= 0.0:
            return 0.0
        if t <= self.nodes[0]:
            return self.densities[0] * self.nodes[0] / (self._k0 + 1.0) * (t / self.nodes[0]) ** (self._k0 + 1.0)
        if t >= self.nodes[-1]:
            k = max(self._k1, 0.0)
            d = self.densities[-1]
            return float(self._cum[-1] + d * self.nodes[-1] / (k + 1.0) * ((t / self.nodes[-1]) ** (k + 1.0) - 1.0))
        i = int(np.searchsorted(self.nodes, t, side="right")) - 1
        d0, d1 = self.densities[i], self.phi(t)
        return float(self._cum[i] + 0.5 * (d0 + d1) * (t - self.nodes[i]))

    def leading(self, end):
        if end == "zero":
            k = self._k0
            c = self.densities[0] * self.nodes[0] ** (-k) / (k + 1.0)
            return (c, k + 1.0, 0.0)
        if end == "inf":
            k = max(self._k1, 0.0)
            c = self.densities[-1] * self.nodes[-1] ** (-k) / (k + 1.0)
            return (c, k + 1.0, 0.0)
        raise ValueError("end must be 'zero' or 'inf'")


class ExpYoungFunction:
    """Phi(t) = exp(t) - t - 1, density phi(t) = exp(t) - 1."""

    def __call__(self, t):
        if np.ndim(t) > 0:
            return np.array([self(x) for x in np.asarray(t, dtype=float).ravel()]).reshape(np.shape(t))
        t = float(t)
        if t <= 0.0:
            return 0.0
        if t > 700.0:
            return math.inf
        return math.expm1(t) - t

    def phi(self, t):
        if np.ndim(t) > 0:
            return np.array([self.phi(x) for x in np.asarray(t, dtype=float).ravel()]).reshape(np.shape(t))
        t = float(t)
        if t <= 0.0:
            return 0.0
        if t > 700.0:
            return math.inf
        return math.expm1(t)

    def leading(self, end):
        if end == "zero":
            return (0.5, 2.0, 0.0)
        if end == "inf":
            return (1.0, math.inf, 0.0)
        raise ValueError("end must be 'zero' or 'inf'")

    def complementary(self):
        """Psi(t) = (1 + t) log(1 + t) - t (exact Legendre conjugate)."""

        class _LogYoung:
            def __call__(self, t):
                t = float(t)
                return (1.0 + t) * math.log1p(t) - t if t > 0 else 0.0

            def phi(self, t):
                t = float(t)
                return math.log1p(t) if t > 0 else 0.0

            def leading(self, end):
                return (0.5, 2.0, 0.0) if end == "zero" else (1.0, 1.0, 1.0)

        return _LogYoung()


def power_young(p, c=1.0):
    """Phi(t) = c * t**p as a single-piece Young function."""
    return YoungFunction([Piece(0.0, c, float(p), 0.0)])


def complementary(young, nodes_per_decade=512, t_range=(1e-8, 1e8)):
    """Complementary Young function Psi, with density psi(t) = inf{s : phi(s) >= t}.

    For a single pure power c*t**p the exact conjugate is returned;
    otherwise psi is tabulated by inverting density samples on a log grid
    (nodes_per_decade controls resolution).
    """
    if isinstance(young, ExpYoungFunction):
        return young.complementary()
    if isinstance(young, YoungFunction) and len(young.pieces) == 1 and young.pieces[0].alpha == 0.0:
        c, p = young.pieces[0].c, young.pieces[0].p
        if p > 1.0:
            pp = p / (p - 1.0)
            cc = (p - 1.0) / p * (c * p) ** (-1.0 / (p - 1.0))
            return YoungFunction([Piece(0.0, cc, pp, 0.0)])
    lo, hi = t_range
    n = max(int(round(math.log10(hi / lo) * nodes_per_decade)), 16)
    s = np.geomspace(lo, hi, n)
    ph = young.phi(s)
    good = ph > 0
    s, ph = s[good], ph[good]
    ph = np.maximum.accumulate(ph)
    # generalized inverse: psi(t) = smallest s with phi(s) >= t
    t_nodes = np.geomspace(ph[0], ph[-1], n)
    psi = np.interp(t_nodes, ph, s)
    return TabulatedYoungFunction(t_nodes, psi)


def load_young(source):
    """Build a YoungFunction from a JSON file path, JSON string, or dict.

    Expected shape::

        {"pieces": [{"upto": 2.71828, "c": 1, "p": 5, "alpha": 0},
                    {"from": 2.71828, "c": 1, "p": 4, "alpha": 2}]}

    Consecutive pieces must chain ("upto" of one equals "from" of the
    next); continuity of the primitive is enforced by rescaling c of later
    pieces (reported in the log).
    """
    if isinstance(source, dict):
        data = source
    else:
        text = str(source)
        if text.lstrip().startswith("{"):
            data = json.loads(text)
        else:
            with open(text) as fh:
                data = json.load(fh)
    raw = data["pieces"]
    if not raw:
        raise ValueError("no pieces")
    pieces = []
    prev_upto = 0.0
    for i, entry in enumerate(raw):
        lo = float(entry.get("from", 0.0)) if i > 0 else 0.0
        if i > 0 and not math.isclose(lo, prev_upto, rel_tol=1e-9):
            raise ValueError(f"piece {i} starts at {lo}, previous ends at {prev_upto}")
        prev_upto = float(entry["upto"]) if "upto" in entry else math.inf
        pieces.append(Piece(lo, float(entry["c"]), float(entry["p"]), float(entry.get("alpha", 0.0))))
    if prev_upto != math.inf and "upto" in raw[-1]:
        # last piece extends to infinity regardless of a declared upper bound
        logger.info("last piece extended to infinity (declared upto=%g)", prev_upto)
    return YoungFunction(pieces)
