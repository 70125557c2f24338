"""Solvability conditions for the clamped fractional Langevin problem.

Computes the norm bounds on the solution operator

    Z x = int G f(., x, x') + int H x

in the C^1 norm ||x|| = max|x| + max|x'|, and decides the two sufficient
conditions built on them:

* existence: under the growth bound |f| <= sigma + a1 |x|^tau1 + a2 |x'|^tau2
  a ball of radius r is mapped into itself whenever
  max(4 K ||sigma||, (4 a1 K)^(1/(1-tau1)), (4 a2 K)^(1/(1-tau2)), 4 r L) <= r;
* uniqueness: under a Lipschitz bound with constant w, the operator is a
  contraction whenever psi = 50 w / Gamma(alpha+beta+1)
  + 26 |gamma| / Gamma(alpha+1) < 1.

These bounds are reproduced as printed in their source analysis; they are
deliberately loose (e.g. powers of t on [0, 1] are majorized by 1), so the
solver additionally *measures* contraction factors at run time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fraccalc import gamma_fn
from .kernels import OrderParams

__all__ = [
    "GrowthSpec",
    "LipschitzSpec",
    "ConditionReport",
    "compute_constants",
    "compute_psi",
    "existence_radius",
    "check_existence",
    "check_uniqueness",
    "spot_check_lipschitz",
]


@dataclass(frozen=True)
class GrowthSpec:
    """Sublinear growth data: |f(t,x,y)| <= sigma_bound + a1 |x|**tau1 + a2 |y|**tau2."""

    sigma_bound: float
    a1: float = 0.0
    a2: float = 0.0
    tau1: float = 0.5
    tau2: float = 0.5

    def __post_init__(self):
        for name in ("sigma_bound", "a1", "a2"):
            v = float(getattr(self, name))
            if v < 0.0 or not math.isfinite(v):
                raise ValueError("%s must be a finite nonnegative number, got %r" % (name, v))
            object.__setattr__(self, name, v)
        for name in ("tau1", "tau2"):
            v = float(getattr(self, name))
            if not (0.0 < v < 1.0):
                raise ValueError("%s must lie strictly inside (0, 1), got %r" % (name, v))
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class LipschitzSpec:
    """Joint Lipschitz constant: |f(t,x,y) - f(t,u,v)| <= w (|x-u| + |y-v|)."""

    w: float

    def __post_init__(self):
        v = float(self.w)
        if not (v > 0.0) or not math.isfinite(v):
            raise ValueError("Lipschitz constant w must be positive, got %r" % (self.w,))
        object.__setattr__(self, "w", v)


@dataclass(frozen=True)
class ConditionReport:
    """Computed condition constants plus the pass/fail flags they imply.

    ``psi*`` fields and ``uniqueness_ok`` are None when no Lipschitz data
    was supplied; ``radius`` and ``existence_ok`` are None without growth
    data.  ``radius`` itself is None (with existence_ok False) when the
    self-mapping condition is unsatisfiable, i.e. L > 1/4.
    """

    K1: float
    K2: float
    K: float
    L1: float
    L2: float
    L: float
    psi1: float | None = None
    psi2: float | None = None
    psi: float | None = None
    radius: float | None = None
    existence_ok: bool | None = None
    uniqueness_ok: bool | None = None


def compute_constants(p: OrderParams):
    """The six operator-norm constants (K1, K2, K, L1, L2, L)."""
    a, b, g = p.alpha, p.beta, abs(p.gamma)
    gab1 = gamma_fn(a + b + 1.0)
    K1 = (4.0 * (a + 1.0) + 2.0 * b) / gab1
    K2 = (2.0 * a + 4.0) / gamma_fn(a + b) + 2.0 * (a + 1.0) * (a + 2.0) / gab1
    L1 = g * 4.0 * (a + 1.0) / gamma_fn(a + 1.0)
    L2 = g * (2.0 * a + 4.0) / gamma_fn(a) + 2.0 * g * (a + 1.0) * (a + 2.0) / gamma_fn(a + 1.0)
    return K1, K2, K1 + K2, L1, L2, L1 + L2


def compute_psi(p: OrderParams, lip: LipschitzSpec):
    """Contraction bound pieces (psi1, psi2, psi); uniqueness needs psi < 1."""
    w, g = lip.w, abs(p.gamma)
    gab1 = gamma_fn(p.alpha + p.beta + 1.0)
    ga1 = gamma_fn(p.alpha + 1.0)
    psi1 = 14.0 * w / gab1 + 8.0 * g / ga1
    psi2 = 36.0 * w / gab1 + 18.0 * g / ga1
    return psi1, psi2, psi1 + psi2


def existence_radius(K: float, L: float, g: GrowthSpec) -> float | None:
    """Smallest admissible self-mapping radius, or None when L > 1/4.

    The radius must dominate 4 K ||sigma|| and both fixed points of the
    sublinear terms; the 4 r L <= r requirement is scale-free and simply
    caps L at 1/4.
    """
    if L > 0.25:
        return None
    candidates = [4.0 * K * g.sigma_bound]
    if g.a1 > 0.0:
        candidates.append((4.0 * g.a1 * K) ** (1.0 / (1.0 - g.tau1)))
    if g.a2 > 0.0:
        candidates.append((4.0 * g.a2 * K) ** (1.0 / (1.0 - g.tau2)))
    return max(candidates)


def check_existence(p: OrderParams, g: GrowthSpec) -> ConditionReport:
    """Existence test: growth data admits a self-mapped ball."""
    K1, K2, K, L1, L2, L = compute_constants(p)
    radius = existence_radius(K, L, g)
    return ConditionReport(
        K1=K1, K2=K2, K=K, L1=L1, L2=L2, L=L,
        radius=radius, existence_ok=radius is not None,
    )


def check_uniqueness(p: OrderParams, lip: LipschitzSpec) -> ConditionReport:
    """Uniqueness test: Lipschitz data makes the solution operator contractive."""
    K1, K2, K, L1, L2, L = compute_constants(p)
    psi1, psi2, psi = compute_psi(p, lip)
    return ConditionReport(
        K1=K1, K2=K2, K=K, L1=L1, L2=L2, L=L,
        psi1=psi1, psi2=psi2, psi=psi, uniqueness_ok=psi < 1.0,
    )


def check_conditions(p: OrderParams, growth: GrowthSpec | None = None,
                     lip: LipschitzSpec | None = None) -> ConditionReport:
    """Combined report for whichever condition data is available."""
    K1, K2, K, L1, L2, L = compute_constants(p)
    kwargs = dict(K1=K1, K2=K2, K=K, L1=L1, L2=L2, L=L)
    if growth is not None:
        radius = existence_radius(K, L, growth)
        kwargs.update(radius=radius, existence_ok=radius is not None)
    if lip is not None:
        psi1, psi2, psi = compute_psi(p, lip)
        kwargs.update(psi1=psi1, psi2=psi2, psi=psi, uniqueness_ok=psi < 1.0)
    return ConditionReport(**kwargs)


def spot_check_lipschitz(f, lip: LipschitzSpec, n_samples: int = 1000,
                         box: float = 1.0, rng=None, slack: float = 0.01):
    """Empirical sanity check of a declared Lipschitz constant.

    Samples random argument pairs in [0,1] x [-box, box]^2 and compares the
    worst difference quotient against w.  Declared constants are caller
    metadata, not verifiable in general; this only catches gross mismatches.

    Returns ``(ok, worst_quotient)``.
    """
    import numpy as np

    rng = np.random.default_rng(rng)
    t = rng.uniform(0.0, 1.0, n_samples)
    x, u = rng.uniform(-box, box, (2, n_samples))
    y, v = rng.uniform(-box, box, (2, n_samples))
    denom = np.abs(x - u) + np.abs(y - v)
    keep = denom > 1e-9
    num = np.abs(_sample(f, t, x, y) - _sample(f, t, u, v))
    quot = num[keep] / denom[keep]
    worst = float(np.max(quot)) if quot.size else 0.0
    return worst <= lip.w * (1.0 + slack), worst


def _sample(f, t, x, y):
    import numpy as np

    try:
        out = np.asarray(f(t, x, y), dtype=float)
        if out.shape == t.shape:
            return out
        if out.ndim == 0:
            return np.full_like(t, float(out))
    except (TypeError, ValueError):
        pass
    return np.array([f(ti, xi, yi) for ti, xi, yi in zip(t, x, y)], dtype=float)
