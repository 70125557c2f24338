"""Green kernels of the clamped coupled-order Langevin boundary value problem.

The problem  D^beta (D^alpha + gamma) x = y  on (0, 1) with
x(0) = x(1) = x'(0) = x'(1) = 0,  0 < alpha <= 1,  2 < beta <= 3,  inverts to

    x(t) = int_0^1 G(t, s) y(s) ds + int_0^1 H(t, s) x(s) ds.

Each kernel splits into a singular Volterra part (a power of t - s, present
only for s <= t) and a smooth Fredholm part (powers of 1 - s carrying the
boundary corrections).  ``eval_*`` return that split explicitly.

Two deliberate reformulations, both load-bearing:

* H's Volterra weight is (t - s)**(alpha - 1).  This is the only exponent
  for which the representation actually inverts the differential problem;
  the manufactured-solution round trip in the oracle module is the witness.
* Every 1/Gamma(alpha - 1) prefactor is written (alpha - 1)/Gamma(alpha),
  which is the same number for alpha < 1 and removes the spurious pole at
  alpha = 1 (the (1 - s)**(alpha - 2) terms then carry an exact zero).

``eval_H_dt`` returns only the Fredholm part of dH/dt.  Differentiating the
Volterra part of H would produce the non-integrable weight (t - s)**(alpha-2);
since admissible solutions have x(0) = 0, the solver instead propagates the
identity d/dt [I^alpha x] = I^alpha x' and applies the (t - s)**(alpha - 1)
weight to the derivative samples.  That contribution is solver-owned and is
deliberately absent here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularKernelError
from .fraccalc import gamma_fn

__all__ = ["OrderParams", "KernelValue", "eval_G", "eval_H", "eval_G_dt", "eval_H_dt"]


@dataclass(frozen=True)
class OrderParams:
    """Derivative orders and coupling coefficient of one problem instance."""

    alpha: float
    beta: float
    gamma: float = 0.0

    def __post_init__(self):
        a, b, g = float(self.alpha), float(self.beta), float(self.gamma)
        if not (0.0 < a <= 1.0):
            raise ValueError("alpha must lie in (0, 1], got %r" % (self.alpha,))
        if not (2.0 < b <= 3.0):
            raise ValueError("beta must lie in (2, 3], got %r" % (self.beta,))
        if not math.isfinite(g):
            raise ValueError("gamma must be finite, got %r" % (self.gamma,))
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", g)


@dataclass(frozen=True)
class KernelValue:
    """One kernel evaluation, split into its Volterra and Fredholm parts."""

    volterra: float
    fredholm: float

    @property
    def total(self) -> float:
        return self.volterra + self.fredholm


def _check_square(t: float, s: float):
    if not (0.0 <= t <= 1.0 and 0.0 <= s <= 1.0):
        raise DomainError("kernel arguments must lie in the unit square, got t=%r s=%r" % (t, s))


# Fredholm coefficient functions.  These are shared with the solver, which
# evaluates them on whole node vectors; t may be a float or an ndarray.

def g_coeff_1(p: OrderParams, t):
    """Multiplies int_0^1 (1-s)**(alpha+beta-1) y ds in x(t)."""
    a = p.alpha
    return ((a + 1.0) * t ** (a + 2.0) - (a + 2.0) * t ** (a + 1.0)) / gamma_fn(a + p.beta)


def g_coeff_2(p: OrderParams, t):
    """Multiplies int_0^1 (1-s)**(alpha+beta-2) y ds in x(t)."""
    a, b = p.alpha, p.beta
    return (a + b - 1.0) * (t ** (a + 1.0) - t ** (a + 2.0)) / gamma_fn(a + b)


def h_coeff_1(p: OrderParams, t):
    """Multiplies int_0^1 (1-s)**(alpha-1) x ds in x(t)."""
    a = p.alpha
    return p.gamma * ((a + 2.0) * t ** (a + 1.0) - (a + 1.0) * t ** (a + 2.0)) / gamma_fn(a)


def h_coeff_2(p: OrderParams, t):
    """Multiplies int_0^1 (1-s)**(alpha-2) x ds in x(t); exactly 0 at alpha=1."""
    a = p.alpha
    return p.gamma * (a - 1.0) * (t ** (a + 2.0) - t ** (a + 1.0)) / gamma_fn(a)


def g_coeff_1_dt(p: OrderParams, t):
    a = p.alpha
    return (a + 1.0) * (a + 2.0) * (t ** (a + 1.0) - t ** a) / gamma_fn(a + p.beta)


def g_coeff_2_dt(p: OrderParams, t):
    a, b = p.alpha, p.beta
    return (a + b - 1.0) * ((a + 1.0) * t ** a - (a + 2.0) * t ** (a + 1.0)) / gamma_fn(a + b)


def h_coeff_1_dt(p: OrderParams, t):
    a = p.alpha
    return p.gamma * (a + 1.0) * (a + 2.0) * (t ** a - t ** (a + 1.0)) / gamma_fn(a)


def h_coeff_2_dt(p: OrderParams, t):
    a = p.alpha
    return p.gamma * (a - 1.0) * ((a + 2.0) * t ** (a + 1.0) - (a + 1.0) * t ** a) / gamma_fn(a)


def eval_G(p: OrderParams, t: float, s: float) -> KernelValue:
    """Forcing kernel G(t, s).

    Finite on the whole closed unit square: the Volterra exponent
    alpha + beta - 1 exceeds 1 and both Fredholm exponents are positive.
    """
    _check_square(t, s)
    mu = p.alpha + p.beta - 1.0
    volterra = (t - s) ** mu / gamma_fn(p.alpha + p.beta) if s <= t else 0.0
    one_m_s = 1.0 - s
    fredholm = g_coeff_1(p, t) * one_m_s ** mu + g_coeff_2(p, t) * one_m_s ** (mu - 1.0)
    return KernelValue(volterra, fredholm)


def eval_H(p: OrderParams, t: float, s: float) -> KernelValue:
    """Coupling kernel H(t, s); scales linearly in gamma.

    Raises
    ------
    SingularKernelError
        At s = 1, and at s = t when alpha < 1 (the weak Volterra
        singularity).  For alpha = 1 both points are regular.
    """
    _check_square(t, s)
    a = p.alpha
    if a < 1.0:
        if s == 1.0:
            raise SingularKernelError("H(t, s) is singular at s = 1 for alpha < 1")
        if s == t:
            raise SingularKernelError("H(t, s) is singular across s = t for alpha < 1")
    volterra = 0.0
    if s <= t:
        volterra = -p.gamma * (t - s) ** (a - 1.0) / gamma_fn(a)
    one_m_s = 1.0 - s
    # 0**0 == 1 covers s == 1 at alpha == 1; the singular cases were rejected.
    fredholm = h_coeff_1(p, t) * one_m_s ** (a - 1.0)
    c2 = h_coeff_2(p, t)
    if c2 != 0.0:
        fredholm += c2 * one_m_s ** (a - 2.0)
    return KernelValue(volterra, fredholm)


def eval_G_dt(p: OrderParams, t: float, s: float) -> KernelValue:
    """dG/dt, finite everywhere on the unit square (exponents stay positive)."""
    _check_square(t, s)
    a, b = p.alpha, p.beta
    mu = a + b - 1.0
    volterra = 0.0
    if s <= t:
        volterra = mu * (t - s) ** (mu - 1.0) / gamma_fn(a + b)
    one_m_s = 1.0 - s
    fredholm = g_coeff_1_dt(p, t) * one_m_s ** mu + g_coeff_2_dt(p, t) * one_m_s ** (mu - 1.0)
    return KernelValue(volterra, fredholm)


def eval_H_dt(p: OrderParams, t: float, s: float) -> KernelValue:
    """Fredholm part of dH/dt only; see the module docstring.

    The Volterra channel of the derivative is handled by the solver through
    d/dt [I^alpha x] = I^alpha x' and is not part of this kernel's value.
    """
    _check_square(t, s)
    a = p.alpha
    if a < 1.0 and s == 1.0:
        raise SingularKernelError("dH/dt is singular at s = 1 for alpha < 1")
    one_m_s = 1.0 - s
    fredholm = h_coeff_1_dt(p, t) * one_m_s ** (a - 1.0)
    c2 = h_coeff_2_dt(p, t)
    if c2 != 0.0:
        fredholm += c2 * one_m_s ** (a - 2.0)
    return KernelValue(0.0, fredholm)
