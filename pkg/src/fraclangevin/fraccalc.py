"""Exact fractional calculus on power terms.

Closed-form images of monomials ``c * t**e`` under the Riemann-Liouville
fractional integral and the Caputo fractional derivative, plus the gamma
function those rules are built on.  Everything in this module is pointwise
arithmetic; grids and quadrature live elsewhere.

The derivative power rule is::

    D^rho (c * t**e)  =  c * Gamma(e+1) / Gamma(e-rho+1) * t**(e-rho)

with two structural amendments:

* monomials of integer degree k < ceil(rho) are annihilated (they span the
  kernel of the Caputo derivative of order rho);
* a non-integer exponent with e - rho <= -1 is rejected: the image would be
  a non-integrable power of t and no longer represents anything this package
  can integrate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GammaPoleError, NonIntegrableResultError

__all__ = [
    "FracOrder",
    "PowerTerm",
    "gamma_fn",
    "rl_integral_power",
    "caputo_power",
    "caputo_poly",
    "poly_eval",
    "poly_deriv",
    "merge_terms",
]

#: Tolerance used when deciding whether an exponent is an integer.  Exponents
#: arrive from arithmetic on user-supplied orders, never from exact input.
INTEGER_TOL = 1e-12

_POLE_TOL = 1e-12

# Lanczos approximation with g = 7 and 9 coefficients: about 15 significant
# digits on the positive half line.  Negative arguments go through the
# reflection formula; sin(pi*z) is computed with argument reduction so no
# digits are lost near the poles.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def _sinpi(z: float) -> float:
    """sin(pi*z) with reduction to |r| <= 1/2, accurate near integers."""
    n = round(z)
    r = z - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def gamma_fn(z: float) -> float:
    """Gamma function on the real line.

    Uses a Lanczos series for z >= 1/2 and the reflection formula below;
    relative accuracy is about 1e-14 away from the poles at the nonpositive
    integers.

    Raises
    ------
    GammaPoleError
        If ``z`` is within 1e-12 of a pole (0, -1, -2, ...).
    """
    z = float(z)
    if z <= 0.5 and abs(z - round(z)) < _POLE_TOL and round(z) <= 0:
        raise GammaPoleError("gamma pole at z = %r" % z)
    if z < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (_sinpi(z) * gamma_fn(1.0 - z))
    w = z - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[i] / (w + i)
    tt = w + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * tt ** (w + 0.5) * math.exp(-tt) * acc


@dataclass(frozen=True)
class FracOrder:
    """A fractional order rho in (0, 4].

    ``m`` is the number of polynomial degrees of freedom attached to the
    order (the length of the kernel basis 1, t, ..., t^(m-1)).
    """

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not (0.0 < v <= 4.0) or math.isnan(v):
            raise ValueError("fractional order must lie in (0, 4], got %r" % self.value)
        object.__setattr__(self, "value", v)

    @property
    def m(self) -> int:
        return int(math.floor(self.value)) + 1

    def __float__(self) -> float:
        return self.value


def _order_value(rho) -> float:
    if isinstance(rho, FracOrder):
        return rho.value
    v = float(rho)
    if not (0.0 < v <= 4.0) or math.isnan(v):
        raise ValueError("fractional order must lie in (0, 4], got %r" % rho)
    return v


@dataclass(frozen=True)
class PowerTerm:
    """One monomial ``coefficient * t**exponent``.

    Exponents must exceed -1 so every term is integrable on [0, 1];
    manufactured forcings legitimately carry exponents in (-1, 0).
    """

    coefficient: float
    exponent: float

    def __post_init__(self):
        c, e = float(self.coefficient), float(self.exponent)
        if not e > -1.0:
            raise ValueError("power-term exponent must be > -1, got %r" % self.exponent)
        object.__setattr__(self, "coefficient", c)
        object.__setattr__(self, "exponent", e)

    def __call__(self, t):
        return poly_eval((self,), t)


def rl_integral_power(term: PowerTerm, rho) -> PowerTerm:
    """Riemann-Liouville fractional integral of a power term.

    ``I^rho (c t**e) = c Gamma(e+1)/Gamma(e+rho+1) t**(e+rho)``.
    """
    r = _order_value(rho)
    e = term.exponent
    coeff = term.coefficient * gamma_fn(e + 1.0) / gamma_fn(e + r + 1.0)
    return PowerTerm(coeff, e + r)


def caputo_power(term: PowerTerm, rho) -> PowerTerm | None:
    """Caputo fractional derivative of a power term, or None when annihilated.

    Monomials of integer degree below ceil(rho) are mapped to zero (returned
    as None); all other terms follow the power rule.

    Raises
    ------
    NonIntegrableResultError
        For a non-integer exponent with ``exponent - rho <= -1``: the image
        power would not be integrable at t = 0 and the term admits no
        representation in this calculus.
    """
    r = _order_value(rho)
    e = term.exponent
    nearest = round(e)
    if abs(e - nearest) <= INTEGER_TOL:
        if nearest < math.ceil(r - INTEGER_TOL):
            return None
        e = float(nearest)
    elif e < r and e - r <= -1.0 + INTEGER_TOL:
        raise NonIntegrableResultError(
            "derivative of order %g maps t**%g to a non-integrable power" % (r, e)
        )
    coeff = term.coefficient * gamma_fn(e + 1.0) / gamma_fn(e - r + 1.0)
    return PowerTerm(coeff, e - r)


def caputo_poly(terms: Iterable[PowerTerm], rho) -> list[PowerTerm]:
    """Termwise Caputo derivative of a sparse power sum; zero terms dropped."""
    out = []
    for term in terms:
        image = caputo_power(term, rho)
        if image is not None and image.coefficient != 0.0:
            out.append(image)
    return out


def poly_eval(terms: Sequence[PowerTerm], t):
    """Evaluate a power sum at ``t`` (scalar or ndarray).

    At t = 0 the conventions are 0**0 = 1 and 0**e = 0 for e > 0; a negative
    exponent with a nonzero coefficient yields a signed infinity there.
    """
    import numpy as np

    t_arr = np.asarray(t, dtype=float)
    out = np.zeros_like(t_arr)
    for term in terms:
        e = term.exponent
        if e == 0.0:
            out += term.coefficient
            continue
        with np.errstate(divide="ignore"):
            out += term.coefficient * np.power(t_arr, e)
    if np.ndim(t) == 0:
        return float(out)
    return out


def poly_deriv(terms: Iterable[PowerTerm]) -> list[PowerTerm]:
    """Classical d/dt of a power sum, term by term.  Constants vanish."""
    out = []
    for term in terms:
        if term.exponent == 0.0:
            continue
        out.append(PowerTerm(term.coefficient * term.exponent, term.exponent - 1.0))
    return out


def merge_terms(terms: Iterable[PowerTerm], tol: float = INTEGER_TOL) -> list[PowerTerm]:
    """Combine terms whose exponents coincide within ``tol``; sort by exponent."""
    merged: list[list[float]] = []
    for term in sorted(terms, key=lambda q: q.exponent):
        if merged and abs(merged[-1][1] - term.exponent) <= tol:
            merged[-1][0] += term.coefficient
        else:
            merged.append([term.coefficient, term.exponent])
    return [PowerTerm(c, e) for c, e in merged if c != 0.0]
