"""Product-integration quadrature on uniform grids.

Front end over the hot weight kernels, which exist twice: a compiled Cython
extension (``_quadcore``) and a pure NumPy fallback (``_quadcore_py``).  The
backend is chosen once at import; set ``FRACLANGEVIN_PURE_PYTHON=1`` to force
the fallback.

All rules integrate a piecewise-linear interpolant of the samples against an
exact power weight, so they are exact for densities that are linear on each
panel.  Weight exponents mu follow this contract:

* mu > -1: plain rule, any sample values;
* mu in (-2, -1]: admissible only with ``pinned_end=True``, which asserts the
  integrand vanishes at the upper endpoint and pins the final panel there;
* mu <= -2: rejected, the panel moments do not exist.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import MomentOverflowError, QuadratureMisuseError

if os.environ.get("FRACLANGEVIN_PURE_PYTHON"):
    from . import _quadcore_py as _core
else:
    try:
        from . import _quadcore as _core  # type: ignore[attr-defined]
    except ImportError:
        from . import _quadcore_py as _core

__all__ = ["Grid", "backend_name", "product_weights", "volterra_matrix", "fredholm_weights"]

_NODE_TOL = 1e-12


def backend_name() -> str:
    """Which weight-kernel implementation is active ('compiled' or 'python')."""
    return _core.BACKEND


@dataclass(frozen=True)
class Grid:
    """Uniform mesh 0 = t_0 < t_1 < ... < t_n = 1 with n >= 8 panels."""

    n_panels: int

    def __post_init__(self):
        if int(self.n_panels) != self.n_panels or self.n_panels < 8:
            raise ValueError("n_panels must be an integer >= 8, got %r" % (self.n_panels,))
        object.__setattr__(self, "n_panels", int(self.n_panels))

    @property
    def h(self) -> float:
        return 1.0 / self.n_panels

    @cached_property
    def nodes(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n_panels + 1)


def _check_mu(mu: float, pinned_end: bool) -> float:
    mu = float(mu)
    if mu <= -2.0:
        raise MomentOverflowError("weight exponent mu = %g <= -2 has no finite moments" % mu)
    if mu <= -1.0 and not pinned_end:
        raise QuadratureMisuseError(
            "mu = %g needs pinned_end=True (integrand must vanish at the upper endpoint)" % mu
        )
    return mu


def product_weights(mu: float, c: float, grid: Grid, pinned_end: bool = False) -> np.ndarray:
    """Weights u_j with sum_j u_j g(t_j) = int_0^c (c - s)**mu g~(s) ds.

    ``c`` must coincide with a grid node (the quadrature never evaluates the
    weight function off its analytic panel moments).  The returned vector has
    length n+1 with zeros past the node index of ``c``.
    """
    mu = _check_mu(mu, pinned_end)
    pos = c * grid.n_panels
    i = int(round(pos))
    if not (0 <= i <= grid.n_panels) or abs(pos - i) > _NODE_TOL * grid.n_panels:
        raise QuadratureMisuseError("upper endpoint c = %r is not a grid node" % (c,))
    return _core.weight_row(mu, i, grid.n_panels, grid.h, pinned_end)


def volterra_matrix(mu: float, grid: Grid, pinned_end: bool = False) -> np.ndarray:
    """All weight rows at once: row i integrates over [0, t_i]."""
    mu = _check_mu(mu, pinned_end)
    return _core.volterra_matrix(mu, grid.n_panels, grid.h, pinned_end)


def fredholm_weights(mu: float, grid: Grid, pinned_end: bool = False) -> np.ndarray:
    """Weights for the boundary-correction integrals over the whole of [0, 1]."""
    mu = _check_mu(mu, pinned_end)
    return _core.boundary_weights(mu, grid.n_panels, grid.h, pinned_end)


def apply_volterra(W: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Apply a stacked weight matrix to samples (lower-triangular product)."""
    return _core.apply_lower(np.ascontiguousarray(W), np.ascontiguousarray(v, dtype=float))


def trapezoid_weights(grid: Grid) -> np.ndarray:
    """Flat-weight special case, handy for sanity checks."""
    w = np.full(grid.n_panels + 1, grid.h)
    w[0] = w[-1] = 0.5 * grid.h
    return w


def is_node(c: float, grid: Grid) -> bool:
    pos = c * grid.n_panels
    return abs(pos - round(pos)) <= _NODE_TOL * grid.n_panels and 0 <= round(pos) <= grid.n_panels
