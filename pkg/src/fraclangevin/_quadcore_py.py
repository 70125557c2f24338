"""Pure NumPy implementation of the hot quadrature kernels.

Product-integration weights for integrals

    int_0^c (c - s)**mu * g~(s) ds,      c = i*h,

where g~ interpolates the samples g_j piecewise-linearly on a uniform grid.
Panel moments are closed-form, so the rule is exact whenever g~ equals the
integrand's density.  On a uniform grid the hat-function weights depend only
on the panel distance k = i - j from the upper endpoint:

    A_k = int over panel  (c-s)**mu      ds = ((k h)**(mu+1) - ((k-1) h)**(mu+1)) / (mu+1)
    B_k = int over panel  (c-s)**(mu+1)  ds = ((k h)**(mu+2) - ((k-1) h)**(mu+2)) / (mu+2)
    L_k (left hat)  = (B_k - (k-1) h A_k) / h
    R_k (right hat) = (k h A_k - B_k) / h

(for mu = -1 the A moment is logarithmic).  The "pinned" variant replaces the
final panel's interpolant by one pinned to g(c) = 0, whose only weight is
h**(mu+1) / (mu+2) on the second-to-last node; with that pin the rule stays
finite for mu in (-2, -1].

The compiled twin of this module is ``fraclangevin._quadcore``; both expose
the same three functions and must agree to rounding error.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _hat_tables(mu: float, n: int, h: float):
    """Left/right hat weights L[k], R[k] for panel distances k = 1..n."""
    k = np.arange(n + 1, dtype=np.float64)
    kh = k * h
    A = np.zeros(n + 1)
    if abs(mu + 1.0) < 1e-14:
        # log moments; A[1] is the divergent last panel, only valid pinned
        A[2:] = np.log(k[2:] / k[1:-1])
        A[1] = np.inf
    else:
        p1 = np.zeros(n + 1)
        p1[1:] = kh[1:] ** (mu + 1.0)
        if mu + 1.0 > 0.0:
            A[1:] = (p1[1:] - p1[:-1]) / (mu + 1.0)
        else:
            A[2:] = (p1[2:] - p1[1:-1]) / (mu + 1.0)
            A[1] = np.inf
    p2 = np.zeros(n + 1)
    p2[1:] = kh[1:] ** (mu + 2.0)
    B = np.zeros(n + 1)
    B[1:] = (p2[1:] - p2[:-1]) / (mu + 2.0)

    L = np.zeros(n + 1)
    R = np.zeros(n + 1)
    kk = k[1:]
    L[1:] = (B[1:] - (kk - 1.0) * h * A[1:]) / h
    R[1:] = (kk * h * A[1:] - B[1:]) / h
    return L, R


def weight_row(mu: float, i: int, n: int, h: float, pinned: bool = False) -> np.ndarray:
    """Weights for int_0^{i*h} (i*h - s)**mu g~(s) ds, length n+1 (zeros past i)."""
    w = np.zeros(n + 1)
    if i == 0:
        return w
    L, R = _hat_tables(mu, i, h)
    _fill_row(w, L, R, mu, i, h, pinned)
    return w


def _fill_row(w, L, R, mu, i, h, pinned):
    # left hat of panel j contributes at node j with k = i - j
    # right hat of panel j contributes at node j+1 with k = i - j
    if pinned:
        if i == 1:
            w[0] = h ** (mu + 1.0) / (mu + 2.0)
            return
        w[0] = L[i]
        w[1 : i - 1] = L[i - 1 : 1 : -1] + R[i:2:-1]
        w[i - 1] = h ** (mu + 1.0) / (mu + 2.0) + R[2]
        w[i] = 0.0
    else:
        w[0] = L[i]
        w[1:i] = L[i - 1 : 0 : -1] + R[i:1:-1]
        w[i] = R[1]


def volterra_matrix(mu: float, n: int, h: float, pinned: bool = False) -> np.ndarray:
    """Stacked weight rows for every upper endpoint c = i*h, i = 0..n."""
    L, R = _hat_tables(mu, n, h)
    W = np.zeros((n + 1, n + 1))
    for i in range(1, n + 1):
        _fill_row(W[i], L, R, mu, i, h, pinned)
    return W

def boundary_weights(mu: float, n: int, h: float, pinned: bool = False) -> np.ndarray:
    """Weights for the full-interval integral int_0^1 (1 - s)**mu g~(s) ds."""
    return weight_row(mu, n, n, h, pinned)


def apply_lower(W: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Row-wise application of a lower-triangular weight matrix."""
    return W @ v
