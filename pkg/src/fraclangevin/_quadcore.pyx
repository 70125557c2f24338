# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature kernels: weight-table assembly and triangular apply.

Mirrors ``fraclangevin._quadcore_py`` exactly; see that module for the
derivation of the closed-form hat-function weights.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, log, pow

cnp.import_array()

BACKEND = "compiled"


cdef void _tables(double mu, Py_ssize_t n, double h, double[::1] L, double[::1] R) noexcept:
    cdef Py_ssize_t k
    cdef double a, b, p1_prev, p1_k, p2_prev, p2_k
    p1_prev = 0.0
    p2_prev = 0.0
    for k in range(1, n + 1):
        if mu + 1.0 > 1e-14 or (mu + 1.0 < -1e-14 and k > 1):
            p1_k = pow(k * h, mu + 1.0)
            a = (p1_k - p1_prev) / (mu + 1.0)
            p1_prev = p1_k
        elif mu + 1.0 >= -1e-14 and mu + 1.0 <= 1e-14:
            # mu == -1: logarithmic first moment
            a = INFINITY if k == 1 else log((<double> k) / (k - 1))
        else:
            # mu < -1, k == 1: divergent last panel (pinned rule replaces it)
            p1_prev = pow(k * h, mu + 1.0)
            a = INFINITY
        p2_k = pow(k * h, mu + 2.0)
        b = (p2_k - p2_prev) / (mu + 2.0)
        p2_prev = p2_k
        L[k] = (b - (k - 1.0) * h * a) / h
        R[k] = (k * h * a - b) / h


cdef void _fill_row(double[::1] w, double[::1] L, double[::1] R,
                    double mu, Py_ssize_t i, double h, bint pinned) noexcept:
    cdef Py_ssize_t j
    cdef double pin = pow(h, mu + 1.0) / (mu + 2.0)
    if i == 0:
        return
    if pinned:
        if i == 1:
            w[0] = pin
            return
        w[0] = L[i]
        for j in range(1, i - 1):
            w[j] = L[i - j] + R[i - j + 1]
        w[i - 1] = pin + R[2]
        w[i] = 0.0
    else:
        w[0] = L[i]
        for j in range(1, i):
            w[j] = L[i - j] + R[i - j + 1]
        w[i] = R[1]


def weight_row(double mu, Py_ssize_t i, Py_ssize_t n, double h, bint pinned=False):
    cdef cnp.ndarray[double, ndim=1] w = np.zeros(n + 1)
    cdef cnp.ndarray[double, ndim=1] L = np.zeros(n + 1)
    cdef cnp.ndarray[double, ndim=1] R = np.zeros(n + 1)
    if i > 0:
        _tables(mu, i, h, L, R)
        _fill_row(w, L, R, mu, i, h, pinned)
    return w


def volterra_matrix(double mu, Py_ssize_t n, double h, bint pinned=False):
    cdef cnp.ndarray[double, ndim=2] W = np.zeros((n + 1, n + 1))
    cdef cnp.ndarray[double, ndim=1] L = np.zeros(n + 1)
    cdef cnp.ndarray[double, ndim=1] R = np.zeros(n + 1)
    cdef Py_ssize_t i
    _tables(mu, n, h, L, R)
    for i in range(1, n + 1):
        _fill_row(W[i], L, R, mu, i, h, pinned)
    return W


def boundary_weights(double mu, Py_ssize_t n, double h, bint pinned=False):
    return weight_row(mu, n, n, h, pinned)


def apply_lower(double[:, ::1] W, double[::1] v):
    """out[i] = sum_{j<=i} W[i, j] v[j]; skips the zero upper triangle."""
    cdef Py_ssize_t n = W.shape[0] - 1
    cdef cnp.ndarray[double, ndim=1] out = np.zeros(n + 1)
    cdef Py_ssize_t i, j
    cdef double acc
    for i in range(n + 1):
        acc = 0.0
        for j in range(i + 1):
            acc += W[i, j] * v[j]
        out[i] = acc
    return out
