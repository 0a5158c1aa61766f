# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels for the squared-loss linear model.

These cover the inner loops that dominate sweep and multi-seed training
runs: the three per-batch gradient reductions and the evaluation residual
sums. Accumulation is strict row order, so output is deterministic for a
given input regardless of build flags. ``_kernels_py`` is the drop-in
fallback with identical signatures.
"""

from libc.math cimport fabs


def sq_grad_triple(double[:, ::1] Xl, double[::1] yl, double[::1] fl,
                   double[:, ::1] Xu, double[::1] fu,
                   double[::1] w, double b, double[:, ::1] out):
    """Mean-reduced gradient triple for the squared loss on a linear model.

    Fills ``out`` (shape (3, d+1), bias coordinate last) with the labeled
    gradient, the labeled pseudo-label gradient, and the unlabeled
    pseudo-label gradient.
    """
    cdef Py_ssize_t n = Xl.shape[0]
    cdef Py_ssize_t m = Xu.shape[0]
    cdef Py_ssize_t d = Xl.shape[1]
    cdef Py_ssize_t i, j
    cdef double pred, rl, rlf, ru

    for i in range(3):
        for j in range(d + 1):
            out[i, j] = 0.0

    for i in range(n):
        pred = b
        for j in range(d):
            pred += Xl[i, j] * w[j]
        rl = pred - yl[i]
        rlf = pred - fl[i]
        for j in range(d):
            out[0, j] += rl * Xl[i, j]
            out[1, j] += rlf * Xl[i, j]
        out[0, d] += rl
        out[1, d] += rlf

    for i in range(m):
        pred = b
        for j in range(d):
            pred += Xu[i, j] * w[j]
        ru = pred - fu[i]
        for j in range(d):
            out[2, j] += ru * Xu[i, j]
        out[2, d] += ru

    for j in range(d + 1):
        out[0, j] /= n
        out[1, j] /= n
        out[2, j] /= m


def sq_grad_batch(double[:, ::1] X, double[::1] y,
                  double[::1] w, double b, double[::1] out):
    """Mean squared-loss gradient of one batch into ``out`` (d+1, bias last)."""
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t d = X.shape[1]
    cdef Py_ssize_t i, j
    cdef double pred, r

    for j in range(d + 1):
        out[j] = 0.0
    for i in range(n):
        pred = b
        for j in range(d):
            pred += X[i, j] * w[j]
        r = pred - y[i]
        for j in range(d):
            out[j] += r * X[i, j]
        out[d] += r
    for j in range(d + 1):
        out[j] /= n


def sq_eval_sums(double[:, ::1] X, double[::1] y, double[::1] w, double b):
    """Sum of squared and absolute residuals of the linear predictor."""
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t d = X.shape[1]
    cdef Py_ssize_t i, j
    cdef double pred, r, sse = 0.0, sae = 0.0

    for i in range(n):
        pred = b
        for j in range(d):
            pred += X[i, j] * w[j]
        r = pred - y[i]
        sse += r * r
        sae += fabs(r)
    return sse, sae
