"""Pure-numpy twin of the compiled kernels in ``_kernels.pyx``.

Same signatures and semantics as the compiled module; selected by
``_backend`` when the extension is unavailable. Reductions here go through
BLAS / pairwise summation, so results can differ from the compiled
sequential accumulation in the last bits; both backends are individually
deterministic and agree to ~1e-15 relative.
"""

import numpy as np


def sq_grad_triple(Xl, yl, fl, Xu, fu, w, b, out):
    """Mean-reduced gradient triple for the squared loss on a linear model.

    Fills ``out`` (shape (3, d+1), bias coordinate last) with the labeled
    gradient, the labeled pseudo-label gradient, and the unlabeled
    pseudo-label gradient.
    """
    n = Xl.shape[0]
    m = Xu.shape[0]
    pred_l = Xl @ w + b
    rl = pred_l - yl
    rlf = pred_l - fl
    ru = Xu @ w + b - fu
    out[0, :-1] = Xl.T @ rl
    out[0, -1] = rl.sum()
    out[1, :-1] = Xl.T @ rlf
    out[1, -1] = rlf.sum()
    out[2, :-1] = Xu.T @ ru
    out[2, -1] = ru.sum()
    out[0] /= n
    out[1] /= n
    out[2] /= m


def sq_grad_batch(X, y, w, b, out):
    """Mean squared-loss gradient of one batch into ``out`` (d+1, bias last)."""
    n = X.shape[0]
    r = X @ w + b - y
    out[:-1] = X.T @ r
    out[-1] = r.sum()
    out /= n


def sq_eval_sums(X, y, w, b):
    """Sum of squared and absolute residuals of the linear predictor."""
    r = X @ w + b - y
    return float(r @ r), float(np.abs(r).sum())
