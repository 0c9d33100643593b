"""Optimizers for variational parameter updates.

All optimizers consume a callable returning ``(value, gradient)`` and walk a
parameter vector downhill.  Adam is the default; plain gradient descent is
kept for comparisons and for tests that want a predictable step; L-BFGS
(via scipy) converges in far fewer iterations on these landscapes and is
what the headline experiments use.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.optimize


@dataclass
class OptimizerConfig:
    """Settings shared by the pre-training and joint optimization stages."""

    method: str = "adam"
    learning_rate: float = 0.05
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    pretrain_max_iters: int = 2000
    grad_tol: float = 1e-3
    joint_iters: int = 200

    def __post_init__(self):
        if self.method not in ("adam", "gd", "lbfgs"):
            raise ValueError(f"unknown optimizer method {self.method!r}")


@dataclass
class MinimizeResult:
    x: np.ndarray
    value: float
    n_iters: int
    converged: bool
    history: list = field(default_factory=list)


def minimize(fun, x0, config: OptimizerConfig, max_iters: int,
             grad_tol: float | None = None, callback=None) -> MinimizeResult:
    """Run up to ``max_iters`` optimizer steps on ``fun``.

    ``fun(x)`` must return ``(value, gradient)``.  If ``grad_tol`` is given the
    loop stops early once the 2-norm of the gradient drops below it.  The
    returned iterate is the best one seen, not necessarily the last.
    ``callback(k, value, grad_norm)`` fires once per accepted step.
    """
    if config.method == "lbfgs":
        return _minimize_lbfgs(fun, x0, max_iters, grad_tol, callback)
    x = np.array(x0, dtype=float)
    value, grad = fun(x)
    history = [value]
    best_x, best_value = x.copy(), value
    m = np.zeros_like(x)
    v = np.zeros_like(x)
    converged = False
    n_iters = 0
    for k in range(max_iters):
        gnorm = float(np.linalg.norm(grad))
        if grad_tol is not None and gnorm < grad_tol:
            converged = True
            break
        if config.method == "adam":
            m = config.beta1 * m + (1.0 - config.beta1) * grad
            v = config.beta2 * v + (1.0 - config.beta2) * grad * grad
            m_hat = m / (1.0 - config.beta1 ** (k + 1))
            v_hat = v / (1.0 - config.beta2 ** (k + 1))
            x = x - config.learning_rate * m_hat / (np.sqrt(v_hat) + config.eps)
        else:
            x = x - config.learning_rate * grad
        value, grad = fun(x)
        history.append(value)
        if value < best_value:
            best_x, best_value = x.copy(), value
        n_iters = k + 1
        if callback is not None:
            callback(n_iters, value, float(np.linalg.norm(grad)))
    return MinimizeResult(x=best_x, value=best_value, n_iters=n_iters,
                         converged=converged, history=history)


def _minimize_lbfgs(fun, x0, max_iters, grad_tol, callback) -> MinimizeResult:
    """L-BFGS-B wrapper with the same best-seen / early-stop semantics.

    The gradient-norm stopping rule is enforced in the per-iteration
    callback (2-norm, matching the Adam path) rather than through scipy's
    infinity-norm ``gtol``.
    """
    state = {"value": np.inf, "gnorm": np.inf, "best_x": np.array(x0, float),
             "best_value": np.inf, "n_iters": 0, "converged": False,
             "history": []}

    def wrapped(x):
        value, grad = fun(x)
        state["value"] = value
        state["gnorm"] = float(np.linalg.norm(grad))
        if value < state["best_value"]:
            state["best_value"] = value
            state["best_x"] = np.array(x, float)
        return value, grad

    def cb(_xk):
        state["n_iters"] += 1
        state["history"].append(state["value"])
        if callback is not None:
            callback(state["n_iters"], state["value"], state["gnorm"])
        if grad_tol is not None and state["gnorm"] < grad_tol:
            state["converged"] = True
            raise StopIteration

    try:
        scipy.optimize.minimize(
            wrapped, np.array(x0, float), jac=True, method="L-BFGS-B",
            callback=cb,
            options={"maxiter": max_iters, "maxfun": 10 ** 8,
                     "ftol": 1e-16, "gtol": 1e-12})
    except StopIteration:
        pass
    return MinimizeResult(x=state["best_x"], value=state["best_value"],
                          n_iters=state["n_iters"],
                          converged=state["converged"],
                          history=state["history"])
