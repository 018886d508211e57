"""Dense numeric kernels with analytic backward passes.

Everything the network needs and nothing more: matrix product, the two
gate nonlinearities, a stabilized softmax, softmax-fused cross-entropy,
and a central-difference gradient checker that keeps the backward passes
honest.  Tensors are plain float64 numpy arrays; there is no tape -- each
operation exposes its own backward function because the network is a
fixed small graph.
"""

from __future__ import annotations

from typing import Callable

import numpy as np


class ShapeMismatch(ValueError):
    pass


class TargetOutOfRange(IndexError):
    pass


PROB_FLOOR = 1e-12  # clamp for log() in the loss


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def matmul_backward(d_out: np.ndarray, a: np.ndarray, b: np.ndarray):
    """Gradients of ``a @ b``: ``(d_out @ b.T, a.T @ d_out)``."""
    return d_out @ b.T, a.T @ d_out


def sigmoid(x: np.ndarray) -> np.ndarray:
    # split by sign to avoid overflow in exp for large |x|
    out = np.empty_like(x, dtype=float)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def sigmoid_backward(d_out: np.ndarray, y: np.ndarray) -> np.ndarray:
    """``y`` is the forward output: d/dx sigmoid = y * (1 - y)."""
    return d_out * y * (1.0 - y)


def tanh(x: np.ndarray) -> np.ndarray:
    return np.tanh(x)


def tanh_backward(d_out: np.ndarray, y: np.ndarray) -> np.ndarray:
    return d_out * (1.0 - y * y)


def softmax(x: np.ndarray) -> np.ndarray:
    """Probability vector over the last axis, stabilized by max subtraction."""
    shifted = x - np.max(x, axis=-1, keepdims=True)
    ex = np.exp(shifted)
    return ex / ex.sum(axis=-1, keepdims=True)


def cross_entropy(predicted: np.ndarray, target: int) -> float:
    """Negative log-likelihood of ``target`` under a probability vector."""
    if not 0 <= target < predicted.shape[-1]:
        raise TargetOutOfRange(f"target {target} outside [0, {predicted.shape[-1]})")
    return float(-np.log(max(predicted[target], PROB_FLOOR)))


def softmax_cross_entropy_backward(predicted: np.ndarray, target: int) -> np.ndarray:
    """Gradient w.r.t. logits when softmax and cross-entropy are fused."""
    if not 0 <= target < predicted.shape[-1]:
        raise TargetOutOfRange(f"target {target} outside [0, {predicted.shape[-1]})")
    grad = predicted.copy()
    grad[target] -= 1.0
    return grad


Params = dict[str, np.ndarray]


def grad_check(
    loss_fn: Callable[[Params], tuple[float, Params]],
    params: Params,
    epsilon: float = 1e-5,
) -> float:
    """Max relative error between analytic and central-difference gradients.

    ``loss_fn`` must be deterministic and return ``(loss, grads)`` where
    ``grads`` maps every key in ``params`` to an array of the same shape.
    The numeric side perturbs one coordinate at a time:
    ``(f(p + eps) - f(p - eps)) / (2 eps)``.  Relative error per
    coordinate is ``|a - n| / max(|a| + |n|, 1e-8)``.
    """
    _, analytic = loss_fn(params)
    worst = 0.0
    for name, value in params.items():
        flat = value.reshape(-1)
        numeric = np.zeros_like(flat)
        for i in range(flat.size):
            original = flat[i]
            flat[i] = original + epsilon
            loss_plus, _ = loss_fn(params)
            flat[i] = original - epsilon
            loss_minus, _ = loss_fn(params)
            flat[i] = original
            numeric[i] = (loss_plus - loss_minus) / (2 * epsilon)
        a = analytic[name].reshape(-1)
        err = np.abs(a - numeric) / np.maximum(np.abs(a) + np.abs(numeric), 1e-8)
        worst = max(worst, float(err.max(initial=0.0)))
    return worst
