"""Jacobian-vector products of the spectral filter core.

The core is the non-residual stack H_{l+1} = act_l(U diag(V_P theta_l) U^T H_l W_l),
differentiated with respect to its input H_0. For a wrapped model H_0 is relu(X W_in)
in eval mode; a plain model is its own core and H_0 = X.
"""

from typing import List, Literal, Sequence, Union
import numpy as np
from src.basis import BasisMatrix
from src.exceptions import ShapeMismatchError
from src.graph import SpectralDecomposition
from src.network.model import activate, activation_derivative, filter_layer
from src.network.params import ModelParams

JacobianDirection = Literal["jvp", "vjp"]
Activations = Union[str, Sequence[str]]

def _per_layer(activation: Activations, layers: int) -> List[str]:
    if isinstance(activation, str):
        return [activation] * layers
    if len(activation) != layers:
        raise ShapeMismatchError(f"{len(activation)} activations for {layers} filter layers")
    return list(activation)

def core_input(params: ModelParams, X: np.ndarray) -> np.ndarray:
    """Filter-stack input: relu(X W_in) with dropout disabled, or X for a plain stack"""
    X = np.asarray(X, dtype=np.float64)
    if params.W_in is None:
        return X
    return np.maximum(X @ params.W_in, 0.0)

def core_forward(
    params: ModelParams,
    decomp: SpectralDecomposition,
    V_P: BasisMatrix,
    H0: np.ndarray,
    activation: Activations = "relu"
) -> List[np.ndarray]:
    """Pre-activations of every core layer at the point H0"""
    U = decomp.eigenvectors
    H = H0
    pre_activations = []
    for theta, W, act in zip(params.thetas, params.W_mid, _per_layer(activation, len(params.thetas))):
        _, pre = filter_layer(U, V_P.response(theta), H, W)
        pre_activations.append(pre)
        H = activate(pre, act)
    return pre_activations

def core_output(params, decomp, V_P, H0, activation: Activations = "relu") -> np.ndarray:
    last = _per_layer(activation, len(params.thetas))[-1]
    return activate(core_forward(params, decomp, V_P, H0, activation)[-1], last)

def jacobian_apply(
    params: ModelParams,
    decomp: SpectralDecomposition,
    V_P: BasisMatrix,
    H0: np.ndarray,
    v: np.ndarray,
    direction: JacobianDirection = "jvp",
    activation: Activations = "relu"
) -> np.ndarray:
    """J v (jvp) or J^T v (vjp) of the core at H0; `v` has the shape of H0 or of the output"""
    H0 = np.asarray(H0, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    out_shape = (H0.shape[0], params.W_mid[-1].shape[1])
    expected = H0.shape if direction == "jvp" else out_shape
    if v.shape != expected:
        raise ShapeMismatchError(f"Direction has shape {v.shape}, expected {expected}")

    U = decomp.eigenvectors
    activations = _per_layer(activation, len(params.thetas))
    pre_activations = core_forward(params, decomp, V_P, H0, activations)
    responses = [V_P.response(theta) for theta in params.thetas]
    layers = list(zip(responses, params.W_mid, pre_activations, activations))

    if direction == "jvp":
        tangent = v
        for response, W, pre, act in layers:
            _, d_pre = filter_layer(U, response, tangent, W)
            tangent = activation_derivative(pre, act) * d_pre
        return tangent

    if direction == "vjp":
        cotangent = v
        for response, W, pre, act in reversed(layers):
            d_pre = cotangent * activation_derivative(pre, act)
            cotangent = (U @ (response[:, None] * (U.T @ d_pre))) @ W.T
        return cotangent

    raise ValueError(f"Unknown Jacobian direction: {direction}")
