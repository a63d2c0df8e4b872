from dataclasses import dataclass, field
from typing import List, Literal, Optional, Tuple
import numpy as np
from src.basis import Basis, BasisKind, BasisMatrix, rescale_divisor
from src.exceptions import NonFiniteActivationError, ShapeMismatchError
from src.graph import SpectralDecomposition, gft
from src.network.config import ModelConfig
from src.network.params import ModelParams

Mode = Literal["train", "eval"]

@dataclass
class FilterLayerTape:
    H_in: np.ndarray
    projected: np.ndarray  # U^T H_in W
    response: np.ndarray  # V_P theta
    pre_activation: np.ndarray

@dataclass
class ForwardTape:
    X: np.ndarray
    input_mask: Optional[np.ndarray]
    X_dropped: np.ndarray
    hidden_pre: Optional[np.ndarray]
    hidden_mask: Optional[np.ndarray]
    H0: np.ndarray
    layers: List[FilterLayerTape] = field(default_factory=list)
    output_mask: Optional[np.ndarray] = None
    H_out: Optional[np.ndarray] = None
    logits: Optional[np.ndarray] = None

def activate(Z: np.ndarray, activation: str) -> np.ndarray:
    return np.maximum(Z, 0.0) if activation == "relu" else Z

def activation_derivative(Z: np.ndarray, activation: str) -> np.ndarray:
    # relu'(0) := 0
    return (Z > 0.0).astype(np.float64) if activation == "relu" else np.ones_like(Z)

def dropout_mask(rng: np.random.Generator, shape: Tuple[int, ...], p: float, mode: Mode) -> Optional[np.ndarray]:
    """Inverted dropout: kept entries scaled by 1/(1-p) at train time, identity at eval"""
    if mode != "train" or p <= 0.0:
        return None
    if rng is None:
        raise ValueError("Train-mode dropout needs a random generator")
    return (rng.random(shape) >= p).astype(np.float64) / (1.0 - p)

def _apply_mask(values: np.ndarray, mask: Optional[np.ndarray]) -> np.ndarray:
    return values if mask is None else values * mask

def _check_finite(values: np.ndarray, layer: str):
    if not np.all(np.isfinite(values)):
        raise NonFiniteActivationError(layer)

def filter_layer(
    U: np.ndarray,
    response: np.ndarray,
    H: np.ndarray,
    W: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Spectral filter U diag(response) U^T H W; returns (U^T H W, result)"""
    projected = U.T @ (H @ W)
    return projected, U @ (response[:, None] * projected)

def forward(
    params: ModelParams,
    decomp: SpectralDecomposition,
    V_P: BasisMatrix,
    X: np.ndarray,
    model: ModelConfig,
    mode: Mode = "eval",
    rng: np.random.Generator = None
) -> Tuple[np.ndarray, ForwardTape]:
    """Logits of the filter stack and the tape of its intermediates.

    Wrapped: dropout1, W_in, relu and dropout2 feed the stack, each filter layer
    adds its input back, and dropout1 plus W_out read out. Plain: dropout1 on X,
    then filter layers only, the last one giving the logits.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.shape[0] != decomp.n or V_P.n != decomp.n:
        raise ShapeMismatchError(f"X has {X.shape[0]} rows, V_P {V_P.n}, decomposition {decomp.n}")
    in_dim = params.W_mid[0].shape[0] if params.W_in is None else params.W_in.shape[0]
    if X.shape[1] != in_dim:
        raise ShapeMismatchError(f"X has {X.shape[1]} features, the first layer expects {in_dim}")
    if V_P.values.shape[1] != params.thetas[0].shape[0]:
        raise ShapeMismatchError(f"V_P has {V_P.values.shape[1]} columns, theta has {params.thetas[0].shape[0]}")

    U = decomp.eigenvectors
    plain = params.W_in is None
    activations = model.layer_activations

    input_mask = dropout_mask(rng, X.shape, model.dropout1, mode)
    X_dropped = _apply_mask(X, input_mask)
    if plain:
        hidden_pre, hidden_mask, H = None, None, X_dropped
    else:
        hidden_pre = X_dropped @ params.W_in
        _check_finite(hidden_pre, "input")
        hidden_mask = dropout_mask(rng, hidden_pre.shape, model.dropout2, mode)
        H = _apply_mask(np.maximum(hidden_pre, 0.0), hidden_mask)

    tape = ForwardTape(
        X=X,
        input_mask=input_mask,
        X_dropped=X_dropped,
        hidden_pre=hidden_pre,
        hidden_mask=hidden_mask,
        H0=H
    )

    for index, (theta, W, activation) in enumerate(zip(params.thetas, params.W_mid, activations)):
        response = V_P.response(theta)
        projected, pre_activation = filter_layer(U, response, H, W)
        _check_finite(pre_activation, f"filter_{index}")
        tape.layers.append(FilterLayerTape(
            H_in=H,
            projected=projected,
            response=response,
            pre_activation=pre_activation
        ))
        output = activate(pre_activation, activation)
        H = output if plain else output + H

    if plain:
        tape.H_out = H
        tape.logits = H
    else:
        tape.output_mask = dropout_mask(rng, H.shape, model.dropout1, mode)
        tape.H_out = _apply_mask(H, tape.output_mask)
        tape.logits = tape.H_out @ params.W_out
    _check_finite(tape.logits, "readout")
    return tape.logits, tape

def backward(
    params: ModelParams,
    tape: ForwardTape,
    decomp: SpectralDecomposition,
    V_P: BasisMatrix,
    d_logits: np.ndarray,
    model: ModelConfig
) -> ModelParams:
    """Reverse sweep over the tape for a given logit cotangent"""
    U = decomp.eigenvectors
    plain = params.W_in is None
    activations = model.layer_activations

    if plain:
        dW_out, dH = None, d_logits
    else:
        dW_out = tape.H_out.T @ d_logits
        dH = _apply_mask(d_logits @ params.W_out.T, tape.output_mask)

    d_thetas = [None] * len(tape.layers)
    dW_mid = [None] * len(tape.layers)
    for index in reversed(range(len(tape.layers))):
        layer = tape.layers[index]
        W = params.W_mid[index]

        d_pre = dH * activation_derivative(layer.pre_activation, activations[index])
        d_spectral = U.T @ d_pre
        d_response = np.sum(d_spectral * layer.projected, axis=1)
        d_thetas[index] = V_P.values.T @ d_response
        d_projected = U @ (layer.response[:, None] * d_spectral)
        dW_mid[index] = layer.H_in.T @ d_projected
        d_input = d_projected @ W.T
        # residual branch passes dH through unchanged
        dH = d_input if plain else dH + d_input

    dW_in = None
    if not plain:
        d_hidden = _apply_mask(dH, tape.hidden_mask) * (tape.hidden_pre > 0.0)
        dW_in = tape.X_dropped.T @ d_hidden

    return ModelParams(W_in=dW_in, thetas=d_thetas, W_mid=dW_mid, W_out=dW_out)

def cross_entropy(
    logits: np.ndarray,
    labels: np.ndarray,
    mask: np.ndarray,
    clip: Optional[float] = None
) -> Tuple[float, np.ndarray]:
    """Mean softmax cross-entropy over `mask` and its logit gradient"""
    idx = np.asarray(mask, dtype=np.int64).reshape(-1)
    if idx.size == 0:
        raise ShapeMismatchError("Loss mask selects no nodes")

    z = logits[idx]
    inside = np.ones_like(z)
    if clip is not None:
        inside = (np.abs(z) <= clip).astype(np.float64)
        z = np.clip(z, -clip, clip)

    shifted = z - z.max(axis=1, keepdims=True)
    log_norm = np.log(np.sum(np.exp(shifted), axis=1))
    targets = np.asarray(labels)[idx]
    rows = np.arange(idx.size)
    loss = float(np.mean(log_norm - shifted[rows, targets]))

    probs = np.exp(shifted - log_norm[:, None])
    probs[rows, targets] -= 1.0
    d_logits = np.zeros_like(logits)
    d_logits[idx] = probs * inside / idx.size
    return loss, d_logits

def accuracy(logits: np.ndarray, labels: np.ndarray, mask: np.ndarray) -> float:
    idx = np.asarray(mask, dtype=np.int64).reshape(-1)
    return float(np.mean(np.argmax(logits[idx], axis=1) == np.asarray(labels)[idx]))

def energy_ratio(
    decomp: SpectralDecomposition,
    V_P: BasisMatrix,
    theta: np.ndarray,
    H_in: np.ndarray
) -> Tuple[float, np.ndarray]:
    """R_EW = ||diag(V_P theta) U^T H||_F^2 / ||U^T H||_F^2 with H held constant.

    Returns the ratio and its gradient with respect to theta; a zero-energy input gives 0.
    """
    energy = np.sum(gft(decomp, H_in, "forward") ** 2, axis=1)
    total = energy.sum()
    if total <= 0.0:
        return 0.0, np.zeros_like(theta)

    response = V_P.response(theta)
    ratio = float(np.sum(response ** 2 * energy) / total)
    d_theta = V_P.values.T @ (2.0 * response * energy / total)
    return ratio, d_theta

def loss_and_grads(
    params: ModelParams,
    decomp: SpectralDecomposition,
    V_P: BasisMatrix,
    X: np.ndarray,
    labels: np.ndarray,
    mask: np.ndarray,
    model: ModelConfig,
    rng: np.random.Generator = None,
    mode: Mode = "train"
) -> Tuple[float, ModelParams]:
    """Training objective (cross-entropy + lambda_EW * R_EW) and its gradients"""
    logits, tape = forward(params, decomp, V_P, X, model, mode=mode, rng=rng)
    clip = model.logit_bound if model.clip_logits else None
    loss, d_logits = cross_entropy(logits, labels, mask, clip=clip)
    grads = backward(params, tape, decomp, V_P, d_logits, model)

    if model.lambda_ew > 0.0:
        source = tape.H0 if model.ew_source == "filter_input" else tape.X
        ratio, d_theta = energy_ratio(decomp, V_P, params.thetas[0], source)
        loss += model.lambda_ew * ratio
        grads.thetas[0] = grads.thetas[0] + model.lambda_ew * d_theta

    return loss, grads

def spatial_filter(
    A_hat: np.ndarray,
    basis: Basis,
    theta: np.ndarray,
    H: np.ndarray,
    W: np.ndarray
) -> np.ndarray:
    """sum_k theta_k P_k(A_hat) H W evaluated with matrix recurrences, no eigenvectors"""
    K = theta.shape[0] - 1
    HW = H @ W
    terms = []

    if basis.kind is BasisKind.BERNSTEIN:
        n = A_hat.shape[0]
        lift = 0.5 * (np.eye(n) + A_hat)
        drop = 0.5 * (np.eye(n) - A_hat)
        binomial = 1.0
        drop_powers = [HW]
        for _ in range(K):
            drop_powers.append(drop @ drop_powers[-1])
        for k in range(K + 1):
            term = drop_powers[K - k]
            for _ in range(k):
                term = lift @ term
            terms.append(binomial * term)
            binomial = binomial * (K - k) / (k + 1)
    else:
        terms.append(HW)
        if K >= 1:
            terms.append(A_hat @ HW)
        for k in range(1, K):
            if basis.kind is BasisKind.MONOMIAL:
                terms.append(A_hat @ terms[k])
            elif basis.kind is BasisKind.CHEBYSHEV:
                terms.append(2.0 * A_hat @ terms[k] - terms[k - 1])
            else:
                terms.append(((2 * k + 1) * A_hat @ terms[k] - k * terms[k - 1]) / (k + 1))

    divisor = rescale_divisor(basis, K)
    return sum(t * c for t, c in zip(terms, theta)) / divisor
