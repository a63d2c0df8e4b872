from .config import ModelConfig
from .params import AdamState, ModelParams, identity_filter, init_model
from .context import SpectralContext
from .model import (
    ForwardTape,
    accuracy,
    backward,
    cross_entropy,
    energy_ratio,
    forward,
    loss_and_grads,
    spatial_filter,
)
from .jacobian import core_forward, core_input, core_output, jacobian_apply
from .linalg import spectral_norm
from .optimizer import adam_step
from .trainer import MeasuredNorms, TrainResult, predict, train
from .checkpoint import load_checkpoint, save_checkpoint

__all__ = [
    "ModelConfig",
    "AdamState",
    "ModelParams",
    "identity_filter",
    "init_model",
    "SpectralContext",
    "ForwardTape",
    "accuracy",
    "backward",
    "cross_entropy",
    "energy_ratio",
    "forward",
    "loss_and_grads",
    "spatial_filter",
    "core_forward",
    "core_input",
    "core_output",
    "jacobian_apply",
    "spectral_norm",
    "adam_step",
    "MeasuredNorms",
    "TrainResult",
    "predict",
    "train",
    "load_checkpoint",
    "save_checkpoint",
]
