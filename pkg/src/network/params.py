from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional
import numpy as np
from src.basis import BasisKind, rescale_divisor
from src.exceptions import ShapeMismatchError
from src.network.config import ModelConfig

@dataclass
class AdamState:
    m: Dict[str, np.ndarray]
    v: Dict[str, np.ndarray]
    step: int = 0

@dataclass
class ModelParams:
    """Trainable tensors of the spectral filter stack.

    A plain stack has no W_in or W_out. Also used as the container for
    gradients, which share its shapes.
    """

    W_in: Optional[np.ndarray]
    thetas: List[np.ndarray]
    W_mid: List[np.ndarray]
    W_out: Optional[np.ndarray]
    optimizer: Optional[AdamState] = field(default=None, repr=False)

    @property
    def num_filter_layers(self) -> int:
        return len(self.thetas)

    def as_dict(self) -> Dict[str, np.ndarray]:
        """Tensors keyed by name in a fixed order"""
        tensors = {} if self.W_in is None else {"W_in": self.W_in}
        for index, (theta, weight) in enumerate(zip(self.thetas, self.W_mid)):
            tensors[f"theta_{index}"] = theta
            tensors[f"W_mid_{index}"] = weight
        if self.W_out is not None:
            tensors["W_out"] = self.W_out
        return tensors

    @classmethod
    def from_dict(cls, tensors: Dict[str, np.ndarray], optimizer: AdamState = None) -> "ModelParams":
        layers = sum(1 for name in tensors if name.startswith("theta_"))
        wrapper = {
            name: None if tensors.get(name) is None else np.asarray(tensors[name], dtype=np.float64)
            for name in ("W_in", "W_out")
        }
        if (wrapper["W_in"] is None) != (wrapper["W_out"] is None):
            raise ShapeMismatchError("W_in and W_out must be present together")
        try:
            return cls(
                W_in=wrapper["W_in"],
                thetas=[np.asarray(tensors[f"theta_{l}"], dtype=np.float64) for l in range(layers)],
                W_mid=[np.asarray(tensors[f"W_mid_{l}"], dtype=np.float64) for l in range(layers)],
                W_out=wrapper["W_out"],
                optimizer=optimizer
            )
        except KeyError as e:
            raise ShapeMismatchError(f"Missing parameter tensor {e}")

    def map(self, fn: Callable[[np.ndarray], np.ndarray]) -> "ModelParams":
        return ModelParams.from_dict({name: fn(value) for name, value in self.as_dict().items()})

    def copy(self) -> "ModelParams":
        return self.map(np.copy)

    def zeros_like(self) -> "ModelParams":
        return self.map(np.zeros_like)

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(value)) for value in self.as_dict().values())

    def check_shapes(self, model: ModelConfig):
        expected = {}
        if not model.is_plain:
            expected["W_in"] = (model.in_dim, model.hidden_dim)
            expected["W_out"] = (model.hidden_dim, model.num_classes)
        for l, dims in enumerate(model.layer_dims):
            expected[f"theta_{l}"] = (model.order + 1,)
            expected[f"W_mid_{l}"] = dims

        actual = self.as_dict()
        if set(actual) != set(expected):
            raise ShapeMismatchError(f"Parameter names {sorted(actual)} do not match config")
        for name, shape in expected.items():
            if actual[name].shape != shape:
                raise ShapeMismatchError(f"{name} has shape {actual[name].shape}, expected {shape}")

def identity_filter(model: ModelConfig) -> Optional[np.ndarray]:
    """Coefficients with response g(lambda) = lambda, or None when order 0 cannot express it"""
    K = model.order
    if K < 1:
        return None

    if model.basis is BasisKind.BERNSTEIN:
        # sum_k B_k(t) (2k/K - 1) = 2t - 1 = x
        theta = 2.0 * np.arange(K + 1) / K - 1.0
    else:
        theta = np.zeros(K + 1)
        theta[1] = 1.0
    return theta * rescale_divisor(model.filter_basis, K)

def _uniform(rng: np.random.Generator, fan_in: int, fan_out: int) -> np.ndarray:
    bound = 1.0 / np.sqrt(fan_in)
    return rng.uniform(-bound, bound, size=(fan_in, fan_out))

def init_model(model: ModelConfig, seed: int = None) -> ModelParams:
    """Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights and identity-propagation filters"""
    rng = np.random.default_rng(model.seed if seed is None else seed)

    W_in = None if model.is_plain else _uniform(rng, model.in_dim, model.hidden_dim)
    thetas, W_mid = [], []
    for fan_in, fan_out in model.layer_dims:
        theta = identity_filter(model)
        if theta is None:
            theta = rng.uniform(-0.1, 0.1, size=model.order + 1)
        thetas.append(theta)
        W_mid.append(_uniform(rng, fan_in, fan_out))
    W_out = None if model.is_plain else _uniform(rng, model.hidden_dim, model.num_classes)

    return ModelParams(W_in=W_in, thetas=thetas, W_mid=W_mid, W_out=W_out)
