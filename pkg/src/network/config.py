from typing import List, Literal, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator
from src.basis import Basis, BasisKind
from src.config import config

class ModelConfig(BaseModel):
    """Architecture and optimisation settings for one training run.

    ``wrapped`` is the MLP-wrapped residual stack; ``plain`` is a bare stack of
    spectral layers from features to logits with a linear last layer.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    in_dim: int = Field(1, gt=0)
    hidden_dim: int = Field(config.HIDDEN_DIM, gt=0)
    num_classes: int = Field(2, gt=0)
    order: int = Field(config.DEFAULT_ORDER, ge=0)
    basis: BasisKind = BasisKind.CHEBYSHEV
    rescaled: bool = False
    architecture: Literal["wrapped", "plain"] = "wrapped"
    num_filter_layers: int = Field(1, gt=0)
    activation: Literal["relu", "identity"] = "identity"
    dropout1: float = Field(0.0, ge=0.0, lt=1.0)
    dropout2: float = Field(0.0, ge=0.0, lt=1.0)
    lambda_ew: float = Field(0.0, ge=0.0)
    ew_source: Literal["filter_input", "raw_features"] = "filter_input"
    clip_logits: bool = False
    logit_bound: float = Field(config.LOGIT_BOUND, gt=0.0)
    lr: float = Field(config.LEARNING_RATE, gt=0.0)
    weight_decay: float = Field(config.WEIGHT_DECAY, ge=0.0)
    max_epochs: int = Field(config.MAX_EPOCHS, gt=0)
    patience: int = Field(config.PATIENCE, ge=0)
    seed: int = config.DEFAULT_SEED

    @field_validator("basis", mode="before")
    @classmethod
    def _lower_basis(cls, value):
        return value.lower() if isinstance(value, str) else value

    @property
    def filter_basis(self) -> Basis:
        return Basis(kind=self.basis, rescaled=self.rescaled)

    @property
    def is_plain(self) -> bool:
        return self.architecture == "plain"

    @property
    def layer_activations(self) -> List[str]:
        """Activation after each filter layer"""
        if self.is_plain:
            return [self.activation] * (self.num_filter_layers - 1) + ["identity"]
        return [self.activation] * self.num_filter_layers

    @property
    def layer_dims(self) -> List[Tuple[int, int]]:
        """(fan_in, fan_out) of every W_mid"""
        if not self.is_plain:
            return [(self.hidden_dim, self.hidden_dim)] * self.num_filter_layers
        widths = [self.in_dim] + [self.hidden_dim] * (self.num_filter_layers - 1) + [self.num_classes]
        return list(zip(widths[:-1], widths[1:]))

    def with_updates(self, **updates) -> "ModelConfig":
        """Validated copy (model_copy skips validation)"""
        return ModelConfig(**{**self.model_dump(), **updates})

    def for_graph(self, in_dim: int, num_classes: int) -> "ModelConfig":
        return self.with_updates(in_dim=in_dim, num_classes=num_classes)
