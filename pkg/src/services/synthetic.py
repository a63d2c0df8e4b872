from typing import Dict
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from src.config import config
from src.exceptions import ConfigError, GraphValidationError
from src.graph import Graph
from src.utils import logger

class SbmParams(BaseModel):
    """Stochastic block model settings; `heterophilous` flips the p_in/p_out ordering"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    blocks: int = Field(config.SBM_DEFAULTS["blocks"], gt=0)
    per_block: int = Field(config.SBM_DEFAULTS["per_block"], gt=0)
    p_in: float = Field(config.SBM_DEFAULTS["p_in"], ge=0.0, le=1.0)
    p_out: float = Field(config.SBM_DEFAULTS["p_out"], ge=0.0, le=1.0)
    feature_dim: int = Field(config.SBM_DEFAULTS["feature_dim"], gt=0)
    signal_strength: float = Field(config.SBM_DEFAULTS["signal_strength"], ge=0.0)
    heterophilous: bool = False

    @model_validator(mode="after")
    def _check_ordering(self):
        if not self.heterophilous and self.p_out > self.p_in:
            raise ValueError(f"homophilous SBM needs p_out <= p_in (got {self.p_out} > {self.p_in})")
        if self.heterophilous and self.p_in > self.p_out:
            raise ValueError(f"heterophilous SBM needs p_in <= p_out (got {self.p_in} > {self.p_out})")
        if self.feature_dim < self.blocks:
            raise ValueError(f"feature_dim={self.feature_dim} cannot hold {self.blocks} orthogonal class means")
        return self

    @property
    def name(self) -> str:
        kind = "hetero" if self.heterophilous else "homo"
        return f"sbm-{kind}-{self.blocks}x{self.per_block}"

    @classmethod
    def preset(cls, name: str) -> Dict[str, object]:
        presets = {
            "default": {},
            "homophilous": {},
            "heterophilous": {
                "p_in": config.SBM_DEFAULTS["p_out"],
                "p_out": config.SBM_DEFAULTS["p_in"],
                "heterophilous": True,
            },
        }
        if name not in presets:
            raise ConfigError(f"Unknown SBM preset '{name}' (expected one of {', '.join(presets)})")
        return dict(presets[name])

    @classmethod
    def parse(cls, text: str) -> "SbmParams":
        """Parse 'default', 'heterophilous' or 'preset,key=value,...' / 'key=value,...'"""
        values = {}
        for token in [part.strip() for part in text.split(",") if part.strip()]:
            if "=" not in token:
                values.update(cls.preset(token.lower()))
                continue
            key, value = [piece.strip() for piece in token.split("=", 1)]
            key = key.replace("-", "_")
            if key == "heterophilous":
                values[key] = value.lower() in ("1", "true", "yes")
            else:
                values[key] = value

        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigError(f"Invalid --sbm '{text}': {e.errors()[0]['msg']}")

def generate_sbm(
    blocks: int,
    per_block: int,
    p_in: float,
    p_out: float,
    feature_dim: int,
    signal_strength: float,
    seed: int,
    name: str = None
) -> Graph:
    """Undirected SBM with one-hot class means (times signal_strength) plus unit Gaussian noise"""
    if blocks <= 0 or per_block <= 0:
        raise GraphValidationError(f"SBM needs non-empty blocks (blocks={blocks}, per_block={per_block})")
    if not (0.0 <= p_in <= 1.0 and 0.0 <= p_out <= 1.0):
        raise GraphValidationError(f"edge probabilities must lie in [0, 1] (p_in={p_in}, p_out={p_out})")
    if feature_dim < blocks:
        raise GraphValidationError(f"feature_dim={feature_dim} must be >= blocks={blocks}")

    rng = np.random.default_rng(seed)
    n = blocks * per_block
    labels = np.repeat(np.arange(blocks), per_block)

    same_block = labels[:, None] == labels[None, :]
    probability = np.where(same_block, p_in, p_out)
    draws = rng.random((n, n))
    upper = np.triu(draws < probability, k=1)
    rows, cols = np.nonzero(upper)

    means = np.zeros((blocks, feature_dim))
    means[np.arange(blocks), np.arange(blocks)] = signal_strength
    features = means[labels] + rng.standard_normal((n, feature_dim))

    graph = Graph(
        n=n,
        edges=np.stack([rows, cols], axis=1),
        features=features,
        labels=labels,
        name=name or f"sbm-{blocks}x{per_block}"
    )
    logger.debug(f"Generated {graph.name}: {graph.num_edges} edges (seed={seed})")
    return graph

def random_graph(n: int, p: float, feature_dim: int, num_classes: int, seed: int, name: str = None) -> Graph:
    """Erdos-Renyi graph with Gaussian features and uniform labels, for property checks"""
    if n <= 0:
        raise GraphValidationError("random graph needs at least one node")
    rng = np.random.default_rng(seed)
    rows, cols = np.nonzero(np.triu(rng.random((n, n)) < p, k=1))
    return Graph(
        n=n,
        edges=np.stack([rows, cols], axis=1),
        features=rng.standard_normal((n, feature_dim)),
        labels=rng.integers(0, num_classes, size=n),
        name=name or f"gnp-{n}"
    )

def sbm_from_params(params: SbmParams, seed: int) -> Graph:
    return generate_sbm(
        blocks=params.blocks,
        per_block=params.per_block,
        p_in=params.p_in,
        p_out=params.p_out,
        feature_dim=params.feature_dim,
        signal_strength=params.signal_strength,
        seed=seed,
        name=params.name
    )
