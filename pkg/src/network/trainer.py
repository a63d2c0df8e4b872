from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List, Optional
import numpy as np
from src.basis import BasisMatrix
from src.exceptions import DivergenceError
from src.graph import Graph
from src.network.config import ModelConfig
from src.network.context import SpectralContext
from src.network.linalg import spectral_norm
from src.network.model import accuracy, cross_entropy, forward, loss_and_grads
from src.network.optimizer import adam_step
from src.network.params import ModelParams, init_model
from src.utils import derive_seed, logger

if TYPE_CHECKING:
    from src.services.splits import Split

@dataclass
class MeasuredNorms:
    """Norms of the trained tensors used as the bound constants.

    W_in and W_out are None for a plain stack.
    """

    C_W: List[float]
    C_theta: List[float]
    W_in: Optional[float]
    W_out: Optional[float]

    @classmethod
    def of(cls, params: ModelParams) -> "MeasuredNorms":
        return cls(
            C_W=[spectral_norm(W) for W in params.W_mid],
            C_theta=[float(np.linalg.norm(theta)) for theta in params.thetas],
            W_in=None if params.W_in is None else spectral_norm(params.W_in),
            W_out=None if params.W_out is None else spectral_norm(params.W_out)
        )

    @property
    def wrapper_prefactor(self) -> float:
        return float(np.prod([norm for norm in (self.W_in, self.W_out) if norm is not None]))

@dataclass
class TrainResult:
    train_loss: float
    val_loss: float
    test_loss: float
    train_acc: float
    val_acc: float
    test_acc: float
    gap: float
    epochs_run: int
    best_epoch: int
    measured_norms: MeasuredNorms
    params: ModelParams = field(repr=False)
    config: ModelConfig = field(repr=False)

    def summary(self) -> Dict[str, float]:
        return {
            "train_loss": self.train_loss,
            "val_loss": self.val_loss,
            "test_loss": self.test_loss,
            "train_acc": self.train_acc,
            "val_acc": self.val_acc,
            "test_acc": self.test_acc,
            "gap": self.gap,
            "epochs_run": self.epochs_run,
            "best_epoch": self.best_epoch,
        }

def predict(
    params: ModelParams,
    context: SpectralContext,
    V_P: BasisMatrix,
    model: ModelConfig
) -> np.ndarray:
    logits, _ = forward(params, context.decomposition, V_P, context.graph.features, model, mode="eval")
    return logits

def train(
    model: ModelConfig,
    graph: Graph,
    split: "Split",
    seed: int = None,
    context: Optional[SpectralContext] = None,
    V_P: Optional[BasisMatrix] = None
) -> TrainResult:
    """Full-batch training with early stopping on validation accuracy.

    Ties in validation accuracy go to the lower validation loss; the best
    checkpoint is restored before the final losses are measured.
    """
    seed = model.seed if seed is None else seed
    model = model.for_graph(graph.num_features, max(model.num_classes, graph.num_classes))
    context = context or SpectralContext.from_graph(graph)
    V_P = V_P or context.basis_matrix(model.filter_basis, model.order)

    labels = graph.labels
    params = init_model(model, seed)
    dropout_rng = np.random.default_rng(derive_seed(seed, 1))

    best_params = params
    best_acc, best_val_loss = -np.inf, np.inf
    best_epoch, stale, epoch = 0, 0, 0

    for epoch in range(1, model.max_epochs + 1):
        loss, grads = loss_and_grads(
            params, context.decomposition, V_P, graph.features, labels,
            split.train_idx, model, rng=dropout_rng
        )
        if not np.isfinite(loss):
            raise DivergenceError(epoch, loss)
        params = adam_step(params, grads, model.lr, model.weight_decay)
        if not params.is_finite():
            raise DivergenceError(epoch, loss)

        logits = predict(params, context, V_P, model)
        val_loss, _ = cross_entropy(logits, labels, split.val_idx)
        val_acc = accuracy(logits, labels, split.val_idx)

        if val_acc > best_acc or (val_acc == best_acc and val_loss < best_val_loss):
            best_params, best_acc, best_val_loss, best_epoch = params, val_acc, val_loss, epoch
            stale = 0
        else:
            stale += 1

        if epoch % 50 == 0:
            logger.debug(f"epoch {epoch}: loss={loss:.4f} val_loss={val_loss:.4f} val_acc={val_acc:.3f}")

        if stale >= model.patience:
            logger.debug(f"Early stopping at epoch {epoch} (best epoch {best_epoch})")
            break

    logits = predict(best_params, context, V_P, model)
    train_loss, _ = cross_entropy(logits, labels, split.train_idx)
    val_loss, _ = cross_entropy(logits, labels, split.val_idx)
    test_loss, _ = cross_entropy(logits, labels, split.test_idx)

    result = TrainResult(
        train_loss=train_loss,
        val_loss=val_loss,
        test_loss=test_loss,
        train_acc=accuracy(logits, labels, split.train_idx),
        val_acc=accuracy(logits, labels, split.val_idx),
        test_acc=accuracy(logits, labels, split.test_idx),
        gap=test_loss - train_loss,
        epochs_run=epoch,
        best_epoch=best_epoch,
        measured_norms=MeasuredNorms.of(best_params),
        params=best_params,
        config=model
    )
    logger.info(
        f"Trained {model.filter_basis.name} K={model.order} L={model.num_filter_layers} on {graph.name}: "
        f"test_acc={result.test_acc:.3f} gap={result.gap:.4f} ({epoch} epochs)"
    )
    return result
