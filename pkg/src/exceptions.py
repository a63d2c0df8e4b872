class WorkbenchError(Exception):
    """Base exception for workbench errors"""
    pass

class GraphValidationError(WorkbenchError):
    """Graph invariants violated (empty graph, bad edges, row counts)"""
    pass

class ShapeMismatchError(WorkbenchError):
    """Array shapes do not agree"""
    pass

class ConvergenceError(WorkbenchError):
    """Iterative solver exhausted its budget"""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual

class BasisDomainError(WorkbenchError):
    """Polynomial basis called outside its domain"""
    pass

class NonFiniteActivationError(WorkbenchError):
    """Forward pass produced NaN or inf"""

    def __init__(self, layer: str):
        super().__init__(f"Non-finite activations in layer {layer}")
        self.layer = layer

class DivergenceError(WorkbenchError):
    """Training loss became non-finite"""

    def __init__(self, epoch: int, loss: float):
        super().__init__(f"Training diverged at epoch {epoch} (loss={loss})")
        self.epoch = epoch
        self.loss = loss

class BundleFormatError(WorkbenchError):
    """Malformed graph bundle file"""

    def __init__(self, file: str, line: int, message: str):
        super().__init__(f"{file}:{line}: {message}")
        self.file = file
        self.line = line

class SplitError(WorkbenchError):
    """Transductive split cannot be drawn"""
    pass

class BoundInputError(WorkbenchError):
    """Inconsistent inputs to a bound computation"""
    pass

class StatisticsError(WorkbenchError):
    """Statistic undefined for the given sample"""
    pass

class StorageError(WorkbenchError):
    """Result file or database errors"""
    pass

class ConfigError(WorkbenchError):
    """Invalid configuration value or key"""
    pass
