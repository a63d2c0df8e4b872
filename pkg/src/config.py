import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

class Config:
    BASE_DIR = Path(__file__).parent.parent
    RESULTS_DIR = Path(os.getenv("RESULTS_DIR", str(BASE_DIR / "results")))

    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_FILE_NAME = os.getenv("LOG_FILE_NAME", "workbench.log")

    DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))
    SWEEP_JOBS = int(os.getenv("SWEEP_JOBS", "1"))

    # Bound-vs-gap protocol defaults
    LEARNING_RATE = float(os.getenv("LEARNING_RATE", "0.01"))
    WEIGHT_DECAY = float(os.getenv("WEIGHT_DECAY", "1e-5"))
    MAX_EPOCHS = int(os.getenv("MAX_EPOCHS", "500"))
    PATIENCE = int(os.getenv("PATIENCE", "100"))
    HIDDEN_DIM = int(os.getenv("HIDDEN_DIM", "16"))
    DEFAULT_ORDER = int(os.getenv("DEFAULT_ORDER", "10"))

    # Absolute constants of the transductive gap bound
    BOUND_C1 = float(os.getenv("BOUND_C1", "1.0"))
    BOUND_C2 = float(os.getenv("BOUND_C2", "1.0"))
    BOUND_DELTA = float(os.getenv("BOUND_DELTA", "0.05"))
    LOGIT_BOUND = float(os.getenv("LOGIT_BOUND", "50.0"))

    TRAIN_PER_CLASS = int(os.getenv("TRAIN_PER_CLASS", "10"))
    VAL_FRACTION = float(os.getenv("VAL_FRACTION", "0.35"))

    PROFILE_GRID_POINTS = 2001

    BASES = [
        "monomial",
        "chebyshev",
        "legendre",
        "bernstein"
    ]

    LAMBDA_GRID = [0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0]

    SEARCH_SPACE = {
        "lr": [0.0005, 0.001, 0.005, 0.01, 0.05, 0.1],
        "weight_decay": [0.0, 1e-6, 5e-6, 1e-5, 5e-5, 1e-4, 5e-4, 1e-3],
        "hidden_dim": [8, 16, 32, 64, 128],
        "dropout1": [0.0, 0.2, 0.4, 0.6, 0.8],
        "dropout2": [0.0, 0.2, 0.4, 0.6, 0.8],
    }

    SBM_DEFAULTS = {
        "blocks": 3,
        "per_block": 100,
        "p_in": 0.1,
        "p_out": 0.02,
        "feature_dim": 16,
        "signal_strength": 1.0,
    }

    @classmethod
    def create_directories(cls, out_dir: Path = None) -> Path:
        target = Path(out_dir) if out_dir else cls.RESULTS_DIR
        target.mkdir(parents=True, exist_ok=True)
        return target

config = Config()
