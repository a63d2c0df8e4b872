import numpy as np

def derive_seed(seed: int, *keys: int) -> int:
    """Stable integer seed for a (seed, key...) work item"""
    sequence = np.random.SeedSequence([seed, *keys])
    return int(sequence.generate_state(1, dtype=np.uint32)[0])
