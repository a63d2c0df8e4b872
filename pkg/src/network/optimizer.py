import numpy as np
from src.network.params import AdamState, ModelParams

def adam_step(
    params: ModelParams,
    grads: ModelParams,
    lr: float,
    weight_decay: float = 0.0,
    beta1: float = 0.9,
    beta2: float = 0.999,
    eps: float = 1e-8
) -> ModelParams:
    """One bias-corrected Adam step with decoupled weight decay.

    Returns new parameters carrying the advanced optimizer state; inputs are not mutated.
    """
    values = params.as_dict()
    gradients = grads.as_dict()

    state = params.optimizer
    if state is None:
        state = AdamState(
            m={name: np.zeros_like(value) for name, value in values.items()},
            v={name: np.zeros_like(value) for name, value in values.items()},
            step=0
        )

    step = state.step + 1
    m, v, updated = {}, {}, {}
    for name, value in values.items():
        g = gradients[name]
        m[name] = beta1 * state.m[name] + (1.0 - beta1) * g
        v[name] = beta2 * state.v[name] + (1.0 - beta2) * g * g
        m_hat = m[name] / (1.0 - beta1 ** step)
        v_hat = v[name] / (1.0 - beta2 ** step)
        # decay acts on the pre-step value, outside the moment estimates
        updated[name] = value - lr * m_hat / (np.sqrt(v_hat) + eps) - lr * weight_decay * value

    return ModelParams.from_dict(updated, optimizer=AdamState(m=m, v=v, step=step))
