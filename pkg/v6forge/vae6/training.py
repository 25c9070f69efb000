"""Mini-batch training of the VAE."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from ..addr6 import SeedSet, encode_batch
from ..exceptions import EmptySeedSet
from ..neuralcore import Tensor, init_optimizer, optimizer_step
from .model import LOSS_KINDS, LossBreakdown, objective_graph
from .params import VaeParams, VaeShape


@dataclass(frozen=True)
class TrainConfig:
    """Training hyperparameters."""

    batch_size: int = 128
    """Examples per optimizer step; smaller seed sets train full-batch."""

    epochs: int = 20
    """Passes over the seed set."""

    learning_rate: float = 1e-3
    """Adam step size."""

    rng_seed: int = 0
    """Seeds parameter init, shuffling and reparameterization noise."""

    patience: Optional[int] = None
    """Stop after this many epochs without a lower mean j_vae. None disables."""

    loss: str = "bce"
    """Reconstruction term: 'bce' (elementwise) or 'categorical' (per row)."""

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be positive, got {self.batch_size}")
        if self.epochs < 0:
            raise ValueError(f"epochs must not be negative, got {self.epochs}")
        if self.learning_rate <= 0:
            raise ValueError(f"learning_rate must be positive, got {self.learning_rate}")
        if self.patience is not None and self.patience < 1:
            raise ValueError(f"patience must be positive, got {self.patience}")
        if self.loss not in LOSS_KINDS:
            raise ValueError(f"loss must be one of {', '.join(LOSS_KINDS)}, got {self.loss!r}")


def train_step(
    params: VaeParams, x: np.ndarray, eps: np.ndarray, kind: str = "bce"
) -> Tuple[dict, LossBreakdown]:
    """Gradients of the batch objective and its terms."""
    leaves = {name: Tensor(value, requires_grad=True) for name, value in params.items()}
    objective, xent, kl = objective_graph(leaves, x, eps, params.shape, kind)
    objective.backward()
    grads = {
        name: leaf.grad if leaf.grad is not None else np.zeros_like(leaf.data)
        for name, leaf in leaves.items()
    }
    return grads, LossBreakdown(j_xent=float(xent.data), j_kl=float(kl.data))


def format_history(history: List[LossBreakdown]) -> str:
    """Training log: one line per epoch."""
    return "".join(f"{i} {h.j_xent:.6f} {h.j_kl:.6f} {h.j_vae:.6f}\n" for i, h in enumerate(history, 1))


def train(
    seeds: SeedSet, cfg: TrainConfig = TrainConfig(), shape: VaeShape = VaeShape()
) -> Tuple[VaeParams, List[LossBreakdown]]:
    """Fit a model to a seed set.

    Args:
        seeds: Training addresses.
        cfg: Hyperparameters.
        shape: Model dimensions.

    Returns:
        Final parameters and the per-epoch mean losses.

    Raises:
        EmptySeedSet: If seeds is empty.
    """
    if len(seeds) == 0:
        raise EmptySeedSet(f"Cannot train on empty seed set {seeds.source_label!r}")

    params = VaeParams.init(shape, cfg.rng_seed)
    history: List[LossBreakdown] = []
    if cfg.epochs == 0:
        return params, history

    grids = encode_batch(seeds.members)
    rng = np.random.default_rng(np.random.SeedSequence([cfg.rng_seed, 1]))
    state = init_optimizer(params.arrays, learning_rate=cfg.learning_rate)
    n = len(grids)
    batch_size = min(cfg.batch_size, n)

    logger.info(
        f"Training on {n} seeds ({seeds.source_label or 'unlabelled'}), "
        f"{shape.parameter_count} parameters, {cfg.epochs} epochs"
    )

    best, stale = np.inf, 0
    for epoch in range(1, cfg.epochs + 1):
        order = rng.permutation(n)
        xent_sum = kl_sum = 0.0
        for start in range(0, n, batch_size):
            index = order[start:start + batch_size]
            eps = rng.standard_normal((len(index), shape.latent)).astype(np.float32)
            grads, parts = train_step(params, grids[index], eps, cfg.loss)
            arrays, state = optimizer_step(state, params.arrays, grads)
            params = params.with_arrays(arrays)
            xent_sum += parts.j_xent * len(index)
            kl_sum += parts.j_kl * len(index)

        epoch_loss = LossBreakdown(j_xent=xent_sum / n, j_kl=kl_sum / n)
        history.append(epoch_loss)
        logger.info(f"epoch {epoch} {epoch_loss}")

        if cfg.patience is not None:
            if epoch_loss.j_vae < best:
                best, stale = epoch_loss.j_vae, 0
            else:
                stale += 1
                if stale >= cfg.patience:
                    logger.info(f"Stopping early after epoch {epoch}")
                    break

    return params, history
