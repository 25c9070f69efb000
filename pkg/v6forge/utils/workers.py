"""Thread pool helpers with deterministic result order.

Stages that split work into chunks (seed-file parsing, per-group
fingerprinting) use ordered_map so that merged results never depend on
scheduling.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

from loguru import logger

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], size: int) -> List[Sequence[T]]:
    """Split a sequence into consecutive slices of at most size items."""
    if size < 1:
        raise ValueError(f"Chunk size must be positive, got {size}")
    return [items[i:i + size] for i in range(0, len(items), size)]


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Apply fn to every item, returning results in input order.

    Args:
        fn: Pure function to apply.
        items: Inputs.
        workers: Thread count; 1 or less runs inline on the caller's thread.

    Returns:
        [fn(item) for item in items], computed concurrently when workers > 1.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug(f"Dispatching {len(items)} tasks to {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
