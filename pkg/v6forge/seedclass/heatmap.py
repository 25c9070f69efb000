"""Entropy heatmaps of cluster centroids or group fingerprints.

Rows are clusters (or groups), columns are nybbles a..b, and darker
cells mean higher entropy, so constant nybbles read as pale bands and
random ones as dark blocks.
"""

from io import BytesIO
from typing import Sequence, Tuple

import numpy as np
from PIL import Image

CELL_SIZE = 24

LOW_COLOR = (247, 251, 255)  # entropy 0
HIGH_COLOR = (8, 48, 107)  # entropy 1


def render_heatmap(
    rows: Sequence[Sequence[float]],
    cell_size: int = CELL_SIZE,
    low: Tuple[int, int, int] = LOW_COLOR,
    high: Tuple[int, int, int] = HIGH_COLOR,
) -> bytes:
    """Render an entropy matrix as a PNG.

    Args:
        rows: Matrix of values in [0, 1]; one row per cluster.
        cell_size: Edge length in pixels of one cell.
        low: Colour for 0.
        high: Colour for 1.

    Returns:
        PNG image data.
    """
    matrix = np.clip(np.asarray(rows, dtype=np.float64), 0.0, 1.0)
    if matrix.ndim != 2 or matrix.size == 0:
        raise ValueError(f"Heatmap needs a non-empty 2-D matrix, got shape {matrix.shape}")

    lo = np.asarray(low, dtype=np.float64)
    hi = np.asarray(high, dtype=np.float64)
    pixels = np.rint(lo + matrix[..., np.newaxis] * (hi - lo)).astype(np.uint8)

    height, width = matrix.shape
    image = Image.fromarray(pixels)
    image = image.resize((width * cell_size, height * cell_size), Image.Resampling.NEAREST)

    with BytesIO() as buffer:
        image.save(buffer, format="PNG")
        return buffer.getvalue()
