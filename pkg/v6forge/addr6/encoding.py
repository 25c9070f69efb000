"""Numeric encodings of nybble sequences.

The model consumes addresses as one-hot grids: 32 rows (one per
nybble position) by 16 columns (one per hex symbol).
"""

from typing import List, Sequence

import numpy as np

from ..exceptions import MalformedAddress, ShapeMismatch
from .address import ALPHABET, NYBBLES, NybbleSeq, is_nybble_seq

SYMBOLS = len(ALPHABET)

_ALPHABET_BYTES = np.frombuffer(ALPHABET.encode("ascii"), dtype=np.uint8)


def nybble_array(members: Sequence[str]) -> np.ndarray:
    """Convert nybble sequences to an (n, 32) array of symbol values 0..15.

    Args:
        members: Valid NybbleSeq strings.

    Returns:
        uint8 array; row r holds the symbol values of members[r].
    """
    if not members:
        return np.zeros((0, NYBBLES), dtype=np.uint8)

    if any(len(member) != NYBBLES for member in members):
        raise MalformedAddress("sequence of wrong length in batch")

    raw = np.frombuffer("".join(members).encode("ascii"), dtype=np.uint8)

    values = raw.reshape(len(members), NYBBLES).astype(np.int16) - ord("0")
    values[values > 9] -= ord("a") - ord("0") - 10
    if values.min() < 0 or values.max() >= SYMBOLS:
        raise MalformedAddress("non-hex symbol in batch")
    return values.astype(np.uint8)


def sequences_from_array(values: np.ndarray) -> List[NybbleSeq]:
    """Inverse of nybble_array."""
    if values.ndim != 2 or values.shape[1] != NYBBLES:
        raise ShapeMismatch("expected (n, 32) symbol array", (-1, NYBBLES), values.shape)

    raw = _ALPHABET_BYTES[values.astype(np.intp)].tobytes().decode("ascii")
    return [NybbleSeq(raw[i:i + NYBBLES]) for i in range(0, len(raw), NYBBLES)]


def encode_onehot(seq: str, dtype=np.float32) -> np.ndarray:
    """Encode one NybbleSeq as a 32x16 one-hot grid.

    G[i][v] = 1 iff symbol i of seq has value v.

    Raises:
        MalformedAddress: If seq is not a valid NybbleSeq.
    """
    if not is_nybble_seq(seq):
        raise MalformedAddress("not a 32-symbol nybble sequence", seq)
    return encode_batch([seq], dtype=dtype)[0]


def encode_batch(members: Sequence[str], dtype=np.float32) -> np.ndarray:
    """Encode many sequences as an (n, 32, 16) stack of one-hot grids."""
    values = nybble_array(members)
    grids = np.zeros((len(members), NYBBLES, SYMBOLS), dtype=dtype)
    grids[np.arange(len(members))[:, np.newaxis], np.arange(NYBBLES), values] = 1
    return grids


def decode_argmax(grids: np.ndarray) -> List[NybbleSeq]:
    """Take the most likely symbol in every row of one or more grids."""
    if grids.ndim == 2:
        grids = grids[np.newaxis]
    if grids.shape[1:] != (NYBBLES, SYMBOLS):
        raise ShapeMismatch("expected (n, 32, 16) grids", (-1, NYBBLES, SYMBOLS), grids.shape)
    return sequences_from_array(np.argmax(grids, axis=-1))
