"""Versioned binary model files.

Layout (little-endian):
- Header: magic b"V6GC", format version (1 byte), positions, alphabet,
  channels, latent (uint16 each)
- Shape table: per parameter in storage order, rank (1 byte) then each
  dimension (uint32)
- Values: every parameter as float32, in storage order
- Trailer: CRC-32 of everything before it (uint32)
"""

import struct
import zlib
from pathlib import Path
from typing import Union

import numpy as np
from loguru import logger

from ..exceptions import CorruptModel, VersionMismatch
from .params import VaeParams, VaeShape

MAGIC = b"V6GC"
FORMAT_VERSION = 1

HEADER = struct.Struct("<4sBHHHH")
RANK = struct.Struct("<B")
DIM = struct.Struct("<I")
CHECKSUM = struct.Struct("<I")

VALUE_DTYPE = np.dtype("<f4")


def save_params(p: VaeParams) -> bytes:
    """Serialize parameters to the model file format."""
    shape = p.shape
    body = bytearray(
        HEADER.pack(MAGIC, FORMAT_VERSION, shape.positions, shape.alphabet, shape.channels, shape.latent)
    )
    for _, value in p.items():
        body += RANK.pack(value.ndim)
        for dim in value.shape:
            body += DIM.pack(dim)
    for _, value in p.items():
        body += np.ascontiguousarray(value, dtype=VALUE_DTYPE).tobytes()
    body += CHECKSUM.pack(zlib.crc32(body))
    return bytes(body)


def load_params(data: bytes) -> VaeParams:
    """Parse a model file.

    Raises:
        CorruptModel: On bad magic, truncation, checksum or layout errors.
        VersionMismatch: If the file was written by another format version.
    """
    if len(data) < HEADER.size + CHECKSUM.size:
        raise CorruptModel(f"model file too short ({len(data)} bytes)")

    magic, version, positions, alphabet, channels, latent = HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise CorruptModel(f"bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise VersionMismatch(FORMAT_VERSION, version)

    body, (stored,) = data[:-CHECKSUM.size], CHECKSUM.unpack_from(data, len(data) - CHECKSUM.size)
    if zlib.crc32(body) != stored:
        raise CorruptModel("checksum mismatch")

    try:
        shape = VaeShape(positions=positions, alphabet=alphabet, channels=channels, latent=latent)
    except ValueError as e:
        raise CorruptModel(str(e)) from e

    offset = HEADER.size
    dims = []
    for name, expected in shape.layout():
        try:
            (rank,) = RANK.unpack_from(body, offset)
            offset += RANK.size
            got = tuple(DIM.unpack_from(body, offset + i * DIM.size)[0] for i in range(rank))
        except struct.error as e:
            raise CorruptModel(f"shape table is truncated at {name!r}") from e
        offset += rank * DIM.size
        if got != expected:
            raise CorruptModel(f"parameter {name!r} stored as {got}, expected {expected}")
        dims.append((name, got))

    arrays = {}
    for name, got in dims:
        count = int(np.prod(got))
        end = offset + count * VALUE_DTYPE.itemsize
        if end > len(body):
            raise CorruptModel(f"values of {name!r} are truncated")
        arrays[name] = np.frombuffer(body, dtype=VALUE_DTYPE, count=count, offset=offset).reshape(got).astype(np.float32)
        offset = end
    if offset != len(body):
        raise CorruptModel(f"{len(body) - offset} unexpected trailing bytes")

    return VaeParams(shape, arrays)


def write_model_file(p: VaeParams, path: Union[str, Path]) -> None:
    data = save_params(p)
    Path(path).write_bytes(data)
    logger.debug(f"Wrote {len(data)} byte model to {path}")


def read_model_file(path: Union[str, Path]) -> VaeParams:
    return load_params(Path(path).read_bytes())
