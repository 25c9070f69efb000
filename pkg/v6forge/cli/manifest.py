"""Run artifacts: atomic writes, content digests, seed derivation."""

import hashlib
import json
import os
import tempfile
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, Union

from loguru import logger

SEED_MASK = (1 << 63) - 1


def derive_seed(rng_seed: int, stage: str, category: str = "") -> int:
    """Independent, reproducible seed for one stage (and category)."""
    digest = hashlib.sha256(f"{rng_seed}:{stage}:{category}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") & SEED_MASK


def write_atomic(path: Union[str, Path], data: Union[bytes, str]) -> None:
    """Replace path with data, never leaving a partial file behind."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = data.encode("utf-8") if isinstance(data, str) else data
    fd, temp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as stream:
            stream.write(payload)
        os.replace(temp, path)
    except BaseException:
        Path(temp).unlink(missing_ok=True)
        raise


def sha256_file(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as stream:
        for block in iter(lambda: stream.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


@dataclass
class RunManifest:
    """What a command produced.

    manifest.json lists the config snapshot, version and a digest per
    artifact; wall-clock timings go to timings.json so the manifest is
    identical across reruns.
    """

    command: str
    version: str
    config: Dict[str, object]
    out_dir: Path
    outputs: Dict[str, str] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    def record(self, path: Union[str, Path]) -> None:
        """Add an artifact (inside out_dir) with its digest."""
        path = Path(path)
        try:
            name = path.resolve().relative_to(self.out_dir.resolve()).as_posix()
        except ValueError:
            name = str(path)
        self.outputs[name] = sha256_file(path)

    def write(self, path: Union[str, Path], data: Union[bytes, str]) -> Path:
        """Atomically write an artifact under out_dir and record it."""
        target = self.out_dir / path
        write_atomic(target, data)
        self.record(target)
        logger.debug(f"Wrote {target}")
        return target

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - started, 6)

    def as_dict(self) -> Dict[str, object]:
        return {
            "command": self.command,
            "version": self.version,
            "config": self.config,
            "outputs": dict(sorted(self.outputs.items())),
        }

    def save(self) -> None:
        write_atomic(self.out_dir / "manifest.json", json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n")
        write_atomic(self.out_dir / "timings.json", json.dumps(self.timings, indent=2, sort_keys=True) + "\n")
