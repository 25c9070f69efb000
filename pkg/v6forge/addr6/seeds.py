"""Seed sets: loading, deduplication and export of address files.

Address files hold one textual IPv6 address per line. Blank lines and
lines starting with "#" are ignored. Export always writes canonical
text, one address per line with no header, so the output doubles as a
scanner target list.
"""

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import (
    BinaryIO,
    FrozenSet,
    IO,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
from loguru import logger

from ..exceptions import MalformedAddress
from ..utils.workers import chunked, ordered_map
from .address import NybbleSeq, as_nybble_seq, canonicalize, nybbles_to_text
from .encoding import nybble_array

LOAD_CHUNK_LINES = 50_000


@dataclass(frozen=True)
class LoadStats:
    """Line counts reported by load_seed_set."""

    lines: int = 0
    """Physical lines read, including blanks and comments."""

    parsed: int = 0
    """Lines that held a valid address."""

    duplicates: int = 0
    """Valid lines whose address was already seen."""

    malformed: int = 0
    """Non-empty, non-comment lines that failed to parse."""


@dataclass(frozen=True)
class SeedSet:
    """A duplicate-free, ordered set of nybble sequences.

    Order is first-seen order, which keeps every downstream stage
    deterministic.
    """

    members: Tuple[NybbleSeq, ...] = ()
    """Canonical nybble sequences, no duplicates."""

    source_label: str = ""
    """Free text describing where the set came from."""

    stats: Optional[LoadStats] = field(default=None, compare=False)
    """Load counts, when the set was read from a file."""

    _lookup: FrozenSet[str] = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        lookup = frozenset(self.members)
        if len(lookup) != len(self.members):
            raise ValueError("SeedSet members must be unique")
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def from_iterable(cls, members: Iterable[str], source_label: str = "") -> "SeedSet":
        """Build a set from sequences, dropping repeats and keeping first-seen order."""
        unique = dict.fromkeys(as_nybble_seq(member) for member in members)
        return cls(members=tuple(unique), source_label=source_label)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[NybbleSeq]:
        return iter(self.members)

    def __contains__(self, seq: object) -> bool:
        return seq in self._lookup

    def as_array(self) -> np.ndarray:
        """Symbol values as an (n, 32) uint8 array."""
        return nybble_array(self.members)

    def subset(self, members: Iterable[str], source_label: Optional[str] = None) -> "SeedSet":
        """A new set holding the given members, labelled after this one by default."""
        label = self.source_label if source_label is None else source_label
        return SeedSet.from_iterable(members, source_label=label)


Line = Union[bytes, str]


def _parse_chunk(
    chunk: Sequence[Tuple[int, Line]],
) -> List[Tuple[int, Optional[NybbleSeq], Optional[MalformedAddress]]]:
    parsed = []
    for number, line in chunk:
        text = line.decode("utf-8", errors="replace") if isinstance(line, bytes) else line
        text = text.strip()
        if not text or text.startswith("#"):
            continue
        try:
            parsed.append((number, canonicalize(text), None))
        except MalformedAddress as e:
            parsed.append((number, None, e))
    return parsed


def load_seed_set(
    source: Iterable[Line],
    strict: bool = False,
    source_label: str = "",
    workers: int = 1,
) -> SeedSet:
    """Read and deduplicate addresses from a line-oriented stream.

    Args:
        source: Lines as bytes or str (an open file works).
        strict: If True, the first malformed line raises.
        source_label: Label stored on the returned set.
        workers: Threads used to parse chunks of lines.

    Returns:
        SeedSet with ``stats`` describing parsed, duplicate and malformed lines.

    Raises:
        MalformedAddress: In strict mode, for the first bad line.
    """
    lines = list(enumerate(source, start=1))
    results = ordered_map(_parse_chunk, chunked(lines, LOAD_CHUNK_LINES), workers)

    unique = {}
    parsed = duplicates = malformed = 0
    for chunk_result in results:
        for number, seq, error in chunk_result:
            if error is not None:
                if strict:
                    raise MalformedAddress(f"line {number}: {error.reason}", error.text) from error
                malformed += 1
                logger.debug(f"Skipping malformed line {number}: {error}")
                continue
            parsed += 1
            if seq in unique:
                duplicates += 1
            else:
                unique[seq] = None

    stats = LoadStats(lines=len(lines), parsed=parsed, duplicates=duplicates, malformed=malformed)
    if malformed:
        logger.warning(f"{source_label or 'seed input'}: skipped {malformed} malformed lines")
    logger.debug(f"Loaded {len(unique)} addresses from {source_label or 'stream'}: {stats}")

    return SeedSet(members=tuple(unique), source_label=source_label, stats=stats)


def load_seed_file(
    path: Union[str, Path],
    strict: bool = False,
    workers: int = 1,
) -> SeedSet:
    """Open an address file and load it with load_seed_set.

    Raises:
        OSError: If the file cannot be read.
        MalformedAddress: In strict mode.
    """
    path = Path(path)
    with path.open("rb") as stream:
        return load_seed_set(stream, strict=strict, source_label=str(path), workers=workers)


def write_seed_file(members: Iterable[str], sink: Union[IO[str], BinaryIO]) -> int:
    """Write canonical text, one address per line.

    Args:
        members: Nybble sequences.
        sink: Text or binary stream.

    Returns:
        Number of lines written.
    """
    count = 0
    binary = not isinstance(sink, io.TextIOBase)
    for seq in members:
        line = nybbles_to_text(seq) + "\n"
        sink.write(line.encode("ascii") if binary else line)
        count += 1
    return count
