"""Activity oracles: which addresses answered a scan.

The toolkit never probes the network. An oracle is either the result
file of an external scan or the hidden universe of a synthetic
benchmark.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Iterable, Optional, Union

from loguru import logger

from ..addr6 import Ipv6Address, load_seed_file, to_nybbles

AddressLike = Union[Ipv6Address, str]


class ActivityOracle(ABC):
    """Membership predicate over addresses.

    Answers never change for the lifetime of an oracle, and queries are
    read-only, so one oracle may be shared across threads.
    """

    @property
    @abstractmethod
    def descriptor(self) -> str:
        """Where the answers come from."""
        pass

    @abstractmethod
    def is_active(self, address: AddressLike) -> bool:
        """Whether the address is active.

        Args:
            address: An Ipv6Address or a nybble sequence.
        """
        pass

    @property
    def size(self) -> Optional[int]:
        """Number of active addresses, if finite and known."""
        return None

    def __contains__(self, address: object) -> bool:
        return isinstance(address, (Ipv6Address, str)) and self.is_active(address)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor})"


class SetOracle(ActivityOracle):
    """Oracle backed by an explicit set of active nybble sequences."""

    def __init__(self, members: Iterable[str], descriptor: str = "address set"):
        self._members = frozenset(members)
        self._descriptor = descriptor

    @property
    def descriptor(self) -> str:
        return self._descriptor

    @property
    def size(self) -> int:
        return len(self._members)

    def is_active(self, address: AddressLike) -> bool:
        seq = to_nybbles(address) if isinstance(address, Ipv6Address) else address
        return seq in self._members


def oracle_from_file(path: Union[str, Path], workers: int = 1) -> SetOracle:
    """Load a scan result file (one active address per line).

    Raises:
        OSError: If the file cannot be read.
    """
    active = load_seed_file(path, workers=workers)
    logger.info(f"Loaded {len(active)} active addresses from {path}")
    return SetOracle(active.members, descriptor=f"result file {path}")
