"""IPv6 address parsing and canonical text.

An address moves between four representations:

- text: "2001:db8:20:3::301" (any valid IPv6 textual form)
- Ipv6Address: the 128-bit value
- NybbleSeq: "20010db8002000030000000000000301" (32 lowercase hex symbols)
- one-hot grid: see encoding.py

Parsing delegates the grammar to the standard ``ipaddress`` module and
reports violations as MalformedAddress with a specific reason.
Formatting is done here so output is always pure hex (never a trailing
dotted quad) with the leftmost longest zero run compressed.
"""

import ipaddress
import re
from dataclasses import dataclass
from typing import NewType

from ..exceptions import MalformedAddress

NYBBLES = 32
ALPHABET = "0123456789abcdef"
MAX_BITS = (1 << 128) - 1

NybbleSeq = NewType("NybbleSeq", str)

_NYBBLE_RE = re.compile(r"^[0-9a-f]{32}$")
_HEX_GROUP_RE = re.compile(r"^[0-9A-Fa-f]*$")


@dataclass(frozen=True, order=True)
class Ipv6Address:
    """A 128-bit IPv6 address value."""

    bits: int
    """Unsigned value, most-significant bit first (network byte order)."""

    def __post_init__(self):
        if not 0 <= self.bits <= MAX_BITS:
            raise ValueError(f"Address value out of range: {self.bits}")

    def __str__(self) -> str:
        return format_canonical(self)


def is_nybble_seq(text: str) -> bool:
    """Check whether text is exactly 32 lowercase hex symbols."""
    return bool(_NYBBLE_RE.match(text))


def as_nybble_seq(text: str) -> NybbleSeq:
    """Validate text as a NybbleSeq.

    Raises:
        MalformedAddress: If text is not 32 lowercase hex symbols.
    """
    if not is_nybble_seq(text):
        raise MalformedAddress("not a 32-symbol nybble sequence", text)
    return NybbleSeq(text)


def parse_text(text: str) -> Ipv6Address:
    """Parse any valid IPv6 textual form.

    Accepts full 8-group, zero-compressed and leading-zero-omitted forms,
    including a trailing dotted-quad IPv4 part.

    Args:
        text: Address text without surrounding whitespace.

    Returns:
        The parsed address.

    Raises:
        MalformedAddress: For any syntactic violation.
    """
    if not text:
        raise MalformedAddress("empty address", text)
    if "%" in text:
        raise MalformedAddress("zone identifiers are not supported", text)
    if text.count("::") > 1:
        raise MalformedAddress("more than one '::'", text)

    groups = text.split(":")
    hex_groups = groups[:-1] if "." in groups[-1] else groups
    for group in hex_groups:
        if len(group) > 4:
            raise MalformedAddress("group longer than 4 digits", text)
        if not _HEX_GROUP_RE.match(group):
            raise MalformedAddress("non-hex character", text)

    try:
        value = ipaddress.IPv6Address(text)
    except ipaddress.AddressValueError as e:
        raise MalformedAddress(str(e), text) from e

    return Ipv6Address(int(value))


def to_nybbles(addr: Ipv6Address) -> NybbleSeq:
    """Render an address as 32 lowercase hex symbols, most significant first."""
    return NybbleSeq(f"{addr.bits:032x}")


def from_nybbles(seq: str) -> Ipv6Address:
    """Inverse of to_nybbles.

    Raises:
        MalformedAddress: If seq is not a valid NybbleSeq.
    """
    return Ipv6Address(int(as_nybble_seq(seq), 16))


def format_canonical(addr: Ipv6Address) -> str:
    """Shortest canonical text form.

    Lowercase, leading zeros dropped in each group, and the leftmost
    longest run of two or more zero groups replaced by "::".
    """
    groups = [(addr.bits >> (112 - 16 * i)) & 0xFFFF for i in range(8)]

    best_start, best_len = -1, 0
    run_start, run_len = -1, 0
    for i, group in enumerate(groups):
        if group == 0:
            if run_len == 0:
                run_start = i
            run_len += 1
            if run_len > best_len:
                best_start, best_len = run_start, run_len
        else:
            run_len = 0

    parts = [f"{group:x}" for group in groups]
    if best_len < 2:
        return ":".join(parts)

    head = ":".join(parts[:best_start])
    tail = ":".join(parts[best_start + best_len:])
    return f"{head}::{tail}"


def canonicalize(text: str) -> NybbleSeq:
    """Parse text and return its NybbleSeq."""
    return to_nybbles(parse_text(text))


def nybbles_to_text(seq: str) -> str:
    """Canonical text for a NybbleSeq."""
    return format_canonical(from_nybbles(seq))
