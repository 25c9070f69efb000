"""IPv6 address model: parsing, canonical text, nybbles, one-hot grids, seed files."""

from .address import (
    ALPHABET,
    NYBBLES,
    Ipv6Address,
    NybbleSeq,
    as_nybble_seq,
    canonicalize,
    format_canonical,
    from_nybbles,
    is_nybble_seq,
    nybbles_to_text,
    parse_text,
    to_nybbles,
)
from .encoding import (
    SYMBOLS,
    decode_argmax,
    encode_batch,
    encode_onehot,
    nybble_array,
    sequences_from_array,
)
from .seeds import LoadStats, SeedSet, load_seed_file, load_seed_set, write_seed_file

__all__ = [
    "ALPHABET",
    "NYBBLES",
    "SYMBOLS",
    "Ipv6Address",
    "NybbleSeq",
    "LoadStats",
    "SeedSet",
    "as_nybble_seq",
    "canonicalize",
    "decode_argmax",
    "encode_batch",
    "encode_onehot",
    "format_canonical",
    "from_nybbles",
    "is_nybble_seq",
    "load_seed_file",
    "load_seed_set",
    "nybble_array",
    "nybbles_to_text",
    "parse_text",
    "sequences_from_array",
    "to_nybbles",
    "write_seed_file",
]
