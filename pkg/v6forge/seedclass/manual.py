"""Rule-based addressing scheme labels.

Rules look at the IID (last 16 nybbles) and are applied in this order:

1. SLAAC EUI-64: nybbles 23-26 are "fffe".
2. SLAAC privacy: per-address symbol entropy of the IID above 0.8.
3. Low 64-bit subnet: two or more maximal zero runs of length >= 2.
4. Fixed IID: exactly one such zero run.
5. Other.
"""

import re
from enum import Enum
from typing import List

from ..addr6 import NybbleSeq
from .entropy import address_char_entropy

PRIVACY_ENTROPY_THRESHOLD = 0.8
EUI64_MARKER = "fffe"
EUI64_SLICE = slice(22, 26)  # nybbles 23..26
MIN_ZERO_RUN = 2

_ZERO_RUN_RE = re.compile("0{%d,}" % MIN_ZERO_RUN)


class SchemeLabel(str, Enum):
    """Addressing scheme of a single address."""

    FIXED_IID = "fixed_iid"
    LOW64_SUBNET = "low64_subnet"
    SLAAC_EUI64 = "slaac_eui64"
    SLAAC_PRIVACY = "slaac_privacy"
    OTHER = "other"

    @property
    def display_name(self) -> str:
        return _TITLES[self]


_TITLES = {
    SchemeLabel.FIXED_IID: "Fixed IID",
    SchemeLabel.LOW64_SUBNET: "Low 64-bit Subnet",
    SchemeLabel.SLAAC_EUI64: "SLAAC EUI-64",
    SchemeLabel.SLAAC_PRIVACY: "SLAAC Privacy",
    SchemeLabel.OTHER: "Other",
}


def zero_runs(iid: str) -> List[int]:
    """Lengths of the maximal runs of at least two zero nybbles."""
    return [len(run) for run in _ZERO_RUN_RE.findall(iid)]


def classify_manual(seq: NybbleSeq) -> SchemeLabel:
    """Label one address by the precedence rules above."""
    iid = seq[16:]

    if seq[EUI64_SLICE] == EUI64_MARKER:
        return SchemeLabel.SLAAC_EUI64

    if address_char_entropy(iid) > PRIVACY_ENTROPY_THRESHOLD:
        return SchemeLabel.SLAAC_PRIVACY

    runs = len(zero_runs(iid))
    if runs >= 2:
        return SchemeLabel.LOW64_SUBNET
    if runs == 1:
        return SchemeLabel.FIXED_IID
    return SchemeLabel.OTHER
