"""Utility modules."""

from .workers import chunked, ordered_map

__all__ = ["chunked", "ordered_map"]
