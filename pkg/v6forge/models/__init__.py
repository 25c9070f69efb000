"""Data models for v6forge."""

from .classifier import ClassifierInfo

__all__ = [
    "ClassifierInfo",
]
