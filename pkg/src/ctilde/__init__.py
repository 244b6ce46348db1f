"""Exact computations in the decorated diagram algebra of type affine C."""

from __future__ import annotations

__version__ = "0.1.0"
