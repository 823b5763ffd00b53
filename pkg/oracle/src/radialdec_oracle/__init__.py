"""Offline symbolic generator of golden data for the radial-manifold package."""

__version__ = "0.1.0"
