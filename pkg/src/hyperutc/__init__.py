"""Reconstruction of uniform hypergraphs up to complementation, at desk scale."""

__version__ = "0.1.0"
