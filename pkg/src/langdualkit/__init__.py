"""Exact root-datum, affine Weyl group and regular-unipotent computations."""

__version__ = "0.1.0"
