"""Residues of type C affine Hecke algebras and cuspidal unipotent formal degrees."""

__version__ = "0.1.0"
