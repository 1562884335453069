"""Exact computations with triangular algebras: PBW normal forms, Verma modules,
central characters and linkage blocks."""

__version__ = "0.1.0"
