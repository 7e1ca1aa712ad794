"""Generalized PGL(n,C) gluing equations, Ptolemy coordinates and natural cocycles."""

__version__ = "0.1.0"
