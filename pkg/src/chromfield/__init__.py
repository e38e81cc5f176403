"""Exact magnetic-field Potts partition sums and weighted-set chromatic
polynomials on small graphs, with the identity, strip, zero-set, and
thermodynamic-limit structure built on top of them."""

from .errors import ChromfieldError
from .graphs import Graph, make_family
from .partition import (oracle_ph, oracle_z, ph_poly, tutte_poly, z_poly,
                        zero_field_poly)
from .poly import MultiPoly, RationalExpr

__all__ = [
    "ChromfieldError",
    "Graph",
    "MultiPoly",
    "RationalExpr",
    "make_family",
    "oracle_ph",
    "oracle_z",
    "ph_poly",
    "tutte_poly",
    "z_poly",
    "zero_field_poly",
]

__version__ = "0.1.0"
