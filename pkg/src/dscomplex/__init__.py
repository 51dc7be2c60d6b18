"""Exact f-vector calculus for finite simplicial complexes and graphs."""

from .complex import (
    Graph, SimplicialComplex, barycentric, disjoint_union, edge_refine, euler_characteristic,
    from_facets, join, unit_sphere, whitney,
)
from .errors import (
    CapExceededError, DscError, InconsistencyError, InvalidInputError, NumericFailureError,
    ResourceError,
)
from .poly import FPolynomial, ds_symmetric, f_function, h_vector

__version__ = "0.1.0"
