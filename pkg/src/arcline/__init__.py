"""Exact enumeration of lines on generic complete intersections.

The package computes line counts three independent ways: intersection
arithmetic on the space of pointed lines (the primary route), Schubert
calculus on the Grassmannian (the oracle), and brute force over small prime
fields (the reality check). All symbolic arithmetic is exact integer
arithmetic; nothing here floats.
"""

from .bounds import BoundQuery, bound, degree_partitions, enumerate_types
from .chow_ring import (ChowClass, coefficient, divide_exact, from_j_basis,
                        linear_product, normal_form, point_class, to_j_basis)
from .errors import (ArclineError, DomainError, InexactDivisionError,
                     NonPureClassError, ParseError)
from .ff_search import (FFConfig, contained_lines, count_lines_ff,
                        count_lines_through_point_ff, enumerate_lines,
                        line_space_size)
from .line_locus import (CIType, LineCount, contact_class, count_lines,
                         line_locus_class, lines_through_point, swept_degree)
from .polycore import Monomial, SparsePoly, parse_poly, poly_mul, weight_components
from .prolongation import (Arc, ParamLine, ProlongedSystem, arc_ideal,
                           full_expansion, line_contact_order, line_through)
from .schubert import (SchubertClass, fano_degree, integral,
                       oracle_count_lines, pieri_mul, sigma, symmetric_expand)

__version__ = "0.1.0"

__all__ = [
    "Arc", "ArclineError", "BoundQuery", "CIType", "ChowClass", "DomainError",
    "FFConfig", "InexactDivisionError", "LineCount", "Monomial",
    "NonPureClassError", "ParamLine", "ParseError", "ProlongedSystem",
    "SchubertClass", "SparsePoly", "arc_ideal", "bound", "coefficient",
    "contact_class", "contained_lines", "count_lines", "count_lines_ff",
    "count_lines_through_point_ff", "degree_partitions", "divide_exact",
    "enumerate_lines", "enumerate_types", "fano_degree", "from_j_basis",
    "full_expansion", "integral", "line_contact_order", "line_locus_class",
    "line_space_size", "line_through", "linear_product", "lines_through_point",
    "normal_form", "oracle_count_lines", "parse_poly", "pieri_mul",
    "point_class", "poly_mul", "sigma", "swept_degree", "symmetric_expand",
    "to_j_basis", "weight_components",
]
