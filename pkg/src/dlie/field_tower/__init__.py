"""Exact arithmetic for K = Q(w)(t) and its radical extension towers."""

from .noncube import (
    NoncubeCertificate,
    NoncubeResult,
    S3ExtensionReport,
    check_s3_extension,
    noncube_certify,
)
from .parse import parse_element, parse_ratfunc
from .poly import Poly, T, gcd, nth_root_monic, squarefree_decomposition
from .predicates import (
    cube_root_in_base,
    is_cube_geometric,
    is_square_geometric,
)
from .ratfunc import RF_ONE, RF_T, RF_ZERO, RatFunc
from .scalars import OMEGA, SQRT_MINUS_3, ConstScalar
from .tower import TRIVIAL, FieldAutomorphism, TowerElement, TowerSpec
