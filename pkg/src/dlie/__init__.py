"""Exact construction and verification of twisted forms of differential Lie
algebras over K = Q(w)(t) and its radical extension towers."""

from .descent_engine import (
    FixedSubalgebra,
    Generator,
    InducedAlgebra,
    SemilinearAction,
    action_D4,
    action_typeA_Z2,
    action_typeD_Z2,
    fixed_points,
    fixed_points_naive,
    induced_fixed_check,
    seven_join,
    seven_split,
    trivial_torsor_iso,
    verify_descent,
)
from .dlie_core import (
    DerivationOp,
    DLieAlgebra,
    LieElement,
    jacobi_check,
    leibniz_check,
    make_sl,
    make_so,
    quasi_iso_verify,
    reverse_witness,
)
from .errors import IneligibleParameterError, MismatchError, ParseError
from .explicit_forms import (
    EigenData,
    basis_D4_form,
    basis_typeA_form,
    basis_typeD_form,
    eigen_check,
    subspace_equal,
    theta_subspace,
    vector_in_subspace,
    xi_subspace,
)
from .field_tower.noncube import (
    NoncubeResult,
    S3ExtensionReport,
    check_s3_extension,
    noncube_certify,
)
from .field_tower.parse import parse_element, parse_ratfunc
from .field_tower.poly import Poly
from .field_tower.predicates import is_cube_geometric, is_square_geometric
from .field_tower.ratfunc import RatFunc
from .field_tower.scalars import OMEGA, SQRT_MINUS_3, ConstScalar
from .field_tower.tower import TRIVIAL, FieldAutomorphism, TowerElement, TowerSpec
from .report import VerificationReport

__version__ = "0.1.0"
