"""Exact geometry of 3-dimensional Lie algebras with an almost paracontact
almost paracomplex Riemannian structure."""

from .curvature import (
    CurvatureData,
    EinsteinVerdict,
    curvature_invariants,
    einstein_classify,
    kulkarni_nomizu,
    riemann,
    sectional_curvature,
    verify_r3_identity,
)
from .errors import (
    DegenerateDenominatorError,
    JacobiError,
    ParalieError,
    ParameterError,
    SymmetryError,
)
from .exact import Rational, Tensor, format_rational, parse_rational
from .fundamental import (
    ClassDecomposition,
    Connection,
    classify,
    fundamental_tensor,
    lee_forms,
    levi_civita,
)
from .lie_algebra import (
    CatalogEntry,
    StructureConstants,
    bracket,
    catalog_instantiate,
    jacobi_complete,
    jacobi_residual,
)
from .report import GeometryReport, analyze
from .special import is_biinvariant_phi, is_killing_metric, is_killing_xi
from .structure import STANDARD, StructurePack, standard_structure

__version__ = "0.1.0"
