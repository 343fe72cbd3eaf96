"""Exact construction of sh-Lie (L-infinity) structures on chain complexes."""

from .complex import ChainComplex, build_contraction, homology, verify_contraction
from .core import (
    BoundaryClaimViolated, ConditionsFailed, Instance, build_structure, check_conditions,
    extend, truncate, verify_theorem2,
)
from .multilinear import Elem, ShLieStructure, SkewGradedMap, linfty_defect

__version__ = "0.1.0"

__all__ = [
    "ChainComplex", "build_contraction", "homology", "verify_contraction",
    "BoundaryClaimViolated", "ConditionsFailed", "Instance", "build_structure",
    "check_conditions", "extend", "truncate", "verify_theorem2",
    "Elem", "ShLieStructure", "SkewGradedMap", "linfty_defect",
]
