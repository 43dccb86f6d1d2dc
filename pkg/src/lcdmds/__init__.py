"""Exact construction and certification of LCD MDS codes over finite fields."""

from .codes import Certificate, LinearCode
from .construct import (
    ConstructionResult,
    char2_qplus2,
    euclid_subgroup_family,
    euclidean_lcd_mds,
    find_lcd_scalar,
    grs,
    hermitian_lcd_mds,
    hermitian_subgroup_family,
    lcd_from_self_orthogonal,
    scale_right_block,
    self_dual_mds,
    vandermonde_subgroup,
)
from .gf import FieldSpec, field_new
from .kernels import backend_name
from .matrix import EUCLIDEAN, HERMITIAN, Mat

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ConstructionResult",
    "EUCLIDEAN",
    "FieldSpec",
    "HERMITIAN",
    "LinearCode",
    "Mat",
    "backend_name",
    "char2_qplus2",
    "euclid_subgroup_family",
    "euclidean_lcd_mds",
    "field_new",
    "find_lcd_scalar",
    "grs",
    "hermitian_lcd_mds",
    "hermitian_subgroup_family",
    "lcd_from_self_orthogonal",
    "scale_right_block",
    "self_dual_mds",
    "vandermonde_subgroup",
]
