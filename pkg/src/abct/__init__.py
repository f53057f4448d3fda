"""Exact arithmetic, boundary strata and canonical-form checks for the ABCT
variety V(3,n) inside Gr(3,n)."""
from .exact_arith import MultiPoly, RationalFunction, SymbolTable, rf_equal
from .pluecker import NotGrassmannianPoint, PlueckerVector, RationalMatrix, pluecker_of
from .membership import in_V3n, in_stratum
from .positroid import BoundedAffinePermutation, GrassmannNecklace, boundary_perm
from .strata import Stratum, enumerate_strata, poset
from .forms import ChartForm, Parametrization, pullback, residue_at

__version__ = "0.1.0"
