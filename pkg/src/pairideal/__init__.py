"""Exact computer-algebra workbench for the ideal of pairs of a matroid
realization: cyclic flats, bigraded Betti tables, logarithmic derivations,
and associated-prime structure, all in exact arithmetic."""

from .scalars import QQ, PrimeField, Rationals
from .linalg import ExactMatrix, kernel_basis, rank, rref, solve, column_space_membership
from .matroid import Matroid, Realization, biflats
from .ring import MonomialOrder, Poly, PolyRing, pair_ring, x_ring, xa_ring
from .pairs import PairsIdeal
from .graded import BettiTable, GradedEngine
from .groebner import Ideal, is_associated
from .resolution import (
    FreeResolution,
    SchreyerResolution,
    minimal_generators,
    resolve_quotient_by_ideal,
    resolve_submodule,
    schreyer_quotient_betti,
    schreyer_resolution,
)
from .derivations import DerivationModule, der_module, ilog_generators, pdim_bounds, recipe_check
from .primes import (
    LinearPrime,
    associated_primes,
    minimal_primes,
    slice_associated_primes,
    uniform_checks,
    verify_min_primes,
)
from .fixtures import fixture_names, get_fixture
from .io import InputSpec, spec_for_realization
from .workbench import VERIFY_TARGETS, Workbench, full_report

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "PrimeField",
    "Rationals",
    "ExactMatrix",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "column_space_membership",
    "Matroid",
    "Realization",
    "biflats",
    "MonomialOrder",
    "Poly",
    "PolyRing",
    "pair_ring",
    "x_ring",
    "xa_ring",
    "PairsIdeal",
    "BettiTable",
    "GradedEngine",
    "Ideal",
    "is_associated",
    "FreeResolution",
    "SchreyerResolution",
    "minimal_generators",
    "resolve_quotient_by_ideal",
    "resolve_submodule",
    "schreyer_quotient_betti",
    "schreyer_resolution",
    "DerivationModule",
    "der_module",
    "ilog_generators",
    "pdim_bounds",
    "recipe_check",
    "LinearPrime",
    "associated_primes",
    "minimal_primes",
    "slice_associated_primes",
    "uniform_checks",
    "verify_min_primes",
    "fixture_names",
    "get_fixture",
    "InputSpec",
    "spec_for_realization",
    "VERIFY_TARGETS",
    "Workbench",
    "full_report",
]
