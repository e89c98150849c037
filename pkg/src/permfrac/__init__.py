"""Workbench for 321-avoiding permutations, their skeletons and generating
functions, and the fractal class F(321)."""

from .equations import EQUATIONS, AlgebraicEquation, growth_constant, solve_algebraic
from .fractal import basis_search, is_dn_member, is_f321_member
from .gf import build, solve_wreath_fixed_point
from .perm import Permutation, avoids_321, classify, decompose, inflate
from .series import BivariateSeries, TruncatedSeries
from .skeleton import SkeletonWord, skeleton_decode, skeleton_encode, word_recognize

__all__ = [
    "EQUATIONS", "AlgebraicEquation", "growth_constant", "solve_algebraic",
    "basis_search", "is_dn_member", "is_f321_member", "build", "solve_wreath_fixed_point",
    "Permutation", "avoids_321", "classify", "decompose", "inflate",
    "BivariateSeries", "TruncatedSeries", "SkeletonWord", "skeleton_decode",
    "skeleton_encode", "word_recognize",
]
