"""Cohomology jump loci of rank-one local systems, computed exactly.

Builds the torus-plus-sphere CW complexes and the commutator-relator groups
whose top jump locus is a prescribed subvariety Z of (C*)^n, evaluates their
twisted cohomology pointwise, and checks the predicted loci.
"""
from .chain import EquivariantComplex, LaurentMatrix, homology_dims, matrix_rank, specialize, validate
from .construction import SpaceSpec, alexander_presentation, build_space, koszul, trivial_cohomology
from .groups import Presentation, Word, build_group, gamma, h1_dims, relator_from_poly, tau_extend
from .laurent import LaurentPoly, univariate_gcd
from .loci import ps_check, sigma_dim, sigma_member, v_support_member, verify_group, verify_main
from .obstruction import cyclotomic_certificate, obstruction_verdict, torsion_character
from .scalars import Character, Scalar, cyclotomic_poly, root_of_unity_order, unify_field

__version__ = "0.1.0"
