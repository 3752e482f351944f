"""Cubic congruences mod p, binary quadratic forms and cubic residue symbols."""

from .character import CubicData, Subgroup, chi, cubic_data, subgroup_depressed, subgroup_for_cubic, subgroup_G, witness_index3
from .criteria import CriterionReport, count_roots, cubic_residue_test, evaluate_statements, surd_criterion_check, surd_cubic_residue
from .cubic_symbol import SymbolValue, cubic_jacobi, residue_character_oracle
from .eisenstein import EisensteinInt, divrem, gcd, norm, primary_decompose
from .quadform import ClassGroup, FormClass, QuadForm, class_of_prime, compose, coprime_representative, enumerate_class_group, inverse, reduce, sqrt_mod_p

__version__ = "0.1.0"
