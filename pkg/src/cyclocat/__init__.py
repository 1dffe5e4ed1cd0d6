"""Exact computations in the pointed fusion categories Vect_{Z_n}^zeta.

Cyclotomic arithmetic, the cocycles omega_zeta, the diagrammatic presentation
by caps and cups with its normal forms, and the classification of these
categories up to tensor equivalence.
"""

__version__ = "0.1.0"

from .cyclotomic import CycScalar, RootPower, cyclotomic_poly, embed, order
from .cocycle import CocycleSpec, omega, verify_cocycle
from .pointed import GradedObj, constant_by_associators, constant_of, verify_pentagon
from .diagram import DiagramWord, NormalForm, evaluate_in_vect, normalize, verify_snake
from .dsl import elaborate, parse, print_word
from .classify import (
    FunctorSpec,
    aut_2group,
    compose_functors,
    count_classes_bruteforce,
    count_classes_formula,
    functor_valid,
    hom_between,
    is_equivalent,
)

__all__ = [
    "CycScalar",
    "RootPower",
    "cyclotomic_poly",
    "embed",
    "order",
    "CocycleSpec",
    "omega",
    "verify_cocycle",
    "GradedObj",
    "constant_by_associators",
    "constant_of",
    "verify_pentagon",
    "DiagramWord",
    "NormalForm",
    "evaluate_in_vect",
    "normalize",
    "verify_snake",
    "elaborate",
    "parse",
    "print_word",
    "FunctorSpec",
    "aut_2group",
    "compose_functors",
    "count_classes_bruteforce",
    "count_classes_formula",
    "functor_valid",
    "hom_between",
    "is_equivalent",
]
