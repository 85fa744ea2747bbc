"""Modal logic over frames built from classes of finite structures."""
from .frames import GeneralFrame, KripkeFrame, ModalAlgebra, algebra_isomorphic, algebra_of, full_general
from .logic import axiom_battery, parse_formula, truth_set, valid_in
from .structures import Structure, class_frame, congruences, isomorphic, submodels

__all__ = [
    "GeneralFrame",
    "KripkeFrame",
    "ModalAlgebra",
    "Structure",
    "algebra_isomorphic",
    "algebra_of",
    "axiom_battery",
    "class_frame",
    "congruences",
    "full_general",
    "isomorphic",
    "parse_formula",
    "submodels",
    "truth_set",
    "valid_in",
]
