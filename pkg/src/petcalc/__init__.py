"""Exact equivariant Schubert calculus on flag varieties and Peterson
Schubert calculus, computed by localization at torus fixed points."""

from .poly import (
    DivisionByZero,
    NotDivisible,
    Polynomial,
    PolyT,
    divide_exact,
    is_graham_positive,
    specialize_to_t,
)
from .rootsys import (
    CartanError,
    NotFiniteTypeError,
    ResourceCapError,
    Root,
    RootSystem,
    WeylElt,
    act_on_root,
    bruhat_leq,
    build_root_system,
    cartan_matrix_for_label,
    coxeter_element,
    element_from_one_line,
    element_from_word,
    inversions,
    is_type_a,
    longest_element,
    one_line,
    reduced_words,
    root_system_from_label,
    weyl_enumerate,
    word_text,
)
from .gkm import (
    LocalizedClass,
    NonPolynomialResult,
    NotInSpan,
    PositivityViolation,
    StructTable,
    billey_restriction,
    class_product,
    expand_in_schubert_basis,
    forget_to_ordinary,
    gkm_verify,
    integrate,
    schubert_class,
    structure_constants,
    structure_table,
)
from .peterson import (
    CrossValidationReport,
    PetersonClass,
    PetersonExpansion,
    all_subsets,
    closed_form_coefficient,
    cross_validate,
    expand_in_peterson_basis,
    flag_consistency_report,
    peterson_class,
    peterson_fixed_point,
    peterson_structure_constants,
    peterson_table,
    pullback_expansion,
    subset_text,
)

__version__ = "0.1.0"

__all__ = [
    "CartanError",
    "CrossValidationReport",
    "DivisionByZero",
    "LocalizedClass",
    "NonPolynomialResult",
    "NotDivisible",
    "NotFiniteTypeError",
    "NotInSpan",
    "PetersonClass",
    "PetersonExpansion",
    "Polynomial",
    "PolyT",
    "PositivityViolation",
    "ResourceCapError",
    "Root",
    "RootSystem",
    "StructTable",
    "WeylElt",
    "act_on_root",
    "all_subsets",
    "billey_restriction",
    "bruhat_leq",
    "build_root_system",
    "cartan_matrix_for_label",
    "class_product",
    "closed_form_coefficient",
    "coxeter_element",
    "cross_validate",
    "divide_exact",
    "element_from_one_line",
    "element_from_word",
    "expand_in_peterson_basis",
    "expand_in_schubert_basis",
    "flag_consistency_report",
    "forget_to_ordinary",
    "gkm_verify",
    "integrate",
    "inversions",
    "is_graham_positive",
    "is_type_a",
    "longest_element",
    "one_line",
    "peterson_class",
    "peterson_fixed_point",
    "peterson_structure_constants",
    "peterson_table",
    "pullback_expansion",
    "reduced_words",
    "root_system_from_label",
    "schubert_class",
    "specialize_to_t",
    "structure_constants",
    "structure_table",
    "subset_text",
    "weyl_enumerate",
    "word_text",
]
