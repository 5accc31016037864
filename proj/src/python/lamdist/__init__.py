"""Lambda-calculus reduction laboratory: parsing, spine analysis, canonical
forms, equivalences, reductions, simple types and the Gandy measure."""

from ._lamdist import (
    ParseError,
    Term,
    TypeCheckError,
    alpha_eq,
    canon,
    cli,
    distinct_names,
    equivalent,
    free_vars,
    has_distinct_names,
    measure,
    normalize_e,
    parse,
    print_term,
    reduce,
    run_suite,
    spine,
    suite_names,
    typecheck,
)

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "Term",
    "TypeCheckError",
    "alpha_eq",
    "canon",
    "cli",
    "distinct_names",
    "equivalent",
    "free_vars",
    "has_distinct_names",
    "measure",
    "normalize_e",
    "parse",
    "print_term",
    "reduce",
    "run_suite",
    "spine",
    "suite_names",
    "typecheck",
]
