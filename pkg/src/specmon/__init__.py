"""Toolkit for finitely presented special monoids.

Covers length-reducing rewriting with exact confluence decision,
invertibility and the group-of-units verdict (with a certified fast
path for overlap-free systems), the context-free grammar of the word
problem, and bounded search for solutions of word equation systems.
"""

from .diophantine import (
    EquationSystem,
    SolveResult,
    check,
    parse_equations,
    render_equations,
    solve_bounded,
    substitute,
)
from .errors import (
    AmbiguousCompactForm,
    BudgetExceeded,
    DuplicateRelator,
    EmptyRelator,
    NotConfluent,
    NotInvertible,
    ParseError,
    SpecmonError,
    UndeclaredVariable,
    UnknownSymbol,
)
from .presentation import (
    Alphabet,
    SpecialSystem,
    Word,
    parse_presentation,
    parse_word,
    render_presentation,
    render_word,
)
from .rewrite import (
    CriticalPair,
    Overlap,
    critical_pairs,
    descendants,
    irreducible_words,
    is_confluent,
    is_overlap_free,
    normal_form,
    occurrences,
    overlaps,
    rewrite_step,
)
from .units import (
    Invertibility,
    UnitsReport,
    delta_set,
    invertibility,
    lambda_set,
    minimal_factorization,
    random_overlap_free_system,
    units_trivial,
)
from .wp_language import (
    Grammar,
    enumerate_words,
    erasable_oracle,
    member,
    prefix_closure,
    suffix_closure,
    to_cnf,
    wp_grammar,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AmbiguousCompactForm",
    "BudgetExceeded",
    "CriticalPair",
    "DuplicateRelator",
    "EmptyRelator",
    "EquationSystem",
    "Grammar",
    "Invertibility",
    "NotConfluent",
    "NotInvertible",
    "Overlap",
    "ParseError",
    "SolveResult",
    "SpecialSystem",
    "SpecmonError",
    "UndeclaredVariable",
    "UnitsReport",
    "UnknownSymbol",
    "Word",
    "check",
    "critical_pairs",
    "delta_set",
    "descendants",
    "enumerate_words",
    "erasable_oracle",
    "invertibility",
    "irreducible_words",
    "is_confluent",
    "is_overlap_free",
    "lambda_set",
    "member",
    "minimal_factorization",
    "normal_form",
    "occurrences",
    "overlaps",
    "parse_equations",
    "parse_presentation",
    "parse_word",
    "prefix_closure",
    "random_overlap_free_system",
    "render_equations",
    "render_presentation",
    "render_word",
    "rewrite_step",
    "solve_bounded",
    "substitute",
    "suffix_closure",
    "to_cnf",
    "units_trivial",
    "wp_grammar",
]
