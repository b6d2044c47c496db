"""Extension semantics, principle checks and counterexample search for
abstract argumentation frameworks."""

from .core import (
    Framework,
    SizeLimitError,
    defends,
    is_conflict_free,
    is_scooc_set,
    nsa_restrict,
    odd_cycle_members,
    range_and_attackers,
    remove_argument,
    restrict,
    sccs,
    unattacked_sets,
)
from .formats import ParseError, parse_apx, parse_tgf, serialize
from .principles import (
    Counterexample,
    SurveyReport,
    SurveyScope,
    check_directionality,
    check_inra,
    check_richness,
    check_scooc_principle,
    enumerate_frameworks,
    sample_frameworks,
    survey,
)
from .scooc import ScoocWitness, scf2_extensions, scooc_naive_extensions, scooc_violations
from .semantics import (
    ExtensionFamily,
    SemanticsId,
    decide,
    extensions,
    grounded_fixpoint,
)

__all__ = [
    "Counterexample",
    "ExtensionFamily",
    "Framework",
    "ParseError",
    "ScoocWitness",
    "SemanticsId",
    "SizeLimitError",
    "SurveyReport",
    "SurveyScope",
    "check_directionality",
    "check_inra",
    "check_richness",
    "check_scooc_principle",
    "decide",
    "defends",
    "enumerate_frameworks",
    "extensions",
    "grounded_fixpoint",
    "is_conflict_free",
    "is_scooc_set",
    "nsa_restrict",
    "odd_cycle_members",
    "parse_apx",
    "parse_tgf",
    "range_and_attackers",
    "remove_argument",
    "restrict",
    "sample_frameworks",
    "sccs",
    "scf2_extensions",
    "scooc_naive_extensions",
    "scooc_violations",
    "serialize",
    "survey",
    "unattacked_sets",
]
