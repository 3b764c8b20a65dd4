"""Rough sets over attribute-value tables, with a descriptor language,
formal concept analysis and S5 Kripke semantics."""

__version__ = "0.1.0"

from .approximations import (
    RoughEquality,
    RoughInclusion,
    RoughRegions,
    is_exact,
    lower,
    regions,
    rough_equal,
    rough_included,
    upper,
)
from .descriptors import DescriptiveSystem, describe_set, meaning
from .errors import (
    BoundExceededError,
    EmptyAttributeSetError,
    ParseError,
    RoughKitError,
    TableFormatError,
    UnknownAttributeError,
    UnknownObjectError,
)
from .fca import (
    ConceptLattice,
    FormalConcept,
    FormalContext,
    all_concepts,
    context_from_information_system,
    extent_of,
    intent_of,
    is_formal_concept,
    read_context,
    to_dot,
)
from .formula import FALSE, TRUE, And, Atom, Box, Const, Diamond, Formula, Not, Or, parse, parse_modal, to_text
from .information_system import (
    ApproximationSpace,
    InformationSystem,
    elementary_sets,
    indiscernibility,
    load_table,
    read_table,
)
from .s5 import KripkeModel, build_model, check_s5_axioms, extension, holds_at
