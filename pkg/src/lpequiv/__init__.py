"""Stable models of ground smodels programs and visible equivalence checking.

The main entry points are :func:`parse_program` for reading programs,
:func:`enumerate_models` for computing stable models, :func:`eqt` for the
counter-example translation and :func:`verify_translation` for deciding
visible equivalence.
"""

from .eqt import CounterExample, RenamingMap, decode, eqt, tr_hid, tr_lm, unstable
from .errors import (
    BaseMismatchError,
    CapExceededError,
    DeclarationError,
    LpeqError,
    ReservedNameError,
    WeightOverflowError,
)
from .program import (
    Basic,
    Choice,
    Compute,
    Constraint,
    Program,
    SymbolTable,
    Weight,
    build_program,
    project_hidden,
    project_visible,
)
from .search import enumerate_models, enumerate_oracle, find_one
from .semantics import compst, is_stable, least_model, reduce, satisfies, wsum
from .sns import ext, sns_compile, tr_sns
from .textio import ParseError, format_model, format_program, parse, parse_program, parse_wcp, unparse
from .verify import Equivalent, Inapplicable, NotEquivalent, verify_naive, verify_oracle, verify_translation
from .visibility import (
    EvaStatus,
    eval_hidden,
    has_enough_visible_exact,
    has_enough_visible_overapprox,
    is_separable,
)
from .wcp import WCProgram, WCRule, WeightConstraint, embed_smodels, wc_is_stable

__version__ = "0.1.0"
