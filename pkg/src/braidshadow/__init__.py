"""Quasipositive factorizations of the full twist and certified torus
shadow diagrams of the bridge-trisected surfaces they bound."""

from .words import (
    BraidError,
    BraidWord,
    compose,
    exponent_sum,
    free_reduce,
    full_twist,
    half_twist_word,
    identity,
    invert,
    underlying_permutation,
)
from .garside import NormalForm, equal, is_trivial, normal_form, normal_form_word
from .handles import handle_reduce, is_trivial_word, words_equal
from .factorization import (
    BandFactor,
    Factorization,
    HurwitzOrbit,
    ValidationReport,
    expand,
    factorization_key,
    hurwitz_move,
    hurwitz_orbit,
    random_factorization,
    singular_factor,
    standard_factorization,
    validate,
)
from .diagram import (
    Arc,
    BridgeParams,
    BridgePoint,
    DiagramError,
    TangleLink,
    TorusDiagram,
    TransversalityReport,
    assemble,
    bridge_params,
    build_tile,
    check_transverse,
    component_label,
    mini_stabilize,
    pairwise_links,
    verify_trivial,
)
from .invariants import (
    InvariantLedger,
    bennequin_check,
    euler_check,
    genus_expected,
    make_ledger,
    sl_sum_check,
    transverse_sl,
)
from .documents import (
    DocumentError,
    parse_diagram,
    parse_factorization,
    serialize_diagram,
    serialize_factorization,
)
from .svg import export_svg
from .cli import main, run_cli

__all__ = [
    "Arc",
    "BandFactor",
    "BraidError",
    "BraidWord",
    "BridgeParams",
    "BridgePoint",
    "DiagramError",
    "DocumentError",
    "Factorization",
    "HurwitzOrbit",
    "InvariantLedger",
    "NormalForm",
    "TangleLink",
    "TorusDiagram",
    "TransversalityReport",
    "ValidationReport",
    "assemble",
    "bennequin_check",
    "bridge_params",
    "build_tile",
    "check_transverse",
    "component_label",
    "compose",
    "equal",
    "euler_check",
    "expand",
    "exponent_sum",
    "export_svg",
    "factorization_key",
    "free_reduce",
    "full_twist",
    "genus_expected",
    "half_twist_word",
    "handle_reduce",
    "hurwitz_move",
    "hurwitz_orbit",
    "identity",
    "invert",
    "is_trivial",
    "is_trivial_word",
    "main",
    "make_ledger",
    "mini_stabilize",
    "normal_form",
    "normal_form_word",
    "pairwise_links",
    "parse_diagram",
    "parse_factorization",
    "random_factorization",
    "run_cli",
    "serialize_diagram",
    "serialize_factorization",
    "singular_factor",
    "sl_sum_check",
    "standard_factorization",
    "transverse_sl",
    "underlying_permutation",
    "validate",
    "verify_trivial",
    "words_equal",
]
