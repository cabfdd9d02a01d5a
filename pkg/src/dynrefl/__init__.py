"""Dynamical Yang-Baxter maps and dynamical reflection maps over finite left quasigroups."""

from .correspondence import (
    BetaTable,
    BracketTable,
    HomFamily,
    PiTable,
    TwistedAction,
    correspondence_chain,
    my_from_family,
)
from .document import Workbench, open_workbench, validate_document
from .errors import DynReflError
from .finite_algebra import (
    Carrier,
    FiniteGroup,
    LeftQuasigroup,
    PairedStructure,
    build_named_group,
    cyclic_group,
    enumerate_endomorphisms,
    group_from_table,
    make_paired,
    symmetric_group,
    validate_left_quasigroup,
)
from .module_theory import (
    LeftModule,
    check_braid_commute,
    check_left_module,
    lift_actions,
    module_from_action,
    module_left_regular,
    module_map_ll,
    module_one_point,
    my_of,
    theta_of,
    twisted_monoid,
)
from .quiver import check_quiver_equations, lift_solution, q_morphism, q_object
from .reflection import (
    ReflectionMap,
    analyze_brace,
    check_boundary_relations,
    check_k_constant,
    check_reflection_equation,
    family_builders,
    k_from_family,
    k_from_my,
)
from .report import CheckResult, Report
from .yang_baxter import build_monoid, build_sigma, check_braid_relation, check_braided_monoid

__version__ = "0.1.0"

__all__ = [
    "BetaTable",
    "BracketTable",
    "Carrier",
    "CheckResult",
    "DynReflError",
    "FiniteGroup",
    "HomFamily",
    "LeftModule",
    "LeftQuasigroup",
    "PairedStructure",
    "PiTable",
    "ReflectionMap",
    "Report",
    "TwistedAction",
    "Workbench",
    "analyze_brace",
    "build_monoid",
    "build_named_group",
    "build_sigma",
    "check_boundary_relations",
    "check_braid_commute",
    "check_braid_relation",
    "check_braided_monoid",
    "check_k_constant",
    "check_left_module",
    "check_quiver_equations",
    "check_reflection_equation",
    "correspondence_chain",
    "cyclic_group",
    "enumerate_endomorphisms",
    "family_builders",
    "group_from_table",
    "k_from_family",
    "k_from_my",
    "lift_actions",
    "lift_solution",
    "make_paired",
    "module_from_action",
    "module_left_regular",
    "module_map_ll",
    "module_one_point",
    "my_from_family",
    "my_of",
    "open_workbench",
    "q_morphism",
    "q_object",
    "symmetric_group",
    "theta_of",
    "twisted_monoid",
    "validate_document",
    "validate_left_quasigroup",
]
