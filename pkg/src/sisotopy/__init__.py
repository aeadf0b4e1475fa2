"""Isotopy workbench for finite quasigroups, loops and their Smarandache substructures."""

from ._kernels import BACKEND
from .errors import (
    NotApplicableError,
    NotLoopError,
    NotQuasigroupError,
    SearchBoundError,
    SisotopyError,
    SPairError,
    TableError,
)
from .holomorph import HolomorphTable, build_holomorph, holomorph_s_pair
from .morphisms import (
    AutotopismSet,
    Isotopism,
    IsotopismVerdict,
    PermGroup,
    apply_isotopism,
    automorphism_group,
    autotopism_set,
    find_conjugator,
    find_isomorphism,
    parse_isotopism,
    saum,
    ssym,
    verify_isotopism,
)
from .perm import Perm
from .report import emit_report
from .substructure import SPair, SubStructure, enumerate_substructures, is_smarandache, make_spair
from .tables import (
    CayleyTable,
    StructureClass,
    classify,
    format_table,
    inverse_elements,
    parse_table,
    translation,
)
from .theorems import (
    TheoremReport,
    check_pairing,
    special_triple,
    verify_theorem_31,
    verify_theorem_32,
)
from .varieties import CATALOG, VarietyDef, eval_term, holds_identity, parse_identity, variety_profile

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
