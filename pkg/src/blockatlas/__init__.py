"""Exact combinatorics of trivial source modules in blocks with cyclic
defect groups.

The package computes, for a block determined by a prime p, a defect n, a
planar-embedded tree with signed characters, and an endo-trivial source
parameter, the exact positions and Loewy shapes of the trivial source
modules in the stable component, together with the liftable-module
catalogue, their ordinary characters, and boundary (hook) data.  Every
closed form has an independent matrix oracle over F_p used by the test
suite and by ``atlas verify``.
"""

from .brauer_tree import (
    BadRotation,
    BrauerTree,
    BrauerTreeError,
    DivisibilityViolation,
    EdgeCountMismatch,
    ExceptionalCount,
    Hook,
    NoExceptionalVertex,
    NoNonExceptionalLeaf,
    NotATree,
    NotIncident,
    PimStructure,
    SignConflict,
)
from .classifier import (
    NEGATIVE,
    POSITIVE,
    ConsistencyError,
    CountMismatch,
    DichotomyViolation,
    JanuszDescriptor,
    LiftCharacter,
    LiftableEntry,
    NotLiftable,
    OutOfTube,
    ShapeType,
    TrivialSourceReport,
    TubePosition,
    UnknownShape,
    c2_block,
    classify_trivial_source,
    cotrivial_source_dplus,
    distance_to_hook,
    divisibility_case,
    dplus_trivial_source,
    hook_is_trivial_source,
    lift_character,
    liftable_by_distance,
    liftable_catalog,
    position_of,
)
from .cyclic_modules import (
    CyclicGroupParams,
    DimensionTooLarge,
    NotCapped,
    NotInflatable,
    ProjectiveInput,
    build_wd,
    cap_of_restriction,
    generator_action,
    heller,
    induce,
    induced_action,
    inflate,
    oracle_build_wd,
    oracle_u_q,
    relative_heller,
    relative_heller_action,
    restrict,
    restricted_action,
    u_q,
    vertex,
)
from .dade import DadeElement, ParamMismatch, enumerate_sources
from .field_linalg import (
    JordanProfile,
    ModuleDecomp,
    ModulusMismatch,
    NotNilpotent,
    NotUnipotent,
    PrimeFieldMatrix,
    decompose_unipotent,
    jordan_profile,
    kronecker,
    nullspace,
    rank,
    solve_exact,
)

__version__ = "0.1.0"

__all__ = [
    "BadRotation",
    "BrauerTree",
    "BrauerTreeError",
    "ConsistencyError",
    "CountMismatch",
    "CyclicGroupParams",
    "DadeElement",
    "DichotomyViolation",
    "DimensionTooLarge",
    "DivisibilityViolation",
    "EdgeCountMismatch",
    "ExceptionalCount",
    "Hook",
    "JanuszDescriptor",
    "JordanProfile",
    "LiftCharacter",
    "LiftableEntry",
    "ModuleDecomp",
    "ModulusMismatch",
    "NEGATIVE",
    "NoExceptionalVertex",
    "NoNonExceptionalLeaf",
    "NotATree",
    "NotCapped",
    "NotIncident",
    "NotInflatable",
    "NotLiftable",
    "NotNilpotent",
    "NotUnipotent",
    "OutOfTube",
    "POSITIVE",
    "ParamMismatch",
    "PimStructure",
    "PrimeFieldMatrix",
    "ProjectiveInput",
    "ShapeType",
    "SignConflict",
    "TrivialSourceReport",
    "TubePosition",
    "UnknownShape",
    "build_wd",
    "c2_block",
    "cap_of_restriction",
    "classify_trivial_source",
    "cotrivial_source_dplus",
    "decompose_unipotent",
    "distance_to_hook",
    "divisibility_case",
    "dplus_trivial_source",
    "enumerate_sources",
    "generator_action",
    "heller",
    "hook_is_trivial_source",
    "induce",
    "induced_action",
    "inflate",
    "jordan_profile",
    "kronecker",
    "lift_character",
    "liftable_by_distance",
    "liftable_catalog",
    "nullspace",
    "oracle_build_wd",
    "oracle_u_q",
    "position_of",
    "rank",
    "relative_heller",
    "relative_heller_action",
    "restrict",
    "restricted_action",
    "solve_exact",
    "u_q",
    "vertex",
]
