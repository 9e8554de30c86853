"""Exact symmetric group characters via the Murnaghan-Nakayama rule on beta-sets."""

from symchar.partitions import (
    Partition,
    CycleType,
    PartitionError,
    GenerationBoundError,
    parse_partition,
    format_partition,
    conjugate,
    class_sign,
    is_two_regular,
    partitions_of,
    hook_shape,
    two_row_shape,
)
from symchar.betaset import (
    BetaSet,
    OrderedBetaSet,
    VirtualChar2Row,
    ZERO,
    beta_from_partition,
    partition_from_beta,
    shift,
    hook_removals,
    ordered_sign,
    virtual_char,
    hook_combination,
)
from symchar.evaluator import (
    MemoStore,
    SizeMismatchError,
    CharacterTable,
    mn_value,
    dimension_hlf,
    character_table,
    psi2,
    phi2,
)
from symchar.identities import (
    FamilyInstance,
    Eq3Term,
    Eq3Expansion,
    CheckRow,
    Report,
    SweepSummary,
    make_family,
    eq3_expand,
    eval_via_eq3,
    verify_eq3,
    verify_main_theorem,
    verify_rz,
    verify_sign_flip,
    sweep,
)

__version__ = "0.1.0"
