"""diaghooks: diagonal hook lengths of self-conjugate partitions.

Computes the diagonal hook lengths of a self-conjugate integer partition
directly from its p-core and p-quotient, and ships the brute-force
Young-diagram reading plus an exhaustive verification sweep that keeps the
formulas honest.
"""

from .abacus import (
    Abacus,
    HookSide,
    PHookClass,
    classify_p_hook,
    core_and_quotient,
    from_core_and_quotient,
    is_p_core,
    is_symmetric_quotient,
    p_core,
    p_quotient,
    render_ascii,
    to_abacus,
)
from .beta import (
    Axis,
    BetaHook,
    BetaSet,
    axis_of,
    beta_of,
    bisequence_of,
    hooks_of,
    is_symmetric_beta,
    partition_of,
    plus_minus,
    remove_hook,
    young_hook,
)
from .bisequence import (
    Bisequence,
    QuotientBisequence,
    QuotientEntry,
    diagonal_bisequence,
    is_concentrated,
    is_gamma_packed,
    is_symmetric_p_core,
    quotient_of,
    residue_class,
    unquotient,
)
from .errors import DiagHookError
from .formula import (
    CoreCounts,
    core_counts,
    d0_shift,
    delta_concentrated_center,
    delta_concentrated_pair,
    delta_empty_core,
    delta_general,
    shift_sets,
)
from .partitions import (
    DeltaSet,
    Hook,
    Partition,
    all_hooks,
    delta_of,
    diagonal_hooks,
    enumerate_partitions,
    from_delta_lengths,
    from_frobenius,
    hook_at,
)
from .verify import Failure, VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "Abacus",
    "Axis",
    "BetaHook",
    "BetaSet",
    "Bisequence",
    "CoreCounts",
    "DeltaSet",
    "DiagHookError",
    "Failure",
    "Hook",
    "HookSide",
    "PHookClass",
    "Partition",
    "QuotientBisequence",
    "QuotientEntry",
    "VerifyReport",
    "all_hooks",
    "axis_of",
    "beta_of",
    "bisequence_of",
    "classify_p_hook",
    "core_and_quotient",
    "core_counts",
    "d0_shift",
    "delta_concentrated_center",
    "delta_concentrated_pair",
    "delta_empty_core",
    "delta_general",
    "delta_of",
    "diagonal_bisequence",
    "diagonal_hooks",
    "enumerate_partitions",
    "from_core_and_quotient",
    "from_delta_lengths",
    "from_frobenius",
    "hook_at",
    "hooks_of",
    "is_concentrated",
    "is_gamma_packed",
    "is_p_core",
    "is_symmetric_beta",
    "is_symmetric_p_core",
    "is_symmetric_quotient",
    "p_core",
    "p_quotient",
    "partition_of",
    "plus_minus",
    "quotient_of",
    "remove_hook",
    "render_ascii",
    "residue_class",
    "run_verify",
    "shift_sets",
    "to_abacus",
    "unquotient",
    "young_hook",
]
