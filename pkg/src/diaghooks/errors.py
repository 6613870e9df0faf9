"""Exception types shared across the library.

Every error raised on bad input derives from DiagHookError, which itself is a
ValueError, so callers that do not care about the fine distinctions can catch
the usual thing.
"""


class DiagHookError(ValueError):
    """Base class for every error raised by this package."""


class NonPositivePart(DiagHookError):
    """A partition part was zero or negative."""


class NonMonotonic(DiagHookError):
    """Partition parts were not weakly decreasing."""


class CellOutOfDiagram(DiagHookError):
    """A (row, column) index fell outside the Young diagram."""


class NotStrictlyDecreasing(DiagHookError):
    """A sequence that must strictly decrease (and stay non-negative) failed to."""


class LengthMismatch(DiagHookError):
    """Paired leg/arm sequences had different lengths."""


class InvalidDeltaSet(DiagHookError):
    """Diagonal hook lengths must be positive, odd and strictly decreasing."""


class InvalidBetaSet(DiagHookError):
    """Bead positions must be distinct non-negative integers."""


class TooFewBeads(DiagHookError):
    """Requested bead count is smaller than the number of parts."""


class BadModulus(DiagHookError):
    """The runner count p must be an integer >= 2, compatible with the bead count."""


class EvenModulus(DiagHookError):
    """The operation addresses the centre runner and therefore needs odd p."""


class BadResidue(DiagHookError):
    """A residue was outside the range 0..p-1."""


class CenterResidue(DiagHookError):
    """The paired-runner formula does not apply to the self-dual centre residue."""


class NotAPHook(DiagHookError):
    """The given space/bead pair is not a hook of the expected kind."""


class NotSymmetric(DiagHookError):
    """A self-conjugate partition was required."""


class NonEmptyCore(DiagHookError):
    """An empty p-core was required."""


class NotACore(DiagHookError):
    """The partition still contains a hook of length p."""


class WrongQuotientLength(DiagHookError):
    """A p-quotient must have exactly p components."""


class NotSymmetricQuotient(DiagHookError):
    """Quotient components must satisfy component[g] == conjugate(component[p-1-g])."""


class NotSymmetricBisequence(DiagHookError):
    """A bisequence with equal leg and arm sequences was required."""


class InconsistentQuotient(DiagHookError):
    """Residue entries do not reassemble into a valid bisequence."""


class BadPartitionSyntax(DiagHookError):
    """Textual partition input could not be parsed."""


class InternalInconsistency(DiagHookError):
    """An internal invariant failed; indicates invalid input or a bug."""
