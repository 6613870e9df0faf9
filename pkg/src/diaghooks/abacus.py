"""The p-runner abacus: cores, quotients, and hook classification.

Bead position g + m*p sits at row m of runner g. The canonical layout of a
partition uses the least positive multiple of p that accommodates all parts,
so the bead count is always divisible by p and the quotient convention is
deterministic.
"""

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .beta import Axis, BetaHook, BetaSet, axis_of, beta_of, partition_of
from .errors import (
    BadModulus,
    NonEmptyCore,
    NotACore,
    NotAPHook,
    NotSymmetric,
    TooFewBeads,
    WrongQuotientLength,
)
from .partitions import Partition


@dataclass(frozen=True)
class Abacus:
    """A bead set arranged on p runners; bead count is a multiple of p."""

    p: int
    beads: BetaSet

    def __post_init__(self):
        if self.p < 2:
            raise BadModulus(f"p must be >= 2, got {self.p}")
        if len(self.beads) % self.p != 0:
            raise BadModulus(f"bead count {len(self.beads)} is not a multiple of {self.p}")

    @property
    def rows(self) -> int:
        """Rows needed to display every bead and the full initial layout."""
        return max(len(self.beads) // self.p, self.beads.max_bead // self.p + 1)

    def runner(self, g: int) -> BetaSet:
        """Row indices of the beads on runner g, itself a bead set."""
        return BetaSet(tuple(pos // self.p for pos in self.beads if pos % self.p == g))

    @property
    def runners(self) -> tuple[BetaSet, ...]:
        return tuple(self.runner(g) for g in range(self.p))

    def axis(self) -> Axis:
        return axis_of(self.beads)


def _canonical_bead_count(la: Partition, p: int) -> int:
    return p * max(1, -(-len(la.parts) // p))


def to_abacus(la: Partition, p: int, bead_count: int | None = None) -> Abacus:
    """Abacus layout of la; bead_count (a multiple of p) overrides the default."""
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    k = _canonical_bead_count(la, p) if bead_count is None else bead_count
    if k % p != 0:
        raise BadModulus(f"bead count {k} is not a multiple of {p}")
    if k < len(la.parts):
        raise TooFewBeads(f"{k} beads cannot hold {len(la.parts)} parts")
    return Abacus(p, beta_of(la, k))


def p_core(la: Partition, p: int) -> Partition:
    """Push every bead as far up its runner as it goes; the remaining partition.

    The result has no hook of length p and does not depend on the bead count.
    """
    ab = to_abacus(la, p)
    pushed = []
    for g in range(p):
        count = len(ab.runner(g))
        pushed.extend(g + m * p for m in range(count))
    return partition_of(BetaSet(tuple(pushed)))


def p_quotient(la: Partition, p: int) -> tuple[Partition, ...]:
    """The p partitions read off the runners of the canonical abacus."""
    ab = to_abacus(la, p)
    return tuple(partition_of(ab.runner(g)) for g in range(p))


def core_and_quotient(la: Partition, p: int) -> tuple[Partition, tuple[Partition, ...]]:
    return p_core(la, p), p_quotient(la, p)


def is_p_core(la: Partition, p: int) -> bool:
    """Direct check: no bead sits exactly p above a space."""
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    x = beta_of(la, len(la.parts))
    return not any(b >= p and (b - p) not in x for b in x.beads)


def is_symmetric_quotient(quotient: Sequence[Partition], p: int | None = None) -> bool:
    """True when component g is the conjugate of component p-1-g for every g."""
    if p is not None and len(quotient) != p:
        raise WrongQuotientLength(f"expected {p} components, got {len(quotient)}")
    n = len(quotient)
    return all(quotient[g] == quotient[n - 1 - g].conjugate() for g in range(n))


def from_core_and_quotient(core: Partition, quotient: Sequence[Partition], p: int) -> Partition:
    """Rebuild the unique partition with the given p-core and p-quotient.

    Inverse of (p_core, p_quotient): lay out the core, then replace each
    runner's bead rows by the encoding of the corresponding component.
    """
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    quotient = tuple(quotient)
    if len(quotient) != p:
        raise WrongQuotientLength(f"expected {p} components, got {len(quotient)}")
    if not is_p_core(core, p):
        raise NotACore(f"{core} has a hook of length {p}")
    k = _canonical_bead_count(core, p)
    while True:
        counts = [0] * p
        for pos in beta_of(core, k).beads:
            counts[pos % p] += 1
        if all(counts[g] >= len(quotient[g].parts) for g in range(p)):
            break
        k += p
    beads = []
    for g in range(p):
        beads.extend(g + m * p for m in beta_of(quotient[g], counts[g]).beads)
    return partition_of(BetaSet(tuple(beads)))


class HookSide(enum.Enum):
    """Where a hook of length p sits relative to the axis of the bead string."""

    STRADDLING = "straddling"
    RIGHT_OF_AXIS = "right"
    LEFT_OF_AXIS = "left"


@dataclass(frozen=True)
class PHookClass:
    """Classification of a length-p hook: its side, runner, and the row k of
    the unit hook (k-1, k] it induces on that runner."""

    side: HookSide
    runner: int
    row: int


def classify_p_hook(la: Partition, p: int, hook: BetaHook) -> PHookClass:
    """Classify a length-p hook of a self-conjugate, empty-core partition.

    Straddling hooks correspond to diagonal cells of the runner component,
    right-of-axis hooks to arm cells, left-of-axis hooks to leg cells.
    """
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    if not la.is_symmetric:
        raise NotSymmetric(f"{la} is not self-conjugate")
    if p_core(la, p):
        raise NonEmptyCore(f"{la} has a non-empty {p}-core")
    ab = to_abacus(la, p)
    x = ab.beads
    if hook.y < 0 or hook.x - hook.y != p or hook.x not in x or hook.y in x:
        raise NotAPHook(f"({hook.y},{hook.x}] is not a length-{p} hook of the canonical layout")
    ax = ab.axis()
    if ax.is_right(hook.y):
        side = HookSide.RIGHT_OF_AXIS
    elif ax.is_left(hook.x):
        side = HookSide.LEFT_OF_AXIS
    else:
        side = HookSide.STRADDLING
    return PHookClass(side=side, runner=hook.x % p, row=hook.x // p)


def render_ascii(la: Partition, p: int) -> str:
    """Deterministic picture of the canonical abacus.

    Runners are columns, beads are shown as bullets, spaces as dots, and a
    rule marks the axis (which always falls on a row boundary).
    """
    ab = to_abacus(la, p)
    axis_row = len(ab.beads) // p
    lines = []
    for row in range(max(ab.rows, axis_row)):
        cells = ["●" if (row * p + g) in ab.beads else "·" for g in range(p)]
        lines.append(" ".join(cells))
        if row + 1 == axis_row:
            lines.append("─" * (2 * p - 1))
    return "\n".join(lines)
