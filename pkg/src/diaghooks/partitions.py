"""Integer partitions, Young-diagram hooks, and the brute-force diagonal reading.

Conventions used throughout the package: rows and columns are 1-based, parts
are weakly decreasing positive integers, and the empty partition is a
first-class value. All quantities fit comfortably in native integers; the
library is meant for desk-scale weights (n up to a few thousand at most).
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    CellOutOfDiagram,
    InvalidDeltaSet,
    LengthMismatch,
    NonMonotonic,
    NonPositivePart,
    NotStrictlyDecreasing,
    NotSymmetric,
)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers, possibly empty.

    Construction validates the input instead of sorting it: silently fixing
    the order would hide bugs in callers.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for k, part in enumerate(parts):
            if part < 1:
                raise NonPositivePart(f"part #{k + 1} is {part}, must be >= 1")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise NonMonotonic(f"parts must be weakly decreasing, found {a} before {b}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def durfee(self) -> int:
        """Side of the largest square of cells inside the diagram."""
        t = 0
        for i, part in enumerate(self.parts, start=1):
            if part < i:
                break
            t = i
        return t

    def row(self, i: int) -> int:
        """Length of row i (1-based), zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Partition of the column lengths; an involution."""
        parts = self.parts
        if not parts:
            return Partition(())
        cols = []
        j = len(parts) - 1
        for c in range(1, parts[0] + 1):
            while parts[j] < c:
                j -= 1
            cols.append(j + 1)
        return Partition(tuple(cols))

    @property
    def is_symmetric(self) -> bool:
        """True when the partition equals its conjugate.

        Checked cheaply via the diagonal: row i and column i must agree for
        every i up to the Durfee size.
        """
        parts = self.parts
        if not parts:
            return True
        if parts[0] != len(parts):
            return False
        j = len(parts) - 1
        for i in range(1, self.durfee + 1):
            while j >= 0 and parts[j] < i:
                j -= 1
            if parts[i - 1] != j + 1:
                return False
        return True


@dataclass(frozen=True)
class Hook:
    """A hook with corner (row, col): the corner cell, its arm, and its leg."""

    row: int
    col: int
    arm: int
    leg: int

    @property
    def length(self) -> int:
        return self.arm + self.leg + 1


@dataclass(frozen=True)
class DeltaSet:
    """Diagonal hook lengths of a self-conjugate partition.

    Always strictly decreasing positive odd integers; their sum equals the
    weight of the partition they describe.
    """

    lengths: tuple[int, ...] = ()

    def __post_init__(self):
        lengths = tuple(self.lengths)
        object.__setattr__(self, "lengths", lengths)
        for d in lengths:
            if d < 1 or d % 2 == 0:
                raise InvalidDeltaSet(f"{d} is not a positive odd length")
        for a, b in zip(lengths, lengths[1:]):
            if b >= a:
                raise InvalidDeltaSet(f"lengths must strictly decrease, found {a} then {b}")

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lengths)

    @property
    def total(self) -> int:
        return sum(self.lengths)


def hook_at(la: Partition, i: int, j: int) -> Hook:
    """The hook of [la] with corner cell (i, j), 1-based."""
    if i < 1 or j < 1 or i > len(la.parts) or j > la.parts[i - 1]:
        raise CellOutOfDiagram(f"cell ({i},{j}) is not in the diagram of {la}")
    arm = la.parts[i - 1] - j
    leg = sum(1 for p in la.parts[i:] if p >= j)
    return Hook(row=i, col=j, arm=arm, leg=leg)


def all_hooks(la: Partition) -> list[Hook]:
    """Every hook of the diagram, row by row."""
    return [hook_at(la, i, j) for i in range(1, len(la.parts) + 1) for j in range(1, la.parts[i - 1] + 1)]


def diagonal_hooks(la: Partition) -> list[Hook]:
    """Hooks cornered on the main diagonal, largest first.

    This is the brute-force reading straight off the Young diagram; the rest
    of the package is repeatedly checked against it. Works for arbitrary
    partitions, not only self-conjugate ones.
    """
    return [hook_at(la, i, i) for i in range(1, la.durfee + 1)]


def delta_of(la: Partition) -> DeltaSet:
    """Diagonal hook lengths of a self-conjugate partition, largest first."""
    if not la.is_symmetric:
        raise NotSymmetric(f"{la} is not self-conjugate")
    return DeltaSet(tuple(h.length for h in diagonal_hooks(la)))


def _check_coordinate_sequence(seq: tuple[int, ...], what: str) -> None:
    for a, b in zip(seq, seq[1:]):
        if b >= a:
            raise NotStrictlyDecreasing(f"{what} must strictly decrease, found {a} then {b}")
    if seq and seq[-1] < 0:
        raise NotStrictlyDecreasing(f"{what} must be non-negative")


def from_frobenius(legs: Iterable[int], arms: Iterable[int]) -> Partition:
    """The unique partition whose diagonal hooks have these legs and arms.

    Inverse of diagonal_hooks: legs[i] and arms[i] are the leg and arm of the
    hook cornered at cell (i+1, i+1).
    """
    legs = tuple(legs)
    arms = tuple(arms)
    if len(legs) != len(arms):
        raise LengthMismatch(f"{len(legs)} legs vs {len(arms)} arms")
    _check_coordinate_sequence(legs, "legs")
    _check_coordinate_sequence(arms, "arms")
    t = len(legs)
    rows = [arms[i] + i + 1 for i in range(t)]
    if legs:
        for i in range(t + 1, legs[0] + 2):
            rows.append(sum(1 for jj in range(t) if legs[jj] + jj + 1 >= i))
    return Partition(tuple(rows))


def from_delta_lengths(lengths: Iterable[int]) -> Partition:
    """Self-conjugate partition with the given diagonal hook lengths."""
    delta = DeltaSet(tuple(lengths))
    half = tuple((d - 1) // 2 for d in delta.lengths)
    return from_frobenius(half, half)


def enumerate_partitions(n: int, symmetric_only: bool = False) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order, each exactly once.

    With symmetric_only the stream is filtered down to the self-conjugate
    partitions (same order).
    """
    if n < 0:
        raise NonPositivePart(f"cannot partition {n}")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        cand = Partition(tuple(parts))
        if not symmetric_only or cand.is_symmetric:
            yield cand
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        new_val = parts[k] - 1
        remaining = parts[k] + (len(parts) - k - 1) - new_val
        parts = parts[: k] + [new_val]
        while remaining > 0:
            take = min(new_val, remaining)
            parts.append(take)
            remaining -= take
