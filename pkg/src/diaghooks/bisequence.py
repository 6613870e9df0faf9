"""Diagonal leg/arm data of a partition and its decomposition by residue.

The bisequence of a partition pairs the strictly decreasing leg lengths of its
diagonal hooks with the strictly decreasing arm lengths. Splitting those
values by residue mod p (legs land on the mirrored residue p-1-g, arms on g)
is lossless and is what the runner formulas in `formula` operate on.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    BadModulus,
    BadResidue,
    InconsistentQuotient,
    LengthMismatch,
    NotStrictlyDecreasing,
    NotSymmetricBisequence,
)
from .partitions import DeltaSet, Partition, diagonal_hooks


def _check_descending(seq: tuple[int, ...], what: str) -> None:
    for a, b in zip(seq, seq[1:]):
        if b >= a:
            raise NotStrictlyDecreasing(f"{what} must strictly decrease, found {a} then {b}")
    if seq and seq[-1] < 0:
        raise NotStrictlyDecreasing(f"{what} must be non-negative")


@dataclass(frozen=True)
class Bisequence:
    """Paired strictly decreasing sequences: diagonal legs and diagonal arms.

    A partition is self-conjugate exactly when the two sides coincide.
    """

    legs: tuple[int, ...] = ()
    arms: tuple[int, ...] = ()

    def __post_init__(self):
        legs = tuple(self.legs)
        arms = tuple(self.arms)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "arms", arms)
        if len(legs) != len(arms):
            raise LengthMismatch(f"{len(legs)} legs vs {len(arms)} arms")
        _check_descending(legs, "legs")
        _check_descending(arms, "arms")

    def __len__(self) -> int:
        return len(self.legs)

    @property
    def size(self) -> int:
        return len(self.legs)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.legs, self.arms))

    @property
    def is_symmetric(self) -> bool:
        return self.legs == self.arms

    def dual(self) -> "Bisequence":
        return Bisequence(self.arms, self.legs)

    def delta(self) -> DeltaSet:
        """Diagonal hook lengths 2*b+1; defined for symmetric data only."""
        if not self.is_symmetric:
            raise NotSymmetricBisequence("legs and arms differ")
        return DeltaSet(tuple(2 * b + 1 for b in self.arms))


@dataclass(frozen=True)
class QuotientEntry:
    """Leg and arm m-values landing on one residue.

    Unlike a Bisequence the two sides may have different lengths: a non-empty
    core unbalances them (see `formula.d0_shift`).
    """

    legs: tuple[int, ...] = ()
    arms: tuple[int, ...] = ()

    def __post_init__(self):
        legs = tuple(sorted(self.legs, reverse=True))
        arms = tuple(sorted(self.arms, reverse=True))
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "arms", arms)
        _check_descending(legs, "legs")
        _check_descending(arms, "arms")

    @property
    def is_empty(self) -> bool:
        return not self.legs and not self.arms

    @property
    def is_balanced(self) -> bool:
        return len(self.legs) == len(self.arms)


@dataclass(frozen=True)
class QuotientBisequence:
    """One QuotientEntry per residue 0..p-1."""

    entries: tuple[QuotientEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def p(self) -> int:
        return len(self.entries)

    def __getitem__(self, g: int) -> QuotientEntry:
        return self.entries[g]

    def __iter__(self) -> Iterator[QuotientEntry]:
        return iter(self.entries)

    @property
    def populated(self) -> frozenset[int]:
        """Residues whose entry is non-empty."""
        return frozenset(g for g, e in enumerate(self.entries) if not e.is_empty)


def diagonal_bisequence(la: Partition) -> Bisequence:
    """Legs and arms of the diagonal hooks of la, largest first."""
    hooks = diagonal_hooks(la)
    return Bisequence(tuple(h.leg for h in hooks), tuple(h.arm for h in hooks))


def quotient_of(d: Bisequence, p: int) -> QuotientBisequence:
    """Split d by residue: a leg g+m*p puts m at entry p-1-g, an arm g+m*p puts m at entry g.

    The placement is lossless; `unquotient` recovers d exactly.
    """
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    legs: list[list[int]] = [[] for _ in range(p)]
    arms: list[list[int]] = [[] for _ in range(p)]
    for a in d.legs:
        legs[p - 1 - (a % p)].append(a // p)
    for b in d.arms:
        arms[b % p].append(b // p)
    return QuotientBisequence(tuple(QuotientEntry(tuple(ls), tuple(ar)) for ls, ar in zip(legs, arms)))


def unquotient(q: QuotientBisequence) -> Bisequence:
    """Reassemble a bisequence from its residue entries (inverse of quotient_of)."""
    p = q.p
    if p < 2:
        raise BadModulus(f"need at least 2 residue entries, got {p}")
    legs = []
    arms = []
    for g, entry in enumerate(q.entries):
        legs.extend((p - 1 - g) + m * p for m in entry.legs)
        arms.extend(g + m * p for m in entry.arms)
    if len(legs) != len(arms):
        raise InconsistentQuotient(f"entries assemble to {len(legs)} legs but {len(arms)} arms")
    try:
        return Bisequence(tuple(sorted(legs, reverse=True)), tuple(sorted(arms, reverse=True)))
    except (NotStrictlyDecreasing, LengthMismatch) as exc:
        raise InconsistentQuotient(str(exc)) from exc


def residue_class(d: Bisequence, p: int, g: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The legs and arms of d congruent to g mod p, orders preserved."""
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    if not 0 <= g < p:
        raise BadResidue(f"residue {g} not in 0..{p - 1}")
    return (
        tuple(a for a in d.legs if a % p == g),
        tuple(b for b in d.arms if b % p == g),
    )


def is_concentrated(d: Bisequence, p: int, residues: Iterable[int]) -> bool:
    """True when the populated residue entries of d are exactly the given set."""
    return quotient_of(d, p).populated == frozenset(residues)


def is_gamma_packed(d: Bisequence, p: int, g: int) -> bool:
    """True when the residue-g diagonal values are exactly g, g+p, ..., g+r*p.

    The empty class counts as packed. Requires symmetric data, since packing
    is a statement about diagonal (b|b) pairs.
    """
    if not d.is_symmetric:
        raise NotSymmetricBisequence("legs and arms differ")
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    if not 0 <= g < p:
        raise BadResidue(f"residue {g} not in 0..{p - 1}")
    vals = sorted(b for b in d.arms if b % p == g)
    return all(v == g + i * p for i, v in enumerate(vals))


def is_symmetric_p_core(d: Bisequence, p: int) -> bool:
    """Residue test for p-core-ness of the self-conjugate partition behind d.

    The partition has no hook of length p exactly when every populated residue
    class is fully packed and the mirrored class p-1-g is empty. Note the
    centre residue of odd p is its own mirror, so it must be empty outright.
    """
    if not d.is_symmetric:
        raise NotSymmetricBisequence("legs and arms differ")
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    for g in range(p):
        if not any(b % p == g for b in d.arms):
            continue
        if not is_gamma_packed(d, p, g):
            return False
        if any(b % p == p - 1 - g for b in d.arms):
            return False
    return True
