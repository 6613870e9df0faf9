"""Diagonal hook lengths of a self-conjugate partition from its core and quotient.

Nothing here ever touches the Young diagram of the full partition: the
diagonal data is assembled residue by residue from the quotient components,
then shifted to account for a non-empty core. The brute-force reading in
`partitions.diagonal_hooks` exists precisely so the test suite can confirm
every branch of this module by exhaustive enumeration.
"""

from dataclasses import dataclass
from typing import Sequence

from .abacus import is_p_core, is_symmetric_quotient
from .bisequence import QuotientEntry, diagonal_bisequence
from .errors import (
    BadModulus,
    BadResidue,
    CenterResidue,
    EvenModulus,
    InternalInconsistency,
    NotACore,
    NotSymmetric,
    NotSymmetricQuotient,
    WrongQuotientLength,
)
from .partitions import DeltaSet, Partition


@dataclass(frozen=True)
class CoreCounts:
    """Per-residue diagonal counts of a symmetric core and the induced split.

    d0[g] counts the core's diagonal hooks whose arm is congruent to g mod p.
    Residues with d0 > 0 get the shift treatment, their mirrors p-1-g receive
    the shifted-out legs, and everything else passes through untouched.
    """

    d0: tuple[int, ...]
    shifted: tuple[int, ...]
    mirrored: tuple[int, ...]
    untouched: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.d0)


def core_counts(core: Partition, p: int) -> CoreCounts:
    """Residue bookkeeping for a symmetric p-core."""
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    if not core.is_symmetric:
        raise NotSymmetric(f"{core} is not self-conjugate")
    if not is_p_core(core, p):
        raise NotACore(f"{core} has a hook of length {p}")
    d0 = [0] * p
    for b in diagonal_bisequence(core).arms:
        d0[b % p] += 1
    shifted = tuple(g for g in range(p) if d0[g] > 0)
    mirrored = tuple(sorted(p - 1 - g for g in shifted))
    taken = set(shifted) | set(mirrored)
    untouched = tuple(g for g in range(p) if g not in taken)
    return CoreCounts(tuple(d0), shifted, mirrored, untouched)


def shift_sets(legs: Sequence[int], d0: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The gap set S (values below d0 missing from legs) and the tail set T (legs >= d0).

    Always satisfies len(S) + len(legs-in-[0,d0)) == d0 and S disjoint from T.
    """
    if d0 < 1:
        raise InternalInconsistency(f"shift amount must be >= 1, got {d0}")
    present = set(legs)
    s_set = tuple(s for s in range(d0 - 1, -1, -1) if s not in present)
    t_set = tuple(t for t in legs if t >= d0)
    return s_set, t_set


def d0_shift(entry: QuotientEntry, d0: int) -> QuotientEntry:
    """Shift one residue entry by the core's diagonal count d0.

    Arms move up by d0; each gap s below d0 in the legs turns into a new arm
    d0-s-1; legs at least d0 drop by d0 and stay legs; legs below d0 are
    absorbed. A balanced entry comes out with exactly d0 more arms than legs.
    """
    s_set, t_set = shift_sets(entry.legs, d0)
    arms = tuple(a + d0 for a in entry.arms) + tuple(d0 - s - 1 for s in sorted(s_set))
    legs = tuple(t - d0 for t in t_set)
    return QuotientEntry(legs=legs, arms=arms)


def delta_concentrated_pair(component: Partition, g: int, p: int) -> DeltaSet:
    """Diagonal hook lengths contributed by the runner pair {g, p-1-g}.

    `component` sits on runner g; its conjugate is implicitly on the mirror
    runner. Each diagonal (leg s | arm t) of the component yields the two
    lengths 2*(s+1)*p - 2*g - 1 and 2*t*p + 2*g + 1.
    """
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    if not 0 <= g < p:
        raise BadResidue(f"residue {g} not in 0..{p - 1}")
    if 2 * g == p - 1:
        raise CenterResidue(f"residue {g} is self-dual for p={p}; use delta_concentrated_center")
    d = diagonal_bisequence(component)
    lengths = [2 * (s + 1) * p - 2 * g - 1 for s in d.legs]
    lengths += [2 * t * p + 2 * g + 1 for t in d.arms]
    return DeltaSet(tuple(sorted(lengths, reverse=True)))


def delta_concentrated_center(component: Partition, p: int) -> DeltaSet:
    """Diagonal hook lengths contributed by the self-dual centre runner (p odd).

    The centre component must itself be self-conjugate; each of its diagonal
    values m yields the length (2*m+1)*p.
    """
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    if p % 2 == 0:
        raise EvenModulus(f"p={p} has no centre runner")
    if not component.is_symmetric:
        raise NotSymmetric(f"centre component {component} is not self-conjugate")
    d = diagonal_bisequence(component)
    return DeltaSet(tuple((2 * m + 1) * p for m in d.arms))


def _require_symmetric_quotient(quotient: Sequence[Partition], p: int) -> tuple[Partition, ...]:
    if p < 2:
        raise BadModulus(f"p must be >= 2, got {p}")
    quotient = tuple(quotient)
    if len(quotient) != p:
        raise WrongQuotientLength(f"expected {p} components, got {len(quotient)}")
    if not is_symmetric_quotient(quotient):
        raise NotSymmetricQuotient("component g must equal conjugate of component p-1-g")
    return quotient


def delta_empty_core(quotient: Sequence[Partition], p: int) -> DeltaSet:
    """Diagonal hook lengths when the core is empty: runner pairs contribute
    independently and their contributions never collide."""
    quotient = _require_symmetric_quotient(quotient, p)
    lengths: list[int] = []
    for g in range(p // 2):
        lengths.extend(delta_concentrated_pair(quotient[g], g, p).lengths)
    if p % 2 == 1:
        lengths.extend(delta_concentrated_center(quotient[(p - 1) // 2], p).lengths)
    if len(set(lengths)) != len(lengths):
        raise InternalInconsistency("runner contributions collided; invalid input or bug")
    return DeltaSet(tuple(sorted(lengths, reverse=True)))


def delta_general(core: Partition, quotient: Sequence[Partition], p: int) -> DeltaSet:
    """Diagonal hook lengths of the self-conjugate partition with this core and quotient.

    Empty core delegates to delta_empty_core. Otherwise each populated core
    residue g shifts its runner entry by d0[g]: the shifted arms stay at
    residue g, the surviving legs re-emerge as arms at the mirror residue
    p-1-g, and untouched residues contribute their arms as-is. Every arm value
    b then gives the length 2*b + 1.
    """
    quotient = _require_symmetric_quotient(quotient, p)
    if not core.is_symmetric:
        raise NotSymmetric(f"core {core} is not self-conjugate")
    if not is_p_core(core, p):
        raise NotACore(f"core {core} has a hook of length {p}")
    if not core:
        return delta_empty_core(quotient, p)
    cc = core_counts(core, p)
    arm_values: list[int] = []
    for g in cc.shifted:
        d = diagonal_bisequence(quotient[g])
        moved = d0_shift(QuotientEntry(d.legs, d.arms), cc.d0[g])
        arm_values.extend(g + m * p for m in moved.arms)
        arm_values.extend((p - 1 - g) + m * p for m in moved.legs)
    for g in cc.untouched:
        arm_values.extend(g + m * p for m in diagonal_bisequence(quotient[g]).arms)
    if len(set(arm_values)) != len(arm_values):
        raise InternalInconsistency("residue contributions collided; invalid input or bug")
    return DeltaSet(tuple(sorted((2 * b + 1 for b in arm_values), reverse=True)))
