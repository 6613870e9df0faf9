"""Bead/space encodings of partitions and the half-integer balance axis.

A bead set is a finite set of distinct non-negative positions. Read as an
infinite string it carries beads at every negative position and spaces beyond
the largest bead; two encodings are equivalent when one is the other shifted
right with a bead pushed in at the origin. All axis arithmetic is kept exact
by storing 2*theta (an odd integer) instead of the half-integer theta.
"""

from dataclasses import dataclass

from .bisequence import Bisequence
from .errors import InvalidBetaSet, NotAPHook, TooFewBeads
from .partitions import Hook, Partition


@dataclass(frozen=True)
class BetaSet:
    """Distinct non-negative bead positions, kept sorted ascending."""

    beads: tuple[int, ...] = ()

    def __post_init__(self):
        beads = tuple(sorted(self.beads))
        object.__setattr__(self, "beads", beads)
        object.__setattr__(self, "_members", frozenset(beads))
        if beads and beads[0] < 0:
            raise InvalidBetaSet(f"bead position {beads[0]} is negative")
        for a, b in zip(beads, beads[1:]):
            if a == b:
                raise InvalidBetaSet(f"duplicate bead position {a}")

    def __contains__(self, pos: int) -> bool:
        return pos in self._members

    def __len__(self) -> int:
        return len(self.beads)

    def __iter__(self):
        return iter(self.beads)

    @property
    def max_bead(self) -> int:
        """Largest bead, or -1 for the empty set."""
        return self.beads[-1] if self.beads else -1

    @property
    def first_space(self) -> int:
        """Smallest non-negative position without a bead."""
        s = 0
        for b in self.beads:
            if b != s:
                break
            s += 1
        return s

    def shifted(self, steps: int = 1) -> "BetaSet":
        """Equivalent encoding with `steps` beads pushed in at the origin."""
        if steps < 0:
            raise InvalidBetaSet("cannot shift by a negative amount")
        return BetaSet(tuple(range(steps)) + tuple(b + steps for b in self.beads))

    def minimal(self) -> "BetaSet":
        """Canonical representative: shift left until position 0 is a space."""
        r = 0
        for b in self.beads:
            if b != r:
                break
            r += 1
        return BetaSet(tuple(b - r for b in self.beads[r:]))


@dataclass(frozen=True)
class BetaHook:
    """A hook (y, x] of a bead set: space y jumped over by bead x > y."""

    y: int
    x: int

    @property
    def length(self) -> int:
        return self.x - self.y


@dataclass(frozen=True)
class Axis:
    """Balance point of a bead set, stored exactly as the odd integer 2*theta."""

    two_theta: int

    @property
    def last_left(self) -> int:
        """Largest integer position strictly left of the axis."""
        return (self.two_theta - 1) // 2

    def is_left(self, pos: int) -> bool:
        return 2 * pos < self.two_theta

    def is_right(self, pos: int) -> bool:
        return 2 * pos > self.two_theta


def beta_of(la: Partition, k: int) -> BetaSet:
    """First-column bead encoding of la with exactly k beads."""
    if k < len(la.parts):
        raise TooFewBeads(f"need at least {len(la.parts)} beads for {la}, got {k}")
    parts = la.parts + (0,) * (k - len(la.parts))
    return BetaSet(tuple(parts[i] + k - (i + 1) for i in range(k)))


def partition_of(x: BetaSet) -> Partition:
    """The partition encoded by a bead set (inverse of beta_of at k = len)."""
    k = len(x)
    parts = []
    for idx, b in enumerate(reversed(x.beads)):
        part = b - (k - 1 - idx)
        if part > 0:
            parts.append(part)
    return Partition(tuple(parts))


def hooks_of(x: BetaSet) -> list[BetaHook]:
    """All hooks (y, x]: one per cell of the encoded diagram, sorted by (x, y)."""
    out = []
    for b in x.beads:
        for y in range(b):
            if y not in x:
                out.append(BetaHook(y, b))
    return out


def young_hook(x: BetaSet, hook: BetaHook) -> Hook:
    """Young-diagram corner, arm and leg of a bead-set hook.

    Row = beads at or above x, column = spaces at or below y, leg = beads
    strictly between, arm = spaces strictly between.
    """
    if hook.x not in x or hook.y in x or hook.y < 0 or hook.y >= hook.x:
        raise NotAPHook(f"({hook.y},{hook.x}] is not a hook of this bead set")
    row = sum(1 for z in x.beads if z >= hook.x)
    col = sum(1 for z in range(hook.y + 1) if z not in x)
    leg = sum(1 for z in x.beads if hook.y < z < hook.x)
    arm = hook.length - 1 - leg
    return Hook(row=row, col=col, arm=arm, leg=leg)


def remove_hook(x: BetaSet, hook: BetaHook) -> BetaSet:
    """Move the bead at hook.x into the space at hook.y; removes a hook of that length."""
    if hook.x not in x or hook.y in x or hook.y < 0 or hook.y >= hook.x:
        raise NotAPHook(f"({hook.y},{hook.x}] is not a hook of this bead set")
    return BetaSet(tuple(b for b in x.beads if b != hook.x) + (hook.y,))


def axis_of(x: BetaSet) -> Axis:
    """The unique half-integer with as many beads to its right as spaces to its left.

    Walk right from just left of the first space: each unit step either adds a
    space on the left or removes a bead on the right, so the surplus of beads
    over spaces drops by exactly one per step until it reaches zero.
    """
    s = x.first_space
    surplus = sum(1 for b in x.beads if b > s)
    return Axis(two_theta=2 * (s + surplus) - 1)


def plus_minus(x: BetaSet) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Beads right of the axis (descending) and spaces left of it (ascending).

    The two lists always have equal length; paired entries differ by one plus
    the leg and arm of the corresponding diagonal hook.
    """
    ax = axis_of(x)
    plus = tuple(b for b in reversed(x.beads) if ax.is_right(b))
    minus = tuple(y for y in range(ax.last_left + 1) if y not in x)
    return plus, minus


def bisequence_of(x: BetaSet) -> Bisequence:
    """Diagonal legs and arms read off the bead string around its axis."""
    ax = axis_of(x)
    plus, minus = plus_minus(x)
    legs = tuple(ax.last_left - y for y in minus)
    arms = tuple(b - ax.last_left - 1 for b in plus)
    return Bisequence(legs, arms)


def is_symmetric_beta(x: BetaSet) -> bool:
    """True when reflecting through the axis swaps beads and spaces.

    Positions below 0 count as beads; the check covers the whole non-trivial
    window of the infinite string.
    """
    ax = axis_of(x)
    top = max(x.max_bead, ax.two_theta)
    for z in range(top + 1):
        mirror = ax.two_theta - z
        mirror_is_bead = mirror < 0 or mirror in x
        if (z in x) == mirror_is_bead:
            return False
    return True
