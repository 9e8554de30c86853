"""Beta-sets: partitions encoded by first-column hook lengths.

Removing a rim hook of length ``h`` from a partition amounts to replacing an
entry ``x`` of its beta-set by ``x - h`` (when ``x - h`` is a free nonnegative
position). Writing the replacement in place, without re-sorting, gives an
*ordered* beta-set whose sorting sign is ``(-1)**leg_length``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from symchar.partitions import Partition, hook_shape

__all__ = [
    "BetaSet",
    "OrderedBetaSet",
    "VirtualChar2Row",
    "ZERO",
    "ImproperBetaSetError",
    "beta_from_partition",
    "partition_from_beta",
    "shift",
    "hook_removals",
    "ordered_sign",
    "is_proper",
    "virtual_char",
    "hook_combination",
]


class ImproperBetaSetError(ValueError):
    """Raised when a sign is requested for an ordered beta-set with repeated or negative entries."""


class BetaSet(tuple):
    """Finite set of distinct nonnegative integers, stored strictly decreasing."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()) -> "BetaSet":
        entries = sorted(set(entries), reverse=True)
        if entries and entries[-1] < 0:
            raise ValueError(f"beta-set entries must be nonnegative, got {entries[-1]}")
        return super().__new__(cls, entries)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


class OrderedBetaSet(tuple):
    """A sequence of integers read as a beta-set in a fixed order.

    Negative and repeated entries are representable; such sequences are
    *improper* and carry no partition or sign.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()) -> "OrderedBetaSet":
        return super().__new__(cls, entries)

    @property
    def proper(self) -> bool:
        return is_proper(self)

    def sign(self) -> int:
        return ordered_sign(self)

    def partition(self) -> Partition:
        return partition_from_beta(BetaSet(self))

    def __repr__(self) -> str:
        return "((" + ",".join(map(str, self)) + "))"


@dataclass(frozen=True)
class VirtualChar2Row:
    """``sign * chi^shape`` for a shape with at most two rows, or zero (``shape is None``)."""

    sign: int = 0
    shape: Optional[Partition] = None

    def __post_init__(self):
        if self.shape is None:
            if self.sign != 0:
                raise ValueError("the zero virtual character has sign 0")
        else:
            if self.sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {self.sign}")
            if len(self.shape) > 2:
                raise ValueError(f"shape {self.shape!r} has more than two rows")

    @property
    def is_zero(self) -> bool:
        return self.shape is None

    def __neg__(self) -> "VirtualChar2Row":
        if self.shape is None:
            return self
        return VirtualChar2Row(-self.sign, self.shape)

    def __str__(self) -> str:
        if self.shape is None:
            return "0"
        return ("+" if self.sign > 0 else "-") + f"chi^{self.shape!r}"


ZERO = VirtualChar2Row()


def beta_from_partition(lam: Iterable[int], length: Optional[int] = None) -> BetaSet:
    """First-column hook lengths of ``lam``, shifted up to ``length`` entries if given."""
    lam = tuple(lam)
    ell = len(lam)
    if length is None:
        length = ell
    if length < ell:
        raise ValueError(f"beta-set length {length} is shorter than the partition length {ell}")
    return BetaSet(p + length - 1 - i for i, p in enumerate(lam + (0,) * (length - ell)))


def partition_from_beta(beta: Iterable[int]) -> Partition:
    xs = sorted(beta, reverse=True)
    m = len(xs)
    return Partition(p for p in (x - (m - 1 - i) for i, x in enumerate(xs)) if p)


def shift(beta: Iterable[int], r: int) -> BetaSet:
    if r < 1:
        raise ValueError(f"shift must be positive, got {r}")
    return BetaSet([x + r for x in beta] + list(range(r)))


def is_proper(entries: Iterable[int]) -> bool:
    entries = tuple(entries)
    return len(set(entries)) == len(entries) and all(z >= 0 for z in entries)


def ordered_sign(entries: Iterable[int]) -> int:
    """Sign of the permutation sorting a proper ordered beta-set into decreasing order."""
    z = tuple(entries)
    if not is_proper(z):
        raise ImproperBetaSetError(f"ordered beta-set {z} is not proper")
    inversions = sum(1 for i in range(len(z)) for k in range(i + 1, len(z)) if z[i] < z[k])
    return -1 if inversions % 2 else 1


def hook_removals(beta: Iterable[int], h: int) -> list[tuple[BetaSet, int]]:
    """All removals of an ``h``-hook, as ``(new beta-set, (-1)**leg)`` pairs.

    Results are ordered by decreasing modified entry.
    """
    if h < 1:
        raise ValueError(f"hook length must be positive, got {h}")
    xs = tuple(sorted(beta, reverse=True))
    present = set(xs)
    out = []
    for i, x in enumerate(xs):
        if x < h:
            break
        y = x - h
        if y in present:
            continue
        # writing y in position i leaves it out of order only against the
        # entries strictly between y and x
        passed = sum(1 for w in xs[i + 1:] if w > y)
        out.append((BetaSet(xs[:i] + (y,) + xs[i + 1:]), -1 if passed % 2 else 1))
    return out


def virtual_char(z: Iterable[int]) -> VirtualChar2Row:
    z = tuple(z)
    if len(z) != 2:
        raise ValueError(f"virtual characters are defined for length-2 ordered beta-sets, got {z}")
    x, y = z
    if x < 0 or y < 0 or x == y:
        return ZERO
    if x > y:
        return VirtualChar2Row(1, Partition(p for p in (x - 1, y) if p))
    return VirtualChar2Row(-1, Partition(p for p in (y - 1, x) if p))


def hook_combination(x: int, y: int) -> list[tuple[int, Partition]]:
    """``chi^(x-1, 1^y) - chi^(x+1, 1^(y-2))`` as ``(sign, hook)`` terms.

    On 2-regular classes this agrees with ``virtual_char((x, y))``. Labels with a
    negative entry give the empty combination; otherwise hook symbols that are
    not partitions are dropped (see :func:`symchar.partitions.hook_shape`).
    """
    if x < 0 or y < 0:
        return []
    terms = []
    for sign, shape in ((1, hook_shape(x - 1, y)), (-1, hook_shape(x + 1, y - 2))):
        if shape is not None:
            terms.append((sign, shape))
    return terms
