"""Integer partitions, used both as character labels and as cycle types."""

from __future__ import annotations

import re
from collections import Counter
from typing import Callable, Iterator, Iterable, Optional

__all__ = [
    "Partition",
    "CycleType",
    "PartitionError",
    "GenerationBoundError",
    "parse_partition",
    "format_partition",
    "conjugate",
    "class_sign",
    "is_two_regular",
    "partitions_of",
    "odd_parts",
    "hook_shape",
    "two_row_shape",
    "multiplicities",
    "DEFAULT_GENERATION_BOUND",
]

DEFAULT_GENERATION_BOUND = 40

_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


class PartitionError(ValueError):
    """Raised for malformed partition text or invalid parts."""


class GenerationBoundError(ValueError):
    """Raised when an enumeration would exceed the configured size bound."""


class Partition(tuple):
    """A partition stored as a weakly decreasing tuple of positive integers.

    Parts may be given in any order; they are sorted on construction, since a
    partition is a multiset. The empty tuple is the partition of 0, shown as
    ``(0)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise PartitionError(f"parts must be positive, got {p}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        if not self:
            return "(0)"
        return "(" + ",".join(map(str, self)) + ")"

    def __str__(self) -> str:
        return format_partition(self)


# A cycle type is a partition of n whose parts are cycle lengths (fixed points
# appear as parts equal to 1).
CycleType = Partition


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2^2,1"`` style text. The empty string is the empty partition."""
    if text is None:
        raise PartitionError("no partition given")
    if not text.strip():
        return Partition()
    parts: list[int] = []
    for token in text.split(","):
        m = _TERM.match(token)
        if m is None:
            raise PartitionError(f"malformed term {token!r} in {text!r}")
        base = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if base < 1:
            raise PartitionError(f"parts must be positive, got {base} in {text!r}")
        if mult < 1:
            raise PartitionError(f"exponent must be at least 1 in {token.strip()!r}")
        parts.extend([base] * mult)
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    """Canonical plain comma form; the empty partition formats as ``""``."""
    return ",".join(str(p) for p in lam)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def class_sign(mu: Iterable[int]) -> int:
    """Sign of a permutation with cycle type ``mu``: ``(-1)**(n - len(mu))``."""
    mu = tuple(mu)
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def is_two_regular(mu: Iterable[int]) -> bool:
    return all(p % 2 for p in mu)


def odd_parts(part: int) -> bool:
    """Part filter for :func:`partitions_of` selecting partitions into odd parts."""
    return part % 2 == 1


def partitions_of(
    n: int,
    predicate: Optional[Callable[[int], bool]] = None,
    bound: int = DEFAULT_GENERATION_BOUND,
) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in lexicographically decreasing order.

    If ``predicate`` is given, only partitions all of whose parts satisfy it are
    produced (e.g. :func:`odd_parts`).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise GenerationBoundError(f"n={n} exceeds generation bound {bound}")
    allowed = [p for p in range(n, 0, -1) if predicate is None or predicate(p)]

    def rec(remaining: int, start: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for idx in range(start, len(allowed)):
            p = allowed[idx]
            if p <= remaining:
                prefix.append(p)
                yield from rec(remaining - p, idx, prefix)
                prefix.pop()

    yield from rec(n, 0, [])


def hook_shape(arm: int, leg: int) -> Optional[Partition]:
    """The hook ``(arm, 1^leg)``, or ``None`` if that symbol is not a partition.

    Besides genuine hooks (``arm >= 1``, ``leg >= 0``) the empty partition has two
    labels, ``(0, 1^0)`` and its conjugate ``(1, 1^-1)``; the hook symbol is closed
    under conjugation ``(a, 1^b) -> (b+1, 1^(a-1))`` with this convention.
    """
    if arm >= 1 and leg >= 0:
        return Partition((arm,) + (1,) * leg)
    if (arm, leg) in ((0, 0), (1, -1)):
        return Partition()
    return None


def two_row_shape(first: int, second: int) -> Optional[Partition]:
    """The shape ``(first, second)``, or ``None`` unless ``first >= second >= 0``."""
    if first >= second >= 0:
        return Partition(p for p in (first, second) if p)
    return None


def multiplicities(lam: Iterable[int]) -> Counter:
    return Counter(lam)
