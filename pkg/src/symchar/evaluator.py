"""Exact character values chi^lambda(mu) by Murnaghan-Nakayama recursion on beta-sets."""

from __future__ import annotations

import logging
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterable, Optional, Sequence

from symchar.betaset import hook_removals, partition_from_beta, beta_from_partition
from symchar.partitions import (
    Partition,
    conjugate,
    format_partition,
    hook_shape,
    two_row_shape,
    multiplicities,
    parse_partition,
    partitions_of,
    PartitionError,
)

__all__ = [
    "MemoStore",
    "SizeMismatchError",
    "TableBoundError",
    "CharacterTable",
    "DEFAULT_TABLE_BOUND",
    "default_store",
    "mn_value",
    "dimension_hlf",
    "hook_lengths",
    "class_size",
    "character_table",
    "psi2",
    "phi2",
]

log = logging.getLogger(__name__)

DEFAULT_TABLE_BOUND = 14


class SizeMismatchError(ValueError):
    """Raised when a character label and a class are partitions of different n."""


class TableBoundError(ValueError):
    pass


Key = tuple[tuple[int, ...], tuple[int, ...]]


class MemoStore:
    """Thread-safe memo of character values keyed by ``(lambda, mu)``.

    Writes are idempotent: a key, once stored, keeps its value, and a second
    writer must agree with it.
    """

    def __init__(self):
        self._values: dict[Key, int] = {}
        self._unsaved: list[Key] = []
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: Key) -> bool:
        return key in self._values

    def get(self, key: Key) -> Optional[int]:
        value = self._values.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: Key, value: int) -> int:
        with self._lock:
            old = self._values.get(key)
            if old is None:
                self._values[key] = value
                self._unsaved.append(key)
                return value
        if old != value:
            raise RuntimeError(f"conflicting values for {key}: {old} != {value}")
        return old

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self._unsaved.clear()
            self.hits = self.misses = 0

    def load(self, path: str | os.PathLike) -> int:
        """Read ``lambda|mu|value`` records; returns the number of corrupt lines skipped."""
        skipped = 0
        if not os.path.exists(path):
            return 0
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    lam_text, mu_text, value_text = line.split("|")
                    lam = parse_partition(lam_text)
                    mu = parse_partition(mu_text)
                    value = int(value_text)
                    if sum(lam) != sum(mu):
                        raise ValueError("size mismatch")
                except (ValueError, PartitionError):
                    skipped += 1
                    continue
                with self._lock:
                    self._values.setdefault((tuple(lam), tuple(mu)), value)
        if skipped:
            log.warning("skipped %d corrupt cache lines in %s", skipped, path)
        return skipped

    def save(self, path: str | os.PathLike) -> int:
        """Append values computed since the last load/save; returns the count written."""
        with self._lock:
            keys, self._unsaved = self._unsaved, []
        if not keys:
            return 0
        with open(path, "a", encoding="utf-8") as fh:
            for lam, mu in keys:
                fh.write(f"{format_partition(lam)}|{format_partition(mu)}|{self._values[lam, mu]}\n")
        return len(keys)


_default_store = MemoStore()


def default_store() -> MemoStore:
    return _default_store


def _mn(lam: tuple[int, ...], mu: tuple[int, ...], store: Optional[MemoStore]) -> int:
    if not mu:
        return 1
    if store is not None:
        cached = store.get((lam, mu))
        if cached is not None:
            return cached
    h, rest = mu[0], mu[1:]
    total = 0
    for beta, sign in hook_removals(beta_from_partition(lam), h):
        sub = _mn(tuple(partition_from_beta(beta)), rest, store)
        if sub:
            total += sign * sub
    if store is not None:
        store.put((lam, mu), total)
    return total


def mn_value(
    lam: Iterable[int],
    mu: Iterable[int],
    store: Optional[MemoStore] = None,
    memo: bool = True,
) -> int:
    """The exact value of the irreducible character ``chi^lam`` on the class ``mu``.

    Hooks are stripped for the largest remaining part of ``mu`` first. Values
    are memoized in ``store`` (the process-wide store by default) unless
    ``memo`` is false.
    """
    lam = tuple(Partition(lam))
    mu = tuple(Partition(mu))
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|lambda|={sum(lam)} but |mu|={sum(mu)}")
    if not memo:
        return _mn(lam, mu, None)
    return _mn(lam, mu, _default_store if store is None else store)


def hook_lengths(lam: Sequence[int]) -> list[int]:
    cols = conjugate(lam)
    return [lam[i] - j + cols[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def dimension_hlf(lam: Iterable[int]) -> int:
    """Degree of ``chi^lam`` by the hook length formula."""
    lam = Partition(lam)
    n = sum(lam)
    return factorial(n) // prod(hook_lengths(lam))


def class_size(mu: Iterable[int]) -> int:
    """Number of permutations of cycle type ``mu``."""
    mu = tuple(mu)
    z = prod(k**m * factorial(m) for k, m in multiplicities(mu).items())
    return factorial(sum(mu)) // z


@dataclass
class CharacterTable:
    """Rows are characters, columns classes; both in lexicographically decreasing order."""

    n: int
    partitions: list[Partition]
    values: list[list[int]] = field(repr=False)

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, mu = key
        return self.values[self.partitions.index(Partition(lam))][self.partitions.index(Partition(mu))]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "partitions": [format_partition(p) for p in self.partitions],
            "values": self.values,
        }


def character_table(
    n: int,
    bound: int = DEFAULT_TABLE_BOUND,
    store: Optional[MemoStore] = None,
    workers: Optional[int] = None,
) -> CharacterTable:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise TableBoundError(f"n={n} exceeds table bound {bound}")
    parts = list(partitions_of(n))

    def row(lam: Partition) -> list[int]:
        return [mn_value(lam, mu, store=store) for mu in parts]

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(row, parts))
    else:
        values = [row(lam) for lam in parts]
    return CharacterTable(n, parts, values)


def _check_size(n: int, mu: Iterable[int]) -> tuple[int, ...]:
    mu = tuple(Partition(mu))
    if sum(mu) != n:
        raise SizeMismatchError(f"class {format_partition(mu)!r} is not a partition of {n}")
    return mu


def psi2(n: int, mu: Iterable[int], store: Optional[MemoStore] = None) -> int:
    """Sum of ``chi^(n-j, j)(mu)**2`` over ``0 <= j <= n // 2``."""
    mu = _check_size(n, mu)
    return sum(mn_value(two_row_shape(n - j, j), mu, store=store) ** 2 for j in range(n // 2 + 1))


def phi2(n: int, mu: Iterable[int], store: Optional[MemoStore] = None) -> int:
    """Sum of ``chi^(j, 1^(n-j))(mu)**2`` over the hooks of ``n``."""
    if n < 1:
        raise ValueError(f"phi2 needs n >= 1, got {n}")
    mu = _check_size(n, mu)
    return sum(mn_value(hook_shape(j, n - j), mu, store=store) ** 2 for j in range(1, n + 1))
