"""Character coincidences between two-row shapes and hooks on 2-power extended classes.

For ``alpha`` with odd parts only and ``t >= 0`` put::

    mu       = (alpha, 2, 4, ..., 2**t)        n = |mu|
    mu_prime = (alpha, 2**(t+1))

Then ``chi^(n-j, j)(mu) == chi^(n+2-j, 1^j)(mu_prime)`` for ``0 <= j <= n - j``,
and summing squares gives ``2 * psi2(n, mu) == phi2(n + 2, mu_prime)``. This
module builds those families, expands the two-row side over subsets of
``{1..t}`` as length-2 ordered beta-sets, and checks every equality exactly.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from symchar.betaset import OrderedBetaSet, VirtualChar2Row, virtual_char
from symchar.evaluator import MemoStore, mn_value, phi2, psi2
from symchar.partitions import (
    Partition,
    format_partition,
    hook_shape,
    odd_parts,
    partitions_of,
    two_row_shape,
)

__all__ = [
    "FamilyInstance",
    "Eq3Term",
    "Eq3Expansion",
    "CheckRow",
    "Report",
    "SweepSummary",
    "CHECKS",
    "make_family",
    "iter_families",
    "eq3_expand",
    "eval_via_eq3",
    "verify_eq3",
    "verify_main_theorem",
    "verify_rz",
    "verify_sign_flip",
    "verify",
    "sweep",
    "REPORT_FIELDS",
]

CHECKS = ("eq3", "main", "rz", "sign")
REPORT_FIELDS = ("check", "alpha", "t", "n", "j", "lhs", "rhs", "equal")


@dataclass(frozen=True)
class FamilyInstance:
    alpha: Partition
    t: int
    mu: Partition
    mu_prime: Partition
    n: int

    @property
    def label(self) -> str:
        return f"alpha={self.alpha!r},t={self.t}"


def make_family(alpha: Iterable[int], t: int) -> FamilyInstance:
    alpha = Partition(alpha)
    if any(p % 2 == 0 for p in alpha):
        raise ValueError(f"alpha must have odd parts only, got {alpha!r}")
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    mu = Partition(tuple(alpha) + tuple(2**i for i in range(1, t + 1)))
    mu_prime = Partition(tuple(alpha) + (2 ** (t + 1),))
    return FamilyInstance(alpha, t, mu, mu_prime, sum(mu))


def iter_families(max_n: int, max_t: int) -> Iterator[FamilyInstance]:
    """All families with ``t <= max_t`` and ``n <= max_n``, ordered by t, then |alpha|."""
    for t in range(max_t + 1):
        extra = 2 ** (t + 1) - 2
        for size in range(max_n - extra + 1):
            for alpha in partitions_of(size, odd_parts, bound=max(size, max_n)):
                yield make_family(alpha, t)


@dataclass(frozen=True)
class Eq3Term:
    mask: int
    subset: tuple[int, ...]
    label: OrderedBetaSet
    virtual: VirtualChar2Row


@dataclass(frozen=True)
class Eq3Expansion:
    n: int
    j: int
    t: int
    terms: tuple[Eq3Term, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def nonzero(self) -> list[Eq3Term]:
        return [term for term in self.terms if not term.virtual.is_zero]


def _check_j(n: int, j: int) -> None:
    if not 0 <= j <= n - j:
        raise ValueError(f"j={j} out of range 0 <= j <= n - j for n={n}")


def eq3_expand(n: int, j: int, t: int) -> Eq3Expansion:
    """Expand ``chi^(n-j, j)`` on ``(alpha, 2, ..., 2**t)`` into ``2**t`` virtual characters of ``alpha``.

    Bit ``i - 1`` of the mask selects ``i`` into the subset ``I``: the part
    ``2**i`` is taken from the first beta-number if ``i`` is in ``I`` and from
    the second otherwise.
    """
    _check_j(n, j)
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    total = 2 ** (t + 1) - 2
    terms = []
    for mask in range(2**t):
        subset = tuple(i for i in range(1, t + 1) if mask >> (i - 1) & 1)
        taken = sum(2**i for i in subset)
        label = OrderedBetaSet((n + 1 - j - taken, j - (total - taken)))
        terms.append(Eq3Term(mask, subset, label, virtual_char(label)))
    return Eq3Expansion(n, j, t, tuple(terms))


def eval_via_eq3(fam: FamilyInstance, j: int, store: Optional[MemoStore] = None) -> int:
    expansion = eq3_expand(fam.n, j, fam.t)
    size = sum(fam.alpha)
    total = 0
    for term in expansion.nonzero():
        shape = term.virtual.shape
        if sum(shape) == size:
            total += term.virtual.sign * mn_value(shape, fam.alpha, store=store)
    return total


@dataclass(frozen=True)
class CheckRow:
    check: str
    alpha: Partition
    t: int
    n: int
    j: Optional[int]
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def as_record(self) -> dict:
        return {
            "check": self.check,
            "alpha": format_partition(self.alpha),
            "t": self.t,
            "n": self.n,
            "j": self.j,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
        }


@dataclass
class Report:
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.equal for row in self.rows)

    @property
    def failures(self) -> list[CheckRow]:
        return [row for row in self.rows if not row.equal]

    def extend(self, other: "Report") -> "Report":
        self.rows.extend(other.rows)
        return self

    def records(self) -> list[dict]:
        return [row.as_record() for row in self.rows]

    def to_json(self) -> str:
        return json.dumps({"passed": self.passed, "rows": self.records()}, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writeheader()
        for rec in self.records():
            rec = dict(rec, j="" if rec["j"] is None else rec["j"])
            writer.writerow(rec)
        return buf.getvalue()


def _row(check: str, fam: FamilyInstance, j: Optional[int], lhs: int, rhs: int) -> CheckRow:
    return CheckRow(check, fam.alpha, fam.t, fam.n, j, lhs, rhs)


def verify_eq3(fam: FamilyInstance, store: Optional[MemoStore] = None) -> Report:
    """Subset expansion on ``alpha`` against direct evaluation of ``chi^(n-j, j)(mu)``."""
    n = fam.n
    return Report([
        _row("eq3", fam, j, eval_via_eq3(fam, j, store), mn_value(two_row_shape(n - j, j), fam.mu, store=store))
        for j in range(n // 2 + 1)
    ])


def verify_main_theorem(fam: FamilyInstance, store: Optional[MemoStore] = None) -> Report:
    n = fam.n
    return Report([
        _row(
            "main",
            fam,
            j,
            mn_value(two_row_shape(n - j, j), fam.mu, store=store),
            mn_value(hook_shape(n + 2 - j, j), fam.mu_prime, store=store),
        )
        for j in range(n // 2 + 1)
    ])


def verify_rz(fam: FamilyInstance, store: Optional[MemoStore] = None) -> Report:
    n = fam.n
    return Report([_row("rz", fam, None, 2 * psi2(n, fam.mu, store), phi2(n + 2, fam.mu_prime, store))])


def verify_sign_flip(fam: FamilyInstance, store: Optional[MemoStore] = None) -> Report:
    """Hook values on the odd class ``mu_prime``: conjugate hooks differ by sign, and the middle hook vanishes for odd n."""
    n = fam.n
    rows = [
        _row(
            "sign",
            fam,
            j,
            mn_value(hook_shape(n + 2 - j, j), fam.mu_prime, store=store),
            -mn_value(hook_shape(j + 1, n + 1 - j), fam.mu_prime, store=store),
        )
        for j in range(n + 2)
    ]
    if n % 2:
        k = n // 2
        rows.append(_row("vanish", fam, k + 1, mn_value(hook_shape(k + 2, k + 1), fam.mu_prime, store=store), 0))
    return Report(rows)


_VERIFIERS = {
    "eq3": verify_eq3,
    "main": verify_main_theorem,
    "rz": verify_rz,
    "sign": verify_sign_flip,
}


def verify(fam: FamilyInstance, which: Iterable[str] = CHECKS, store: Optional[MemoStore] = None) -> Report:
    report = Report()
    for name in which:
        report.extend(_VERIFIERS[name](fam, store))
    return report


@dataclass
class SweepSummary:
    max_n: int
    max_t: int
    instances: int = 0
    checks: int = 0
    failures: list[CheckRow] = field(default_factory=list)
    rows: list[CheckRow] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "max_t": self.max_t,
            "instances": self.instances,
            "checks": self.checks,
            "failures": [row.as_record() for row in self.failures],
        }


def sweep(
    max_n: int,
    max_t: int,
    which: Iterable[str] = CHECKS,
    store: Optional[MemoStore] = None,
    workers: Optional[int] = None,
    keep_rows: bool = False,
) -> SweepSummary:
    """Run the chosen checks on every family with ``n <= max_n`` and ``t <= max_t``."""
    if max_n < 0 or max_t < 0:
        raise ValueError("sweep bounds must be nonnegative")
    which = tuple(which)
    families = list(iter_families(max_n, max_t))

    def run(fam: FamilyInstance) -> Report:
        return verify(fam, which, store)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, families))
    else:
        reports = [run(fam) for fam in families]

    summary = SweepSummary(max_n, max_t, instances=len(families))
    for report in reports:
        summary.checks += len(report.rows)
        summary.failures.extend(report.failures)
        if keep_rows:
            summary.rows.extend(report.rows)
    return summary
