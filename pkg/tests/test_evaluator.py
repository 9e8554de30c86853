import random
from math import factorial

import pytest

from oracles import count_standard_tableaux, frobenius_character
from symchar.betaset import hook_combination, virtual_char
from symchar.evaluator import (
    MemoStore,
    SizeMismatchError,
    TableBoundError,
    character_table,
    class_size,
    dimension_hlf,
    mn_value,
    phi2,
    psi2,
)
from symchar.partitions import (
    class_sign,
    conjugate,
    hook_shape,
    is_two_regular,
    odd_parts,
    partitions_of,
    two_row_shape,
)


def chi(shape, mu):
    """Character value with the convention that non-partitions give 0."""
    if shape is None:
        return 0
    return mn_value(shape, mu)


@pytest.mark.parametrize(
    "lam, mu, expected",
    [
        ((6,), (3, 2, 1), 1),
        ((1, 1, 1, 1, 1), (2, 1, 1, 1), -1),
        ((3, 2), (3, 2), 1),
        ((5, 1, 1), (4, 3), 1),
        ((), (), 1),
        ((3, 1), (4,), -1),
        ((2, 2), (3, 1), -1),
    ],
)
def test_mn_value_examples(lam, mu, expected):
    assert frobenius_character(lam, mu) == expected
    assert mn_value(lam, mu) == expected
    assert mn_value(lam, mu, memo=False) == expected


def test_mn_value_size_mismatch():
    with pytest.raises(SizeMismatchError):
        mn_value((3, 2), (3, 1))


def test_mn_value_against_frobenius_oracle():
    for n in range(8):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert mn_value(lam, mu) == frobenius_character(lam, mu), (lam, mu)


def test_mn_value_accepts_unsorted_class():
    assert mn_value((3, 2), (2, 3)) == mn_value((3, 2), (3, 2))


@pytest.mark.parametrize("lam, dim", [((), 1), ((2, 1), 2), ((3, 2), 5), ((4, 2, 1), 35)])
def test_dimension_hlf(lam, dim):
    assert dimension_hlf(lam) == dim == count_standard_tableaux(lam)


def test_dimension_matches_identity_class():
    for n in range(13):
        for lam in partitions_of(n):
            assert mn_value(lam, (1,) * n) == dimension_hlf(lam)
    for n in range(9):
        for lam in partitions_of(n):
            assert dimension_hlf(lam) == count_standard_tableaux(lam)


def test_class_size_sums_to_factorial():
    for n in range(10):
        assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)


def test_character_table_small():
    t0 = character_table(0)
    assert t0.values == [[1]]
    t2 = character_table(2)
    assert t2.partitions == [(2,), (1, 1)]
    assert t2.values == [[1, 1], [-1, 1]]
    assert t2[(1, 1), (2,)] == -1
    with pytest.raises(TableBoundError):
        character_table(15)


@pytest.mark.parametrize("n", range(9))
def test_character_table_orthogonality(n):
    table = character_table(n)
    parts = table.partitions
    sizes = [class_size(mu) for mu in parts]
    k = len(parts)
    # rows: sum over classes weighted by class size
    for a in range(k):
        for b in range(k):
            s = sum(sizes[c] * table.values[a][c] * table.values[b][c] for c in range(k))
            assert s == (factorial(n) if a == b else 0)
    # columns: sum over characters gives the centralizer order
    for c in range(k):
        for d in range(k):
            s = sum(table.values[a][c] * table.values[a][d] for a in range(k))
            assert s == (factorial(n) // sizes[c] if c == d else 0)


def test_character_table_parallel_matches_serial():
    serial = character_table(9, store=MemoStore())
    parallel = character_table(9, store=MemoStore(), workers=4)
    assert serial == parallel


def test_conjugation_sign():
    for n in range(11):
        for lam in partitions_of(n):
            lam_c = conjugate(lam)
            for mu in partitions_of(n):
                v = mn_value(lam, mu)
                assert mn_value(lam_c, mu) == class_sign(mu) * v
                if is_two_regular(mu):
                    assert mn_value(lam_c, mu) == v


def test_relation_two_row_equals_hook_difference():
    # chi^(x,y) = chi^(x,1^y) - chi^(x+2,1^(y-2)) on 2-regular classes
    for size in range(17):
        classes = list(partitions_of(size, odd_parts))
        for y in range(size // 2 + 1):
            x = size - y
            for mu in classes:
                lhs = chi(two_row_shape(x, y), mu)
                rhs = chi(hook_shape(x, y), mu) - chi(hook_shape(x + 2, y - 2), mu)
                assert lhs == rhs, (x, y, mu)


def test_relation_virtual_char_equals_hook_difference():
    for x in range(-2, 13):
        for y in range(-2, 13):
            size = x + y - 1
            v = virtual_char((x, y))
            classes = list(partitions_of(size, odd_parts)) if size >= 0 else []
            for mu in classes:
                lhs = 0 if v.is_zero else v.sign * mn_value(v.shape, mu)
                rhs = sum(sign * mn_value(shape, mu) for sign, shape in hook_combination(x, y))
                assert lhs == rhs, (x, y, mu)
            if size < 0:
                assert v.is_zero


def test_hook_combination_degenerate_labels():
    assert hook_combination(1, 0) == [(1, ())]
    assert hook_combination(0, 1) == [(-1, ())]
    assert hook_combination(-1, 2) == []
    assert hook_combination(2, -1) == []
    assert hook_combination(4, 3) == [(1, (3, 1, 1, 1)), (-1, (5, 1))]
    assert hook_combination(4, 1) == [(1, (3, 1))]
    # read literally, (0, 1^0) would be the empty partition and give -1 here
    assert hook_shape(-1 + 1, 2 - 2) == ()


@pytest.mark.parametrize(
    "n, mu, expected",
    [(3, (3,), 2), (2, (2,), 2), (0, (), 1), (3, (1, 1, 1), 1 + 4)],
)
def test_psi2(n, mu, expected):
    oracle = sum(frobenius_character(s, mu) ** 2 for j in range(n // 2 + 1) if (s := two_row_shape(n - j, j)) is not None)
    assert psi2(n, mu) == expected == oracle


@pytest.mark.parametrize("n, mu, expected", [(5, (3, 2), 4), (1, (1,), 1), (3, (1, 1, 1), 6)])
def test_phi2(n, mu, expected):
    oracle = sum(frobenius_character(hook_shape(j, n - j), mu) ** 2 for j in range(1, n + 1))
    assert phi2(n, mu) == expected == oracle


def test_psi2_phi2_errors():
    with pytest.raises(SizeMismatchError):
        psi2(4, (3,))
    with pytest.raises(SizeMismatchError):
        phi2(4, (3,))
    with pytest.raises(ValueError):
        phi2(0, ())


def test_memo_matches_uncached():
    rng = random.Random(20161023)
    store = MemoStore()
    for _ in range(200):
        n = rng.randint(0, 11)
        parts = list(partitions_of(n))
        lam, mu = rng.choice(parts), rng.choice(parts)
        assert mn_value(lam, mu, store=store) == mn_value(lam, mu, memo=False)
    assert len(store) > 0
    assert store.hits > 0


def test_memo_store_idempotent_writes():
    store = MemoStore()
    key = ((2,), (2,))
    assert store.put(key, 1) == 1
    assert store.put(key, 1) == 1
    with pytest.raises(RuntimeError):
        store.put(key, -1)
    assert len(store) == 1


def test_cache_file_round_trip(tmp_path):
    path = tmp_path / "values.txt"
    store = MemoStore()
    v = mn_value((4, 3, 1), (3, 3, 2), store=store)
    written = store.save(path)
    assert written == len(store)
    assert store.save(path) == 0

    with open(path, "a") as fh:
        fh.write("garbage\n3,2|3,1|5\n3,x|3,2|1\n\n")
    fresh = MemoStore()
    assert fresh.load(path) == 3
    assert len(fresh) == written
    assert ((4, 3, 1), (3, 3, 2)) in fresh
    assert mn_value((4, 3, 1), (3, 3, 2), store=fresh) == v
    assert fresh.misses == 0


def test_cache_file_record_format(tmp_path):
    path = tmp_path / "values.txt"
    store = MemoStore()
    mn_value((1, 1), (2,), store=store)
    store.save(path)
    assert path.read_text().splitlines() == ["1,1|2|-1"]


def test_large_values_are_exact():
    # dimension of the staircase (6,5,4,3,2,1) exceeds 2**32
    lam = (6, 5, 4, 3, 2, 1)
    assert mn_value(lam, (1,) * 21) == dimension_hlf(lam) == 1100742656
    big = (8, 7, 6, 5, 4, 3, 2, 1)
    assert mn_value(big, (1,) * 36) == dimension_hlf(big) == count_standard_tableaux(big)
    assert dimension_hlf(big) > 2**64
