import pytest
from hypothesis import given, strategies as st

from sytcount.errors import HeightExceedsR, NotAPartition
from sytcount.partitions import Partition, StaircaseVector, mu, parse, partitions_of, validate


def test_validate_examples():
    assert validate((3, 1, 0)) == Partition((3, 1, 0))
    assert validate((3, 1, 0)).parts == (3, 1, 0)
    empty = validate((0, 0))
    assert empty.size() == 0 and empty.height() == 0
    with pytest.raises(NotAPartition):
        validate((1, 2))
    with pytest.raises(NotAPartition):
        validate((2, -1))


def test_trailing_zeros_are_equivalent():
    assert Partition((3, 1)) == Partition((3, 1, 0))
    assert hash(Partition((3, 1))) == hash(Partition((3, 1, 0, 0)))
    assert Partition((3, 1)) != Partition((3, 1, 1))


@given(st.lists(st.integers(-3, 6), max_size=6))
def test_validate_rejects_exactly_bad_vectors(xs):
    good = all(x >= 0 for x in xs) and all(xs[i] >= xs[i + 1] for i in range(len(xs) - 1))
    if good:
        assert validate(xs).parts == tuple(xs)
    else:
        with pytest.raises(NotAPartition):
            validate(xs)


def test_mu_examples():
    assert mu(Partition((5, 2)), 2).entries == (6, 2)
    assert mu(Partition((0, 0, 0)), 3).entries == StaircaseVector.rstar(3).entries == (2, 1, 0)
    assert mu(Partition((3, 1, 0)), 3).entries == (5, 2, 0)
    with pytest.raises(HeightExceedsR):
        mu(Partition((1, 1, 1)), 2)


@given(st.lists(st.integers(0, 8), max_size=5), st.integers(0, 3))
def test_mu_lands_in_shifted_lattice(xs, extra):
    lam = Partition(tuple(sorted(xs, reverse=True)))
    r = max(lam.height(), 1) + extra
    m = mu(lam, r)
    assert m.is_shifted_lattice_point()
    assert m.entries[-1] == lam.padded(r)[-1]


def test_partitions_of_examples():
    assert partitions_of(4, 2) == [Partition((4,)), Partition((3, 1)), Partition((2, 2))]
    assert partitions_of(0, 5) == [Partition(())]
    assert [p.parts for p in partitions_of(3, 3)] == [(3,), (2, 1), (1, 1, 1)]


def _oracle_partition_count(n):
    # count multisets of positive parts summing to n via coin-change table
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


@pytest.mark.parametrize("n", range(12))
def test_partition_counts(n):
    ps = partitions_of(n, n)
    assert len(ps) == _oracle_partition_count(n)
    assert len(set(ps)) == len(ps)
    assert all(p.size() == n for p in ps)
    assert [len(partitions_of(k, k)) for k in range(7)] == [1, 1, 2, 3, 5, 7, 11]


def test_partitions_of_respects_height_and_order():
    ps = partitions_of(8, 3)
    assert all(p.height() <= 3 for p in ps)
    assert [p.parts for p in ps] == sorted((p.parts for p in ps), reverse=True)


def test_parse():
    assert parse("5,2,1") == Partition((5, 2, 1))
    assert parse("0") == Partition(())
    assert str(Partition((5, 2, 1))) == "5,2,1"
    with pytest.raises(NotAPartition):
        parse("1,x")
    with pytest.raises(NotAPartition):
        parse("1,2")
