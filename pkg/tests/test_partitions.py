import hypothesis.strategies as st
import pytest
from hypothesis import given

from src.exceptions import PolynomialParseError
from src.partitions import (Partition, enumerate_partitions, partition_count, partition_sum,
                            partitions_up_to, repeat, scale)

parts_lists = st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=6)


def test_parse_and_format():
    lam = Partition.parse("{1, 6,2}")
    assert lam.parts == (6, 2, 1)
    assert str(lam) == "{6,2,1}"
    assert Partition.parse("{}") == Partition(())


@pytest.mark.parametrize("text", ["6,2,1", "{6,,2}", "{a}", "{0}"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(ValueError):
        Partition.parse(text)


@pytest.mark.parametrize("text,token,position", [
    ("{x}", "x", 1),
    ("{6,,2}", "", 3),
    ("{6, 2, y}", "y", 7),
    ("  {1,0}", "0", 5),
    ("6,2,1", "6", 0),
    ("{6,2", "2", 3),
])
def test_parse_error_names_token(text, token, position):
    with pytest.raises(PolynomialParseError) as info:
        Partition.parse(text)
    assert info.value.token == token
    assert info.value.position == position


def test_conjugate():
    assert Partition.of(6, 2, 1).conjugate() == Partition.of(3, 2, 1, 1, 1, 1)
    assert Partition.of(9, 9, 9, 9).conjugate() == Partition((4,) * 9)
    assert Partition(()).conjugate() == Partition(())


@given(parts_lists)
def test_conjugate_is_an_involution(parts):
    lam = Partition(tuple(parts))
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().weight == lam.weight
    assert lam.conjugate().length == lam.max_part()


def test_scale_and_repeat():
    lam = Partition.of(2, 1)
    assert scale(3, lam) == Partition.of(6, 3)
    assert repeat(2, lam) == Partition.of(2, 2, 1, 1)
    assert Partition.of(6, 3).is_scaling_of(3) == lam
    assert Partition.of(2, 2, 1, 1).is_repetition_of(2) == lam
    assert Partition.of(2, 1, 1).is_repetition_of(2) is None
    with pytest.raises(ValueError):
        lam.scale(0)


def test_without_and_union():
    lam = Partition.of(3, 2, 2, 1)
    assert lam.without(Partition.of(2, 1)) == Partition.of(3, 2)
    assert Partition.of(3).union(Partition.of(1)) == Partition.of(3, 1)
    with pytest.raises(ValueError):
        lam.without(Partition.of(4))


@given(parts_lists, st.integers(min_value=1, max_value=4))
def test_scale_and_repeat_weights(parts, k):
    lam = Partition(tuple(parts))
    assert partition_sum(lam.scale(k)) == k * lam.weight
    assert lam.repeat(k).weight == k * lam.weight
    assert lam.repeat(k).length == k * lam.length
    assert lam.scale(k).is_scaling_of(k) == lam
    assert lam.repeat(k).is_repetition_of(k) == lam


def test_enumeration_order():
    assert [str(x) for x in enumerate_partitions(4)] == ["{4}", "{3,1}", "{2,2}", "{2,1,1}", "{1,1,1,1}"]


@pytest.mark.parametrize("w", range(0, 13))
def test_enumeration_matches_partition_count(w):
    listed = list(enumerate_partitions(w))
    assert len(listed) == partition_count(w)
    assert len(set(listed)) == len(listed)


def test_constraints():
    assert list(enumerate_partitions(6, max_part=2, num_parts=3)) == [Partition.of(2, 2, 2)]
    assert all(min(p.parts) >= 2 for p in enumerate_partitions(9, min_part=2))
    assert list(enumerate_partitions(3, num_parts=4)) == []
    assert list(enumerate_partitions(-1)) == []


def test_partitions_up_to():
    weights = [p.weight for p in partitions_up_to(4)]
    assert weights == sorted(weights)
    assert len(weights) == 1 + 2 + 3 + 5
