"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import pytest

from wbrauer.combinat import (Bipartition, Composition, Partition, Tabloid,
                              bipartitions_of, dominance_leq,
                              hook_composition, initial_tableau, is_p_regular,
                              parse_bipartition, parse_composition,
                              parse_partition, partitions_of,
                              standard_tableaux, standard_tableaux_count,
                              tabloids)
from wbrauer.utils.errors import ParseError, SizeMismatch


def test_partitions_of_three():
    assert [p.parts for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of(0) == [Partition()]


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (4, 5), (6, 11), (7, 15),
                                      (8, 22)])
def test_partition_counts(n, count):
    assert len(partitions_of(n)) == count


def test_bipartitions_of():
    shapes = bipartitions_of(2, 1)
    assert [str(x) for x in shapes] == ["(2|1)", "(1,1|1)"]
    assert len(bipartitions_of(2, 2)) == 4
    assert bipartitions_of(0, 0) == [Bipartition((), ())]


@pytest.mark.parametrize("lam, mu, expected", [
    ((3,), (2, 1), True),
    ((2, 1), (3,), False),
    ((2, 2), (3, 1), False),
    ((3, 1), (2, 2), True),
    ((3, 3), (4, 1, 1), False),
    ((4, 1, 1), (3, 3), False),
])
def test_dominance(lam, mu, expected):
    assert dominance_leq(lam, mu) == expected
    assert Partition(lam).dominates(Partition(mu)) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_is_a_partial_order(n):
    shapes = partitions_of(n)
    for lam in shapes:
        assert dominance_leq(lam, lam)
        for mu in shapes:
            if lam != mu and dominance_leq(lam, mu):
                assert not dominance_leq(mu, lam)
            for nu in shapes:
                if dominance_leq(lam, mu) and dominance_leq(mu, nu):
                    assert dominance_leq(lam, nu)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation_reverses_dominance(n):
    shapes = partitions_of(n)
    for lam in shapes:
        for mu in shapes:
            assert lam.dominates(mu) == mu.conjugate().dominates(
                lam.conjugate())


@pytest.mark.parametrize("n", range(1, 8))
def test_standard_tableaux_squares_sum_to_factorial(n):
    factorial = 1
    for k in range(2, n + 1):
        factorial *= k
    assert sum(standard_tableaux_count(lam) ** 2
               for lam in partitions_of(n)) == factorial


def test_dominance_size_mismatch():
    with pytest.raises(SizeMismatch):
        dominance_leq((2,), (1,))


def test_bipartition_dominance_is_componentwise():
    top = Bipartition((2,), (2,))
    assert top.dominates(Bipartition((1, 1), (2,)))
    assert not Bipartition((1, 1), (2,)).dominates(top)
    assert not Bipartition((2,), (1, 1)).dominates(Bipartition((1, 1), (2,)))


def test_conjugate():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Bipartition((2,), (1, 1)).conjugate() == \
        Bipartition((1, 1), (2,))


@pytest.mark.parametrize("lam, p, expected", [
    ((1, 1), 2, False),
    ((2, 1), 2, True),
    ((1, 1, 1), 3, False),
    ((1, 1), 3, True),
])
def test_p_regular(lam, p, expected):
    assert is_p_regular(lam, p) == expected


def test_composition_blocks_and_multinomial():
    comp = Composition((2, 0, 1))
    assert comp.size == 3
    assert comp.blocks() == [(1, 2), (), (3,)]
    assert comp.multinomial() == 3


def test_hook_composition():
    assert hook_composition(2, 3) == Composition((2, 1, 1, 1))
    assert hook_composition(0, 2).parts == (0, 1, 1)
    with pytest.raises(ValueError):
        hook_composition(1, 1, size=3)


def test_partition_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition((2, 1, 0)).parts == (2, 1)


@pytest.mark.parametrize("shape", [(3,), (2, 1), (3, 2), (2, 2, 1)])
def test_hook_length_formula(shape):
    assert Partition(shape).hook_length_count() == \
        standard_tableaux_count(shape)


def test_standard_tableaux():
    tableaux = standard_tableaux((2, 1))
    assert len(tableaux) == 2
    assert tableaux[0] == initial_tableau((2, 1))
    assert all(t.is_standard() for t in tableaux)


def test_tabloids():
    assert len(tabloids(Composition((2, 1)))) == 3
    t = Tabloid((2, 1), [[1, 2], [3]])
    assert t.act([3, 2, 1]) == Tabloid((2, 1), [[2, 3], [1]])


def test_parsers():
    assert parse_partition("(2,1)") == Partition((2, 1))
    assert parse_partition("()") == Partition()
    assert parse_composition("(0,2)").parts == (0, 2)
    assert parse_bipartition("(2|1,1)") == Bipartition((2,), (1, 1))
    assert parse_bipartition("(|)") == Bipartition((), ())


@pytest.mark.parametrize("text", ["2,1", "(1,2)", "(2;1)", "(2|1|1)",
                                  "(2,,1|1)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        if "|" in text:
            parse_bipartition(text)
        else:
            parse_partition(text)
