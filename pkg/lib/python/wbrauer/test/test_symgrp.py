"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import pytest

from wbrauer.symgrp.groups import (ProductGroup, Subgroup, SymmetricGroup,
                                   YoungSubgroup, coset_table, cosets,
                                   double_cosets, enumerate_group,
                                   trivial_subgroup)
from wbrauer.symgrp.permutation import (Permutation, ProductPermutation,
                                        compose, parse_permutation)
from wbrauer.symgrp.stabilizer import (brute_force_stabilizer,
                                       matching_to_permutation,
                                       stabilizer_of_partial_diagram)
from wbrauer.utils.errors import (DegreeMismatch, DegreeTooLarge,
                                  MalformedPartialDiagram,
                                  NotASubgroupElement, ParseError)


def test_compose_applies_left_factor_first():
    a = Permutation([2, 1, 3])
    b = Permutation([1, 3, 2])
    # 1 -> 2 -> 3
    assert (a * b)(1) == 3
    assert compose(a, b) == Permutation([3, 1, 2])
    assert compose(b, a) == Permutation([2, 3, 1])


def test_inverse_and_identity():
    p = Permutation([3, 5, 4, 1, 2])
    assert (p * p.inverse()).is_identity()
    assert p.inverse() * p == Permutation.identity(5)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        Permutation([1, 2]) * Permutation([1, 2, 3])


def test_sign_order_cycles():
    p = Permutation.from_cycles([[1, 3, 4], [2, 5]], 5)
    assert p.order == 6
    assert p.sign == -1
    assert p.cycle_string() == "(1 3 4)(2 5)"
    assert Permutation.identity(3).cycle_string() == "()"


@pytest.mark.parametrize("text, degree, images", [
    ("[3,5,4,1,2]", None, (3, 5, 4, 1, 2)),
    ("(1 3 4)(2 5)", None, (3, 5, 4, 1, 2)),
    ("(1 2)", 4, (2, 1, 3, 4)),
    ("()", 2, (1, 2)),
    ("[]", None, ()),
])
def test_parse_permutation(text, degree, images):
    assert parse_permutation(text, degree).images == images


@pytest.mark.parametrize("text", ["[1,1]", "[1,2", "(1 2)x", "(1 2)(2 3)"])
def test_parse_permutation_errors(text):
    with pytest.raises(ParseError):
        parse_permutation(text)


def test_parse_permutation_degree():
    with pytest.raises(DegreeMismatch):
        parse_permutation("[2,1]", 3)
    with pytest.raises(DegreeMismatch):
        parse_permutation("(1 4)", 3)


def test_product_permutation():
    g = ProductPermutation([2, 1], [1, 3, 2])
    assert g.embed() == Permutation([2, 1, 3, 5, 4])
    assert (g * g).is_identity()
    assert g.sign == (-1, -1)


def test_symmetric_group():
    group = SymmetricGroup(3)
    elements = group.elements()
    assert len(elements) == group.order == 6
    assert elements == sorted(elements)
    assert sorted(group.generators()) == ["s1", "s2"]
    assert str(group) == "Sym(3)"


def test_product_group_generators():
    group = ProductGroup(2, 3)
    assert group.order == 12
    assert sorted(group.generators()) == ["s1", "s3", "s4"]
    assert len(enumerate_group(("Prod", 2, 3))) == 12
    assert str(group) == "Prod(2,3)"


def test_product_group_from_embedded():
    group = ProductGroup(2, 1)
    assert group.from_embedded(Permutation([2, 1, 3])) == \
        ProductPermutation([2, 1], [1])
    with pytest.raises(NotASubgroupElement):
        group.from_embedded(Permutation([3, 2, 1]))


def test_degree_guard():
    with pytest.raises(DegreeTooLarge):
        SymmetricGroup(9)


def test_subgroup_closure():
    group = SymmetricGroup(4)
    h = Subgroup(group, [Permutation.from_cycles([[1, 2, 3, 4]], 4)])
    assert h.order == 4
    assert h.contains(Permutation.from_cycles([[1, 3], [2, 4]], 4))
    assert not h.contains(Permutation.transposition(1, 2, 4))
    assert trivial_subgroup(group).order == 1
    with pytest.raises(NotASubgroupElement):
        Subgroup(group, [Permutation([2, 1])])


def test_young_subgroup():
    group = ProductGroup(3, 2)
    y = YoungSubgroup.from_shape(group, ((2, 1), (2,)))
    assert y.order == 4
    assert y.blocks() == [(1, 2), (3,), (4, 5)]
    assert len(y.elements()) == 4


@pytest.mark.parametrize("side", ["left", "right"])
def test_coset_table(side):
    group = SymmetricGroup(3)
    h = YoungSubgroup.from_shape(group, (2, 1))
    reps, index = coset_table(group, h, side=side)
    assert len(reps) == 3
    assert len(index) == 6
    assert sorted(set(index.values())) == [0, 1, 2]
    assert cosets(group, h, side=side) == reps


def test_double_cosets():
    group = SymmetricGroup(3)
    h = YoungSubgroup.from_shape(group, (2, 1))
    out = double_cosets(h, group, h)
    assert [d.size for d in out] == [2, 4]
    assert out[0].representative.is_identity()


def test_five_edge_stabilizer():
    law = stabilizer_of_partial_diagram(Permutation([2, 1, 5, 4, 3]))
    sigma = Permutation.from_cycles([[1, 3, 4]], 5)
    assert law.tau(sigma) == Permutation.from_cycles([[2, 5, 4]], 5)
    assert law(sigma).right == law.tau(sigma)


@pytest.mark.parametrize("images", [[1], [2, 1], [1, 2, 3], [3, 1, 2]])
def test_stabilizer_matches_brute_force(images):
    v = Permutation(images)
    law = stabilizer_of_partial_diagram(v)
    brute = brute_force_stabilizer(v)
    assert brute == law.elements()
    assert len(brute) == law.order
    assert law.subgroup().order == law.order


def test_stabilizer_from_edges():
    law = stabilizer_of_partial_diagram([(1, 2), (2, 1)])
    assert law.v == Permutation([2, 1])
    with pytest.raises(MalformedPartialDiagram):
        matching_to_permutation([(1, 1), (2, 1)], 2)
