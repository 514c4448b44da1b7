"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import pytest

from wbrauer.algebra import (GroupAlgebra, PartialDiagram, act_on_partial,
                             enumerate_diagrams, flip, generator,
                             identity_diagram, idempotent_diagram,
                             layer_count, multiply_diagrams, parse_diagram,
                             partial_count, partial_diagrams)
from wbrauer.coeffs.field import FieldSpec
from wbrauer.symgrp.groups import ProductGroup
from wbrauer.symgrp.permutation import ProductPermutation
from wbrauer.utils.errors import (AlgebraMismatch, DimensionTooLarge,
                                  IndexAcrossWall, IndexOutOfRange,
                                  LayerOutOfRange, MalformedPartialDiagram,
                                  NotCellularlyStratified, ParseError,
                                  ShapeMismatch)

from .conftest import make_algebra


E12 = "wbd 1,1 : 1-2,1'-2'"


def test_diagram_text_form():
    assert str(identity_diagram(1, 1)) == "wbd 1,1 : 1-1',2-2'"
    assert str(generator("e", 1, 1, 1, 2)) == E12
    assert str(parse_diagram(E12)) == E12
    assert str(parse_diagram("wbd 1,1 : 2'-1',2-1")) == E12


@pytest.mark.parametrize("text", [
    "wbd 1,1 : 1-1'",
    "wbd 1,1 : 1-2',2-1'",
    "wbd 2,0 : 1-2,1'-2'",
    "wbd 1,1 : 1-1',1-2'",
    "wbd 1,1 : 1-3,1'-2'",
    "bd 1,1 : 1-1',2-2'",
    "wbd 1,1 : 1-1';2-2'",
])
def test_parse_diagram_errors(text):
    with pytest.raises(ParseError):
        parse_diagram(text)


def test_parse_error_reports_offset():
    with pytest.raises(ParseError) as info:
        parse_diagram("wbd 1,1 : 1-1',2-9'")
    assert info.value.token == "9'"


@pytest.mark.parametrize("r, t", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2),
                                  (3, 3)])
def test_diagram_count_is_factorial(r, t):
    diagrams = enumerate_diagrams(r, t)
    factorial = 1
    for k in range(2, r + t + 1):
        factorial *= k
    assert len(diagrams) == factorial
    assert len(set(diagrams)) == factorial
    assert sum(layer_count(r, t, l) for l in range(min(r, t) + 1)) == \
        factorial


def test_enumeration_is_in_basis_order():
    diagrams = enumerate_diagrams(2, 2)
    assert diagrams == sorted(diagrams, key=lambda d: d.key)
    counts = [d.horizontal_count for d in diagrams]
    assert counts == sorted(counts)
    assert len(enumerate_diagrams(2, 2, "exactly_l", 1)) == \
        layer_count(2, 2, 1) == 16
    assert len(enumerate_diagrams(2, 2, "at_least_l", 1)) == 16 + 4


def test_enumeration_guard():
    with pytest.raises(DimensionTooLarge):
        enumerate_diagrams(6, 5)


def test_partial_counts():
    assert partial_count(2, 2, 1) == 4
    assert partial_count(3, 2, 2) == 6
    assert len(partial_diagrams(3, 2, 2)) == 6
    with pytest.raises(LayerOutOfRange):
        partial_diagrams(3, 2, 3)


def test_generators_and_wall():
    assert str(generator("s", 2, 1, 1)) == "wbd 2,1 : 1-2',2-1',3-3'"
    with pytest.raises(IndexAcrossWall):
        generator("s", 2, 1, 2)
    with pytest.raises(IndexOutOfRange):
        generator("s", 2, 1, 3)
    with pytest.raises(IndexOutOfRange):
        generator("e", 2, 1, 1, 2)


def test_horizontal_count_counts_arcs():
    assert identity_diagram(2, 2).horizontal_count == 0
    assert generator("e", 1, 1, 1, 2).horizontal_count == 1
    for l in range(3):
        for d in enumerate_diagrams(2, 2, "exactly_l", l):
            assert d.horizontal_count == l == len(d.top_arcs())


def test_ideal_keys_of_every_layer(b11):
    assert b11.layer_start(1) == 1
    assert len(b11.ideal_keys(1)) == 1
    assert b11.check_ideal(1)


def test_loop_is_counted():
    d = generator("e", 1, 1, 1, 2)
    loops, z = multiply_diagrams(d, d)
    assert loops == 1
    assert z == d


def test_multiply_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        multiply_diagrams(identity_diagram(1, 1), identity_diagram(2, 1))


def test_flip_is_an_involution():
    for d in enumerate_diagrams(2, 1):
        assert flip(flip(d)) == d
        assert flip(d).horizontal_count == d.horizontal_count


def test_e12_squared_over_f5():
    algebra = make_algebra("F5;2", 1, 1)
    e = algebra.diagram(E12)
    assert str(e * e) == "2 * " + E12


def test_e12_squared_over_rationals():
    algebra = make_algebra("Q;1/3", 1, 1)
    e = algebra.diagram(E12)
    assert str(e * e) == "1/3 * " + E12


def test_symmetric_idempotent_with_nonzero_delta():
    algebra = make_algebra("F5;2", 1, 1)
    assert str(algebra.idempotent(1)) == "3 * " + E12
    assert str(algebra.idempotent(0)) == "wbd 1,1 : 1-1',2-2'"


def test_delta_zero_idempotent_golden():
    assert str(idempotent_diagram(2, 2, 1, "right")) == \
        "wbd 2,2 : 1-1',2-3,4-3',2'-4'"
    algebra = make_algebra("F5;0", 2, 2)
    assert str(algebra.idempotent(1)) == "wbd 2,2 : 1-1',2-3,4-3',2'-4'"


def test_delta_zero_left_version():
    algebra = make_algebra("Q;0", 2, 1)
    assert algebra.idempotent_version == "left"
    e = algebra.idempotent(1)
    assert e * e == e


def test_b11_at_zero_is_refused():
    with pytest.raises(NotCellularlyStratified):
        make_algebra("Q;0", 1, 1)


def test_top_layer_at_zero_has_no_idempotent():
    algebra = make_algebra("Q;0", 2, 2)
    assert algebra.valid_layers() == [0, 1]
    with pytest.raises(NotCellularlyStratified):
        algebra.idempotent(2)


@pytest.mark.parametrize("text, r, t", [
    ("F5;2", 1, 1), ("F5;1", 2, 2), ("Q;5", 3, 2), ("Q;0", 2, 2),
    ("F7;0", 2, 3), ("F5;0", 3, 2),
])
def test_idempotent_relations(text, r, t):
    assert make_algebra(text, r, t).check_idempotents() == []


@pytest.mark.parametrize("text, r, t", [("F5;2", 2, 1), ("Q;0", 2, 2)])
def test_ideals_and_edge_monotonicity(text, r, t):
    algebra = make_algebra(text, r, t)
    assert all(algebra.check_ideal(l) for l in range(algebra.s + 1))
    assert algebra.check_edge_monotonicity()


def test_layer_start(b22):
    assert b22.dim == 24
    assert b22.layer_start(0) == 0
    assert b22.layer_start(1) == 4
    assert b22.layer_start(2) == 20
    assert b22.layer_start(3) == 24
    assert len(b22.ideal_keys(2)) == 4


def test_layer_out_of_range(b21):
    with pytest.raises(LayerOutOfRange):
        b21.idempotent(2)
    with pytest.raises(LayerOutOfRange):
        b21.layer_group(2)


@pytest.mark.parametrize("text, r, t", [("F5;2", 2, 1), ("Q;0", 1, 2)])
def test_algebra_axioms(text, r, t):
    algebra = make_algebra(text, r, t)
    assert algebra.check_associativity()
    assert algebra.check_unit()
    assert algebra.check_involution()


def test_generators_reach_the_basis(b21):
    assert b21.generator_names == ["s1", "e2,3"]
    for key in b21.basis:
        assert b21.word_product(b21.word(key)) == b21.basis_element(key)


def test_w_top_is_a_homomorphism():
    algebra = make_algebra("Q;5", 3, 2)
    group = algebra.layer_group(1)
    for g in group.elements():
        for h in group.elements():
            assert algebra.w_top(1, g) * algebra.w_top(1, h) == \
                algebra.w_top(1, g * h)
            assert algebra.w_bot(1, g) * algebra.w_bot(1, h) == \
                algebra.w_bot(1, g * h)


def test_iota_commutes_with_the_idempotent():
    algebra = make_algebra("Q;5", 3, 2)
    e = algebra.idempotent(1)
    g = ProductPermutation([2, 1], [1])
    assert algebra.iota(1, g) == algebra.w_top(1, g) * e
    assert algebra.layer_group(1) == ProductGroup(2, 1)


def test_mixed_algebras_do_not_multiply(b11, b11_rational):
    with pytest.raises(AlgebraMismatch):
        b11.one() * b11_rational.one()


def test_regular_representation(b11):
    module = b11.regular_representation()
    assert module.dim == 2


def test_group_algebra():
    algebra = GroupAlgebra.product(2, 1, FieldSpec(5))
    assert algebra.dim == 2
    s1 = algebra.generators()["s1"]
    assert s1 * s1 == algebra.one()
    assert str(algebra) == "F5Prod(2,1)"


def test_act_on_partial():
    v = PartialDiagram(1, 1, [(1, 2)])
    loops, w = act_on_partial(v, generator("e", 1, 1, 1, 2))
    assert loops == 1
    assert w == v
    loops, w = act_on_partial(PartialDiagram(1, 1, []),
                              generator("e", 1, 1, 1, 2))
    assert w is None


def test_malformed_partial_diagram():
    with pytest.raises(MalformedPartialDiagram):
        PartialDiagram(2, 2, [(1, 2)])
    with pytest.raises(MalformedPartialDiagram):
        PartialDiagram(2, 2, [(1, 3), (1, 4)])
