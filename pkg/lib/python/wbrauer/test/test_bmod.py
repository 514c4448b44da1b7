"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import pytest

from wbrauer.bmod import (CORNER, IDEAL, LAYER, ROW, CheckReport,
                          LambdaLabel, LayerCatalog, cell_module,
                          corner_dimension, ideal_image, labels_of,
                          lambda_leq, layer_dimension, layer_space,
                          parse_label, perm_module_B, res_l, restriction)
from wbrauer.modules import is_isomorphic
from wbrauer.utils.errors import (LayerOutOfRange, NotCellularlyStratified,
                                  ParseError, ShapeMismatch)

from .conftest import make_algebra


def test_parse_label():
    label = parse_label("1:(1|1)")
    assert label.l == 1
    assert str(label) == "1:(1|1)"
    assert label.sizes == (1, 1)
    assert str(parse_label(" 0:(2,1|1)")) == "0:(2,1|1)"
    assert label.to_dict() == {"l": 1, "lambda": [1], "mu": [1]}


def test_parse_label_errors():
    with pytest.raises(ParseError) as info:
        parse_label("x:(1|1)")
    assert info.value.offset == 0
    with pytest.raises(ParseError):
        parse_label("1:(1,1")


def test_label_equality():
    assert parse_label("1:(|)") == LambdaLabel(1, ((), ()))
    assert parse_label("1:(|)") != LambdaLabel(0, ((), ()))
    assert len({parse_label("0:(1|1)"), LambdaLabel(0, ((1,), (1,)))}) == 1


def test_label_check(b11):
    assert LambdaLabel(1, ((), ())).check(b11).l == 1
    with pytest.raises(LayerOutOfRange):
        LambdaLabel(2, ((), ())).check(b11)
    with pytest.raises(ShapeMismatch):
        LambdaLabel(0, ((1,), ())).check(b11)


def test_lambda_order_prefers_higher_layers():
    top = parse_label("1:(|)")
    bottom = parse_label("0:(1|1)")
    assert lambda_leq(top, bottom)
    assert not lambda_leq(bottom, top)


def test_lambda_order_within_a_layer_is_dominance():
    x = parse_label("0:(2|1)")
    y = parse_label("0:(1,1|1)")
    assert lambda_leq(x, y)
    assert not lambda_leq(y, x)
    assert lambda_leq(x, x)


def test_lambda_order_refuses_foreign_labels():
    with pytest.raises(ShapeMismatch):
        lambda_leq(parse_label("1:(|)"), parse_label("0:(2|1)"))


def test_labels_in_processing_order(b11, b21):
    assert [str(x) for x in labels_of(b11)] == ["1:(|)", "0:(1|1)"]
    assert [str(x) for x in labels_of(b21)] == \
        ["1:(1|)", "0:(2|1)", "0:(1,1|1)"]


def test_labels_skip_layers_without_idempotent():
    algebra = make_algebra("Q;0", 2, 2)
    assert {x.l for x in labels_of(algebra)} == {0, 1}


def test_row_and_ideal_spaces(b22):
    assert layer_space(b22, 0, ROW).dim == b22.dim
    assert layer_space(b22, 0, IDEAL, 1).dim == 20
    assert layer_space(b22, 0, IDEAL, 2).dim == 4
    assert layer_space(b22, 0, LAYER, 1).dim == 16
    assert layer_space(b22, 1, LAYER, 1).dim == 4


def test_layer_space_rejects_bad_layers(b22):
    with pytest.raises(LayerOutOfRange):
        layer_space(b22, 0, IDEAL, 3)
    with pytest.raises(ValueError):
        layer_space(b22, 0, "e_lBe_l", 1)


@pytest.mark.parametrize("text,r,t,l,m,dim", [
    ("F5;2", 2, 2, 0, 1, 4),
    ("F5;2", 3, 2, 1, 2, 2),
    ("F5;2", 2, 2, 0, 2, 2),
    ("Q;5", 1, 1, 0, 1, 1),
])
def test_corner_dimension(text, r, t, l, m, dim):
    algebra = make_algebra(text, r, t)
    assert corner_dimension(algebra, l, m) == dim
    assert layer_space(algebra, l, CORNER, m).dim == dim


@pytest.mark.parametrize("r,t,l,m", [(1, 1, 0, 1), (2, 1, 0, 1),
                                     (2, 2, 0, 1), (2, 2, 1, 2)])
def test_layer_dimension(r, t, l, m):
    algebra = make_algebra("F5;2", r, t)
    assert layer_space(algebra, l, LAYER, m).dim == \
        layer_dimension(algebra, l, m)


def test_cell_module_dims(b11, b22):
    assert cell_module(parse_label("1:(|)"), b11).dim == 1
    assert cell_module(parse_label("0:(1|1)"), b11).dim == 1
    assert cell_module(parse_label("1:(1|1)"), b22).dim == 4
    assert cell_module(parse_label("2:(|)"), b22).dim == 2


def test_cell_module_checks_its_label(b11):
    with pytest.raises(ShapeMismatch):
        cell_module(LambdaLabel(1, ((1,), ())), b11)


def test_permutation_module_of_the_bottom_layer_is_regular(b11):
    module = perm_module_B(parse_label("0:(1|1)"), b11)
    assert module.dim == 2
    assert perm_module_B(parse_label("1:(|)"), b11).dim == 1


def test_restriction_of_the_regular_module(b11):
    regular = perm_module_B(parse_label("0:(1|1)"), b11)
    res, basis = restriction(regular, 1)
    assert res.dim == 1
    assert len(basis) == 1
    assert res_l(regular, 0).dim == 2


def test_restriction_needs_an_idempotent():
    algebra = make_algebra("Q;0", 2, 2)
    regular = perm_module_B(parse_label("0:(2|2)"), algebra)
    with pytest.raises(NotCellularlyStratified):
        restriction(regular, 2)


def test_ideal_images_of_the_regular_module(b11):
    regular = perm_module_B(parse_label("0:(1|1)"), b11)
    assert [ideal_image(regular, m).dim for m in range(3)] == [2, 1, 0]


def test_catalog_identifies_cell_modules(b11):
    catalog = LayerCatalog(b11)
    for label in catalog.labels():
        found, witness = catalog.identify(cell_module(label, b11))
        assert found == label
        assert witness.shape == (1, 1)


def test_catalog_memoizes(b11):
    catalog = LayerCatalog(b11)
    label = parse_label("1:(|)")
    assert catalog.cell(label) is catalog.cell(label)
    assert catalog.perm(label) is catalog.perm(label)
    assert catalog.group_catalog(0) is catalog.group_catalog(0)


def test_catalog_young_modules(b11):
    catalog = LayerCatalog(b11)
    bottom = parse_label("0:(1|1)")
    young = catalog.young_module(bottom)
    assert young.dim == 1
    assert is_isomorphic(young, catalog.cell(bottom))[0]
    assert catalog.surjection(young, bottom) is not None


def test_check_report():
    algebra = make_algebra("Q;2", 1, 1)
    report = CheckReport("sample", algebra)
    assert report.record("first", True)
    assert not report.record("second", False, "1 vs 2")
    assert not report.passed
    assert report.failures() == ["second: 1 vs 2"]
    assert str(report) == "sample: 1/2 passed"
    data = report.to_dict()
    assert data["algebra"] == {"r": 1, "t": 1, "delta": "2", "field": "Q"}
    assert [c["name"] for c in data["checks"]] == ["first", "second"]
