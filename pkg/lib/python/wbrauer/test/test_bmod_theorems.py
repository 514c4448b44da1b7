"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import pytest

from wbrauer.bmod import (LayerCatalog, cell_filtration,
                          coset_bimodule_witness, corner_stabilizer,
                          filtration_matches, hook_corner_witness,
                          layer_subquotient_dims, multiplication_witness,
                          orbit_decomposition, parse_label, perm_module_B,
                          restricted_cell_identity, semisimple_check,
                          split_witness, summand_classes_distinct,
                          verify_layer_lemmas, young_decomposition)
from wbrauer.bmod.lemmas import intertwines
from wbrauer.bmod.young import character_failures
from wbrauer.modules import perm_module_sym
from wbrauer.utils.errors import BadCharacteristic, LayerOutOfRange

from .conftest import make_algebra


def test_young_decomposition_of_the_regular_module(b11):
    label = parse_label("0:(1|1)")
    report = young_decomposition(label, b11)
    assert report.failures == []
    assert {str(x): n for x, n in report.multiplicities().items()} == \
        {"1:(|)": 1, "0:(1|1)": 1}
    assert report.defining().dim == 1
    assert summand_classes_distinct(report)


def test_young_decomposition_to_dict(b11):
    data = young_decomposition(parse_label("1:(|)"), b11).to_dict()
    assert data["algebra"] == {"r": 1, "t": 1, "delta": "2", "field": "F5"}
    assert data["label"] == {"l": 1, "lambda": [], "mu": []}
    assert data["summands"] == [{"label": "1:(|)", "multiplicity": 1,
                                 "dim": 1}]
    assert data["failures"] == []


def test_young_decomposition_refuses_small_characteristic():
    algebra = make_algebra("F3;1", 1, 1)
    with pytest.raises(BadCharacteristic):
        young_decomposition(parse_label("0:(1|1)"), algebra)


@pytest.mark.slow
@pytest.mark.parametrize("text", ["Q;5", "F5;2"])
def test_young_decomposition_of_b21(text):
    algebra = make_algebra(text, 2, 1)
    catalog = LayerCatalog(algebra)
    for label in catalog.labels():
        report = young_decomposition(label, algebra, catalog=catalog)
        assert report.failures == []
        assert str(report.defining().label) == str(label)


def test_cell_filtration_of_the_regular_module(b11):
    module = perm_module_B(parse_label("0:(1|1)"), b11)
    catalog = LayerCatalog(b11)
    report = cell_filtration(module, catalog=catalog)
    assert report.is_descending()
    assert report.dims() == [1, 1]
    assert [str(x) for x in report.subquotient_labels] == \
        ["0:(1|1)", "1:(|)"]
    assert len(report.isomorphisms) == 2
    assert filtration_matches(report, catalog)
    assert str(report) == "cell0:(1|1) > cell1:(|)"


def test_cell_filtration_to_dict(b11):
    module = perm_module_B(parse_label("0:(1|1)"), b11)
    data = cell_filtration(module, check=False).to_dict()
    assert data["dim"] == 2
    assert data["filtration"] == [{"label": "0:(1|1)", "dim": 1},
                                  {"label": "1:(|)", "dim": 1}]
    assert data["seed"] == 0


def test_cell_filtration_refuses_small_characteristic():
    algebra = make_algebra("F3;1", 1, 1)
    module = perm_module_B(parse_label("1:(|)"), algebra)
    with pytest.raises(BadCharacteristic):
        cell_filtration(module)


@pytest.mark.parametrize("text,r,t,l,m", [
    ("F5;2", 1, 1, 0, 1),
    ("Q;5", 2, 1, 0, 1),
    ("F5;2", 2, 2, 1, 2),
])
def test_layer_lemmas(text, r, t, l, m):
    report = verify_layer_lemmas(make_algebra(text, r, t), l, m)
    assert report.passed, report.failures()


@pytest.mark.slow
def test_layer_lemmas_b22_bottom():
    report = verify_layer_lemmas(make_algebra("F5;2", 2, 2), 0, 1)
    assert report.passed, report.failures()


def test_layer_lemmas_need_increasing_layers(b22):
    with pytest.raises(LayerOutOfRange):
        verify_layer_lemmas(b22, 1, 1)
    with pytest.raises(LayerOutOfRange):
        verify_layer_lemmas(b22, 0, 3)


def test_split_witness(b22):
    report = split_witness(b22, 0, 1)
    assert report.passed, report.failures()
    assert report.checks["e_lJ_m split dims"] == (True, "20 vs 4 + 16")
    assert list(report.checks) == ["e_lJ_m split dims", "section in e_lJ_m",
                                   "section intertwines",
                                   "inclusion intertwines"]


def test_split_witness_of_the_top_layer(b22):
    report = split_witness(b22, 1, 2)
    assert report.passed, report.failures()


def test_multiplication_witness(b21):
    report = multiplication_witness(b21, 0, 1)
    assert report.passed, report.failures()
    assert report.checks["tensor bijective"][0]
    assert report.checks["tensor intertwines"][0]


def test_layer_lemmas_are_witnessed_directly():
    report = verify_layer_lemmas(make_algebra("Q;5", 2, 2), 0, 1)
    assert report.passed, report.failures()
    assert "tensor intertwines" in report.checks
    assert "section intertwines" in report.checks


@pytest.mark.slow
@pytest.mark.parametrize("l,m", [(0, 1), (0, 2), (1, 3)])
def test_layer_lemmas_b33(l, m):
    report = verify_layer_lemmas(make_algebra("Q;5", 3, 3), l, m)
    assert report.passed, report.failures()


def test_intertwines(F5):
    module = perm_module_sym((2, 1), F5)
    one = F5.one
    identity = [{0: one}, {1: one}, {2: one}]
    swap = [{0: one}, {2: one}, {1: one}]
    assert intertwines(F5, module.actions, identity, module.actions)
    assert not intertwines(F5, module.actions, swap, module.actions)


def test_corner_stabilizer_order(b22):
    assert corner_stabilizer(b22, 0, 1).order == 1
    assert corner_stabilizer(b22, 0, 2).order == 2


def test_coset_witness(b22):
    witness, report = coset_bimodule_witness(b22, 0, 2)
    assert witness.index == 2
    assert witness.matrix.shape == (2, 2)
    assert report.passed, report.failures()


def test_orbits_of_the_regular_shape(b22):
    shape = parse_label("0:(1,1|1,1)").shape
    orbits = orbit_decomposition(b22, 0, 1, shape)
    assert orbits.points == 4
    assert orbits.double_coset_count == 4
    assert [c.size for c in orbits.classes] == [1, 1, 1, 1]
    assert orbits.check().passed


def test_orbits_of_the_trivial_shape(b22):
    orbits = orbit_decomposition(b22, 0, 1, parse_label("0:(2|2)").shape)
    assert orbits.points == 1
    (orbit,) = orbits.classes
    assert orbit.size == 1
    assert orbit.permutation_dim == 1
    assert orbits.check().passed


def test_layer_subquotients_match_orbit_counts(b11):
    report = layer_subquotient_dims(parse_label("0:(1|1)"), b11)
    assert report.passed, report.failures()
    assert list(report.checks) == ["layer 0", "layer 1"]


def test_layer_subquotients_of_an_upper_label(b11):
    report = layer_subquotient_dims(parse_label("1:(|)"), b11)
    assert report.passed, report.failures()


def test_restricted_cell_identity(b22):
    report = restricted_cell_identity(b22, 1, 0, ((1,), (1,)))
    assert report.passed, report.failures()
    assert report.checks["corner dim"][0]
    assert report.checks["hook witness"][0]


@pytest.mark.parametrize("n,l,dim", [(1, 0, 4), (1, 1, 1), (2, 1, 1)])
def test_hook_witness(b22, n, l, dim):
    witness, report = hook_corner_witness(b22, n, l)
    assert report.passed, report.failures()
    assert witness.shape == (dim, dim)


def test_hook_witness_needs_a_young_stabilizer(b22):
    witness, report = hook_corner_witness(b22, 2, 0)
    assert witness is None
    assert report.checks["hook dims"] == (True, "2 vs dim M^((2)|(1,1)) = 2")
    assert not report.checks["hook witness"][0]


def test_hook_witness_needs_ordered_layers(b22):
    with pytest.raises(LayerOutOfRange):
        hook_corner_witness(b22, 0, 1)


def test_restricted_cell_identity_above_two_layers(b22):
    report = restricted_cell_identity(b22, 2, 0, ((), ()))
    assert report.passed, report.failures()
    assert "right intertwiner" in report.checks


def test_restricted_cell_vanishes_below(b11):
    report = restricted_cell_identity(b11, 0, 1, ((1,), (1,)))
    assert report.passed
    assert list(report.checks) == ["vanishes"]


def test_semisimple_check(b11_rational):
    report = semisimple_check(b11_rational)
    assert report.passed, report.failures()
    assert report.checks["sum of squares"] == (True, "2 vs dim B = 2")


def test_trace_characters_catch_a_wrong_label(b11_rational):
    catalog = LayerCatalog(b11_rational)
    report = young_decomposition(parse_label("0:(1|1)"), b11_rational,
                                 catalog=catalog)
    assert report.failures == []
    assert character_failures(report, catalog) == []
    first, second = report.summands
    first.label = second.label
    (failure,) = character_failures(report, catalog)
    assert failure.startswith("trace character mismatch")


def test_trace_characters_are_skipped_mod_p(b11):
    catalog = LayerCatalog(b11)
    report = young_decomposition(parse_label("0:(1|1)"), b11,
                                 catalog=catalog)
    first, second = report.summands
    first.label = second.label
    assert character_failures(report, catalog) == []


def test_cell_filtration_compares_trace_characters(b11_rational):
    module = perm_module_B(parse_label("0:(1|1)"), b11_rational)
    report = cell_filtration(module)
    assert report.characters_match is True
    assert report.to_dict()["characters_match"] is True
    unchecked = cell_filtration(module, check=False)
    assert unchecked.characters_match is None
    assert "characters_match" not in unchecked.to_dict()
