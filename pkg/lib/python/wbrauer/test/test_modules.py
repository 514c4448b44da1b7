"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import pytest

from wbrauer.algebra.group_algebra import GroupAlgebra
from wbrauer.coeffs.field import FieldSpec
from wbrauer.combinat import Bipartition, Partition
from wbrauer.modules import (Bimodule, character_mismatches, decompose,
                             direct_sum, dual_specht_filtration,
                             dual_specht_prod, form_is_invariant,
                             hom_space, is_isomorphic,
                             jacobson_radical, outer_tensor,
                             perm_module_prod, perm_module_sym,
                             product_multiplicities, quotient, simple_head,
                             span_submodule, specht_module, specht_prod,
                             specht_vector_check, submodule_generated,
                             tensor_over_subalgebra, young_modules_prod,
                             young_modules_sym, zero_module)
from wbrauer.utils.errors import (ActionsIncompatible, AlgebraMismatch,
                                  BadCharacteristic, NotInvariant,
                                  NotPRegular)


def regular_bimodule(algebra):
    left = {g: algebra.left_multiplication_matrix(x)
            for g, x in algebra.generators().items()}
    right = {g: algebra.right_multiplication_matrix(x)
             for g, x in algebra.generators().items()}
    return Bimodule(algebra, algebra, algebra.dim, left, right,
                    name="regular")


def test_permutation_module_dims(field):
    assert perm_module_sym((2, 1), field).dim == 3
    assert perm_module_sym((1, 1, 1), field).dim == 6
    assert perm_module_prod(((2, 1), (1,)), field).dim == 3
    assert perm_module_prod(((1, 1), (1, 1)), field).dim == 4


def test_permutation_module_relations(field):
    module = perm_module_prod(((1, 1), (2, 1)), field)
    assert module.check_relations()
    assert form_is_invariant(module)


@pytest.mark.parametrize("shape, dim", [((3,), 1), ((2, 1), 2),
                                        ((1, 1, 1), 1), ((2, 2), 2),
                                        ((3, 1), 3)])
def test_specht_dimensions(F5, shape, dim):
    witness = specht_module(shape, F5)
    assert witness.dim == dim == Partition(shape).hook_length_count()
    assert witness.is_invariant()


def test_specht_prod(F5):
    witness = specht_prod(((2, 1), (1, 1)), F5)
    assert witness.dim == 2
    assert witness.module().check_relations()
    assert dual_specht_prod(((2, 1), (1, 1)), F5).dim == 2


def test_specht_vector(field):
    assert specht_vector_check(((2, 1), (1,)), field)
    assert specht_vector_check(((1, 1), (2,)), field)


def test_submodule_and_quotient(F5):
    module = perm_module_sym((2, 1), F5)
    trivial = submodule_generated(module, [[1, 1, 1]])
    assert trivial.dim == 1
    top = quotient(module, trivial)
    assert top.dim == 2
    assert top.check_relations()
    with pytest.raises(NotInvariant):
        span_submodule(module, [[1, 0, 0]])


def test_direct_sum_and_zero(F5):
    module = perm_module_sym((2, 1), F5)
    total = direct_sum(module, zero_module(module.algebra), module)
    assert total.dim == 6
    assert total.check_relations()


def test_hom_spaces(F5):
    module = perm_module_sym((2, 1), F5)
    trivial = perm_module_sym((3,), F5)
    assert hom_space(module, module).dim == 2
    assert hom_space(trivial, module).dim == 1
    homs = hom_space(module, trivial)
    assert homs.dim == 1
    assert homs.check()


def test_dual_specht_is_twisted_by_the_sign(F5):
    sign = dual_specht_prod(((1, 1), (1,)), F5)
    trivial = specht_prod(((2,), (1,)), F5).module()
    assert sign.dim == trivial.dim == 1
    assert not is_isomorphic(sign, trivial)[0]
    found, witness = is_isomorphic(trivial,
                                   perm_module_prod(((2,), (1,)), F5))
    assert found
    assert witness.shape == (1, 1)


def test_outer_tensor_and_mismatch(F5, Q):
    left = perm_module_sym((1, 1), F5)
    right = perm_module_sym((2, 1), F5)
    module = outer_tensor(left, right)
    assert module.dim == 6
    assert module.check_relations()
    with pytest.raises(AlgebraMismatch):
        outer_tensor(left, perm_module_sym((2,), Q))


def test_decompose_semisimple(F5):
    module = perm_module_sym((2, 1), F5)
    report = decompose(module, seed=0)
    assert sorted(s.dim for s in report.summands) == [1, 2]
    assert report.verify()
    assert report.check_local()
    assert report.to_dict()["dim"] == 3


def test_decompose_is_seed_stable(Q):
    module = perm_module_sym((1, 1, 1), Q)
    first = decompose(module, seed=0)
    second = decompose(module, seed=1)
    shape = sorted((s.dim, s.multiplicity) for s in first.summands)
    assert shape == [(1, 1), (1, 1), (2, 2)]
    assert sorted((s.dim, s.multiplicity) for s in second.summands) == shape


def test_young_modules_sym(F5):
    report = young_modules_sym((1, 1, 1), F5)
    multiplicities = {str(s.label): s.multiplicity for s in report.summands}
    assert multiplicities == {"(3)": 1, "(2,1)": 2, "(1,1,1)": 1}


def test_young_modules_prod_refuse_char_three():
    with pytest.raises(BadCharacteristic):
        young_modules_prod(((1,), (1,)), FieldSpec(3))


def test_product_multiplicities(F5):
    shape = Bipartition((1, 1), (2, 1))
    direct = young_modules_prod(shape, F5)
    got = {s.label: s.multiplicity for s in direct.summands}
    assert got == product_multiplicities(shape, F5)
    assert got[Bipartition((2,), (3,))] == 1
    assert got[Bipartition((1, 1), (2, 1))] == 1


def test_simple_head(F5):
    head = simple_head(((2, 1), (1,)), F5)
    assert head.dim == 2
    with pytest.raises(NotPRegular):
        simple_head(((1, 1, 1, 1, 1), ()), F5)


def test_dual_specht_filtration(F5):
    module = perm_module_prod(((2, 1), (1, 1)), F5)
    filtration = dual_specht_filtration(module, seed=0)
    assert filtration is not None
    assert sum(filtration.dims()) == module.dim
    assert len(filtration) == 4


def test_jacobson_radical_of_triangular_matrices(field):
    basis = [field.asarray([[1, 0], [0, 0]]),
             field.asarray([[0, 1], [0, 0]]),
             field.asarray([[0, 0], [0, 1]])]
    radical = jacobson_radical(field, basis)
    assert radical.shape == (1, 3)
    assert radical[0, 0] == 0 and radical[0, 2] == 0


def test_tensor_with_the_regular_bimodule(F5):
    algebra = GroupAlgebra.symmetric(3, F5)
    module = perm_module_sym((2, 1), F5)
    bimodule = regular_bimodule(algebra)
    assert bimodule.check_compatible()
    product = tensor_over_subalgebra(module, bimodule)
    assert product.dim == module.dim
    assert is_isomorphic(product, module)[0]


def test_tensor_needs_the_left_algebra(F5):
    bimodule = regular_bimodule(GroupAlgebra.symmetric(2, F5))
    with pytest.raises(ActionsIncompatible):
        tensor_over_subalgebra(perm_module_sym((2, 1), F5), bimodule)


def test_left_module_view_of_regular_bimodule(F5):
    algebra = GroupAlgebra.symmetric(3, F5)
    left = regular_bimodule(algebra).as_left_module()
    assert left.check_relations()
    right = algebra.regular_representation()
    assert is_isomorphic(left, right)[0]
    assert left.actions["s1"].shape == (6, 6)


def test_trace_characters_add_along_submodules(Q):
    module = perm_module_sym((2, 1), Q)
    assert sorted(module.character()) == [0, 0, 1, 1, 1, 3]
    trivial = submodule_generated(module, [[1, 1, 1]])
    top = quotient(module, trivial)
    assert character_mismatches(module, [(1, trivial.module()),
                                         (1, top)]) == []
    assert character_mismatches(module, [(3, trivial.module())]) != []
