"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Layer spaces of ``B = B_{r,t}(delta)`` and the functors between
``K S_{r-l,t-l}``-modules and ``B``-modules built from them.

All spaces are spans of products ``e_l . b (. e_m)`` of basis diagrams,
taken inside ``B`` or inside a quotient ``B / J_k``. Since ``J_k`` is
spanned by a suffix of the basis, the quotient only drops coordinates.
The group ``S_{r-l,t-l}`` acts on the left through ``w_top(l, .)``, on the
right of ``B e_l`` through ``iota(l, .) = e_l w_bot(l, .)``.
"""
import collections
import functools
import logging

from ..algebra.group_algebra import GroupAlgebra
from ..algebra.walled import IDEMPOTENT_SYMMETRIC, idempotent_diagram
from ..coeffs.linalg import EchelonBasis, row_space, stack
from ..coeffs.sparse import SparseEchelon
from ..modules.module_rep import (Bimodule, ModuleRep, SubmoduleWitness,
                                  submodule_generated)
from ..modules.specht import dual_specht_prod, perm_module_prod
from ..modules.tensor import tensor_over_subalgebra
from ..utils.errors import LayerOutOfRange


logger = logging.getLogger(__name__)

ROW = "e_lB"
IDEAL = "e_lJ_m"
LAYER = "e_l(J_m/J_m+1)"
CORNER = "e_l(B/J)e_m"
KINDS = (ROW, IDEAL, LAYER, CORNER)


class LayerSpace(object):
    """
    Subspace of ``B`` or ``B / J_k`` spanned by products of basis diagrams.

    Attributes
    ----------
    algebra: WalledBrauerAlgebra
    l, m: int
        left and (for the kinds that need one) second layer index
    kind: string
        one of ``KINDS``
    cutoff: int
        coordinates from this basis index on are zero in the quotient
    """
    def __init__(self, algebra, l, kind, m, echelon, cutoff):
        self.algebra = algebra
        self.l = l
        self.kind = kind
        self.m = m
        self.echelon = echelon
        self.cutoff = cutoff
        self._pivots = echelon.pivots
        self._position = {p: i for i, p in enumerate(self._pivots)}

    @property
    def dim(self):
        return len(self._pivots)

    @property
    def field(self):
        return self.algebra.field

    def _sparse(self, element):
        return _truncated(self.algebra, element, self.cutoff)

    def elements(self):
        """
        The basis, as AlgebraElements, in pivot order.
        """
        basis = self.algebra.basis
        return [self.algebra.element({basis[k]: v for k, v in
                                      self.echelon.rows[p].items()})
                for p in self._pivots]

    def keys(self):
        """
        Leading diagram of every basis element.
        """
        return [self.algebra.basis[p] for p in self._pivots]

    def sparse_coordinates(self, element):
        """
        Coordinates as a ``dict`` position -> nonzero value.

        Raises
        ------
        ValueError if the class of ``element`` is not in the space.
        """
        coords = self.echelon.coordinates(self._sparse(element))
        return {self._position[p]: v for p, v in coords.items() if v != 0}

    def coordinates(self, element):
        out = self.field.zeros(self.dim)
        for k, v in self.sparse_coordinates(element).items():
            out[k] = v
        return out

    def matrix(self, operation):
        """
        Matrix of ``x -> operation(x)`` on the basis, rows are images.
        """
        rows = [self.coordinates(operation(x)) for x in self.elements()]
        return stack(self.field, rows, self.dim)

    @property
    def name(self):
        l, m = self.l, self.m
        if self.kind == ROW:
            return "e_{}B".format(l)
        if self.kind == IDEAL:
            return "e_{}J_{}".format(l, m)
        if self.kind == LAYER:
            return "e_{}(J_{}/J_{})".format(l, m, m + 1)
        return "e_{}(B/J_{})e_{}".format(l, max(l, m) + 1, m)

    def __str__(self):
        return "{} of dim {}".format(self.name, self.dim)


def _truncated(algebra, element, cutoff):
    out = dict()
    for key, coef in element.terms.items():
        i = algebra.index(key)
        if i < cutoff:
            out[i] = coef
    return out


def _left_by(a):
    return lambda x: a * x


def _right_by(a):
    return lambda x: x * a


def layer_group_algebra(algebra, l):
    """
    ``K S_{r-l,t-l}``.
    """
    return GroupAlgebra(algebra.layer_group(l), algebra.field)


def _check_second_layer(algebra, l, m):
    if m is None:
        raise ValueError('The m parameter can not be None!')
    if not 0 <= m <= algebra.s:
        raise LayerOutOfRange("Layer {} outside 0..{} for {}"
                              .format(m, algebra.s, algebra))
    return m


@functools.lru_cache(maxsize=128)
def layer_space(algebra, l, kind=ROW, m=None):
    """
    ``e_lB``, ``e_lJ_m``, ``e_l(J_m/J_{m+1})`` or
    ``e_l(B/J_{k+1})e_m`` with ``k = max(l, m)``, as a span of the products
    with all basis diagrams.

    Raises
    ------
    LayerOutOfRange; NotCellularlyStratified
    """
    if kind not in KINDS:
        raise ValueError("Unknown layer space '{}', use one of {}"
                         .format(kind, KINDS))
    e = algebra.idempotent(l)
    right = None
    keys = algebra.basis
    cutoff = algebra.dim
    if kind != ROW:
        _check_second_layer(algebra, l, m)
    if kind == IDEAL:
        keys = algebra.ideal_keys(m)
    elif kind == LAYER:
        keys = algebra.ideal_keys(m)
        cutoff = algebra.layer_start(m + 1)
    elif kind == CORNER:
        right = algebra.idempotent(m)
        cutoff = algebra.layer_start(max(l, m) + 1)
    echelon = SparseEchelon(algebra.field, algebra.dim)
    for key in keys:
        x = e * algebra.basis_element(key)
        if right is not None:
            x = x * right
        echelon.add(_truncated(algebra, x, cutoff))
    space = LayerSpace(algebra, l, kind, m, echelon, cutoff)
    logger.debug("%s in %s", space, algebra)
    return space


@functools.lru_cache(maxsize=128)
def layer_bimodule(algebra, l, kind=ROW, m=None):
    """
    A layer space as a bimodule: ``K S_{r-l,t-l}`` on the left by
    ``w_top``; on the right ``B`` by multiplication, except for the corner
    space ``e_l(B/J)e_m`` where ``K S_{r-m,t-m}`` acts by ``iota(m, .)``.
    """
    space = layer_space(algebra, l, kind, m)
    left_algebra = layer_group_algebra(algebra, l)
    left = collections.OrderedDict(
        (name, space.matrix(_left_by(algebra.w_top(l, g))))
        for name, g in left_algebra.group.generators().items())
    if kind == CORNER:
        right_algebra = layer_group_algebra(algebra, m)
        right = collections.OrderedDict(
            (name, space.matrix(_right_by(algebra.iota(m, g))))
            for name, g in right_algebra.group.generators().items())
    else:
        right_algebra = algebra
        right = collections.OrderedDict(
            (name, space.matrix(_right_by(g)))
            for name, g in algebra.generators().items())
    return Bimodule(left_algebra, right_algebra, space.dim, left, right,
                    name=space.name)


def cell_bimodule(algebra, l):
    """
    ``e_l (B / J_{l+1})``; it equals ``e_l (J_l / J_{l+1})`` since
    ``e_l B = e_l e_l B`` lies in ``e_l J_l``.
    """
    return layer_bimodule(algebra, l, LAYER, l)


def induce(module, l, algebra, name=None):
    """
    ``ind_l N = N (x) e_l(B/J_{l+1})`` over ``K S_{r-l,t-l}``.
    """
    name = name or "ind_{}({})".format(l, module.name)
    return tensor_over_subalgebra(module, cell_bimodule(algebra, l), name)


def induce_free(module, l, algebra, name=None):
    """
    ``Ind_l N = N (x) e_lB`` over ``K S_{r-l,t-l}``.
    """
    name = name or "Ind_{}({})".format(l, module.name)
    return tensor_over_subalgebra(module, layer_bimodule(algebra, l, ROW),
                                  name)


def restriction(module, l):
    """
    ``N e_l`` with ``K S_{r-l,t-l}`` acting by ``iota(l, .)``; this is
    ``N (x)_B B e_l``.

    Returns
    -------
    (ModuleRep, basis): the restricted module and its basis rows in the
    coordinates of ``module``.

    Raises
    ------
    LayerOutOfRange; NotCellularlyStratified
    """
    algebra = module.algebra
    field = module.field
    e = algebra.idempotent(l)
    echelon = EchelonBasis(field, module.dim)
    echelon.extend(row_space(field, module.act_matrix(e)))
    group_algebra = layer_group_algebra(algebra, l)
    actions = collections.OrderedDict()
    for name, g in group_algebra.group.generators().items():
        A = module.act_matrix(algebra.iota(l, g))
        rows = [echelon.coordinates(field.matmul(u, A))
                for u in echelon.rows]
        actions[name] = stack(field, rows, echelon.dim)
    res = ModuleRep(group_algebra, echelon.dim, actions,
                    name="Res_{}({})".format(l, module.name))
    return res, echelon.basis


def res_l(module, l):
    return restriction(module, l)[0]


def cell_module(label, algebra):
    """
    ``ind_l S_{lambda,mu}``.

    Raises
    ------
    NotCellularlyStratified; ShapeMismatch
    """
    label.check(algebra)
    source = dual_specht_prod(label.shape, algebra.field)
    return induce(source, label.l, algebra, name="cell{}".format(label))


def perm_module_B(label, algebra):
    """
    ``M(l,(lambda,mu)) = Ind_l M^{lambda,mu}``.
    """
    label.check(algebra)
    source = perm_module_prod(label.shape, algebra.field)
    return induce_free(source, label.l, algebra, name="M{}".format(label))


def ideal_generator(algebra, m):
    """
    The nested arc diagram with ``m`` edges; ``J_m = B d_m B`` since every
    diagram with ``k >= m`` edges is ``sigma . d_m . g . tau`` without
    loops.
    """
    return algebra.basis_element(idempotent_diagram(
        algebra.r, algebra.t, m, IDEMPOTENT_SYMMETRIC))


def ideal_image(module, m):
    """
    ``N . J_m`` as a submodule of ``N``.
    """
    algebra = module.algebra
    if m > algebra.s:
        return SubmoduleWitness(module, EchelonBasis(module.field,
                                                     module.dim))
    d = ideal_generator(algebra, m)
    return submodule_generated(module, list(module.act_matrix(d)))
