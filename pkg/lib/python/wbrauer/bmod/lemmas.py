"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Structural checks on the layer spaces of ``B_{r,t}(delta)``:

* ``e_lJ_m = e_lJ_{m+1} + e_l(J_m/J_{m+1})`` as left
  ``K S_{r-l,t-l}``-modules,
* ``e_l(J_m/J_{m+1}) = e_l(B/J_{m+1})e_m (x) e_m(B/J_{m+1})``,
* ``e_l(B/J_{m+1})e_m = K[S_{r-l,t-l}/H_{m-l}]`` as bimodules, where
  ``H_{m-l}`` permutes the ``m-l`` arcs that ``e_m`` adds to ``e_l``,
* the ``S_{r-m,t-m}``-orbits on ``S_{lambda,mu} \\ S_{r-l,t-l} / H_{m-l}``,
* ``Res_l cell(n,(lambda,mu))`` as ``S_{lambda,mu}`` tensored with the
  corner ``e_n(B/J_{n+1})e_l``.
"""
import logging

import numpy as np
from networkx.utils import UnionFind
from scipy.special import factorial

from ..algebra.walled import partial_count
from ..coeffs.linalg import is_invertible, stack
from ..coeffs.sparse import SparseEchelon, iadd_coef, sparse_from_dense
from ..combinat.partitions import Composition, Partition, hook_composition
from ..modules.homs import is_isomorphic
from ..modules.specht import dual_specht_prod, perm_module_prod
from ..modules.tensor import tensor_over_subalgebra
from ..symgrp.groups import (Subgroup, YoungSubgroup, coset_table,
                             double_cosets)
from ..utils.errors import LayerOutOfRange
from .catalog import LayerCatalog
from .labels import LambdaLabel, labels_of, require_layer
from .layers import (CORNER, IDEAL, LAYER, cell_bimodule, cell_module,
                     ideal_image, layer_bimodule, layer_space, perm_module_B,
                     restriction)
from .reports import CheckReport
from .young import young_equals_cell


logger = logging.getLogger(__name__)


def _fact(n):
    return int(factorial(n, exact=True))


def _single_key(element):
    """
    The diagram of a scaled basis element.
    """
    (key,) = element.terms.keys()
    return key


def _check_pair(algebra, l, m, strict=True):
    bad = not 0 <= l <= m <= algebra.s or (strict and l == m)
    if bad:
        raise LayerOutOfRange("Layers ({},{}) need 0 <= l {} m <= {} for {}"
                              .format(l, m, "<" if strict else "<=",
                                      algebra.s, algebra))
    require_layer(algebra, l)
    require_layer(algebra, m)


def corner_stabilizer(algebra, l, m):
    """
    ``H_{m-l}``: the elements ``g`` of ``S_{r-l,t-l}`` with
    ``w_top(l, g) e_m = e_m``; it has order ``(m-l)!``.
    """
    group = algebra.layer_group(l)
    e = algebra.idempotent(m)
    fixing = [g for g in group.elements() if algebra.w_top(l, g) * e == e]
    return Subgroup(group, fixing)


def embedded_layer_group(algebra, l, m):
    """
    Generators of ``S_{r-m,t-m}`` as elements of ``S_{r-l,t-l}``: ``k``
    goes to the ``k'`` with ``w_top(l, k') = w_top(m, k)``.

    Returns
    -------
    dict generator name -> element of ``S_{r-l,t-l}``
    """
    by_key = {_single_key(algebra.w_top(l, g)): g
              for g in algebra.layer_group(l).elements()}
    out = dict()
    for name, k in algebra.layer_group(m).generators().items():
        out[name] = by_key[_single_key(algebra.w_top(m, k))]
    return out


class CosetWitness(object):
    """
    The map ``gH -> w_top(l, g) e_m`` from the cosets of
    ``H = H_{m-l}`` onto ``e_l(B/J_{m+1})e_m``.

    Attributes
    ----------
    stabilizer: Subgroup
    representatives: list
        one element per coset ``gH``
    matrix: matrix
        row ``k`` holds the coordinates of the image of coset ``k``
    """
    def __init__(self, stabilizer, representatives, matrix):
        self.stabilizer = stabilizer
        self.representatives = representatives
        self.matrix = matrix

    @property
    def index(self):
        return len(self.representatives)


def coset_bimodule_witness(algebra, l, m, report=None):
    """
    Build the coset map and check that it is a bijective bimodule map:
    ``S_{r-l,t-l}`` permutes cosets from the left, ``S_{r-m,t-m}`` from the
    right through its embedding, which commutes with ``H_{m-l}``.

    Returns
    -------
    (CosetWitness, CheckReport)
    """
    _check_pair(algebra, l, m)
    if report is None:
        report = CheckReport("e_{}(B/J_{})e_{} = K[G/H]".format(l, m + 1, m),
                             algebra)
    field = algebra.field
    group = algebra.layer_group(l)
    space = layer_space(algebra, l, CORNER, m)
    bimodule = layer_bimodule(algebra, l, CORNER, m)
    H = corner_stabilizer(algebra, l, m)
    report.record("stabilizer order", H.order == _fact(m - l),
                  "|H| = {}, (m-l)! = {}".format(H.order, _fact(m - l)))
    reps, index = coset_table(group, H, side="left")
    e = algebra.idempotent(m)
    W = stack(field, [space.coordinates(algebra.w_top(l, g) * e)
                      for g in reps], space.dim)
    witness = CosetWitness(H, reps, W)
    if not report.record("coset count", len(reps) == space.dim,
                         "{} cosets, corner of dim {}".format(len(reps),
                                                              space.dim)):
        return witness, report
    report.record("bijective", is_invertible(field, W))

    def permutation(images):
        P = field.zeros(len(reps), len(reps))
        for k, j in enumerate(images):
            P[k, j] = field.one
        return P

    left_ok = True
    for name, s in group.generators().items():
        P = permutation([index[s * g] for g in reps])
        left_ok &= np.array_equal(field.matmul(P, W),
                                  field.matmul(W, bimodule.left_actions[name]))
    report.record("left intertwiner", left_ok)
    right_ok = True
    for name, k in embedded_layer_group(algebra, l, m).items():
        P = permutation([index[g * k] for g in reps])
        right_ok &= np.array_equal(field.matmul(P, W), field.matmul(
            W, bimodule.right_actions[name]))
    report.record("right intertwiner", right_ok)
    return witness, report


def _sparse_rows(matrix):
    return [sparse_from_dense(row) for row in matrix]


def _times(field, rows, other):
    """
    ``rows @ other`` for lists of sparse rows.
    """
    out = []
    for row in rows:
        acc = dict()
        for k, c in row.items():
            iadd_coef(field, acc, c, other[k])
        out.append(acc)
    return out


def intertwines(field, source_actions, rows, target_actions):
    """
    The map with sparse image ``rows`` commutes with every generator:
    ``A_g F = F B_g``.
    """
    for gen, A in source_actions.items():
        lhs = _times(field, _sparse_rows(A), rows)
        rhs = _times(field, rows, _sparse_rows(target_actions[gen]))
        if lhs != rhs:
            return False
    return True


def split_witness(algebra, l, m, report=None):
    """
    Split ``0 -> e_lJ_{m+1} -> e_lJ_m -> e_l(J_m/J_{m+1}) -> 0`` as left
    ``K S_{r-l,t-l}``-modules.

    ``e_lJ_m`` is spanned by diagrams, so the section sending a class to its
    part on the diagrams with exactly ``m`` horizontal edges lands in
    ``e_lJ_m``. It is a module map since ``w_top`` permutes diagrams and
    keeps their edge count; the inclusion of ``e_lJ_{m+1}`` is one when the
    upper space is stable.
    """
    _check_pair(algebra, l, m)
    if report is None:
        report = CheckReport("e_{0}J_{1} = e_{0}J_{2} + e_{0}(J_{1}/J_{2})"
                             .format(l, m, m + 1), algebra)
    ideal = layer_space(algebra, l, IDEAL, m)
    layer = layer_space(algebra, l, LAYER, m)
    upper = layer_space(algebra, l, IDEAL, m + 1) if m < algebra.s else None
    upper_dim = upper.dim if upper is not None else 0
    report.record("e_lJ_m split dims", ideal.dim == upper_dim + layer.dim,
                  "{} vs {} + {}".format(ideal.dim, upper_dim, layer.dim))

    section = layer.elements()
    homogeneous = all(d.horizontal_count == m for y in section
                      for d in y.terms)
    try:
        for y in section:
            ideal.sparse_coordinates(y)
        inside = True
    except ValueError:
        inside = False
    report.record("section in e_lJ_m", homogeneous and inside)

    moves = [algebra.w_top(l, g)
             for g in algebra.layer_group(l).generators().values()]
    report.record("section intertwines",
                  all(d.horizontal_count == m for w in moves
                      for y in section for d in (w * y).terms))
    stable = True
    if upper is not None:
        try:
            for w in moves:
                for u in upper.elements():
                    upper.sparse_coordinates(w * u)
        except ValueError:
            stable = False
    report.record("inclusion intertwines", stable)
    return report


def multiplication_witness(algebra, l, m, report=None):
    """
    ``e_l(B/J_{m+1})e_m (x) e_m(B/J_{m+1}) -> e_l(J_m/J_{m+1})``,
    ``x (x) y -> xy``, as an explicit isomorphism of right ``B``-modules:
    it is onto, bijective on the basis of the tensor product and commutes
    with every generator of ``B``.
    """
    _check_pair(algebra, l, m)
    if report is None:
        report = CheckReport("e_{0}(J_{1}/J_{2}) = e_{0}(B/J_{2})e_{1} (x) "
                             "e_{1}(B/J_{2})".format(l, m, m + 1), algebra)
    field = algebra.field
    corner = layer_bimodule(algebra, l, CORNER, m)
    tensor = tensor_over_subalgebra(corner.as_right_module(),
                                    cell_bimodule(algebra, m),
                                    name="corner (x) e_{}B".format(m))
    target_space = layer_space(algebra, l, LAYER, m)
    target = layer_bimodule(algebra, l, LAYER, m).as_right_module()
    xs = layer_space(algebra, l, CORNER, m).elements()
    ys = layer_space(algebra, m, LAYER, m).elements()
    products = dict()
    image = SparseEchelon(field, target.dim)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            products[i, j] = target_space.sparse_coordinates(x * y)
            image.add(products[i, j])
    report.record("multiplication onto", image.rank == target.dim,
                  "image of dim {} in {}".format(image.rank, target.dim))
    rows = [products[pair] for pair in tensor.pure_tensors]
    rank = SparseEchelon(field, target.dim).extend(rows).rank
    report.record("tensor bijective", rank == tensor.dim == target.dim,
                  "rank {}, dims {} and {}".format(rank, tensor.dim,
                                                   target.dim))
    report.record("tensor intertwines",
                  intertwines(field, tensor.actions, rows, target.actions))
    return report


def layer_dimension(algebra, l, m):
    """
    ``|V^{m-l}| |V_m| |S_{r-m,t-m}|``, the dimension of
    ``e_l(J_m/J_{m+1})``.
    """
    r, t = algebra.r, algebra.t
    return partial_count(r - l, t - l, m - l) * partial_count(r, t, m) * \
        _fact(r - m) * _fact(t - m)


def corner_dimension(algebra, l, m):
    """
    ``(r-l)! (t-l)! / (m-l)!``
    """
    return _fact(algebra.r - l) * _fact(algebra.t - l) // _fact(m - l)


def verify_layer_lemmas(algebra, l, m, seed=0):
    """
    Check the splitting of ``e_lJ_m``, the tensor description of
    ``e_l(J_m/J_{m+1})`` and the coset description of the corner
    ``e_l(B/J_{m+1})e_m``, each by dimension and by an explicit witness.

    Parameters
    ----------
    algebra: WalledBrauerAlgebra
    l, m: int
        layers with ``0 <= l < m <= s``
    seed: int
        recorded in the log only; every witness is built directly

    Returns
    -------
    CheckReport

    Raises
    ------
    LayerOutOfRange; NotCellularlyStratified
    """
    _check_pair(algebra, l, m)
    report = CheckReport("layers ({},{})".format(l, m), algebra)
    split_witness(algebra, l, m, report=report)

    layer = layer_space(algebra, l, LAYER, m)
    expected = layer_dimension(algebra, l, m)
    report.record("layer dim", layer.dim == expected,
                  "{} vs {}".format(layer.dim, expected))
    multiplication_witness(algebra, l, m, report=report)

    corner = layer_space(algebra, l, CORNER, m)
    expected = corner_dimension(algebra, l, m)
    report.record("corner dim", corner.dim == expected,
                  "{} vs {}".format(corner.dim, expected))
    coset_bimodule_witness(algebra, l, m, report=report)
    logger.info("%s (seed %d): %s", algebra, seed, report)
    return report


class OrbitClass(object):
    """
    One ``S_{r-m,t-m}``-orbit on ``S_{lambda,mu} \\ S_{r-l,t-l} / H_{m-l}``.

    Attributes
    ----------
    representative: WalledDiagram
        a corner diagram in the first double coset of the orbit
    size: int
    stabilizer_order: int
    composition: (Composition, Composition) or None
        block sizes of the stabilizer when it is a Young subgroup
    """
    def __init__(self, representative, size, stabilizer_order, composition):
        self.representative = representative
        self.size = size
        self.stabilizer_order = stabilizer_order
        self.composition = composition

    @property
    def permutation_dim(self):
        if self.composition is None:
            return None
        left, right = self.composition
        return left.multinomial() * right.multinomial()

    def __str__(self):
        comp = "?" if self.composition is None else \
            "({}|{})".format(*self.composition)
        return "M^{} x{}".format(comp, self.size)


class OrbitDecomposition(object):
    """
    ``K[S_{lambda,mu} \\ S_{r-l,t-l} / H_{m-l}] = + M^{gamma,delta}`` over
    the orbits.
    """
    def __init__(self, algebra, l, m, shape, classes, points,
                 double_coset_count):
        self.algebra = algebra
        self.l = l
        self.m = m
        self.shape = shape
        self.classes = classes
        self.points = points
        self.double_coset_count = double_coset_count

    def check(self, report=None):
        if report is None:
            report = CheckReport("orbits ({},{}) on {}".format(
                self.l, self.m, self.shape), self.algebra)
        report.record("double coset count",
                      self.points == self.double_coset_count,
                      "{} vs {}".format(self.points, self.double_coset_count))
        report.record("orbit sizes", sum(c.size for c in self.classes)
                      == self.points)
        for c in self.classes:
            report.record("Young stabilizer of {}".format(c.representative),
                          c.composition is not None and
                          c.permutation_dim == c.size, str(c))
        return report

    def __str__(self):
        return " + ".join(str(c) for c in self.classes)


def _young_blocks(elements, a, b):
    """
    Orbit sizes of a subgroup of ``S_{a,b}`` on the two sides, largest
    first, or None when the subgroup is not the Young subgroup of its
    orbits.
    """
    out = []
    order = 1
    for n, side in ((a, "left"), (b, "right")):
        blocks = UnionFind(range(1, n + 1))
        for g in elements:
            perm = getattr(g, side)
            for i in range(1, n + 1):
                blocks.union(i, perm(i))
        sizes = sorted((len(s) for s in blocks.to_sets()), reverse=True)
        for size in sizes:
            order *= _fact(size)
        out.append(Composition(sizes))
    if order != len(elements):
        return None
    return tuple(out)


def orbit_decomposition(algebra, l, m, shape):
    """
    Orbits of ``S_{r-m,t-m}`` on the double cosets
    ``S_{lambda,mu} \\ S_{r-l,t-l} / H_{m-l}``, realized on corner diagrams:
    the cosets ``gH`` are the diagrams of ``w_top(l, g) e_m``, the Young
    subgroup acts by ``w_top(l, .)`` and ``S_{r-m,t-m}`` by ``w_bot(m, .)``.

    Parameters
    ----------
    shape: Bipartition in ``Lambda_{r-l,t-l}``

    Returns
    -------
    OrbitDecomposition
    """
    _check_pair(algebra, l, m, strict=False)
    LambdaLabel(l, shape).check(algebra)
    group = algebra.layer_group(l)
    H = corner_stabilizer(algebra, l, m)
    reps = coset_table(group, H, side="left")[0]
    e = algebra.idempotent(m)
    diagrams = sorted({_single_key(algebra.w_top(l, g) * e) for g in reps})

    young = YoungSubgroup.from_shape(group, (shape.left, shape.right))
    points = UnionFind(diagrams)
    for d in diagrams:
        x = algebra.basis_element(d)
        for y in young.generators:
            points.union(d, _single_key(algebra.w_top(l, y) * x))
    cosets = sorted((sorted(s) for s in points.to_sets()),
                    key=lambda s: s[0])
    which = {d: i for i, s in enumerate(cosets) for d in s}

    K = algebra.layer_group(m)

    def act(i, k):
        return which[_single_key(algebra.basis_element(cosets[i][0]) *
                                 algebra.w_bot(m, k))]

    orbits = UnionFind(range(len(cosets)))
    for k in K.generators().values():
        for i in range(len(cosets)):
            orbits.union(i, act(i, k))
    classes = []
    for orbit in sorted((sorted(s) for s in orbits.to_sets())):
        first = orbit[0]
        stab = [k for k in K.elements() if act(first, k) == first]
        comp = _young_blocks(stab, K.a, K.b)
        classes.append(OrbitClass(cosets[first][0], len(orbit), len(stab),
                                  comp))
    count = len(double_cosets(young, group, H))
    logger.debug("%d double cosets in %d orbits for (%d,%d) on %s",
                 len(cosets), len(classes), l, m, shape)
    return OrbitDecomposition(algebra, l, m, shape, classes, len(cosets),
                              count)


def layer_subquotient_dims(label, algebra):
    """
    ``dim M J_m / M J_{m+1}`` for ``M = M(label)`` against
    ``|V_m|`` times the orbit count of ``orbit_decomposition``; the layers
    below ``l`` vanish.

    Returns
    -------
    CheckReport
    """
    label.check(algebra)
    module = perm_module_B(label, algebra)
    report = CheckReport("layers of M{}".format(label), algebra)
    dims = [ideal_image(module, m).dim for m in range(algebra.s + 2)]
    for m in range(algebra.s + 1):
        observed = dims[m] - dims[m + 1]
        if m < label.l:
            report.record("layer {}".format(m), observed == 0,
                          "dim {}".format(observed))
        elif m in algebra.valid_layers():
            orbits = orbit_decomposition(algebra, label.l, m, label.shape)
            expected = orbits.points * partial_count(algebra.r, algebra.t, m)
            report.record("layer {}".format(m), observed == expected,
                          "{} vs {}".format(observed, expected))
    return report


def _spread(field, perm, module, start):
    """
    The map from a transitive permutation module sending basis vector 0 to
    ``start``, extended along the generators; None when two paths disagree.
    """
    images = {0: start}
    queue = [0]
    while queue:
        a = queue.pop()
        for gen, A in perm.actions.items():
            b = int(np.flatnonzero(A[a] != 0)[0])
            image = field.matmul(images[a], module.actions[gen])
            if b not in images:
                images[b] = image
                queue.append(b)
            elif not np.array_equal(images[b], image):
                return None
    if len(images) != perm.dim:
        return None
    return stack(field, [images[k] for k in range(perm.dim)], module.dim)


def hook_corner_witness(algebra, n, l, report=None):
    """
    ``e_n(B/J_{n+1})e_l = M^{(n-l,1^{r-n}),(1^{t-l})}`` as right
    ``K S_{r-l,t-l}``-modules.

    Both sides permute a basis transitively, so an isomorphism sends the
    first tabloid to a corner diagram with the same stabilizer; every
    corner diagram is tried in order. For ``n - l >= 2`` the stabilizer of
    a corner diagram moves the added arcs on both sides of the wall at
    once, is no Young subgroup, and no witness exists.

    Returns
    -------
    (matrix or None, CheckReport): rows are the images of the tabloid
    pairs in the corner basis.
    """
    require_layer(algebra, n)
    require_layer(algebra, l)
    if n < l:
        raise LayerOutOfRange("The corner e_{}(B/J)e_{} needs {} >= {}"
                              .format(n, l, n, l))
    if report is None:
        report = CheckReport("e_{}(B/J_{})e_{} = M^hook".format(n, n + 1, l),
                             algebra)
    field = algebra.field
    r, t = algebra.r, algebra.t
    head = hook_composition(n - l, r - n)
    shape = (Partition([p for p in head.parts if p]),
             Partition((1,) * (t - l)))
    perm = perm_module_prod(shape, field)
    corner = layer_bimodule(algebra, n, CORNER, l).as_right_module()
    if not report.record("hook dims", perm.dim == corner.dim,
                         "{} vs dim {} = {}".format(corner.dim, perm.name,
                                                    perm.dim)):
        return None, report
    for k in range(corner.dim):
        start = field.zeros(corner.dim)
        start[k] = field.one
        F = _spread(field, perm, corner, start)
        if F is not None and is_invertible(field, F):
            report.record("hook witness", True,
                          "first tabloid -> corner vector {}".format(k))
            return F, report
    report.record("hook witness", False, "no corner vector fits")
    return None, report


def restricted_cell_identity(algebra, n, l, shape, seed=0):
    """
    ``Res_l cell(n,(lambda,mu))``: zero for ``n < l``, otherwise isomorphic
    to ``S_{lambda,mu} (x) e_n(B/J_{n+1})e_l`` over ``K S_{r-n,t-n}``, where
    the corner is ``M^{(n-l,1^{r-n}),(1^{t-l})}`` by ``hook_corner_witness``
    when ``n - l <= 1`` and the coset module ``K[S_{r-l,t-l}/H_{n-l}]``
    otherwise.

    Returns
    -------
    CheckReport
    """
    label = LambdaLabel(n, shape)
    label.check(algebra)
    require_layer(algebra, l)
    report = CheckReport("Res_{} cell{}".format(l, label), algebra)
    res = restriction(cell_module(label, algebra), l)[0]
    if n < l:
        report.record("vanishes", res.dim == 0, "dim {}".format(res.dim))
        return report

    r, t = algebra.r, algebra.t
    hook = (hook_composition(n - l, r - n), Composition((1,) * (t - l)))
    corner = layer_bimodule(algebra, n, CORNER, l)
    expected = hook[0].multinomial() * hook[1].multinomial()
    report.record("corner dim", corner.dim == expected,
                  "{} vs dim M^({}|{}) = {}".format(corner.dim, hook[0],
                                                    hook[1], expected))
    if n - l <= 1:
        hook_corner_witness(algebra, n, l, report=report)
    else:
        coset_bimodule_witness(algebra, l, n, report=report)
    source = dual_specht_prod(shape, algebra.field)
    free_rank = expected // (_fact(r - n) * _fact(t - n))
    report.record("dimension", res.dim == source.dim * free_rank,
                  "{} vs {}".format(res.dim, source.dim * free_rank))
    model = tensor_over_subalgebra(source, corner,
                                   name="S (x) corner({},{})".format(n, l))
    report.record("isomorphic", is_isomorphic(res, model, seed=seed)[0])
    return report


def semisimple_check(algebra, seed=0, catalog=None):
    """
    In the semisimple regime the squares of the cell dimensions add up to
    ``dim B`` and every Young module is the cell module of its label.
    """
    if catalog is None:
        catalog = LayerCatalog(algebra, seed=seed)
    report = CheckReport("semisimple {}".format(algebra), algebra)
    labels = labels_of(algebra)
    total = sum(catalog.cell(x).dim ** 2 for x in labels)
    report.record("sum of squares", total == algebra.dim,
                  "{} vs dim B = {}".format(total, algebra.dim))
    for x in labels:
        report.record("Y{} = cell{}".format(x, x),
                      young_equals_cell(catalog, x))
    return report
