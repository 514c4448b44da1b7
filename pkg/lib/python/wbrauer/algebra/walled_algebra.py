"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import collections
import itertools
import logging

from ..symgrp.groups import ProductGroup
from ..symgrp.permutation import Permutation
from ..utils.errors import (DimensionTooLarge, LayerOutOfRange,
                            NotCellularlyStratified, ShapeMismatch)
from .base_algebra import PresentedAlgebra
from .walled import (MAX_DIAGRAM_VERTICES, IDEMPOTENT_LEFT,
                     IDEMPOTENT_RIGHT, IDEMPOTENT_SYMMETRIC,
                     enumerate_diagrams, flip, generator, identity_diagram,
                     idempotent_diagram, multiply_diagrams, parse_diagram,
                     permutation_diagram)


logger = logging.getLogger(__name__)


class WalledBrauerAlgebra(PresentedAlgebra):
    """
    The walled Brauer algebra ``B_{r,t}(delta)`` over a FieldSpec.

    The basis is ordered by the number of horizontal edges, so the ideal
    ``J_l`` spanned by diagrams with at least ``l`` horizontal edges per row
    is a suffix of the basis.
    """
    def __init__(self, r, t, field, delta):
        """
        Parameters
        ----------
        r, t: int
            vertices left and right of the wall
        field: FieldSpec
        delta: Scalar or number
            loop parameter

        Raises
        ------
        NotCellularlyStratified for ``B_{1,1}(0)``
        """
        super().__init__(field)
        if r is None or t is None or r < 0 or t < 0:
            raise ShapeMismatch("Invalid wall sizes ({},{})".format(r, t))
        if r + t > MAX_DIAGRAM_VERTICES:
            raise DimensionTooLarge("r+t = {} exceeds the guard {}"
                                    .format(r + t, MAX_DIAGRAM_VERTICES))
        self.r = r
        self.t = t
        self.delta = field.canonical(delta)
        if self.delta == 0 and (r, t) == (1, 1):
            raise NotCellularlyStratified(
                "B_{1,1}(0) is not cellularly stratified")
        if self.delta != 0:
            self.idempotent_version = IDEMPOTENT_SYMMETRIC
        elif r <= t:
            self.idempotent_version = IDEMPOTENT_RIGHT
        else:
            self.idempotent_version = IDEMPOTENT_LEFT
        self._layer_start = None

    @property
    def s(self):
        return min(self.r, self.t)

    @property
    def n(self):
        return self.r + self.t

    @property
    def shape(self):
        return (self.r, self.t)

    def _enumerate_basis(self):
        return enumerate_diagrams(self.r, self.t, "all")

    def _multiply_keys(self, x, y):
        loops, z = multiply_diagrams(x, y)
        coef = self.field.power(self.delta, loops)
        return {z: coef} if coef != 0 else {}

    def _one_key(self):
        return identity_diagram(self.r, self.t)

    def _generator_keys(self):
        gens = collections.OrderedDict()
        for i in range(1, self.n):
            if i != self.r:
                gens["s{}".format(i)] = generator("s", self.r, self.t, i)
        if self.r and self.t:
            gens["e{},{}".format(self.r, self.r + 1)] = \
                generator("e", self.r, self.t, self.r, self.r + 1)
        return gens

    def _involution_key(self, x):
        return flip(x)

    def format_key(self, key):
        return str(key)

    def __eq__(self, other):
        return isinstance(other, WalledBrauerAlgebra) and \
            (self.r, self.t, self.delta, self.field) == \
            (other.r, other.t, other.delta, other.field)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.r, self.t, self.delta, self.field))

    def __str__(self):
        return "B_{{{},{}}}({}) over {}".format(
            self.r, self.t, self.field.format(self.delta), self.field)

    __repr__ = __str__

    # --- diagrams --------------------------------------------------------

    def diagram(self, text):
        """
        Basis element from the ``wbd`` text form.
        """
        d = parse_diagram(text)
        if d.shape != self.shape:
            raise ShapeMismatch("{} is not a ({},{}) diagram"
                                .format(d, self.r, self.t))
        return self.basis_element(d)

    def generator_element(self, kind, *indices):
        return self.basis_element(generator(kind, self.r, self.t, *indices))

    # --- layers ----------------------------------------------------------

    def _check_layer(self, l):
        if not 0 <= l <= self.s:
            raise LayerOutOfRange("Layer {} outside 0..{} for {}"
                                  .format(l, self.s, self))

    def layer_start(self, l):
        """
        Index of the first basis diagram with at least ``l`` horizontal
        edges; ``J_l`` is spanned by the basis from there on.
        """
        if self._layer_start is None:
            starts = dict()
            for i, d in enumerate(self.basis):
                starts.setdefault(d.horizontal_count, i)
            self._layer_start = starts
        if l > self.s:
            return self.dim
        return self._layer_start[max(l, 0)]

    def ideal_keys(self, l):
        return self.basis[self.layer_start(l):]

    def idempotent_diagram(self, l):
        self._check_layer(l)
        if self.delta == 0 and l and self.r == self.t and l == self.s:
            raise NotCellularlyStratified(
                "J_{} of B_{{{},{}}}(0) contains no idempotent"
                .format(l, self.r, self.t))
        return idempotent_diagram(self.r, self.t, l, self.idempotent_version)

    def idempotent(self, l):
        """
        The layer idempotent ``e_l``: ``delta^-l`` times the nested arc
        diagram when ``delta != 0``, a diagram with a shifted bottom row
        when ``delta == 0``.

        Raises
        ------
        LayerOutOfRange; NotCellularlyStratified for ``l = r = t`` at
        ``delta = 0``
        """
        d = self.idempotent_diagram(l)
        coef = self.field.power(self.delta, -l) if self.delta != 0 \
            else self.field.one
        return self.basis_element(d, coef)

    def layer_group(self, l):
        """
        ``S_{r-l,t-l}``, the input group of layer ``l``.
        """
        self._check_layer(l)
        return ProductGroup(self.r - l, self.t - l)

    def free_correspondence(self, l):
        """
        Free vertices of ``e_l``:
        ``(top_left, top_right, bottom_left, bottom_right)``; the ``k``-th free
        top vertex of each side is joined to the ``k``-th free bottom vertex.
        """
        return self.idempotent_diagram(l).free_vertices()

    def _embedded(self, left_positions, right_positions, sigma):
        images = list(range(1, self.n + 1))
        for positions, perm in ((left_positions, sigma.left),
                                (right_positions, sigma.right)):
            for k, x in enumerate(positions):
                images[x - 1] = positions[perm(k + 1) - 1]
        return permutation_diagram(self.r, self.t, Permutation(images))

    def w_top(self, l, sigma):
        """
        Permutation diagram moving the free top vertices of ``e_l`` by
        ``sigma`` in ``S_{r-l,t-l}``.
        """
        top_left, top_right, _, _ = self.free_correspondence(l)
        return self.basis_element(self._embedded(top_left, top_right, sigma))

    def w_bot(self, l, sigma):
        _, _, bottom_left, bottom_right = self.free_correspondence(l)
        return self.basis_element(self._embedded(bottom_left, bottom_right,
                                                 sigma))

    def iota(self, l, sigma):
        """
        ``e_l . w_bot(sigma) = w_top(sigma) . e_l``, the image of ``sigma`` in
        ``e_l B e_l``.
        """
        return self.idempotent(l) * self.w_bot(l, sigma)

    def permutation_element(self, perm):
        return self.basis_element(permutation_diagram(self.r, self.t, perm))

    # --- checks ----------------------------------------------------------

    def valid_layers(self):
        """
        Layers that carry an idempotent.
        """
        out = []
        for l in range(self.s + 1):
            try:
                self.idempotent_diagram(l)
            except NotCellularlyStratified:
                continue
            out.append(l)
        return out

    def check_idempotents(self):
        """
        ``e_l e_l = e_l`` and ``e_l e_m = e_m = e_m e_l`` whenever ``e_m``
        has more horizontal edges than ``e_l``.

        Returns
        -------
        A list of failure descriptions, empty on success.
        """
        failures = []
        layers = self.valid_layers()
        elems = {l: self.idempotent(l) for l in layers}
        for l in layers:
            if elems[l] * elems[l] != elems[l]:
                failures.append("e_{0} e_{0} != e_{0}".format(l))
        for l, m in itertools.combinations(layers, 2):
            if elems[l] * elems[m] != elems[m]:
                failures.append("e_{} e_{} != e_{}".format(l, m, m))
            if elems[m] * elems[l] != elems[m]:
                failures.append("e_{} e_{} != e_{}".format(m, l, m))
        for failure in failures:
            logger.warning("%s: %s", self, failure)
        return failures

    def check_ideal(self, l):
        """
        ``J_l`` is closed under left and right multiplication by the
        generators.
        """
        gens = list(self._generator_keys().values())
        for b in self.ideal_keys(l):
            for g in gens:
                for product in (self.multiply_basis(b, g),
                                self.multiply_basis(g, b)):
                    if any(z.horizontal_count < l for z in product):
                        return False
        return True

    def check_edge_monotonicity(self, pairs=None):
        """
        The product of diagrams with ``l1`` and ``l2`` horizontal edges has
        at least ``max(l1, l2)``.
        """
        if pairs is None:
            pairs = itertools.product(self.basis, repeat=2)
        for x, y in pairs:
            _, z = multiply_diagrams(x, y)
            if z.horizontal_count < max(x.horizontal_count,
                                        y.horizontal_count):
                return False
        return True
