"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Stabilizers in ``S_{l,l}`` of a full set of ``l`` horizontal edges.

A partial diagram with ``l`` edges on ``l`` left and ``l`` right vertices
is read as a permutation ``v`` of ``1..l``: ``v(i) = j`` when the ``i``-th
left vertex is joined to the ``j``-th right vertex. ``(sigma, tau)`` moves
the edge ``(i, j)`` to ``(sigma(i), tau(j))``.
"""
import itertools

from ..utils.errors import MalformedPartialDiagram
from .groups import ProductGroup, SymmetricGroup, Subgroup
from .permutation import Permutation, ProductPermutation


def matching_to_permutation(pairs, l):
    """
    Parameters
    ----------
    pairs: iterable of (int, int)
        edges ``(i, j)``, ``i`` a left and ``j`` a right index in ``1..l``
    l: int

    Raises
    ------
    MalformedPartialDiagram unless the pairs form a perfect matching.
    """
    pairs = list(pairs)
    images = [0] * l
    for i, j in pairs:
        if not (1 <= i <= l and 1 <= j <= l) or images[i - 1]:
            raise MalformedPartialDiagram(
                "Edges {} are not a perfect matching on {}+{} vertices"
                .format(pairs, l, l))
        images[i - 1] = j
    try:
        return Permutation(images)
    except ValueError:
        raise MalformedPartialDiagram(
            "Edges {} are not a perfect matching on {}+{} vertices"
            .format(pairs, l, l))


def _as_permutation(v):
    if isinstance(v, Permutation):
        return v
    if hasattr(v, "as_permutation"):
        return v.as_permutation()
    pairs = list(v)
    return matching_to_permutation(pairs, len(pairs))


class PartialStabilizer(object):
    """
    ``Stab(v) = {(sigma, v^-1 sigma v)}``, isomorphic to ``S_l`` through its
    first coordinate.
    """
    def __init__(self, v):
        self.v = v
        self.l = v.degree
        self.group = ProductGroup(self.l, self.l)

    def tau(self, sigma):
        """
        The right partner ``v^-1 . sigma . v`` of ``sigma``.
        """
        return sigma.conjugate_by(self.v)

    def __call__(self, sigma):
        return ProductPermutation(sigma, self.tau(sigma))

    @property
    def order(self):
        return SymmetricGroup(self.l).order

    def elements(self):
        return sorted(self(s) for s in SymmetricGroup(self.l).elements())

    def contains(self, pair):
        return pair.right == self.tau(pair.left)

    def subgroup(self):
        gens = SymmetricGroup(self.l).generators().values()
        return Subgroup(self.group, [self(s) for s in gens])


def stabilizer_of_partial_diagram(v):
    """
    Parameters
    ----------
    v: Permutation of degree ``l``, an object with ``as_permutation()``,
        or a list of ``l`` edges ``(i, j)``

    Returns
    -------
    PartialStabilizer: the map ``sigma -> (sigma, v^-1 sigma v)``.
    """
    return PartialStabilizer(_as_permutation(v))


def brute_force_stabilizer(v):
    """
    All ``(sigma, tau)`` in ``S_{l,l}`` fixing the edge set of ``v``.
    """
    v = _as_permutation(v)
    l = v.degree
    edges = {(i, v(i)) for i in range(1, l + 1)}
    elements = SymmetricGroup(l).elements()
    out = []
    for sigma, tau in itertools.product(elements, elements):
        if {(sigma(i), tau(j)) for i, j in edges} == edges:
            out.append(ProductPermutation(sigma, tau))
    return sorted(out)
