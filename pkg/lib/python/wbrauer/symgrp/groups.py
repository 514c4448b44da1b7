"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

The groups S_a and S_{a,b} = S_a x S_b, their subgroups, cosets and double
cosets. Everything is exhaustive; the groups stay at desk scale.
"""
import itertools
import logging

from scipy.special import factorial
from sympy.combinatorics import PermutationGroup

from ..combinat.partitions import Composition
from ..utils.errors import DegreeTooLarge, NotASubgroupElement
from .permutation import Permutation, ProductPermutation


logger = logging.getLogger(__name__)

MAX_DEGREE = 8


def _check_degree(n):
    if n > MAX_DEGREE:
        raise DegreeTooLarge("Degree {} exceeds the enumeration guard {}"
                             .format(n, MAX_DEGREE))


class SymmetricGroup(object):
    """
    ``S_a`` acting on ``1..a``.
    """
    kind = "Sym"

    def __init__(self, a):
        if a is None or a < 0:
            raise ValueError('The degree parameter must be a non-negative '
                             'integer!')
        _check_degree(a)
        self.a = a
        self._elements = None

    @property
    def degree(self):
        return self.a

    @property
    def order(self):
        return int(factorial(self.a, exact=True))

    def identity(self):
        return Permutation.identity(self.a)

    def elements(self):
        """
        All elements in lexicographic order of their image lists.
        """
        if self._elements is None:
            self._elements = [Permutation(p) for p in
                              itertools.permutations(range(1, self.a + 1))]
        return self._elements

    def generators(self):
        """
        Adjacent transpositions ``s1 .. s{a-1}`` keyed by name.
        """
        return {"s{}".format(i): Permutation.transposition(i, i + 1, self.a)
                for i in range(1, self.a)}

    def contains(self, g):
        return isinstance(g, Permutation) and g.degree == self.a

    def embed(self, g):
        return g

    def from_embedded(self, perm):
        return perm

    def side_blocks(self):
        return [tuple(range(1, self.a + 1))]

    def __eq__(self, other):
        return isinstance(other, SymmetricGroup) and self.a == other.a

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(("Sym", self.a))

    def __str__(self):
        return "Sym({})".format(self.a)

    __repr__ = __str__


class ProductGroup(object):
    """
    ``S_{a,b} = S_a x S_b``. Embedded into ``S_{a+b}`` it permutes
    ``1..a`` and ``a+1..a+b`` separately.
    """
    kind = "Prod"

    def __init__(self, a, b):
        if a is None or b is None or a < 0 or b < 0:
            raise ValueError('The degree parameters must be non-negative '
                             'integers!')
        _check_degree(a)
        _check_degree(b)
        self.a = a
        self.b = b
        self._elements = None

    @property
    def degree(self):
        return self.a + self.b

    @property
    def order(self):
        return int(factorial(self.a, exact=True)) * \
            int(factorial(self.b, exact=True))

    def identity(self):
        return ProductPermutation.identity(self.a, self.b)

    def elements(self):
        """
        All elements, lexicographic in (left images, right images).
        """
        if self._elements is None:
            lefts = SymmetricGroup(self.a).elements()
            rights = SymmetricGroup(self.b).elements()
            self._elements = [ProductPermutation(x, y) for x, y in
                              itertools.product(lefts, rights)]
        return self._elements

    def generators(self):
        """
        ``s1 .. s{a-1}`` on the left factor and ``s{a+1} .. s{a+b-1}`` on
        the right factor, keyed by name.
        """
        gens = dict()
        right_id = Permutation.identity(self.b)
        left_id = Permutation.identity(self.a)
        for i in range(1, self.a):
            gens["s{}".format(i)] = ProductPermutation(
                Permutation.transposition(i, i + 1, self.a), right_id)
        for j in range(1, self.b):
            gens["s{}".format(self.a + j)] = ProductPermutation(
                left_id, Permutation.transposition(j, j + 1, self.b))
        return gens

    def contains(self, g):
        return isinstance(g, ProductPermutation) and \
            g.degrees == (self.a, self.b)

    def embed(self, g):
        return g.embed()

    def from_embedded(self, perm):
        images = perm.images
        left = images[:self.a]
        right = images[self.a:]
        if any(x > self.a for x in left):
            raise NotASubgroupElement("{} mixes the two factors of {}"
                                      .format(perm, self))
        return ProductPermutation(left, tuple(x - self.a for x in right))

    def side_blocks(self):
        return [tuple(range(1, self.a + 1)),
                tuple(range(self.a + 1, self.a + self.b + 1))]

    def __eq__(self, other):
        return isinstance(other, ProductGroup) and \
            (self.a, self.b) == (other.a, other.b)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(("Prod", self.a, self.b))

    def __str__(self):
        return "Prod({},{})".format(self.a, self.b)

    __repr__ = __str__


def enumerate_group(group):
    """
    All elements of ``Sym(a)`` or ``Prod(a,b)`` in lexicographic order.

    Parameters
    ----------
    group: SymmetricGroup, ProductGroup or a tuple ``("Sym", a)`` /
        ``("Prod", a, b)``
    """
    if isinstance(group, tuple):
        kind = group[0]
        if kind == "Sym":
            group = SymmetricGroup(*group[1:])
        elif kind == "Prod":
            group = ProductGroup(*group[1:])
        else:
            raise ValueError("Unknown group kind '{}'".format(kind))
    return list(group.elements())


class Subgroup(object):
    """
    Subgroup of ``Sym(a)`` or ``Prod(a,b)`` generated by a list of elements.
    Closure and membership go through ``sympy.combinatorics`` on the
    embedding into ``S_{a+b}``.
    """
    def __init__(self, group, generators):
        if group is None:
            raise ValueError('The group parameter can not be None!')
        generators = list(generators)
        for g in generators:
            if not group.contains(g):
                raise NotASubgroupElement("{} is not an element of {}"
                                          .format(g, group))
        self.group = group
        self.generators = generators
        sym_gens = [group.embed(g).as_sympy() for g in generators]
        if not sym_gens:
            sym_gens = [group.embed(group.identity()).as_sympy()]
        self._perm_group = PermutationGroup(sym_gens)
        self._elements = None

    @property
    def order(self):
        return int(self._perm_group.order())

    def contains(self, g):
        if not self.group.contains(g):
            return False
        return bool(self._perm_group.contains(self.group.embed(g).as_sympy()))

    def elements(self):
        if self._elements is None:
            n = self.group.degree
            self._elements = sorted(
                self.group.from_embedded(Permutation.from_sympy(p, n))
                for p in self._perm_group.generate())
        return self._elements

    def blocks(self):
        """
        Position blocks when this is a Young subgroup, else None.
        """
        return None

    def __str__(self):
        return "<{} generators in {}>".format(len(self.generators),
                                              self.group)


class YoungSubgroup(Subgroup):
    """
    Product of the symmetric groups on disjoint blocks of positions of the
    embedding ``1..a+b``; a block never straddles the two factors of a
    product group.
    """
    def __init__(self, group, blocks):
        blocks = [tuple(sorted(b)) for b in blocks]
        gens = []
        for block in blocks:
            for x, y in zip(block, block[1:]):
                images = list(range(1, group.degree + 1))
                images[x - 1], images[y - 1] = y, x
                gens.append(group.from_embedded(Permutation(images)))
        super().__init__(group, gens)
        self._blocks = blocks

    @classmethod
    def from_shape(cls, group, shape):
        """
        Parameters
        ----------
        group: SymmetricGroup or ProductGroup
        shape: Composition for ``Sym(a)``, pair of Compositions for
            ``Prod(a,b)``
        """
        if isinstance(group, ProductGroup):
            left, right = (s if isinstance(s, Composition) else Composition(s)
                           for s in shape)
            if (left.size, right.size) != (group.a, group.b):
                raise NotASubgroupElement("Shape {} does not fit {}"
                                          .format((left, right), group))
            blocks = left.blocks() + \
                [tuple(group.a + x for x in b) for b in right.blocks()]
        else:
            comp = shape if isinstance(shape, Composition) \
                else Composition(shape)
            if comp.size != group.a:
                raise NotASubgroupElement("Shape {} does not fit {}"
                                          .format(comp, group))
            blocks = comp.blocks()
        return cls(group, blocks)

    @property
    def order(self):
        out = 1
        for b in self._blocks:
            out *= int(factorial(len(b), exact=True))
        return out

    def blocks(self):
        return list(self._blocks)


def trivial_subgroup(group):
    return Subgroup(group, [])


def _check_subgroup(G, H):
    if H.group != G:
        raise NotASubgroupElement("{} is not a subgroup of {}".format(H, G))


def coset_table(G, H, side="right"):
    """
    Coset representatives and the element-to-coset map.

    Parameters
    ----------
    G: SymmetricGroup or ProductGroup
    H: Subgroup of G
    side: 'right' for ``H g`` (the cosets ``H\\G``), 'left' for ``g H``

    Returns
    -------
    (reps, index) with ``reps`` the lexicographically minimal element of
    each coset and ``index`` mapping each element of G to its coset number.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right', got {}"
                         .format(side))
    _check_subgroup(G, H)
    h_elements = H.elements()
    index = dict()
    reps = []
    for g in G.elements():
        if g in index:
            continue
        number = len(reps)
        reps.append(g)
        for h in h_elements:
            index[h * g if side == "right" else g * h] = number
    return reps, index


def cosets(G, H, side="right"):
    """
    Minimal representatives, one per coset; ``|reps| = |G| / |H|``.
    """
    return coset_table(G, H, side)[0]


class DoubleCoset(object):
    """
    One double coset ``H alpha L`` with its size and, for Young subgroups,
    the composition data of ``K cap alpha^-1 H alpha`` per block of the
    inner Young subgroup ``K``.
    """
    def __init__(self, representative, size, shape=None):
        self.representative = representative
        self.size = size
        self.shape = shape

    def __str__(self):
        shape = "" if self.shape is None else \
            " " + "|".join(str(c) for c in self.shape)
        return "{} x{}{}".format(self.representative, self.size, shape)

    __repr__ = __str__


def intersection_shape(group, alpha, outer_blocks, inner_blocks):
    """
    Block data of ``K cap alpha^-1 Y alpha`` for Young subgroups ``Y`` (blocks
    ``B_j``) and ``K`` (blocks ``C_k``): the conjugate permutes the blocks
    ``alpha(B_j)``, so the intersection is the Young subgroup with blocks
    ``alpha(B_j) cap C_k``.

    Returns
    -------
    A tuple with one Composition ``(|alpha(B_j) cap C_k|)_j`` per ``C_k``.
    """
    images = group.embed(alpha)
    moved = [set(images(x) for x in block) for block in outer_blocks]
    return tuple(Composition(len(m & set(c)) for m in moved)
                 for c in inner_blocks)


def double_cosets(H, G, L, inner=None):
    """
    Double cosets ``H alpha L`` of G.

    Parameters
    ----------
    H, L: Subgroup of G
    G: SymmetricGroup or ProductGroup
    inner: YoungSubgroup or None
        subgroup whose intersection with ``alpha^-1 H alpha`` is reported;
        defaults to ``L`` when ``L`` is a Young subgroup

    Returns
    -------
    A list of DoubleCoset with lexicographically minimal representatives.
    """
    _check_subgroup(G, H)
    _check_subgroup(G, L)
    if inner is None and L.blocks() is not None:
        inner = L
    h_elements = H.elements()
    l_elements = L.elements()
    seen = set()
    out = []
    for g in G.elements():
        if g in seen:
            continue
        members = set()
        for h in h_elements:
            hg = h * g
            for x in l_elements:
                members.add(hg * x)
        seen.update(members)
        shape = None
        if inner is not None and H.blocks() is not None:
            shape = intersection_shape(G, g, H.blocks(), inner.blocks())
        out.append(DoubleCoset(g, len(members), shape))
    logger.debug("%d double cosets in %s", len(out), G)
    return out
