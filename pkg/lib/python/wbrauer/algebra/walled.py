"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Walled Brauer diagrams and partial diagrams.

A diagram on ``n = r + t`` top and bottom vertices is stored as the partner
list of a fixed point free involution on ``0 .. 2n-1``: top vertex ``k`` has
index ``k - 1``, bottom vertex ``k`` has index ``n + k - 1``. Positions
``1..r`` are left of the wall, ``r+1..n`` right of it.
"""
import itertools
import re

from networkx.utils import UnionFind
from scipy.special import comb, factorial

from ..utils.errors import (DimensionTooLarge, IndexAcrossWall,
                            IndexOutOfRange, LayerOutOfRange,
                            MalformedPartialDiagram, ParseError,
                            ShapeMismatch)
from ..symgrp.permutation import Permutation


MAX_DIAGRAM_VERTICES = 10

FILTERS = ("all", "exactly_l", "at_least_l")


class WalledDiagram(object):
    """
    An ``(r,t)``-walled Brauer diagram.
    """
    __slots__ = ("r", "t", "partner", "_key")

    def __init__(self, r, t, partner, validate=True):
        """
        Parameters
        ----------
        r, t: int
            number of vertices left and right of the wall in each row
        partner: sequence of int
            ``partner[x]`` is the vertex joined to vertex index ``x``
        validate: bool
            check the matching and the wall conditions
        """
        self.r = r
        self.t = t
        self.partner = tuple(partner)
        self._key = None
        if validate:
            self._validate()

    def _validate(self):
        n = self.n
        if len(self.partner) != 2 * n:
            raise ShapeMismatch("Partner list of length {} for {} vertices"
                                .format(len(self.partner), 2 * n))
        for x, y in enumerate(self.partner):
            if not 0 <= y < 2 * n or y == x or self.partner[y] != x:
                raise ValueError("Vertex {} is not matched consistently"
                                 .format(self.label(x)))
            same_row = (x < n) == (y < n)
            same_side = self.is_left(x) == self.is_left(y)
            if same_row and same_side:
                raise ValueError("Horizontal edge {}-{} does not cross the "
                                 "wall".format(self.label(x), self.label(y)))
            if not same_row and not same_side:
                raise ValueError("Vertical edge {}-{} crosses the wall"
                                 .format(self.label(x), self.label(y)))

    @property
    def n(self):
        return self.r + self.t

    @property
    def shape(self):
        return (self.r, self.t)

    def is_left(self, x):
        return (x % self.n) < self.r

    def label(self, x):
        n = self.n
        return str(x + 1) if x < n else "{}'".format(x - n + 1)

    def edges(self):
        """
        Edges ``(x, y)`` with ``x < y`` sorted by ``x``; top before bottom.
        """
        return tuple((x, y) for x, y in enumerate(self.partner) if x < y)

    @property
    def horizontal_count(self):
        n = self.n
        return sum(1 for x in range(n) if x < self.partner[x] < n)

    @property
    def key(self):
        """
        Basis order: number of horizontal edges, then the edge list.
        """
        if self._key is None:
            self._key = (self.horizontal_count, self.edges())
        return self._key

    def top_arcs(self):
        """
        Horizontal top edges as 1-based ``(left, right)`` position pairs.
        """
        n = self.n
        return tuple(sorted((x + 1, y + 1) for x, y in self.edges() if y < n))

    def bottom_arcs(self):
        n = self.n
        return tuple(sorted((x - n + 1, y - n + 1) for x, y in self.edges()
                            if x >= n))

    def vertical(self):
        """
        Map 1-based top position -> bottom position of the vertical edges.
        """
        n = self.n
        return {x + 1: self.partner[x] - n + 1 for x in range(n)
                if self.partner[x] >= n}

    def free_vertices(self):
        """
        Vertically joined positions, as
        ``(top_left, top_right, bottom_left, bottom_right)`` sorted lists.
        """
        vert = self.vertical()
        tops = sorted(vert)
        bottoms = sorted(vert.values())
        r = self.r
        return ([x for x in tops if x <= r], [x for x in tops if x > r],
                [x for x in bottoms if x <= r], [x for x in bottoms if x > r])

    def top_partial(self):
        return PartialDiagram(self.r, self.t, self.top_arcs())

    def bottom_partial(self):
        return PartialDiagram(self.r, self.t, self.bottom_arcs())

    def __eq__(self, other):
        return isinstance(other, WalledDiagram) and \
            self.shape == other.shape and self.partner == other.partner

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash((self.r, self.t, self.partner))

    def __str__(self):
        return "wbd {},{} : {}".format(
            self.r, self.t, ",".join("{}-{}".format(self.label(x),
                                                    self.label(y))
                                     for x, y in self.edges()))

    def __repr__(self):
        return "WalledDiagram({})".format(self)


def _check_shape(r, t):
    if r < 0 or t < 0:
        raise ShapeMismatch("Negative wall sizes ({},{})".format(r, t))


def identity_diagram(r, t):
    _check_shape(r, t)
    n = r + t
    return WalledDiagram(r, t, [x + n for x in range(n)] +
                         [x for x in range(n)], validate=False)


def diagram_from_parts(r, t, top_arcs, bottom_arcs, vertical):
    """
    Build a diagram from 1-based top arcs, bottom arcs and the vertical map
    top position -> bottom position.
    """
    n = r + t
    partner = [None] * (2 * n)
    for a, b in top_arcs:
        partner[a - 1], partner[b - 1] = b - 1, a - 1
    for a, b in bottom_arcs:
        partner[n + a - 1], partner[n + b - 1] = n + b - 1, n + a - 1
    for a, b in vertical.items():
        partner[a - 1], partner[n + b - 1] = n + b - 1, a - 1
    if any(p is None for p in partner):
        raise ValueError("Parts do not cover all vertices of ({},{})"
                         .format(r, t))
    return WalledDiagram(r, t, partner)


def permutation_diagram(r, t, perm):
    """
    Diagram joining top ``i`` to bottom ``perm(i)``; ``perm`` must keep the
    wall. Products of such diagrams follow the permutation product.
    """
    images = getattr(perm, "images", perm)
    return diagram_from_parts(r, t, (), (),
                              {i + 1: x for i, x in enumerate(images)})


def multiply_diagrams(d1, d2):
    """
    Concatenate ``d1`` over ``d2``.

    Returns
    -------
    (c, z): the number ``c`` of closed loops removed and the reduced
    diagram ``z``; the product in the algebra is ``delta^c z``.

    Raises
    ------
    ShapeMismatch
    """
    if d1.shape != d2.shape:
        raise ShapeMismatch("Cannot concatenate {} over {} diagrams"
                            .format(d1.shape, d2.shape))
    n = d1.n
    components = UnionFind()
    for x, y in d1.edges():
        components.union(("u", x), ("u", y))
    for x, y in d2.edges():
        components.union(("l", x), ("l", y))
    for k in range(n):
        components.union(("u", n + k), ("l", k))
    outer = dict()
    loops = 0
    for block in components.to_sets():
        ends = [v for v in block if (v[0] == "u" and v[1] < n) or
                (v[0] == "l" and v[1] >= n)]
        if not ends:
            loops += 1
            continue
        (a, b) = ends
        outer[a] = b
        outer[b] = a

    # outer vertices keep their index: top of d1, bottom of d2
    partner = [0] * (2 * n)
    for a, b in outer.items():
        partner[a[1]] = b[1]
    return loops, WalledDiagram(d1.r, d1.t, partner, validate=False)


def generator(kind, r, t, *indices):
    """
    Generators ``s_i`` (``kind='s'``) and ``e_{k,l}`` (``kind='e'``).

    Raises
    ------
    IndexAcrossWall for ``s_r``; IndexOutOfRange for indices outside
    ``1 <= i < r+t`` resp. ``1 <= k <= r < l <= r+t``.
    """
    _check_shape(r, t)
    n = r + t
    if kind == "s":
        (i,) = indices
        if not 1 <= i < n:
            raise IndexOutOfRange("s_{} is not defined for ({},{})"
                                  .format(i, r, t))
        if i == r:
            raise IndexAcrossWall("s_{} would cross the wall of ({},{})"
                                  .format(i, r, t))
        return permutation_diagram(r, t, Permutation.transposition(i, i + 1,
                                                                   n))
    if kind == "e":
        k, l = indices
        if not (1 <= k <= r < l <= n):
            raise IndexOutOfRange("e_{{{},{}}} is not defined for ({},{})"
                                  .format(k, l, r, t))
        vertical = {x: x for x in range(1, n + 1) if x not in (k, l)}
        return diagram_from_parts(r, t, [(k, l)], [(k, l)], vertical)
    raise ValueError("Unknown generator kind '{}'".format(kind))


def flip(d):
    """
    Exchange top and bottom rows.
    """
    n = d.n

    def swap(x):
        return x + n if x < n else x - n

    partner = [0] * (2 * n)
    for x, y in enumerate(d.partner):
        partner[swap(x)] = swap(y)
    return WalledDiagram(d.r, d.t, partner, validate=False)


def nested_arcs(r, l):
    """
    Arcs ``r-l+i -- r+l+1-i``, ``i = 1..l``, around the wall.
    """
    return tuple((r - l + i, r + l + 1 - i) for i in range(1, l + 1))


IDEMPOTENT_SYMMETRIC = "symmetric"
IDEMPOTENT_RIGHT = "right"
IDEMPOTENT_LEFT = "left"


def idempotent_diagram(r, t, l, version=IDEMPOTENT_SYMMETRIC):
    """
    The diagram underlying the layer idempotent ``e_l``.

    Parameters
    ----------
    version: string
        'symmetric': nested arcs in both rows, vertical identity elsewhere.
        'right': nested top arcs; bottom arcs ``r-l+i -- r+l+2-i`` and the
        vertical edge from top ``r+l+1`` to bottom ``r+1``; needs ``l < t``.
        'left': nested top arcs; bottom arcs ``r-l+i-1 -- r+l+1-i`` and the
        vertical edge from top ``r-l`` to bottom ``r``; needs ``l < r``.
    """
    s = min(r, t)
    if not 0 <= l <= s:
        raise LayerOutOfRange("Layer {} outside 0..{}".format(l, s))
    n = r + t
    top = nested_arcs(r, l)
    used_top = {x for arc in top for x in arc}
    if l == 0 or version == IDEMPOTENT_SYMMETRIC:
        vertical = {x: x for x in range(1, n + 1) if x not in used_top}
        return diagram_from_parts(r, t, top, top, vertical)
    if version == IDEMPOTENT_RIGHT:
        if l >= t:
            raise LayerOutOfRange("Right handed e_{} needs t > {}"
                                  .format(l, l))
        bottom = tuple((r - l + i, r + l + 2 - i) for i in range(1, l + 1))
        vertical = {x: x for x in range(1, n + 1)
                    if x not in used_top and x != r + l + 1}
        vertical[r + l + 1] = r + 1
        return diagram_from_parts(r, t, top, bottom, vertical)
    if version == IDEMPOTENT_LEFT:
        if l >= r:
            raise LayerOutOfRange("Left handed e_{} needs r > {}"
                                  .format(l, l))
        bottom = tuple((r - l + i - 1, r + l + 1 - i) for i in range(1, l + 1))
        vertical = {x: x for x in range(1, n + 1)
                    if x not in used_top and x != r - l}
        vertical[r - l] = r
        return diagram_from_parts(r, t, top, bottom, vertical)
    raise ValueError("Unknown idempotent version '{}'".format(version))


def layer_count(r, t, l):
    """
    ``(C(r,l) C(t,l) l!)^2 (r-l)! (t-l)!`` diagrams with ``l`` horizontal
    edges per row.
    """
    v = partial_count(r, t, l)
    return v * v * int(factorial(r - l, exact=True)) * \
        int(factorial(t - l, exact=True))


def partial_count(r, t, l):
    return int(comb(r, l, exact=True)) * int(comb(t, l, exact=True)) * \
        int(factorial(l, exact=True))


def _arc_sets(r, t, l):
    n = r + t
    out = []
    for lefts in itertools.combinations(range(1, r + 1), l):
        for rights in itertools.permutations(range(r + 1, n + 1), l):
            out.append(tuple(sorted(zip(lefts, rights))))
    return sorted(out)


def enumerate_diagrams(r, t, filter="all", l=0):
    """
    Walled diagrams in basis order.

    Parameters
    ----------
    filter: string
        'all', 'exactly_l' (exactly ``l`` horizontal edges per row) or
        'at_least_l' (the diagrams spanning the ideal ``J_l``)

    Raises
    ------
    DimensionTooLarge if ``r + t`` exceeds the vertex guard.
    """
    _check_shape(r, t)
    if r + t > MAX_DIAGRAM_VERTICES:
        raise DimensionTooLarge("r+t = {} exceeds the guard {}"
                                .format(r + t, MAX_DIAGRAM_VERTICES))
    if filter not in FILTERS:
        raise ValueError("Unknown filter '{}', use one of {}"
                         .format(filter, FILTERS))
    s = min(r, t)
    if filter == "all":
        layers = range(0, s + 1)
    elif filter == "exactly_l":
        layers = [l] if 0 <= l <= s else []
    else:
        layers = range(max(l, 0), s + 1)
    out = []
    n = r + t
    for m in layers:
        arcs = _arc_sets(r, t, m)
        for top, bottom in itertools.product(arcs, arcs):
            used_top = {x for arc in top for x in arc}
            used_bottom = {x for arc in bottom for x in arc}
            free_top = [x for x in range(1, n + 1) if x not in used_top]
            free_bottom = [x for x in range(1, n + 1) if x not in used_bottom]
            top_left = [x for x in free_top if x <= r]
            top_right = [x for x in free_top if x > r]
            bottom_left = [x for x in free_bottom if x <= r]
            bottom_right = [x for x in free_bottom if x > r]
            for pl in itertools.permutations(bottom_left):
                for pr in itertools.permutations(bottom_right):
                    vertical = dict(zip(top_left, pl))
                    vertical.update(zip(top_right, pr))
                    out.append(diagram_from_parts(r, t, top, bottom,
                                                  vertical))
    return sorted(out, key=lambda d: d.key)


class PartialDiagram(object):
    """
    Top row only: ``l`` horizontal edges crossing the wall, the remaining
    vertices free.
    """
    __slots__ = ("r", "t", "arcs")

    def __init__(self, r, t, arcs):
        """
        Parameters
        ----------
        arcs: iterable of (int, int)
            1-based pairs ``(left, right)`` with ``left <= r < right``
        """
        arcs = tuple(sorted((min(a, b), max(a, b)) for a, b in arcs))
        used = [x for arc in arcs for x in arc]
        if len(set(used)) != len(used) or \
                any(not (1 <= a <= r < b <= r + t) for a, b in arcs):
            raise MalformedPartialDiagram(
                "Arcs {} are not a partial diagram of ({},{})"
                .format(arcs, r, t))
        self.r = r
        self.t = t
        self.arcs = arcs

    @property
    def l(self):
        return len(self.arcs)

    def free_vertices(self):
        used = {x for arc in self.arcs for x in arc}
        free = [x for x in range(1, self.r + self.t + 1) if x not in used]
        return ([x for x in free if x <= self.r],
                [x for x in free if x > self.r])

    def contains(self, other):
        return set(other.arcs) <= set(self.arcs)

    def as_permutation(self):
        """
        Read the arcs on left vertices ``r-l+1..r`` and right vertices
        ``r+1..r+l`` as the permutation ``i -> j`` for the arc
        ``(r-l+i, r+j)``.
        """
        l, r = self.l, self.r
        pairs = []
        for a, b in self.arcs:
            i, j = a - (r - l), b - r
            if not (1 <= i <= l and 1 <= j <= l):
                raise MalformedPartialDiagram(
                    "Arcs {} do not sit on the {} vertices next to the wall"
                    .format(self.arcs, 2 * l))
            pairs.append((i, j))
        images = [0] * l
        for i, j in pairs:
            images[i - 1] = j
        return Permutation(images)

    def __eq__(self, other):
        return isinstance(other, PartialDiagram) and \
            (self.r, self.t, self.arcs) == (other.r, other.t, other.arcs)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (self.l, self.arcs) < (other.l, other.arcs)

    def __hash__(self):
        return hash((self.r, self.t, self.arcs))

    def __str__(self):
        return "pd {},{} : {}".format(self.r, self.t, ",".join(
            "{}-{}".format(a, b) for a, b in self.arcs))

    __repr__ = __str__


def partial_diagrams(r, t, l, containing=None):
    """
    All partial diagrams with ``l`` edges, in order of their arc lists.

    Parameters
    ----------
    containing: PartialDiagram or None
        keep only those containing all of its arcs (with the arcs of
        ``e_k`` this is the subset of ``V_l`` with ``e_k`` in the middle)

    Raises
    ------
    LayerOutOfRange
    """
    s = min(r, t)
    if not 0 <= l <= s:
        raise LayerOutOfRange("Layer {} outside 0..{}".format(l, s))
    out = [PartialDiagram(r, t, arcs) for arcs in _arc_sets(r, t, l)]
    if containing is not None:
        out = [v for v in out if v.contains(containing)]
    return out


def act_on_partial(v, d):
    """
    Place ``v`` above ``d`` and read off the new top row.

    Returns
    -------
    (c, w): ``c`` closed loops and the partial diagram ``w``, or ``(c, None)``
    when the number of edges grows beyond ``l`` (the zero of ``V_l``).

    Raises
    ------
    ShapeMismatch
    """
    if (v.r, v.t) != d.shape:
        raise ShapeMismatch("Partial diagram of {} acted on by a {} diagram"
                            .format((v.r, v.t), d.shape))
    n = d.n
    components = UnionFind()
    for x, y in d.edges():
        components.union(x, y)
    for a, b in v.arcs:
        components.union(a - 1, b - 1)
    free = {x - 1 for side in v.free_vertices() for x in side}
    loops = 0
    arcs = []
    for block in components.to_sets():
        bottoms = sorted(x - n + 1 for x in block if x >= n)
        tops = [x for x in block if x < n and x in free]
        if not bottoms and not tops:
            loops += 1
        elif len(tops) == 2:
            return loops, None
        elif len(bottoms) == 2:
            arcs.append(tuple(bottoms))
    if len(arcs) != v.l:
        return loops, None
    return loops, PartialDiagram(v.r, v.t, arcs)


_HEADER = re.compile(r"\s*wbd\s+(\d+)\s*,\s*(\d+)\s*:")
_EDGE = re.compile(r"\s*(\d+)('?)\s*-\s*(\d+)('?)\s*(,|\Z)")


def parse_diagram(text):
    """
    Parse ``wbd r,t : <edges>`` where top vertices are ``1..r+t``, bottom
    vertices ``1'..(r+t)'`` and edges ``a-b`` are comma separated.

    Raises
    ------
    ParseError with the byte offset of the offending token.
    """
    if text is None:
        raise ValueError('The text parameter can not be None!')
    header = _HEADER.match(text)
    if not header:
        token = text.strip().split(" ")[0] if text.strip() else None
        raise ParseError("Diagram must start with 'wbd r,t :'",
                         len(text) - len(text.lstrip()), token)
    r, t = int(header.group(1)), int(header.group(2))
    n = r + t
    pos = header.end()
    partner = [None] * (2 * n)
    while pos < len(text) and text[pos:].strip():
        match = _EDGE.match(text, pos)
        if not match:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            token = re.split(r"[,\s]", text[start:])[0]
            raise ParseError("Malformed edge", start, token)
        ends = []
        for num, prime, group in ((match.group(1), match.group(2), 1),
                                  (match.group(3), match.group(4), 3)):
            k = int(num)
            if not 1 <= k <= n:
                raise ParseError("Vertex outside 1..{}".format(n),
                                 match.start(group), num + prime)
            ends.append(k - 1 + (n if prime else 0))
        a, b = ends
        if a == b or partner[a] is not None or partner[b] is not None:
            raise ParseError("Vertex used twice", match.start(1),
                             match.group(0).strip(" ,"))
        partner[a], partner[b] = b, a
        pos = match.end()
    if any(p is None for p in partner):
        missing = partner.index(None)
        label = str(missing + 1) if missing < n else \
            "{}'".format(missing - n + 1)
        raise ParseError("Vertex {} is not matched".format(label), len(text),
                         label)
    try:
        return WalledDiagram(r, t, partner)
    except ValueError as err:
        raise ParseError("Not a walled diagram: {}".format(err),
                         header.end(), None)
