"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Permutations acting from the right. The product is fixed project-wide as

    (sigma . tau)(i) = tau(sigma(i))

i.e. apply ``sigma`` first. This is exactly sympy's ``p * q``.
"""
import re

from sympy.combinatorics import Permutation as SymPermutation

from ..utils.errors import DegreeMismatch, ParseError


def _to_sympy(images):
    return SymPermutation([i - 1 for i in images], size=max(len(images), 1))


class Permutation(object):
    """
    Bijection of ``{1..n}`` given by its 1-based image list.
    """
    __slots__ = ("images",)

    def __init__(self, images):
        """
        Parameters
        ----------
        images: sequence of int
            ``images[i - 1]`` is the image of ``i``
        """
        if images is None:
            raise ValueError('The images parameter can not be None!')
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("{} is not a permutation of 1..{}"
                             .format(list(images), len(images)))
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, i, j, n):
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def from_cycles(cls, cycles, n):
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def from_sympy(cls, perm, n):
        return cls([x + 1 for x in perm.array_form[:n]]) if n else cls(())

    @property
    def degree(self):
        return len(self.images)

    def as_sympy(self):
        return _to_sympy(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def compose(self, other):
        """
        ``self`` first, then ``other``.
        """
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch("Cannot compose degrees {} and {}"
                                 .format(self.degree, other.degree))
        return Permutation(other.images[x - 1] for x in self.images)

    __mul__ = compose

    def inverse(self):
        out = [0] * self.degree
        for i, x in enumerate(self.images):
            out[x - 1] = i + 1
        return Permutation(out)

    __invert__ = inverse

    def conjugate_by(self, other):
        """
        ``other^-1 . self . other``
        """
        return other.inverse() * self * other

    @property
    def sign(self):
        if not self.images:
            return 1
        return self.as_sympy().signature()

    @property
    def order(self):
        if not self.images:
            return 1
        return int(self.as_sympy().order())

    def is_identity(self):
        return all(x == i + 1 for i, x in enumerate(self.images))

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cycle))
        return out

    def cycle_string(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")"
                       for c in cycles)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.images) + "]"

    def __repr__(self):
        return "Permutation({})".format(self)


class ProductPermutation(object):
    """
    Element ``(sigma, tau)`` of ``S_a x S_b``.
    """
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        if not isinstance(left, Permutation):
            left = Permutation(left)
        if not isinstance(right, Permutation):
            right = Permutation(right)
        self.left = left
        self.right = right

    @classmethod
    def identity(cls, a, b):
        return cls(Permutation.identity(a), Permutation.identity(b))

    @property
    def degrees(self):
        return (self.left.degree, self.right.degree)

    def compose(self, other):
        if not isinstance(other, ProductPermutation):
            return NotImplemented
        if other.degrees != self.degrees:
            raise DegreeMismatch("Cannot compose degrees {} and {}"
                                 .format(self.degrees, other.degrees))
        return ProductPermutation(self.left * other.left,
                                  self.right * other.right)

    __mul__ = compose

    def inverse(self):
        return ProductPermutation(self.left.inverse(), self.right.inverse())

    __invert__ = inverse

    def conjugate_by(self, other):
        return other.inverse() * self * other

    @property
    def sign(self):
        return (self.left.sign, self.right.sign)

    def embed(self):
        """
        The permutation of ``1..a+b`` acting as ``left`` on ``1..a`` and as
        ``right`` on ``a+1..a+b``.
        """
        a = self.left.degree
        return Permutation(self.left.images +
                           tuple(a + x for x in self.right.images))

    @property
    def images(self):
        return self.embed().images

    def is_identity(self):
        return self.left.is_identity() and self.right.is_identity()

    def __eq__(self, other):
        return isinstance(other, ProductPermutation) and \
            self.left == other.left and self.right == other.right

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (self.left.images, self.right.images) < \
            (other.left.images, other.right.images)

    def __hash__(self):
        return hash((self.left.images, self.right.images))

    def __str__(self):
        return "({},{})".format(self.left, self.right)

    def __repr__(self):
        return "ProductPermutation{}".format(self)


def compose(sigma, tau):
    """
    ``sigma . tau``: apply ``sigma`` first.

    Raises
    ------
    DegreeMismatch
    """
    return sigma * tau


_ONE_LINE = re.compile(r"\[\s*\d+(\s*,\s*\d+)*\s*\]\Z|\[\s*\]\Z")
_CYCLE = re.compile(r"\(([\d\s]*)\)")


def parse_permutation(text, degree=None):
    """
    Parse the one-line form ``[3,5,4,1,2]`` or cycle notation
    ``(1 3 4)(2 5)``. Cycle notation needs ``degree`` unless the largest
    entry determines it.
    """
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if stripped.startswith("["):
        if not _ONE_LINE.match(stripped):
            raise ParseError("Malformed one-line permutation", lead, stripped)
        body = stripped[1:-1]
        images = [int(x) for x in body.split(",") if x.strip()]
        try:
            perm = Permutation(images)
        except ValueError:
            raise ParseError("Images are not a permutation", lead, stripped)
        if degree is not None and perm.degree != degree:
            raise DegreeMismatch("Expected degree {}, got {}"
                                 .format(degree, perm.degree))
        return perm
    cycles = []
    pos = 0
    for match in _CYCLE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise ParseError("Unexpected text between cycles", lead + pos,
                             stripped[pos:match.start()].strip())
        cycles.append([int(x) for x in match.group(1).split()])
        pos = match.end()
    if pos != len(stripped) or not stripped:
        raise ParseError("Malformed cycle notation", lead + pos,
                         stripped[pos:] or None)
    entries = [x for c in cycles for x in c]
    if len(set(entries)) != len(entries) or any(x < 1 for x in entries):
        raise ParseError("Cycles are not disjoint", lead, stripped)
    n = degree if degree is not None else max(entries, default=0)
    if entries and max(entries) > n:
        raise DegreeMismatch("Entry {} exceeds degree {}"
                             .format(max(entries), n))
    return Permutation.from_cycles([c for c in cycles if c], n)
