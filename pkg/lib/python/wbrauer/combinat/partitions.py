"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import itertools
import re

from scipy.special import factorial

from ..utils.errors import ParseError, SizeMismatch


_PARTS = re.compile(r"\s*(\d+(\s*,\s*\d+)*)?\s*\Z")


class Composition(object):
    """
    Finite sequence of non-negative integers.
    """
    def __init__(self, parts=()):
        """
        Parameters
        ----------
        parts: iterable of int
            non-negative entries
        """
        if parts is None:
            raise ValueError('The parts parameter can not be None!')
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError("Negative part in {}".format(parts))
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Composition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self):
        return "{}({})".format(type(self).__name__, self)

    def blocks(self):
        """
        Consecutive position blocks ``[1..c1], [c1+1..c1+c2], ...``
        (1-based) of the Young subgroup of this composition.
        """
        out = []
        start = 1
        for p in self.parts:
            out.append(tuple(range(start, start + p)))
            start += p
        return out

    def multinomial(self):
        """
        ``n! / prod(c_i!)``, the number of tabloids of this shape.
        """
        num = int(factorial(self.size, exact=True))
        for p in self.parts:
            num //= int(factorial(p, exact=True))
        return num


def hook_composition(head, ones, size=None):
    """
    ``(head, 1^ones)``; a zero head is kept so the blocks stay aligned.
    """
    parts = (head,) + (1,) * ones
    comp = Composition(parts)
    if size is not None and comp.size != size:
        raise ValueError("{} does not have size {}".format(comp, size))
    return comp


class Partition(Composition):
    """
    Weakly decreasing sequence of positive integers. Trailing zeros given at
    construction are dropped.
    """
    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        super().__init__(parts)
        if any(p <= 0 for p in self.parts) or \
                any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("{} is not a partition".format(parts))

    def conjugate(self):
        """
        ``lambda'_j = #{i : lambda_i >= j}``
        """
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p >= j)
                         for j in range(1, self.parts[0] + 1))

    def dominates(self, other):
        """
        True iff ``other`` is dominated by ``self``.
        """
        return dominance_leq(self, other)

    def is_p_regular(self, p):
        return is_p_regular(self, p)

    def hook_length_count(self):
        """
        Number of standard tableaux from the hook length formula.
        """
        conj = self.conjugate()
        hooks = 1
        for i, row in enumerate(self.parts):
            for j in range(row):
                hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
        return int(factorial(self.size, exact=True)) // hooks


class Bipartition(object):
    """
    A pair of partitions, an element of ``Lambda_{a,b}``.
    """
    def __init__(self, left, right):
        if left is None or right is None:
            raise ValueError('The left and right parameters can not be None!')
        self.left = left if isinstance(left, Partition) else Partition(left)
        self.right = right if isinstance(right, Partition) \
            else Partition(right)

    @property
    def sizes(self):
        return (self.left.size, self.right.size)

    def __iter__(self):
        return iter((self.left, self.right))

    def __eq__(self, other):
        return isinstance(other, Bipartition) and \
            self.left == other.left and self.right == other.right

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.left.parts, self.right.parts))

    def __str__(self):
        return "({}|{})".format(",".join(str(p) for p in self.left),
                                ",".join(str(p) for p in self.right))

    def __repr__(self):
        return "Bipartition{}".format(self)

    @property
    def sort_key(self):
        return (self.left.parts, self.right.parts)

    def dominates(self, other):
        """
        Componentwise dominance: ``other`` is dominated by ``self``.
        """
        return dominance_leq(self.left, other.left) and \
            dominance_leq(self.right, other.right)

    def conjugate(self):
        return Bipartition(self.left.conjugate(), self.right.conjugate())

    def is_p_regular(self, p):
        return self.left.is_p_regular(p) and self.right.is_p_regular(p)


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions_of(n):
    """
    All partitions of ``n`` in reverse-lexicographic order.

    Returns
    -------
    A list of Partition, e.g. ``[(3), (2,1), (1,1,1)]`` for ``n = 3``.
    """
    if n < 0:
        raise ValueError("Cannot partition the negative number {}".format(n))
    return [Partition(parts) for parts in _partitions(n, n)]


def bipartitions_of(a, b):
    """
    ``Lambda_{a,b}`` in reverse-lexicographic order of (left, right).
    """
    return [Bipartition(lam, mu) for lam, mu in
            itertools.product(partitions_of(a), partitions_of(b))]


def dominance_leq(lam, mu):
    """
    Returns
    -------
    True iff ``mu`` is dominated by ``lam``: every prefix sum of ``lam`` is
    at least the corresponding prefix sum of ``mu``.

    Raises
    ------
    SizeMismatch if the sizes differ.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch("Cannot compare partitions of {} and {}"
                           .format(sum(lam), sum(mu)))
    length = max(len(lam), len(mu))
    lam_sums = itertools.accumulate(lam + (0,) * (length - len(lam)))
    mu_sums = itertools.accumulate(mu + (0,) * (length - len(mu)))
    return all(x >= y for x, y in zip(lam_sums, mu_sums))


def conjugate(lam):
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    return lam.conjugate()


def is_p_regular(lam, p):
    """
    True iff no part value is repeated ``p`` or more times.
    """
    parts = tuple(lam)
    return all(parts.count(v) < p for v in set(parts))


def _parse_parts(text, offset):
    if not _PARTS.match(text):
        bad = re.search(r"[^\d,\s]|,\s*,|^\s*,|,\s*$", text)
        pos = bad.start() if bad else 0
        raise ParseError("Malformed part list", offset + pos,
                         text[pos:pos + 1] or text)
    return tuple(int(p) for p in text.split(",") if p.strip())


def parse_partition(text, offset=0):
    """
    Parse ``(p1,p2,...)``; ``()`` is the empty partition.
    """
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("Partition must be enclosed in parentheses",
                         offset + lead, stripped[:1] or None)
    parts = _parse_parts(stripped[1:-1], offset + lead + 1)
    try:
        return Partition(parts)
    except ValueError:
        raise ParseError("Parts are not weakly decreasing and positive",
                         offset + lead, stripped)


def parse_composition(text, offset=0):
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("Composition must be enclosed in parentheses",
                         offset + lead, stripped[:1] or None)
    return Composition(_parse_parts(stripped[1:-1], offset + lead + 1))


def parse_bipartition(text, offset=0):
    """
    Parse ``(p1,p2,...|q1,q2,...)``.
    """
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("Bipartition must be enclosed in parentheses",
                         offset + lead, stripped[:1] or None)
    inner = stripped[1:-1]
    if inner.count("|") != 1:
        raise ParseError("Bipartition needs exactly one '|'",
                         offset + lead + 1, inner)
    bar = inner.index("|")
    start = offset + lead + 1
    left = _parse_parts(inner[:bar], start)
    right = _parse_parts(inner[bar + 1:], start + bar + 1)
    try:
        return Bipartition(Partition(left), Partition(right))
    except ValueError:
        raise ParseError("Parts are not weakly decreasing and positive",
                         offset + lead, stripped)
