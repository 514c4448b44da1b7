"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Tableaux and tabloids. Permutations act from the right: for a filling
``t`` and ``sigma`` given by its 1-based image list, ``t . sigma`` replaces
every entry ``i`` by ``sigma(i)``.
"""
import itertools

from .partitions import Composition, Partition


def _images(perm):
    # symgrp Permutations expose ``images``, plain sequences work too
    return tuple(getattr(perm, "images", perm))


class Tabloid(object):
    """
    Row equivalence class of a filling of a composition shape.
    Rows are stored sorted, which makes the representation canonical.
    """
    def __init__(self, shape, rows):
        """
        Parameters
        ----------
        shape: Composition
        rows: iterable of iterables of int
            row ``i`` holds ``shape[i]`` entries, together ``1..n``
        """
        if not isinstance(shape, Composition):
            shape = Composition(shape)
        rows = tuple(tuple(sorted(int(x) for x in row)) for row in rows)
        if tuple(len(row) for row in rows) != shape.parts:
            raise ValueError("Rows {} do not fit the shape {}"
                             .format(rows, shape))
        entries = sorted(itertools.chain.from_iterable(rows))
        if entries != list(range(1, shape.size + 1)):
            raise ValueError("Rows {} do not partition 1..{}"
                             .format(rows, shape.size))
        self.shape = shape
        self.rows = rows

    def act(self, perm):
        """
        Right action of a permutation on the entries.
        """
        images = _images(perm)
        return Tabloid(self.shape,
                       [[images[x - 1] for x in row] for row in self.rows])

    def row_of(self):
        """
        Map entry -> index of its row.
        """
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def __eq__(self, other):
        return isinstance(other, Tabloid) and self.rows == other.rows and \
            self.shape == other.shape

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "{" + " | ".join(" ".join(str(x) for x in row)
                                for row in self.rows) + "}"

    __repr__ = __str__


def _tabloid_rows(remaining, parts):
    if not parts:
        yield ()
        return
    for row in itertools.combinations(remaining, parts[0]):
        rest = [x for x in remaining if x not in row]
        for tail in _tabloid_rows(rest, parts[1:]):
            yield (row,) + tail


def tabloids(shape):
    """
    All tabloids of a partition or composition shape.

    Returns
    -------
    A list of Tabloid of length ``n! / prod(shape_i!)``; rows are chosen
    in lexicographic order of combinations, first row first.
    """
    if not isinstance(shape, Composition):
        shape = Composition(shape)
    entries = list(range(1, shape.size + 1))
    return [Tabloid(shape, rows)
            for rows in _tabloid_rows(entries, shape.parts)]


class Tableau(object):
    """
    Bijective filling of a Young diagram by ``1..n``.
    """
    def __init__(self, shape, rows):
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if tuple(len(row) for row in rows) != shape.parts:
            raise ValueError("Rows {} do not fit the shape {}"
                             .format(rows, shape))
        if sorted(itertools.chain.from_iterable(rows)) != \
                list(range(1, shape.size + 1)):
            raise ValueError("Rows {} are not a filling by 1..{}"
                             .format(rows, shape.size))
        self.shape = shape
        self.rows = rows

    @property
    def columns(self):
        if not self.rows:
            return ()
        return tuple(tuple(row[j] for row in self.rows if len(row) > j)
                     for j in range(len(self.rows[0])))

    def tabloid(self):
        return Tabloid(self.shape, self.rows)

    def act(self, perm):
        images = _images(perm)
        return Tableau(self.shape,
                       [[images[x - 1] for x in row] for row in self.rows])

    def is_standard(self):
        rows_ok = all(a < b for row in self.rows for a, b in zip(row, row[1:]))
        cols_ok = all(a < b for col in self.columns
                      for a, b in zip(col, col[1:]))
        return rows_ok and cols_ok

    def column_permutations(self):
        """
        All elements of the column stabilizer as (images, sign) pairs.
        """
        n = self.shape.size
        per_column = []
        for col in self.columns:
            options = []
            for perm in itertools.permutations(col):
                inversions = sum(1 for i, j in
                                 itertools.combinations(range(len(perm)), 2)
                                 if perm[i] > perm[j])
                options.append((dict(zip(col, perm)),
                                -1 if inversions % 2 else 1))
            per_column.append(options)
        out = []
        for choice in itertools.product(*per_column):
            images = list(range(1, n + 1))
            sign = 1
            for mapping, s in choice:
                for x, y in mapping.items():
                    images[x - 1] = y
                sign *= s
            out.append((tuple(images), sign))
        return out

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "/".join(" ".join(str(x) for x in row) for row in self.rows)

    __repr__ = __str__


def initial_tableau(shape):
    """
    The tableau filled row by row with ``1..n``.
    """
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    entries = iter(range(1, shape.size + 1))
    return Tableau(shape, [[next(entries) for _ in range(p)] for p in shape])


def _standard_fillings(shape, rows, k):
    n = shape.size
    if k > n:
        yield tuple(tuple(row) for row in rows)
        return
    for i, part in enumerate(shape):
        if len(rows[i]) < part and (i == 0 or len(rows[i - 1]) > len(rows[i])):
            rows[i].append(k)
            yield from _standard_fillings(shape, rows, k + 1)
            rows[i].pop()


def standard_tableaux(shape):
    """
    All standard tableaux of a partition, enumerated by placing ``1..n``
    in turn; the first one is ``initial_tableau(shape)``.
    """
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    return [Tableau(shape, rows) for rows in
            _standard_fillings(shape, [[] for _ in shape], 1)]


def standard_tableaux_count(shape):
    return len(standard_tableaux(shape))
