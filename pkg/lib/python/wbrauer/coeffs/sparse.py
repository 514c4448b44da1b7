"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Sparse rows (``dict`` column -> nonzero raw value) and an incremental
echelon form over them. Used where ambient spaces get large but vectors
stay short: relation spans of tensor products and the quotients by them.
"""
import heapq

import numpy as np


def sparse_from_dense(vector):
    return {int(c): v for c, v in enumerate(vector) if v != 0}


def sparse_to_dense(field, row, n):
    out = field.zeros(n)
    for c, v in row.items():
        out[c] = v
    return out


def iadd_coef(field, row, coef, other):
    """
    ``row += coef * other`` in place; zero entries are dropped.
    """
    if coef == 0:
        return row
    for k, x in other.items():
        value = field.add(row.get(k, field.zero), field.mul(coef, x))
        if value == 0:
            row.pop(k, None)
        else:
            row[k] = value
    return row


class SparseEchelon(object):
    """
    Echelon form of a span of sparse rows.

    Every stored row is normalized to a leading one in its pivot column and
    contains no column smaller than that pivot. Reducing a vector eliminates
    all pivot columns, so the residue lives on the non-pivot columns and
    directly gives coordinates in the quotient space.
    """
    def __init__(self, field, n):
        if field is None:
            raise ValueError('The field parameter can not be None!')
        self.field = field
        self.n = n
        self.rows = dict()

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vector):
        """
        Residue of a sparse vector modulo the span; a new dict.
        """
        field = self.field
        vec = dict(vector)
        heap = [c for c in vec if c in self.rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = vec.get(c)
            if not coef:
                continue
            for k, x in self.rows[c].items():
                value = field.sub(vec.get(k, field.zero), field.mul(coef, x))
                if value == 0:
                    vec.pop(k, None)
                else:
                    if k not in vec and k in self.rows:
                        heapq.heappush(heap, k)
                    vec[k] = value
        return vec

    def add(self, vector):
        """
        Returns
        -------
        True if the rank grew.
        """
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = min(residue)
        inv = self.field.inv(residue[pivot])
        self.rows[pivot] = {k: self.field.mul(inv, x)
                            for k, x in residue.items()}
        return True

    def extend(self, vectors):
        for v in vectors:
            self.add(v)
        return self

    def contains(self, vector):
        return not self.reduce(vector)

    def coordinates(self, vector):
        """
        Coefficients of a contained sparse vector on the stored rows.

        Returns
        -------
        dict pivot -> coefficient

        Raises
        ------
        ValueError if the vector is not in the span.
        """
        field = self.field
        vec = dict(vector)
        coords = dict()
        heap = [c for c in vec if c in self.rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = vec.get(c)
            if not coef or c in coords:
                continue
            coords[c] = coef
            iadd_coef(field, vec, field.neg(coef), self.rows[c])
            heap.extend(k for k in vec if k in self.rows and k not in coords)
            heapq.heapify(heap)
        if vec:
            raise ValueError("Vector is not contained in the span")
        return coords

    @property
    def pivots(self):
        return sorted(self.rows)

    def complement(self):
        """
        Non-pivot columns, in increasing order: a basis of the quotient.
        """
        pivots = self.rows
        return [c for c in range(self.n) if c not in pivots]

    def quotient_coordinates(self, vector, complement_index):
        """
        Dense coordinates of the class of ``vector`` in the quotient.

        Parameters
        ----------
        vector: dict
            sparse vector of the ambient space
        complement_index: dict
            maps each non-pivot column to its position in the quotient basis
        """
        out = self.field.zeros(len(complement_index))
        for c, v in self.reduce(vector).items():
            out[complement_index[c]] = v
        return out

    def to_dense(self):
        rows = [sparse_to_dense(self.field, self.rows[p], self.n)
                for p in self.pivots]
        if not rows:
            return self.field.zeros(0, self.n)
        return np.vstack(rows)
