"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

The poset ``Lambda`` of labels ``(l, (lambda, mu))`` indexing cell,
permutation and Young modules of ``B_{r,t}``.
"""
import re

from ..combinat.partitions import (Bipartition, bipartitions_of,
                                   parse_bipartition)
from ..utils.errors import LayerOutOfRange, ParseError, ShapeMismatch


_LABEL = re.compile(r"\s*(\d+)\s*:")


class LambdaLabel(object):
    """
    ``(l, (lambda, mu))`` with ``(lambda, mu)`` in ``Lambda_{r-l,t-l}``.
    """
    def __init__(self, l, shape):
        if shape is None:
            raise ValueError('The shape parameter can not be None!')
        self.l = int(l)
        self.shape = shape if isinstance(shape, Bipartition) \
            else Bipartition(*shape)

    @property
    def sizes(self):
        return self.shape.sizes

    def check(self, algebra):
        """
        Raises
        ------
        LayerOutOfRange; ShapeMismatch unless the shape sizes are
        ``(r-l, t-l)``.
        """
        if not 0 <= self.l <= algebra.s:
            raise LayerOutOfRange("Layer {} outside 0..{} for {}"
                                  .format(self.l, algebra.s, algebra))
        expected = (algebra.r - self.l, algebra.t - self.l)
        if self.sizes != expected:
            raise ShapeMismatch("{} is not a bipartition of {}"
                                .format(self.shape, expected))
        return self

    def to_dict(self):
        return {"l": self.l,
                "lambda": list(self.shape.left.parts),
                "mu": list(self.shape.right.parts)}

    def __eq__(self, other):
        return isinstance(other, LambdaLabel) and \
            self.l == other.l and self.shape == other.shape

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.l, self.shape))

    def __str__(self):
        return "{}:{}".format(self.l, self.shape)

    def __repr__(self):
        return "LambdaLabel({})".format(self)


def parse_label(text):
    """
    Parse ``l:(p1,p2,...|q1,q2,...)``.

    Raises
    ------
    ParseError with the offset of the offending token.
    """
    match = _LABEL.match(text)
    if match is None:
        raise ParseError("Label must start with 'l:'", 0, text[:1] or None)
    return LambdaLabel(int(match.group(1)),
                       parse_bipartition(text[match.end():], match.end()))


def lambda_leq(x, y):
    """
    ``(l,(lambda,mu)) <= (m,(lambda',mu'))`` iff ``m < l``, or ``m = l`` and
    ``(lambda,mu)`` dominates ``(lambda',mu')``.

    Raises
    ------
    ShapeMismatch for labels of different walled shapes.
    """
    if x.l + x.sizes[0] != y.l + y.sizes[0] or \
            x.sizes[0] - x.sizes[1] != y.sizes[0] - y.sizes[1]:
        raise ShapeMismatch("{} and {} belong to different algebras"
                            .format(x, y))
    if y.l < x.l:
        return True
    return y.l == x.l and x.shape.dominates(y.shape)


def label_order_key(label):
    """
    Deterministic processing order: layer descending, then the reverse
    lexicographic order of the shapes.
    """
    a, b = label.sizes
    return (-label.l, bipartitions_of(a, b).index(label.shape))


def labels_of(algebra):
    """
    All labels of layers that carry an idempotent, in processing order.
    """
    out = []
    for l in algebra.valid_layers():
        out.extend(LambdaLabel(l, shape) for shape in
                   bipartitions_of(algebra.r - l, algebra.t - l))
    return sorted(out, key=label_order_key)


def require_layer(algebra, l):
    """
    Raises
    ------
    LayerOutOfRange; NotCellularlyStratified if layer ``l`` has no
    idempotent.
    """
    algebra.idempotent_diagram(l)
    return l
