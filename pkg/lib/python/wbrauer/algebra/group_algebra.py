"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
from ..symgrp.groups import ProductGroup, SymmetricGroup
from .base_algebra import PresentedAlgebra


class GroupAlgebra(PresentedAlgebra):
    """
    Group algebra ``K S_a`` or ``K S_{a,b}`` with the group elements as
    basis, in lexicographic order, and the involution ``g -> g^-1``.
    """
    def __init__(self, group, field):
        """
        Parameters
        ----------
        group: SymmetricGroup or ProductGroup
        field: FieldSpec
        """
        super().__init__(field)
        if group is None:
            raise ValueError('The group parameter can not be None!')
        self.group = group

    @classmethod
    def symmetric(cls, a, field):
        return cls(SymmetricGroup(a), field)

    @classmethod
    def product(cls, a, b, field):
        return cls(ProductGroup(a, b), field)

    def _enumerate_basis(self):
        return self.group.elements()

    def _multiply_keys(self, x, y):
        return {x * y: self.field.one}

    def _one_key(self):
        return self.group.identity()

    def _generator_keys(self):
        return self.group.generators()

    def _involution_key(self, x):
        return x.inverse()

    def __eq__(self, other):
        return isinstance(other, GroupAlgebra) and \
            self.group == other.group and self.field == other.field

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group, self.field))

    def __str__(self):
        return "{}{}".format(self.field, self.group)

    __repr__ = __str__
