"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import collections
import itertools
import logging
import threading

import numpy as np

from ..utils.errors import AlgebraMismatch, DimensionTooLarge


logger = logging.getLogger(__name__)

MAX_REGULAR_DIM = 2000


class PresentedAlgebra(object):
    """
    Base class that all finite dimensional algebras with an explicit basis
    should inherit from.

    Basis elements are hashable keys with a deterministic order; products
    of basis elements are computed on demand by ``_multiply_keys`` and
    memoized.
    """
    def __init__(self, field):
        """
        Parameters
        ----------
        field: FieldSpec
            the coefficient field
        """
        if field is None:
            raise ValueError('The field parameter can not be None!')

        self.field = field
        self._basis = None
        self._index = None
        self._products = dict()
        self._lock = threading.Lock()
        self._words = None

    # --- to be provided by derived classes -------------------------------

    def _enumerate_basis(self):
        """
        Returns
        -------
        The list of basis keys in basis order.
        """
        raise NotImplementedError

    def _multiply_keys(self, x, y):
        """
        Returns
        -------
        A dict key -> raw coefficient for the product ``x . y``.
        """
        raise NotImplementedError

    def _one_key(self):
        """
        Returns
        -------
        The key of the unit, which is a basis element in all algebras here.
        """
        raise NotImplementedError

    def _generator_keys(self):
        """
        Returns
        -------
        An ordered dict name -> basis key of the algebra generators.
        """
        raise NotImplementedError

    def _involution_key(self, x):
        """
        Returns
        -------
        The key of the image of ``x`` under the anti-involution.
        """
        raise NotImplementedError

    def format_key(self, key):
        return str(key)

    # --- basis -----------------------------------------------------------

    @property
    def basis(self):
        if self._basis is None:
            self._basis = list(self._enumerate_basis())
            self._index = {key: i for i, key in enumerate(self._basis)}
        return self._basis

    @property
    def dim(self):
        return len(self.basis)

    def index(self, key):
        if self._index is None:
            self.basis
        return self._index[key]

    def element(self, terms):
        return AlgebraElement(self, terms)

    def basis_element(self, key, coefficient=None):
        coefficient = self.field.one if coefficient is None else coefficient
        return AlgebraElement(self, {key: coefficient})

    def zero(self):
        return AlgebraElement(self, {})

    def one(self):
        return self.basis_element(self._one_key())

    def generators(self):
        """
        Returns
        -------
        An ordered dict name -> AlgebraElement.
        """
        return collections.OrderedDict(
            (name, self.basis_element(key))
            for name, key in self._generator_keys().items())

    @property
    def generator_names(self):
        return list(self._generator_keys().keys())

    # --- products --------------------------------------------------------

    def multiply_basis(self, x, y):
        """
        Memoized structure constants of ``x . y``; safe for concurrent use.
        """
        pair = (x, y)
        result = self._products.get(pair)
        if result is None:
            result = self._multiply_keys(x, y)
            with self._lock:
                self._products.setdefault(pair, result)
        return result

    def multiply(self, x, y):
        """
        Bilinear extension of the basis products.

        Raises
        ------
        AlgebraMismatch
        """
        if x.algebra != self or y.algebra != self:
            raise AlgebraMismatch("Elements do not belong to {}".format(self))
        field = self.field
        terms = dict()
        for kx, cx in x.terms.items():
            for ky, cy in y.terms.items():
                coef = field.mul(cx, cy)
                for kz, cz in self.multiply_basis(kx, ky).items():
                    terms[kz] = field.add(terms.get(kz, field.zero),
                                          field.mul(coef, cz))
        return AlgebraElement(self, terms)

    def involution(self, x):
        return AlgebraElement(self, {self._involution_key(k): c
                                     for k, c in x.terms.items()})

    # --- coordinates -----------------------------------------------------

    def vector(self, x):
        out = self.field.zeros(self.dim)
        for k, c in x.terms.items():
            out[self.index(k)] = c
        return out

    def from_vector(self, vector):
        return AlgebraElement(self, {self.basis[i]: v
                                     for i, v in enumerate(vector) if v != 0})

    def left_multiplication_matrix(self, x):
        """
        Matrix ``L`` with ``vector(y) @ L == vector(x . y)``.
        """
        out = self.field.zeros(self.dim, self.dim)
        for i, key in enumerate(self.basis):
            out[i] = self.vector(self.multiply(x, self.basis_element(key)))
        return out

    def right_multiplication_matrix(self, x):
        """
        Matrix ``R`` with ``vector(y) @ R == vector(y . x)``.
        """
        out = self.field.zeros(self.dim, self.dim)
        for i, key in enumerate(self.basis):
            out[i] = self.vector(self.multiply(self.basis_element(key), x))
        return out

    # --- words -----------------------------------------------------------

    def word(self, key):
        """
        Shortest word in the generator names whose product is exactly the
        basis element ``key`` with coefficient one.
        """
        if self._words is None:
            self._words = self._breadth_first_words()
        return list(self._words[key])

    def _breadth_first_words(self):
        gens = self._generator_keys()
        one = self.field.one
        words = {self._one_key(): ()}
        queue = collections.deque([self._one_key()])
        while queue:
            key = queue.popleft()
            for name, g in gens.items():
                product = self.multiply_basis(key, g)
                if len(product) != 1:
                    continue
                (target, coef), = product.items()
                if coef != one or target in words:
                    continue
                words[target] = words[key] + (name,)
                queue.append(target)
        missing = [k for k in self.basis if k not in words]
        if missing:
            raise ValueError("Generators of {} do not reach {} basis elements"
                             .format(self, len(missing)))
        logger.debug("words for %d basis elements of %s", len(words), self)
        return words

    def word_product(self, names):
        gens = self.generators()
        out = self.one()
        for name in names:
            out = out * gens[name]
        return out

    # --- representations -------------------------------------------------

    def regular_representation(self):
        """
        Right regular module: for every generator ``g`` the matrix of
        ``b -> b . g`` in the basis order.

        Raises
        ------
        DimensionTooLarge
        """
        from ..modules.module_rep import ModuleRep

        if self.dim > MAX_REGULAR_DIM:
            raise DimensionTooLarge("dim {} = {} exceeds {}"
                                    .format(self, self.dim, MAX_REGULAR_DIM))
        actions = collections.OrderedDict(
            (name, self.right_multiplication_matrix(g))
            for name, g in self.generators().items())
        return ModuleRep(self, self.dim, actions)

    # --- structure checks ------------------------------------------------

    def _triples(self, exhaustive_limit, samples, seed):
        basis = self.basis
        if self.dim <= exhaustive_limit:
            return itertools.product(basis, repeat=3)
        rng = np.random.default_rng(seed)
        picks = rng.integers(0, self.dim, size=(samples, 3))
        return [tuple(basis[i] for i in row) for row in picks]

    def check_associativity(self, exhaustive_limit=50, samples=500, seed=0):
        """
        ``(x y) z == x (y z)`` on all basis triples up to ``exhaustive_limit``
        basis elements, on ``samples`` seeded random triples above.
        """
        for x, y, z in self._triples(exhaustive_limit, samples, seed):
            bx, by, bz = (self.basis_element(k) for k in (x, y, z))
            if (bx * by) * bz != bx * (by * bz):
                logger.warning("associativity fails on %s, %s, %s", x, y, z)
                return False
        return True

    def check_unit(self):
        one = self.one()
        for key in self.basis:
            b = self.basis_element(key)
            if one * b != b or b * one != b:
                return False
        return True

    def check_involution(self):
        """
        ``i(i(x)) == x`` and ``i(x y) == i(y) i(x)`` on all basis pairs.
        """
        for key in self.basis:
            if self._involution_key(self._involution_key(key)) != key:
                return False
        for x, y in itertools.product(self.basis, repeat=2):
            bx, by = self.basis_element(x), self.basis_element(y)
            if self.involution(bx * by) != \
                    self.involution(by) * self.involution(bx):
                return False
        return True


class AlgebraElement(object):
    """
    Finitely supported linear combination of basis keys; zero coefficients
    are never stored.
    """
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        field = algebra.field
        self.algebra = algebra
        self.terms = dict()
        for key, coef in dict(terms).items():
            coef = field.canonical(coef)
            if coef != 0:
                self.terms[key] = coef

    @property
    def field(self):
        return self.algebra.field

    def _same(self, other):
        if not isinstance(other, AlgebraElement) or \
                other.algebra != self.algebra:
            raise AlgebraMismatch("Elements do not belong to the same algebra")

    def __add__(self, other):
        self._same(other)
        field = self.field
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = field.add(terms.get(k, field.zero), c)
        return AlgebraElement(self.algebra, terms)

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: self.field.neg(c)
                                             for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        c = self.field.canonical(scalar)
        return AlgebraElement(self.algebra, {k: self.field.mul(c, v)
                                             for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def coefficient(self, key):
        return self.terms.get(key, self.field.zero)

    def support(self):
        return sorted(self.terms, key=self.algebra.index)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.field
        parts = []
        for key in self.support():
            coef = self.terms[key]
            text = self.algebra.format_key(key)
            if coef != field.one:
                text = "{} * {}".format(field.format(coef), text)
            parts.append(text)
        return " + ".join(parts)

    def __repr__(self):
        return "AlgebraElement({})".format(self)
