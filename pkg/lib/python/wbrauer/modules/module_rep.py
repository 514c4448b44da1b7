"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Right modules over a PresentedAlgebra, given by one exact matrix per named
generator. A vector ``v`` is acted on by ``v @ A``; for a word
``g1 g2 ... gk`` the matrix is ``A1 @ A2 @ ... @ Ak``.
"""
import collections
import itertools
import logging

import numpy as np

from ..algebra.base_algebra import AlgebraElement
from ..algebra.group_algebra import GroupAlgebra
from ..coeffs.linalg import EchelonBasis, as_matrix, as_vector
from ..utils.errors import (ActionsIncompatible, AlgebraMismatch,
                            NotInvariant, ShapeMismatch)


logger = logging.getLogger(__name__)


class ModuleRep(object):
    """
    Finite dimensional right module over ``algebra``.
    """
    def __init__(self, algebra, dim, actions, name=None):
        """
        Parameters
        ----------
        algebra: PresentedAlgebra
        dim: int
        actions: dict
            generator name -> ``dim x dim`` matrix, for every generator of
            ``algebra``
        name: string or None
            used in log messages and reports
        """
        if algebra is None:
            raise ValueError('The algebra parameter can not be None!')
        if actions is None:
            raise ValueError('The actions parameter can not be None!')

        self.algebra = algebra
        self.dim = int(dim)
        self.name = name
        names = algebra.generator_names
        if set(actions) != set(names):
            raise ActionsIncompatible(
                "Actions given for {} but {} has generators {}"
                .format(sorted(actions), algebra, names))
        self.actions = collections.OrderedDict()
        for gen in names:
            matrix = as_matrix(self.field, actions[gen], cols=self.dim) \
                if self.dim else self.field.zeros(0, 0)
            if matrix.shape != (self.dim, self.dim):
                raise ShapeMismatch(
                    "Action of {} has shape {}, expected {}"
                    .format(gen, matrix.shape, (self.dim, self.dim)))
            self.actions[gen] = matrix
        self._key_matrices = dict()

    @property
    def field(self):
        return self.algebra.field

    @property
    def generator_names(self):
        return list(self.actions.keys())

    def action(self, name):
        return self.actions[name]

    def __str__(self):
        label = self.name or "module"
        return "{} of dim {} over {}".format(label, self.dim, self.algebra)

    __repr__ = __str__

    # --- acting with algebra elements ------------------------------------

    def key_matrix(self, key):
        """
        Matrix of a basis element, built from its word in the generators.
        """
        matrix = self._key_matrices.get(key)
        if matrix is None:
            matrix = self.field.identity(self.dim)
            for name in self.algebra.word(key):
                matrix = self.field.matmul(matrix, self.actions[name])
            self._key_matrices[key] = matrix
        return matrix

    def act_matrix(self, element):
        """
        Matrix of an AlgebraElement (or a basis key) on this module.

        Raises
        ------
        AlgebraMismatch
        """
        if not isinstance(element, AlgebraElement):
            return self.key_matrix(element)
        if element.algebra is not self.algebra and \
                element.algebra != self.algebra:
            raise AlgebraMismatch("{} does not act on {}"
                                  .format(element.algebra, self))
        field = self.field
        out = field.zeros(self.dim, self.dim)
        for key, coef in element.terms.items():
            out = field.reduce(out + coef * self.key_matrix(key))
        return out

    def act(self, vector, element):
        return self.field.matmul(as_vector(self.field, vector),
                                 self.act_matrix(element))

    def character(self, keys=None):
        """
        Trace of every basis element (or of ``keys``), as raw values.
        """
        field = self.field
        if keys is None:
            keys = self.algebra.basis
        return [field.canonical(sum(self.key_matrix(key).diagonal(),
                                    field.zero))
                for key in keys]

    # --- checks ----------------------------------------------------------

    def check_relations(self, exhaustive_limit=30, samples=200, seed=0):
        """
        ``A(x) @ A(y) == A(x . y)`` on basis pairs: all of them up to
        ``exhaustive_limit`` basis elements, a seeded sample above.
        """
        algebra = self.algebra
        basis = algebra.basis
        if len(basis) <= exhaustive_limit:
            pairs = itertools.product(basis, repeat=2)
        else:
            rng = np.random.default_rng(seed)
            picks = rng.integers(0, len(basis), size=(samples, 2))
            pairs = [(basis[i], basis[j]) for i, j in picks]
        field = self.field
        for x, y in pairs:
            product = algebra.basis_element(x) * algebra.basis_element(y)
            lhs = field.matmul(self.key_matrix(x), self.key_matrix(y))
            if not np.array_equal(lhs, self.act_matrix(product)):
                logger.warning("%s violates the relation for %s . %s",
                               self, x, y)
                return False
        return True

    # --- constructions ---------------------------------------------------

    def dual(self):
        """
        Dual module, ``(f . a)(v) = f(v . i(a))`` for the involution ``i``.
        """
        actions = collections.OrderedDict()
        for gen, element in self.algebra.generators().items():
            image = self.algebra.involution(element)
            actions[gen] = self.act_matrix(image).T.copy()
        return ModuleRep(self.algebra, self.dim, actions,
                         name="dual({})".format(self.name or "module"))

    def twist(self, scalars, name=None):
        """
        Same space with every generator action multiplied by a scalar.

        Parameters
        ----------
        scalars: dict
            generator name -> raw scalar (e.g. the sign character)
        """
        field = self.field
        actions = collections.OrderedDict(
            (gen, field.reduce(field.canonical(scalars[gen]) * A))
            for gen, A in self.actions.items())
        return ModuleRep(self.algebra, self.dim, actions, name=name)

    def pullback(self, algebra, images, name=None):
        """
        Module over ``algebra`` through a homomorphism into this algebra.

        Parameters
        ----------
        images: dict
            generator name of ``algebra`` -> AlgebraElement of
            ``self.algebra``
        """
        actions = collections.OrderedDict(
            (gen, self.act_matrix(images[gen]))
            for gen in algebra.generator_names)
        return ModuleRep(algebra, self.dim, actions, name=name)

    def submodule_generated(self, vectors):
        return submodule_generated(self, vectors)

    def quotient(self, sub):
        return quotient(self, sub)

    def restrict(self, sub):
        """
        The submodule spanned by a SubmoduleWitness, in its echelon basis.
        """
        return sub.module()


class SubmoduleWitness(object):
    """
    Invariant subspace of a ModuleRep with its echelon basis.
    """
    def __init__(self, ambient, echelon):
        self.ambient = ambient
        self.echelon = echelon
        self._module = None

    @property
    def dim(self):
        return self.echelon.dim

    @property
    def basis(self):
        return self.echelon.basis

    def contains(self, vector):
        return self.echelon.contains(vector)

    def is_invariant(self):
        field = self.ambient.field
        for A in self.ambient.actions.values():
            for row in self.echelon.rows:
                if not self.contains(field.matmul(row, A)):
                    return False
        return True

    def module(self, name=None):
        """
        The induced module on the span, acting on echelon coordinates.
        """
        if self._module is None:
            ambient = self.ambient
            field = ambient.field
            actions = collections.OrderedDict()
            for gen, A in ambient.actions.items():
                rows = [self.echelon.coordinates(field.matmul(row, A))
                        for row in self.echelon.rows]
                actions[gen] = as_matrix(field, rows, cols=self.dim) \
                    if rows else field.zeros(0, 0)
            self._module = ModuleRep(ambient.algebra, self.dim, actions,
                                     name=name)
        return self._module

    def __str__(self):
        return "submodule of dim {} in {}".format(self.dim, self.ambient)


def submodule_generated(module, vectors):
    """
    Smallest submodule containing ``vectors``, by spinning under the
    generator actions.

    Returns
    -------
    SubmoduleWitness
    """
    field = module.field
    echelon = EchelonBasis(field, module.dim)
    queue = collections.deque()
    for v in vectors:
        v = as_vector(field, v)
        if echelon.add(v):
            queue.append(v)
    while queue:
        v = queue.popleft()
        for A in module.actions.values():
            w = field.matmul(v, A)
            if echelon.add(w):
                queue.append(w)
    logger.debug("spun a submodule of dim %d in %s", echelon.dim, module)
    return SubmoduleWitness(module, echelon)


def span_submodule(module, vectors):
    """
    Wrap the span of ``vectors`` as a submodule.

    Raises
    ------
    NotInvariant if the span is not closed under the generators.
    """
    echelon = EchelonBasis(module.field, module.dim)
    echelon.extend(as_vector(module.field, v) for v in vectors)
    sub = SubmoduleWitness(module, echelon)
    if not sub.is_invariant():
        raise NotInvariant("Span of dim {} is not a submodule of {}"
                           .format(echelon.dim, module))
    return sub


def quotient(module, sub, name=None):
    """
    ``module / sub`` on the non-pivot coordinates of the echelon basis.

    Parameters
    ----------
    sub: SubmoduleWitness or list of vectors

    Raises
    ------
    NotInvariant
    """
    if not isinstance(sub, SubmoduleWitness):
        sub = span_submodule(module, sub)
    elif not sub.is_invariant():
        raise NotInvariant("{} is not invariant".format(sub))
    field = module.field
    pivots = set(sub.echelon.pivots)
    complement = [c for c in range(module.dim) if c not in pivots]
    actions = collections.OrderedDict()
    for gen, A in module.actions.items():
        rows = [sub.echelon.reduce(A[c])[complement] for c in complement]
        actions[gen] = as_matrix(field, rows, cols=len(complement)) \
            if rows else field.zeros(0, 0)
    return ModuleRep(module.algebra, len(complement), actions, name=name)


def quotient_map(module, sub):
    """
    Matrix of the projection ``module -> module / sub`` in the coordinates
    used by ``quotient``.
    """
    field = module.field
    pivots = set(sub.echelon.pivots)
    complement = [c for c in range(module.dim) if c not in pivots]
    rows = [sub.echelon.reduce(field.identity(module.dim)[i])[complement]
            for i in range(module.dim)]
    return as_matrix(field, rows, cols=len(complement)) if rows \
        else field.zeros(0, len(complement))


def character_mismatches(module, pieces):
    """
    Basis elements on which ``module`` and the sum of its pieces have
    different traces.

    Parameters
    ----------
    module: ModuleRep
    pieces: iterable of (int, ModuleRep)
        multiplicity and module of every piece

    Returns
    -------
    list of basis keys, empty if the characters agree
    """
    field = module.field
    keys = module.algebra.basis
    total = [field.zero] * len(keys)
    for multiplicity, piece in pieces:
        total = [field.canonical(a + multiplicity * b)
                 for a, b in zip(total, piece.character(keys))]
    return [key for key, a, b in zip(keys, module.character(keys), total)
            if a != b]


def zero_module(algebra):
    actions = collections.OrderedDict(
        (gen, algebra.field.zeros(0, 0)) for gen in algebra.generator_names)
    return ModuleRep(algebra, 0, actions, name="0")


def direct_sum(*modules):
    """
    Block diagonal direct sum; the summands keep their order.
    """
    if not modules:
        raise ValueError('The modules parameter can not be empty!')
    algebra = modules[0].algebra
    for m in modules[1:]:
        if m.algebra != algebra:
            raise AlgebraMismatch("Direct sum over {} and {}"
                                  .format(algebra, m.algebra))
    field = algebra.field
    dim = sum(m.dim for m in modules)
    actions = collections.OrderedDict()
    for gen in algebra.generator_names:
        out = field.zeros(dim, dim)
        offset = 0
        for m in modules:
            out[offset:offset + m.dim, offset:offset + m.dim] = m.actions[gen]
            offset += m.dim
        actions[gen] = out
    return ModuleRep(algebra, dim, actions, name=" + ".join(
        m.name or "module" for m in modules))


def kron(field, a, b):
    return field.reduce(np.kron(a, b))


def outer_tensor(left, right, algebra=None, name=None):
    """
    ``left`` boxtimes ``right`` for modules over ``K S_a`` and ``K S_b``, a
    module over ``K S_{a,b}``. The basis is ordered left index major.
    """
    field = left.field
    if right.field != field:
        raise AlgebraMismatch("Outer tensor over {} and {}"
                              .format(field, right.field))
    a = left.algebra.group.degree
    b = right.algebra.group.degree
    if algebra is None:
        algebra = GroupAlgebra.product(a, b, field)
    eye_left = field.identity(left.dim)
    eye_right = field.identity(right.dim)
    actions = collections.OrderedDict()
    for gen in algebra.generator_names:
        i = int(gen[1:])
        if i < a:
            actions[gen] = kron(field, left.actions[gen], eye_right)
        else:
            actions[gen] = kron(field, eye_left,
                                right.actions["s{}".format(i - a)])
    return ModuleRep(algebra, left.dim * right.dim, actions, name=name)


class Bimodule(object):
    """
    Vector space with a left action of one algebra and a right action of
    another. Left actions are stored as matrices ``L`` with
    ``vector(a . x) == vector(x) @ L[a]``.
    """
    def __init__(self, left_algebra, right_algebra, dim, left_actions,
                 right_actions, name=None):
        if left_algebra is None or right_algebra is None:
            raise ValueError('The algebra parameters can not be None!')
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.name = name
        field = right_algebra.field
        self.left_actions = collections.OrderedDict(
            (gen, as_matrix(field, left_actions[gen], cols=dim))
            for gen in left_algebra.generator_names)
        self.right_actions = collections.OrderedDict(
            (gen, as_matrix(field, right_actions[gen], cols=dim))
            for gen in right_algebra.generator_names)

    @property
    def field(self):
        return self.right_algebra.field

    def check_compatible(self):
        """
        Left and right generator actions commute.

        Raises
        ------
        ActionsIncompatible
        """
        field = self.field
        for (a, L), (b, R) in itertools.product(self.left_actions.items(),
                                                self.right_actions.items()):
            if not np.array_equal(field.matmul(L, R), field.matmul(R, L)):
                raise ActionsIncompatible(
                    "Left action of {} and right action of {} do not commute"
                    " on {}".format(a, b, self.name or "bimodule"))
        return True

    def as_right_module(self, name=None):
        return ModuleRep(self.right_algebra, self.dim, self.right_actions,
                         name=name or self.name)

    def as_left_module(self, name=None):
        """
        The left action turned into a right module through the involution;
        for group algebras ``x . g = g^-1 . x``.
        """
        actions = collections.OrderedDict()
        algebra = self.left_algebra
        field = self.field
        for gen, element in algebra.generators().items():
            image = algebra.involution(element)
            matrix = field.zeros(self.dim, self.dim)
            for key, coef in image.terms.items():
                term = field.identity(self.dim)
                for letter in reversed(algebra.word(key)):
                    term = field.matmul(term, self.left_actions[letter])
                matrix = field.reduce(matrix + coef * term)
            actions[gen] = matrix
        return ModuleRep(algebra, self.dim, actions, name=name or self.name)

    def __str__(self):
        return "{} of dim {}: {} x {}".format(
            self.name or "bimodule", self.dim, self.left_algebra,
            self.right_algebra)
