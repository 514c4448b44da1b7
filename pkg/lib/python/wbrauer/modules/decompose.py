"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Krull-Schmidt decomposition of modules into indecomposables.

A module is indecomposable with a split local endomorphism algebra when
``End / rad End`` is one dimensional. Otherwise a random endomorphism
whose minimal polynomial has two coprime factors ``q * r`` is found, and
``h = q(f)`` splits the module as ``ker h^N + im h^N`` (Fitting) with
``N >= dim``. Both parts are submodules, since ``h`` commutes with the
action, and the splitting recurses.
"""
import hashlib
import json
import logging
from fractions import Fraction

import numpy as np
import sympy

from ..coeffs.linalg import (EchelonBasis, inverse,
                             left_nullspace, row_space, solve_left, stack)
from ..utils.errors import DimensionTooLarge, NonSplitField
from .homs import ISOMORPHISM_TRIALS, end_algebra, is_isomorphic
from .module_rep import SubmoduleWitness
from .radical import jacobson_radical


logger = logging.getLogger(__name__)

MAX_DECOMPOSE_DIM = 600

_X = sympy.Symbol("x")


def _sympy_coefficient(field, raw):
    if field.is_rational:
        return sympy.Rational(raw.numerator, raw.denominator)
    return int(raw)


def _raw_coefficient(field, value):
    if field.is_rational:
        value = sympy.Rational(value)
        return Fraction(int(value.p), int(value.q))
    return field.canonical(int(value))


def to_poly(field, coefficients):
    """
    sympy Poly from raw coefficients, highest degree first.
    """
    coeffs = [_sympy_coefficient(field, c) for c in coefficients]
    if field.is_rational:
        return sympy.Poly(coeffs, _X, domain=sympy.QQ)
    return sympy.Poly(coeffs, _X, modulus=field.characteristic)


def from_poly(field, poly):
    return [_raw_coefficient(field, c) for c in poly.all_coeffs()]


def minimal_polynomial(field, f, algebra_basis):
    """
    Minimal polynomial of the matrix ``f`` from the first linear relation
    among its powers, read in the coordinates of an algebra containing
    them.

    Parameters
    ----------
    algebra_basis: EchelonBasis
        span of the flattened basis matrices of an algebra containing ``f``
        and the identity

    Returns
    -------
    Raw coefficients, highest degree first, monic.
    """
    n = f.shape[0]
    power = field.identity(n)
    coords = [algebra_basis.coordinates(power.reshape(-1))]
    while True:
        power = field.matmul(power, f)
        c = algebra_basis.coordinates(power.reshape(-1))
        x = solve_left(field, stack(field, coords, len(c)), c)
        if x is not None:
            # f^k = sum x_i f^i
            return [field.one] + [field.neg(v) for v in reversed(list(x))]
        coords.append(c)


def evaluate_polynomial(field, coefficients, f):
    n = f.shape[0]
    out = field.zeros(n, n)
    identity = field.identity(n)
    for c in coefficients:
        out = field.reduce(field.matmul(out, f) + c * identity)
    return out


def _power_at_least(field, h, n):
    exponent = 1
    while exponent < n:
        h = field.matmul(h, h)
        exponent *= 2
    return h


class Summand(object):
    """
    One isomorphism class of indecomposable summands.
    """
    def __init__(self, module, multiplicity, members, label=None):
        self.module = module
        self.multiplicity = multiplicity
        self.members = members
        self.label = label

    @property
    def dim(self):
        return self.module.dim

    def to_dict(self):
        out = {"dim": self.dim, "multiplicity": self.multiplicity}
        if self.label is not None:
            out["label"] = str(self.label)
        return out

    def __str__(self):
        name = self.label if self.label is not None else "summand"
        return "{} (dim {}) x{}".format(name, self.dim, self.multiplicity)


class DecompositionReport(object):
    """
    Indecomposable summands of a module together with the block
    diagonalizing change of basis.

    Attributes
    ----------
    pieces: list of (ModuleRep, basis)
        every indecomposable summand with its basis rows in the ambient
        coordinates, in certificate order
    summands: list of Summand
        isomorphism classes of the pieces, with multiplicities
    certificate: matrix
        the stacked piece bases; conjugating an action by it gives a block
        diagonal matrix
    """
    def __init__(self, module, pieces, summands, seed):
        self.module = module
        self.pieces = pieces
        self.summands = summands
        self.seed = seed
        field = module.field
        self.certificate = stack(field, [row for _, basis in pieces
                                         for row in basis], module.dim)

    @property
    def block_dims(self):
        return [piece.dim for piece, _ in self.pieces]

    def verify(self):
        """
        ``P A P^-1`` is block diagonal for every generator action and the
        piece dimensions add up.
        """
        field = self.module.field
        if sum(self.block_dims) != self.module.dim:
            return False
        if self.module.dim == 0:
            return True
        P = self.certificate
        P_inv = inverse(field, P)
        for A in self.module.actions.values():
            conjugated = field.matmul(field.matmul(P, A), P_inv)
            offset = 0
            for d in self.block_dims:
                outside = conjugated[offset:offset + d].copy()
                outside[:, offset:offset + d] = field.zero
                if not field.is_zero(outside):
                    return False
                offset += d
        return True

    def check_local(self):
        """
        Every piece has a split local endomorphism algebra.
        """
        for piece, _ in self.pieces:
            end = end_algebra(piece).basis
            if len(end) - jacobson_radical(piece.field, end).shape[0] != 1:
                return False
        return True

    def labels(self):
        return sorted(((str(s.label), s.multiplicity) for s in self.summands),
                      key=lambda item: item[0])

    def certificate_hash(self):
        field = self.module.field
        text = ";".join(",".join(field.format(v) for v in row)
                        for row in self.certificate)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def to_dict(self):
        return {
            "dim": self.module.dim,
            "field": str(self.module.field),
            "seed": self.seed,
            "summands": [s.to_dict() for s in self.summands],
            "certificate_hash": self.certificate_hash(),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __str__(self):
        return " + ".join(str(s) for s in self.summands) or "0"


def _flat_basis(field, matrices):
    echelon = EchelonBasis(field, matrices[0].size)
    for m in matrices:
        echelon.add(m.reshape(-1))
    return echelon


def _splitting(module, end_basis, rng, trials):
    """
    Find ``h`` in End(module) that is neither nilpotent nor invertible.

    Returns
    -------
    ``h`` or None, and whether a nonlinear irreducible factor was seen.
    """
    field = module.field
    flat = _flat_basis(field, end_basis)
    nonlinear = False
    for _ in range(trials):
        coefficients = [field.random_raw(rng) for _ in end_basis]
        f = field.zeros(module.dim, module.dim)
        for c, b in zip(coefficients, end_basis):
            f = field.reduce(f + c * b)
        minpoly = minimal_polynomial(field, f, flat)
        _, factors = to_poly(field, minpoly).factor_list()
        if any(q.degree() > 1 for q, _ in factors):
            nonlinear = True
        if len(factors) < 2:
            continue
        q, multiplicity = factors[0]
        q_coefficients = from_poly(field, q ** multiplicity)
        return evaluate_polynomial(field, q_coefficients, f), nonlinear
    return None, nonlinear


def _split(module, embedding, rng, pieces, trials):
    field = module.field
    if module.dim == 0:
        return
    end = end_algebra(module).basis
    radical = jacobson_radical(field, end)
    top = len(end) - radical.shape[0]
    if top == 1:
        pieces.append((module, embedding))
        return
    h, nonlinear = _splitting(module, end, rng, trials)
    if h is None:
        raise NonSplitField(
            "End({}) has a {}-dimensional semisimple quotient that does not "
            "split over {}{}".format(
                module, top, field,
                " (irreducible factors of degree > 1 found)"
                if nonlinear else ""))
    H = _power_at_least(field, h, module.dim)
    for part in (left_nullspace(field, H), row_space(field, H)):
        echelon = EchelonBasis(field, module.dim)
        echelon.extend(part)
        sub = SubmoduleWitness(module, echelon)
        logger.debug("Fitting split of %s: dim %d", module, sub.dim)
        _split(sub.module(), field.matmul(sub.basis, embedding), rng,
               pieces, trials)


def decompose(module, seed=0, labeler=None, trials=ISOMORPHISM_TRIALS):
    """
    Decompose ``module`` into indecomposables.

    Parameters
    ----------
    module: ModuleRep
    seed: int
        seed of every random choice; reports are deterministic given it
    labeler: callable or None
        maps an indecomposable ModuleRep to a label, or None if unknown

    Returns
    -------
    DecompositionReport

    Raises
    ------
    DimensionTooLarge; NonSplitField
    """
    if module.dim > MAX_DECOMPOSE_DIM:
        raise DimensionTooLarge("dim {} exceeds the decomposition guard {}"
                                .format(module.dim, MAX_DECOMPOSE_DIM))
    field = module.field
    rng = np.random.default_rng(seed)
    leaves = []
    _split(module, field.identity(module.dim), rng, leaves, trials)

    classes = []
    for i, (leaf, _) in enumerate(leaves):
        for members in classes:
            representative = leaves[members[0]][0]
            if representative.dim == leaf.dim and \
                    is_isomorphic(representative, leaf, seed=seed)[0]:
                members.append(i)
                break
        else:
            classes.append([i])

    pieces = []
    summands = []
    for members in classes:
        representative = leaves[members[0]][0]
        label = labeler(representative) if labeler is not None else None
        positions = list(range(len(pieces), len(pieces) + len(members)))
        summands.append(Summand(representative, len(members), positions,
                                label))
        pieces.extend(leaves[i] for i in members)
    logger.info("decomposed %s into %d pieces in %d classes", module,
                len(leaves), len(classes))
    return DecompositionReport(module, pieces, summands, seed)
