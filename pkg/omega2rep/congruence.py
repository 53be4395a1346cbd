# -*- coding: utf-8 -*-
"""
Congruences of finite algebras: closure, quotients and factorization of
maps through the natural projection
"""
from dataclasses import dataclass

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from . import utils
from .algebra import FiniteAlgebra, Mapping, _image_table
from .utils import (Verdict, DimensionMismatch, NotACongruence,
                    KernelTooSmall)


@dataclass(frozen=True, eq=False)
class Congruence:
    """
    Partition of {0, ..., n-1} given by a representative array

    Parameters
    ----------
    rep : array_like of int
        rep[x] is the least element of the class of x

    Notes
    -----
    Classes are numbered 0, 1, ... in increasing order of their least
    member; `class_index` maps elements to these numbers and
    `representatives` lists the least member of each class.
    """
    rep: np.ndarray

    def __post_init__(self):
        rep = utils.freeze(self.rep)
        if rep.ndim != 1 or len(rep) == 0:
            raise DimensionMismatch("rep must be a nonempty 1-d array")
        if np.any((rep < 0) | (rep > np.arange(len(rep)))) \
                or not np.array_equal(rep[rep], rep):
            raise ValueError("rep does not describe a partition by least "
                             "representatives")
        object.__setattr__(self, 'rep', rep)

    @classmethod
    def discrete(cls, n):
        return cls(np.arange(n))

    @classmethod
    def from_classes(cls, n, classes):
        """
        Partition from a list of disjoint blocks; elements not listed are
        singletons

        Raises
        ------
        DimensionMismatch
            a member outside {0, ..., n-1}, witness the member
        AlgebraError
            a member listed twice, witness the member
        """
        rep = np.arange(n)
        seen = set()
        for block in classes:
            block = [int(x) for x in block]
            for x in block:
                if not 0 <= x < n:
                    raise DimensionMismatch(
                        f"class member {x} outside a carrier of {n} "
                        f"elements", witness=x)
                if x in seen:
                    raise utils.AlgebraError(
                        f"element {x} is listed twice", witness=x)
                seen.add(x)
            if block:
                rep[block] = min(block)
        return cls(rep)

    @classmethod
    def from_disjoint_set(cls, ds, n):
        rep = np.arange(n)
        for block in ds.subsets():
            block = sorted(block)
            rep[block] = block[0]
        return cls(rep)

    @property
    def carrier_size(self):
        return len(self.rep)

    @property
    def representatives(self):
        return np.flatnonzero(self.rep == np.arange(self.carrier_size))

    @property
    def n_classes(self):
        return len(self.representatives)

    @property
    def class_index(self):
        return np.searchsorted(self.representatives, self.rep)

    @property
    def classes(self):
        return [np.flatnonzero(self.rep == r).tolist()
                for r in self.representatives]

    def equivalent(self, x, y):
        return self.rep[x] == self.rep[y]

    def pairs(self):
        """
        Generating pairs (rep[x], x) for every non-representative x
        """
        return [(int(self.rep[x]), x) for x in range(self.carrier_size)
                if self.rep[x] != x]

    def refines(self, other):
        """
        True if every class of self lies inside a class of other
        """
        return np.array_equal(other.rep[self.rep], other.rep)

    def projection(self):
        """
        Natural projection nat N onto the class numbers
        """
        return Mapping(self.class_index, self.n_classes)

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return np.array_equal(self.rep, other.rep)

    def __hash__(self):
        return hash(self.rep.tobytes())

    def __repr__(self):
        return f"Congruence({self.classes})"


def congruence_closure(alg, pairs=(), transformations=()):
    """
    Least congruence containing `pairs` and coordinated with every
    transformation

    Operation-compatibility merges and transformation-compatibility merges
    are interleaved until a full pass over all operations and
    transformations makes no merge.

    Parameters
    ----------
    alg : FiniteAlgebra
        algebra
    pairs : iterable of (int, int)
        seed pairs
    transformations : iterable of Mapping
        self-maps of the carrier the congruence must be coordinated with

    Returns
    -------
    Congruence
    """
    n = alg.size
    transformations = list(transformations)
    for h in transformations:
        if h.src_size != n or h.dst_size != n:
            raise DimensionMismatch("transformations must be self-maps of "
                                    "the carrier")

    ds = DisjointSet(range(n))
    for x, y in pairs:
        ds.merge(int(x), int(y))

    tables = [t for t in alg.tables.values() if t.ndim > 0]
    while True:
        rep = Congruence.from_disjoint_set(ds, n).rep
        merged = False
        # each tuple must land in the class of its representative tuple
        for table in tables:
            moved = _image_table(table, rep)
            for idx in np.argwhere(rep[table] != rep[moved]):
                idx = tuple(idx)
                merged |= ds.merge(int(table[idx]), int(moved[idx]))
        for h in transformations:
            for x in np.flatnonzero(rep[h.values] != rep[h.values[rep]]):
                merged |= ds.merge(int(h.values[x]), int(h.values[rep[x]]))
        if not merged:
            return Congruence(rep)


def check_congruence(alg, cong):
    """
    Check that a partition is compatible with every operation

    Returns
    -------
    Verdict
        witness (op, tuple, representative tuple): the two tuples are
        componentwise equivalent but their images are not
    """
    if cong.carrier_size != alg.size:
        raise DimensionMismatch(
            f"partition of {cong.carrier_size} elements for an algebra of "
            f"size {alg.size}")
    rep = cong.rep
    for name, p in alg.sig.ops:
        if p == 0:
            continue
        table = alg.tables[name]
        idx = utils.first_true(rep[table] != rep[_image_table(table, rep)])
        if idx is not None:
            return Verdict(False, (name, idx, tuple(int(rep[i]) for i in idx)))
    return Verdict(True)


def quotient_algebra(alg, cong):
    """
    Quotient algebra B/N and the natural projection j

    Parameters
    ----------
    alg : FiniteAlgebra
        algebra B
    cong : Congruence
        congruence N on B, verified here

    Returns
    -------
    quotient : FiniteAlgebra
        algebra on the class numbers with
        omega(j x1, ..., j xp) = j(omega(x1, ..., xp))
    j : Mapping
        class projection

    Raises
    ------
    NotACongruence
        with witness (op, tuple, representative tuple)
    """
    verdict = check_congruence(alg, cong)
    if not verdict:
        op, x, y = verdict.witness
        raise NotACongruence(
            f"'{op}' separates equivalent tuples {y} and {x}",
            witness=verdict.witness)

    reps = cong.representatives
    index = cong.class_index
    tables = {name: index[_image_table(alg.tables[name], reps)]
              for name, _ in alg.sig.ops}

    return FiniteAlgebra(alg.sig, cong.n_classes, tables), cong.projection()


def factor_through_quotient(fprime, cong):
    """
    Unique map h on classes with h(j(x)) = f'(x)

    Parameters
    ----------
    fprime : Mapping
        map out of the carrier whose kernel contains `cong`
    cong : Congruence
        congruence N

    Returns
    -------
    Mapping
        from the class numbers into the codomain of `fprime`

    Raises
    ------
    KernelTooSmall
        with witness pair (x, y), x equivalent to y but f'(x) != f'(y)
    """
    if fprime.src_size != cong.carrier_size:
        raise DimensionMismatch(
            f"map on {fprime.src_size} elements, partition of "
            f"{cong.carrier_size}")
    rep = cong.rep
    x = utils.first_true(fprime.values != fprime.values[rep])
    if x is not None:
        pair = (int(rep[x[0]]), x[0])
        raise KernelTooSmall(
            f"{pair[0]} and {pair[1]} are equivalent but have different "
            f"images", witness=pair)

    return Mapping(fprime.values[cong.representatives], fprime.dst_size)


def is_coordinated(h, cong):
    """
    Check that a self-map sends equivalent elements to equivalent elements

    Returns
    -------
    Verdict
        witness (x, y) with x equivalent to y but h(x), h(y) not
    """
    n = cong.carrier_size
    if h.src_size != n or h.dst_size != n:
        raise DimensionMismatch(
            f"map {h.src_size}->{h.dst_size} is not a self-map of the "
            f"{n}-element carrier")
    rep = cong.rep
    x = utils.first_true(rep[h.values] != rep[h.values[rep]])
    if x is not None:
        return Verdict(False, (int(rep[x[0]]), x[0]))
    return Verdict(True)
