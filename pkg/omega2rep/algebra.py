# -*- coding: utf-8 -*-
"""
Finite algebras as operation tables, mappings between their carriers,
homomorphisms, endomorphisms, products and generated subalgebras
"""
from dataclasses import dataclass, field
import itertools

import numpy as np

from . import utils
from .utils import (Report, Verdict, SignatureMismatch, DimensionMismatch,
                    EmptyList)


def _coerce_table(raw):
    """
    Integer array for a well-shaped table; ragged input is kept as an
    object array so that validation can report it instead of crashing
    """
    try:
        table = np.array(raw, dtype=np.int64)
    except (ValueError, TypeError):
        table = np.array(raw, dtype=object)
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """
    Finite algebra on the carrier {0, ..., size-1}

    Parameters
    ----------
    sig : Signature
        operation symbols
    size : int
        number of elements
    tables : dict of {str: array_like}
        for an operation of arity p, an array of shape (size,)*p whose
        entry at (x1, ..., xp) is the value of the operation; constants
        are 0-dimensional arrays (scalars)
    labels : tuple of str, optional
        display names of the elements, used only by the file format
    """
    sig: object
    size: int
    tables: dict
    labels: tuple = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'size', int(self.size))
        object.__setattr__(
            self, 'tables',
            {name: _coerce_table(t) for name, t in self.tables.items()})
        if self.labels is not None:
            object.__setattr__(self, 'labels', tuple(self.labels))

    @classmethod
    def from_operations(cls, sig, size, operations, labels=None):
        """
        Tabulate python callables

        Parameters
        ----------
        sig : Signature
            operation symbols
        size : int
            number of elements
        operations : dict of {str: callable}
            for each symbol of arity p, a function of p elements
        """
        tables = {}
        for name, p in sig.ops:
            func = operations[name]
            table = np.zeros((size,) * p, dtype=np.int64)
            for args in itertools.product(range(size), repeat=p):
                table[args] = func(*args)
            tables[name] = table
        return cls(sig, size, tables, labels)

    def __call__(self, name, *args):
        return int(self.tables[name][tuple(args)])

    @property
    def elements(self):
        return range(self.size)

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (self.sig == other.sig and self.size == other.size
                and self.tables.keys() == other.tables.keys()
                and all(np.array_equal(t, other.tables[k])
                        for k, t in self.tables.items()))

    def __hash__(self):
        return hash((self.sig, self.size))

    def __repr__(self):
        return f"FiniteAlgebra(size={self.size}, ops={list(self.sig.names)})"


@dataclass(frozen=True, eq=False)
class Mapping:
    """
    Total map {0, ..., src_size-1} -> {0, ..., dst_size-1}

    Parameters
    ----------
    values : array_like of int
        image of each element
    dst_size : int
        size of the codomain
    """
    values: np.ndarray
    dst_size: int

    def __post_init__(self):
        values = utils.freeze(self.values)
        if values.ndim != 1:
            raise DimensionMismatch("mapping values must be 1-dimensional")
        bad = utils.first_true((values < 0) | (values >= self.dst_size))
        if bad is not None:
            raise DimensionMismatch(
                f"value {values[bad]} at {bad[0]} is outside the codomain "
                f"of size {self.dst_size}", witness=bad[0])
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'dst_size', int(self.dst_size))

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n), n)

    @classmethod
    def constant(cls, src_size, dst_size, value):
        return cls(np.full(src_size, value), dst_size)

    @property
    def src_size(self):
        return len(self.values)

    def __call__(self, x):
        return int(self.values[x])

    def compose(self, other):
        """
        self o other, i.e. x -> self(other(x))
        """
        if other.dst_size != self.src_size:
            raise DimensionMismatch(
                f"cannot compose a map from {self.src_size} elements after "
                f"a map into {other.dst_size} elements")
        return Mapping(self.values[other.values], self.dst_size)

    def is_identity(self):
        return (self.src_size == self.dst_size
                and np.array_equal(self.values, np.arange(self.src_size)))

    def __eq__(self, other):
        if not isinstance(other, Mapping):
            return NotImplemented
        return (self.dst_size == other.dst_size
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.dst_size, self.values.tobytes()))

    def __repr__(self):
        return f"Mapping({self.values.tolist()}, dst_size={self.dst_size})"


class ProductCodec:
    """
    Row-major bijection between tuples and indices of a product carrier

    Parameters
    ----------
    sizes : tuple of int
        sizes of the factors, in order
    """

    def __init__(self, sizes):
        self.sizes = tuple(int(s) for s in sizes)
        self.size = int(np.prod(self.sizes, dtype=np.int64))

    def encode(self, tup):
        return int(np.ravel_multi_index(tuple(tup), self.sizes))

    def decode(self, index):
        return tuple(int(i) for i in np.unravel_index(index, self.sizes))

    def tuples(self):
        return itertools.product(*(range(s) for s in self.sizes))


def validate_algebra(alg):
    """
    Check that every table is total and within the carrier

    Parameters
    ----------
    alg : FiniteAlgebra
        algebra to check

    Returns
    -------
    Report
        one row per operation; violations carry the witness
        (op, tuple, problem) with tuple None for shape problems
    """
    report = Report()
    n = alg.size
    if n <= 0:
        report.add('size', False, (None, None, 'carrier must be nonempty'))
        return report

    for name, p in alg.sig.ops:
        if name not in alg.tables:
            report.add('table', False, (name, None, 'missing table'), op=name)
            continue
        table = alg.tables[name]
        if table.dtype == object or table.shape != (n,) * p:
            report.add('table', False, (name, None, 'not total'), op=name)
            continue
        idx = utils.first_true((table < 0) | (table >= n))
        if idx is not None:
            report.add('table', False, (name, idx, 'out of range'), op=name)
        else:
            report.add('table', True, op=name)

    for name in alg.tables:
        if name not in alg.sig:
            report.add('table', False, (name, None, 'unknown op'), op=name)

    return report


def _image_table(table, values):
    """
    The table of an operation with every argument passed through `values`,
    i.e. the array omega(h x1, ..., h xp) indexed by (x1, ..., xp)
    """
    if table.ndim == 0:
        return table
    return table[np.ix_(*([values] * table.ndim))]


def is_homomorphism(h, src, dst):
    """
    Check h(omega(x1, ..., xp)) = omega(h x1, ..., h xp) for every
    operation and tuple

    Parameters
    ----------
    h : Mapping
        map from the carrier of `src` to the carrier of `dst`
    src, dst : FiniteAlgebra
        algebras with the same signature

    Returns
    -------
    Verdict
        witness (op, tuple) is the least violation, operations scanned in
        signature order

    Raises
    ------
    SignatureMismatch
        signatures differ
    DimensionMismatch
        `h` does not go from src to dst
    """
    if src.sig != dst.sig:
        raise SignatureMismatch("source and target signatures differ")
    if h.src_size != src.size or h.dst_size != dst.size:
        raise DimensionMismatch(
            f"mapping {h.src_size}->{h.dst_size} does not fit "
            f"algebras of sizes {src.size}->{dst.size}")

    for name, _ in src.sig.ops:
        lhs = h.values[src.tables[name]]
        rhs = _image_table(dst.tables[name], h.values)
        idx = utils.first_true(lhs != rhs)
        if idx is not None:
            return Verdict(False, (name, idx))

    return Verdict(True)


def endomorphisms(alg, budget=None):
    """
    All endomorphisms of a finite algebra

    Carriers up to utils.BACKTRACK_THRESHOLD elements are scanned in full;
    larger ones are searched by backtracking over partial maps. Both give
    the maps in lexicographic order of their value arrays.

    Parameters
    ----------
    alg : FiniteAlgebra
        algebra
    budget : int, optional
        cap on self-maps (scan) or search nodes (backtracking)

    Returns
    -------
    list of Mapping

    Raises
    ------
    BudgetExceeded
    """
    n = alg.size
    if n <= utils.BACKTRACK_THRESHOLD:
        utils.check_budget(n ** n, budget, what='self-maps')
        found = []
        for values in itertools.product(range(n), repeat=n):
            h = Mapping(np.array(values), n)
            if is_homomorphism(h, alg, alg):
                found.append(h)
        return found

    return _backtrack_endomorphisms(alg, utils.get_budget(budget))


def _backtrack_endomorphisms(alg, budget):
    n = alg.size
    tables = [alg.tables[name] for name, _ in alg.sig.ops]
    values = np.full(n, -1, dtype=np.int64)
    found, visited = [], 0

    def consistent(k):
        # every constraint whose arguments and result lie in 0..k
        prefix = values[:k + 1]
        for table in tables:
            p = table.ndim
            sub = table[np.ix_(*([np.arange(k + 1)] * p))] if p else table
            rhs = table[np.ix_(*([prefix] * p))] if p else table
            known = sub <= k
            if np.any(known & (values[np.where(known, sub, 0)] != rhs)):
                return False
        return True

    def extend(k):
        nonlocal visited
        if k == n:
            found.append(Mapping(values.copy(), n))
            return
        for v in range(n):
            visited += 1
            if visited > budget:
                raise utils.BudgetExceeded(
                    f"endomorphism search passed the budget of {budget}")
            values[k] = v
            if consistent(k):
                extend(k + 1)
        values[k] = -1

    extend(0)
    return found


def product_algebra(algs):
    """
    Direct product with componentwise operations

    Parameters
    ----------
    algs : list of FiniteAlgebra
        factors with a common signature

    Returns
    -------
    product : FiniteAlgebra
        algebra on prod(sizes) elements
    codec : ProductCodec
        row-major bijection between tuples and product elements

    Raises
    ------
    EmptyList, SignatureMismatch
    """
    algs = list(algs)
    if not algs:
        raise EmptyList("product of an empty list of algebras")
    sig = algs[0].sig
    if any(a.sig != sig for a in algs[1:]):
        raise SignatureMismatch("all factors must share one signature")

    codec = ProductCodec([a.size for a in algs])
    N = codec.size
    tables = {}
    for name, p in sig.ops:
        if p == 0:
            comps = tuple(int(a.tables[name]) for a in algs)
            tables[name] = np.array(codec.encode(comps))
            continue
        grids = np.indices((N,) * p)
        # comps[j][i]: i-th component of the j-th argument
        comps = [np.unravel_index(grids[j], codec.sizes) for j in range(p)]
        result = tuple(a.tables[name][tuple(comps[j][i] for j in range(p))]
                       for i, a in enumerate(algs))
        tables[name] = np.ravel_multi_index(result, codec.sizes)

    return FiniteAlgebra(sig, N, tables), codec


def generated_subalgebra(alg, seed, actions=None):
    """
    Least subset containing `seed` and the constants, closed under every
    operation and every supplied transformation

    Parameters
    ----------
    alg : FiniteAlgebra
        ambient algebra
    seed : iterable of int
        generators
    actions : list of Mapping, optional
        self-maps of the carrier to close under

    Returns
    -------
    set of int
    """
    actions = [] if actions is None else list(actions)
    closed = {int(x) for x in seed}
    closed.update(int(alg.tables[c]) for c in alg.sig.constants)

    while True:
        elems = np.array(sorted(closed), dtype=np.int64)
        grown = set(closed)
        if len(elems):
            for name, p in alg.sig.ops:
                if p > 0:
                    grown.update(_image_table(alg.tables[name], elems)
                                 .ravel().tolist())
            for h in actions:
                grown.update(h.values[elems].tolist())
        if grown == closed:
            return closed
        closed = grown
