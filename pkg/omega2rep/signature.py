# -*- coding: utf-8 -*-
"""
Operation signatures, ground terms over generators and term evaluation
"""
from dataclasses import dataclass
import itertools

from . import utils
from .utils import (DuplicateOpName, NegativeArity, UnknownOp, ArityMismatch,
                    GeneratorOutOfRange, ActWithoutRepresentation,
                    DimensionMismatch)


SIGNATURE_KINDS = ('omega1', 'omega2')


@dataclass(frozen=True)
class Signature:
    """
    Named operation symbols with arities

    Attributes
    ----------
    kind : {'omega1', 'omega2'}
        whether the signature is that of an actor (omega1) or of a
        carrier (omega2)
    ops : tuple of (str, int)
        operation names and arities in declaration order; arity 0
        denotes a constant
    """
    kind: str
    ops: tuple

    @property
    def names(self):
        return tuple(name for name, _ in self.ops)

    def arity(self, name):
        for op, p in self.ops:
            if op == name:
                return p
        raise UnknownOp(f"operation '{name}' is not in the signature",
                        witness=name)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownOp(f"operation '{name}' is not in the signature",
                            witness=name) from None

    def __contains__(self, name):
        return name in self.names

    @property
    def constants(self):
        return tuple(name for name, p in self.ops if p == 0)

    def ops_of_arity(self, p):
        """
        Symbols of arity `p`, i.e. the indexed set Omega(p)
        """
        return tuple(name for name, q in self.ops if q == p)


def make_signature(kind, ops):
    """
    Build a validated signature

    Parameters
    ----------
    kind : {'omega1', 'omega2'}
        signature tag
    ops : list of (str, int)
        operation names and arities

    Returns
    -------
    Signature

    Raises
    ------
    DuplicateOpName
        two operations share a name
    NegativeArity
        an arity is negative
    ValueError
        unknown kind
    """
    if kind not in SIGNATURE_KINDS:
        raise ValueError(f"kind must be one of {SIGNATURE_KINDS}, got {kind!r}")

    checked, seen = [], set()
    for name, arity in ops:
        name, arity = str(name), int(arity)
        if arity < 0:
            raise NegativeArity(f"operation '{name}' has arity {arity}",
                                witness=(name, arity))
        if name in seen:
            raise DuplicateOpName(f"operation '{name}' is declared twice",
                                  witness=name)
        seen.add(name)
        checked.append((name, arity))

    return Signature(kind=kind, ops=tuple(checked))


# terms
@dataclass(frozen=True)
class Generator:
    """
    The `index`-th declared generator
    """
    index: int

    @property
    def depth(self):
        return 0

    def __str__(self):
        return f"g{self.index}"


@dataclass(frozen=True)
class Apply:
    """
    Operation `op` applied to `args`
    """
    op: str
    args: tuple = ()

    @property
    def depth(self):
        if not self.args:
            return 0
        return 1 + max(a.depth for a in self.args)

    def __str__(self):
        if not self.args:
            return self.op
        return f"{self.op}({', '.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class Act:
    """
    Transformation of actor element `actor` applied to `arg`
    """
    actor: int
    arg: object

    @property
    def depth(self):
        return 1 + self.arg.depth

    def __str__(self):
        return f"[{self.actor}]{self.arg}"


def term_key(term, sig):
    """
    Sort key realising the total term order: depth, then symbol
    (generators, then operations in declaration order, then actions),
    then children
    """
    if isinstance(term, Generator):
        return (0, (0, term.index), ())
    if isinstance(term, Apply):
        return (term.depth, (1, sig.index(term.op)),
                tuple(term_key(a, sig) for a in term.args))
    if isinstance(term, Act):
        return (term.depth, (2, term.actor), (term_key(term.arg, sig),))
    raise TypeError(f"not a term: {term!r}")


def eval_term(alg, term, gens, rep=None):
    """
    Evaluate a term in a finite algebra by bottom-up table lookup

    Parameters
    ----------
    alg : FiniteAlgebra
        algebra whose signature covers every Apply symbol
    term : Generator, Apply or Act
        term to evaluate
    gens : list of int
        values of the generators
    rep : Representation, optional
        representation whose carrier is `alg`, required by Act nodes

    Returns
    -------
    int
        element of `alg`

    Raises
    ------
    UnknownOp, ArityMismatch, GeneratorOutOfRange, ActWithoutRepresentation
    DimensionMismatch
        an Act node names an element outside the actor
    """
    if rep is not None and rep.carrier != alg:
        raise ValueError("rep must act on the algebra the term is evaluated in")

    cache = {}

    def _eval(t):
        if t in cache:
            return cache[t]
        if isinstance(t, Generator):
            if not 0 <= t.index < len(gens):
                raise GeneratorOutOfRange(
                    f"generator g{t.index} with {len(gens)} generators",
                    witness=t.index)
            value = int(gens[t.index])
        elif isinstance(t, Apply):
            p = alg.sig.arity(t.op)
            if p != len(t.args):
                raise ArityMismatch(
                    f"'{t.op}' has arity {p}, applied to {len(t.args)} terms",
                    witness=t)
            args = tuple(_eval(a) for a in t.args)
            value = int(alg.tables[t.op][args])
        elif isinstance(t, Act):
            if rep is None:
                raise ActWithoutRepresentation(
                    "Act nodes need a representation", witness=t)
            if not 0 <= t.actor < rep.actor.size:
                raise DimensionMismatch(
                    f"actor element {t.actor} of an actor with "
                    f"{rep.actor.size} elements", witness=t)
            value = int(rep.action[t.actor, _eval(t.arg)])
        else:
            raise TypeError(f"not a term: {t!r}")
        cache[t] = value
        return value

    return _eval(term)


def enumerate_terms(sig, generator_count, action_set=None, depth=0,
                    budget=None):
    """
    All terms of depth at most `depth`

    Depth-0 terms are the generators and the constants; each further level
    applies every operation and every action to the terms of the previous
    level.

    Parameters
    ----------
    sig : Signature
        operation symbols available
    generator_count : int
        number of generators g0, ..., g{n-1}
    action_set : list of int, optional
        actor elements available as Act symbols
    depth : int
        maximal syntactic depth, >= 0
    budget : int, optional
        cap on the number of terms (see utils.get_budget)

    Returns
    -------
    list of terms
        structurally distinct terms sorted by `term_key`

    Raises
    ------
    BudgetExceeded
        the count passes the budget
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    action_set = [] if action_set is None else list(action_set)

    terms = {Generator(i) for i in range(generator_count)}
    terms |= {Apply(c) for c in sig.constants}
    utils.check_budget(len(terms), budget, what='terms')

    for _ in range(depth):
        level = sorted(terms, key=lambda t: term_key(t, sig))
        count = len(level) + len(action_set) * len(level) + sum(
            len(level) ** p for _, p in sig.ops if p > 0)
        utils.check_budget(count, budget, what='terms')

        new = set(terms)
        for name, p in sig.ops:
            if p == 0:
                continue
            new.update(Apply(name, args)
                       for args in itertools.product(level, repeat=p))
        new.update(Act(c, t) for c in action_set for t in level)
        terms = new

    return sorted(terms, key=lambda t: term_key(t, sig))
