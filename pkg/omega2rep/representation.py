# -*- coding: utf-8 -*-
"""
Representations of an Omega1-algebra by endomorphisms of an Omega2-algebra,
their morphisms and their quotients
"""
from dataclasses import dataclass, field
import itertools

import numpy as np

from . import utils
from .algebra import Mapping, is_homomorphism, validate_algebra
from .congruence import (quotient_algebra, factor_through_quotient,
                         is_coordinated)
from .utils import (Report, Verdict, DimensionMismatch, NotMonoidMode,
                    NotCoordinated, NotAMorphism, FactorizationInconsistent)


ACTOR_MODES = ('monoid', 'tabular')


@dataclass(frozen=True, eq=False)
class Representation:
    """
    Representation f: A -> *B

    Parameters
    ----------
    actor : FiniteAlgebra
        Omega1-algebra A
    carrier : FiniteAlgebra
        Omega2-algebra B
    action : array_like of int, shape (|A|, |B|)
        action[a, x] = f(a)(x)
    actor_mode : {'monoid', 'tabular'}, default 'tabular'
        in monoid mode the laws f(mul(a, b)) = f(a) o f(b) and
        f(unit) = identity are part of validity
    mul, unit : str, optional
        names of the binary product and of the unit constant of the
        actor; required in monoid mode

    Notes
    -----
    Construction only checks shapes. Whether each f(a) is an endomorphism
    and whether the monoid laws hold is reported by
    `validate_representation`.
    """
    actor: object
    carrier: object
    action: np.ndarray
    actor_mode: str = 'tabular'
    mul: str = field(default=None)
    unit: str = field(default=None)

    def __post_init__(self):
        action = utils.freeze(self.action)
        shape = (self.actor.size, self.carrier.size)
        if action.shape != shape:
            raise DimensionMismatch(
                f"action table has shape {action.shape}, expected {shape}")
        bad = utils.first_true((action < 0) | (action >= self.carrier.size))
        if bad is not None:
            raise DimensionMismatch(
                f"action value {action[bad]} at {bad} is outside the carrier",
                witness=bad)
        if self.actor_mode not in ACTOR_MODES:
            raise ValueError(f"actor_mode must be one of {ACTOR_MODES}")
        if self.actor_mode == 'monoid':
            if self.mul is None or self.unit is None:
                raise NotMonoidMode("monoid mode needs 'mul' and 'unit'")
            if self.actor.sig.arity(self.mul) != 2 \
                    or self.actor.sig.arity(self.unit) != 0:
                raise NotMonoidMode(
                    f"'{self.mul}' must be binary and '{self.unit}' nullary")
        object.__setattr__(self, 'action', action)

    def transformation(self, a):
        """
        f(a) as a Mapping of the carrier
        """
        return Mapping(self.action[a], self.carrier.size)

    def transformations(self):
        return [self.transformation(a) for a in self.actor.elements]

    @property
    def is_monoid(self):
        return self.actor_mode == 'monoid'

    @property
    def unit_element(self):
        if not self.is_monoid:
            raise NotMonoidMode("the representation is in tabular mode")
        return int(self.actor.tables[self.unit])

    def product(self, a, b):
        if not self.is_monoid:
            raise NotMonoidMode("the representation is in tabular mode")
        return int(self.actor.tables[self.mul][a, b])

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.actor == other.actor and self.carrier == other.carrier
                and np.array_equal(self.action, other.action)
                and self.actor_mode == other.actor_mode
                and self.mul == other.mul and self.unit == other.unit)

    def __hash__(self):
        return hash((self.actor, self.carrier, self.action.tobytes()))

    def __repr__(self):
        return (f"Representation(actor={self.actor.size}, "
                f"carrier={self.carrier.size}, mode={self.actor_mode})")


@dataclass(frozen=True)
class RepMorphism:
    """
    Pair (r, R): r between the actors, R between the carriers
    """
    r: Mapping
    R: Mapping


def identity_morphism(rep):
    return RepMorphism(Mapping.identity(rep.actor.size),
                       Mapping.identity(rep.carrier.size))


def compose_morphisms(second, first):
    """
    (r2 o r1, R2 o R1) for morphisms first: f -> g and second: g -> k
    """
    return RepMorphism(second.r.compose(first.r), second.R.compose(first.R))


def validate_representation(rep):
    """
    Check that every f(a) is an endomorphism of the carrier and, in monoid
    mode, the composition and unit laws

    Returns
    -------
    Report
        rows 'endomorphism' (one per actor element, witness
        (a, op, tuple)), and in monoid mode 'composition' (witness (a, b)
        with f(ab) != f(a) o f(b)) and 'unit'
    """
    report = Report()
    for role, alg in (('actor', rep.actor), ('carrier', rep.carrier)):
        for row in validate_algebra(alg).violations:
            report.add(role, False, row['witness'])
    if not report.ok:
        return report

    for a in rep.actor.elements:
        verdict = is_homomorphism(rep.transformation(a), rep.carrier,
                                  rep.carrier)
        witness = None if verdict else (a, *verdict.witness)
        report.add('endomorphism', verdict.ok, witness, a=a)

    if rep.is_monoid:
        action = rep.action
        mul = rep.actor.tables[rep.mul]
        # f(ab)(x) against f(a)(f(b)(x)), indexed (a, b, x)
        lhs = action[mul]
        rhs = action[np.arange(rep.actor.size)[:, None, None],
                     action[None, :, :]]
        idx = utils.first_true(lhs != rhs)
        report.add('composition', idx is None,
                   None if idx is None else idx[:2])

        e = rep.unit_element
        ok = rep.transformation(e).is_identity()
        report.add('unit', ok, None if ok else e)

    return report


def is_morphism(m, src, dst):
    """
    Check that (r, R) is a morphism of representations src -> dst

    The clauses are checked in order: r is an Omega1-homomorphism,
    R is an Omega2-homomorphism, and R(f(a)(x)) = g(r(a))(R(x)).

    Returns
    -------
    Verdict
        witness ('omega1', op, tuple), ('omega2', op, tuple) or
        ('action', a, x)

    Raises
    ------
    DimensionMismatch
    """
    if (m.r.src_size, m.r.dst_size) != (src.actor.size, dst.actor.size):
        raise DimensionMismatch("r does not map the source actor to the "
                                "target actor")
    if (m.R.src_size, m.R.dst_size) != (src.carrier.size, dst.carrier.size):
        raise DimensionMismatch("R does not map the source carrier to the "
                                "target carrier")

    verdict = is_homomorphism(m.r, src.actor, dst.actor)
    if not verdict:
        return Verdict(False, ('omega1', *verdict.witness))

    verdict = is_homomorphism(m.R, src.carrier, dst.carrier)
    if not verdict:
        return Verdict(False, ('omega2', *verdict.witness))

    lhs = m.R.values[src.action]
    rhs = dst.action[m.r.values][:, m.R.values]
    idx = utils.first_true(lhs != rhs)
    if idx is not None:
        return Verdict(False, ('action', *idx))

    return Verdict(True)


def quotient_representation(rep, cong):
    """
    Representation f1 of the actor on B/N with f1(a) o j = j o f(a)

    Parameters
    ----------
    rep : Representation
        representation f on B
    cong : Congruence
        congruence N on B every f(a) is coordinated with

    Returns
    -------
    quotient : Representation
        representation on the quotient algebra
    projection : RepMorphism
        (id, j), a morphism rep -> quotient

    Raises
    ------
    NotCoordinated
        with witness (a, x, y)
    NotACongruence
        propagated from quotient_algebra
    """
    for a in rep.actor.elements:
        verdict = is_coordinated(rep.transformation(a), cong)
        if not verdict:
            x, y = verdict.witness
            raise NotCoordinated(
                f"f({a}) sends equivalent {x} and {y} to inequivalent "
                f"elements", witness=(a, x, y))

    carrier, j = quotient_algebra(rep.carrier, cong)
    action = cong.class_index[rep.action[:, cong.representatives]]
    quotient = Representation(rep.actor, carrier, action, rep.actor_mode,
                              rep.mul, rep.unit)

    return quotient, RepMorphism(Mapping.identity(rep.actor.size), j)


def factor_morphism_through_quotient(m, rep, target, cong):
    """
    Factor a morphism rep -> target through the quotient representation

    Parameters
    ----------
    m : RepMorphism
        morphism (r, R) from `rep` to `target` whose R is constant on the
        classes of `cong`
    rep, target : Representation
        source and target of `m`
    cong : Congruence
        congruence N

    Returns
    -------
    RepMorphism
        (r, h) from the quotient representation to `target` with
        h o j = R; h is unique because j is surjective

    Raises
    ------
    NotAMorphism, KernelTooSmall, NotCoordinated
    """
    verdict = is_morphism(m, rep, target)
    if not verdict:
        raise NotAMorphism("the pair is not a morphism of representations",
                           witness=verdict.witness)

    quotient, _ = quotient_representation(rep, cong)
    h = factor_through_quotient(m.R, cong)
    factored = RepMorphism(m.r, h)

    verdict = is_morphism(factored, quotient, target)
    if not verdict:
        raise FactorizationInconsistent(
            "the induced map is not a morphism", witness=verdict.witness)

    return factored


def morphisms(src, dst, reduced=False, budget=None):
    """
    All morphisms src -> dst, by exhaustive search over pairs of maps

    Parameters
    ----------
    reduced : bool
        only consider r = identity (src and dst share the actor)

    Returns
    -------
    list of RepMorphism, lexicographic in (r, R)
    """
    n_a, m_a = src.actor.size, dst.actor.size
    n_b, m_b = src.carrier.size, dst.carrier.size
    if reduced:
        rs = [Mapping.identity(n_a)]
    else:
        utils.check_budget(m_a ** n_a, budget, what='actor maps')
        rs = [Mapping(np.array(v), m_a)
              for v in itertools.product(range(m_a), repeat=n_a)]
        rs = [r for r in rs if is_homomorphism(r, src.actor, dst.actor)]
    utils.check_budget(len(rs) * m_b ** n_b, budget, what='carrier maps')

    found = []
    for r in rs:
        for values in itertools.product(range(m_b), repeat=n_b):
            m = RepMorphism(r, Mapping(np.array(values), m_b))
            if is_morphism(m, src, dst):
                found.append(m)
    return found
