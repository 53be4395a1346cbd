# -*- coding: utf-8 -*-
"""
Exhaustive verification of polymorphisms and reduced polymorphisms of
representations

A polymorphism is a pair (r, R) of multi-slot maps
r: A1 x ... x An -> A and R: B1 x ... x Bn -> B. Its equations come in
three families:

- 'omega1': for every slot k and every frozen value of the other slots,
  the section of r at slot k preserves each operation of positive arity;
- 'omega2': for every slot k and every frozen value of the other slots,
  the section of R at slot k is a homomorphism Bk -> B;
- 'ak': R(f1(a1)m1, ..., fn(an)mn) = f(r(a1, ..., an))(R(m1, ..., mn)).

A reduced polymorphism has r = id, and its 'ak' family is slot-wise:
R(m1, ..., fk(a)mk, ..., mn) = f(a)(R(m1, ..., mn)).
"""
from dataclasses import dataclass
import itertools

import numpy as np

from . import utils
from .algebra import Mapping, is_homomorphism, _image_table
from .utils import (Report, Verdict, DimensionMismatch, ActorMismatch,
                    SignatureMismatch, NotAReducedPolymorphism,
                    MonoidUnitMismatch, MissingActorMap, NotMonoidMode)


@dataclass(frozen=True, eq=False)
class MultiMap:
    """
    Total map from a product of carriers into a carrier

    Parameters
    ----------
    values : array_like of int, shape src_sizes
        values[x1, ..., xn] is the image of (x1, ..., xn)
    dst_size : int
        size of the codomain
    """
    values: np.ndarray
    dst_size: int

    def __post_init__(self):
        values = utils.freeze(self.values)
        if values.ndim == 0:
            raise DimensionMismatch("a multimap needs at least one slot")
        bad = utils.first_true((values < 0) | (values >= self.dst_size))
        if bad is not None:
            raise DimensionMismatch(
                f"value {values[bad]} at {bad} is outside the codomain of "
                f"size {self.dst_size}", witness=bad)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'dst_size', int(self.dst_size))

    @classmethod
    def from_function(cls, src_sizes, dst_size, func):
        values = np.zeros(tuple(src_sizes), dtype=np.int64)
        for args in itertools.product(*(range(s) for s in src_sizes)):
            values[args] = func(*args)
        return cls(values, dst_size)

    @classmethod
    def constant(cls, src_sizes, dst_size, value):
        return cls(np.full(tuple(src_sizes), value), dst_size)

    @classmethod
    def from_mapping(cls, mapping):
        return cls(mapping.values, mapping.dst_size)

    @property
    def arity(self):
        return self.values.ndim

    @property
    def src_sizes(self):
        return self.values.shape

    def __call__(self, *args):
        return int(self.values[tuple(args)])

    def postcompose(self, h):
        """
        h o self for a Mapping h out of the codomain
        """
        if h.src_size != self.dst_size:
            raise DimensionMismatch("cannot compose: codomain and domain "
                                    "sizes differ")
        return MultiMap(h.values[self.values], h.dst_size)

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (self.dst_size == other.dst_size
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.dst_size, self.values.shape,
                     self.values.tobytes()))

    def __repr__(self):
        return (f"MultiMap(src_sizes={self.src_sizes}, "
                f"dst_size={self.dst_size})")


def _frozen_assignments(sizes, k):
    """
    Tuples over `sizes` with slot k left open (None), lexicographic
    """
    ranges = [range(s) if i != k else [None] for i, s in enumerate(sizes)]
    return itertools.product(*ranges)


def _section(values, frozen):
    index = tuple(slice(None) if v is None else v for v in frozen)
    return values[index]


def _check_shapes(R, reps, target, r=None):
    n = len(reps)
    if R.arity != n:
        raise DimensionMismatch(f"R has {R.arity} slots for {n} "
                                f"representations")
    sizes = tuple(f.carrier.size for f in reps)
    if R.src_sizes != sizes or R.dst_size != target.carrier.size:
        raise DimensionMismatch(
            f"R maps {R.src_sizes} -> {R.dst_size}, carriers are "
            f"{sizes} -> {target.carrier.size}")
    if r is None:
        return
    if r.arity != n:
        raise DimensionMismatch(f"r has {r.arity} slots for {n} "
                                f"representations")
    sizes = tuple(f.actor.size for f in reps)
    if r.src_sizes != sizes or r.dst_size != target.actor.size:
        raise DimensionMismatch(
            f"r maps {r.src_sizes} -> {r.dst_size}, actors are "
            f"{sizes} -> {target.actor.size}")


def _check_common_actor(reps, target):
    for k, f in enumerate(reps):
        if f.actor != target.actor:
            raise ActorMismatch(
                f"representation {k} does not share the target's actor",
                witness=k)


def _omega1_family(r, reps, target, k):
    """
    Least violation of the omega1-equations at slot k, or None
    """
    src = reps[k].actor
    if src.sig != target.actor.sig:
        raise SignatureMismatch(f"actor of slot {k} has another signature")
    for frozen in _frozen_assignments(r.src_sizes, k):
        section = _section(r.values, frozen)
        for name, p in src.sig.ops:
            if p == 0:
                continue
            lhs = section[src.tables[name]]
            rhs = _image_table(target.actor.tables[name], section)
            idx = utils.first_true(lhs != rhs)
            if idx is not None:
                return {'slot': k, 'frozen': frozen, 'op': name, 'args': idx}
    return None


def _omega2_family(R, reps, target, k):
    """
    Least violation of the omega2-equations at slot k, or None
    """
    src = reps[k].carrier
    for frozen in _frozen_assignments(R.src_sizes, k):
        section = Mapping(_section(R.values, frozen), R.dst_size)
        verdict = is_homomorphism(section, src, target.carrier)
        if not verdict:
            name, idx = verdict.witness
            return {'slot': k, 'frozen': frozen, 'op': name, 'args': idx}
    return None


def _ak_family(r, R, reps, target):
    """
    Least violation of R(f1(a1)m1, ...) = f(r(a))(R(m)), or None
    """
    for a in itertools.product(*(range(s) for s in r.src_sizes)):
        acted = R.values[np.ix_(*(f.action[ai] for f, ai in zip(reps, a)))]
        rhs = target.action[r.values[a]][R.values]
        idx = utils.first_true(acted != rhs)
        if idx is not None:
            return {'slot': None, 'a': a, 'm': idx}
    return None


def _reduced_ak_family(R, reps, target, k):
    """
    Least violation of R(..., fk(a)mk, ...) = f(a)(R(m)) at slot k, or None
    """
    for a in target.actor.elements:
        acted = np.take(R.values, reps[k].action[a], axis=k)
        rhs = target.action[a][R.values]
        idx = utils.first_true(acted != rhs)
        if idx is not None:
            return {'slot': k, 'a': a, 'm': idx}
    return None


def _families(r, R, reps, target):
    """
    Yield (family, slot, witness) in scan order; witness None on success
    """
    n = len(reps)
    if r is None:
        for k in range(n):
            yield 'omega2', k, _omega2_family(R, reps, target, k)
            yield 'ak', k, _reduced_ak_family(R, reps, target, k)
        return
    for k in range(n):
        yield 'omega1', k, _omega1_family(r, reps, target, k)
    for k in range(n):
        yield 'omega2', k, _omega2_family(R, reps, target, k)
    yield 'ak', None, _ak_family(r, R, reps, target)


def check_slotwise_equations(r, R, reps, target):
    """
    Itemized verification of the polymorphism equations

    Parameters
    ----------
    r : MultiMap or None
        map of the actors; None selects the reduced equations (r = id)
    R : MultiMap
        map of the carriers
    reps : list of Representation
        source representations f1, ..., fn
    target : Representation
        target representation f

    Returns
    -------
    Report
        rows with check in {'omega1', 'omega2', 'ak'} and a 'slot' column;
        the 'ak' row of a non-reduced check couples all slots and has
        slot None
    """
    _check_shapes(R, reps, target, r)
    if r is None:
        _check_common_actor(reps, target)

    report = Report()
    for family, slot, witness in _families(r, R, reps, target):
        report.add(family, witness is None, witness, slot=slot)
    return report


def _first_failure(r, R, reps, target):
    for family, _, witness in _families(r, R, reps, target):
        if witness is not None:
            return Verdict(False, {'clause': family, **witness})
    return Verdict(True)


def is_polymorphism(r, R, reps, target):
    """
    Check that (r, R) is a polymorphism of reps into target

    Returns
    -------
    Verdict
        witness is a dict with keys 'clause', 'slot' and the failing
        frozen values / arguments

    Raises
    ------
    MissingActorMap
        r is None
    DimensionMismatch
    """
    if r is None:
        raise MissingActorMap("a polymorphism needs the actor map r; use "
                              "is_reduced_polymorphism for r = id")
    _check_shapes(R, reps, target, r)
    return _first_failure(r, R, reps, target)


def is_reduced_polymorphism(R, reps, target):
    """
    Check that R is a reduced polymorphism of reps into target

    Raises
    ------
    ActorMismatch
        the representations do not share the target's actor
    DimensionMismatch
    """
    _check_shapes(R, reps, target)
    _check_common_actor(reps, target)
    return _first_failure(None, R, reps, target)


def is_polymorphism_of(r, R, rep):
    """
    Polymorphism of a single representation: f1 = ... = fn = f
    """
    return is_polymorphism(r, R, [rep] * R.arity, rep)


def is_reduced_polymorphism_of(R, rep):
    return is_reduced_polymorphism(R, [rep] * R.arity, rep)


def identity_element(rep):
    """
    Least actor element acting as the identity transformation

    Returns
    -------
    int or None

    Raises
    ------
    MonoidUnitMismatch
        monoid mode and the unit does not act as the identity
    """
    identity = np.arange(rep.carrier.size)
    found = [a for a in rep.actor.elements
             if np.array_equal(rep.action[a], identity)]
    if rep.is_monoid and rep.unit_element not in found:
        raise MonoidUnitMismatch(
            f"unit {rep.unit_element} does not act as the identity",
            witness=rep.unit_element)
    return found[0] if found else None


def _common_identity(reps, target):
    """
    Least e with f_k(e) = id for every k and f(e) = id
    """
    identity = [np.arange(f.carrier.size) for f in (*reps, target)]
    for e in target.actor.elements:
        if all(np.array_equal(f.action[e], i)
               for f, i in zip((*reps, target), identity)):
            return e
    return None


def check_bridge(r, R, reps, target):
    """
    Conditions under which a polymorphism specializes to the reduced one

    The rows are:

    - 'identity': a common e with f_k(e) = id for all k and f(e) = id;
    - 'unit_slots': r(e, ..., a, ..., e) = a for every slot and a;
    - 'specialization': with a_i = e for i != k, both sides of the 'ak'
      equation equal those of the reduced equation;
    - 'reduction': present when every condition holds and (r, R) is a
      polymorphism; then R must be a reduced polymorphism.

    Returns
    -------
    Report
    """
    if r is None:
        raise MissingActorMap("the bridge conditions need the actor map r")
    _check_shapes(R, reps, target, r)
    _check_common_actor(reps, target)

    report = Report()
    e = _common_identity(reps, target)
    report.add('identity', e is not None, None, e=e)
    if e is None:
        return report

    n = len(reps)
    witness = None
    for k in range(n):
        for a in target.actor.elements:
            args = tuple(a if i == k else e for i in range(n))
            if r.values[args] != a:
                witness = {'slot': k, 'a': a}
                break
        if witness is not None:
            break
    report.add('unit_slots', witness is None, witness)

    witness = None
    for k in range(n):
        for a in target.actor.elements:
            args = tuple(a if i == k else e for i in range(n))
            special = R.values[np.ix_(*(
                f.action[a if i == k else e] for i, f in enumerate(reps)))]
            reduced = np.take(R.values, reps[k].action[a], axis=k)
            lhs_idx = utils.first_true(special != reduced)
            rhs_idx = utils.first_true(
                target.action[r.values[args]][R.values]
                != target.action[a][R.values])
            idx = lhs_idx if lhs_idx is not None else rhs_idx
            if idx is not None:
                witness = {'slot': k, 'a': a, 'm': idx}
                break
        if witness is not None:
            break
    report.add('specialization', witness is None, witness)

    if report.ok and is_polymorphism(r, R, reps, target):
        verdict = is_reduced_polymorphism(R, reps, target)
        report.add('reduction', verdict.ok, verdict.witness)

    return report


def check_action_commutation(R, reps, target):
    """
    Check that actions in two slots commute through R

    For every k != l, a, b and tuple m, the value of R with fk(a) applied
    in slot k and fl(b) in slot l must equal f(a)(f(b)(R(m))) and
    f(b)(f(a)(R(m))); both superposition orders are tested.

    Returns
    -------
    Verdict
        witness dict with keys 'slots', 'a', 'b', 'm'

    Raises
    ------
    NotAReducedPolymorphism
        R is not a reduced polymorphism
    """
    verdict = is_reduced_polymorphism(R, reps, target)
    if not verdict:
        raise NotAReducedPolymorphism(
            "action commutation needs a reduced polymorphism",
            witness=verdict.witness)

    act = target.action
    for k, l in itertools.permutations(range(R.arity), 2):
        for a in target.actor.elements:
            for b in target.actor.elements:
                both = np.take(np.take(R.values, reps[k].action[a], axis=k),
                               reps[l].action[b], axis=l)
                k_then_l = act[a][act[b][R.values]]
                l_then_k = act[b][act[a][R.values]]
                idx = utils.first_true((both != k_then_l)
                                       | (k_then_l != l_then_k))
                if idx is not None:
                    return Verdict(False, {'slots': (k, l), 'a': a, 'b': b,
                                           'm': idx})
    return Verdict(True)


def monoid_product_map(rep, n):
    """
    r(a1, ..., an) = a1 a2 ... an computed by repeated multiplication

    Returns
    -------
    MultiMap
        over n copies of the actor

    Raises
    ------
    NotMonoidMode
    """
    if not rep.is_monoid:
        raise NotMonoidMode("the product map needs a monoid-mode actor")
    size = rep.actor.size

    def product(*args):
        value = args[0]
        for a in args[1:]:
            value = rep.product(value, a)
        return value

    return MultiMap.from_function((size,) * n, size, product)


def find_composite_actor(rep, a, b):
    """
    Least c with f(c) = f(a) o f(b), or None when the actor has none
    """
    composite = rep.action[a][rep.action[b]]
    for c in rep.actor.elements:
        if np.array_equal(rep.action[c], composite):
            return c
    return None
