# -*- coding: utf-8 -*-
"""
Tensor product of representations by saturation of a ground term graph

The generators are the tuples (x1, ..., xn) of the product of carriers.
Terms over them are identified by

- slot-wise linearity: the tuple with omega(y1, ..., yp) in slot k equals
  omega applied to the p tuples with yj in slot k (for a constant c, the
  tuple with c in slot k equals c);
- action extraction: the tuple with fk(c)(xk) in slot k equals the action
  of c on the tuple;
- the monoid laws of the actions: act_unit(t) = t and
  act_ab(t) = act_a(act_b(t));
- the endomorphism law: act_c(omega(t1, ..., tp)) = omega(act_c(t1), ...).

Equal terms share one e-class; e-nodes are hash-consed on their symbol and
the canonical classes of their children so that the classes always form a
congruence of the term algebra.
"""
from dataclasses import dataclass, field
import itertools
import warnings

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from . import datasets, utils
from .algebra import (FiniteAlgebra, Mapping, ProductCodec,
                      generated_subalgebra)
from .polymorphism import MultiMap, is_reduced_polymorphism
from .representation import (Representation, RepMorphism, is_morphism,
                             validate_representation)
from .signature import Generator, Apply, Act, eval_term
from .utils import (ActorMismatch, SignatureMismatch, NotMonoidMode,
                    EmptyList, DimensionMismatch, TruncatedResult,
                    InvalidRepresentation, NotAReducedPolymorphism,
                    FactorizationInconsistent, TruncationWarning, Report)


@dataclass(frozen=True, eq=False)
class TensorResult:
    """
    Outcome of a tensor product saturation

    Attributes
    ----------
    quotient : FiniteAlgebra or None
        the algebra M/N; None when truncated
    induced : Representation or None
        action F of the common actor on the quotient; None when truncated
    gen_map : MultiMap
        g1, the class of each generator tuple; for truncated results the
        classes are those reached when saturation stopped
    status : {'complete', 'truncated'}
        whether saturation reached a fixpoint
    depth : int
        saturation levels run
    n_classes : int
        number of classes when saturation stopped
    class_terms : tuple of terms
        least term of each class, in class order
    factors : tuple of Representation
        input representations
    """
    quotient: object
    induced: object
    gen_map: MultiMap
    status: str
    depth: int
    n_classes: int
    class_terms: tuple
    factors: tuple
    term_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'class_terms', tuple(self.class_terms))
        object.__setattr__(self, 'factors', tuple(self.factors))
        object.__setattr__(self, 'term_index',
                           {t: i for i, t in enumerate(self.class_terms)})

    @property
    def complete(self):
        return self.status == 'complete'

    @property
    def actor(self):
        return self.factors[0].actor

    @property
    def codec(self):
        return ProductCodec(self.gen_map.src_sizes)

    def require_complete(self):
        if not self.complete:
            raise TruncatedResult(
                f"saturation stopped after {self.depth} levels with "
                f"{self.n_classes} classes", witness=(self.depth,
                                                      self.n_classes))

    def evaluate(self, term):
        """
        Class of a term over the generator tuples, generators numbered in
        row-major order of the product
        """
        self.require_complete()
        return eval_term(self.quotient, term, self.gen_map.values.ravel(),
                         rep=self.induced)

    def __repr__(self):
        return (f"TensorResult(status={self.status}, classes={self.n_classes}, "
                f"depth={self.depth})")


class _TermGraph:
    """
    Hash-consed e-nodes over a union-find of class ids

    E-node keys are (symbol, children) with symbol ('gen', i), ('op', name)
    or ('act', c) and children a tuple of class ids.
    """

    def __init__(self, budget):
        self.budget = budget
        self.classes = DisjointSet()
        self.hashcons = {}
        self.nodes = []          # (symbol, children, class id) as inserted

    def find(self, cid):
        return self.classes[cid]

    def canonical(self, symbol, children):
        return symbol, tuple(self.find(c) for c in children)

    def lookup(self, symbol, children):
        key = self.canonical(symbol, children)
        cid = self.hashcons.get(key)
        return None if cid is None else self.find(cid)

    def add(self, symbol, children=()):
        key = self.canonical(symbol, children)
        if key in self.hashcons:
            return self.find(self.hashcons[key])
        if len(self.nodes) >= self.budget:
            raise utils.BudgetExceeded(
                f"e-nodes: saturation passed the budget of {self.budget} "
                f"(set {utils.BUDGET_ENV} to raise it)")
        cid = len(self.nodes)
        self.classes.add(cid)
        self.hashcons[key] = cid
        self.nodes.append((symbol, key[1], cid))
        return cid

    def merge(self, a, b):
        return bool(self.classes.merge(a, b))

    def rebuild(self):
        """
        Re-canonicalize every node and merge classes whose nodes collide;
        returns True if any merge happened
        """
        changed = False
        while True:
            merged = False
            table = {}
            for symbol, children, cid in self.nodes:
                key = self.canonical(symbol, children)
                other = table.setdefault(key, cid)
                if self.merge(other, cid):
                    merged = True
            self.hashcons = table
            changed |= merged
            if not merged:
                return changed

    def class_ids(self):
        return sorted({self.find(cid) for _, _, cid in self.nodes})

    def nodes_by_class(self):
        members = {}
        for symbol, children, cid in self.nodes:
            key = self.canonical(symbol, children)
            members.setdefault(self.find(cid), set()).add(key)
        return members


def _check_factors(reps):
    reps = list(reps)
    if not reps:
        raise EmptyList("tensor product of an empty list of representations")
    first = reps[0]
    for k, f in enumerate(reps):
        if not f.is_monoid:
            raise NotMonoidMode(
                f"representation {k} is not in monoid mode", witness=k)
        if f.actor != first.actor or (f.mul, f.unit) != (first.mul,
                                                          first.unit):
            raise ActorMismatch(
                f"representation {k} does not share the actor of "
                f"representation 0", witness=k)
        if f.carrier.sig != first.carrier.sig:
            raise SignatureMismatch(
                f"carrier {k} has another signature", witness=k)
    for k, f in enumerate(reps):
        report = validate_representation(f)
        if not report.ok:
            row = report.violations[0]
            raise InvalidRepresentation(
                f"representation {k} fails its '{row['check']}' check",
                witness=(k, row['check'], row['witness']))
    return reps


def _seed_relations(graph, reps, codec, gen_ids):
    """
    Slot-wise linearity and action extraction at every generator tuple
    """
    sig = reps[0].carrier.sig
    for k, f in enumerate(reps):
        B = f.carrier
        for x in codec.tuples():
            if x[k] != 0:
                continue

            def gen(value, x=x):
                y = list(x)
                y[k] = int(value)
                return gen_ids[codec.encode(y)]

            for name, p in sig.ops:
                table = B.tables[name]
                if p == 0:
                    graph.merge(gen(table), graph.add(('op', name)))
                    continue
                for ys in itertools.product(range(B.size), repeat=p):
                    node = graph.add(('op', name),
                                     tuple(gen(y) for y in ys))
                    graph.merge(gen(table[ys]), node)
            for c in f.actor.elements:
                for value in B.elements:
                    graph.merge(gen(f.action[c, value]),
                                graph.add(('act', c), (gen(value),)))


def _fire_rules(graph, rep):
    """
    Monoid and endomorphism laws over the existing nodes; returns True if
    a class was merged or a node added
    """
    unit = rep.unit_element
    changed = False
    members = graph.nodes_by_class()
    for symbol, children in list(graph.hashcons):
        if symbol[0] != 'act':
            continue
        a, (child,) = symbol[1], children
        cid = graph.lookup(symbol, children)
        if a == unit:
            changed |= graph.merge(cid, child)
        for inner_symbol, inner_children in members.get(graph.find(child), ()):
            if inner_symbol[0] == 'act':
                b = inner_symbol[1]
                other = graph.lookup(('act', rep.product(a, b)),
                                     inner_children)
                if other is not None:
                    changed |= graph.merge(cid, other)
            elif inner_symbol[0] == 'op':
                acted = [graph.lookup(symbol, (t,)) for t in inner_children]
                if any(t is None for t in acted):
                    continue
                before = len(graph.nodes)
                other = graph.add(inner_symbol, tuple(acted))
                changed |= len(graph.nodes) > before
                changed |= graph.merge(cid, other)
    return changed


def _close(graph, rep):
    while True:
        changed = graph.rebuild()
        changed |= _fire_rules(graph, rep)
        if not changed:
            graph.rebuild()
            return


def _grow(graph, sig, actor):
    """
    Apply every operation and action once to the current classes
    """
    ids = graph.class_ids()
    count = sum(len(ids) ** p for _, p in sig.ops if p > 0)
    count += actor.size * len(ids)
    utils.check_budget(len(graph.nodes) + count, graph.budget, what='e-nodes')
    for name, p in sig.ops:
        if p == 0:
            continue
        for args in itertools.product(ids, repeat=p):
            graph.add(('op', name), args)
    for c in actor.elements:
        for cid in ids:
            graph.add(('act', c), (cid,))


def _least_terms(graph, sig):
    """
    Least term of every class under term_key, by iterating to a fixpoint
    """
    best = {}
    keys = {}
    while True:
        updated = False
        for symbol, children, cid in graph.nodes:
            children = tuple(graph.find(c) for c in children)
            cid = graph.find(cid)
            if any(c not in best for c in children):
                continue
            kind, value = symbol
            subkeys = tuple(keys[c] for c in children)
            depth = 1 + max((k[0] for k in subkeys), default=-1)
            if kind == 'gen':
                term = Generator(value)
                key = (0, (0, value), ())
            elif kind == 'op':
                term = Apply(value, tuple(best[c] for c in children))
                key = (depth, (1, sig.index(value)), subkeys)
            else:
                term = Act(value, best[children[0]])
                key = (depth, (2, value), subkeys)
            if cid not in best or key < keys[cid]:
                best[cid], keys[cid] = term, key
                updated = True
        if not updated:
            return best, keys


def _read_off(graph, reps, codec, gen_ids, complete):
    sig = reps[0].carrier.sig
    best, keys = _least_terms(graph, sig)
    order = sorted(best, key=keys.__getitem__)
    index = {cid: i for i, cid in enumerate(order)}

    gen_values = np.array([index[graph.find(g)] for g in gen_ids],
                          dtype=np.int64).reshape(codec.sizes)
    gen_map = MultiMap(gen_values, len(order))
    class_terms = [best[cid] for cid in order]
    if not complete:
        return None, None, gen_map, class_terms

    tables = {}
    for name, p in sig.ops:
        table = np.zeros((len(order),) * p, dtype=np.int64)
        for args in itertools.product(range(len(order)), repeat=p):
            node = graph.lookup(('op', name), tuple(order[a] for a in args))
            table[args] = index[node]
        tables[name] = table
    quotient = FiniteAlgebra(sig, len(order), tables)

    actor = reps[0].actor
    action = np.array([[index[graph.lookup(('act', c), (cid,))]
                        for cid in order] for c in actor.elements],
                      dtype=np.int64)
    induced = Representation(actor, quotient, action, 'monoid',
                             reps[0].mul, reps[0].unit)

    return quotient, induced, gen_map, class_terms


def tensor_product(reps, depth=None, classes=None, budget=None,
                   verbose=False):
    """
    Tensor product of representations of a common monoid

    Parameters
    ----------
    reps : list of Representation
        monoid-mode representations of one actor on carriers with one
        signature
    depth : int, optional
        number of saturation levels; default utils.DEFAULT_DEPTH_BUDGET
    classes : int, optional
        maximal number of classes; default utils.DEFAULT_CLASS_BUDGET
    budget : int, optional
        cap on e-nodes, see utils.get_budget
    verbose : bool
        print one line per saturation level

    Returns
    -------
    TensorResult
        complete when a level adds no class that does not already contain
        a node of the previous levels; otherwise truncated with
        TruncationWarning

    Raises
    ------
    EmptyList, NotMonoidMode, ActorMismatch, SignatureMismatch
    InvalidRepresentation
        a factor fails validate_representation; witness (k, check, witness)
    BudgetExceeded
        the e-node count passes the budget
    """
    reps = _check_factors(reps)
    depth = utils.DEFAULT_DEPTH_BUDGET if depth is None else int(depth)
    classes = utils.DEFAULT_CLASS_BUDGET if classes is None else int(classes)
    if depth < 0 or classes <= 0:
        raise ValueError("depth must be nonnegative and classes positive")

    rep = reps[0]
    sig = rep.carrier.sig
    codec = ProductCodec([f.carrier.size for f in reps])
    graph = _TermGraph(utils.get_budget(budget))

    gen_ids = [graph.add(('gen', i)) for i in range(codec.size)]
    for c in sig.constants:
        graph.add(('op', c))
    _seed_relations(graph, reps, codec, gen_ids)
    _close(graph, rep)

    level, complete = 0, False
    n_classes = len(graph.class_ids())
    while n_classes <= classes and level < depth:
        old = set(range(len(graph.nodes)))
        _grow(graph, sig, rep.actor)
        _close(graph, rep)
        level += 1

        with_old = {graph.find(cid) for _, _, cid in graph.nodes
                    if cid in old}
        n_classes = len(graph.class_ids())
        if verbose:
            print(f'\t level = {level}, e-nodes = {len(graph.nodes)}, '
                  f'classes = {n_classes}')
        if len(with_old) == n_classes:
            complete = n_classes <= classes
            break

    if not complete:
        warnings.warn(
            f"saturation stopped after {level} levels with {n_classes} "
            f"classes (depth budget {depth}, class budget {classes})",
            TruncationWarning)

    quotient, induced, gen_map, class_terms = _read_off(
        graph, reps, codec, gen_ids, complete)

    return TensorResult(quotient=quotient, induced=induced, gen_map=gen_map,
                        status='complete' if complete else 'truncated',
                        depth=level, n_classes=n_classes,
                        class_terms=class_terms, factors=reps)


def tensor_power(rep, n, **kwargs):
    """
    Tensor product of n copies of `rep`
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    return tensor_product([rep] * n, **kwargs)


def tensor_element(result, tup):
    """
    Class of the generator tuple x1 (x) ... (x) xn

    Generators are materialized before saturation starts, so this also
    works on truncated results.
    """
    tup = tuple(int(x) for x in tup)
    sizes = result.gen_map.src_sizes
    if len(tup) != len(sizes) or any(not 0 <= x < s
                                     for x, s in zip(tup, sizes)):
        raise DimensionMismatch(
            f"tuple {tup} does not index carriers of sizes {sizes}",
            witness=tup)
    return result.gen_map(*tup)


def factor_polymorphism(result, g2, target):
    """
    Factor a reduced polymorphism through the tensor product

    Parameters
    ----------
    result : TensorResult
        complete tensor product of `result.factors`
    g2 : MultiMap
        reduced polymorphism of the factors into `target`
    target : Representation
        target representation

    Returns
    -------
    RepMorphism
        (id, h) from result.induced to target with h o g1 = g2

    Raises
    ------
    TruncatedResult, NotAReducedPolymorphism
    FactorizationInconsistent
        the evaluated map disagrees with g2, is not a morphism, or the
        generators do not reach every class
    """
    result.require_complete()
    verdict = is_reduced_polymorphism(g2, list(result.factors), target)
    if not verdict:
        raise NotAReducedPolymorphism(
            "only reduced polymorphisms factor through the tensor product",
            witness=verdict.witness)

    gens = g2.values.ravel()
    h = Mapping(np.array([eval_term(target.carrier, t, gens, rep=target)
                          for t in result.class_terms], dtype=np.int64),
                target.carrier.size)

    composite = result.gen_map.postcompose(h)
    idx = utils.first_true(composite.values != g2.values)
    if idx is not None:
        raise FactorizationInconsistent(
            f"h o g1 differs from g2 at {idx}", witness=idx)

    m = RepMorphism(Mapping.identity(result.actor.size), h)
    verdict = is_morphism(m, result.induced, target)
    if not verdict:
        raise FactorizationInconsistent(
            "the induced map is not a morphism of representations",
            witness=verdict.witness)

    reached = generated_subalgebra(result.quotient,
                                   np.unique(result.gen_map.values),
                                   actions=result.induced.transformations())
    if len(reached) != result.quotient.size:
        missing = min(set(result.quotient.elements) - reached)
        raise FactorizationInconsistent(
            f"class {missing} is not generated by the tensors",
            witness=missing)

    return m


def _factorizations(result, g2, target):
    """
    All maps h with h o g1 = g2 making (id, h) a morphism
    """
    q = result.quotient.size
    v = target.carrier.size
    ident = Mapping.identity(result.actor.size)
    found = []
    for values in itertools.product(range(v), repeat=q):
        h = Mapping(np.array(values), v)
        if not np.array_equal(result.gen_map.postcompose(h).values,
                              g2.values):
            continue
        if is_morphism(RepMorphism(ident, h), result.induced, target):
            found.append(h)
    return found


def verify_universal_property(result, reps=None, bound=2, budget=None,
                              verbose=False):
    """
    Check that every reduced polymorphism into every small target factors
    uniquely through the tensor product

    Targets are the algebras of `datasets.fetch_targets` with at most
    `bound` elements, each with every monoid-mode representation of the
    common actor.

    Parameters
    ----------
    result : TensorResult
        complete tensor product
    reps : list of Representation, optional
        factors, default result.factors
    bound : int
        largest target size
    budget : int, optional
        cap on enumerated candidate maps per target
    verbose : bool
        print one line per target

    Returns
    -------
    Report
        one 'factorization' row per target representation with columns
        'target', 'candidates', 'polymorphisms'; the witness of a failing
        row is the values of the offending g2 and the error or the number
        of factorizations found
    """

    result.require_complete()
    reps = list(result.factors if reps is None else reps)
    first = reps[0]
    budget = utils.get_budget(budget)

    report = Report()
    for name, V in datasets.fetch_targets(first.carrier.sig, bound):
        targets = datasets.monoid_representations(
            first.actor, V, first.mul, first.unit, budget=budget)
        for t, target in enumerate(targets):
            n_cells = int(np.prod(result.gen_map.src_sizes))
            utils.check_budget(V.size ** n_cells, budget,
                               what='candidate multimaps')
            candidates = polymorphisms = 0
            witness = None
            for values in itertools.product(range(V.size), repeat=n_cells):
                candidates += 1
                g2 = MultiMap(np.array(values).reshape(
                    result.gen_map.src_sizes), V.size)
                if not is_reduced_polymorphism(g2, reps, target):
                    continue
                polymorphisms += 1
                try:
                    factor_polymorphism(result, g2, target)
                except (NotAReducedPolymorphism,
                        FactorizationInconsistent) as exc:
                    witness = (list(values), type(exc).__name__)
                    break
                n_found = len(_factorizations(result, g2, target))
                if n_found != 1:
                    witness = (list(values), n_found)
                    break
            if verbose:
                print(f'\t target = {name}, representation = {t}, '
                      f'polymorphisms = {polymorphisms}/{candidates}')
            report.add('factorization', witness is None, witness,
                       target=name, representation=t,
                       candidates=candidates, polymorphisms=polymorphisms)

    return report
