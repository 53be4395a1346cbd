# -*- coding: utf-8 -*-
"""
Functionality for fetching fixture algebras and representations
"""
import os
import re
import itertools

import numpy as np

from . import utils
from .algebra import FiniteAlgebra, endomorphisms, product_algebra
from .congruence import congruence_closure
from .representation import Representation, validate_representation
from .signature import make_signature
from .utils import NameNotFound


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

GROUP_OPS = (('add', 2), ('neg', 1), ('zero', 0))
MONOID_OPS = (('mul', 2), ('one', 0))

# name patterns of the constructed fixtures, n a positive integer
FIXTURE_PATTERNS = {
    r'z(\d+)': 'cyclic group Z_n',
    r'scal(\d+)': 'monoid {0, 1} acting on Z_n by a*x',
    r'mult(\d+)': 'multiplicative monoid of Z_n acting on Z_n',
    r'transl(\d+)': 'Z_n acting on itself by translation (tabular mode)',
    r'scalars': 'the monoid {0, 1}',
}

# groups up to isomorphism, by order
GROUP_LIBRARY_ORDER = 5


def group_signature(kind='omega2'):
    return make_signature(kind, GROUP_OPS)


def monoid_signature(kind='omega1'):
    return make_signature(kind, MONOID_OPS)


def cyclic_group(n, kind='omega2'):
    """
    Z_n with add, neg and zero

    Parameters
    ----------
    n : int
        order, >= 1
    kind : {'omega2', 'omega1'}
        signature tag, 'omega1' to use the group as an actor
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    return FiniteAlgebra.from_operations(
        group_signature(kind), n,
        {'add': lambda x, y: (x + y) % n,
         'neg': lambda x: (-x) % n,
         'zero': lambda: 0})


def trivial_algebra(sig):
    """
    One-element algebra of signature `sig`
    """
    return FiniteAlgebra(sig, 1, {name: np.zeros((1,) * p, dtype=np.int64)
                                  for name, p in sig.ops})


def multiplicative_monoid(n):
    """
    Z_n under multiplication with unit 1 (mod n)
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    return FiniteAlgebra.from_operations(
        monoid_signature(), n,
        {'mul': lambda a, b: (a * b) % n,
         'one': lambda: 1 % n})


def scalar_monoid():
    """
    The monoid {0, 1} under multiplication
    """
    return multiplicative_monoid(2)


def _scaling(actor, n):
    a = np.arange(actor.size)[:, None]
    x = np.arange(n)[None, :]
    return (a * x) % n


def scalar_representation(n):
    """
    scal_n: the monoid {0, 1} acting on Z_n, 0 by the zero map and 1 by the
    identity
    """
    actor = scalar_monoid()
    return Representation(actor, cyclic_group(n), _scaling(actor, n),
                          'monoid', 'mul', 'one')


def multiplicative_representation(n):
    """
    Multiplicative monoid of Z_n acting on Z_n by a*x
    """
    actor = multiplicative_monoid(n)
    return Representation(actor, cyclic_group(n), _scaling(actor, n),
                          'monoid', 'mul', 'one')


def translation_representation(n):
    """
    Z_n acting on itself by x -> x + a

    Translations are not group endomorphisms; the representation is
    tabular and fails validate_representation for n > 1.
    """
    actor = cyclic_group(n, kind='omega1')
    action = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return Representation(actor, cyclic_group(n), action)


def trivial_representation(actor, carrier, mul=None, unit=None):
    """
    Every actor element acts as the identity; monoid mode when `mul` and
    `unit` are given
    """
    action = np.tile(np.arange(carrier.size), (actor.size, 1))
    mode = 'tabular' if mul is None else 'monoid'
    return Representation(actor, carrier, action, mode, mul, unit)


def _canonical_form(alg, perms):
    """
    Lexicographically least relabelling of the tables, used to identify
    isomorphic algebras
    """
    best = None
    for perm in perms:
        inv = np.argsort(perm)
        form = []
        for name, p in alg.sig.ops:
            table = alg.tables[name]
            if p:
                table = table[np.ix_(*([inv] * p))]
            form.append(perm[table].tobytes())
        form = tuple(form)
        if best is None or form < best:
            best = form
    return best


def enumerate_algebras(sig, size, budget=None):
    """
    All algebras of signature `sig` on `size` elements, one per
    isomorphism class

    Raises
    ------
    BudgetExceeded
    """
    shapes = [(name, (size,) * p) for name, p in sig.ops]
    cells = sum(int(np.prod(shape, dtype=np.int64)) for _, shape in shapes)
    utils.check_budget(size ** cells, budget, what=f'algebras of size {size}')

    perms = [np.array(p) for p in itertools.permutations(range(size))]
    seen, found = set(), []
    for values in itertools.product(range(size), repeat=cells):
        tables, start = {}, 0
        for name, shape in shapes:
            count = int(np.prod(shape, dtype=np.int64))
            tables[name] = np.array(values[start:start + count]).reshape(shape)
            start += count
        alg = FiniteAlgebra(sig, size, tables)
        form = _canonical_form(alg, perms)
        if form not in seen:
            seen.add(form)
            found.append(alg)
    return found


def fetch_targets(sig, bound, budget=None):
    """
    Target algebras of at most `bound` elements, up to isomorphism

    For the group signature (add, neg, zero) these are the groups of
    order up to `bound`: Z_1, Z_2, Z_3, Z_4, Z_2 x Z_2 and Z_5. Any other
    signature is enumerated by brute force.

    Returns
    -------
    list of (str, FiniteAlgebra)

    Raises
    ------
    ValueError
        group signature and bound above GROUP_LIBRARY_ORDER
    BudgetExceeded
        brute-force enumeration passes the budget
    """
    if bound < 1:
        raise ValueError("bound must be a positive integer")

    if sig.ops == GROUP_OPS:
        if bound > GROUP_LIBRARY_ORDER:
            raise ValueError(f"the group library stops at order "
                             f"{GROUP_LIBRARY_ORDER}")
        library = [(f'z{n}', cyclic_group(n, sig.kind))
                   for n in range(1, GROUP_LIBRARY_ORDER + 1)]
        klein, _ = product_algebra([cyclic_group(2, sig.kind)] * 2)
        library.insert(4, ('z2xz2', klein))
        return [(name, alg) for name, alg in library if alg.size <= bound]

    targets = []
    for size in range(1, bound + 1):
        for i, alg in enumerate(enumerate_algebras(sig, size, budget)):
            targets.append((f'alg{size}_{i}', alg))
    return targets


def monoid_representations(actor, carrier, mul, unit, budget=None):
    """
    All monoid-mode representations of `actor` on `carrier`

    Returns
    -------
    list of Representation, lexicographic in the action tables
    """
    ends = endomorphisms(carrier, budget=budget)
    utils.check_budget(len(ends) ** actor.size, budget,
                       what='action tables')

    found = []
    for choice in itertools.product(ends, repeat=actor.size):
        action = np.array([h.values for h in choice], dtype=np.int64)
        rep = Representation(actor, carrier, action, 'monoid', mul, unit)
        if validate_representation(rep).ok:
            found.append(rep)
    return found


def make_random_algebra(size, sig=None, seed=None):
    """
    Algebra with uniformly random tables

    Parameters
    ----------
    size : int
        number of elements
    sig : Signature, optional
        default: one binary and one unary operation
    seed : int, array_like[ints], SeedSequence, BitGenerator, Generator, optional
        seed to initialize the random number generator, by default None
        for details, see numpy.random.default_rng()
    """
    if sig is None:
        sig = make_signature('omega2', [('op', 2), ('un', 1)])

    # use random number generator for reproducibility
    rng = np.random.default_rng(seed=seed)

    tables = {name: rng.integers(size, size=(size,) * p)
              for name, p in sig.ops}
    return FiniteAlgebra(sig, size, tables)


def make_random_fixture(seed=None, max_size=6):
    """
    Random tabular representation together with a congruence every action
    is coordinated with

    The actor has 1 to 3 elements and one binary operation, the carrier 1 to
    `max_size` elements. The congruence is the closure of at most one
    random pair under the operations and the actions.

    Returns
    -------
    rep : Representation
    cong : Congruence
    """
    rng = np.random.default_rng(seed=seed)

    size = int(rng.integers(1, max_size + 1))
    carrier = make_random_algebra(size, seed=rng)
    actor = make_random_algebra(
        int(rng.integers(1, 4)), make_signature('omega1', [('mul', 2)]),
        seed=rng)
    action = rng.integers(size, size=(actor.size, size))
    rep = Representation(actor, carrier, action)

    pairs = []
    if size > 1 and rng.random() < 0.8:
        pairs.append(tuple(rng.choice(size, size=2, replace=False)))
    cong = congruence_closure(carrier, pairs, rep.transformations())

    return rep, cong


def get_fixture_list():
    """
    Name patterns of the constructed fixtures and the files shipped in
    DATA_DIR
    """
    files = sorted(f[:-5] for f in os.listdir(DATA_DIR) if f.endswith('.json'))
    return list(FIXTURE_PATTERNS) + files


def fetch_fixture(name):
    """
    Constructed fixture matching one of FIXTURE_PATTERNS, or the object
    stored in DATA_DIR under `name`.json

    Raises
    ------
    NameNotFound
    """
    builders = {
        r'z(\d+)': cyclic_group,
        r'scal(\d+)': scalar_representation,
        r'mult(\d+)': multiplicative_representation,
        r'transl(\d+)': translation_representation,
    }
    for pattern, builder in builders.items():
        match = re.fullmatch(pattern, name)
        if match:
            return builder(int(match.group(1)))
    if name == 'scalars':
        return scalar_monoid()

    if os.path.exists(os.path.join(DATA_DIR, f'{name}.json')):
        return load_file(f'{name}.json')

    raise NameNotFound(f"no fixture named '{name}'", witness=name)


def load_file(filename):
    """
    Load an object or bundle from DATA_DIR

    Parameters
    ----------
    filename : str
        file name relative to DATA_DIR

    Returns
    -------
    object
        see io.load
    """
    from . import io
    return io.load(os.path.join(DATA_DIR, filename))
