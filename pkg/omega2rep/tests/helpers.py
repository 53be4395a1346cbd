# -*- coding: utf-8 -*-
"""
Brute-force helpers shared by the tests
"""
import itertools

import numpy as np


def find_isomorphism(src, dst):
    """
    Bijection p with p(omega(x...)) = omega(p x...) for every operation,
    as an array, or None

    Only meant for the small carriers of the test fixtures.
    """
    if src.sig != dst.sig or src.size != dst.size:
        return None
    for perm in itertools.permutations(range(src.size)):
        perm = np.array(perm)
        if all(np.array_equal(perm[src.tables[name]],
                              dst.tables[name][np.ix_(*([perm] * p))]
                              if p else dst.tables[name])
               for name, p in src.sig.ops):
            return perm
    return None


def is_isomorphic(src, dst):
    return find_isomorphism(src, dst) is not None


def all_multimaps(src_sizes, dst_size):
    """
    Value arrays of every map from the product of `src_sizes`
    """
    cells = int(np.prod(src_sizes))
    for values in itertools.product(range(dst_size), repeat=cells):
        yield np.array(values).reshape(src_sizes)
