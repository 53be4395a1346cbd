# -*- coding: utf-8 -*-
"""
For testing omega2rep.congruence functionality
"""
import numpy as np
import pytest
from sympy.utilities.iterables import multiset_partitions

from omega2rep import datasets
from omega2rep.algebra import Mapping, is_homomorphism
from omega2rep.congruence import (Congruence, congruence_closure,
                                  check_congruence, quotient_algebra,
                                  factor_through_quotient, is_coordinated)
from omega2rep.utils import NotACongruence, KernelTooSmall, DimensionMismatch

from .helpers import is_isomorphic


HALVES = [[0, 2], [1, 3]]


def least_congruence(alg, pairs, transformations):
    """
    Least partition containing `pairs`, compatible with the operations and
    coordinated with `transformations`, by scanning every partition
    """
    candidates = []
    for blocks in multiset_partitions(list(range(alg.size))):
        cong = Congruence.from_classes(alg.size, blocks)
        if not all(cong.equivalent(x, y) for x, y in pairs):
            continue
        if not check_congruence(alg, cong):
            continue
        if all(is_coordinated(h, cong) for h in transformations):
            candidates.append(cong)
    least = [c for c in candidates if all(c.refines(d) for d in candidates)]
    assert len(least) == 1, "compatible partitions have no least element"
    return least[0]


class TestCongruence():

    def test_representation(self):
        cong = Congruence.from_classes(4, HALVES)
        assert cong.rep.tolist() == [0, 1, 0, 1]
        assert cong.classes == HALVES
        assert cong.n_classes == 2
        assert cong.class_index.tolist() == [0, 1, 0, 1]
        assert cong.pairs() == [(0, 2), (1, 3)]
        assert Congruence.discrete(4).refines(cong)
        assert not cong.refines(Congruence.discrete(4))

        with pytest.raises(ValueError):
            Congruence([0, 0, 1, 1])


class TestClosure():

    def test_examples(self):
        z4 = datasets.cyclic_group(4)
        assert congruence_closure(z4, [(0, 2)]).classes == HALVES
        assert congruence_closure(z4) == Congruence.discrete(4)
        assert congruence_closure(datasets.cyclic_group(2),
                                  [(0, 1)]).n_classes == 1

    def test_transformations(self):
        z4 = datasets.cyclic_group(4)
        swap = Mapping([0, 1, 3, 2], 4)
        cong = congruence_closure(z4, [(0, 2)], [swap])
        assert is_coordinated(swap, cong)
        assert check_congruence(z4, cong)

    def test_idempotent(self):
        for seed in range(20):
            alg = datasets.make_random_algebra(5, seed=seed)
            cong = congruence_closure(alg, [(0, 1)])
            assert congruence_closure(alg, cong.pairs()) == cong

    def test_minimality(self):
        """
        The closure is the least compatible partition, checked against all
        partitions of carriers with up to five elements
        """
        rng = np.random.default_rng(seed=1234)
        for size in range(1, 6):
            for _ in range(8):
                alg = datasets.make_random_algebra(size, seed=rng)
                pairs = [tuple(rng.integers(size, size=2))]
                transformations = [Mapping(rng.integers(size, size=size), size)]
                cong = congruence_closure(alg, pairs, transformations)
                assert cong == least_congruence(alg, pairs, transformations), \
                    f"closure is not least for size {size}"


class TestQuotient():

    def test_halves(self):
        z4 = datasets.cyclic_group(4)
        quotient, j = quotient_algebra(z4, Congruence.from_classes(4, HALVES))
        assert quotient.size == 2
        assert quotient('add', 1, 1) == 0
        assert is_isomorphic(quotient, datasets.cyclic_group(2))
        assert is_homomorphism(j, z4, quotient), "projection is not a hom"

    def test_discrete(self):
        alg = datasets.make_random_algebra(4, seed=7)
        quotient, j = quotient_algebra(alg, Congruence.discrete(4))
        assert quotient == alg
        assert j.is_identity()

    def test_not_a_congruence(self):
        z4 = datasets.cyclic_group(4)
        with pytest.raises(NotACongruence) as exc:
            quotient_algebra(z4, Congruence.from_classes(4, [[0, 1], [2, 3]]))
        assert exc.value.witness == ('add', (1, 1), (0, 0))

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            check_congruence(datasets.cyclic_group(4), Congruence.discrete(3))


class TestFactorization():

    def test_projection(self):
        cong = Congruence.from_classes(4, HALVES)
        assert factor_through_quotient(cong.projection(), cong).is_identity()

    def test_mod2(self):
        cong = Congruence.from_classes(4, HALVES)
        h = factor_through_quotient(Mapping([0, 1, 0, 1], 2), cong)
        assert h.values.tolist() == [0, 1]

    def test_unique(self):
        """
        Every class map g with g o j = f' is the returned h
        """
        cong = Congruence.from_classes(4, HALVES)
        fprime = Mapping([1, 0, 1, 0], 3)
        h = factor_through_quotient(fprime, cong)
        j = cong.projection()
        for values in np.ndindex(3, 3):
            g = Mapping(np.array(values), 3)
            if g.compose(j) == fprime:
                assert g == h

    def test_kernel_too_small(self):
        with pytest.raises(KernelTooSmall) as exc:
            factor_through_quotient(Mapping.identity(4),
                                    Congruence.from_classes(4, HALVES))
        assert exc.value.witness == (0, 2)


class TestCoordinated():

    def test_examples(self):
        cong = Congruence.from_classes(4, HALVES)
        assert is_coordinated(Mapping.identity(4), cong)
        assert is_coordinated(Mapping.constant(4, 4, 0), cong)

        verdict = is_coordinated(Mapping([0, 1, 1, 3], 4), cong)
        assert not verdict
        assert verdict.witness == (0, 2)

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            is_coordinated(Mapping([0, 1], 2), Congruence.discrete(4))
