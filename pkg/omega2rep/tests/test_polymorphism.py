# -*- coding: utf-8 -*-
"""
For testing omega2rep.polymorphism functionality
"""
import pytest

from omega2rep import datasets
from omega2rep.algebra import Mapping
from omega2rep.polymorphism import (MultiMap, check_slotwise_equations,
                                    is_polymorphism, is_reduced_polymorphism,
                                    is_polymorphism_of,
                                    is_reduced_polymorphism_of,
                                    identity_element, check_bridge,
                                    check_action_commutation,
                                    monoid_product_map, find_composite_actor)
from omega2rep.representation import Representation, morphisms
from omega2rep.tensor import tensor_product
from omega2rep.utils import (DimensionMismatch, ActorMismatch,
                             MissingActorMap, MonoidUnitMismatch,
                             NotAReducedPolymorphism, NotMonoidMode)

from .helpers import all_multimaps


MUL = MultiMap([[0, 0], [0, 1]], 2)
ADD = MultiMap([[0, 1], [1, 0]], 2)
PROJ = MultiMap([[0, 0], [1, 1]], 2)


@pytest.fixture
def scal2():
    return datasets.scalar_representation(2)


class TestMultiMap():

    def test_basics(self):
        mul3 = MultiMap.from_function((3, 3), 3, lambda x, y: (x * y) % 3)
        assert mul3.arity == 2 and mul3.src_sizes == (3, 3)
        assert mul3(2, 2) == 1

        negate = Mapping([0, 2, 1], 3)
        assert mul3.postcompose(negate)(1, 1) == 2
        assert MultiMap.from_mapping(negate)(1) == 2
        assert MultiMap.constant((2, 3), 4, 1).values.sum() == 6

    def test_errors(self):
        with pytest.raises(DimensionMismatch):
            MultiMap(0, 2)
        with pytest.raises(DimensionMismatch):
            MultiMap([[0, 2]], 2)
        with pytest.raises(DimensionMismatch):
            MUL.postcompose(Mapping.identity(3))


class TestPolymorphism():

    def test_product(self, scal2):
        r = monoid_product_map(scal2, 2)
        assert r == MUL
        assert is_polymorphism(r, MUL, [scal2, scal2], scal2)
        assert is_polymorphism_of(r, MultiMap.constant((2, 2), 2, 0), scal2), \
            "the zero map satisfies every equation"

    def test_sum_is_not_linear(self, scal2):
        """
        x -> x + 1 is not additive, so (mul, add) fails already in the
        omega2 family
        """
        verdict = is_polymorphism_of(MUL, ADD, scal2)
        assert not verdict
        assert verdict.witness == {'clause': 'omega2', 'slot': 0,
                                   'frozen': (None, 1), 'op': 'add',
                                   'args': (0, 0)}

    def test_itemized(self, scal2):
        report = check_slotwise_equations(MUL, ADD, [scal2, scal2], scal2)
        assert [(row['check'], row['slot']) for row in report] == \
            [('omega1', 0), ('omega1', 1), ('omega2', 0), ('omega2', 1),
             ('ak', None)]
        assert report.get('omega1', slot=0)[0]['ok']
        assert report.get('ak')[0]['witness'] == {'slot': None,
                                                  'a': (0, 1), 'm': (0, 1)}

    def test_omega1_failure(self, scal2):
        r = MultiMap([[1, 0], [0, 1]], 2)
        verdict = is_polymorphism_of(r, MUL, scal2)
        assert verdict.witness['clause'] == 'omega1'
        assert verdict.witness['slot'] == 0

    def test_errors(self, scal2):
        with pytest.raises(MissingActorMap):
            is_polymorphism(None, MUL, [scal2, scal2], scal2)
        with pytest.raises(DimensionMismatch):
            is_polymorphism(MUL, MUL, [scal2, scal2, scal2], scal2)
        with pytest.raises(DimensionMismatch):
            is_polymorphism(MultiMap.constant((2, 2), 3, 0), MUL,
                            [scal2, scal2], scal2)


class TestReducedPolymorphism():

    def test_examples(self, scal2):
        assert is_reduced_polymorphism_of(MUL, scal2)
        assert is_reduced_polymorphism_of(MultiMap.constant((2, 2), 2, 0),
                                          scal2)
        assert is_reduced_polymorphism_of(MultiMap.from_mapping(
            Mapping.identity(2)), scal2), "unary case is a reduced morphism"

        mult3 = datasets.multiplicative_representation(3)
        R = MultiMap.from_function((3, 3), 3, lambda x, y: (x * y) % 3)
        assert is_reduced_polymorphism_of(R, mult3)

    def test_projection(self, scal2):
        verdict = is_reduced_polymorphism_of(PROJ, scal2)
        assert verdict.witness == {'clause': 'omega2', 'slot': 1,
                                   'frozen': (1, None), 'op': 'add',
                                   'args': (0, 0)}

        report = check_slotwise_equations(None, PROJ, [scal2, scal2], scal2)
        assert [(row['check'], row['slot'], row['ok']) for row in report] == \
            [('omega2', 0, True), ('ak', 0, True), ('omega2', 1, False),
             ('ak', 1, False)]
        assert report.get('ak', slot=1)[0]['witness'] == {'slot': 1, 'a': 0,
                                                          'm': (1, 0)}

    def test_actor_mismatch(self):
        scal3 = datasets.scalar_representation(3)
        mult3 = datasets.multiplicative_representation(3)
        R = MultiMap.constant((3, 3), 3, 0)
        with pytest.raises(ActorMismatch) as exc:
            is_reduced_polymorphism(R, [scal3, scal3], mult3)
        assert exc.value.witness == 0


class TestIdentityElement():

    def test_examples(self, scal2):
        assert identity_element(scal2) == 1
        assert identity_element(datasets.translation_representation(3)) == 0

        constant = Representation(datasets.scalar_monoid(),
                                  datasets.cyclic_group(3),
                                  [[0, 0, 0], [1, 1, 1]])
        assert identity_element(constant) is None

    def test_least(self):
        trivial = datasets.trivial_representation(
            datasets.scalar_monoid(), datasets.cyclic_group(2), 'mul', 'one')
        assert identity_element(trivial) == 0, "least of several identities"

    def test_unit_mismatch(self):
        rep = Representation(datasets.scalar_monoid(), datasets.cyclic_group(2),
                             [[0, 1], [0, 0]], 'monoid', 'mul', 'one')
        with pytest.raises(MonoidUnitMismatch) as exc:
            identity_element(rep)
        assert exc.value.witness == 1


class TestBridge():

    def test_product(self, scal2):
        report = check_bridge(MUL, MUL, [scal2, scal2], scal2)
        assert [row['check'] for row in report] == \
            ['identity', 'unit_slots', 'specialization', 'reduction']
        assert report.ok
        assert report.get('identity')[0]['e'] == 1

    def test_no_identity(self):
        constant = Representation(datasets.scalar_monoid(),
                                  datasets.cyclic_group(3),
                                  [[0, 0, 0], [1, 1, 1]])
        report = check_bridge(MultiMap.constant((2, 2), 2, 0),
                              MultiMap.constant((3, 3), 3, 0),
                              [constant, constant], constant)
        assert len(report) == 1 and not report.ok

    def test_unit_slots(self, scal2):
        report = check_bridge(MultiMap.constant((2, 2), 2, 0), MUL,
                              [scal2, scal2], scal2)
        assert report.get('unit_slots')[0]['witness'] == {'slot': 0, 'a': 1}
        assert not report.get('reduction')

    def test_implication(self, scal2):
        """
        Whenever the bridge conditions hold for a polymorphism (r, R) of
        scal2, R is a reduced polymorphism; all 256 pairs are scanned
        """
        reps = [scal2, scal2]
        bridged = 0
        for r_values in all_multimaps((2, 2), 2):
            r = MultiMap(r_values, 2)
            for R_values in all_multimaps((2, 2), 2):
                R = MultiMap(R_values, 2)
                report = check_bridge(r, R, reps, scal2)
                conditions = all(row['ok'] for row in report
                                 if row['check'] != 'reduction')
                if conditions and is_polymorphism(r, R, reps, scal2):
                    bridged += 1
                    assert is_reduced_polymorphism(R, reps, scal2)
                    assert report.get('reduction')[0]['ok']
        assert bridged > 0


class TestActionCommutation():

    def test_examples(self, scal2):
        assert check_action_commutation(MUL, [scal2, scal2], scal2)
        with pytest.raises(NotAReducedPolymorphism):
            check_action_commutation(ADD, [scal2, scal2], scal2)

    def test_factored_polymorphisms(self):
        """
        Every h o g1, for h a morphism from a tensor product into a small
        target representation, is a reduced polymorphism whose slot
        actions commute
        """
        scal = datasets.scalar_representation
        mult3 = datasets.multiplicative_representation(3)
        fixed = datasets.monoid_representations(
            datasets.scalar_monoid(), datasets.cyclic_group(4), 'mul', 'one')
        factor_lists = [[scal(2), scal(2)], [scal(3), scal(3)],
                        [scal(4), scal(4)], [scal(2), scal(3)],
                        [scal(4), scal(2)], [mult3, mult3],
                        [fixed[-1], scal(2)]]

        checked = 0
        for reps in factor_lists:
            result = tensor_product(reps)
            first = reps[0]
            for _, V in datasets.fetch_targets(first.carrier.sig, 5):
                for target in datasets.monoid_representations(
                        first.actor, V, first.mul, first.unit):
                    for m in morphisms(result.induced, target, reduced=True):
                        g2 = result.gen_map.postcompose(m.R)
                        assert is_reduced_polymorphism(g2, reps, target)
                        verdict = check_action_commutation(g2, reps, target)
                        assert verdict, verdict.witness
                        checked += 1
        assert checked >= 100, f"only {checked} polymorphisms were built"


class TestMonoidHelpers():

    def test_product_map(self):
        mult3 = datasets.multiplicative_representation(3)
        r = monoid_product_map(mult3, 3)
        assert r(2, 2, 2) == 2 and r(2, 2, 1) == 1
        with pytest.raises(NotMonoidMode):
            monoid_product_map(datasets.translation_representation(2), 2)

    def test_composite_actor(self):
        assert find_composite_actor(
            datasets.multiplicative_representation(3), 2, 2) == 1
        assert find_composite_actor(
            datasets.translation_representation(3), 1, 1) == 2

        doubling = Representation(datasets.scalar_monoid(),
                                  datasets.cyclic_group(4),
                                  [[0, 1, 2, 3], [0, 2, 0, 2]])
        assert find_composite_actor(doubling, 1, 1) is None
