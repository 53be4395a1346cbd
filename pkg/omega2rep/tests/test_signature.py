# -*- coding: utf-8 -*-
"""
For testing omega2rep.signature functionality
"""
import pytest

from omega2rep import datasets, utils
from omega2rep.signature import (make_signature, eval_term, enumerate_terms,
                                 term_key, Generator, Apply, Act)
from omega2rep.utils import (DuplicateOpName, NegativeArity, UnknownOp,
                             ArityMismatch, GeneratorOutOfRange,
                             ActWithoutRepresentation, DimensionMismatch,
                             BudgetExceeded)


GROUP = [('add', 2), ('neg', 1), ('zero', 0)]


class TestSignature():

    def test_make_signature(self):
        sig = make_signature('omega2', GROUP)
        assert sig.names == ('add', 'neg', 'zero')
        assert sig.arity('add') == 2
        assert sig.constants == ('zero',), "constants are the nullary ops"
        assert sig.ops_of_arity(1) == ('neg',)

        monoid = make_signature('omega1', [('mul', 2), ('one', 0)])
        assert monoid.kind == 'omega1'
        assert 'one' in monoid and 'add' not in monoid

    def test_invalid_signatures(self):
        with pytest.raises(DuplicateOpName):
            make_signature('omega2', [('add', 2), ('add', 1)])
        with pytest.raises(NegativeArity):
            make_signature('omega2', [('add', -1)])
        with pytest.raises(ValueError):
            make_signature('omega3', GROUP)
        with pytest.raises(UnknownOp):
            make_signature('omega2', GROUP).arity('mul')


class TestTerms():

    def test_eval_term(self):
        z4 = datasets.cyclic_group(4)
        assert eval_term(z4, Apply('zero'), []) == 0
        term = Apply('neg', (Apply('add', (Generator(0), Generator(0))),))
        assert eval_term(z4, term, [1]) == 2, "-(1+1) is 2 mod 4"

        scal2 = datasets.scalar_representation(2)
        assert eval_term(scal2.carrier, Act(0, Generator(0)), [1],
                         rep=scal2) == 0
        assert eval_term(scal2.carrier, Act(1, Generator(0)), [1],
                         rep=scal2) == 1

    def test_eval_term_errors(self):
        z4 = datasets.cyclic_group(4)
        with pytest.raises(UnknownOp):
            eval_term(z4, Apply('mul', (Generator(0), Generator(0))), [1])
        with pytest.raises(GeneratorOutOfRange):
            eval_term(z4, Generator(1), [1])
        with pytest.raises(ActWithoutRepresentation):
            eval_term(z4, Act(0, Generator(0)), [1])
        with pytest.raises(ArityMismatch):
            eval_term(z4, Apply('add', (Generator(0),)), [1])

        scal2 = datasets.scalar_representation(2)
        for actor in (2, -1):
            term = Act(actor, Generator(0))
            with pytest.raises(DimensionMismatch) as exc:
                eval_term(scal2.carrier, term, [1], rep=scal2)
            assert exc.value.witness == term

    def test_enumerate_terms(self):
        sig = make_signature('omega2', GROUP)
        assert enumerate_terms(sig, 1) == [Generator(0), Apply('zero')]
        assert len(enumerate_terms(sig, 1, depth=1)) == 8, \
            "2 depth-0 terms, 4 sums and 2 negations"

        bare = make_signature('omega2', [('add', 2)])
        assert enumerate_terms(bare, 0, depth=0) == []

        with pytest.raises(ValueError):
            enumerate_terms(sig, 1, depth=-1)

    def test_enumerate_terms_properties(self):
        """
        Levels are nested and every term evaluates in Z4
        """
        sig = make_signature('omega2', GROUP)
        z4 = datasets.cyclic_group(4)
        previous = set()
        for depth in range(3):
            terms = enumerate_terms(sig, 2, depth=depth)
            assert previous <= set(terms), "levels are not nested"
            assert terms == sorted(terms, key=lambda t: term_key(t, sig))
            for t in terms:
                assert 0 <= eval_term(z4, t, [1, 3]) < 4
            previous = set(terms)

    def test_term_order(self):
        sig = make_signature('omega2', GROUP)
        terms = [Act(0, Generator(0)), Apply('neg', (Generator(0),)),
                 Apply('zero'), Generator(1), Generator(0)]
        ordered = sorted(terms, key=lambda t: term_key(t, sig))
        assert ordered == [Generator(0), Generator(1), Apply('zero'),
                           Apply('neg', (Generator(0),)),
                           Act(0, Generator(0))]

    def test_actions(self):
        sig = make_signature('omega2', [('neg', 1)])
        terms = enumerate_terms(sig, 1, action_set=[0, 1], depth=1)
        assert set(terms) == {Generator(0), Apply('neg', (Generator(0),)),
                              Act(0, Generator(0)), Act(1, Generator(0))}


class TestBudget():

    def test_enumeration_budget(self):
        sig = make_signature('omega2', GROUP)
        with pytest.raises(BudgetExceeded):
            enumerate_terms(sig, 3, depth=3, budget=100)

    def test_environment_budget(self, monkeypatch):
        monkeypatch.setenv(utils.BUDGET_ENV, '5')
        assert utils.get_budget() == 5
        assert utils.get_budget(7) == 7, "explicit budget wins"
        with pytest.raises(BudgetExceeded):
            utils.check_budget(6)

        monkeypatch.setenv(utils.BUDGET_ENV, 'many')
        with pytest.raises(ValueError):
            utils.get_budget()
        monkeypatch.setenv(utils.BUDGET_ENV, '0')
        with pytest.raises(ValueError):
            utils.get_budget()
