# -*- coding: utf-8 -*-
"""
For testing omega2rep.io functionality
"""
import json
import warnings

import numpy as np
import pytest

from omega2rep import datasets, io
from omega2rep.algebra import FiniteAlgebra, Mapping
from omega2rep.congruence import Congruence
from omega2rep.polymorphism import MultiMap
from omega2rep.representation import Representation, RepMorphism
from omega2rep.signature import Generator, Apply, Act
from omega2rep.tensor import tensor_product
from omega2rep.utils import (ParseError, NameNotFound, AlgebraError,
                             DimensionMismatch, InvalidRepresentation,
                             TruncationWarning)


class TestTerms():

    def test_encode(self):
        term = Act(1, Apply('add', (Generator(0), Apply('zero'))))
        data = io.encode_term(term)
        assert data == ['act', 1, ['apply', 'add', [['gen', 0],
                                                     ['apply', 'zero', []]]]]
        assert io.decode_term(json.loads(json.dumps(data))) == term

    def test_unknown_tag(self):
        with pytest.raises(ParseError):
            io.decode_term(['var', 0])


class TestObjects():

    def test_algebra(self):
        z4 = datasets.fetch_fixture('z4')
        loaded = io.loads(io.dumps(z4))
        assert loaded == z4
        assert io.to_json(z4)['tables']['zero'] == 0

    def test_representation(self):
        for name in ['scal2', 'mult3', 'transl3']:
            rep = datasets.fetch_fixture(name)
            assert io.loads(io.dumps(rep)) == rep, f"{name} changed"

    def test_maps(self):
        mod2 = Mapping([0, 1, 0, 1], 2)
        assert isinstance(io.loads(io.dumps(mod2)), Mapping), \
            "one-slot maps load as mappings"
        mul = MultiMap([[0, 0], [0, 1]], 2)
        assert io.loads(io.dumps(mul)) == mul

        m = RepMorphism(Mapping.identity(2), Mapping([0, 0], 2))
        assert io.loads(io.dumps(m)) == m

    def test_congruence(self):
        cong = Congruence.from_classes(4, [[0, 2], [1, 3]])
        assert io.to_json(cong) == {'size': 4, 'classes': [[0, 2], [1, 3]]}
        assert io.loads(io.dumps(cong)) == cong

    def test_tensor(self):
        scal2 = datasets.scalar_representation(2)
        result = tensor_product([scal2, scal2])
        loaded = io.loads(io.dumps(result))
        assert loaded.complete
        assert loaded.gen_map == result.gen_map
        assert loaded.quotient == result.quotient
        assert loaded.induced == result.induced
        assert loaded.class_terms == result.class_terms
        assert loaded.factors == result.factors
        assert loaded.evaluate(Generator(3)) == result.gen_map(1, 1)

    def test_truncated_tensor(self):
        scal2 = datasets.scalar_representation(2)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', TruncationWarning)
            result = tensor_product([scal2, scal2], depth=0)
        data = io.to_json(result)
        assert data['status'] == {'truncated': {'depth': 0,
                                                'classes': result.n_classes}}
        loaded = io.from_json(data)
        assert loaded.status == 'truncated' and loaded.quotient is None
        assert loaded.gen_map == result.gen_map

    def test_not_serializable(self):
        with pytest.raises(TypeError):
            io.to_json(object())


class TestParsing():

    def test_syntax_error(self):
        text = '{"size": 4,\n "classes": [[0, 2] [1, 3]]}'
        with pytest.raises(ParseError) as exc:
            io.loads(text)
        assert exc.value.lineno == 2

    def test_unknown_kind(self):
        with pytest.raises(ParseError):
            io.loads('{"foo": 1}')
        with pytest.raises(ParseError):
            io.loads('[1, 2]')

    def test_malformed(self):
        with pytest.raises(ParseError):
            io.loads('{"arity": 1, "src_sizes": [3], "dst_size": 2, '
                     '"values": [0, 1]}')
        with pytest.raises(ParseError):
            io.loads('{"sig": {"kind": "omega2", "ops": []}, "tables": {}}')

        with pytest.raises(AlgebraError) as exc:
            io.loads('{"size": 4, "classes": [[0, 2], [2, 3]]}')
        assert exc.value.witness == 2, "overlapping classes are rejected"
        with pytest.raises(DimensionMismatch):
            io.loads('{"size": 4, "classes": [[0, -1]]}')

    def test_inconsistent(self):
        with pytest.raises(AlgebraError):
            io.loads('{"arity": 1, "src_sizes": [2], "dst_size": 2, '
                     '"values": [0, 5]}')


class TestFiles():

    def test_bundle(self, tmp_path):
        path = tmp_path / 'bundle.json'
        objects = {'z2': datasets.cyclic_group(2),
                   'scal2': datasets.scalar_representation(2),
                   'halves': Congruence.from_classes(4, [[0, 2], [1, 3]])}
        io.dump(objects, path)
        loaded = io.load(path)
        assert sorted(loaded) == ['halves', 'scal2', 'z2']
        assert all(loaded[name] == obj for name, obj in objects.items())

    def test_workspace(self, tmp_path):
        bundle = tmp_path / 'bundle.json'
        io.dump({'double': Mapping([0, 2, 0, 2], 4)}, bundle)
        single = tmp_path / 'swap.json'
        io.dump(Mapping([1, 0], 2), single)

        ws = io.Workspace([str(bundle), str(single)])
        assert ws.names() == ['double', 'swap']
        assert ws.mapping('double', 4).values.tolist() == [0, 2, 0, 2]
        assert ws.mapping('identity', 3).is_identity()
        assert ws.get('scal2') == datasets.scalar_representation(2)
        assert ws.mapping('mod2-z4', 4) == Mapping([0, 1, 0, 1], 2)

        with pytest.raises(NameNotFound):
            ws.get('missing')
        with pytest.raises(NameNotFound):
            ws.mapping('mul-z2', 2)
        with pytest.raises(NameNotFound):
            ws.get(str(bundle))

    def test_workspace_paths(self, tmp_path):
        path = tmp_path / 'z3.json'
        io.dump(datasets.cyclic_group(3), path)
        ws = io.Workspace()
        assert ws.get(str(path)).size == 3
        assert 'z3' in ws.names()

    def test_invalid_tables(self, tmp_path):
        z2 = datasets.cyclic_group(2)
        tables = dict(z2.tables)
        tables['neg'] = np.array([0, 7])
        ws = io.Workspace()
        ws.add('broken', FiniteAlgebra(z2.sig, 2, tables))
        with pytest.raises(AlgebraError) as exc:
            ws.get('broken')
        assert exc.value.witness == ('neg', (1,), 'out of range')

    def test_invalid_representation(self):
        """
        Representations must pass validate_representation before use,
        unless the caller asks only for the tables to be checked
        """
        swap = Representation(datasets.scalar_monoid(),
                              datasets.cyclic_group(2), [[1, 0], [0, 1]],
                              'monoid', 'mul', 'one')
        ws = io.Workspace()
        ws.add('swap', swap)
        with pytest.raises(InvalidRepresentation) as exc:
            ws.get('swap')
        assert exc.value.witness[0] == 'endomorphism'
        assert ws.get('swap', validate=False) == swap

        with pytest.raises(InvalidRepresentation):
            ws.get('transl3')
