# -*- coding: utf-8 -*-
"""
JSON persistence of signatures, algebras, congruences, representations,
maps and tensor results, and the named-object workspace of the command
line
"""
import json
import os

import numpy as np

from . import datasets, utils
from .algebra import FiniteAlgebra, Mapping, validate_algebra
from .congruence import Congruence
from .polymorphism import MultiMap
from .representation import (Representation, RepMorphism,
                             validate_representation)
from .signature import Signature, Generator, Apply, Act, make_signature
from .tensor import TensorResult
from .utils import (AlgebraError, ParseError, NameNotFound,
                    InvalidRepresentation)


# encoding
def encode_term(term):
    if isinstance(term, Generator):
        return ['gen', term.index]
    if isinstance(term, Apply):
        return ['apply', term.op, [encode_term(a) for a in term.args]]
    if isinstance(term, Act):
        return ['act', term.actor, encode_term(term.arg)]
    raise TypeError(f"not a term: {term!r}")


def decode_term(data):
    tag = data[0]
    if tag == 'gen':
        return Generator(int(data[1]))
    if tag == 'apply':
        return Apply(str(data[1]), tuple(decode_term(a) for a in data[2]))
    if tag == 'act':
        return Act(int(data[1]), decode_term(data[2]))
    raise ParseError(f"unknown term tag {tag!r}")


def _encode_multimap(values, dst_size):
    values = np.asarray(values)
    return {'arity': values.ndim, 'src_sizes': list(values.shape),
            'dst_size': int(dst_size), 'values': values.tolist()}


def to_json(obj):
    """
    JSON-ready dict of a toolkit object

    Parameters
    ----------
    obj : Signature, FiniteAlgebra, Congruence, Representation, Mapping,
          MultiMap, RepMorphism or TensorResult
    """
    if isinstance(obj, Signature):
        return {'kind': obj.kind,
                'ops': [{'name': n, 'arity': p} for n, p in obj.ops]}

    if isinstance(obj, FiniteAlgebra):
        data = {'sig': to_json(obj.sig), 'size': obj.size,
                'tables': {name: utils.to_builtin(t)
                           for name, t in obj.tables.items()}}
        if obj.labels is not None:
            data['labels'] = list(obj.labels)
        return data

    if isinstance(obj, Congruence):
        return {'size': obj.carrier_size, 'classes': obj.classes}

    if isinstance(obj, Representation):
        data = {'actor': to_json(obj.actor), 'carrier': to_json(obj.carrier),
                'action': obj.action.tolist(), 'actor_mode': obj.actor_mode}
        if obj.is_monoid:
            data.update(mul=obj.mul, unit=obj.unit)
        return data

    if isinstance(obj, (Mapping, MultiMap)):
        return _encode_multimap(obj.values, obj.dst_size)

    if isinstance(obj, RepMorphism):
        return {'r': to_json(obj.r), 'R': to_json(obj.R)}

    if isinstance(obj, TensorResult):
        if obj.complete:
            status = 'complete'
        else:
            status = {'truncated': {'depth': obj.depth,
                                    'classes': obj.n_classes}}
        return {'quotient': None if obj.quotient is None
                else to_json(obj.quotient),
                'induced': None if obj.induced is None
                else to_json(obj.induced),
                'gen_map': to_json(obj.gen_map),
                'status': status,
                'depth': obj.depth,
                'class_terms': [encode_term(t) for t in obj.class_terms],
                'factors': [to_json(f) for f in obj.factors]}

    raise TypeError(f"cannot serialize {type(obj).__name__}")


# decoding
def _decode_signature(data):
    return make_signature(data['kind'],
                          [(op['name'], op['arity']) for op in data['ops']])


def _decode_algebra(data):
    return FiniteAlgebra(_decode_signature(data['sig']), data['size'],
                         data['tables'], data.get('labels'))


def _decode_map(data):
    values = np.array(data['values'], dtype=np.int64)
    if list(values.shape) != list(data['src_sizes']) \
            or values.ndim != data['arity']:
        raise ParseError("map values do not match 'src_sizes'")
    if values.ndim == 1:
        return Mapping(values, data['dst_size'])
    return MultiMap(values, data['dst_size'])


def _decode_representation(data):
    return Representation(_decode_algebra(data['actor']),
                          _decode_algebra(data['carrier']),
                          data['action'], data.get('actor_mode', 'tabular'),
                          data.get('mul'), data.get('unit'))


def _decode_tensor(data):
    gen_map = _decode_map(data['gen_map'])
    if isinstance(gen_map, Mapping):
        gen_map = MultiMap.from_mapping(gen_map)
    status = data['status']
    if status == 'complete':
        depth = data.get('depth', 0)
    else:
        depth = status['truncated']['depth']
        status = 'truncated'
    quotient = data.get('quotient')
    induced = data.get('induced')
    return TensorResult(
        quotient=None if quotient is None else _decode_algebra(quotient),
        induced=None if induced is None else _decode_representation(induced),
        gen_map=gen_map, status=status, depth=depth,
        n_classes=gen_map.dst_size,
        class_terms=[decode_term(t) for t in data.get('class_terms', [])],
        factors=[_decode_representation(f) for f in data.get('factors', [])])


def kind_of(data):
    """
    Object kind of a decoded JSON dict, detected from its keys
    """
    if not isinstance(data, dict):
        raise ParseError(f"expected an object, got {type(data).__name__}")
    keys = set(data)
    if 'objects' in keys:
        return 'bundle'
    if 'gen_map' in keys:
        return 'tensor'
    if {'actor', 'carrier', 'action'} <= keys:
        return 'representation'
    if {'r', 'R'} <= keys:
        return 'morphism'
    if {'values', 'src_sizes'} <= keys:
        return 'map'
    if {'sig', 'tables'} <= keys:
        return 'algebra'
    if {'kind', 'ops'} <= keys:
        return 'signature'
    if {'size', 'classes'} <= keys:
        return 'congruence'
    raise ParseError(f"unrecognized object with keys {sorted(keys)}")


def from_json(data):
    """
    Toolkit object from a decoded JSON dict; bundles become a dict of
    {name: object}

    Raises
    ------
    ParseError
        unknown kind or missing fields
    AlgebraError
        the fields are well-formed but inconsistent
    """
    kind = kind_of(data)
    try:
        if kind == 'bundle':
            return {name: from_json(obj)
                    for name, obj in data['objects'].items()}
        if kind == 'signature':
            return _decode_signature(data)
        if kind == 'algebra':
            return _decode_algebra(data)
        if kind == 'congruence':
            return Congruence.from_classes(data['size'], data['classes'])
        if kind == 'representation':
            return _decode_representation(data)
        if kind == 'map':
            return _decode_map(data)
        if kind == 'morphism':
            r, R = _decode_map(data['r']), _decode_map(data['R'])
            return RepMorphism(r, R)
        return _decode_tensor(data)
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed {kind}: {exc!r}") from exc


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, lineno=exc.lineno, colno=exc.colno) from exc
    return from_json(data)


def dumps(obj, indent=None):
    if isinstance(obj, dict):
        data = {'objects': {name: to_json(o) for name, o in obj.items()}}
    else:
        data = to_json(obj)
    return json.dumps(data, indent=indent)


def load(path):
    """
    Read an object, or a bundle as {name: object}, from a JSON file
    """
    with open(path) as f:
        return loads(f.read())


def dump(obj, path, indent=1):
    """
    Write an object, or a dict of named objects as a bundle
    """
    with open(path, 'w') as f:
        f.write(dumps(obj, indent=indent))


def check_object(obj, representations=True):
    """
    Validation of a loaded object before use

    Operation tables are always checked, also inside representations and
    tensor results. With `representations`, representations and the
    factors of tensor results must also pass validate_representation.

    Raises
    ------
    AlgebraError
        invalid tables, witness the first violation
    InvalidRepresentation
        witness (check, witness) of the first violation row
    """
    if isinstance(obj, FiniteAlgebra):
        algebras, reps = [obj], []
    elif isinstance(obj, Representation):
        algebras, reps = [obj.actor, obj.carrier], [obj]
    elif isinstance(obj, TensorResult):
        algebras = [a for f in obj.factors for a in (f.actor, f.carrier)]
        reps = list(obj.factors)
    else:
        return obj
    for alg in algebras:
        report = validate_algebra(alg)
        if not report.ok:
            raise AlgebraError("invalid operation tables",
                               witness=report.violations[0]['witness'])
    if not representations:
        return obj
    for rep in reps:
        report = validate_representation(rep)
        if not report.ok:
            row = report.violations[0]
            raise InvalidRepresentation(
                f"representation fails its '{row['check']}' check, "
                f"witness {row['witness']}",
                witness=(row['check'], row['witness']))
    return obj


class Workspace:
    """
    Named objects loaded from files, with the constructed fixtures of
    `datasets` as fallback

    Parameters
    ----------
    paths : list of str, optional
        files to load; bundle members keep their names, a single object is
        named by the file stem
    """

    def __init__(self, paths=()):
        self.objects = {}
        for path in paths:
            self.add_file(path)

    def add_file(self, path):
        obj = load(path)
        if isinstance(obj, dict):
            self.objects.update(obj)
        else:
            self.objects[os.path.splitext(os.path.basename(path))[0]] = obj
        return obj

    def add(self, name, obj):
        self.objects[name] = obj

    def names(self):
        return sorted(self.objects)

    def get(self, name, validate=True):
        """
        Object by name, file path or fixture name, validated by
        `check_object`; `validate=False` skips validate_representation

        Raises
        ------
        NameNotFound, AlgebraError, InvalidRepresentation
        """
        if name in self.objects:
            obj = self.objects[name]
        elif os.path.isfile(name):
            obj = self.add_file(name)
            if isinstance(obj, dict):
                raise NameNotFound(f"'{name}' is a bundle, name a member",
                                   witness=name)
        else:
            obj = datasets.fetch_fixture(name)
            self.objects[name] = obj
        return check_object(obj, representations=validate)

    def mapping(self, name, src_size):
        """
        Map by name; 'identity' is the identity of a `src_size` carrier
        """
        if name == 'identity':
            return Mapping.identity(src_size)
        obj = self.get(name)
        if isinstance(obj, MultiMap) and obj.arity == 1:
            obj = Mapping(obj.values, obj.dst_size)
        if not isinstance(obj, Mapping):
            raise NameNotFound(f"'{name}' is not a map", witness=name)
        return obj
