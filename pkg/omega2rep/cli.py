# -*- coding: utf-8 -*-
"""
Command-line front door

Exit codes: 0 pass, 1 property fail, 2 input error, 3 truncated.
"""
import argparse
import json
import sys
import warnings

from . import io, utils
from .algebra import FiniteAlgebra, is_homomorphism, validate_algebra
from .congruence import Congruence, quotient_algebra
from .polymorphism import (MultiMap, is_polymorphism, is_reduced_polymorphism,
                           check_slotwise_equations)
from .representation import (Representation, RepMorphism, is_morphism,
                             quotient_representation, validate_representation)
from .tensor import (TensorResult, tensor_product, factor_polymorphism,
                     verify_universal_property)
from .utils import (Report, AlgebraError, NotAReducedPolymorphism,
                    FactorizationInconsistent, TruncationWarning)


EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_TRUNCATED = 3


def _emit(report, as_json):
    """
    Print a report as lines of 'check [columns]: ok|FAIL witness', or as
    JSON records
    """
    if as_json:
        print(json.dumps(report.to_records()))
        return
    for row in report:
        extra = ' '.join(f'{k}={v}' for k, v in row.items()
                         if k not in ('check', 'ok', 'witness'))
        label = f"{row['check']} {extra}".rstrip()
        if row['ok']:
            print(f'{label}: ok')
        else:
            print(f"{label}: FAIL witness={row['witness']}", file=sys.stderr)


def _verdict_report(check, verdict):
    report = Report()
    report.add(check, verdict.ok, verdict.witness)
    return report


def _as_multimap(obj):
    if isinstance(obj, MultiMap):
        return obj
    return MultiMap(obj.values, obj.dst_size)


def _reps_and_target(ws, args, arity):
    if args.over is not None:
        rep = ws.get(args.over)
        return [rep] * arity, rep
    if not args.reps or args.target is None:
        raise AlgebraError("give --over REP or --reps ... --target REP")
    return [ws.get(name) for name in args.reps], ws.get(args.target)


def cmd_validate(ws, args):
    """
    Validate every object of a file
    """
    obj = io.load(args.path)
    objects = obj if isinstance(obj, dict) else {args.path: obj}

    report = Report()
    for name, item in objects.items():
        if isinstance(item, FiniteAlgebra):
            rows = validate_algebra(item)
        elif isinstance(item, Representation):
            rows = validate_representation(item)
        elif isinstance(item, TensorResult) and item.complete:
            rows = validate_representation(item.induced)
        else:
            rows = Report()
            rows.add('structure', True)
        for row in rows:
            report.add(row['check'], row['ok'], row['witness'], object=name,
                       **{k: v for k, v in row.items()
                          if k not in ('check', 'ok', 'witness')})
    return report


def cmd_check(ws, args):
    kind = args.kind
    if kind == 'hom':
        h_name, src_name, dst_name = args.names
        src, dst = ws.get(src_name), ws.get(dst_name)
        h = ws.mapping(h_name, src.size)
        return _verdict_report('hom', is_homomorphism(h, src, dst))

    if kind == 'rep':
        rep = ws.get(args.names[0], validate=False)
        return validate_representation(rep)

    if kind == 'morphism':
        m_name, src_name, dst_name = args.names
        src, dst = ws.get(src_name), ws.get(dst_name)
        if m_name == 'identity':
            m = RepMorphism(ws.mapping('identity', src.actor.size),
                            ws.mapping('identity', src.carrier.size))
        else:
            m = ws.get(m_name)
        return _verdict_report('morphism', is_morphism(m, src, dst))

    R = _as_multimap(ws.get(args.names[0]))
    reps, target = _reps_and_target(ws, args, R.arity)
    if kind == 'reduced':
        return _verdict_report('reduced',
                               is_reduced_polymorphism(R, reps, target))

    r = None if args.r is None else _as_multimap(ws.get(args.r))
    if args.itemized:
        return check_slotwise_equations(r, R, reps, target)
    return _verdict_report('polymorphism', is_polymorphism(r, R, reps, target))


def cmd_quotient(ws, args):
    obj = ws.get(args.name)
    cong = ws.get(args.congruence)
    if not isinstance(cong, Congruence):
        raise AlgebraError(f"'{args.congruence}' is not a congruence")
    if isinstance(obj, Representation):
        quotient, _ = quotient_representation(obj, cong)
        size = quotient.carrier.size
    else:
        quotient, _ = quotient_algebra(obj, cong)
        size = quotient.size
    if args.out:
        io.dump(quotient, args.out)
    report = Report()
    report.add('quotient', True, classes=size)
    return report


def cmd_tensor(ws, args):
    reps = [ws.get(name) for name in args.reps]
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', TruncationWarning)
        result = tensor_product(reps, depth=args.depth, classes=args.classes,
                                verbose=args.verbose)
    if args.out:
        io.dump(result, args.out)
    report = Report()
    report.add('tensor', True, status=result.status, classes=result.n_classes,
               depth=result.depth)
    return report, (EXIT_PASS if result.complete else EXIT_TRUNCATED)


def cmd_factor(ws, args):
    result = ws.get(args.result)
    g2 = _as_multimap(ws.get(args.g2))
    target = ws.get(args.target)
    report = Report()
    try:
        m = factor_polymorphism(result, g2, target)
    except (NotAReducedPolymorphism, FactorizationInconsistent) as exc:
        report.add('factor', False, exc.witness, error=type(exc).__name__)
        return report
    if args.out:
        io.dump(m, args.out)
    report.add('factor', True, h=m.R.values.tolist())
    return report


def cmd_universal(ws, args):
    result = ws.get(args.result)
    return verify_universal_property(result, bound=args.bound,
                                     verbose=args.verbose)


def get_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='print reports as JSON records')
    common.add_argument('--load', action='append', default=[],
                        metavar='PATH', help='load named objects from a file')
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(
        prog='omega2rep',
        description='Finite representations of universal algebras: '
                    'checkers, quotients and tensor products')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', parents=[common],
                       help='validate every object of a file')
    p.add_argument('path')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('check', parents=[common],
                       help='check a homomorphism, representation, '
                            'morphism or polymorphism')
    p.add_argument('kind', choices=['hom', 'rep', 'morphism',
                                    'polymorphism', 'reduced'])
    p.add_argument('names', nargs='+',
                   help='hom: MAP SRC DST; rep: REP; morphism: M SRC DST; '
                        'polymorphism/reduced: R')
    p.add_argument('--over', help='single representation for every slot '
                                  'and the target')
    p.add_argument('--reps', nargs='+', help='source representations')
    p.add_argument('--target', help='target representation')
    p.add_argument('--r', help='actor map of a polymorphism')
    p.add_argument('--itemized', action='store_true',
                   help='report every equation family')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser('quotient', parents=[common],
                       help='quotient of an algebra or representation')
    p.add_argument('name')
    p.add_argument('congruence')
    p.add_argument('--out')
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser('tensor', parents=[common],
                       help='tensor product of representations')
    p.add_argument('reps', nargs='+')
    p.add_argument('--depth', type=int, default=utils.DEFAULT_DEPTH_BUDGET)
    p.add_argument('--classes', type=int, default=utils.DEFAULT_CLASS_BUDGET)
    p.add_argument('--out')
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser('factor', parents=[common],
                       help='factor a reduced polymorphism through a '
                            'tensor product')
    p.add_argument('result')
    p.add_argument('g2')
    p.add_argument('target')
    p.add_argument('--out')
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser('universal', parents=[common],
                       help='check the universal property of a tensor '
                            'product')
    p.add_argument('result')
    p.add_argument('--bound', type=int, default=2)
    p.set_defaults(func=cmd_universal)

    return parser


def main(argv=None):
    args = get_parser().parse_args(argv)

    try:
        ws = io.Workspace(args.load)
        outcome = args.func(ws, args)
    except utils.ParseError as exc:
        print(f'parse error at line {exc.lineno}, column {exc.colno}: {exc}',
              file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, utils.BudgetExceeded, OSError) as exc:
        print(f'{type(exc).__name__}: {exc}', file=sys.stderr)
        return EXIT_INPUT

    if isinstance(outcome, tuple):
        report, code = outcome
    else:
        report = outcome
        code = EXIT_PASS if report.ok else EXIT_FAIL
    _emit(report, args.json)
    return code


if __name__ == '__main__':
    sys.exit(main())
