# -*- coding: utf-8 -*-
"""
Shared constants, error classes and report containers
"""
import os
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import pandas as pd


# budgets
DEFAULT_TERM_BUDGET = 100_000
DEFAULT_DEPTH_BUDGET = 4
DEFAULT_CLASS_BUDGET = 10_000
BACKTRACK_THRESHOLD = 6

BUDGET_ENV = 'OMEGA_REP_BUDGET'


def get_budget(budget=None):
    """
    Global budget on enumerated objects (terms, self-maps, e-nodes,
    candidate maps)

    Parameters
    ----------
    budget : int, optional
        explicit budget, takes precedence over the environment

    Returns
    -------
    budget : int
        `budget` if given, else the value of OMEGA_REP_BUDGET if set, else
        DEFAULT_TERM_BUDGET

    Raises
    ------
    ValueError
        budget is not a positive integer
    """
    if budget is None:
        budget = os.environ.get(BUDGET_ENV, DEFAULT_TERM_BUDGET)
    try:
        budget = int(budget)
    except (TypeError, ValueError) as exc:
        raise ValueError(
            f"{BUDGET_ENV} must be a positive integer, got {budget!r}"
        ) from exc
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")

    return budget


def check_budget(count, budget=None, what='objects'):
    """
    Raise BudgetExceeded if `count` is above the budget
    """
    budget = get_budget(budget)
    if count > budget:
        raise BudgetExceeded(
            f"{what}: {count} exceeds the budget of {budget} "
            f"(set {BUDGET_ENV} to raise it)"
        )


# errors
class AlgebraError(ValueError):
    """
    Base class for invalid algebraic input

    Parameters
    ----------
    message : str
        human readable description
    witness : object, optional
        least counterexample, if the error was found by a scan
    """

    def __init__(self, message='', witness=None):
        super().__init__(message)
        self.witness = witness


class DuplicateOpName(AlgebraError):
    pass


class NegativeArity(AlgebraError):
    pass


class UnknownOp(AlgebraError):
    pass


class ArityMismatch(AlgebraError):
    pass


class GeneratorOutOfRange(AlgebraError):
    pass


class ActWithoutRepresentation(AlgebraError):
    pass


class SignatureMismatch(AlgebraError):
    pass


class DimensionMismatch(AlgebraError):
    pass


class EmptyList(AlgebraError):
    pass


class ActorMismatch(AlgebraError):
    pass


class NotMonoidMode(AlgebraError):
    pass


class NotACongruence(AlgebraError):
    pass


class KernelTooSmall(AlgebraError):
    pass


class NotCoordinated(AlgebraError):
    pass


class InvalidRepresentation(AlgebraError):
    pass


class NotAMorphism(AlgebraError):
    pass


class NotAReducedPolymorphism(AlgebraError):
    pass


class MonoidUnitMismatch(AlgebraError):
    pass


class MissingActorMap(AlgebraError):
    pass


class FactorizationInconsistent(AlgebraError):
    pass


class TruncatedResult(AlgebraError):
    pass


class NameNotFound(AlgebraError):
    pass


class ParseError(AlgebraError):
    """
    Malformed input file; `lineno` and `colno` locate the problem
    """

    def __init__(self, message='', lineno=None, colno=None):
        super().__init__(message)
        self.lineno = lineno
        self.colno = colno


class BudgetExceeded(RuntimeError):
    pass


class TruncationWarning(UserWarning):
    pass


# results
@dataclass(frozen=True)
class Verdict:
    """
    Outcome of a boolean check; truthy iff the check passed

    Attributes
    ----------
    ok : bool
        whether the property holds
    witness : object
        least counterexample when ok is False, else None
    """
    ok: bool
    witness: Any = None

    def __bool__(self):
        return bool(self.ok)


@dataclass
class Report:
    """
    Ordered collection of check outcomes

    Each row is a dict with at least the keys 'check', 'ok' and
    'witness'. Additional keys become extra columns of `to_frame`.
    """
    rows: list = field(default_factory=list)

    def add(self, check, ok, witness=None, **kwargs):
        row = {'check': check, 'ok': bool(ok), 'witness': witness}
        row.update(kwargs)
        self.rows.append(row)
        return row

    @property
    def ok(self):
        return all(row['ok'] for row in self.rows)

    @property
    def violations(self):
        return [row for row in self.rows if not row['ok']]

    def __bool__(self):
        return self.ok

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def get(self, check, **kwargs):
        """
        Rows whose 'check' equals `check` and whose other columns match
        `kwargs`
        """
        return [
            row for row in self.rows
            if row['check'] == check
            and all(row.get(k) == v for k, v in kwargs.items())
        ]

    def to_frame(self):
        """
        Report as a pandas.DataFrame, one row per check
        """
        return pd.DataFrame(self.rows, columns=_columns(self.rows))

    def to_records(self):
        """
        JSON-ready list of rows
        """
        return [{k: to_builtin(v) for k, v in row.items()}
                for row in self.rows]


def _columns(rows):
    columns = ['check', 'ok', 'witness']
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    return columns


def to_builtin(obj):
    """
    Convert numpy scalars/arrays nested in tuples, lists and dicts into
    plain Python objects
    """
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (list, tuple)):
        return [to_builtin(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): to_builtin(v) for k, v in obj.items()}
    return obj


def freeze(a, dtype=np.int64):
    """
    Read-only integer copy of an array-like
    """
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


def first_true(mask):
    """
    Lexicographically least index where `mask` is True, or None
    """
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])
