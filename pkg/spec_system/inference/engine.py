# -*- coding: utf-8 -*-
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from spec_system.exceptions import ComparisonTypeError, InstantiationError
from spec_system.knowledge_base import KnowledgeBase
from spec_system.translator import (
    Bindings, Clause, Goal, Literal, NafConjunction, Num, Term, Var, apply_goal, is_ground, rename_apart,
    resolve_term, unify_literals
)

logger = logging.getLogger(__name__)

DEFAULT_DEPTH_BOUND = 64
COMPARISONS = ('bigger_than', 'smaller_than', 'equal')


@dataclass(frozen=True)
class Answer:
    """
    Result of a query.

    :param status: yes, no or depth_exceeded; "no" is only claimed within the bound.
    :param substitutions: Distinct bindings of the query variables, in the order found.
    :param complete: False if some branch was cut by the depth bound.
    """
    status: str
    substitutions: tuple[dict[Var, Term], ...] = ()
    complete: bool = True

    @property
    def yes(self) -> bool:
        return self.status == 'yes'

    def values(self, var: Var) -> list[Term]:
        return [substitution[var] for substitution in self.substitutions if var in substitution]

    def __str__(self) -> str:
        if self.status != 'yes' or not self.substitutions or not self.substitutions[0]:
            return self.status
        return 'yes: ' + '; '.join(
            ', '.join(f"{var}={value}" for var, value in substitution.items()) for substitution in self.substitutions
        )


def builtin_compare(pred: str, a: Term, b: Term) -> bool:
    """
    Evaluate a comparison on bound terms.

    :param pred: bigger_than, smaller_than or equal
    :raises InstantiationError: If an argument is not ground
    :raises ComparisonTypeError: If bigger_than or smaller_than gets a non-number
    """
    if not (is_ground(a) and is_ground(b)):
        raise InstantiationError(pred)
    if pred == 'equal':
        return a == b
    for value in (a, b):
        if not isinstance(value, Num):
            raise ComparisonTypeError(pred, value)
    if pred == 'bigger_than':
        return a.value > b.value
    if pred == 'smaller_than':
        return a.value < b.value
    raise ValueError(f"'{pred}' is not a comparison")


class Solver:
    """
    Depth-bounded resolution: leftmost goal first, clauses in knowledge base
    order, variables renamed apart at every step.

    The bound limits the depth of the proof tree; negation as failure runs a
    fresh search at the same bound.
    """

    def __init__(self, clauses: Iterable[Clause], depth_bound: int = DEFAULT_DEPTH_BOUND):
        self.depth_bound = depth_bound
        self.exceeded = False
        self._steps = itertools.count(1)
        self._index: dict[tuple[str, int], list[Clause]] = {}
        for clause in clauses:
            if not clause.is_negative:
                self._index.setdefault(clause.head.key, []).append(clause)

    def candidates(self, goal: Literal) -> list[Clause]:
        return self._index.get(goal.key, [])

    def solve(self, goals: Sequence[Goal], bindings: Optional[Bindings] = None) -> Iterator[Bindings]:
        yield from self._solve([(goal, 0) for goal in goals], bindings or {})

    def _solve(self, goals: list[tuple[Goal, int]], bindings: Bindings) -> Iterator[Bindings]:
        if not goals:
            yield bindings
            return
        (goal, depth), rest = goals[0], goals[1:]
        goal = apply_goal(goal, bindings)

        if isinstance(goal, NafConjunction) or goal.negated:
            positive = list(goal.literals) if isinstance(goal, NafConjunction) else [goal.positive()]
            if self._fails(positive, bindings):
                yield from self._solve(rest, bindings)
            return

        if self._is_comparison(goal):
            if goal.pred != 'equal' or not self.candidates(goal):
                if builtin_compare(goal.pred, *goal.args):
                    yield from self._solve(rest, bindings)
                return
            # asserted equal/2 rules answer what structural identity does not
            if all(is_ground(arg) for arg in goal.args) and builtin_compare(goal.pred, *goal.args):
                yield from self._solve(rest, bindings)
                return

        if depth >= self.depth_bound:
            self.exceeded = True
            return
        for clause in self.candidates(goal):
            renamed = rename_apart(clause, f"r{next(self._steps)}")
            extended = unify_literals(goal, renamed.head, bindings)
            if extended is None:
                continue
            body = [(subgoal, depth + 1) for subgoal in renamed.body]
            yield from self._solve([*body, *rest], extended)

    def _fails(self, positive: list[Literal], bindings: Bindings) -> bool:
        inner = Solver([], self.depth_bound)
        inner._index, inner._steps = self._index, self._steps
        found = any(True for _ in inner.solve(positive, bindings))
        if inner.exceeded and not found:
            self.exceeded = True
            return False
        return not found

    @staticmethod
    def _is_comparison(goal: Literal) -> bool:
        return goal.pred in COMPARISONS and len(goal.args) == 2


def _query_vars(goals: Sequence[Goal]) -> list[Var]:
    found: list[Var] = []
    for goal in goals:
        for var in goal.vars():
            if var not in found:
                found.append(var)
    return found


def solve(
        goals: Sequence[Goal],
        kb: Union[KnowledgeBase, Iterable[Clause]],
        depth_bound: int = DEFAULT_DEPTH_BOUND
) -> Answer:
    """
    Collect every solution of a goal list within the depth bound.

    :param goals: Goals, usually from translate_query
    :param kb: Knowledge base or plain clauses; negative clauses are ignored
    :param depth_bound: Maximum proof depth
    :return: yes with the distinct substitutions of the query variables, no,
        or depth_exceeded when nothing was found and the search was cut
    """
    clauses = kb.clauses if isinstance(kb, KnowledgeBase) else list(kb)
    solver = Solver(clauses, depth_bound)
    query_vars = _query_vars(goals)
    substitutions: list[dict[Var, Term]] = []
    for bindings in solver.solve(goals):
        substitution = {var: resolve_term(var, bindings) for var in query_vars}
        if substitution not in substitutions:
            substitutions.append(substitution)

    if substitutions:
        answer = Answer('yes', tuple(substitutions), complete=not solver.exceeded)
    else:
        answer = Answer('depth_exceeded' if solver.exceeded else 'no', complete=not solver.exceeded)
    logger.debug("%s -> %s", ', '.join(str(goal) for goal in goals), answer)
    return answer
