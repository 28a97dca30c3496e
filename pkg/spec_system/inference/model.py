# -*- coding: utf-8 -*-
"""
Brute-force model checking, used to cross-check the resolution engine.

The model of a negation-free program is built by forward chaining; a DRS is
true in it if some assignment of universe members to its referents verifies
every condition, with the usual box semantics for negation, conditionals and
disjunction.
"""
import itertools
from typing import Iterable, Iterator, Mapping, Optional

from spec_system.drs import Atomic, Disjunction, Drs, Equality, IfThen, Negation, Referent
from spec_system.drs.conditions import Argument
from spec_system.translator import Clause, Const, Literal, NafConjunction, Num, Skolem, Term, apply_goal

from .engine import Solver

Model = frozenset[Literal]


def least_model(clauses: Iterable[Clause], max_rounds: int = 16) -> Model:
    """
    Ground facts derivable from the positive clauses.

    :param clauses: Clauses without negation-as-failure goals
    :param max_rounds: Forward chaining rounds; enough for non-recursive programs
    :raises ValueError: If a clause has a negated goal
    """
    program = [clause for clause in clauses if not clause.is_negative]
    for clause in program:
        if any(isinstance(goal, NafConjunction) or goal.negated for goal in clause.body):
            raise ValueError(f"negation in {clause} is outside the checked fragment")

    facts: set[Literal] = set()
    for _ in range(max_rounds):
        derived = set(facts)
        solver = Solver([Clause(fact) for fact in facts])
        for clause in program:
            for bindings in solver.solve(clause.body):
                head = apply_goal(clause.head, bindings)
                if all(_ground(arg) for arg in head.args):
                    derived.add(head)
        if derived == facts:
            break
        facts = derived
    return frozenset(facts)


def _ground(term: Term) -> bool:
    if isinstance(term, Skolem):
        return all(_ground(arg) for arg in term.args)
    return isinstance(term, (Const, Num))


def universe(model: Model) -> list[Term]:
    """Individuals the model talks about: integer constants and Skolem terms."""
    found: list[Term] = []
    for fact in sorted(model, key=str):
        for arg in fact.args:
            if (isinstance(arg, Skolem) or isinstance(arg, Const) and isinstance(arg.value, int)) and arg not in found:
                found.append(arg)
    return found


def _value(arg: Argument, assignment: Mapping[int, Term]) -> Term:
    if isinstance(arg, Referent):
        return assignment[arg.id]
    if isinstance(arg, str):
        return Const(arg)
    return Num(arg)


def _extensions(box: Drs, assignment: Mapping[int, Term], domain: list[Term]) -> Iterator[dict[int, Term]]:
    fresh = [referent.id for referent in box.referents if referent.id not in assignment]
    for values in itertools.product(domain, repeat=len(fresh)):
        yield {**assignment, **dict(zip(fresh, values))}


def _verifies(box: Drs, assignment: Mapping[int, Term], model: Model, domain: list[Term]) -> bool:
    return all(_holds(condition, assignment, model, domain) for condition in box.conditions)


def _holds(condition, assignment: Mapping[int, Term], model: Model, domain: list[Term]) -> bool:
    if isinstance(condition, Atomic):
        return Literal(condition.pred, tuple(_value(arg, assignment) for arg in condition.args)) in model
    if isinstance(condition, Equality):
        return assignment[condition.left.id] == assignment[condition.right.id]
    if isinstance(condition, Negation):
        return not drs_holds(condition.drs, model, assignment, domain)
    if isinstance(condition, Disjunction):
        return drs_holds(condition.left, model, assignment, domain) or drs_holds(condition.right, model, assignment,
                                                                                 domain)
    if isinstance(condition, IfThen):
        return all(
            drs_holds(condition.consequent, model, extended, domain)
            for extended in _extensions(condition.antecedent, assignment, domain)
            if _verifies(condition.antecedent, extended, model, domain)
        )
    # gender and number conditions are grammatical only
    return True


def drs_holds(
        k: Drs,
        model: Model,
        assignment: Optional[Mapping[int, Term]] = None,
        domain: Optional[list[Term]] = None
) -> bool:
    """
    True if some extension of the assignment to the box referents verifies the box.

    :param assignment: Referent number -> individual for referents already fixed
    :param domain: Individuals to try; defaults to the model's universe
    """
    domain = universe(model) if domain is None else domain
    return any(_verifies(k, extended, model, domain) for extended in _extensions(k, assignment or {}, domain))
