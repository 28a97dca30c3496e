# -*- coding: utf-8 -*-
"""
Substitutions over terms: unification, one-way matching and variable renaming.
"""
from typing import Iterable, Optional

from .terms import Clause, Const, Goal, Literal, NafConjunction, Skolem, Term, Var

Bindings = dict[Var, Term]


def walk(term: Term, bindings: Bindings) -> Term:
    while isinstance(term, Var) and term in bindings:
        term = bindings[term]
    return term


def resolve_term(term: Term, bindings: Bindings) -> Term:
    term = walk(term, bindings)
    if isinstance(term, Skolem):
        return Skolem(term.index, tuple(resolve_term(arg, bindings) for arg in term.args))
    return term


def apply_goal(goal: Goal, bindings: Bindings) -> Goal:
    if isinstance(goal, NafConjunction):
        return NafConjunction(tuple(apply_goal(literal, bindings) for literal in goal.literals))
    return Literal(goal.pred, tuple(resolve_term(arg, bindings) for arg in goal.args), goal.negated)


def apply_clause(clause: Clause, bindings: Bindings) -> Clause:
    return Clause(apply_goal(clause.head, bindings), tuple(apply_goal(goal, bindings) for goal in clause.body))


def _occurs(var: Var, term: Term, bindings: Bindings) -> bool:
    term = walk(term, bindings)
    if term == var:
        return True
    if isinstance(term, Skolem):
        return any(_occurs(var, arg, bindings) for arg in term.args)
    return False


def unify_terms(a: Term, b: Term, bindings: Bindings, occurs_check: bool = True) -> Optional[Bindings]:
    """
    Extend bindings so that a and b become equal.

    :return: The extended bindings (a new dict), or None if the terms clash
    """
    a, b = walk(a, bindings), walk(b, bindings)
    if a == b:
        return bindings
    if isinstance(a, Var):
        if occurs_check and _occurs(a, b, bindings):
            return None
        return {**bindings, a: b}
    if isinstance(b, Var):
        return unify_terms(b, a, bindings, occurs_check)
    if isinstance(a, Skolem) and isinstance(b, Skolem):
        if a.index != b.index or len(a.args) != len(b.args):
            return None
        for left, right in zip(a.args, b.args):
            bindings = unify_terms(left, right, bindings, occurs_check)
            if bindings is None:
                return None
        return bindings
    return None


def unify_literals(a: Literal, b: Literal, bindings: Bindings, occurs_check: bool = True) -> Optional[Bindings]:
    if a.pred != b.pred or len(a.args) != len(b.args):
        return None
    for left, right in zip(a.args, b.args):
        bindings = unify_terms(left, right, bindings, occurs_check)
        if bindings is None:
            return None
    return bindings


def match_terms(pattern: Term, target: Term, bindings: Bindings) -> Optional[Bindings]:
    """
    One-way matching: only variables of the pattern are bound.
    """
    if isinstance(pattern, Var):
        if pattern in bindings:
            return bindings if bindings[pattern] == target else None
        return {**bindings, pattern: target}
    if isinstance(pattern, Skolem):
        if not isinstance(target, Skolem) or target.index != pattern.index or len(target.args) != len(pattern.args):
            return None
        for left, right in zip(pattern.args, target.args):
            bindings = match_terms(left, right, bindings)
            if bindings is None:
                return None
        return bindings
    return bindings if pattern == target else None


def match_goals(pattern: Goal, target: Goal, bindings: Bindings) -> Optional[Bindings]:
    if isinstance(pattern, NafConjunction) or isinstance(target, NafConjunction):
        if not (isinstance(pattern, NafConjunction) and isinstance(target, NafConjunction)):
            return None
        if len(pattern.literals) != len(target.literals):
            return None
        for left, right in zip(pattern.literals, target.literals):
            bindings = match_goals(left, right, bindings)
            if bindings is None:
                return None
        return bindings
    if pattern.pred != target.pred or len(pattern.args) != len(target.args) or pattern.negated != target.negated:
        return None
    for left, right in zip(pattern.args, target.args):
        bindings = match_terms(left, right, bindings)
        if bindings is None:
            return None
    return bindings


def _rename_term(term: Term, mapping: dict[Var, Var]) -> Term:
    if isinstance(term, Var):
        return mapping.get(term, term)
    if isinstance(term, Skolem):
        return Skolem(term.index, tuple(_rename_term(arg, mapping) for arg in term.args))
    return term


def rename_goal(goal: Goal, mapping: dict[Var, Var]) -> Goal:
    if isinstance(goal, NafConjunction):
        return NafConjunction(tuple(rename_goal(literal, mapping) for literal in goal.literals))
    return Literal(goal.pred, tuple(_rename_term(arg, mapping) for arg in goal.args), goal.negated)


def rename(clause: Clause, names: Iterable[str]) -> Clause:
    """
    Clause with its variables renamed, in order of first occurrence, to the given names.
    The renaming is applied in one pass, so names may overlap the old ones.
    """
    mapping = {var: Var(name) for var, name in zip(clause.vars(), names)}
    return Clause(rename_goal(clause.head, mapping), tuple(rename_goal(goal, mapping) for goal in clause.body))


def standardize(clause: Clause) -> Clause:
    """
    Variables renamed X1, X2, ... in order of first occurrence, head first.
    """
    return rename(clause, (f"X{index}" for index in range(1, len(clause.vars()) + 1)))


def rename_apart(clause: Clause, suffix: str) -> Clause:
    return rename(clause, (f"{var.name}_{suffix}" for var in clause.vars()))


def is_variant(a: Clause, b: Clause) -> bool:
    return standardize(a) == standardize(b)


def is_ground(term: Term) -> bool:
    if isinstance(term, Var):
        return False
    if isinstance(term, Skolem):
        return all(is_ground(arg) for arg in term.args)
    return True


def constants_of(clause: Clause) -> set[Const]:
    return {term for term in clause_terms(clause) if isinstance(term, Const)}


def _map_terms(term: Term, function) -> Term:
    term = function(term)
    if isinstance(term, Skolem):
        return Skolem(term.index, tuple(_map_terms(arg, function) for arg in term.args))
    return term


def map_clause_terms(clause: Clause, function) -> Clause:
    """
    Clause with 'function' applied to every term, Skolem arguments included.
    """
    def map_goal(goal: Goal) -> Goal:
        if isinstance(goal, NafConjunction):
            return NafConjunction(tuple(map_goal(literal) for literal in goal.literals))
        return Literal(goal.pred, tuple(_map_terms(arg, function) for arg in goal.args), goal.negated)

    return Clause(map_goal(clause.head), tuple(map_goal(goal) for goal in clause.body))


def clause_terms(clause: Clause) -> Iterable[Term]:
    found: list[Term] = []
    map_clause_terms(clause, lambda term: found.append(term) or term)
    return found


def skolem_indices(clause: Clause) -> set[int]:
    return {term.index for term in clause_terms(clause) if isinstance(term, Skolem)}


def reindex_skolems(clause: Clause, mapping: dict[int, int]) -> Clause:
    return map_clause_terms(
        clause,
        lambda term: Skolem(mapping.get(term.index, term.index), term.args) if isinstance(term, Skolem) else term
    )
