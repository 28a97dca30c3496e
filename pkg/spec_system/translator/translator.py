# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from spec_system.drs import Atomic, Disjunction, Drs, IfThen, Negation, Referent, iter_boxes
from spec_system.drs.conditions import Argument
from spec_system.exceptions import UnknownName, UnsupportedDrs

from .substitution import standardize
from .terms import Clause, Const, Goal, Literal, MultiHeadClause, NafConjunction, Num, Skolem, Term, Var

logger = logging.getLogger(__name__)


@dataclass
class Counters:
    """
    Last used individual constant and Skolem index; both only grow.
    """
    const: int = 0
    skolem: int = 0

    def next_constant(self) -> int:
        self.const += 1
        return self.const

    def next_skolem(self) -> int:
        self.skolem += 1
        return self.skolem

    def copy(self) -> "Counters":
        return Counters(self.const, self.skolem)


@dataclass
class Translation:
    """
    Clauses of one asserted sentence with the counter and constant state after it.

    :param constants: Referent number -> individual constant, including earlier sentences.
    """
    clauses: tuple[Clause, ...]
    counters: Counters
    constants: dict[int, Const] = field(default_factory=dict)


@dataclass(frozen=True)
class Query:
    """
    :param wh_vars: (term standing for the wh-word, the wh-word) per wh-word.
    :param terms: Referent number -> term used in the goals.
    """
    goals: tuple[Goal, ...]
    wh_vars: tuple[tuple[Term, str], ...] = ()
    terms: Mapping[int, Term] = field(default_factory=dict)


def _multi_head_clauses(heads: list[Literal], bodies: list[list[Goal]]) -> list[MultiHeadClause]:
    return [MultiHeadClause(tuple(heads), tuple(body)) for body in bodies] if heads else []


class _AssertionTranslator:

    def __init__(self, counters: Counters, constants: Mapping[int, Const], sentence: Optional[str]):
        self.counters = counters.copy()
        self.constants = dict(constants)
        self.sentence = sentence
        self.clauses: list[Clause] = []

    def unsupported(self, shape: str) -> UnsupportedDrs:
        return UnsupportedDrs(shape, self.sentence)

    def constant(self, referent: Referent) -> Const:
        if referent.id not in self.constants:
            self.constants[referent.id] = Const(self.counters.next_constant())
        return self.constants[referent.id]

    def term(self, arg: Argument, variables: Mapping[int, Term]) -> Term:
        if isinstance(arg, Referent):
            return variables[arg.id] if arg.id in variables else self.constant(arg)
        if isinstance(arg, str):
            return Const(arg)
        return Num(arg)

    def literal(self, condition: Atomic, variables: Mapping[int, Term], negated: bool = False) -> Literal:
        return Literal(condition.pred, tuple(self.term(arg, variables) for arg in condition.args), negated)

    def add(self, clause: Clause) -> None:
        self.clauses.append(standardize(clause))

    def translate(self, k: Drs) -> None:
        for referent in k.referents:
            self.constant(referent)
        for path, box in iter_boxes(k):
            for referent in box.referents:
                if path and referent.unique:
                    self.constant(referent)

        for condition in self.accommodate(k):
            if isinstance(condition, Atomic):
                self.add(Clause(self.literal(condition, {})))
            elif isinstance(condition, Negation):
                self.negative_clauses(condition.drs, {}, [])
            elif isinstance(condition, IfThen):
                self.rule(condition)
            elif isinstance(condition, Disjunction):
                raise self.unsupported('disjunction in an assertion')
            else:
                raise self.unsupported(f"unsimplified condition {condition}")

    def accommodate(self, box: Drs) -> list:
        """
        Conditions of a box minus the unary conditions of its unique references,
        which are asserted as facts.
        """
        unique = {referent.id for referent in box.referents if referent.unique}
        remaining = []
        for condition in box.conditions:
            if (
                    isinstance(condition, Atomic) and len(condition.args) == 1
                    and isinstance(condition.args[0], Referent) and condition.args[0].id in unique
            ):
                self.add(Clause(self.literal(condition, {})))
            else:
                remaining.append(condition)
        return remaining

    def rule(self, condition: IfThen) -> None:
        antecedent, consequent = condition.antecedent, condition.consequent
        variables: dict[int, Term] = {
            referent.id: Var(f"V{referent.id}") for referent in antecedent.referents if not referent.unique
        }
        universals = list(variables.values())
        bodies = self.bodies(antecedent, variables)

        for referent in consequent.referents:
            if not referent.unique:
                variables[referent.id] = Skolem(self.counters.next_skolem(), tuple(universals))

        heads: list[Literal] = []
        negations: list[Drs] = []
        for part in self.accommodate(consequent):
            if isinstance(part, Atomic):
                heads.append(self.literal(part, variables))
            elif isinstance(part, Negation):
                negations.append(part.drs)
            elif isinstance(part, Disjunction):
                raise self.unsupported('disjunction in a consequent')
            elif isinstance(part, IfThen):
                raise self.unsupported('conditional inside a consequent')

        for multi_head in _multi_head_clauses(heads, bodies):
            logger.debug("rule: %s", multi_head)
            for clause in multi_head.distribute():
                self.add(clause)
        for negated in negations:
            for body in bodies:
                self.negative_clauses(negated, variables, body)

    def bodies(self, box: Drs, variables: dict[int, Term]) -> list[list[Goal]]:
        """
        Alternative bodies of an antecedent; a disjunction yields one body per disjunct.
        """
        alternatives: list[list[Goal]] = [[]]
        for condition in self.accommodate(box):
            if isinstance(condition, Atomic):
                goal = self.literal(condition, variables)
                alternatives = [[*body, goal] for body in alternatives]
            elif isinstance(condition, Negation):
                goal = self.naf_goal(condition.drs, variables)
                alternatives = [[*body, goal] for body in alternatives]
            elif isinstance(condition, Disjunction):
                expanded = []
                for disjunct in (condition.left, condition.right):
                    for referent in disjunct.referents:
                        if not referent.unique:
                            variables[referent.id] = Var(f"V{referent.id}")
                    for disjunct_body in self.bodies(disjunct, variables):
                        expanded.extend([*body, *disjunct_body] for body in alternatives)
                alternatives = expanded
            else:
                raise self.unsupported('conditional inside an antecedent')
        return alternatives

    def naf_goal(self, negated: Drs, variables: Mapping[int, Term]) -> Goal:
        local = dict(variables)
        local.update({referent.id: Var(f"V{referent.id}") for referent in negated.referents if not referent.unique})
        literals = []
        for condition in self.accommodate(negated):
            if not isinstance(condition, Atomic):
                raise self.unsupported('complex condition under negation')
            literals.append(self.literal(condition, local))
        if len(literals) == 1:
            return Literal(literals[0].pred, literals[0].args, negated=True)
        return NafConjunction(tuple(literals))

    def negative_clauses(self, negated: Drs, variables: Mapping[int, Term], body: Sequence[Goal]) -> None:
        """
        A negated box becomes a negative clause: its last condition is the
        negated head, the other conditions join the body.
        """
        local = dict(variables)
        local.update({referent.id: Var(f"V{referent.id}") for referent in negated.referents if not referent.unique})
        literals = []
        for condition in self.accommodate(negated):
            if not isinstance(condition, Atomic):
                raise self.unsupported('complex condition under negation')
            literals.append(self.literal(condition, local))
        if not literals:
            return
        head = Literal(literals[-1].pred, literals[-1].args, negated=True)
        self.add(Clause(head, (*body, *literals[:-1])))


def translate_assertion(
        k: Drs,
        counters: Counters,
        constants: Optional[Mapping[int, Const]] = None,
        sentence: Optional[str] = None
) -> Translation:
    """
    Translate a simplified DRS into Horn clauses.

    Top-level referents and unique references become individual constants;
    a conditional becomes one rule per consequent condition, with referents
    introduced in the consequent replaced by Skolem terms over the
    antecedent's variables; a negation becomes a negative clause.

    :param k: Simplified DRS of the asserted sentence
    :param counters: Counter state; not modified
    :param constants: Constants already given to referents of earlier sentences
    :param sentence: Sentence text for error messages
    :return: Clauses plus the advanced counters and extended constant map
    :raises UnsupportedDrs: For disjunctive assertions or consequents and nested conditionals
    """
    translator = _AssertionTranslator(counters, constants or {}, sentence)
    translator.translate(k)
    return Translation(tuple(translator.clauses), translator.counters, translator.constants)


def translate_query(
        k: Drs,
        wh: Sequence[tuple[int, str]] = (),
        constants: Optional[Mapping[int, Const]] = None,
        aliases: Optional[Mapping[int, int]] = None,
        named_lookup: Optional[Callable[[str], Optional[Const]]] = None
) -> Query:
    """
    Translate a simplified query DRS into a goal list.

    :param k: Simplified DRS of the question
    :param wh: (referent number, wh-word) per wh-word of the question
    :param constants: Constants of the discourse referents
    :param aliases: Referent number -> surviving referent number after simplification
    :param named_lookup: Finds the constant of a name in the knowledge base
    :raises UnknownName: If a name has no constant
    :raises UnsupportedDrs: For disjunctive or conditional questions
    """
    constants = dict(constants or {})
    aliases = aliases or {}
    terms: dict[int, Term] = {}

    for condition in k.conditions:
        if isinstance(condition, Atomic) and condition.pred == 'named' and isinstance(condition.args[0], Referent):
            referent, name = condition.args
            if referent.id in constants:
                continue
            found = named_lookup(name) if named_lookup else None
            if found is None:
                raise UnknownName(name)
            constants[referent.id] = found

    def term(arg: Argument) -> Term:
        if isinstance(arg, Referent):
            if arg.id not in terms:
                terms[arg.id] = constants.get(arg.id, Var(f"V{arg.id}"))
            return terms[arg.id]
        if isinstance(arg, str):
            return Const(arg)
        return Num(arg)

    def literal(condition: Atomic, negated: bool = False) -> Literal:
        return Literal(condition.pred, tuple(term(arg) for arg in condition.args), negated)

    goals: list[Goal] = []
    for condition in k.conditions:
        if isinstance(condition, Atomic):
            goals.append(literal(condition))
        elif isinstance(condition, Negation):
            literals = []
            for inner in condition.drs.conditions:
                if not isinstance(inner, Atomic):
                    raise UnsupportedDrs('complex condition under negation in a question')
                literals.append(literal(inner))
            if len(literals) == 1:
                goals.append(Literal(literals[0].pred, literals[0].args, negated=True))
            elif literals:
                goals.append(NafConjunction(tuple(literals)))
        else:
            raise UnsupportedDrs(f"{type(condition).__name__.lower()} in a question")

    wh_vars = tuple(
        (term(Referent(aliases.get(ref_id, ref_id))), word) for ref_id, word in wh
    )
    logger.debug("query goals: %s", ', '.join(str(goal) for goal in goals))
    return Query(tuple(goals), wh_vars, terms)
