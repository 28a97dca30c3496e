# -*- coding: utf-8 -*-
"""
Logic layer: terms, literals and clauses with their text rendering.

Individual constants render as integers (1), symbols as themselves
(simplemat), numbers with a leading '#' (#5), Skolem terms as [k,X1].
"""
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    value: Union[int, str]

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Num:
    value: Union[int, float]

    def __str__(self) -> str:
        value = self.value
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        return f"#{value}"


@dataclass(frozen=True)
class Skolem:
    index: int
    args: tuple["Term", ...] = ()

    def __str__(self) -> str:
        return '[' + ','.join(str(term) for term in (self.index, *self.args)) + ']'


Term = Union[Var, Const, Num, Skolem]


def term_vars(term: Term) -> Iterator[Var]:
    if isinstance(term, Var):
        yield term
    elif isinstance(term, Skolem):
        for arg in term.args:
            yield from term_vars(arg)


@dataclass(frozen=True)
class Literal:
    """
    :param negated: Negation-as-failure polarity.
    """
    pred: str
    args: tuple[Term, ...] = ()
    negated: bool = False

    def __str__(self) -> str:
        atom = f"{self.pred}({','.join(str(arg) for arg in self.args)})" if self.args else self.pred
        return f"\\+ {atom}" if self.negated else atom

    @property
    def key(self) -> tuple[str, int]:
        return self.pred, len(self.args)

    def positive(self) -> "Literal":
        return Literal(self.pred, self.args)

    def vars(self) -> Iterator[Var]:
        for arg in self.args:
            yield from term_vars(arg)


@dataclass(frozen=True)
class NafConjunction:
    """
    Negation as failure over a conjunction: succeeds iff the conjunction has no solution.
    """
    literals: tuple[Literal, ...]
    negated: bool = True

    def __str__(self) -> str:
        return f"\\+ ({', '.join(str(literal) for literal in self.literals)})"

    def vars(self) -> Iterator[Var]:
        for literal in self.literals:
            yield from literal.vars()


Goal = Union[Literal, NafConjunction]


@dataclass(frozen=True)
class Clause:
    """
    Horn clause; a negated head marks a negative clause used by the consistency check.
    """
    head: Literal
    body: tuple[Goal, ...] = ()

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(str(goal) for goal in self.body)}."

    @property
    def is_fact(self) -> bool:
        return not self.body

    @property
    def is_negative(self) -> bool:
        return self.head.negated

    def vars(self) -> list[Var]:
        seen: list[Var] = []
        for var in (*self.head.vars(), *(var for goal in self.body for var in goal.vars())):
            if var not in seen:
                seen.append(var)
        return seen


@dataclass(frozen=True)
class MultiHeadClause:
    """
    Intermediate rule with several consequents, rendered with '::-'.
    """
    heads: tuple[Literal, ...]
    body: tuple[Goal, ...] = ()

    def __post_init__(self):
        if not self.heads:
            raise ValueError("a multi-head clause needs at least one head")

    def __str__(self) -> str:
        heads = ', '.join(str(head) for head in self.heads)
        if not self.body:
            return f"{heads}."
        return f"{heads} ::- {', '.join(str(goal) for goal in self.body)}."

    def distribute(self) -> list[Clause]:
        """
        One clause per head, each with the full body.
        """
        return [Clause(head, self.body) for head in self.heads]
