# -*- coding: utf-8 -*-
"""
Reader for the rendered clause syntax, e.g.

    have(X1,[1,X1]) :- customer(X1).
    \\+ printer(3).
"""
import re
from typing import Optional

from spec_system.translator import Clause, Const, Goal, Literal, NafConjunction, Num, Skolem, Term, Var

_TOKEN = re.compile(
    r"\s*(\\\+|:-|#-?\d+(?:\.\d+)?|-?\d+|[A-Z][A-Za-z0-9_]*|[a-z][A-Za-z0-9_\-]*|[(),\[\].])"
)


class ClauseSyntaxError(ValueError):
    ...


class _Reader:

    def __init__(self, text: str):
        self.tokens = []
        position = 0
        text = text.rstrip()
        while position < len(text):
            match = _TOKEN.match(text, position)
            if not match:
                raise ClauseSyntaxError(f"unexpected character at column {position + 1}")
            self.tokens.append(match.group(1))
            position = match.end()
        self.index = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, expected: Optional[str] = None) -> str:
        token = self.peek()
        if token is None:
            raise ClauseSyntaxError(f"unexpected end, expected {expected or 'more input'}")
        if expected is not None and token != expected:
            raise ClauseSyntaxError(f"expected '{expected}', got '{token}'")
        self.index += 1
        return token

    def clause(self) -> Clause:
        head = self.literal()
        body: list[Goal] = []
        if self.peek() == ':-':
            self.take()
            body.append(self.goal())
            while self.peek() == ',':
                self.take()
                body.append(self.goal())
        self.take('.')
        if self.peek() is not None:
            raise ClauseSyntaxError(f"trailing input '{self.peek()}'")
        return Clause(head, tuple(body))

    def goal(self) -> Goal:
        if self.peek() == '\\+' and self.index + 1 < len(self.tokens) and self.tokens[self.index + 1] == '(':
            self.take()
            self.take('(')
            literals = [self.literal()]
            while self.peek() == ',':
                self.take()
                literals.append(self.literal())
            self.take(')')
            return NafConjunction(tuple(literals))
        return self.literal()

    def literal(self) -> Literal:
        negated = False
        if self.peek() == '\\+':
            self.take()
            negated = True
        name = self.take()
        if not re.match(r"[a-z]", name):
            raise ClauseSyntaxError(f"expected a predicate name, got '{name}'")
        args: list[Term] = []
        if self.peek() == '(':
            self.take()
            args.append(self.term())
            while self.peek() == ',':
                self.take()
                args.append(self.term())
            self.take(')')
        return Literal(name, tuple(args), negated)

    def term(self) -> Term:
        token = self.take()
        if token == '[':
            index = self.take()
            if not re.fullmatch(r"\d+", index):
                raise ClauseSyntaxError(f"expected a Skolem index, got '{index}'")
            args = []
            while self.peek() == ',':
                self.take()
                args.append(self.term())
            self.take(']')
            return Skolem(int(index), tuple(args))
        if token.startswith('#'):
            value = token[1:]
            return Num(float(value) if '.' in value else int(value))
        if re.fullmatch(r"-?\d+", token):
            return Const(int(token))
        if token[0].isupper():
            return Var(token)
        if token[0].islower():
            return Const(token)
        raise ClauseSyntaxError(f"unexpected '{token}'")


def read_clause(text: str) -> Clause:
    """
    Parse one rendered clause.

    :raises ClauseSyntaxError: On malformed text
    """
    return _Reader(text).clause()


def read_goals(text: str) -> tuple[Goal, ...]:
    """
    Parse a comma separated goal list such as 'named(X,simplemat), money_dispenser(X)'.
    """
    reader = _Reader(text.strip().rstrip('.') + ' .')
    goals = [reader.goal()]
    while reader.peek() == ',':
        reader.take()
        goals.append(reader.goal())
    reader.take('.')
    return tuple(goals)
