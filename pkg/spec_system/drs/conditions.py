# -*- coding: utf-8 -*-
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Union

from spec_system.features import sorted_atoms


@dataclass(frozen=True)
class Referent:
    """
    Discourse referent, identified by its number alone.

    :param id: Sequential number, rendered X<id>.
    :param origin: (sentence index, noun phrase text) for messages.
    :param unique: Declared as the unique reference of a definite noun phrase.
    """
    id: int
    origin: Optional[tuple[int, str]] = field(default=None, compare=False)
    unique: bool = field(default=False, compare=False)

    def __str__(self) -> str:
        return f"X{self.id}"

    def as_unique(self) -> "Referent":
        return replace(self, unique=True)


Argument = Union[Referent, str, int, float]


def render_argument(arg: Argument) -> str:
    if isinstance(arg, float) and arg.is_integer():
        return str(int(arg))
    return str(arg)


def _substitute_arg(arg: Argument, mapping: Mapping[int, Referent]) -> Argument:
    if isinstance(arg, Referent):
        return mapping.get(arg.id, arg)
    return arg


@dataclass(frozen=True)
class Atomic:
    pred: str
    args: tuple[Argument, ...]

    def __str__(self) -> str:
        return f"{self.pred}({','.join(render_argument(arg) for arg in self.args)})"

    @property
    def referents(self) -> tuple[Referent, ...]:
        return tuple(arg for arg in self.args if isinstance(arg, Referent))

    def substitute(self, mapping: Mapping[int, Referent]) -> "Atomic":
        return Atomic(self.pred, tuple(_substitute_arg(arg, mapping) for arg in self.args))


@dataclass(frozen=True)
class Equality:
    """
    left = right; the anaphor (newer referent) stands on the left.
    Copula equalities come from 'X is a N' and render as is(X,Y).
    """
    left: Referent
    right: Referent
    copula: bool = False

    def __str__(self) -> str:
        if self.copula:
            return f"is({self.left},{self.right})"
        return f"{self.left}={self.right}"

    @property
    def referents(self) -> tuple[Referent, ...]:
        return self.left, self.right

    def substitute(self, mapping: Mapping[int, Referent]) -> "Equality":
        return Equality(_substitute_arg(self.left, mapping), _substitute_arg(self.right, mapping), self.copula)


@dataclass(frozen=True)
class Gender:
    referent: Referent
    genders: frozenset

    def __str__(self) -> str:
        atoms = sorted_atoms(self.genders)
        value = atoms[0] if len(atoms) == 1 else f"[{','.join(atoms)}]"
        return f"gender({self.referent},{value})"

    @property
    def referents(self) -> tuple[Referent, ...]:
        return self.referent,

    def substitute(self, mapping: Mapping[int, Referent]) -> "Gender":
        return Gender(_substitute_arg(self.referent, mapping), self.genders)


@dataclass(frozen=True)
class Number:
    referent: Referent
    number: str

    def __str__(self) -> str:
        return f"number({self.referent},{self.number})"

    @property
    def referents(self) -> tuple[Referent, ...]:
        return self.referent,

    def substitute(self, mapping: Mapping[int, Referent]) -> "Number":
        return Number(_substitute_arg(self.referent, mapping), self.number)


@dataclass(frozen=True)
class Negation:
    drs: "Drs"

    def __str__(self) -> str:
        return f"not({self.drs})"

    @property
    def referents(self) -> tuple[Referent, ...]:
        return ()

    @property
    def boxes(self) -> tuple[tuple[str, "Drs"], ...]:
        return ('negated', self.drs),


@dataclass(frozen=True)
class IfThen:
    antecedent: "Drs"
    consequent: "Drs"

    def __str__(self) -> str:
        consequent = self.consequent.rendered(inherited=self.antecedent.referents)
        return f"ifthen({self.antecedent}, {consequent})"

    @property
    def referents(self) -> tuple[Referent, ...]:
        return ()

    @property
    def boxes(self) -> tuple[tuple[str, "Drs"], ...]:
        return ('antecedent', self.antecedent), ('consequent', self.consequent)


@dataclass(frozen=True)
class Disjunction:
    left: "Drs"
    right: "Drs"

    def __str__(self) -> str:
        return f"or({self.left}, {self.right})"

    @property
    def referents(self) -> tuple[Referent, ...]:
        return ()

    @property
    def boxes(self) -> tuple[tuple[str, "Drs"], ...]:
        return ('left', self.left), ('right', self.right)


Condition = Union[Atomic, Equality, Gender, Number, Negation, IfThen, Disjunction]
ComplexCondition = (Negation, IfThen, Disjunction)


@dataclass(frozen=True)
class Drs:
    """
    Discourse representation structure: referents U and conditions Con.

    The consequent box of an IfThen holds only its own referents; the
    antecedent's referents are accessible from it and are listed after the
    consequent's own ones when rendered.
    """
    referents: tuple[Referent, ...] = ()
    conditions: tuple[Condition, ...] = ()

    def __str__(self) -> str:
        return self.rendered()

    def rendered(self, inherited: tuple[Referent, ...] = ()) -> str:
        universe = ",".join(str(referent) for referent in (*self.referents, *inherited))
        conditions = ", ".join(str(condition) for condition in self.conditions)
        return f"drs([{universe}], [{conditions}])"

    @property
    def is_empty(self) -> bool:
        return not self.referents and not self.conditions

    def with_conditions(self, *conditions: Condition) -> "Drs":
        return Drs(self.referents, (*self.conditions, *conditions))

    def with_referents(self, *referents: Referent) -> "Drs":
        return Drs((*self.referents, *referents), self.conditions)

    def replace_condition(self, index: int, condition: Condition) -> "Drs":
        conditions = list(self.conditions)
        conditions[index] = condition
        return Drs(self.referents, tuple(conditions))

    def atomic_conditions(self) -> list[Atomic]:
        return [condition for condition in self.conditions if isinstance(condition, Atomic)]
