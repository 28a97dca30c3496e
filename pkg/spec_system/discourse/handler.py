# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, replace
from typing import Optional

from spec_system.drs import (
    Atomic, BoxPath, Drs, Equality, Gender, Number, Referent, accessible_referents, iter_boxes, merge,
    replace_sub_drs, sub_drs_at
)
from spec_system.exceptions import UnresolvedPronoun
from spec_system.parser import ParseResult, Placeholder

from .report import ResolutionEntry, ResolutionReport

logger = logging.getLogger(__name__)

ALL_GENDERS = frozenset({'m', 'f', 'n'})


@dataclass(frozen=True)
class Resolution:
    """
    :param discourse: Context merged with the resolved increment.
    :param increment: The sentence's own part of 'discourse'.
    """
    discourse: Drs
    increment: Drs
    report: ResolutionReport


class _Classes:
    """
    Equivalence classes of referents joined by Equality conditions.
    """

    def __init__(self, k: Drs):
        self.parent: dict[int, int] = {}
        self.gender: dict[int, frozenset] = {}
        self.number: dict[int, str] = {}
        self.unary: dict[int, set[str]] = {}
        self.names: dict[int, str] = {}
        self.origin: dict[int, str] = {}
        for _, box in iter_boxes(k):
            for referent in box.referents:
                self.find(referent.id)
                if referent.origin:
                    self.origin[referent.id] = referent.origin[1]
            for condition in box.conditions:
                self.add(condition)

    def find(self, ref_id: int) -> int:
        self.parent.setdefault(ref_id, ref_id)
        while self.parent[ref_id] != ref_id:
            ref_id = self.parent[ref_id]
        return ref_id

    def add(self, condition) -> None:
        if isinstance(condition, Equality):
            left, right = self.find(condition.left.id), self.find(condition.right.id)
            if left != right:
                self.parent[max(left, right)] = min(left, right)
        elif isinstance(condition, Gender):
            self.gender[condition.referent.id] = self.gender.get(condition.referent.id, ALL_GENDERS) & condition.genders
        elif isinstance(condition, Number):
            self.number[condition.referent.id] = condition.number
        elif isinstance(condition, Atomic) and condition.pred == 'named' and len(condition.args) == 2:
            self.names[condition.args[0].id] = condition.args[1]
        elif isinstance(condition, Atomic) and len(condition.args) == 1 and isinstance(condition.args[0], Referent):
            self.unary.setdefault(condition.args[0].id, set()).add(condition.pred)

    def members(self, ref_id: int) -> list[int]:
        root = self.find(ref_id)
        return sorted(member for member in self.parent if self.find(member) == root)

    def class_gender(self, ref_id: int) -> frozenset:
        gender = ALL_GENDERS
        for member in self.members(ref_id):
            gender &= self.gender.get(member, ALL_GENDERS)
        return gender

    def class_numbers(self, ref_id: int) -> set[str]:
        return {self.number[member] for member in self.members(ref_id) if member in self.number}

    def class_has_pred(self, ref_id: int, pred: str) -> bool:
        return any(pred in self.unary.get(member, ()) for member in self.members(ref_id))

    def class_name(self, ref_id: int) -> Optional[str]:
        return next((self.names[member] for member in self.members(ref_id) if member in self.names), None)


def _shift(path: BoxPath, offset: int) -> BoxPath:
    if not path:
        return path
    (index, role), rest = path[0], path[1:]
    return ((index + offset, role), *rest)


def resolve(context: Drs, parse: ParseResult) -> Resolution:
    """
    Resolve the anaphors of a parsed sentence against the discourse so far.

    Names are equated with the referent already carrying the same name.
    Pronouns are equated with the closest accessible earlier referent whose
    class agrees in gender and number. Definite noun phrases are equated with
    the closest accessible earlier referent described by the same noun, or
    become unique references.

    :param context: The discourse so far, unsimplified
    :param parse: Result of parse_sentence
    :return: The merged discourse, the sentence's increment and the report
    :raises UnresolvedPronoun: If a pronoun has no agreeing accessible antecedent
    """
    offset = len(context.conditions)
    working = merge(context, parse.drs_increment)
    entries: list[ResolutionEntry] = []

    for placeholder in sorted((*parse.names, *parse.placeholders), key=lambda p: p.referent.id):
        path = _shift(placeholder.path, offset)
        if placeholder.kind == 'name':
            working = _resolve_name(working, placeholder)
            continue
        classes = _Classes(working)
        candidates = [
            referent for referent in accessible_referents(working, path) if referent.id < placeholder.referent.id
        ]
        if placeholder.kind == 'pronoun':
            matches = [
                referent for referent in candidates
                if classes.class_gender(referent.id) & placeholder.gender
                and classes.class_numbers(referent.id) <= {placeholder.number}
            ]
            if not matches:
                raise UnresolvedPronoun(placeholder.text, placeholder.position)
            kind = 'pronoun'
        else:
            matches = [referent for referent in candidates if classes.class_has_pred(referent.id, placeholder.pred)]
            kind = 'definite-anaphoric'

        if not matches:
            working = _mark_unique(working, path, placeholder.referent)
            entries.append(ResolutionEntry(placeholder, None, 'definite-unique', placeholder.text))
            continue

        chosen = matches[0]
        accessible_ids = {referent.id for referent in candidates}
        antecedent_id = min(member for member in classes.members(chosen.id) if member in accessible_ids)
        antecedent = next(referent for referent in candidates if referent.id == antecedent_id)
        box = sub_drs_at(working, path)
        working = replace_sub_drs(working, path, box.with_conditions(Equality(placeholder.referent, antecedent)))
        competitor_roots = {classes.find(referent.id) for referent in matches[1:]} - {classes.find(chosen.id)}
        entries.append(ResolutionEntry(
            anaphor=placeholder,
            antecedent=antecedent,
            kind=kind,
            description=_description(classes, antecedent),
            name=classes.class_name(antecedent.id),
            competitors=len(competitor_roots)
        ))
        logger.debug("resolved %s", entries[-1])

    increment = Drs(working.referents[len(context.referents):], working.conditions[offset:])
    return Resolution(working, increment, ResolutionReport(tuple(entries)))


def _description(classes: _Classes, antecedent: Referent) -> str:
    for member in classes.members(antecedent.id):
        if member in classes.names and member in classes.origin:
            return classes.origin[member]
    return classes.origin.get(antecedent.id, str(antecedent))


def _resolve_name(working: Drs, placeholder: Placeholder) -> Drs:
    for condition in working.conditions:
        if (
                isinstance(condition, Atomic) and condition.pred == 'named'
                and condition.args[1] == placeholder.pred
                and condition.args[0].id < placeholder.referent.id
        ):
            equality = Equality(placeholder.referent, condition.args[0])
            return working.with_conditions(equality)
    return working


def _mark_unique(working: Drs, path: BoxPath, referent: Referent) -> Drs:
    box = sub_drs_at(working, path)
    referents = tuple(
        replace(declared, unique=True) if declared.id == referent.id else declared for declared in box.referents
    )
    return replace_sub_drs(working, path, Drs(referents, box.conditions))
