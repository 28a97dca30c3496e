# -*- coding: utf-8 -*-
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from spec_system.lexicon import Lexicon, inflection
from spec_system.translator import Clause, Const, Literal, Term

from .schema import ParaphraseSchema, PatternLiteral, Slot, TEMPLATE_SLOT

logger = logging.getLogger(__name__)

_ARTICLE = re.compile(r"\b([Aa])/an\s+(\S+)")


@dataclass(frozen=True)
class Paraphrase:
    """
    :param sentences: Paraphrased sentences in knowledge base order.
    :param remainder: Clauses no schema covers, rendered verbatim.
    """
    sentences: tuple[str, ...]
    remainder: tuple[Clause, ...] = ()

    def lines(self) -> list[str]:
        return [*self.sentences, *(str(clause) for clause in self.remainder)]


def grapheme(lexicon: Lexicon, pred: str) -> str:
    """
    Written form of a relation name or lemma; unknown names render with spaces for underscores.
    """
    return lexicon.grapheme(pred) or pred.replace('_', ' ')


def resolve_articles(text: str) -> str:
    """
    Replace every 'a/an' marker by the article the following words take.
    """
    def article(match: re.Match) -> str:
        chosen = inflection.with_article(match.group(2)).split(' ', 1)[0]
        return (chosen.capitalize() if match.group(1) == 'A' else chosen) + ' ' + match.group(2)

    return _ARTICLE.sub(article, text)


def fill_template(template: str, slots: dict[str, str], lexicon: Lexicon) -> str:
    """
    Sentence of a template with its slots bound to relation names or lemmas.
    """
    def replace(match: re.Match) -> str:
        written = grapheme(lexicon, slots[match.group(1)])
        return inflection.third_singular(written) if match.group(2) == 'gs' else written

    sentence = resolve_articles(TEMPLATE_SLOT.sub(replace, template))
    return sentence[:1].upper() + sentence[1:]


class _Matcher:

    def __init__(self, facts: Sequence[Literal], lexicon: Lexicon):
        self.facts = facts
        self.lexicon = lexicon

    def in_category(self, name: str, slot: Slot) -> bool:
        return self.lexicon.entry_for_pred(name, slot.category) is not None

    def bind_slot(self, slot: Slot, name: str, slots: dict[str, str]) -> Optional[dict[str, str]]:
        if slot.name in slots:
            return slots if slots[slot.name] == name else None
        if not self.in_category(name, slot):
            return None
        return {**slots, slot.name: name}

    def literal(
            self, pattern: PatternLiteral, fact: Literal, variables: dict[str, Term], slots: dict[str, str]
    ) -> Optional[tuple[dict[str, Term], dict[str, str]]]:
        if len(pattern.args) != len(fact.args) or fact.negated:
            return None
        if isinstance(pattern.pred, Slot):
            slots = self.bind_slot(pattern.pred, fact.pred, slots)
        elif pattern.pred != fact.pred:
            return None
        for arg, value in zip(pattern.args, fact.args):
            if slots is None:
                return None
            if isinstance(arg, Slot):
                if not (isinstance(value, Const) and isinstance(value.value, str)):
                    return None
                slots = self.bind_slot(arg, value.value, slots)
            elif arg in variables:
                if variables[arg] != value:
                    return None
            else:
                variables = {**variables, arg: value}
        if slots is None:
            return None
        return variables, slots

    def matches(
            self,
            pattern: Sequence[PatternLiteral],
            used: tuple[int, ...] = (),
            variables: Optional[dict[str, Term]] = None,
            slots: Optional[dict[str, str]] = None
    ) -> Iterator[tuple[tuple[int, ...], dict[str, str]]]:
        variables, slots = variables or {}, slots or {}
        if not pattern:
            yield used, slots
            return
        for index, fact in enumerate(self.facts):
            if index in used:
                continue
            bound = self.literal(pattern[0], fact, variables, slots)
            if bound is not None:
                yield from self.matches(pattern[1:], (*used, index), *bound)


def _is_named(fact: Literal) -> bool:
    return fact.pred == 'named' and len(fact.args) == 2


def paraphrase_kb(
        clauses: Iterable[Clause],
        schemata: Sequence[ParaphraseSchema],
        lexicon: Lexicon
) -> Paraphrase:
    """
    Paraphrase the facts of a clause list with the first schema that covers
    each fact, in clause order.

    A schema match consumes the facts it covers, except named/2 facts, which
    stay available to later sentences about the same individual.

    :param clauses: Clauses to paraphrase; rules and negative clauses are not covered
    :param schemata: Schemata in order of preference
    :param lexicon: Source of categories and graphemes
    :return: The sentences plus the uncovered clauses
    """
    clauses = list(clauses)
    facts = [clause.head for clause in clauses if clause.is_fact and not clause.is_negative]
    matcher = _Matcher(facts, lexicon)
    consumed: set[int] = set()
    mentioned: set[int] = set()
    sentences: list[str] = []

    for anchor in range(len(facts)):
        if anchor in consumed or anchor in mentioned:
            continue
        for schema in schemata:
            match = next(
                (
                    (used, slots) for used, slots in matcher.matches(schema.pattern)
                    if anchor in used and not consumed & set(used)
                ),
                None
            )
            if match is None:
                continue
            used, slots = match
            sentences.append(fill_template(schema.template, slots, lexicon))
            consumed.update(index for index in used if not _is_named(facts[index]))
            mentioned.update(used)
            break

    covered = consumed | mentioned
    remainder = [
        clause for clause in clauses
        if not (clause.is_fact and not clause.is_negative) or facts.index(clause.head) not in covered
    ]
    logger.debug("paraphrased %d sentences, %d clauses left", len(sentences), len(remainder))
    return Paraphrase(tuple(sentences), tuple(remainder))
