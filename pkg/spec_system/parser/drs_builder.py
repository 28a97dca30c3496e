# -*- coding: utf-8 -*-
"""
Construction of the DRS increment of a sentence from its syntax tree.
"""
import logging
from typing import Optional

from spec_system.drs import (
    Argument, Atomic, BoxPath, Disjunction, Drs, Equality, Gender, IfThen, Negation, Number, Referent
)

from .syntax import Indefinite, ParseResult, Placeholder, SyntaxNode, VerbEvent
from .tokens import Token

logger = logging.getLogger(__name__)

ALL_GENDERS = frozenset({'m', 'f', 'n'})
PERSON_GENDERS = frozenset({'m', 'f'})


class _Box:
    """
    Mutable box used while building; complex conditions hold nested _Box objects.
    """

    def __init__(self):
        self.referents: list[Referent] = []
        self.conditions: list = []


class _Complex:

    def __init__(self, kind: str, *boxes: _Box):
        self.kind = kind
        self.boxes = boxes


class DrsBuilder:
    """
    Builds the increment of one parsed sentence.

    :param tokens: Tokens of the sentence.
    :param first_referent: Number of the first referent the sentence may introduce.
    """

    def __init__(self, tokens: list[Token], first_referent: int = 1):
        self.tokens = tokens
        self.next_id = first_referent
        self.top = _Box()
        self.slot = 0
        self.placeholders: list[tuple[dict, _Box]] = []
        self.names: dict[str, Referent] = {}
        self.indefinites: list[tuple[dict, _Box]] = []
        self.wh_vars: list[tuple[Referent, str]] = []
        self.events: list[tuple[dict, _Box]] = []

    def build(self, tree: SyntaxNode) -> ParseResult:
        body = tree.children[0]
        mood = {'ynq': 'yes-no-query', 'whq': 'wh-query'}.get(body.label, 'declarative')
        if body.label == 'cond':
            self._conditional(body, self.top)
        elif body.label in ('coord', 'clause', 'ynq'):
            self._sentence(body, self.top)
        elif body.label == 'whq':
            self._wh_question(body, self.top)

        paths: dict[int, BoxPath] = {}
        increment = self._finish(self.top, (), paths)
        events = tuple(VerbEvent(path=paths[id(box)], **data) for data, box in self.events)
        kinds = {event.kind for event in events if not event.negated}
        result = ParseResult(
            tree=tree,
            drs_increment=increment,
            mood=mood,
            tokens=tuple(self.tokens),
            eventuality_hint='event' if 'event' in kinds else 'state' if 'state' in kinds else 'none',
            aspect='progressive' if any(event.aspect == 'progressive' for event in events) else 'simple',
            placeholders=tuple(
                Placeholder(path=paths[id(box)], **data) for data, box in self.placeholders if data['kind'] != 'name'
            ),
            names=tuple(
                Placeholder(path=paths[id(box)], **data) for data, box in self.placeholders if data['kind'] == 'name'
            ),
            indefinites=tuple(Indefinite(path=paths[id(box)], **data) for data, box in self.indefinites),
            wh_vars=tuple(self.wh_vars),
            verb_events=events,
            next_referent=self.next_id
        )
        logger.debug("DRS increment: %s", increment)
        return result

    def _finish(self, box: _Box, path: BoxPath, paths: dict[int, BoxPath]) -> Drs:
        paths[id(box)] = path
        conditions = []
        for index, condition in enumerate(box.conditions):
            if isinstance(condition, _Complex):
                if condition.kind == 'ifthen':
                    antecedent = self._finish(condition.boxes[0], (*path, (index, 'antecedent')), paths)
                    consequent = self._finish(condition.boxes[1], (*path, (index, 'consequent')), paths)
                    condition = IfThen(antecedent, consequent)
                elif condition.kind == 'not':
                    condition = Negation(self._finish(condition.boxes[0], (*path, (index, 'negated')), paths))
                else:
                    condition = Disjunction(
                        self._finish(condition.boxes[0], (*path, (index, 'left')), paths),
                        self._finish(condition.boxes[1], (*path, (index, 'right')), paths)
                    )
            conditions.append(condition)
        return Drs(tuple(box.referents), tuple(conditions))

    def _new_referent(self, node: SyntaxNode, box: _Box) -> Referent:
        referent = Referent(self.next_id, origin=(self._sentence_index, self._text(node)))
        self.next_id += 1
        box.referents.append(referent)
        return referent

    @property
    def _sentence_index(self) -> int:
        return self.tokens[0].position[0] if self.tokens else 0

    def _text(self, node: SyntaxNode) -> str:
        return ' '.join(token.text for token in self.tokens[node.start:node.end])

    def _position(self, node: SyntaxNode) -> tuple[int, int]:
        return self.tokens[node.start].position

    # sentences

    def _conditional(self, node: SyntaxNode, box: _Box) -> None:
        antecedent, consequent = _Box(), _Box()
        box.conditions.append(_Complex('ifthen', antecedent, consequent))
        self._sentence(node.children[1], antecedent)
        self._sentence(node.children[3], consequent)

    def _sentence(self, node: SyntaxNode, box: _Box) -> None:
        if node.label == 'coord':
            self._coordination(node, box, self._sentence)
        else:
            subject, scope = self._noun_phrase(node.children[0], box)
            self._verb_phrases(node.children[1], scope, subject)

    def _coordination(self, node: SyntaxNode, box: _Box, build, *args) -> None:
        items = [child for child in node.children if child.label not in ('conjunction',)]
        if 'or' in node.ops:
            self._disjunction(items, box, build, *args)
            return
        for position, item in enumerate(items):
            if position and node.ops[position - 1] == 'and_then':
                self.slot += 1
            build(item, box, *args)

    def _disjunction(self, items: list[SyntaxNode], box: _Box, build, *args) -> None:
        left, right = _Box(), _Box()
        box.conditions.append(_Complex('or', left, right))
        build(items[0], left, *args)
        if len(items) == 2:
            build(items[1], right, *args)
        else:
            self._disjunction(items[1:], right, build, *args)

    def _wh_question(self, node: SyntaxNode, box: _Box) -> None:
        wh_node = node.children[0]
        referent = self._new_referent(wh_node, box)
        word = wh_node.children[0].entry.surface
        self.wh_vars.append((referent, word))
        if word == 'who':
            box.conditions.append(Gender(referent, PERSON_GENDERS))
        if node.kind == 'subject':
            self._verb_phrases(node.children[1], box, referent)
        else:
            subject, scope = self._noun_phrase(node.children[1], box)
            self._verb_phrase(node.children[2], scope, subject, gap=referent)

    # verb phrases

    def _verb_phrases(self, node: SyntaxNode, box: _Box, subject: Argument) -> None:
        if node.label == 'vpc':
            self._coordination(node, box, self._verb_phrases, subject)
        else:
            self._verb_phrase(node, box, subject)

    def _verb_phrase(
            self, node: SyntaxNode, box: _Box, subject: Argument, gap: Optional[Argument] = None
    ) -> None:
        if node.negated:
            negated = _Box()
            box.conditions.append(_Complex('not', negated))
            box = negated

        if node.kind == 'copula_np':
            predicate, scope = self._noun_phrase(node.child('np'), box)
            if isinstance(subject, Referent) and isinstance(predicate, Referent):
                scope.conditions.append(Equality(subject, predicate, copula=True))
        elif node.kind == 'copula_adj':
            box.conditions.append(Atomic(node.child('adjective').entry.pred, (subject,)))
        elif node.kind == 'comparative':
            compared, scope = self._noun_phrase(node.child('np'), box)
            scope.conditions.append(Atomic(node.child('comparative').entry.pred, (subject, compared)))
        else:
            self._event_verb(node, box, subject, gap)

    def _event_verb(self, node: SyntaxNode, box: _Box, subject: Argument, gap: Optional[Argument]) -> None:
        verb = [child for child in node.children if child.label == 'verb'][-1]
        args: list[Argument] = [subject]
        scope = box
        obj = node.child('np')
        if obj is not None:
            value, scope = self._noun_phrase(obj, scope)
            args.append(value)
        elif gap is not None:
            args.append(gap)
        pred = verb.entry.pred
        pp = node.child('pp')
        if pp is not None:
            value, scope = self._noun_phrase(pp.children[1], scope)
            args.append(value)
            pred = f"{pred}_{pp.children[0].entry.surface}"

        condition = Atomic(pred, tuple(args))
        scope.conditions.append(condition)
        progressive = node.kind == 'progressive'
        self.events.append((dict(
            condition=condition,
            kind='state' if progressive or verb.entry.verb_kind != 'event' else 'event',
            aspect='progressive' if progressive else 'simple',
            slot=self.slot,
            negated=node.negated
        ), scope))

    # noun phrases

    def _noun_phrase(self, node: SyntaxNode, box: _Box) -> tuple[Argument, _Box]:
        """
        Conditions of a noun phrase.

        :return: The argument standing for the noun phrase and the box that
            takes the conditions following it (the consequent of a universal)
        """
        if node.kind == 'number':
            text = node.children[0].text
            return (float(text) if '.' in text else int(text)), box
        if node.kind == 'name':
            return self._name(node), box
        if node.kind == 'pronoun':
            return self._pronoun(node, box), box
        if node.kind == 'univ':
            antecedent, consequent = _Box(), _Box()
            box.conditions.append(_Complex('ifthen', antecedent, consequent))
            referent = self._described(node, antecedent)
            return referent, consequent
        return self._described(node, box), box

    def _described(self, node: SyntaxNode, box: _Box) -> Referent:
        nbar = node.child('nbar')
        noun = nbar.child('noun')
        adjectives = [child.entry.pred for child in nbar.children if child.label == 'adjective']
        referent = self._new_referent(node, box)
        gender = noun.features.get('gender', ALL_GENDERS)
        number = noun.features.get('number', 'sg')
        box.conditions.append(Gender(referent, gender))
        box.conditions.append(Number(referent, number))
        box.conditions.append(Atomic(noun.entry.pred, (referent,)))
        box.conditions.extend(Atomic(pred, (referent,)) for pred in adjectives)

        if node.kind == 'def':
            self.placeholders.append((dict(
                referent=referent, kind='definite', position=self._position(node), text=self._text(node),
                gender=gender, number=number, pred=noun.entry.pred, adjectives=tuple(adjectives)
            ), box))
        elif node.kind in ('indef', 'bare'):
            self.indefinites.append((dict(
                referent=referent, position=self._position(node), text=self._text(node)
            ), box))

        relative = nbar.child('rel')
        if relative is not None:
            self._relative_clause(relative, box, referent)
        return referent

    def _relative_clause(self, node: SyntaxNode, box: _Box, head: Referent) -> None:
        if node.kind == 'subject':
            self._verb_phrase(node.children[1], box, head)
        else:
            subject, scope = self._noun_phrase(node.children[1], box)
            self._verb_phrase(node.children[2], scope, subject, gap=head)

    def _name(self, node: SyntaxNode) -> Referent:
        entry = node.children[0].entry
        if entry.lemma in self.names:
            return self.names[entry.lemma]
        referent = self._new_referent(node, self.top)
        self.names[entry.lemma] = referent
        gender = entry.features.get('gender', ALL_GENDERS)
        number = entry.features.get('number', 'sg')
        self.top.conditions.append(Gender(referent, gender))
        self.top.conditions.append(Number(referent, number))
        self.top.conditions.append(Atomic('named', (referent, entry.lemma)))
        self.placeholders.append((dict(
            referent=referent, kind='name', position=self._position(node), text=self._text(node),
            gender=gender, number=number, pred=entry.lemma
        ), self.top))
        return referent

    def _pronoun(self, node: SyntaxNode, box: _Box) -> Referent:
        entry = node.children[0].entry
        referent = self._new_referent(node, box)
        gender = entry.features['gender']
        box.conditions.append(Gender(referent, gender))
        box.conditions.append(Number(referent, entry.features['number']))
        self.placeholders.append((dict(
            referent=referent, kind='pronoun', position=self._position(node), text=self._text(node),
            gender=gender, number=entry.features['number'], pred=entry.surface
        ), box))
        return referent


def build_increment(tree: SyntaxNode, tokens: list[Token], first_referent: int = 1) -> ParseResult:
    return DrsBuilder(tokens, first_referent).build(tree)
