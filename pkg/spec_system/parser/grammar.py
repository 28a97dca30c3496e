# -*- coding: utf-8 -*-
"""
Top-down grammar of the controlled language.

Every rule is a generator yielding (node, next token index) for each way it
can cover the input from a given index, so alternatives are explored by
backtracking. Lists (coordinations, adjectives) are read iteratively.
"""
from typing import Callable, Iterator, Optional

from spec_system.features import FeatureStructure, unify
from spec_system.lexicon import LexEntry, Lexicon

from .syntax import SyntaxNode
from .tokens import Token

Parse = Iterator[tuple[SyntaxNode, int]]

THIRD_SINGULAR = FeatureStructure(agr={'person': 'third', 'number': 'sg'})['agr']
PLURAL = FeatureStructure(number='pl')


class Grammar:
    """
    Grammar rules over one sentence.

    :param tokens: Tokens of the sentence, terminator included.
    :param lexicon: Vocabulary used for the leaves.
    """

    def __init__(self, tokens: list[Token], lexicon: Lexicon):
        self.tokens = tokens
        self.lexicon = lexicon
        self.words = [token.norm for token in tokens]
        self.furthest = 0
        self.expected: set[str] = set()
        self._matches: dict[int, tuple[list[LexEntry], int]] = {}

    def parses(self) -> Iterator[SyntaxNode]:
        """
        Every complete parse of the sentence.
        """
        terminator = self.tokens[-1].text if self.tokens and self.tokens[-1].kind == 'punct' else None
        limit = len(self.tokens) - 1 if terminator in ('.', '?') else len(self.tokens)
        rules = self.query(0) if terminator == '?' else self.declarative(0)
        label = 'question' if terminator == '?' else 'sentence'
        for node, end in rules:
            if end == limit:
                children = (node, self._punct(limit)) if terminator else (node,)
                yield SyntaxNode(label, children=children, start=0, end=len(self.tokens), kind=node.label)
            else:
                self.fail(end, 'end of sentence')

    def fail(self, index: int, expected: str) -> None:
        if index > self.furthest:
            self.furthest, self.expected = index, {expected}
        elif index == self.furthest:
            self.expected.add(expected)

    def _punct(self, index: int) -> SyntaxNode:
        token = self.tokens[index]
        return SyntaxNode('punct', text=token.text, start=index, end=index + 1)

    def _lexical(self, index: int) -> tuple[list[LexEntry], int]:
        if index not in self._matches:
            if index < len(self.tokens) and self.tokens[index].kind == 'word':
                self._matches[index] = self.lexicon.longest_match(self.words, index)
            else:
                self._matches[index] = ([], 0)
        return self._matches[index]

    def leaf(
            self,
            index: int,
            category: str,
            test: Optional[Callable[[LexEntry], bool]] = None,
            expected: Optional[str] = None
    ) -> Parse:
        entries, length = self._lexical(index)
        found = False
        for entry in entries:
            if entry.category == category and (test is None or test(entry)):
                found = True
                text = ' '.join(token.text for token in self.tokens[index:index + length])
                yield SyntaxNode(
                    category, entry.features, entry=entry, text=text, start=index, end=index + length
                ), index + length
        if not found:
            self.fail(index, expected or category)

    def keyword(self, index: int, surface: str, category: str) -> Parse:
        yield from self.leaf(index, category, lambda entry: entry.surface == surface, expected=f"'{surface}'")

    def _comma(self, index: int) -> int:
        if index < len(self.tokens) and self.tokens[index].text == ',':
            return index + 1
        return index

    # sentences

    def declarative(self, index: int) -> Parse:
        yield from self.conditional(index)
        yield from self.coordination(index, self.clause, 'coord')

    def conditional(self, index: int) -> Parse:
        for if_node, after_if in self.keyword(index, 'if', 'conjunction'):
            for antecedent, after_antecedent in self.coordination(after_if, self.clause, 'coord'):
                then_index = self._comma(after_antecedent)
                for then_node, after_then in self.keyword(then_index, 'then', 'conjunction'):
                    for consequent, end in self.coordination(after_then, self.clause, 'coord'):
                        yield SyntaxNode(
                            'cond', children=(if_node, antecedent, then_node, consequent), start=index, end=end
                        ), end

    def connector(self, index: int) -> Iterator[tuple[str, list[SyntaxNode], int]]:
        for and_node, after_and in self.keyword(index, 'and', 'conjunction'):
            yield 'and', [and_node], after_and
            for then_node, after_then in self.keyword(after_and, 'then', 'conjunction'):
                yield 'and_then', [and_node, then_node], after_then
        for or_node, after_or in self.keyword(index, 'or', 'conjunction'):
            yield 'or', [or_node], after_or

    def coordination(self, index: int, item: Callable[..., Parse], label: str, *args) -> Parse:
        """
        item (connector item)*; mixed 'or' and 'and' lists yield one grouping per precedence.
        """
        for first, after_first in item(index, *args):
            for items, ops, connectors, end in self._coordination_tail(after_first, item, args):
                for node in _groupings([first, *items], ops, connectors, label):
                    yield node, end

    def _coordination_tail(self, index: int, item, args) -> Iterator[tuple[list, list, list, int]]:
        yield [], [], [], index
        for op, connector_nodes, after_connector in self.connector(index):
            for node, after_item in item(after_connector, *args):
                for items, ops, connectors, end in self._coordination_tail(after_item, item, args):
                    yield [node, *items], [op, *ops], [connector_nodes, *connectors], end

    def clause(self, index: int) -> Parse:
        for subject, after_subject in self.noun_phrase(index, 'nom'):
            agr = subject.features.get('agr')
            for verb_phrases, end in self.coordination(after_subject, self.verb_phrase, 'vpc', agr):
                yield SyntaxNode('clause', children=(subject, verb_phrases), start=index, end=end), end

    # verb phrases

    def verb_phrase(self, index: int, agr: FeatureStructure) -> Parse:
        yield from self.copula_phrase(index, agr)
        yield from self.negated_do_phrase(index, agr)
        yield from self.finite_verb_phrase(index, agr)

    def copula_phrase(self, index: int, agr: FeatureStructure) -> Parse:
        for copula, after_copula in self.leaf(index, 'verb', lambda e: e.verb_kind == 'copula', 'copula'):
            if not _agrees(copula, agr):
                self.fail(index, 'agreeing verb')
                continue
            for negation, after_negation in self._optional_not(after_copula):
                for kind, children, end in self.copula_complement(after_negation):
                    yield SyntaxNode(
                        'vp', children=(copula, *negation, *children), start=index, end=end,
                        kind=kind, negated=bool(negation)
                    ), end

    def copula_complement(self, index: int) -> Iterator[tuple[str, tuple[SyntaxNode, ...], int]]:
        for predicate, end in self.noun_phrase(index, 'acc'):
            if predicate.kind in ('indef', 'def', 'name', 'univ', 'bare'):
                yield 'copula_np', (predicate,), end
        for adjective, end in self.leaf(index, 'adjective'):
            yield 'copula_adj', (adjective,), end
        for comparative, after_comparative in self.leaf(index, 'comparative'):
            preposition = comparative.features.get('prep')
            for prep, after_prep in self.keyword(after_comparative, preposition, 'preposition'):
                for compared, end in self.noun_phrase(after_prep, 'acc'):
                    yield 'comparative', (comparative, prep, compared), end
        for verb, after_verb in self.leaf(index, 'verb', _has_form('ing'), 'verb (-ing)'):
            for tail, end in self.verb_tail(after_verb):
                yield 'progressive', (verb, *tail), end

    def negated_do_phrase(self, index: int, agr: FeatureStructure) -> Parse:
        for auxiliary, after_auxiliary in self.leaf(index, 'auxiliary'):
            if not _agrees(auxiliary, agr):
                self.fail(index, 'agreeing verb')
                continue
            for negation, after_negation in self.leaf(after_auxiliary, 'negation'):
                for verb, after_verb in self.leaf(after_negation, 'verb', _has_form('base', 'copula'), 'verb'):
                    for tail, end in self.verb_tail(after_verb):
                        yield SyntaxNode(
                            'vp', children=(auxiliary, negation, verb, *tail), start=index, end=end,
                            kind='verb', negated=True
                        ), end

    def finite_verb_phrase(self, index: int, agr: FeatureStructure, with_object: bool = True) -> Parse:
        for verb, after_verb in self.leaf(index, 'verb', _is_finite, 'verb'):
            if not _agrees(verb, agr):
                self.fail(index, 'agreeing verb')
                continue
            negations = self._optional_not(after_verb) if verb.entry.lemma == 'have' else iter([((), after_verb)])
            for negation, after_negation in negations:
                tails = self.verb_tail(after_negation) if with_object else self.pp_tail(after_negation)
                for tail, end in tails:
                    if negation and not any(node.label == 'np' for node in tail):
                        continue
                    yield SyntaxNode(
                        'vp', children=(verb, *negation, *tail), start=index, end=end,
                        kind='verb', negated=bool(negation)
                    ), end

    def verb_tail(self, index: int) -> Iterator[tuple[tuple[SyntaxNode, ...], int]]:
        """
        Optional object noun phrase followed by an optional prepositional complement.
        """
        yield from self.pp_tail(index)
        for obj, after_object in self.noun_phrase(index, 'acc'):
            for tail, end in self.pp_tail(after_object):
                yield (obj, *tail), end

    def pp_tail(self, index: int) -> Iterator[tuple[tuple[SyntaxNode, ...], int]]:
        yield (), index
        for pp, end in self.prepositional_phrase(index):
            yield (pp,), end

    def prepositional_phrase(self, index: int) -> Parse:
        for prep, after_prep in self.leaf(index, 'preposition', lambda e: e.surface not in ('than',)):
            for obj, end in self.noun_phrase(after_prep, 'acc'):
                yield SyntaxNode('pp', children=(prep, obj), start=index, end=end), end

    def _optional_not(self, index: int) -> Iterator[tuple[tuple[SyntaxNode, ...], int]]:
        yield (), index
        for negation, end in self.leaf(index, 'negation'):
            yield (negation,), end

    # noun phrases

    def noun_phrase(self, index: int, case: str) -> Parse:
        for determiner, after_determiner in self.leaf(index, 'determiner'):
            for nbar, end in self.nbar(after_determiner):
                number = unify(
                    FeatureStructure(number=determiner.features['number']),
                    FeatureStructure(number=nbar.features.get('number', 'sg'))
                )
                if number is None:
                    self.fail(after_determiner, 'agreeing noun')
                    continue
                yield self._np(determiner.features['quant'], (determiner, nbar), nbar.features, index, end), end

        for name, end in self.leaf(index, 'proper-noun'):
            yield self._np('name', (name,), name.features, index, end), end

        for pronoun, end in self.leaf(index, 'pronoun', lambda e: e.features.get('type') == 'personal'):
            if unify(FeatureStructure(case=pronoun.features['case']), FeatureStructure(case=case)) is None:
                self.fail(index, f'{case} pronoun')
                continue
            yield self._np('pronoun', (pronoun,), pronoun.features, index, end), end

        if index < len(self.tokens) and self.tokens[index].kind == 'number':
            leaf = SyntaxNode('number', text=self.tokens[index].text, start=index, end=index + 1)
            yield self._np('number', (leaf,), FeatureStructure(number='sg', gender='n'), index, index + 1), index + 1
        else:
            self.fail(index, 'number')

        for nbar, end in self.nbar(index):
            yield self._np('bare', (nbar,), nbar.features, index, end), end

    @staticmethod
    def _np(kind: str, children: tuple, features: FeatureStructure, start: int, end: int) -> SyntaxNode:
        number = features.get('number', 'sg')
        np_features = FeatureStructure(
            agr={'person': 'third', 'number': number},
            gender=features.get('gender', frozenset({'m', 'f', 'n'}))
        )
        return SyntaxNode('np', np_features, children=children, start=start, end=end, kind=kind)

    def nbar(self, index: int) -> Parse:
        for adjectives, after_adjectives in self._adjectives(index):
            for noun, after_noun in self.leaf(after_adjectives, 'noun'):
                children = (*adjectives, noun)
                yield SyntaxNode('nbar', noun.features, children=children, start=index, end=after_noun), after_noun
                for relative, end in self.relative_clause(after_noun, noun.features):
                    yield SyntaxNode(
                        'nbar', noun.features, children=(*children, relative), start=index, end=end
                    ), end

    def _adjectives(self, index: int) -> Iterator[tuple[tuple[SyntaxNode, ...], int]]:
        yield (), index
        for adjective, after_adjective in self.leaf(index, 'adjective'):
            for rest, end in self._adjectives(after_adjective):
                yield (adjective, *rest), end

    def relative_clause(self, index: int, head: FeatureStructure) -> Parse:
        head_agr = FeatureStructure(person='third', number=head.get('number', 'sg'))
        for pronoun, after_pronoun in self.leaf(index, 'pronoun', lambda e: e.features.get('type') == 'relative'):
            if unify(FeatureStructure(gender=pronoun.features['gender']),
                     FeatureStructure(gender=head.get('gender', frozenset({'m', 'f', 'n'})))) is None:
                self.fail(index, 'agreeing relative pronoun')
                continue
            for verb_phrase, end in self.verb_phrase(after_pronoun, head_agr):
                yield SyntaxNode(
                    'rel', children=(pronoun, verb_phrase), start=index, end=end, kind='subject'
                ), end
            for subject, after_subject in self.noun_phrase(after_pronoun, 'nom'):
                for verb_phrase, end in self._gapped_verb_phrase(after_subject, subject.features.get('agr')):
                    yield SyntaxNode(
                        'rel', children=(pronoun, subject, verb_phrase), start=index, end=end, kind='object'
                    ), end

    def _gapped_verb_phrase(self, index: int, agr: FeatureStructure) -> Parse:
        yield from self.finite_verb_phrase(index, agr, with_object=False)
        for auxiliary, after_auxiliary in self.leaf(index, 'auxiliary'):
            if not _agrees(auxiliary, agr):
                continue
            for negation, after_negation in self.leaf(after_auxiliary, 'negation'):
                for verb, after_verb in self.leaf(after_negation, 'verb', _has_form('base', 'copula'), 'verb'):
                    for tail, end in self.pp_tail(after_verb):
                        yield SyntaxNode(
                            'vp', children=(auxiliary, negation, verb, *tail), start=index, end=end,
                            kind='verb', negated=True
                        ), end

    # queries

    def query(self, index: int) -> Parse:
        yield from self.copula_question(index)
        yield from self.do_question(index)
        yield from self.wh_question(index)

    def copula_question(self, index: int) -> Parse:
        for copula, after_copula in self.leaf(index, 'verb', lambda e: e.verb_kind == 'copula', 'copula'):
            for subject, after_subject in self.noun_phrase(after_copula, 'nom'):
                if not _agrees(copula, subject.features.get('agr')):
                    self.fail(index, 'agreeing verb')
                    continue
                for negation, after_negation in self._optional_not(after_subject):
                    for kind, children, end in self.copula_complement(after_negation):
                        verb_phrase = SyntaxNode(
                            'vp', children=(copula, *negation, *children), start=after_subject, end=end,
                            kind=kind, negated=bool(negation)
                        )
                        yield SyntaxNode('ynq', children=(subject, verb_phrase), start=index, end=end), end

    def do_question(self, index: int) -> Parse:
        for auxiliary, after_auxiliary in self.leaf(index, 'auxiliary'):
            for subject, after_subject in self.noun_phrase(after_auxiliary, 'nom'):
                if not _agrees(auxiliary, subject.features.get('agr')):
                    self.fail(index, 'agreeing verb')
                    continue
                for negation, after_negation in self._optional_not(after_subject):
                    for verb, after_verb in self.leaf(after_negation, 'verb', _has_form('base', 'copula'), 'verb'):
                        for tail, end in self.verb_tail(after_verb):
                            verb_phrase = SyntaxNode(
                                'vp', children=(auxiliary, *negation, verb, *tail), start=after_subject,
                                end=end, kind='verb', negated=bool(negation)
                            )
                            yield SyntaxNode('ynq', children=(subject, verb_phrase), start=index, end=end), end

    def wh_question(self, index: int) -> Parse:
        for wh, after_wh in self.leaf(index, 'query-word'):
            wh_np = SyntaxNode(
                'np', FeatureStructure(agr=THIRD_SINGULAR), children=(wh,), start=index, end=after_wh, kind='wh'
            )
            for verb_phrases, end in self.coordination(after_wh, self.verb_phrase, 'vpc', THIRD_SINGULAR):
                yield SyntaxNode('whq', children=(wh_np, verb_phrases), start=index, end=end, kind='subject'), end
            for auxiliary, after_auxiliary in self.leaf(after_wh, 'auxiliary'):
                for subject, after_subject in self.noun_phrase(after_auxiliary, 'nom'):
                    if not _agrees(auxiliary, subject.features.get('agr')):
                        self.fail(after_wh, 'agreeing verb')
                        continue
                    for verb, after_verb in self.leaf(after_subject, 'verb', _has_form('base', 'copula'), 'verb'):
                        for tail, end in self.pp_tail(after_verb):
                            verb_phrase = SyntaxNode(
                                'vp', children=(auxiliary, verb, *tail), start=after_subject, end=end, kind='verb'
                            )
                            yield SyntaxNode(
                                'whq', children=(wh_np, subject, verb_phrase), start=index, end=end, kind='object'
                            ), end


def _has_form(form: str, excluded_kind: Optional[str] = None) -> Callable[[LexEntry], bool]:
    return lambda entry: entry.features.get('form') == form and entry.verb_kind != excluded_kind


def _is_finite(entry: LexEntry) -> bool:
    return entry.verb_kind != 'copula' and entry.features.get('form') in ('finite', 'base')


def _agrees(node: SyntaxNode, agr: Optional[FeatureStructure]) -> bool:
    """
    Subject-verb agreement; a base form used finitely agrees with plural subjects only.
    """
    if node.features.get('form') == 'base':
        own = PLURAL
    else:
        own = node.features.get('agr') or FeatureStructure()
    return unify(own, agr or FeatureStructure()) is not None


def _groupings(items: list[SyntaxNode], ops: list[str], connectors: list, label: str) -> Iterator[SyntaxNode]:
    """
    Coordination nodes for a flat item list. Mixed 'or' and 'and' connectors
    give two groupings: 'and' binding tighter, then 'or' binding tighter.
    """
    if not ops:
        yield items[0]
        return
    kinds = {'or' if op == 'or' else 'and' for op in ops}
    if len(kinds) == 1:
        yield _coordination_node(items, ops, connectors, label)
        return
    for tight in ('and', 'or'):
        groups, group_ops, outer_ops, outer_connectors = [[items[0]]], [[]], [], []
        group_connectors = [[]]
        for item, op, connector in zip(items[1:], ops, connectors):
            if ('or' if op == 'or' else 'and') == tight:
                groups[-1].append(item)
                group_ops[-1].append(op)
                group_connectors[-1].append(connector)
            else:
                groups.append([item])
                group_ops.append([])
                group_connectors.append([])
                outer_ops.append(op)
                outer_connectors.append(connector)
        nodes = [
            group[0] if len(group) == 1 else _coordination_node(group, inner_ops, inner_connectors, label)
            for group, inner_ops, inner_connectors in zip(groups, group_ops, group_connectors)
        ]
        yield _coordination_node(nodes, outer_ops, outer_connectors, label)


def _coordination_node(items: list[SyntaxNode], ops: list[str], connectors: list, label: str) -> SyntaxNode:
    children = [items[0]]
    for item, connector in zip(items[1:], connectors):
        children.extend(connector)
        children.append(item)
    return SyntaxNode(
        label, children=tuple(children), start=items[0].start, end=items[-1].end, ops=tuple(ops)
    )
