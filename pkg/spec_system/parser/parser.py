# -*- coding: utf-8 -*-
import logging
from typing import Optional

from spec_system.exceptions import AmbiguitySet, EmptyInput, ParseError, UnknownWord
from spec_system.lexicon import Lexicon

from .drs_builder import build_increment
from .grammar import Grammar
from .syntax import ParseResult, SyntaxNode
from .tokens import Token

logger = logging.getLogger(__name__)


def check_known_words(tokens: list[Token], lexicon: Lexicon) -> None:
    """
    :raises UnknownWord: For the first word without a lexicon entry
    """
    words = [token.norm for token in tokens]
    index = 0
    while index < len(tokens):
        token = tokens[index]
        if token.kind != 'word':
            index += 1
            continue
        entries, length = lexicon.longest_match(words, index)
        if not entries:
            raise UnknownWord(token.text, token.position)
        index += length


def parse_sentence(tokens: list[Token], lexicon: Lexicon, first_referent: int = 1) -> ParseResult:
    """
    Parse one sentence and build its DRS increment.

    :param tokens: Tokens of one sentence, terminator included
    :param lexicon: Vocabulary
    :param first_referent: Number given to the first referent the sentence introduces
    :return: The single reading of the sentence
    :raises EmptyInput: If there are no tokens
    :raises UnknownWord: If a word is not in the lexicon
    :raises ParseError: If no grammar rule covers the sentence
    :raises AmbiguitySet: If the sentence has several readings
    """
    if not tokens:
        raise EmptyInput()
    check_known_words(tokens, lexicon)

    grammar = Grammar(tokens, lexicon)
    trees = list(dict.fromkeys(grammar.parses()))
    if not trees:
        index = min(grammar.furthest, len(tokens) - 1)
        token = tokens[grammar.furthest].text if grammar.furthest < len(tokens) else None
        raise ParseError(tokens[index].position[:1] + (grammar.furthest,), grammar.expected, token)

    rejections = [_rejection(tree, tokens) for tree in trees]
    accepted = [tree for tree, rejection in zip(trees, rejections) if rejection is None]
    if not accepted:
        raise next(rejection for rejection in rejections if rejection is not None)

    readings: dict[str, ParseResult] = {}
    for tree in accepted:
        result = build_increment(tree, tokens, first_referent)
        readings.setdefault(str(result.drs_increment), result)
    if len(readings) > 1:
        logger.debug("%d readings for: %s", len(readings), tokens)
        raise AmbiguitySet(list(readings.values()))
    return next(iter(readings.values()))


def _rejection(tree: SyntaxNode, tokens: list[Token]) -> Optional[ParseError]:
    """
    Constraints checked on complete parses: determiners are required and a
    sentence holds at most one 'every' or 'if', never under a negation.
    """
    for node in tree.walk():
        if node.label == 'np' and node.kind == 'bare':
            noun = node.child('nbar').child('noun')
            return ParseError(tokens[noun.start].position, ('determiner',), noun.text, "determiner required")

    quantifiers = []

    def visit(node: SyntaxNode, negated: bool) -> Optional[ParseError]:
        if node.label == 'cond' or (node.label == 'np' and node.kind == 'univ'):
            quantifiers.append(node)
            if len(quantifiers) > 1:
                return ParseError(
                    tokens[node.start].position, (), tokens[node.start].text,
                    "only one 'every' or 'if' per sentence"
                )
            if negated:
                return ParseError(
                    tokens[node.start].position, (), tokens[node.start].text, "'every' cannot be negated"
                )
        for child in node.children:
            error = visit(child, negated or node.negated)
            if error:
                return error
        return None

    return visit(tree, False)
