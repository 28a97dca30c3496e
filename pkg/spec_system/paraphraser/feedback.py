# -*- coding: utf-8 -*-
from dataclasses import replace

from spec_system.discourse import ResolutionReport
from spec_system.drs import equivalences
from spec_system.inference import Answer
from spec_system.knowledge_base import KnowledgeBase
from spec_system.lexicon import Lexicon, inflection
from spec_system.parser import ParseResult, SyntaxNode
from spec_system.parser.tokens import Token, sentence_text
from spec_system.translator import Const, Num, Query, Skolem, Term, Var

from .paraphraser import grapheme

INDIVIDUAL = '[an individual]'
_ARTICLES = ('a', 'an', 'every', 'the')


def _definite(description: str) -> str:
    first, _, rest = description.partition(' ')
    return f"the {rest}" if rest and first.lower() in _ARTICLES else description


def _in_consequent(path) -> bool:
    return any(role == 'consequent' for _, role in path)


def feedback_sentence(parse: ParseResult, report: ResolutionReport) -> str:
    """
    The sentence as understood: each resolved pronoun is replaced by its
    antecedent in square brackets, and the article of an indefinite that
    depends on a universal reads '[an individual]'.

    'It has a user interface.' -> '[SimpleMat] has a user interface.'
    """
    tokens = list(parse.tokens)
    for entry in report:
        if entry.anaphor.kind == 'pronoun' and entry.antecedent is not None:
            index = entry.anaphor.position[1]
            tokens[index] = replace(tokens[index], text=f"[{_definite(entry.description)}]")

    survivors = equivalences(parse.drs_increment)
    for indefinite in parse.indefinites:
        ref_id = indefinite.referent.id
        if _in_consequent(indefinite.path) and survivors.get(ref_id, ref_id) == ref_id:
            index = indefinite.position[1]
            tokens[index] = replace(tokens[index], text=INDIVIDUAL)
    return sentence_text(tokens)


def describe_term(term: Term, kb: KnowledgeBase, lexicon: Lexicon) -> str:
    """
    Words for an answer value: a name, 'a/an <adjectives> <noun>' for an
    anonymous individual, 'an individual <noun>' for a Skolem term.
    """
    if isinstance(term, Num):
        return str(term).lstrip('#')
    if isinstance(term, Var):
        return 'something'
    if isinstance(term, Const) and isinstance(term.value, str):
        return grapheme(lexicon, term.value)
    if isinstance(term, Skolem):
        nouns = [
            clause.head.pred for clause in kb.clauses
            if len(clause.head.args) == 1 and isinstance(clause.head.args[0], Skolem)
            and clause.head.args[0].index == term.index and lexicon.entry_for_pred(clause.head.pred, 'noun')
        ]
        return f"an individual {grapheme(lexicon, nouns[0])}" if nouns else 'an individual'

    unary: list[str] = []
    for fact in kb.facts:
        head = fact.head
        if head.pred == 'named' and len(head.args) == 2 and head.args[0] == term:
            return grapheme(lexicon, str(head.args[1]))
        if len(head.args) == 1 and head.args[0] == term:
            unary.append(head.pred)
    adjectives = [pred for pred in unary if lexicon.entry_for_pred(pred, 'adjective')]
    nouns = [pred for pred in unary if lexicon.entry_for_pred(pred, 'noun')]
    if not nouns:
        return str(term)
    return inflection.with_article(' '.join(grapheme(lexicon, pred) for pred in (*adjectives, nouns[0])))


def _first_verb(node: SyntaxNode) -> SyntaxNode:
    return next(leaf for leaf in node.leaves() if leaf.entry is not None and leaf.entry.category == 'verb')


def answer_sentence(
        parse: ParseResult,
        query: Query,
        answer: Answer,
        kb: KnowledgeBase,
        lexicon: Lexicon
) -> str:
    """
    Declarative answer to a wh-question, the wh-word replaced by the bracketed answers.

    'Who is a money dispenser?' -> '[SimpleMat] is a money dispenser.'
    'What does SimpleMat check?' -> 'SimpleMat checks [a card].'
    """
    term, _ = query.wh_vars[0]
    values = answer.values(term) if isinstance(term, Var) else [term]
    bracket = '[' + ', '.join(describe_term(value, kb, lexicon) for value in values) + ']'
    tokens = list(parse.tokens)
    body = parse.tree.children[0]
    wh_np = body.children[0]
    period = Token('.', 'punct', tokens[-1].position)

    if body.kind != 'object':
        words = [replace(tokens[wh_np.start], text=bracket), *tokens[wh_np.end:-1], period]
        return sentence_text(words)

    subject, verb_phrase = body.children[1], body.children[2]
    words = list(tokens[subject.start:subject.end])
    if verb_phrase.negated:
        words.append(tokens[wh_np.end])
    verb = _first_verb(verb_phrase)
    for token in tokens[verb_phrase.start:verb_phrase.end]:
        if token.index == verb.start:
            text = token.text if verb_phrase.negated else inflection.third_singular(token.text)
            words.extend((replace(token, text=text), replace(token, text=bracket)))
        else:
            words.append(token)
    words.append(period)
    sentence = sentence_text(words)
    return sentence[:1].upper() + sentence[1:]
