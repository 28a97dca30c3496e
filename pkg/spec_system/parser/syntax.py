# -*- coding: utf-8 -*-
from dataclasses import dataclass, field
from typing import Iterator, Optional

from spec_system.drs import Atomic, BoxPath, Drs, Referent
from spec_system.features import FeatureStructure
from spec_system.lexicon import LexEntry

from .tokens import Token, sentence_text


@dataclass(frozen=True)
class SyntaxNode:
    """
    Node of a syntax tree.

    Leaves carry the lexicon entry and the covered text. Inner nodes use
    'kind' for the construction (np: indef/def/univ/name/pronoun/number/wh/bare,
    vp: copula_np/copula_adj/comparative/progressive/verb, rel: subject/object)
    and 'ops' for the connectors of a coordination.
    """
    label: str
    features: FeatureStructure = field(default_factory=FeatureStructure)
    children: tuple["SyntaxNode", ...] = ()
    entry: Optional[LexEntry] = None
    text: str = ''
    start: int = 0
    end: int = 0
    kind: str = ''
    negated: bool = False
    ops: tuple[str, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.entry is not None or (not self.children and bool(self.text))

    def child(self, label: str) -> Optional["SyntaxNode"]:
        return next((node for node in self.children if node.label == label), None)

    def leaves(self) -> Iterator["SyntaxNode"]:
        if self.is_leaf:
            yield self
        for node in self.children:
            yield from node.leaves()

    def walk(self) -> Iterator["SyntaxNode"]:
        yield self
        for node in self.children:
            yield from node.walk()

    def render(self) -> str:
        """
        Bracketed tree, e.g. (clause (np:name SimpleMat) (vp:verb (verb checks) ...)).
        """
        label = f"{self.label}:{self.kind}" if self.kind else self.label
        if self.negated:
            label += ':not'
        if self.is_leaf:
            return f"({label} {self.text})"
        return f"({label} {' '.join(node.render() for node in self.children)})"


@dataclass(frozen=True)
class Placeholder:
    """
    Anaphoric noun phrase left for the discourse handler.

    :param kind: pronoun, definite or name.
    :param pred: Noun pred of a definite, lemma of a name, pronoun text otherwise.
    """
    referent: Referent
    kind: str
    path: BoxPath
    position: tuple[int, int]
    text: str
    gender: frozenset = frozenset()
    number: str = 'sg'
    pred: str = ''
    adjectives: tuple[str, ...] = ()


@dataclass(frozen=True)
class Indefinite:
    referent: Referent
    path: BoxPath
    position: tuple[int, int]
    text: str


@dataclass(frozen=True)
class VerbEvent:
    """
    Verb condition of a sentence with its eventuality information.

    :param kind: event or state.
    :param aspect: simple or progressive.
    :param slot: Order of the conjunct in an and-then list; plain 'and' shares a slot.
    """
    condition: Atomic
    kind: str
    aspect: str
    slot: int
    path: BoxPath
    negated: bool = False


@dataclass(frozen=True)
class ParseResult:
    """
    Outcome of parsing one sentence.

    :param mood: declarative, yes-no-query or wh-query.
    :param eventuality_hint: event, state or none.
    :param aspect: simple or progressive.
    :param next_referent: First referent number not used by the increment.
    """
    tree: SyntaxNode
    drs_increment: Drs
    mood: str
    tokens: tuple[Token, ...]
    eventuality_hint: str = 'none'
    aspect: str = 'simple'
    placeholders: tuple[Placeholder, ...] = ()
    names: tuple[Placeholder, ...] = ()
    indefinites: tuple[Indefinite, ...] = ()
    wh_vars: tuple[tuple[Referent, str], ...] = ()
    verb_events: tuple[VerbEvent, ...] = ()
    next_referent: int = 1

    @property
    def text(self) -> str:
        return sentence_text(list(self.tokens))

    @property
    def sentence_index(self) -> int:
        return self.tokens[0].position[0] if self.tokens else 0

    @property
    def is_query(self) -> bool:
        return self.mood != 'declarative'


def reading_paraphrase(parse: ParseResult) -> str:
    """
    The sentence with the constituents that distinguish readings bracketed:
    nested coordinations and noun phrases carrying a relative clause.
    """
    return _join(_reading_parts(parse.tree, top=True))


def _reading_parts(node: SyntaxNode, top: bool = False) -> list[str]:
    if node.is_leaf:
        return [node.text]
    parts = []
    for child in node.children:
        nested = child.label in ('coord', 'vpc') and node.label in ('coord', 'vpc')
        has_relative = child.label == 'np' and any(n.label == 'rel' for n in child.walk())
        inner = _reading_parts(child)
        parts.extend(['[' + _join(inner) + ']'] if nested or has_relative else inner)
    return parts


def _join(parts: list[str]) -> str:
    text = ''
    for part in parts:
        if part in ('.', '?', ',') and text:
            text += part
        else:
            text += (' ' if text else '') + part
    return text
