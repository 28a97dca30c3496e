# -*- coding: utf-8 -*-
import re
from dataclasses import dataclass

from spec_system.exceptions import EmptyInput

_TOKEN = re.compile(
    r"(?P<number>\d+(?:\.\d+)?)"
    r"|(?P<word>[^\W\d_][\w]*(?:-[\w]+)*)"
    r"|(?P<punct>\S)"
)
TERMINATORS = ('.', '?')


@dataclass(frozen=True)
class Token:
    """
    One token of the input.

    :param text: Token as written; lookups use the case-folded 'norm'.
    :param kind: word, number or punct.
    :param position: (sentence index, token index within the sentence).
    """
    text: str
    kind: str
    position: tuple[int, int]

    @property
    def norm(self) -> str:
        return self.text.lower() if self.kind == 'word' else self.text

    @property
    def index(self) -> int:
        return self.position[1]


def tokenize(text: str) -> list[list[Token]]:
    """
    Split text into sentences of tokens.

    A sentence ends after '.' or '?'; trailing text without a terminator forms
    a last sentence of its own. Hyphenated words are single tokens.

    :raises EmptyInput: If the text holds no tokens
    """
    sentences: list[list[Token]] = []
    current: list[Token] = []
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        current.append(Token(match.group(kind), kind, (len(sentences), len(current))))
        if kind == 'punct' and match.group(kind) in TERMINATORS:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    if not sentences:
        raise EmptyInput()
    return sentences


def sentence_text(tokens: list[Token]) -> str:
    """
    Sentence text rebuilt from tokens, punctuation attached to the previous word.
    """
    text = ''
    for token in tokens:
        if token.kind == 'punct' and text:
            text += token.text
        else:
            text += (' ' if text else '') + token.text
    return text
