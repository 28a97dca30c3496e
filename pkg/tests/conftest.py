# -*- coding: utf-8 -*-
import random
from pathlib import Path

import pytest

from spec_system.dialog import Session
from spec_system.executor import ScriptedIo
from spec_system.lexicon import Lexicon, load_lexicon
from spec_system.paraphraser import ParaphraseSchema, load_schemata
from spec_system.parser import ParseResult, parse_sentence, tokenize

ROOT = Path(__file__).resolve().parent.parent

ATM_PREFIX = (
    "SimpleMat is a simple money dispenser.",
    "It has a user interface.",
    "Every customer has a card.",
)


def parse_text(text: str, lexicon: Lexicon, first_referent: int = 1) -> ParseResult:
    return parse_sentence(tokenize(text)[0], lexicon, first_referent)


@pytest.fixture(scope='session')
def atm_lexicon() -> Lexicon:
    return load_lexicon(ROOT / 'lexicons' / 'atm_lexicon.txt')


@pytest.fixture(scope='session')
def schemata() -> list[ParaphraseSchema]:
    return load_schemata(ROOT / 'schemata' / 'paraphrase_schemata.txt')


@pytest.fixture(scope='session')
def atm_corpus() -> list[str]:
    lines = (ROOT / 'specs' / 'atm_specification.txt').read_text(encoding='utf-8').splitlines()
    return [line for line in lines if line.strip() and not line.startswith('#')]


@pytest.fixture
def session(atm_lexicon, schemata) -> Session:
    return Session(atm_lexicon, schemata, io=ScriptedIo())


@pytest.fixture
def atm_session(session) -> Session:
    for sentence in ATM_PREFIX:
        assert not session.handle(sentence).rejected
    return session


@pytest.fixture
def parse(atm_lexicon):
    """Parse the first sentence of a text with the ATM lexicon."""
    return lambda text, first_referent=1: parse_text(text, atm_lexicon, first_referent)


_NAMES = ('SimpleMat', 'John', 'Mary')
_NOUNS = ('customer', 'card', 'code', 'bank', 'account', 'receipt', 'money dispenser', 'check code')
_ADJECTIVES = ('valid', 'personal', 'blocked', 'simple', 'known', 'correct')
_VERBS = ('enters', 'checks', 'accepts', 'rejects', 'prints', 'owns', 'knows', 'contains')


def generate_sentences(count: int, seed: int = 0) -> list[str]:
    """
    Random declarative sentences over the ATM vocabulary: names and
    indefinites at the top level, at most one 'every' in subject position.
    """
    rng = random.Random(seed)

    def described(determiner: str) -> str:
        words = [determiner]
        if rng.random() < 0.4:
            words.append(rng.choice(_ADJECTIVES))
        words.append(rng.choice(_NOUNS))
        if determiner == 'a' and words[1][0] in 'aeiou':
            words[0] = 'an'
        return ' '.join(words)

    def term() -> str:
        return rng.choice(_NAMES) if rng.random() < 0.3 else described('a')

    sentences = []
    for _ in range(count):
        subject = described('every') if rng.random() < 0.3 else term()
        shape = rng.random()
        if shape < 0.5:
            predicate = f"{rng.choice(_VERBS)} {term()}"
        elif shape < 0.8:
            predicate = f"is {described('a')}"
        else:
            predicate = f"is {rng.choice(_ADJECTIVES)}"
        sentences.append(f"{subject[0].upper()}{subject[1:]} {predicate}.")
    return sentences


@pytest.fixture(scope='session')
def generated_sentences() -> list[str]:
    return generate_sentences(200, seed=42)
