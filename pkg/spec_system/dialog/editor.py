# -*- coding: utf-8 -*-
from typing import Optional

from spec_system.executor import IoChannel
from spec_system.features import FeatureStructure
from spec_system.lexicon import OPEN_CATEGORIES, VERB_KINDS, LexEntry, Lexicon, inflection, make_pred

_GENDER_DEFAULTS = {'proper-noun': 'n', 'noun': 'n'}


class LexiconEditor:
    """
    Asks the user how to classify a word missing from the lexicon.

    Nouns are stored singular and verbs in their base form, so 'cards' and
    'checks' become the entries 'card' and 'check'. An empty answer or
    'skip' leaves the word unknown.
    """

    def __init__(self, io: IoChannel):
        self.io = io

    def __call__(self, word: str, lexicon: Lexicon) -> Optional[LexEntry]:
        category = self.io.ask(f"'{word}' is not in the lexicon: category? ({', '.join(OPEN_CATEGORIES)}, skip)")
        category = category.lower()
        if category not in OPEN_CATEGORIES:
            return None

        if category == 'proper-noun':
            surface = word
        elif category == 'noun':
            surface = inflection.singular(word.lower()) or word.lower()
        elif category == 'verb':
            surface = inflection.base_verb(word.lower())
        else:
            surface = word.lower()

        features = {}
        verb_kind = None
        if category in _GENDER_DEFAULTS:
            gender = self.io.ask(f"gender of '{surface}'? (m, f, n, m,f)") or _GENDER_DEFAULTS[category]
            features = {'gender': frozenset(atom.strip() for atom in gender.split(',')), 'number': 'sg'}
        if category == 'verb':
            verb_kind = self.io.ask(f"kind of '{surface}'? ({', '.join(VERB_KINDS[:2])})") or 'event'
            if verb_kind not in VERB_KINDS[:2]:
                return None

        try:
            return LexEntry(
                surface=surface,
                category=category,
                lemma=surface.lower(),
                pred=make_pred(surface),
                features=FeatureStructure(features),
                verb_kind=verb_kind
            )
        except ValueError:
            return None
