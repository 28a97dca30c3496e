# -*- coding: utf-8 -*-
import re
from dataclasses import dataclass, field
from typing import Optional

from spec_system.features import FeatureStructure

CATEGORIES = (
    'noun', 'proper-noun', 'verb', 'adjective', 'determiner', 'preposition', 'pronoun',
    'conjunction', 'comparative', 'query-word', 'negation', 'auxiliary'
)
OPEN_CATEGORIES = ('noun', 'proper-noun', 'verb', 'adjective')
VERB_KINDS = ('event', 'state', 'copula')
GENDERS = frozenset({'m', 'f', 'n'})
NUMBERS = frozenset({'sg', 'pl'})


def make_pred(surface: str) -> str:
    """
    Relation name of a grapheme: lower case, spaces and hyphens mapped to underscores.

    'money dispenser' -> 'money_dispenser', 'trap-door-algorithm' -> 'trap_door_algorithm'
    """
    return re.sub(r"[\s\-]+", "_", surface.strip().lower())


@dataclass(frozen=True)
class LexEntry:
    """
    One lexical entry.

    :param surface: Written form, multiword surfaces separated by single spaces.
    :param category: One of CATEGORIES.
    :param lemma: Canonical form.
    :param pred: Relation name used in the logic output.
    :param features: Agreement and form features.
    :param verb_kind: event, state or copula for verbs, None otherwise.
    """
    surface: str
    category: str
    lemma: str
    pred: str
    features: FeatureStructure = field(default_factory=FeatureStructure)
    verb_kind: Optional[str] = None

    def __post_init__(self):
        gender = self.features.get('gender')
        if isinstance(gender, str):
            object.__setattr__(self, 'features', FeatureStructure({**self.features, 'gender': {gender}}))

        if not self.surface.strip():
            raise ValueError("surface must not be empty")
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category '{self.category}'")
        if self.category in OPEN_CATEGORIES and not self.pred:
            raise ValueError(f"{self.category} '{self.surface}' needs a pred")
        if self.category == 'verb':
            if self.verb_kind not in VERB_KINDS:
                raise ValueError(f"verb '{self.surface}' needs verb_kind in {', '.join(VERB_KINDS)}")
        elif self.verb_kind is not None:
            raise ValueError(f"verb_kind is only allowed for verbs, not {self.category}")

        gender = self.features.get('gender')
        if gender is not None:
            atoms = {gender} if isinstance(gender, str) else set(gender)
            if not atoms or not atoms <= GENDERS:
                raise ValueError(f"gender of '{self.surface}' must be a non-empty subset of m,f,n")
        number = self.features.get('number')
        if number is not None and ({number} if isinstance(number, str) else set(number)) - NUMBERS:
            raise ValueError(f"number of '{self.surface}' must be sg or pl")

    @property
    def key(self) -> tuple[str, str]:
        return self.surface.lower(), self.category

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self.surface.lower().split())

    @property
    def is_open_class(self) -> bool:
        return self.category in OPEN_CATEGORIES

    def with_features(self, surface: str, **features) -> "LexEntry":
        """
        Variant of this entry for an inflected form; given features replace the entry's own.
        """
        merged = dict(self.features.items())
        merged.update(features)
        return LexEntry(
            surface=surface,
            category=self.category,
            lemma=self.lemma,
            pred=self.pred,
            features=FeatureStructure(merged),
            verb_kind=self.verb_kind
        )
