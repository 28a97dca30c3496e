# -*- coding: utf-8 -*-
import logging
from typing import Iterable, Optional, Sequence

from spec_system.exceptions import DuplicateEntry

from . import inflection
from .closed_class import CLOSED_CLASS, THIRD_SINGULAR
from .lex_entry import LexEntry

logger = logging.getLogger(__name__)


class Lexicon:
    """
    Immutable snapshot of the application vocabulary.

    Holds the open-class entries of the loaded file; closed-class words and the
    inflected forms of nouns and verbs are indexed alongside them.

    :param entries: Open-class entries.
    """

    def __init__(self, entries: Iterable[LexEntry] = ()):
        self._entries: dict[tuple[str, str], LexEntry] = {}
        for entry in entries:
            self._check_duplicate(entry)
            self._entries.setdefault(entry.key, entry)
        self._index = self._build_index()
        self._max_words = max((len(words) for words in self._index), default=1)
        self._graphemes = {}
        for entry in self._entries.values():
            self._graphemes.setdefault(entry.pred, entry.surface)
        for entry in CLOSED_CLASS:
            if entry.pred:
                self._graphemes.setdefault(entry.pred, entry.lemma)

    def __eq__(self, other) -> bool:
        if isinstance(other, Lexicon):
            return set(self._entries.values()) == set(other._entries.values())
        return NotImplemented

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, surface: str) -> bool:
        return bool(self.lookup(surface))

    @property
    def entries(self) -> tuple[LexEntry, ...]:
        """Open-class entries in insertion order."""
        return tuple(self._entries.values())

    def lookup(self, word: str) -> list[LexEntry]:
        """
        All entries (inflected variants included) whose surface is exactly 'word'.

        :param word: Single or multiword surface, case-insensitive
        :return: Matching entries; empty if the word is unknown
        """
        return list(self._index.get(tuple(word.lower().split()), ()))

    def longest_match(self, words: Sequence[str], start: int) -> tuple[list[LexEntry], int]:
        """
        Entries of the longest known surface beginning at words[start].

        :return: (entries, number of words covered); ([], 0) for an unknown word
        """
        lowered = [word.lower() for word in words]
        for length in range(min(self._max_words, len(lowered) - start), 0, -1):
            entries = self._index.get(tuple(lowered[start:start + length]))
            if entries:
                return list(entries), length
        return [], 0

    def add_entry(self, entry: LexEntry) -> "Lexicon":
        """
        New snapshot containing the entry.

        :raises DuplicateEntry: If (surface, category) is present with different features
        """
        self._check_duplicate(entry)
        if entry.key in self._entries:
            return self
        logger.debug("lexicon entry added: %s", entry)
        return Lexicon((*self._entries.values(), entry))

    def grapheme(self, pred: str) -> Optional[str]:
        """
        Surface form of a relation name, None if no entry produces it.
        """
        return self._graphemes.get(pred)

    def entry_for_pred(self, pred: str, category: Optional[str] = None) -> Optional[LexEntry]:
        for entry in (*self._entries.values(), *CLOSED_CLASS):
            if entry.pred == pred and (category is None or entry.category == category):
                return entry
        return None

    def _check_duplicate(self, entry: LexEntry) -> None:
        existing = self._entries.get(entry.key)
        if existing is None:
            existing = next((closed for closed in CLOSED_CLASS if closed.key == entry.key), None)
        if existing is not None and existing != entry:
            raise DuplicateEntry(entry.surface, entry.category)

    def _build_index(self) -> dict[tuple[str, ...], tuple[LexEntry, ...]]:
        index: dict[tuple[str, ...], list[LexEntry]] = {}

        def add(entry: LexEntry) -> None:
            variants = index.setdefault(entry.words, [])
            if entry not in variants:
                variants.append(entry)

        for entry in CLOSED_CLASS:
            add(entry)
        for entry in self._entries.values():
            for variant in _inflected_variants(entry):
                add(variant)
        return {words: tuple(entries) for words, entries in index.items()}


def _inflected_variants(entry: LexEntry) -> list[LexEntry]:
    if entry.category == 'noun':
        variants = [entry.with_features(entry.surface, number=entry.features.get('number', 'sg'))]
        if variants[0].features['number'] == 'sg':
            variants.append(entry.with_features(inflection.plural(entry.surface), number='pl'))
        return variants
    if entry.category == 'verb':
        return [
            entry.with_features(entry.surface, form='base'),
            entry.with_features(inflection.third_singular(entry.surface), form='finite', agr=THIRD_SINGULAR),
            entry.with_features(inflection.present_participle(entry.surface), form='ing'),
        ]
    return [entry]
