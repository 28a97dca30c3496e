# -*- coding: utf-8 -*-
"""
Fixed inflection table: noun plurals, verb third singular and present participles.
"""
import re
from typing import Optional

import inflect

_engine = inflect.engine()

_IRREGULAR_THIRD_SINGULAR = {'have': 'has', 'do': 'does', 'be': 'is', 'go': 'goes'}


def _inflect_last_word(surface: str, transform) -> str:
    words = surface.split(' ')
    words[-1] = transform(words[-1])
    return ' '.join(words)


def plural(surface: str) -> str:
    """
    Plural of a (possibly multiword) noun; only the head word is inflected.
    """
    return _inflect_last_word(surface, _engine.plural_noun)


def third_singular(base: str) -> str:
    """
    Third person singular present of a base verb form.
    """
    if base in _IRREGULAR_THIRD_SINGULAR:
        return _IRREGULAR_THIRD_SINGULAR[base]
    if re.search(r"(s|x|z|ch|sh)$", base):
        return base + 'es'
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + 'ies'
    return base + 's'


def present_participle(base: str) -> str:
    return _engine.present_participle(base)


def base_verb(form: str) -> str:
    """
    Base form of a third singular verb form ('calculates' -> 'calculate').
    """
    for base, inflected in _IRREGULAR_THIRD_SINGULAR.items():
        if inflected == form:
            return base
    return _engine.plural_verb(form)


def singular(noun: str) -> Optional[str]:
    """
    Singular of a plural noun, None if the word is not a plural.
    """
    result = _engine.singular_noun(noun)
    return result or None


def with_article(phrase: str) -> str:
    """
    Phrase preceded by 'a' or 'an' as pronounced: 'a user interface', 'an account'.
    """
    return _engine.a(phrase)
