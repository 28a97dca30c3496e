# -*- coding: utf-8 -*-
"""
Function words compiled into every lexicon.
"""
from spec_system.features import FeatureStructure

from .lex_entry import LexEntry

THIRD_SINGULAR = {'person': 'third', 'number': 'sg'}


def _entry(surface: str, category: str, pred: str = '', verb_kind: str = None, **features) -> LexEntry:
    return LexEntry(
        surface=surface,
        category=category,
        lemma=surface,
        pred=pred,
        features=FeatureStructure(features),
        verb_kind=verb_kind
    )


CLOSED_CLASS: tuple[LexEntry, ...] = (
    _entry('a', 'determiner', quant='indef', number='sg'),
    _entry('an', 'determiner', quant='indef', number='sg'),
    _entry('the', 'determiner', quant='def', number='sg'),
    _entry('every', 'determiner', quant='univ', number='sg'),

    _entry('it', 'pronoun', type='personal', gender='n', number='sg', person='third', case={'nom', 'acc'}),
    _entry('he', 'pronoun', type='personal', gender='m', number='sg', person='third', case='nom'),
    _entry('him', 'pronoun', type='personal', gender='m', number='sg', person='third', case='acc'),
    _entry('she', 'pronoun', type='personal', gender='f', number='sg', person='third', case='nom'),
    _entry('her', 'pronoun', type='personal', gender='f', number='sg', person='third', case='acc'),
    _entry('who', 'pronoun', type='relative', gender={'m', 'f'}),
    _entry('which', 'pronoun', type='relative', gender='n'),
    _entry('that', 'pronoun', type='relative', gender={'m', 'f', 'n'}),

    _entry('who', 'query-word', wh='who'),
    _entry('what', 'query-word', wh='what'),

    _entry('and', 'conjunction'),
    _entry('or', 'conjunction'),
    _entry('if', 'conjunction'),
    _entry('then', 'conjunction'),

    _entry('not', 'negation'),

    _entry('does', 'auxiliary', agr=THIRD_SINGULAR),
    _entry('do', 'auxiliary', agr={'number': 'pl'}),

    LexEntry('is', 'verb', 'be', 'be', FeatureStructure(form='finite', agr=THIRD_SINGULAR), 'copula'),
    LexEntry('have', 'verb', 'have', 'have', FeatureStructure(form='base'), 'state'),
    LexEntry('has', 'verb', 'have', 'have', FeatureStructure(form='finite', agr=THIRD_SINGULAR), 'state'),
    LexEntry('having', 'verb', 'have', 'have', FeatureStructure(form='ing'), 'state'),

    _entry('bigger', 'comparative', pred='bigger_than', prep='than'),
    _entry('smaller', 'comparative', pred='smaller_than', prep='than'),
    _entry('equal', 'comparative', pred='equal', prep='to'),

    *(_entry(word, 'preposition') for word in ('than', 'to', 'in', 'into', 'from', 'with', 'for', 'on', 'at', 'of')),
)
