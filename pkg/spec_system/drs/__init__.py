# -*- coding: utf-8 -*-
from .conditions import (
    Referent, Argument, Atomic, Equality, Gender, Number, Negation, IfThen, Disjunction, Condition, Drs,
    render_argument
)
from .operations import (
    BoxPath, merge, accessible_referents, simplify, equivalences, sub_drs_at, replace_sub_drs, iter_boxes,
    box_chain, declared_referents, undeclared_referents
)
from .render import render_term, render_box

__all__ = [
    'Referent', 'Argument', 'Atomic', 'Equality', 'Gender', 'Number', 'Negation', 'IfThen', 'Disjunction',
    'Condition', 'Drs', 'render_argument', 'BoxPath', 'merge', 'accessible_referents', 'simplify',
    'equivalences', 'sub_drs_at', 'replace_sub_drs', 'iter_boxes', 'box_chain', 'declared_referents',
    'undeclared_referents', 'render_term', 'render_box'
]
