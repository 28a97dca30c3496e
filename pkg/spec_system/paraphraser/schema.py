# -*- coding: utf-8 -*-
"""
Paraphrase schemata: literal patterns over preterminal relation names and a
sentence template.

File format, one schema per block::

    named(X, <proper noun>)
    <adjective>(Y)
    <noun>(Y)
    is(X, Y)
    =>
    <proper noun>g is a/an <adjective>g <noun>g.

Blocks are separated by blank lines; '#' starts a comment line. A slot
<category> stands for a relation name (predicate position) or a lemma
(argument position) of that lexical category; a trailing digit tells two
slots of one category apart, as in <proper noun2>. In templates the suffix
'g' inserts the grapheme, 'gs' the third singular form of a verb grapheme,
and a/an is resolved against the following word.
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from spec_system.exceptions import SchemaFormatError

_SLOT = re.compile(r"<([a-z][a-z ]*?)(\d*)>")
TEMPLATE_SLOT = re.compile(r"<([a-z][a-z ]*?\d*)>(gs|g)")
_LITERAL = re.compile(r"^(<[a-z][a-z ]*\d*>|[a-z][a-z0-9_]*)\((.*)\)$")

SLOT_CATEGORIES = {
    'noun': 'noun',
    'proper noun': 'proper-noun',
    'adjective': 'adjective',
    'verb': 'verb',
}


@dataclass(frozen=True)
class Slot:
    """
    :param name: Slot text between the brackets, e.g. 'proper noun2'.
    :param category: Lexicon category the slot ranges over.
    """
    name: str
    category: str

    def __str__(self) -> str:
        return f"<{self.name}>"


PatternArgument = Union[str, Slot]


@dataclass(frozen=True)
class PatternLiteral:
    """
    :param pred: Fixed relation name or a slot over relation names.
    :param args: Schema variables (upper case names) or slots over lemmas.
    """
    pred: Union[str, Slot]
    args: tuple[PatternArgument, ...]

    def __str__(self) -> str:
        return f"{self.pred}({', '.join(str(arg) for arg in self.args)})"

    @property
    def slots(self) -> list[Slot]:
        return [part for part in (self.pred, *self.args) if isinstance(part, Slot)]


@dataclass(frozen=True)
class ParaphraseSchema:
    pattern: tuple[PatternLiteral, ...]
    template: str

    def __post_init__(self):
        if not self.pattern:
            raise ValueError("schema pattern is empty")
        bound = {slot.name for literal in self.pattern for slot in literal.slots}
        for name, _ in TEMPLATE_SLOT.findall(self.template):
            if name not in bound:
                raise ValueError(f"template slot <{name}> does not occur in the pattern")

    def __str__(self) -> str:
        return '\n'.join((*(str(literal) for literal in self.pattern), '=>', self.template))


def _slot(text: str, line: int) -> Slot:
    match = _SLOT.fullmatch(text)
    if not match or match.group(1) not in SLOT_CATEGORIES:
        raise SchemaFormatError(line, f"unknown slot {text}")
    return Slot(match.group(1) + match.group(2), SLOT_CATEGORIES[match.group(1)])


def parse_pattern_literal(text: str, line: int = 0) -> PatternLiteral:
    match = _LITERAL.match(text.strip())
    if not match:
        raise SchemaFormatError(line, f"malformed pattern literal '{text.strip()}'")
    pred_text, args_text = match.groups()
    pred = _slot(pred_text, line) if pred_text.startswith('<') else pred_text
    args: list[PatternArgument] = []
    for arg in (part.strip() for part in args_text.split(',')):
        if arg.startswith('<'):
            args.append(_slot(arg, line))
        elif re.fullmatch(r"[A-Z][A-Za-z0-9_]*", arg):
            args.append(arg)
        else:
            raise SchemaFormatError(line, f"argument '{arg}' is neither a variable nor a slot")
    return PatternLiteral(pred, tuple(args))


def parse_schemata(text: str) -> list[ParaphraseSchema]:
    """
    Read schemata in file format.

    :raises SchemaFormatError: On a malformed literal, a block without '=>' or template,
        or a template slot missing from the pattern
    """
    schemata: list[ParaphraseSchema] = []
    pattern: list[PatternLiteral] = []
    template_next, start = False, 0

    def close(line_number: int) -> None:
        if template_next:
            raise SchemaFormatError(line_number, "'=>' without a template")
        if pattern:
            raise SchemaFormatError(line_number, "pattern without '=>' and template")

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith('#'):
            continue
        if not line:
            close(line_number)
            continue
        if line == '=>':
            if not pattern:
                raise SchemaFormatError(line_number, "'=>' without a pattern")
            template_next = True
        elif template_next:
            try:
                schemata.append(ParaphraseSchema(tuple(pattern), line))
            except ValueError as e:
                raise SchemaFormatError(start, str(e))
            pattern, template_next = [], False
        else:
            if not pattern:
                start = line_number
            pattern.append(parse_pattern_literal(line, line_number))
    close(len(text.splitlines()) + 1)
    return schemata


def load_schemata(path: str | Path) -> list[ParaphraseSchema]:
    with open(path, 'r', encoding='utf-8') as file:
        return parse_schemata(file.read())
