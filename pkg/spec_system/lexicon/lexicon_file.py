# -*- coding: utf-8 -*-
"""
Lexicon text files.

One entry per line: category|surface|lemma|pred|gender=m,f|number=sg|verb_kind=event
Blank lines and lines starting with '#' are ignored.
"""
from pathlib import Path

from spec_system.exceptions import LexiconFormatError
from spec_system.features import FeatureStructure, sorted_atoms

from .lex_entry import LexEntry
from .lexicon import Lexicon

FEATURE_KEYS = ('gender', 'number', 'person', 'case')


def parse_entry_line(line: str, line_number: int = 1) -> LexEntry:
    """
    Read one entry line.

    :raises LexiconFormatError: If fields are missing or invalid
    """
    fields = [field.strip() for field in line.split('|')]
    if len(fields) < 4 or not all(fields[:4]):
        raise LexiconFormatError(line_number, f"expected category|surface|lemma|pred, got '{line.strip()}'")
    category, surface, lemma, pred = fields[:4]

    features = {}
    verb_kind = None
    for field in fields[4:]:
        if not field:
            continue
        key, separator, value = field.partition('=')
        if not separator or not value:
            raise LexiconFormatError(line_number, f"expected key=value, got '{field}'")
        if key == 'verb_kind':
            verb_kind = value
        elif key in FEATURE_KEYS:
            atoms = [atom.strip() for atom in value.split(',') if atom.strip()]
            features[key] = atoms[0] if len(atoms) == 1 and key != 'gender' else frozenset(atoms)
        else:
            raise LexiconFormatError(line_number, f"unknown feature '{key}'")

    try:
        return LexEntry(
            surface=' '.join(surface.split()),
            category=category,
            lemma=lemma,
            pred=pred,
            features=FeatureStructure(features),
            verb_kind=verb_kind
        )
    except ValueError as e:
        raise LexiconFormatError(line_number, str(e))


def format_entry_line(entry: LexEntry) -> str:
    fields = [entry.category, entry.surface, entry.lemma, entry.pred]
    for key in FEATURE_KEYS:
        value = entry.features.get(key)
        if value is not None:
            fields.append(f"{key}={','.join(sorted_atoms(value))}")
    if entry.verb_kind:
        fields.append(f"verb_kind={entry.verb_kind}")
    return '|'.join(fields)


def load_lexicon(path: str | Path) -> Lexicon:
    """
    Load a lexicon file.

    :param path: Path to the lexicon file
    :return: Lexicon snapshot with the file's open-class entries
    :raises LexiconFormatError: On the first malformed line
    """
    entries = []
    with open(path, 'r', encoding='utf-8') as file:
        for line_number, line in enumerate(file, start=1):
            if not line.strip() or line.lstrip().startswith('#'):
                continue
            entries.append(parse_entry_line(line, line_number))
    return Lexicon(entries)


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as file:
        file.write("# category|surface|lemma|pred|features\n")
        for entry in lexicon.entries:
            file.write(format_entry_line(entry) + '\n')
