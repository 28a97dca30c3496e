# -*- coding: utf-8 -*-
"""
Linearised feature structures with unification.

Values are atoms (str), disjunctive atom-sets (non-empty frozenset of str) or
nested structures. An absent feature is unbound and unifies with anything.
Unification runs on nltk.featstruct; failure is signalled by returning None.
"""
import re
from typing import Iterator, Mapping, Optional, Sequence, Union

from nltk import featstruct
from nltk.featstruct import CustomFeatureValue, UnificationFailure

FeatureValue = Union[str, frozenset, "FeatureStructure"]
Path = Union[str, Sequence[str]]

# canonical display order of known atoms; others sort alphabetically after them
_ATOM_ORDER = {atom: index for index, atom in enumerate(
    ('m', 'f', 'n', 'sg', 'pl', 'first', 'second', 'third', 'nom', 'acc')
)}


class FeatureStructure(Mapping):
    """
    Immutable map from feature name to FeatureValue.

    :param features: Initial feature/value pairs; lists, tuples and sets become atom-sets,
        dicts become nested structures.
    """
    __slots__ = ('_features', '_hash')

    def __init__(self, features: Optional[Mapping] = None, **kwargs):
        items = dict(features or {})
        items.update(kwargs)
        self._features = {name: _coerce(value) for name, value in items.items() if value is not None}
        self._hash = None

    def __getitem__(self, name: str) -> FeatureValue:
        return self._features[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._features)

    def __len__(self) -> int:
        return len(self._features)

    def __eq__(self, other) -> bool:
        if isinstance(other, FeatureStructure):
            return self._features == other._features
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._features.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"FeatureStructure({self})"

    def __str__(self) -> str:
        return " .. ".join(f"{name}:{_render(value, nested=True)}" for name, value in self._features.items())

    def unify(self, other: "FeatureStructure") -> Optional["FeatureStructure"]:
        return unify(self, other)

    def get(self, path: Path, default=None):
        value = get(self, path)
        return default if value is None else value

    def put(self, path: Path, value) -> Optional["FeatureStructure"]:
        return put(self, path, value)


def _coerce(value) -> FeatureValue:
    if isinstance(value, FeatureStructure):
        return value
    if isinstance(value, Mapping):
        return FeatureStructure(value)
    if isinstance(value, (set, frozenset, list, tuple)):
        atoms = frozenset(str(atom) for atom in value)
        if not atoms:
            raise ValueError("atom-set values must not be empty")
        return atoms
    return str(value)


def _atom_key(atom: str) -> tuple:
    return (_ATOM_ORDER.get(atom, len(_ATOM_ORDER)), atom)


def _render(value: FeatureValue, nested: bool = False) -> str:
    if isinstance(value, FeatureStructure):
        return f"({value})" if nested else str(value)
    if isinstance(value, frozenset):
        return "{" + ",".join(sorted(value, key=_atom_key)) + "}"
    return value


def render_value(value: Optional[FeatureValue]) -> str:
    """
    Render one value in the linear notation; unbound renders as '_'.
    """
    return "_" if value is None else _render(value, nested=True)


def sorted_atoms(value: Union[str, frozenset]) -> list[str]:
    """
    Atoms of an atom or atom-set in canonical order (m, f, n / sg, pl / ...).
    """
    return [value] if isinstance(value, str) else sorted(value, key=_atom_key)


class AtomSet(CustomFeatureValue):
    """
    Disjunctive atom-set value inside an nltk feature structure; unifies by
    intersection, and with a plain atom by membership.
    """

    def __init__(self, atoms: frozenset):
        self.atoms = frozenset(atoms)

    def unify(self, other):
        if isinstance(other, AtomSet):
            common = self.atoms & other.atoms
            return AtomSet(common) if common else UnificationFailure
        if isinstance(other, str) and other in self.atoms:
            return other
        return UnificationFailure

    def __eq__(self, other) -> bool:
        if isinstance(other, AtomSet):
            return self.atoms == other.atoms
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, AtomSet):
            return sorted_atoms(self.atoms) < sorted_atoms(other.atoms)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return _render(self.atoms)


def _to_featdict(fs: FeatureStructure) -> featstruct.FeatDict:
    return featstruct.FeatDict({name: _to_nltk_value(value) for name, value in fs.items()})


def _to_nltk_value(value: FeatureValue):
    if isinstance(value, FeatureStructure):
        return _to_featdict(value)
    if isinstance(value, frozenset):
        return AtomSet(value)
    return value


def _from_featdict(fd: featstruct.FeatDict) -> FeatureStructure:
    features = {}
    for name, value in fd.items():
        if isinstance(value, featstruct.FeatDict):
            features[name] = _from_featdict(value)
        elif isinstance(value, AtomSet):
            features[name] = value.atoms
        else:
            features[name] = value
    return FeatureStructure(features)


def unify(a: FeatureStructure, b: FeatureStructure) -> Optional[FeatureStructure]:
    """
    Most general structure subsumed by both inputs.

    :param a: First structure
    :param b: Second structure
    :return: The unified structure, or None on a clash
    """
    result = featstruct.unify(_to_featdict(a), _to_featdict(b), rename_vars=False)
    return None if result is None else _from_featdict(result)


def _split(path: Path) -> tuple[str, ...]:
    parts = tuple(path.split('.')) if isinstance(path, str) else tuple(path)
    if not parts or not all(parts):
        raise ValueError(f"Invalid feature path: {path!r}")
    return parts


def get(fs: FeatureStructure, path: Path) -> Optional[FeatureValue]:
    """
    Value at a dotted path ('agr.number') or name sequence; None when unbound.
    """
    current: FeatureValue = fs
    for name in _split(path):
        if not isinstance(current, FeatureStructure) or name not in current:
            return None
        current = current[name]
    return current


def put(fs: FeatureStructure, path: Path, value) -> Optional[FeatureStructure]:
    """
    Store a value along a path, unifying with whatever is already there.

    :return: The new structure, or None if the existing value clashes
    """
    parts = _split(path)
    update: FeatureValue = _coerce(value)
    for name in reversed(parts):
        update = FeatureStructure({name: update})
    return unify(fs, update)


def subsumes(general: FeatureStructure, specific: FeatureStructure) -> bool:
    """
    True if every feature bound in 'general' is bound in 'specific' to a value at least as specific.
    """
    return featstruct.subsumes(_to_featdict(general), _to_featdict(specific))


_TOKEN = re.compile(r"\s*(\.\.|[():{},]|[A-Za-z0-9_\-]+)")


def parse_features(text: str) -> FeatureStructure:
    """
    Read the linear notation, e.g. 'case:nom .. agr:(person:third .. number:sg)'.

    :raises ValueError: On malformed text
    """
    tokens = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match:
            raise ValueError(f"Unexpected character at {position} in {text!r}")
        tokens.append(match.group(1))
        position = match.end()
        while position < len(text) and text[position].isspace():
            position += 1

    structure, rest = _parse_structure(tokens, 0)
    if rest != len(tokens):
        raise ValueError(f"Trailing input in {text!r}")
    return structure


def _parse_structure(tokens: list[str], index: int) -> tuple[FeatureStructure, int]:
    features = {}
    if index >= len(tokens) or tokens[index] == ')':
        return FeatureStructure(), index
    while True:
        name = tokens[index]
        if index + 1 >= len(tokens) or tokens[index + 1] != ':':
            raise ValueError(f"Expected ':' after feature '{name}'")
        if name in features:
            raise ValueError(f"Feature '{name}' appears twice")
        value, index = _parse_value(tokens, index + 2)
        features[name] = value
        if index < len(tokens) and tokens[index] == '..':
            index += 1
            continue
        return FeatureStructure(features), index


def _parse_value(tokens: list[str], index: int) -> tuple[FeatureValue, int]:
    if index >= len(tokens):
        raise ValueError("Missing value")
    token = tokens[index]
    if token == '(':
        nested, index = _parse_structure(tokens, index + 1)
        if index >= len(tokens) or tokens[index] != ')':
            raise ValueError("Missing ')'")
        return nested, index + 1
    if token == '{':
        atoms = []
        index += 1
        while index < len(tokens) and tokens[index] != '}':
            if tokens[index] != ',':
                atoms.append(tokens[index])
            index += 1
        if index >= len(tokens) or not atoms:
            raise ValueError("Malformed atom-set")
        return frozenset(atoms), index + 1
    return token, index + 1
