# -*- coding: utf-8 -*-
"""
Error hierarchy of the specification system.

Every error raised on user input derives from SpecSystemException so that the
dialog can render it as a one-line message and keep going.
"""
from typing import Optional, Sequence


class SpecSystemException(Exception):
    """Base class for all domain errors."""


class ConfigError(SpecSystemException):
    ...


class EmptyInput(SpecSystemException):

    def __init__(self, message: str = "Input text is empty"):
        super().__init__(message)


class UnknownWord(SpecSystemException):
    """
    Raised when a token has no lexicon entry.

    :param word: The token text.
    :param position: (sentence index, token index) of the token.
    """

    def __init__(self, word: str, position: tuple[int, int]):
        self.word = word
        self.position = position
        super().__init__(f"Unknown word '{word}' at token {position[1] + 1}")


class ParseError(SpecSystemException):
    """
    Raised when no grammar rule applies.

    :param position: (sentence index, token index) of the first token where no rule applies.
    :param expected: Categories that would have allowed the parse to continue.
    :param token: Text of the offending token, or None at the end of input.
    :param reason: Optional explanation for a parse rejected after completion.
    """

    def __init__(
            self,
            position: tuple[int, int],
            expected: Sequence[str] = (),
            token: Optional[str] = None,
            reason: Optional[str] = None
    ):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        self.token = token
        self.reason = reason
        where = f"'{token}'" if token is not None else "end of sentence"
        message = f"No rule applies at token {position[1] + 1} ({where})"
        if reason:
            message += f": {reason}"
        elif self.expected:
            message += f"; expected: {', '.join(self.expected)}"
        super().__init__(message)

    @property
    def token_number(self) -> int:
        """1-based token number within the sentence."""
        return self.position[1] + 1


class AmbiguitySet(SpecSystemException):
    """
    Carries every complete reading of an ambiguous sentence.

    :param readings: ParseResult objects, one per reading.
    """

    def __init__(self, readings: list):
        self.readings = readings
        super().__init__(f"Sentence has {len(readings)} readings")


class DuplicateEntry(SpecSystemException):

    def __init__(self, surface: str, category: str):
        self.surface = surface
        self.category = category
        super().__init__(f"Lexicon already has {category} '{surface}' with different features")


class LexiconFormatError(SpecSystemException):

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"Lexicon line {line}: {message}")


class DuplicateReferent(SpecSystemException):

    def __init__(self, referent_ids: Sequence[int]):
        self.referent_ids = tuple(referent_ids)
        names = ", ".join(f"X{i}" for i in self.referent_ids)
        super().__init__(f"Referents already declared: {names}")


class UnresolvedPronoun(SpecSystemException):

    def __init__(self, anaphor: str, position: tuple[int, int]):
        self.anaphor = anaphor
        self.position = position
        super().__init__(
            f"No accessible antecedent for '{anaphor}' at token {position[1] + 1}"
        )


class UnsupportedDrs(SpecSystemException):

    def __init__(self, shape: str, sentence: Optional[str] = None):
        self.shape = shape
        self.sentence = sentence
        suffix = f" in '{sentence}'" if sentence else ""
        super().__init__(f"Cannot translate {shape}{suffix}")


class UnknownName(SpecSystemException):

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown name '{name}'")


class KbFormatError(SpecSystemException):

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"Knowledge base line {line}: {message}")


class SchemaFormatError(SpecSystemException):

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"Schema file line {line}: {message}")


class InstantiationError(SpecSystemException):

    def __init__(self, pred: str):
        self.pred = pred
        super().__init__(f"Arguments of '{pred}' are not sufficiently instantiated")


class ComparisonTypeError(SpecSystemException, TypeError):

    def __init__(self, pred: str, value: object):
        self.pred = pred
        self.value = value
        super().__init__(f"'{pred}' expects numbers, got {value}")


class DuplicateInterface(SpecSystemException):

    def __init__(self, pred: str, arity: int):
        self.pred = pred
        self.arity = arity
        super().__init__(f"Interface {pred}/{arity} is already registered")


class ExecutionStuck(SpecSystemException):

    def __init__(self, event: str, goal: str):
        self.event = event
        self.goal = goal
        super().__init__(f"Execution stuck at {event}: cannot prove {goal}")


class CyclicTimeline(SpecSystemException):

    def __init__(self, times: Sequence[str] = ()):
        self.times = tuple(times)
        super().__init__(f"Timeline ordering is cyclic: {' -> '.join(self.times)}")
