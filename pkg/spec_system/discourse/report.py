# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Optional

from spec_system.drs import Referent
from spec_system.parser import Placeholder


@dataclass(frozen=True)
class ResolutionEntry:
    """
    How one anaphor was resolved.

    :param kind: pronoun, definite-anaphoric or definite-unique.
    :param description: Text of the antecedent's noun phrase, a name if its class has one.
    :param name: Lemma of the name in the antecedent's class, if any.
    :param competitors: Other agreeing candidates that lost to the closest one.
    """
    anaphor: Placeholder
    antecedent: Optional[Referent]
    kind: str
    description: str = ''
    name: Optional[str] = None
    competitors: int = 0

    @property
    def ambiguous(self) -> bool:
        return self.competitors > 0

    def __str__(self) -> str:
        if self.antecedent is None:
            return f"'{self.anaphor.text}' -> unique reference {self.anaphor.referent}"
        note = f" (closest of {self.competitors + 1})" if self.ambiguous else ''
        return f"'{self.anaphor.text}' -> '{self.description}' {self.antecedent}{note}"


@dataclass(frozen=True)
class ResolutionReport:
    entries: tuple[ResolutionEntry, ...] = ()

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def for_referent(self, referent_id: int) -> Optional[ResolutionEntry]:
        return next((entry for entry in self.entries if entry.anaphor.referent.id == referent_id), None)
