# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

from spec_system.drs import Atomic, Referent
from spec_system.exceptions import CyclicTimeline
from spec_system.parser import ParseResult
from spec_system.translator import Const, Literal, Num, Term, Var

logger = logging.getLogger(__name__)

SPEECH_TIME = 'N'
BEFORE_SPEECH_TIME = 'before-N'


def referent_term(arg) -> Term:
    if isinstance(arg, Referent):
        return Var(str(arg))
    if isinstance(arg, str):
        return Const(arg)
    return Num(arg)


@dataclass(frozen=True)
class Eventuality:
    """
    An event (culminates at its time) or a state (holds over its time).

    :param id: E<n> for events, S<n> for states.
    :param condition: Verb condition of the sentence, over discourse referents.
    :param preconditions: Descriptive conditions of the participants, proven before the step.
    :param order: Position in the text; breaks ties in the execution order.
    """
    id: str
    kind: str
    condition: Atomic
    time: str
    preconditions: tuple[Atomic, ...] = ()
    order: int = 0
    sentence: str = ''

    @property
    def core(self) -> Literal:
        """Verb literal with the eventuality as first argument, e.g. enter(E1,X1,X2)."""
        return Literal(self.condition.pred, (Const(self.id), *(referent_term(arg) for arg in self.condition.args)))

    def __str__(self) -> str:
        return str(self.core)


@dataclass
class Timeline:
    """
    Temporal facts of a scenario: cul(E,T), at(T,before-N), precedes(T1,T2) and overlaps(T1,T2).
    """
    speech_time: str = SPEECH_TIME
    facts: list[Literal] = field(default_factory=list)

    def add(self, pred: str, *args: str) -> None:
        fact = Literal(pred, tuple(Const(arg) for arg in args))
        if fact not in self.facts:
            self.facts.append(fact)

    def pairs(self, pred: str) -> list[tuple[str, str]]:
        return [(fact.args[0].value, fact.args[1].value) for fact in self.facts if fact.pred == pred]

    @property
    def precedes(self) -> list[tuple[str, str]]:
        return self.pairs('precedes')

    @property
    def overlaps(self) -> list[tuple[str, str]]:
        return self.pairs('overlaps')

    def overlapping(self, a: str, b: str) -> bool:
        return (a, b) in self.overlaps or (b, a) in self.overlaps

    def linearize(self, eventualities: Sequence[Eventuality]) -> list[Eventuality]:
        """
        Execution order: every time after the times that precede it, a state
        right after the event it overlaps, text order among the rest.

        :raises CyclicTimeline: If precedes is cyclic
        """
        by_time = {eventuality.time: eventuality for eventuality in eventualities}
        sorter = TopologicalSorter({time: set() for time in by_time})
        for before, after in self.precedes:
            sorter.add(after, before)
        for event_time, state_time in self.overlaps:
            if by_time.get(event_time) and by_time[event_time].kind == 'event':
                sorter.add(state_time, event_time)
        try:
            sorter.prepare()
        except CycleError as e:
            raise CyclicTimeline(e.args[1] if len(e.args) > 1 else ())

        ordered: list[Eventuality] = []
        ready: set[str] = set()
        while sorter.is_active():
            ready.update(sorter.get_ready())
            time = min(ready, key=lambda t: by_time[t].order if t in by_time else -1)
            ready.remove(time)
            sorter.done(time)
            if time in by_time:
                ordered.append(by_time[time])
        return ordered

    def __str__(self) -> str:
        return ', '.join(str(fact) for fact in self.facts)


def _participants(parse: ParseResult, condition: Atomic) -> tuple[Atomic, ...]:
    ids = {referent.id for referent in condition.referents}
    return tuple(
        candidate for candidate in parse.drs_increment.conditions
        if isinstance(candidate, Atomic) and candidate is not condition and candidate.args
        and isinstance(candidate.args[0], Referent) and candidate.args[0].id in ids
        and (len(candidate.args) == 1 or candidate.pred == 'named')
    )


def build_timeline(parses: Iterable[ParseResult]) -> tuple[Timeline, list[Eventuality]]:
    """
    Eventualities of a scenario and their temporal order.

    Event sentences follow each other in text order (and-then members count
    as separate sentences, plain 'and' members share a position); a
    progressive sentence describes a state overlapping the latest events;
    other states get no ordering.

    :param parses: Parses of the scenario sentences, in text order
    :return: The timeline and the eventualities in text order
    """
    timeline = Timeline()
    eventualities: list[Eventuality] = []
    counts = {'event': 0, 'state': 0, 'time': 0}
    latest_events: list[str] = []

    for parse in parses:
        verb_events = [event for event in parse.verb_events if not event.path and not event.negated]
        for slot in sorted({event.slot for event in verb_events}):
            group_times: list[str] = []
            for verb_event in (event for event in verb_events if event.slot == slot):
                counts[verb_event.kind] += 1
                counts['time'] += 1
                time = f"T{counts['time']}"
                prefix = 'E' if verb_event.kind == 'event' else 'S'
                eventuality = Eventuality(
                    id=f"{prefix}{counts[verb_event.kind]}",
                    kind=verb_event.kind,
                    condition=verb_event.condition,
                    time=time,
                    preconditions=_participants(parse, verb_event.condition),
                    order=len(eventualities),
                    sentence=parse.text
                )
                eventualities.append(eventuality)
                timeline.add('at', time, BEFORE_SPEECH_TIME)
                if verb_event.kind == 'event':
                    timeline.add('cul', eventuality.id, time)
                    for earlier in latest_events:
                        timeline.add('precedes', earlier, time)
                    group_times.append(time)
                elif verb_event.aspect == 'progressive':
                    for earlier in latest_events:
                        timeline.add('overlaps', earlier, time)
            if group_times:
                latest_events = group_times

    logger.debug("timeline: %s", timeline)
    return timeline, eventualities
