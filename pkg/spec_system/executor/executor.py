# -*- coding: utf-8 -*-
import logging
import re
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from spec_system.drs import Atomic, Referent
from spec_system.exceptions import DuplicateInterface, ExecutionStuck
from spec_system.inference import DEFAULT_DEPTH_BOUND, solve
from spec_system.knowledge_base import KnowledgeBase
from spec_system.translator import (
    Bindings, Clause, Const, Literal, Num, Term, Var, apply_goal, resolve_term, unify_literals
)

from .io_channel import IoChannel
from .timeline import Eventuality, Timeline

logger = logging.getLogger(__name__)

Handler = Callable[[tuple[Term, ...], IoChannel], Optional[tuple[Term, ...]]]

ENTER_CARD_PROMPT = 'Enter your card'
_DECLINE = ('', 'no', 'n')
_CONFIRM = ('yes', 'y')


def parse_value(text: str) -> Term:
    """
    A value typed by the user: integers name individuals, decimals are numbers,
    anything else is a symbol.
    """
    text = text.strip()
    if re.fullmatch(r"-?\d+", text):
        return Const(int(text))
    if re.fullmatch(r"-?\d+\.\d+", text):
        return Num(float(text))
    return Const(text.lower())


class Interfaces:
    """
    Predicates performed by a handler instead of being proven.

    A handler receives the instantiated arguments and the I/O channel and
    returns the arguments with its outputs filled in, or None on failure.
    """

    def __init__(self):
        self._handlers: dict[tuple[str, int], Handler] = {}

    def __contains__(self, key: tuple[str, int]) -> bool:
        return key in self._handlers

    def __len__(self) -> int:
        return len(self._handlers)

    def register_interface(self, pred: str, arity: int, handler: Handler) -> None:
        """
        :raises DuplicateInterface: If pred/arity already has a handler
        """
        if (pred, arity) in self._handlers:
            raise DuplicateInterface(pred, arity)
        self._handlers[(pred, arity)] = handler
        logger.debug("interface %s/%d registered", pred, arity)

    def get(self, pred: str, arity: int) -> Optional[Handler]:
        return self._handlers.get((pred, arity))


def enter_card(args: tuple[Term, ...], io: IoChannel) -> Optional[tuple[Term, ...]]:
    """
    enter(Customer, Card): the card is read from the user. A card that is
    already known must be the one entered.
    """
    reply = io.ask(ENTER_CARD_PROMPT)
    if reply.lower() in _DECLINE:
        return None
    card = parse_value(reply)
    if isinstance(args[-1], Var):
        return (*args[:-1], card)
    return args if args[-1] == card else None


def default_interfaces() -> Interfaces:
    interfaces = Interfaces()
    interfaces.register_interface('enter', 2, enter_card)
    return interfaces


@dataclass(frozen=True)
class TraceStep:
    """
    :param proofs: (instantiated goal, how it was established: kb, interface or user).
    :param io: Prompts and replies exchanged during the step.
    """
    number: int
    eventuality: Eventuality
    literal: Literal
    proofs: tuple[tuple[str, str], ...] = ()
    io: tuple[tuple[str, str], ...] = ()

    def __str__(self) -> str:
        how = dict(self.proofs).get(str(self.literal), '')
        return f"{self.number}. {self.eventuality.id} {self.literal}" + (f" [{how}]" if how else '')


@dataclass
class ExecutionTrace:
    steps: list[TraceStep] = field(default_factory=list)
    session_facts: list[Clause] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def transcript(self) -> list[tuple[str, str]]:
        return [exchange for step in self.steps for exchange in step.io]

    def render(self) -> list[str]:
        lines = []
        for step in self.steps:
            lines.append(str(step))
            lines.extend(f"   {prompt} > {reply}" for prompt, reply in step.io)
        return lines


class _Run:

    def __init__(
            self,
            kb: KnowledgeBase,
            io: IoChannel,
            interfaces: Interfaces,
            terms: Mapping[int, Term],
            depth_bound: int
    ):
        self.kb = kb
        self.io = io
        self.interfaces = interfaces
        self.terms = terms
        self.depth_bound = depth_bound
        self.bindings: Bindings = {}
        self.session_facts: list[Clause] = []
        self.proven: set[Literal] = set()

    def term(self, arg) -> Term:
        if isinstance(arg, Referent):
            return resolve_term(self.terms.get(arg.id, Var(str(arg))), self.bindings)
        if isinstance(arg, str):
            return Const(arg)
        return Num(arg)

    def literal(self, condition: Atomic) -> Literal:
        return Literal(condition.pred, tuple(self.term(arg) for arg in condition.args))

    def step(self, number: int, eventuality: Eventuality) -> TraceStep:
        """
        An interface performs the verb literal first; the preconditions are
        then proven on the values it supplied.
        """
        asked = len(self.io.transcript)
        proofs: list[tuple[str, str]] = []
        performed = self.perform(eventuality)
        conditions = eventuality.preconditions if performed else (*eventuality.preconditions, eventuality.condition)
        for condition in conditions:
            goal = self.literal(condition)
            if goal in self.proven:
                continue
            how = self.establish(goal, eventuality)
            proven = apply_goal(goal, self.bindings)
            self.proven.add(proven)
            proofs.append((str(proven), how))
        literal = self.literal(eventuality.condition)
        if performed:
            self.proven.add(literal)
            proofs.append((str(literal), 'interface'))
        return TraceStep(number, eventuality, literal, tuple(proofs), tuple(self.io.transcript[asked:]))

    def perform(self, eventuality: Eventuality) -> bool:
        goal = self.literal(eventuality.condition)
        handler = self.interfaces.get(goal.pred, len(goal.args))
        if handler is None or goal in self.proven:
            return False
        outputs = handler(goal.args, self.io)
        if outputs is None or not self.bind(goal, Literal(goal.pred, tuple(outputs))):
            raise ExecutionStuck(eventuality.id, str(goal))
        return True

    def establish(self, goal: Literal, eventuality: Eventuality) -> str:
        answer = solve([goal], self.kb.with_facts(self.session_facts), self.depth_bound)
        if answer.yes:
            self.bindings.update({var: value for var, value in answer.substitutions[0].items()})
            return 'kb'
        return self.ask_user(goal, eventuality)

    def bind(self, goal: Literal, instance: Literal) -> bool:
        bindings = unify_literals(goal, instance, self.bindings)
        if bindings is None:
            return False
        self.bindings = bindings
        return True

    def ask_user(self, goal: Literal, eventuality: Eventuality) -> str:
        """
        Ask for a missing fact: 'yes' confirms a ground goal, comma separated
        values fill its variables in order, 'no' or nothing declines.
        """
        reply = self.io.ask(f"Is {goal} true? enter a value")
        variables = list(dict.fromkeys(goal.vars()))
        if reply.lower() in _DECLINE:
            raise ExecutionStuck(eventuality.id, str(goal))
        if reply.lower() in _CONFIRM:
            if variables:
                raise ExecutionStuck(eventuality.id, str(goal))
        else:
            values = [parse_value(value) for value in reply.split(',')]
            if len(values) != len(variables):
                raise ExecutionStuck(eventuality.id, str(goal))
            self.bindings.update(zip(variables, values))
        self.session_facts.append(Clause(apply_goal(goal, self.bindings)))
        return 'user'


def run(
        kb: KnowledgeBase,
        timeline: Timeline,
        eventualities: Sequence[Eventuality],
        io: IoChannel,
        interfaces: Optional[Interfaces] = None,
        terms: Optional[Mapping[int, Term]] = None,
        depth_bound: int = DEFAULT_DEPTH_BOUND
) -> ExecutionTrace:
    """
    Execute a scenario against a snapshot of the knowledge base.

    Eventualities run in timeline order. A verb literal with an interface
    handler is performed first and the descriptions of its participants are
    proven on the values the handler supplied; otherwise the descriptions
    are proven before the verb literal. A goal without support is put to the user;
    the answers become session facts of the run.

    :param terms: Referent number -> known individual; other referents are run-time variables
    :raises ExecutionStuck: If the user declines to supply a fact
    :raises CyclicTimeline: If the timeline ordering is cyclic
    """
    execution = _Run(kb.snapshot(), io, interfaces or Interfaces(), terms or {}, depth_bound)
    trace = ExecutionTrace(session_facts=execution.session_facts)
    for number, eventuality in enumerate(timeline.linearize(eventualities), start=1):
        step = execution.step(number, eventuality)
        logger.debug("step %s", step)
        trace.steps.append(step)
    return trace
