# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Optional

from spec_system.config import DialogConfig
from spec_system.discourse import Resolution, resolve
from spec_system.drs import Drs, Gender, equivalences, iter_boxes, render_box, render_term, simplify
from spec_system.exceptions import AmbiguitySet, SpecSystemException, UnknownWord
from spec_system.executor import (
    ConsoleIo, IoChannel, ScriptedIo, Interfaces, build_timeline, enter_card, run
)
from spec_system.inference import DEFAULT_DEPTH_BOUND, Answer, solve
from spec_system.knowledge_base import AssimilationReport, KnowledgeBase, load_kb, save_kb
from spec_system.lexicon import LexEntry, Lexicon, format_entry_line, load_lexicon, parse_entry_line, save_lexicon
from spec_system.paraphraser import (
    ParaphraseSchema, answer_sentence, feedback_sentence, load_schemata, paraphrase_kb
)
from spec_system.parser import ParseResult, Token, parse_sentence, reading_paraphrase, tokenize
from spec_system.translator import Const, Query, Term, Translation, Var, translate_assertion, translate_query

logger = logging.getLogger(__name__)

ALL_GENDERS = frozenset({'m', 'f', 'n'})

ReadingChooser = Callable[[list[ParseResult]], Optional[int]]
WordEditor = Callable[[str, Lexicon], Optional[LexEntry]]

HELP = (
    "Sentences ending with '.' are asserted, sentences ending with '?' are questions.",
    ":kb [pred]               list the knowledge base",
    ":drs                     show the discourse representation",
    ":paraphrase              paraphrase the knowledge base",
    ":tree                    syntax tree of the last sentence",
    ":scenario <name> / :end  record scenario sentences without asserting them",
    ":run <name>              execute a scenario",
    ":lexicon add <line>      add a lexicon entry (category|surface|lemma|pred|features)",
    ":lexicon list            list the lexicon",
    ":lexicon save <path>     write the lexicon file",
    ":save <path> / :load <path>  write or read the knowledge base",
    ":depth <n>               set the inference depth bound",
    ":choose <n>              reading to take when the next sentence is ambiguous",
    ":quit                    leave the dialog",
)


@dataclass(frozen=True)
class Message:
    """
    :param level: feedback, answer, info, listing, trace, warning or error.
    """
    level: str
    text: str


@dataclass
class Outcome:
    """
    Result of one input line.

    :param status: accepted, redundant, answered, scenario, command, skipped, rejected or quit.
    :param clauses: Number of clauses added to the knowledge base.
    """
    status: str
    messages: list[Message] = field(default_factory=list)
    clauses: int = 0

    @property
    def rejected(self) -> bool:
        return self.status == 'rejected'

    @property
    def output(self) -> str:
        return ' | '.join(message.text for message in self.messages if message.level not in ('trace', 'listing'))

    def add(self, level: str, text: str) -> "Outcome":
        self.messages.append(Message(level, text))
        return self


@dataclass
class Scenario:
    """
    Sentences resolved against the discourse but never asserted.
    """
    name: str
    discourse: Drs
    next_referent: int
    parses: list[ParseResult] = field(default_factory=list)


class Session:
    """
    State of one dialog: lexicon, discourse, knowledge base and the referent
    to constant map tying them together. The interactive loop and batch runs
    both feed lines to handle().
    """

    def __init__(
            self,
            lexicon: Lexicon,
            schemata: list[ParaphraseSchema],
            kb: Optional[KnowledgeBase] = None,
            io: Optional[IoChannel] = None,
            depth_bound: int = DEFAULT_DEPTH_BOUND,
            trace: bool = False,
            choose: Optional[ReadingChooser] = None,
            edit_word: Optional[WordEditor] = None
    ):
        self.lexicon = lexicon
        self.schemata = schemata
        self.kb = kb or KnowledgeBase()
        self.io = io or ScriptedIo()
        self.depth_bound = depth_bound
        self.trace = trace
        self.choose = choose
        self.edit_word = edit_word
        self.interfaces = Interfaces()
        self.discourse = Drs()
        self.constants: dict[int, Const] = {}
        self.next_referent = 1
        self.sentence_index = 0
        self.last_parse: Optional[ParseResult] = None
        self.pending_choice: Optional[int] = None
        self.scenario: Optional[Scenario] = None
        self.scenarios: dict[str, Scenario] = {}
        self._commands: dict[str, Callable[[str], Outcome]] = {
            'kb': self._kb,
            'drs': self._drs,
            'paraphrase': self._paraphrase,
            'tree': self._tree,
            'scenario': self._start_scenario,
            'end': self._end_scenario,
            'run': self._run,
            'lexicon': self._lexicon,
            'save': self._save,
            'load': self._load,
            'depth': self._depth,
            'choose': self._choose,
            'help': self._help,
            'quit': lambda _: Outcome('quit'),
        }

    @classmethod
    def from_config(
            cls,
            config: DialogConfig,
            io: Optional[IoChannel] = None,
            choose: Optional[ReadingChooser] = None,
            edit_word: Optional[WordEditor] = None
    ) -> "Session":
        """
        Session with the files named by the config loaded.

        :raises LexiconFormatError, SchemaFormatError, KbFormatError: On malformed files
        :raises FileNotFoundError: If the lexicon or schema file is missing
        """
        kb = load_kb(config.kb_path) if config.kb_path and Path(config.kb_path).is_file() else None
        if io is None:
            io = ScriptedIo.from_file(config.script_io) if config.script_io else ConsoleIo()
        return cls(
            lexicon=load_lexicon(config.lexicon_path),
            schemata=load_schemata(config.schemata_path),
            kb=kb,
            io=io,
            depth_bound=config.depth_bound,
            trace=config.trace,
            choose=choose,
            edit_word=edit_word
        )

    def handle(self, line: str) -> Outcome:
        """
        Process one input line: a command, or one or more sentences.
        Domain errors become a rejected outcome with a one-line message.
        """
        line = line.strip()
        if not line or line.startswith('#'):
            return Outcome('skipped')
        try:
            if line.startswith(':'):
                return self._command(line[1:])
            return self._sentences(tokenize(line))
        except AmbiguitySet as e:
            outcome = Outcome('rejected').add('error', str(e))
            for number, reading in enumerate(e.readings, start=1):
                outcome.add('info', f"{number}) {reading_paraphrase(reading)}")
            return outcome.add('info', "Use :choose <n> and enter the sentence again")
        except SpecSystemException as e:
            return Outcome('rejected').add('error', str(e))
        except (OSError, ValueError) as e:
            return Outcome('rejected').add('error', str(e))

    def _sentences(self, sentences: list[list[Token]]) -> Outcome:
        combined = Outcome('accepted')
        statuses = []
        for tokens in sentences:
            outcome = self._sentence(tokens)
            statuses.append(outcome.status)
            combined.messages.extend(outcome.messages)
            combined.clauses += outcome.clauses
            if outcome.rejected:
                break
        combined.status = next(
            (status for status in ('rejected', 'accepted', 'answered', 'scenario') if status in statuses),
            statuses[-1]
        )
        return combined

    def _sentence(self, tokens: list[Token]) -> Outcome:
        is_question = tokens[-1].text == '?'
        if self.scenario is not None and not is_question:
            return self._scenario_sentence(tokens)
        if is_question:
            return self._query(tokens)
        return self._assert(tokens)

    def _parse(self, tokens: list[Token], first_referent: int, outcome: Outcome) -> ParseResult:
        choice, self.pending_choice = self.pending_choice, None
        while True:
            try:
                parse = parse_sentence(tokens, self.lexicon, first_referent)
                break
            except UnknownWord as e:
                entry = self.edit_word(e.word, self.lexicon) if self.edit_word else None
                if entry is None:
                    raise
                self.lexicon = self.lexicon.add_entry(entry)
                outcome.add('info', f"Lexicon entry added: {format_entry_line(entry)}")
            except AmbiguitySet as e:
                if choice is None and self.choose is not None:
                    choice = self.choose(e.readings)
                if choice is None or not 1 <= choice <= len(e.readings):
                    raise
                parse = e.readings[choice - 1]
                outcome.add('info', f"Reading {choice}: {reading_paraphrase(parse)}")
                break
        self.last_parse = parse
        if self.trace:
            outcome.add('trace', parse.tree.render())
        return parse

    def _assert(self, tokens: list[Token]) -> Outcome:
        outcome = Outcome('accepted')
        parse = self._parse(tokens, self.next_referent, outcome)
        resolution = resolve(self.discourse, parse)
        increment = simplify(resolution.increment)
        translation = translate_assertion(increment, self.kb.counters, self.constants, sentence=parse.text)
        if self.trace:
            outcome.add('trace', f"DRS: {render_term(resolution.increment)}")
            outcome.add('trace', f"simplified: {render_term(increment)}")
            for clause in translation.clauses:
                outcome.add('trace', str(clause))

        report = self.kb.assimilate(translation.clauses, parse.text, self.sentence_index, translation.counters)
        if not report.accepted:
            outcome.status = 'rejected'
            return outcome.add('error', f"Inconsistent with the knowledge base: {report}")

        self._commit(resolution, parse, translation, report)
        outcome.status = report.status
        outcome.clauses = len(report.added)
        outcome.add('feedback', feedback_sentence(parse, resolution.report))
        for entry in resolution.report:
            if entry.ambiguous:
                outcome.add('warning', f"Ambiguous reference: {entry}")
        if report.status == 'redundant':
            outcome.add('info', "Nothing new: the knowledge base already says this")
        return outcome

    def _commit(
            self, resolution: Resolution, parse: ParseResult, translation: Translation, report: AssimilationReport
    ) -> None:
        aliases = dict(report.aliases)
        constants = {ref_id: aliases.get(constant, constant) for ref_id, constant in translation.constants.items()}
        constants = {
            ref_id: constant for ref_id, constant in constants.items()
            if not (isinstance(constant.value, int) and constant.value > self.kb.counters.const)
        }
        self.discourse = resolution.discourse
        for ref_id, survivor in equivalences(self.discourse).items():
            if ref_id not in constants and survivor in constants:
                constants[ref_id] = constants[survivor]
        self.constants = constants
        self.next_referent = parse.next_referent
        self.sentence_index += 1
        logger.debug("constants: %s", {f"X{ref_id}": str(constant) for ref_id, constant in constants.items()})

    def _query(self, tokens: list[Token]) -> Outcome:
        outcome = Outcome('answered')
        parse = self._parse(tokens, self.next_referent, outcome)
        resolution = resolve(self.discourse, parse)
        increment = simplify(resolution.increment)
        query = translate_query(
            increment,
            [(referent.id, word) for referent, word in parse.wh_vars],
            self.constants,
            equivalences(resolution.increment),
            self.kb.named_constant
        )
        if self.trace:
            outcome.add('trace', "goals: " + ', '.join(str(goal) for goal in query.goals))
        answer = solve(query.goals, self.kb, self.depth_bound)
        if answer.yes and parse.mood == 'wh-query':
            answer = self._agreeing(answer, parse, query, resolution.increment)
        if answer.yes and parse.mood == 'wh-query' and query.wh_vars:
            return outcome.add('answer', answer_sentence(parse, query, answer, self.kb, self.lexicon))
        if answer.status == 'depth_exceeded':
            return outcome.add('answer', f"no answer within depth {self.depth_bound}")
        return outcome.add('answer', answer.status)

    def _agreeing(self, answer: Answer, parse: ParseResult, query: Query, increment: Drs) -> Answer:
        """
        Drop solutions whose individuals disagree in gender with the wh-word.

        A noun the question equates with the wh-word decides the gender
        ("Who is a money dispenser?"); otherwise "who" asks for m or f.
        Individuals the discourse records no gender for always agree.
        """
        asked = _genders(increment)
        classes = equivalences(increment)
        recorded = self._constant_genders()
        kept = answer.substitutions
        for (referent, word), (term, _) in zip(parse.wh_vars, query.wh_vars):
            if word != 'who':
                continue
            members = [ref_id for ref_id, survivor in classes.items()
                       if survivor == classes.get(referent.id, referent.id) and ref_id != referent.id]
            described = [asked[ref_id] for ref_id in members if ref_id in asked]
            gender = frozenset.intersection(*described) if described else asked.get(referent.id, ALL_GENDERS)
            kept = tuple(
                substitution for substitution in kept
                if recorded.get(substitution.get(term), ALL_GENDERS) & gender
            )
        if kept == answer.substitutions:
            return answer
        if kept:
            return replace(answer, substitutions=kept)
        logger.debug("no solution agrees with the wh-word: %s", answer)
        return Answer('no' if answer.complete else 'depth_exceeded', complete=answer.complete)

    def _constant_genders(self) -> dict[Const, frozenset]:
        genders: dict[Const, frozenset] = {}
        for ref_id, gender in _genders(self.discourse).items():
            constant = self.constants.get(ref_id)
            if constant is not None:
                genders[constant] = genders.get(constant, ALL_GENDERS) & gender
        return genders

    def _scenario_sentence(self, tokens: list[Token]) -> Outcome:
        scenario = self.scenario
        outcome = Outcome('scenario')
        parse = self._parse(tokens, scenario.next_referent, outcome)
        resolution = resolve(scenario.discourse, parse)
        scenario.discourse = resolution.discourse
        scenario.next_referent = parse.next_referent
        scenario.parses.append(parse)
        return outcome.add('feedback', feedback_sentence(parse, resolution.report))

    # commands

    def _command(self, text: str) -> Outcome:
        name, _, argument = text.strip().partition(' ')
        command = self._commands.get(name.lower())
        if command is None:
            return Outcome('rejected').add('error', f"Unknown command ':{name}', see :help")
        return command(argument.strip())

    def _kb(self, pred: str) -> Outcome:
        outcome = Outcome('command')
        items = self.kb.list_clauses(pred or None)
        if not items:
            return outcome.add('info', "No clauses" + (f" for '{pred}'" if pred else ''))
        for item in items:
            outcome.add('listing', str(item))
        return outcome

    def _drs(self, _: str) -> Outcome:
        outcome = Outcome('command')
        for line in render_box(simplify(self.discourse)).splitlines():
            outcome.add('listing', line)
        return outcome

    def _paraphrase(self, _: str) -> Outcome:
        outcome = Outcome('command')
        paraphrase = paraphrase_kb((item.clause for item in self.kb), self.schemata, self.lexicon)
        for line in paraphrase.lines():
            outcome.add('listing', line)
        return outcome

    def _tree(self, _: str) -> Outcome:
        if self.last_parse is None:
            return Outcome('rejected').add('error', "No sentence parsed yet")
        return Outcome('command').add('listing', self.last_parse.tree.render())

    def _start_scenario(self, name: str) -> Outcome:
        if not name:
            return Outcome('rejected').add('error', "Usage: :scenario <name>")
        self.scenario = Scenario(name, self.discourse, self.next_referent)
        return Outcome('command').add('info', f"Recording scenario '{name}', finish with :end")

    def _end_scenario(self, _: str) -> Outcome:
        if self.scenario is None:
            return Outcome('rejected').add('error', "No scenario is being recorded")
        scenario, self.scenario = self.scenario, None
        self.scenarios[scenario.name] = scenario
        return Outcome('command').add('info', f"Scenario '{scenario.name}' has {len(scenario.parses)} sentence(s)")

    def _scenario_terms(self, scenario: Scenario) -> dict[int, Term]:
        terms: dict[int, Term] = {}
        for ref_id, survivor in equivalences(scenario.discourse).items():
            constant = self.constants.get(survivor) or self.constants.get(ref_id)
            terms[ref_id] = constant or Var(f"X{survivor}")
        return terms

    def _run(self, name: str) -> Outcome:
        if not name and self.scenarios:
            name = list(self.scenarios)[-1]
        scenario = self.scenarios.get(name)
        if scenario is None:
            return Outcome('rejected').add('error', f"Unknown scenario '{name}'")
        if ('enter', 2) not in self.interfaces:
            self.interfaces.register_interface('enter', 2, enter_card)

        timeline, eventualities = build_timeline(scenario.parses)
        outcome = Outcome('command').add('info', f"Timeline: {timeline}")
        trace = run(
            self.kb, timeline, eventualities, self.io, self.interfaces, self._scenario_terms(scenario), self.depth_bound
        )
        for line in trace.render():
            outcome.add('listing', line)
        if trace.session_facts:
            reply = self.io.ask(f"Add {len(trace.session_facts)} session fact(s) to the knowledge base? (yes/no)")
            if reply.lower() in ('yes', 'y'):
                report = self.kb.assimilate(trace.session_facts, f":run {name}", self.sentence_index)
                outcome.clauses = len(report.added)
                outcome.add('info', f"Session facts: {report}")
        return outcome

    def _lexicon(self, argument: str) -> Outcome:
        action, _, rest = argument.partition(' ')
        outcome = Outcome('command')
        if action == 'list':
            for entry in self.lexicon.entries:
                outcome.add('listing', format_entry_line(entry))
            return outcome
        if action == 'add' and rest:
            entry = parse_entry_line(rest)
            self.lexicon = self.lexicon.add_entry(entry)
            return outcome.add('info', f"Lexicon entry added: {format_entry_line(entry)}")
        if action == 'save' and rest:
            save_lexicon(self.lexicon, rest.strip())
            return outcome.add('info', f"Lexicon saved to {rest.strip()}")
        return Outcome('rejected').add('error', "Usage: :lexicon add <line> | list | save <path>")

    def _save(self, path: str) -> Outcome:
        if not path:
            return Outcome('rejected').add('error', "Usage: :save <path>")
        save_kb(self.kb, path)
        return Outcome('command').add('info', f"{len(self.kb)} clause(s) saved to {path}")

    def _load(self, path: str) -> Outcome:
        if not path:
            return Outcome('rejected').add('error', "Usage: :load <path>")
        self.kb = load_kb(path)
        self.discourse, self.constants, self.next_referent = Drs(), {}, 1
        return Outcome('command').add('info', f"{len(self.kb)} clause(s) loaded from {path}")

    def _depth(self, value: str) -> Outcome:
        if not value.isdigit() or int(value) < 1:
            return Outcome('rejected').add('error', "Usage: :depth <n>, n >= 1")
        self.depth_bound = int(value)
        return Outcome('command').add('info', f"Depth bound set to {self.depth_bound}")

    def _choose(self, value: str) -> Outcome:
        if not value.isdigit() or int(value) < 1:
            return Outcome('rejected').add('error', "Usage: :choose <n>, n >= 1")
        self.pending_choice = int(value)
        return Outcome('command').add('info', f"Reading {value} will be taken for the next ambiguous sentence")

    def _help(self, _: str) -> Outcome:
        outcome = Outcome('command')
        for line in HELP:
            outcome.add('listing', line)
        return outcome


def _genders(k: Drs) -> dict[int, frozenset]:
    genders: dict[int, frozenset] = {}
    for _, box in iter_boxes(k):
        for condition in box.conditions:
            if isinstance(condition, Gender):
                ref_id = condition.referent.id
                genders[ref_id] = genders.get(ref_id, ALL_GENDERS) & condition.genders
    return genders
