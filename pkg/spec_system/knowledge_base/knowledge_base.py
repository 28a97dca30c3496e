# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

from spec_system.exceptions import KbFormatError
from spec_system.translator import (
    Bindings, Clause, Const, Counters, Goal, NafConjunction, Var, apply_clause, apply_goal, constants_of,
    map_clause_terms, match_goals, reindex_skolems, rename_apart, resolve_term, skolem_indices, unify_literals
)

from .clause_reader import ClauseSyntaxError, read_clause

logger = logging.getLogger(__name__)

SESSION_SOURCE = 'session'


@dataclass(frozen=True)
class StoredClause:
    """
    A clause with the sentence it was translated from.
    """
    clause: Clause
    source: str
    sentence_index: int = 0

    def __str__(self) -> str:
        return f"{self.clause}  % {self.source}"


@dataclass(frozen=True)
class AssimilationReport:
    """
    :param status: accepted, redundant (nothing new) or rejected (inconsistent).
    :param conflicts: (new clause, stored clause) pairs that clash.
    :param aliases: (fresh constant, stored constant) pairs; the sentence described known individuals.
    """
    status: str
    added: tuple[Clause, ...] = ()
    redundant: tuple[Clause, ...] = ()
    conflicts: tuple[tuple[Clause, Clause], ...] = ()
    aliases: tuple[tuple[Const, Const], ...] = ()

    @property
    def accepted(self) -> bool:
        return self.status != 'rejected'

    def __str__(self) -> str:
        if self.status == 'rejected':
            return "rejected: " + '; '.join(f"{new} contradicts {old}" for new, old in self.conflicts)
        text = f"{len(self.added)} clause(s) added"
        if self.redundant:
            text += f", {len(self.redundant)} redundant"
        return text


@dataclass
class KnowledgeBase:
    """
    Ordered clause store with provenance.

    Positive clauses answer queries; negative clauses (negated head) only
    guard consistency. The counters record the last individual constant and
    Skolem index handed out by the translator.
    """
    stored: list[StoredClause] = field(default_factory=list)
    counters: Counters = field(default_factory=Counters)

    def __len__(self) -> int:
        return len(self.stored)

    def __iter__(self) -> Iterator[StoredClause]:
        return iter(self.stored)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return self.stored == other.stored and self.counters == other.counters

    @property
    def clauses(self) -> list[Clause]:
        """Positive clauses in assertion order."""
        return [item.clause for item in self.stored if not item.clause.is_negative]

    @property
    def negative_clauses(self) -> list[Clause]:
        return [item.clause for item in self.stored if item.clause.is_negative]

    @property
    def facts(self) -> list[Clause]:
        return [clause for clause in self.clauses if clause.is_fact]

    def snapshot(self) -> "KnowledgeBase":
        return KnowledgeBase(list(self.stored), self.counters.copy())

    def with_facts(self, facts: Iterable[Clause]) -> "KnowledgeBase":
        """
        Snapshot with extra session facts appended; the knowledge base itself is unchanged.
        """
        snapshot = self.snapshot()
        snapshot.stored.extend(StoredClause(fact, SESSION_SOURCE, -1) for fact in facts)
        return snapshot

    def named_constant(self, name: str) -> Optional[Const]:
        """
        Individual carrying the name in a named/2 fact.
        """
        for clause in self.facts:
            head = clause.head
            if head.pred == 'named' and len(head.args) == 2 and head.args[1] == Const(name):
                return head.args[0]
        return None

    def list_clauses(self, pred: Optional[str] = None) -> list[StoredClause]:
        """
        Stored clauses, optionally only those whose head has the given predicate.
        """
        return [item for item in self.stored if pred is None or item.clause.head.pred == pred]

    def assimilate(
            self,
            clauses: Iterable[Clause],
            source: str,
            sentence_index: int = 0,
            counters: Optional[Counters] = None
    ) -> AssimilationReport:
        """
        Add the clauses of one sentence, skipping redundant ones.

        A clause is redundant if a stored clause (or an earlier one of the same
        sentence) subsumes it, also after renaming its Skolem index to a stored
        one. Facts about individuals the sentence introduces are redundant when
        stored facts already describe known individuals that way. If a new fact
        clashes with a negative clause, or a new negative clause with a fact,
        nothing of the sentence is added.

        :param clauses: Translation of the sentence
        :param source: Sentence text
        :param sentence_index: Position of the sentence in the discourse
        :param counters: Counter state after translation; kept only if the sentence is accepted
        :return: Report of added, redundant and conflicting clauses
        """
        added: list[Clause] = []
        redundant: list[Clause] = []
        for clause in clauses:
            existing = (*(item.clause for item in self.stored), *added)
            if any(_subsumes(old, clause) for old in existing):
                redundant.append(clause)
            else:
                added.append(clause)

        known = self._skolem_redundant(added)
        added = [clause for clause in added if clause not in known]
        described, aliases = self._fresh_redundant(added)
        added = [clause for clause in added if clause not in described]
        redundant.extend((*known, *described))

        conflicts = self._conflicts(added)
        if conflicts:
            report = AssimilationReport('rejected', conflicts=tuple(conflicts))
            logger.debug("%s: %s", source, report)
            return report

        for clause in added:
            self._check_arity(clause)
            self.stored.append(StoredClause(clause, source, sentence_index))
        if counters is not None and added:
            self.counters = Counters(max(self.counters.const, counters.const), max(self.counters.skolem, counters.skolem))
        report = AssimilationReport(
            'accepted' if added else 'redundant', tuple(added), tuple(redundant), aliases=tuple(aliases.items())
        )
        logger.debug("%s: %s", source, report)
        return report

    def _skolem_redundant(self, candidates: list[Clause]) -> list[Clause]:
        """
        Clauses that become redundant when one of their Skolem indices is
        renamed to a stored one; every clause sharing the index must agree.
        """
        stored = [item.clause for item in self.stored]
        stored_indices = sorted({index for clause in stored for index in skolem_indices(clause)})
        redundant: list[Clause] = []
        for index in sorted({index for clause in candidates for index in skolem_indices(clause)}):
            group = [clause for clause in candidates if index in skolem_indices(clause)]
            for target in stored_indices:
                renamed = [reindex_skolems(clause, {index: target}) for clause in group]
                if all(any(_subsumes(old, clause) for old in stored) for clause in renamed):
                    redundant.extend(clause for clause in group if clause not in redundant)
                    break
        return redundant

    def _fresh_redundant(self, candidates: list[Clause]) -> tuple[list[Clause], dict[Const, Const]]:
        """
        Clauses about individuals introduced by the sentence that say nothing
        new once those individuals are mapped onto stored ones.

        :return: The redundant clauses and the fresh -> stored constant mapping
        """
        fresh = {
            constant for clause in candidates for constant in constants_of(clause)
            if isinstance(constant.value, int) and constant.value > self.counters.const
        }
        if not fresh:
            return [], {}
        placeholders = {constant: Var(f"F{constant.value}") for constant in fresh}
        involved = [clause for clause in candidates if constants_of(clause) & fresh]
        lifted = [map_clause_terms(clause, lambda term: placeholders.get(term, term)) for clause in involved]
        goals = [clause.head for clause in lifted if clause.is_fact and not clause.is_negative]
        stored = [item.clause for item in self.stored]
        for bindings in _satisfy(goals, self.facts, {}):
            if not all(var in bindings for var in placeholders.values()):
                continue
            mapped = [apply_clause(clause, bindings) for clause in lifted]
            if all(any(_subsumes(old, clause) for old in stored) for clause in mapped):
                return involved, {constant: resolve_term(var, bindings) for constant, var in placeholders.items()}
        return [], {}

    def _conflicts(self, added: list[Clause]) -> list[tuple[Clause, Clause]]:
        stored_facts = [clause for clause in self.clauses if clause.is_fact]
        new_facts = [clause for clause in added if clause.is_fact and not clause.is_negative]
        all_facts = [*stored_facts, *new_facts]
        conflicts = []
        for negative in (*self.negative_clauses, *(clause for clause in added if clause.is_negative)):
            negative_is_new = negative in added
            for fact in (all_facts if negative_is_new else new_facts):
                if _violates(negative, fact, all_facts):
                    pair = (negative, fact) if negative_is_new else (fact, negative)
                    conflicts.append(pair)
        return conflicts

    def _check_arity(self, clause: Clause) -> None:
        pred, arity = clause.head.key
        for item in self.stored:
            other_pred, other_arity = item.clause.head.key
            if other_pred == pred and other_arity != arity:
                logger.warning("predicate %s used with %d and %d arguments", pred, arity, other_arity)
                return


def _subsumes(general: Clause, specific: Clause) -> bool:
    """
    True if 'general' maps onto 'specific' by binding only its own variables,
    body goals taken in order.
    """
    if general.head.negated != specific.head.negated or len(general.body) != len(specific.body):
        return False
    general = rename_apart(general, 'g')
    bindings = match_goals(general.head, specific.head, {})
    for left, right in zip(general.body, specific.body):
        if bindings is None:
            return False
        bindings = match_goals(left, right, bindings)
    return bindings is not None


def _violates(negative: Clause, fact: Clause, facts: list[Clause]) -> bool:
    renamed = rename_apart(negative, 'n')
    bindings = unify_literals(renamed.head.positive(), fact.head, {})
    if bindings is None:
        return False
    return any(True for _ in _satisfy(list(renamed.body), facts, bindings))


def _satisfy(goals: list[Goal], facts: list[Clause], bindings: Bindings) -> Iterator[Bindings]:
    """
    Solutions of a conjunction against ground facts only.
    """
    if not goals:
        yield bindings
        return
    goal, rest = apply_goal(goals[0], bindings), goals[1:]
    if isinstance(goal, NafConjunction) or goal.negated:
        positive = list(goal.literals) if isinstance(goal, NafConjunction) else [goal.positive()]
        if not any(True for _ in _satisfy(positive, facts, bindings)):
            yield from _satisfy(rest, facts, bindings)
        return
    for fact in facts:
        extended = unify_literals(goal, fact.head, bindings)
        if extended is not None:
            yield from _satisfy(rest, facts, extended)


def save_kb(kb: KnowledgeBase, path: str | Path) -> None:
    """
    Write the knowledge base: a counters header, every clause preceded by its
    source comment, and a closing '% end' line.
    """
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as file:
        file.write(f"% counters: const={kb.counters.const} skolem={kb.counters.skolem}\n")
        for item in kb.stored:
            file.write(f"% source: {item.source} @{item.sentence_index}\n")
            file.write(f"{item.clause}\n")
        file.write("% end\n")


def load_kb(path: str | Path) -> KnowledgeBase:
    """
    Read a file written by save_kb.

    :raises KbFormatError: On a malformed line or a file without its '% end' line
    """
    with open(path, 'r', encoding='utf-8') as file:
        lines = file.read().splitlines()

    kb = KnowledgeBase()
    source, sentence_index = '', 0
    header_seen = False
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line == '% end':
            if not header_seen:
                raise KbFormatError(line_number, "missing counters header")
            return kb
        if line.startswith('% counters:'):
            kb.counters = _read_counters(line, line_number)
            header_seen = True
        elif line.startswith('% source:'):
            text = line[len('% source:'):].strip()
            source, _, index = text.rpartition(' @')
            if not source or not index.lstrip('-').isdigit():
                raise KbFormatError(line_number, f"malformed source line '{line}'")
            sentence_index = int(index)
        elif line.startswith('%'):
            continue
        else:
            if not header_seen:
                raise KbFormatError(line_number, "clause before the counters header")
            try:
                clause = read_clause(line)
            except ClauseSyntaxError as e:
                raise KbFormatError(line_number, str(e))
            kb.stored.append(StoredClause(clause, source, sentence_index))
    raise KbFormatError(len(lines) + 1, "file is truncated, '% end' missing")


def _read_counters(line: str, line_number: int) -> Counters:
    values = {}
    for part in line[len('% counters:'):].split():
        key, _, value = part.partition('=')
        if not value.isdigit():
            raise KbFormatError(line_number, f"malformed counter '{part}'")
        values[key] = int(value)
    if set(values) != {'const', 'skolem'}:
        raise KbFormatError(line_number, "expected const=<n> skolem=<m>")
    return Counters(values['const'], values['skolem'])
