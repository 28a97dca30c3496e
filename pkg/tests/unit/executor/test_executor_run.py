# -*- coding: utf-8 -*-
import pytest

from spec_system.exceptions import CyclicTimeline, DuplicateInterface, ExecutionStuck
from spec_system.executor import (
    ENTER_CARD_PROMPT, ScriptedIo, Timeline, build_timeline, default_interfaces, enter_card, parse_value, run
)
from spec_system.knowledge_base import KnowledgeBase, read_clause
from spec_system.translator import Const, Num, Var

WITHDRAW = ("A customer enters a card.", "SimpleMat checks the card.")


def parse_all(parse, *sentences: str) -> list:
    parses, next_referent = [], 1
    for sentence in sentences:
        parses.append(parse(sentence, next_referent))
        next_referent = parses[-1].next_referent
    return parses


@pytest.fixture
def atm_kb() -> KnowledgeBase:
    kb = KnowledgeBase()
    kb.assimilate(
        [read_clause(line) for line in (
            'named(1,simplemat).', 'money_dispenser(1).', 'customer(2).', 'card([1,X1]) :- customer(X1).'
        )],
        "setup"
    )
    return kb


@pytest.fixture
def withdraw(parse):
    # X3 is SimpleMat, 'the card' X4 is the card X2 entered
    timeline, eventualities = build_timeline(parse_all(parse, *WITHDRAW))
    return timeline, eventualities, {3: Const(1), 4: Var('X2')}


class TestTimeline:

    def test_events_in_text_order(self, parse):
        """Test that consecutive event sentences are ordered"""
        timeline, eventualities = build_timeline(parse_all(parse, *WITHDRAW))
        assert [str(eventuality) for eventuality in eventualities] == ['enter(E1,X1,X2)', 'check(E2,X3,X4)']
        assert str(timeline) == (
            'at(T1,before-N), cul(E1,T1), at(T2,before-N), cul(E2,T2), precedes(T1,T2)'
        )

    def test_preconditions(self, parse):
        """Test that the descriptions of the participants become preconditions"""
        _, (enter, check) = build_timeline(parse_all(parse, *WITHDRAW))
        assert [str(condition) for condition in enter.preconditions] == ['customer(X1)', 'card(X2)']
        assert [str(condition) for condition in check.preconditions] == ['named(X3,simplemat)', 'card(X4)']

    def test_states_are_not_ordered(self, parse):
        """Test that a simple state gets a time but no ordering"""
        timeline, eventualities = build_timeline(parse_all(parse, "A customer enters a card.", "John owns a card."))
        assert [eventuality.id for eventuality in eventualities] == ['E1', 'S1']
        assert timeline.precedes == []
        assert timeline.overlaps == []

    def test_progressive_state_overlaps(self, parse):
        """Test that a progressive sentence overlaps the latest event"""
        timeline, _ = build_timeline(parse_all(parse, "A customer enters a card.", "SimpleMat is checking the card."))
        assert timeline.overlaps == [('T1', 'T2')]
        assert timeline.precedes == []

    def test_and_then_orders_within_sentence(self, parse):
        """Test that 'and then' orders the members of one sentence"""
        timeline, eventualities = build_timeline(
            parse_all(parse, "A customer enters a card and then SimpleMat checks the card.")
        )
        assert len(eventualities) == 2
        assert timeline.precedes == [('T1', 'T2')]

    def test_plain_and_shares_a_position(self, parse):
        """Test that plain 'and' leaves its members unordered"""
        timeline, _ = build_timeline(
            parse_all(parse, "A customer enters a card and SimpleMat prints a receipt.", "SimpleMat checks the card.")
        )
        assert sorted(timeline.precedes) == [('T1', 'T3'), ('T2', 'T3')]

    def test_linearize_follows_precedes(self, parse):
        """Test the execution order against text order"""
        timeline, eventualities = build_timeline(parse_all(parse, *WITHDRAW))
        assert [eventuality.id for eventuality in timeline.linearize(eventualities)] == ['E1', 'E2']
        reversed_timeline = Timeline()
        reversed_timeline.add('precedes', 'T2', 'T1')
        assert [eventuality.id for eventuality in reversed_timeline.linearize(eventualities)] == ['E2', 'E1']

    def test_cycle(self, parse):
        """Test that a cyclic ordering is reported"""
        _, eventualities = build_timeline(parse_all(parse, *WITHDRAW))
        timeline = Timeline()
        timeline.add('precedes', 'T1', 'T2')
        timeline.add('precedes', 'T2', 'T1')
        with pytest.raises(CyclicTimeline):
            timeline.linearize(eventualities)


class TestRun:

    def test_withdraw(self, atm_kb, withdraw):
        """Test the card entered through the interface and the check confirmed by the user"""
        timeline, eventualities, terms = withdraw
        io = ScriptedIo(['4711', 'yes', 'yes'])
        trace = run(atm_kb, timeline, eventualities, io, default_interfaces(), terms)
        assert trace.render() == [
            '1. E1 enter(2,4711) [interface]',
            f'   {ENTER_CARD_PROMPT} > 4711',
            '   Is card(4711) true? enter a value > yes',
            '2. E2 check(1,4711) [user]',
            '   Is check(1,4711) true? enter a value > yes',
        ]
        assert [str(fact) for fact in trace.session_facts] == ['card(4711).', 'check(1,4711).']
        assert io.replies == ['4711', 'yes', 'yes']
        assert len(atm_kb) == 4

    def test_proofs_of_preconditions(self, atm_kb, withdraw):
        """Test that preconditions are proven on the card the interface supplied"""
        timeline, eventualities, terms = withdraw
        trace = run(atm_kb, timeline, eventualities, ScriptedIo(['4711', 'yes', 'yes']), default_interfaces(), terms)
        assert trace.steps[0].proofs == (
            ('customer(2)', 'kb'), ('card(4711)', 'user'), ('enter(2,4711)', 'interface')
        )
        assert trace.steps[1].proofs[0] == ('named(1,simplemat)', 'kb')

    def test_card_asked_once(self, atm_kb, withdraw):
        """Test that the card prompt appears once per run"""
        timeline, eventualities, terms = withdraw
        trace = run(atm_kb, timeline, eventualities, ScriptedIo(['4711', 'yes', 'yes']), default_interfaces(), terms)
        assert [prompt for prompt, _ in trace.transcript].count(ENTER_CARD_PROMPT) == 1

    def test_known_card_must_match(self, atm_kb, withdraw):
        """Test that the reply to the card prompt is checked against a card the run already knows"""
        timeline, eventualities, terms = withdraw
        terms = {**terms, 2: Const(4711), 4: Const(4711)}
        trace = run(atm_kb, timeline, eventualities, ScriptedIo(['4711', 'yes', 'yes']), default_interfaces(), terms)
        assert str(trace.steps[0]) == '1. E1 enter(2,4711) [interface]'
        with pytest.raises(ExecutionStuck) as error:
            run(atm_kb, timeline, eventualities, ScriptedIo(['4712']), default_interfaces(), terms)
        assert error.value.event == 'E1'
        assert error.value.goal == 'enter(X1,4711)'

    def test_declined_card(self, atm_kb, withdraw):
        """Test that an empty reply to the card prompt stops the run"""
        timeline, eventualities, terms = withdraw
        with pytest.raises(ExecutionStuck) as error:
            run(atm_kb, timeline, eventualities, ScriptedIo(), default_interfaces(), terms)
        assert error.value.event == 'E1'

    def test_declined_fact(self, atm_kb, withdraw):
        """Test that 'no' to a missing fact stops the run at that step"""
        timeline, eventualities, terms = withdraw
        with pytest.raises(ExecutionStuck) as error:
            run(atm_kb, timeline, eventualities, ScriptedIo(['4711', 'yes', 'no']), default_interfaces(), terms)
        assert error.value.event == 'E2'
        assert error.value.goal == 'check(1,4711)'

    def test_values_fill_variables(self, parse):
        """Test that a typed value binds the variable of a missing fact"""
        timeline, eventualities = build_timeline(parse_all(parse, "A customer enters a card."))
        io = ScriptedIo(['9', '7', 'yes'])
        trace = run(KnowledgeBase(), timeline, eventualities, io, default_interfaces())
        assert [str(fact) for fact in trace.session_facts] == ['customer(7).', 'card(9).']
        assert str(trace.steps[0].literal) == 'enter(7,9)'

    def test_without_interfaces(self, atm_kb, withdraw):
        """Test that without a handler the verb literal is asked for"""
        timeline, eventualities, terms = withdraw
        trace = run(atm_kb, timeline, eventualities, ScriptedIo(['yes', 'yes']), terms=terms)
        assert [how for _, how in trace.steps[0].proofs][-1] == 'user'
        assert str(trace.steps[0].literal) == 'enter(2,[1,2])'


class TestInterfaces:

    def test_duplicate_registration(self):
        """Test that a predicate gets at most one handler"""
        interfaces = default_interfaces()
        assert ('enter', 2) in interfaces
        with pytest.raises(DuplicateInterface):
            interfaces.register_interface('enter', 2, enter_card)

    def test_enter_card_fills_output(self):
        """Test that the card handler binds an unbound card argument"""
        io = ScriptedIo(['4711'])
        assert enter_card((Const(2), Var('X')), io) == (Const(2), Const(4711))
        assert io.transcript == [(ENTER_CARD_PROMPT, '4711')]

    def test_enter_card_checks_known_card(self):
        """Test that a bound card argument is kept only when the reply names it"""
        assert enter_card((Const(2), Const(4711)), ScriptedIo(['4711'])) == (Const(2), Const(4711))
        assert enter_card((Const(2), Const(4711)), ScriptedIo(['4712'])) is None

    @pytest.mark.parametrize('text, value', [
        ('42', Const(42)),
        ('2.5', Num(2.5)),
        (' Yes ', Const('yes')),
    ])
    def test_parse_value(self, text, value):
        """Test the typing of user values"""
        assert parse_value(text) == value


class TestScriptedIo:

    def test_replies_from_file(self, tmp_path):
        """Test that comment lines are skipped and an exhausted script answers empty"""
        path = tmp_path / 'replies.txt'
        path.write_text('# card number\n4711\nyes\n', encoding='utf-8')
        io = ScriptedIo.from_file(path)
        assert io.remaining == 2
        assert [io.ask('a'), io.ask('b'), io.ask('c')] == ['4711', 'yes', '']
        assert io.transcript[-1] == ('c', '')
