# -*- coding: utf-8 -*-
import pytest

from spec_system.discourse import resolve
from spec_system.drs import Drs, equivalences, simplify
from spec_system.exceptions import UnknownName, UnsupportedDrs
from spec_system.translator import (
    Clause, Const, Counters, Literal, Skolem, Var, is_variant, standardize, translate_assertion, translate_query
)


@pytest.fixture
def translate(parse):
    def _translate(text: str, counters: Counters = None, constants=None, first_referent: int = 1, context=Drs()):
        resolution = resolve(context, parse(text, first_referent))
        return translate_assertion(simplify(resolution.increment), counters or Counters(), constants, sentence=text)
    return _translate


def clause_lines(translation) -> list[str]:
    return [str(clause) for clause in translation.clauses]


def lookup(name: str):
    return {'simplemat': Const(1), 'john': Const(3)}.get(name)


class TestAssertions:

    def test_named_individual_becomes_constant(self, translate):
        """Test the facts of a sentence about a named individual"""
        translation = translate("SimpleMat is a simple money dispenser.")
        assert clause_lines(translation) == ['named(1,simplemat).', 'money_dispenser(1).', 'simple(1).']
        assert translation.counters == Counters(const=1, skolem=0)
        assert translation.constants == {1: Const(1)}

    def test_every_gives_skolemized_rules(self, translate):
        """Test that an object introduced under 'every' becomes a Skolem term over the universal variable"""
        translation = translate("Every customer has a card.")
        assert clause_lines(translation) == [
            'card([1,X1]) :- customer(X1).',
            'have(X1,[1,X1]) :- customer(X1).',
        ]
        assert translation.counters == Counters(const=0, skolem=1)

    def test_skolem_numbering_continues(self, translate):
        """Test that Skolem indices continue from the counters passed in"""
        translation = translate("Every customer has a personal code.", counters=Counters(const=4, skolem=1))
        assert 'code([2,X1]) :- customer(X1).' in clause_lines(translation)
        assert translation.counters == Counters(const=4, skolem=2)

    def test_unique_references_in_conditional(self, translate):
        """Test that definite descriptions without antecedent are accommodated as facts"""
        translation = translate(
            "If the trap-door-algorithm calculates a number then the number equals the check code."
        )
        assert clause_lines(translation) == [
            'trap_door_algorithm(1).',
            'check_code(2).',
            'equal(X1,2) :- number(X1), calculate(1,X1).',
        ]

    def test_negation_becomes_negative_clause(self, translate):
        """Test that a negated verb phrase becomes a clause with a negated head"""
        translation = translate("SimpleMat does not accept a blocked card.")
        assert clause_lines(translation)[-1] == '\\+ accept(1,X1) :- card(X1), blocked(X1).'
        assert translation.clauses[-1].is_negative

    def test_constants_carry_over(self, parse, translate):
        """Test that a referent from an earlier sentence keeps its constant"""
        first_parse = parse("John is a customer.")
        first = resolve(Drs(), first_parse)
        earlier = translate_assertion(simplify(first.increment), Counters())
        translation = translate(
            "John owns a card.", earlier.counters, earlier.constants,
            first_referent=first_parse.next_referent, context=first.discourse
        )
        assert clause_lines(translation) == ['named(1,john).', 'card(2).', 'own(1,2).']

    def test_counters_are_not_modified(self, translate):
        """Test that the counters argument is copied"""
        counters = Counters(const=2, skolem=3)
        translate("Every customer has a card.", counters=counters)
        assert counters == Counters(const=2, skolem=3)

    def test_disjunction_is_unsupported(self, translate):
        """Test that a disjunctive assertion is rejected"""
        with pytest.raises(UnsupportedDrs) as error:
            translate("A customer enters a card or a clerk enters a code.")
        assert 'disjunction' in str(error.value)


class TestGeneratedSentences:

    def test_translation_is_deterministic(self, translate, generated_sentences):
        """Test that translating a sentence twice gives the same clauses"""
        for sentence in generated_sentences:
            assert translate(sentence).clauses == translate(sentence).clauses, sentence

    def test_clauses_are_range_restricted(self, translate, generated_sentences):
        """Test that every head variable occurs in the body and facts are ground"""
        for sentence in generated_sentences:
            for clause in translate(sentence).clauses:
                body_vars = {var for goal in clause.body for var in goal.vars()}
                assert set(clause.head.vars()) <= body_vars, f"{sentence}: {clause}"

    def test_clauses_are_standardized(self, translate, generated_sentences):
        """Test that variables are numbered X1, X2, ... in order of first occurrence"""
        for sentence in generated_sentences:
            for clause in translate(sentence).clauses:
                assert clause == standardize(clause)


class TestQueries:

    def query(self, parse, text: str):
        parsed = parse(text)
        resolution = resolve(Drs(), parsed)
        return translate_query(
            simplify(resolution.increment),
            [(referent.id, word) for referent, word in parsed.wh_vars],
            aliases=equivalences(resolution.increment),
            named_lookup=lookup
        )

    def test_yes_no_question(self, parse):
        """Test that a name in a question is replaced by its constant"""
        query = self.query(parse, "Is SimpleMat a money dispenser?")
        assert [str(goal) for goal in query.goals] == ['named(1,simplemat)', 'money_dispenser(1)']
        assert query.wh_vars == ()

    def test_wh_question(self, parse):
        """Test that the wh-word becomes the answer variable"""
        query = self.query(parse, "Who is a money dispenser?")
        assert [str(goal) for goal in query.goals] == ['money_dispenser(V1)']
        assert query.wh_vars == ((Var('V1'), 'who'),)

    def test_negated_question(self, parse):
        """Test that a negated question gives a negation-as-failure goal"""
        query = self.query(parse, "Does John not own a card?")
        assert str(query.goals[-1]) == '\\+ (card(V2), own(3,V2))'

    def test_unknown_name(self, parse):
        """Test that a name missing from the knowledge base is reported"""
        with pytest.raises(UnknownName) as error:
            self.query(parse, "Is Mary a customer?")
        assert error.value.name == 'mary'


class TestClauseHelpers:

    def test_variant_ignores_variable_names(self):
        """Test that clauses differing only in variable names are variants"""
        first = Clause(Literal('card', (Skolem(1, (Var('A'),)),)), (Literal('customer', (Var('A'),)),))
        second = Clause(Literal('card', (Skolem(1, (Var('B'),)),)), (Literal('customer', (Var('B'),)),))
        assert is_variant(first, second)
        assert str(standardize(first)) == 'card([1,X1]) :- customer(X1).'
