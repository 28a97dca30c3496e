# -*- coding: utf-8 -*-
import pytest

from spec_system.dialog import HELP, LexiconEditor, Session, run_batch
from spec_system.executor import ScriptedIo
from spec_system.lexicon import format_entry_line
from spec_system.translator import Const

from tests.conftest import ROOT

AMBIGUOUS = "SimpleMat checks a card or SimpleMat rejects a card and SimpleMat prints a receipt."


def answers(session: Session, lines) -> list[str]:
    return [session.handle(line).output for line in lines]


@pytest.fixture
def corpus_session(session, atm_corpus) -> Session:
    for line in atm_corpus:
        if not line.endswith('?'):
            assert not session.handle(line).rejected, line
    return session


class TestAssertions:

    def test_feedback(self, session):
        """Test the feedback of the first ATM sentences"""
        assert answers(session, [
            "SimpleMat is a simple money dispenser.",
            "It has a user interface.",
            "Every customer has a card.",
        ]) == [
            "SimpleMat is a simple money dispenser.",
            "[SimpleMat] has a user interface.",
            "Every customer has [an individual] card.",
        ]

    def test_accepted_outcome(self, session):
        """Test the status and clause count of an accepted sentence"""
        outcome = session.handle("SimpleMat is a simple money dispenser.")
        assert outcome.status == 'accepted'
        assert outcome.clauses == 3
        assert session.constants[1] == session.kb.named_constant('simplemat') == Const(1)

    def test_redundant_sentence(self, atm_session):
        """Test that re-asserting a universal sentence adds nothing"""
        before = len(atm_session.kb)
        outcome = atm_session.handle("Every customer has a card.")
        assert outcome.status == 'redundant'
        assert outcome.clauses == 0
        assert 'Nothing new' in outcome.output
        assert len(atm_session.kb) == before
        assert atm_session.kb.counters.skolem == 1

    def test_contradiction_is_rejected(self, atm_session):
        """Test that a sentence contradicting a negative sentence leaves the session unchanged"""
        assert not atm_session.handle("SimpleMat does not accept a blocked card.").rejected
        before, next_referent = atm_session.kb.snapshot(), atm_session.next_referent
        outcome = atm_session.handle("SimpleMat accepts a blocked card.")
        assert outcome.rejected
        assert outcome.output.startswith("Inconsistent with the knowledge base")
        assert atm_session.kb == before
        assert atm_session.next_referent == next_referent

    def test_several_sentences_on_one_line(self, session):
        """Test that one line may carry several sentences"""
        outcome = session.handle("John is a customer. Who is a customer?")
        assert outcome.status == 'accepted'
        assert outcome.output == "John is a customer. | [John] is a customer."

    def test_unknown_word(self, session):
        """Test that an unknown word rejects the line"""
        outcome = session.handle("SimpleMat swallows a card.")
        assert outcome.rejected
        assert "Unknown word 'swallows'" in outcome.output

    def test_unresolved_pronoun(self, session):
        """Test that a pronoun without antecedent rejects the sentence"""
        assert "No accessible antecedent for 'It'" in session.handle("It has a card.").output

    def test_skipped_lines(self, session):
        """Test that blank and comment lines are skipped"""
        assert session.handle('   ').status == 'skipped'
        assert session.handle('# comment').status == 'skipped'

    def test_trace(self, atm_lexicon, schemata):
        """Test that trace mode adds the intermediate representations"""
        session = Session(atm_lexicon, schemata, trace=True)
        outcome = session.handle("SimpleMat is a simple money dispenser.")
        traces = [message.text for message in outcome.messages if message.level == 'trace']
        assert traces[1].startswith('DRS: ')
        assert 'money_dispenser(1).' in traces
        assert 'DRS' not in outcome.output


class TestQuestions:

    def test_corpus_questions(self, corpus_session, atm_corpus):
        """Test the answers to the questions of the ATM specification"""
        questions = [line for line in atm_corpus if line.endswith('?')]
        assert answers(corpus_session, questions) == [
            "yes",
            "no",
            "[SimpleMat] is a money dispenser.",
            "[John, Mary] is a customer.",
            "yes",
        ]

    def test_answered_status(self, atm_session):
        """Test the status of a question"""
        assert atm_session.handle("Is SimpleMat a money dispenser?").status == 'answered'

    def test_wh_question_without_answer(self, atm_session):
        """Test that a wh-question without solutions answers no"""
        assert atm_session.handle("Who is a customer?").output == 'no'

    def test_depth_bound(self, atm_session):
        """Test that a search cut by the depth bound says so"""
        atm_session.handle("John is a customer.")
        atm_session.handle(":depth 1")
        assert atm_session.handle("Does John have a card?").output == 'no answer within depth 1'
        atm_session.handle(":depth 64")
        assert atm_session.handle("Does John have a card?").output == 'yes'

    def test_object_wh_question(self, atm_session):
        """Test that an object question is answered with its subject once"""
        assert atm_session.handle("What does SimpleMat have?").output == "SimpleMat has [a user interface]."
        atm_session.handle("John is a customer.")
        assert atm_session.handle("What does John have?").output == "John has [an individual card]."

    def test_who_asks_for_persons(self, atm_session):
        """Test that who is not answered by a neuter individual"""
        assert atm_session.handle("Who is simple?").output == 'no'
        atm_session.handle("John is a simple customer.")
        assert atm_session.handle("Who is simple?").output == "[John] is simple."

    def test_who_with_neuter_noun(self, atm_session):
        """Test that a noun in the question decides the gender asked for"""
        assert atm_session.handle("Who is a money dispenser?").output == "[SimpleMat] is a money dispenser."

    def test_comparison_errors_reject_the_question(self, atm_session):
        """Test that comparing an individual or an unbound term rejects the line"""
        outcome = atm_session.handle("Is SimpleMat bigger than 3?")
        assert outcome.rejected
        assert "'bigger_than' expects numbers" in outcome.output
        outcome = atm_session.handle("Who is smaller than 3?")
        assert outcome.rejected
        assert "not sufficiently instantiated" in outcome.output

    def test_unknown_name_in_question(self, atm_session):
        """Test that a name the knowledge base does not know is reported"""
        assert atm_session.handle("Is Mary a customer?").output == "Unknown name 'mary'"


class TestAmbiguity:

    def test_readings_are_listed(self, session):
        """Test that an ambiguous sentence is rejected with its readings"""
        outcome = session.handle(AMBIGUOUS)
        assert outcome.rejected
        assert outcome.messages[0].text == "Sentence has 2 readings"
        assert [message.text[:3] for message in outcome.messages[1:3]] == ['1) ', '2) ']
        assert 'choose' in outcome.messages[-1].text

    def test_choice_is_used_once(self, session):
        """Test that :choose applies to the next ambiguous sentence only"""
        session.handle(":choose 1")
        assert session.pending_choice == 1
        outcome = session.handle(AMBIGUOUS)
        # the chosen reading parses but its disjunction has no clause form
        assert outcome.rejected
        assert 'disjunction' in outcome.output
        assert session.pending_choice is None
        assert session.handle(AMBIGUOUS).messages[0].text == "Sentence has 2 readings"

    def test_chooser_callback(self, atm_lexicon, schemata):
        """Test that the interactive chooser is asked when no choice is pending"""
        asked = []
        session = Session(atm_lexicon, schemata, choose=lambda readings: asked.append(len(readings)) or 2)
        outcome = session.handle(AMBIGUOUS)
        assert asked == [2]
        assert 'disjunction' in outcome.output


class TestLexiconEditor:

    def test_unknown_verb_is_added(self, atm_lexicon, schemata):
        """Test that an unknown verb is added in its base form and the sentence retried"""
        session = Session(atm_lexicon, schemata, edit_word=LexiconEditor(ScriptedIo(['verb', 'event'])))
        outcome = session.handle("SimpleMat swallows a card.")
        assert outcome.status == 'accepted'
        assert outcome.messages[0].text == 'Lexicon entry added: verb|swallow|swallow|swallow|verb_kind=event'
        assert session.lexicon.lookup('swallow')
        assert [str(item.clause) for item in session.kb.list_clauses('swallow')] == ['swallow(1,2).']

    def test_plural_noun_is_stored_singular(self, atm_lexicon):
        """Test the noun defaults of the editor"""
        entry = LexiconEditor(ScriptedIo(['noun', '']))('slips', atm_lexicon)
        assert format_entry_line(entry) == 'noun|slip|slip|slip|gender=n|number=sg'

    def test_skip(self, atm_lexicon):
        """Test that the word stays unknown when the user skips it"""
        assert LexiconEditor(ScriptedIo(['skip']))('slips', atm_lexicon) is None

    def test_invalid_verb_kind(self, atm_lexicon):
        """Test that an unknown verb kind gives no entry"""
        assert LexiconEditor(ScriptedIo(['verb', 'process']))('swallows', atm_lexicon) is None


class TestCommands:

    def test_kb_listing(self, atm_session):
        """Test listing the clauses of one predicate with their sources"""
        outcome = atm_session.handle(":kb card")
        assert [message.text for message in outcome.messages] == [
            'card([1,X1]) :- customer(X1).  % Every customer has a card.'
        ]
        assert atm_session.handle(":kb blocked").output == "No clauses for 'blocked'"

    def test_drs_and_paraphrase(self, atm_session):
        """Test the discourse and paraphrase listings"""
        assert atm_session.handle(":drs").messages
        lines = [message.text for message in atm_session.handle(":paraphrase").messages]
        assert lines[:2] == ["SimpleMat is a simple money dispenser.", "SimpleMat has a user interface."]

    def test_tree(self, session):
        """Test the syntax tree of the last sentence"""
        assert session.handle(":tree").rejected
        session.handle("SimpleMat is a simple money dispenser.")
        assert session.handle(":tree").messages[0].text.startswith('(')

    @pytest.mark.parametrize('line', [':depth 0', ':depth x', ':choose 0', ':scenario', ':end', ':bogus', ':lexicon'])
    def test_usage_errors(self, session, line):
        """Test that malformed commands are rejected"""
        assert session.handle(line).rejected

    def test_help_and_quit(self, session):
        """Test the help listing and the quit command"""
        assert len(session.handle(":help").messages) == len(HELP)
        assert session.handle(":quit").status == 'quit'

    def test_lexicon_add_and_save(self, session, tmp_path):
        """Test adding a lexicon entry and writing the lexicon"""
        outcome = session.handle(":lexicon add noun|teller|teller|teller|gender=m,f|number=sg")
        assert outcome.status == 'command'
        assert session.handle("A teller is a customer.").status == 'accepted'
        path = tmp_path / 'lexicon.txt'
        session.handle(f":lexicon save {path}")
        assert 'noun|teller|teller|teller|gender=m,f|number=sg' in path.read_text(encoding='utf-8')

    def test_save_and_load(self, atm_session, tmp_path):
        """Test that :load restores the knowledge base and starts a new discourse"""
        path = tmp_path / 'atm.kb'
        atm_session.handle(f":save {path}")
        saved = atm_session.kb.snapshot()
        atm_session.handle("John is a customer.")
        assert atm_session.handle(f":load {path}").status == 'command'
        assert atm_session.kb == saved
        assert atm_session.next_referent == 1
        assert atm_session.handle("Is SimpleMat a money dispenser?").output == 'yes'

    def test_load_missing_file(self, session, tmp_path):
        """Test that a missing knowledge base file is reported"""
        assert session.handle(f":load {tmp_path / 'missing.kb'}").rejected


class TestScenario:

    def run_withdraw(self, atm_lexicon, schemata, replies: list[str]):
        session = Session(atm_lexicon, schemata, io=ScriptedIo(replies))
        for line in (
                "SimpleMat is a simple money dispenser.",
                "Every customer has a card.",
                "John is a known customer.",
                ":scenario withdraw",
                "The customer enters the card.",
                "SimpleMat checks the card.",
                ":end",
        ):
            assert not session.handle(line).rejected, line
        return session, session.handle(":run withdraw")

    def test_scenario_sentences_are_not_asserted(self, atm_session):
        """Test that sentences between :scenario and :end leave the knowledge base alone"""
        before = len(atm_session.kb)
        atm_session.handle(":scenario check")
        outcome = atm_session.handle("SimpleMat checks a card.")
        assert outcome.status == 'scenario'
        assert atm_session.handle(":end").output == "Scenario 'check' has 1 sentence(s)"
        assert len(atm_session.kb) == before

    def test_run(self, atm_lexicon, schemata):
        """Test the withdraw run with the card entered and the check confirmed"""
        session, outcome = self.run_withdraw(atm_lexicon, schemata, ['4711', 'yes', 'yes', 'no'])
        listing = [message.text for message in outcome.messages if message.level == 'listing']
        assert listing == [
            '1. E1 enter(2,4711) [interface]',
            '   Enter your card > 4711',
            '   Is card(4711) true? enter a value > yes',
            '2. E2 check(1,4711) [user]',
            '   Is check(1,4711) true? enter a value > yes',
        ]
        assert outcome.clauses == 0
        assert not session.kb.list_clauses('check')

    def test_session_facts_kept(self, atm_lexicon, schemata):
        """Test that confirmed session facts can be added to the knowledge base"""
        session, outcome = self.run_withdraw(atm_lexicon, schemata, ['4711', 'yes', 'yes', 'yes'])
        assert outcome.clauses == 2
        assert [str(item.clause) for item in session.kb.list_clauses('check')] == ['check(1,4711).']

    def test_stuck_run(self, atm_lexicon, schemata):
        """Test that a declined card stops the run"""
        _, outcome = self.run_withdraw(atm_lexicon, schemata, [])
        assert outcome.rejected
        assert outcome.output.startswith('Execution stuck at E1')

    def test_unknown_scenario(self, session):
        """Test running a scenario that was never recorded"""
        assert session.handle(":run nothing").output == "Unknown scenario 'nothing'"


class TestBatch:

    def test_specification_file(self, session, tmp_path):
        """Test a batch run over the ATM specification"""
        report, exit_code = run_batch(session, ROOT / 'specs' / 'atm_specification.txt', tmp_path, echo=False)
        assert exit_code == 0
        assert report.rejections == 0
        assert report.path.is_file()
        df = report.df
        assert list(df.columns) == ['line', 'input', 'status', 'output', 'clauses']
        assert df.loc[df['input'] == 'Who is a customer?', 'output'].item() == '[John, Mary] is a customer.'

    def test_withdraw_file(self, atm_lexicon, schemata, tmp_path):
        """Test the withdraw batch file with its scripted replies"""
        session = Session(atm_lexicon, schemata, io=ScriptedIo.from_file(ROOT / 'specs' / 'withdraw_replies.txt'))
        _, exit_code = run_batch(session, ROOT / 'specs' / 'atm_withdraw.txt', tmp_path, echo=False)
        assert exit_code == 0
        assert session.io.replies == ['4711', 'yes', 'yes', 'no']

    def test_rejections_set_exit_code(self, session, tmp_path):
        """Test the exit code with and without lenient mode"""
        path = tmp_path / 'bad.txt'
        path.write_text("SimpleMat is a simple money dispenser.\nCustomer the enters.\n", encoding='utf-8')
        report, exit_code = run_batch(session, path, tmp_path / 'reports', echo=False)
        assert exit_code == 1
        assert report.df['status'].tolist() == ['accepted', 'rejected']
        assert report.df['line'].tolist() == [1, 2]
        _, exit_code = run_batch(session, path, tmp_path / 'reports', lenient=True, echo=False)
        assert exit_code == 0
