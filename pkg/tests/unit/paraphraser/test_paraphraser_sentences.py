# -*- coding: utf-8 -*-
import pytest

from spec_system.discourse import resolve
from spec_system.drs import Drs
from spec_system.exceptions import SchemaFormatError
from spec_system.knowledge_base import KnowledgeBase, read_clause
from spec_system.paraphraser import (
    Slot, describe_term, feedback_sentence, fill_template, paraphrase_kb, parse_pattern_literal, parse_schemata,
    resolve_articles
)
from spec_system.translator import Const, Skolem


def clauses(*lines: str):
    return [read_clause(line) for line in lines]


def feedback_for(parse, *sentences: str) -> list[str]:
    context, next_referent, lines = Drs(), 1, []
    for sentence in sentences:
        parsed = parse(sentence, next_referent)
        resolution = resolve(context, parsed)
        lines.append(feedback_sentence(parsed, resolution.report))
        context, next_referent = resolution.discourse, parsed.next_referent
    return lines


class TestSchemata:

    def test_schema_file(self, schemata):
        """Test that the shipped schema file loads completely"""
        assert len(schemata) == 8
        assert schemata[0].template == '<proper noun>g is a/an <adjective>g <noun>g.'
        assert str(schemata[2].pattern[0]) == 'named(X, <proper noun>)'

    def test_pattern_literal_with_slots(self):
        """Test slots in predicate and argument position"""
        literal = parse_pattern_literal('<verb>(X, Y)')
        assert literal.pred == Slot('verb', 'verb')
        assert literal.args == ('X', 'Y')
        assert parse_pattern_literal('named(Y, <proper noun2>)').slots == [Slot('proper noun2', 'proper-noun')]

    @pytest.mark.parametrize('text, line', [
        ('=>\nA is b.\n', 1),
        ('<noun>(X)\n=>\n', 3),
        ('<noun>(X)\n\n', 2),
        ('<thing>(X)\n=>\n<thing>g.\n', 1),
        ('<noun>(X)\n=>\n<adjective>g.\n', 1),
        ('noun(x)\n=>\nx.\n', 1),
    ])
    def test_malformed_schemata(self, text, line):
        """Test that schema errors carry the line number"""
        with pytest.raises(SchemaFormatError) as error:
            parse_schemata(text)
        assert error.value.line == line

    def test_comments_are_skipped(self):
        """Test comment lines inside a schema file"""
        schemata = parse_schemata('# header\n<noun>(X)\n# inside\n=>\na/an <noun>g exists.\n')
        assert len(schemata) == 1


class TestParaphrase:

    def test_named_individual_with_adjective(self, atm_lexicon, schemata):
        """Test the named individual schema with an adjective"""
        paraphrase = paraphrase_kb(
            clauses('named(3,john).', 'known(3).', 'customer(3).'), schemata, atm_lexicon
        )
        assert paraphrase.sentences == ("John is a known customer.",)
        assert paraphrase.remainder == ()

    def test_copula_between_individuals(self, atm_lexicon, schemata):
        """Test the schema joining a name and a description through is/2"""
        paraphrase = paraphrase_kb(
            clauses('named(1,john).', 'known(2).', 'customer(2).', 'is(1,2).'), schemata, atm_lexicon
        )
        assert paraphrase.sentences == ("John is a known customer.",)

    def test_session_knowledge_base(self, atm_session, atm_lexicon, schemata):
        """Test paraphrasing the knowledge base of the first three sentences"""
        paraphrase = paraphrase_kb((item.clause for item in atm_session.kb), schemata, atm_lexicon)
        assert paraphrase.lines() == [
            "SimpleMat is a simple money dispenser.",
            "SimpleMat has a user interface.",
            "card([1,X1]) :- customer(X1).",
            "have(X1,[1,X1]) :- customer(X1).",
        ]

    def test_anonymous_individual(self, atm_lexicon, schemata):
        """Test the schema for an individual without a name"""
        paraphrase = paraphrase_kb(clauses('card(5).', 'valid(5).'), schemata, atm_lexicon)
        assert paraphrase.sentences == ("A card is valid.",)

    def test_uncovered_facts_stay(self, atm_lexicon, schemata):
        """Test that facts no schema covers are listed verbatim"""
        paraphrase = paraphrase_kb(clauses('amount(1,#20).'), schemata, atm_lexicon)
        assert paraphrase.sentences == ()
        assert paraphrase.lines() == ['amount(1,#20).']

    def test_verb_between_names(self, atm_lexicon, schemata):
        """Test the schema relating two named individuals"""
        paraphrase = paraphrase_kb(
            clauses('named(1,john).', 'named(2,mary).', 'know(1,2).'), schemata, atm_lexicon
        )
        assert paraphrase.sentences == ("John knows Mary.",)


class TestArticles:

    @pytest.mark.parametrize('text, expected', [
        ('a/an account', 'an account'),
        ('a/an user interface', 'a user interface'),
        ('A/an card is valid.', 'A card is valid.'),
        ('A/an amount is correct.', 'An amount is correct.'),
    ])
    def test_resolve_articles(self, text, expected):
        """Test a/an chosen by pronunciation"""
        assert resolve_articles(text) == expected

    def test_fill_template(self, atm_lexicon):
        """Test graphemes and third singular forms in a template"""
        sentence = fill_template(
            '<proper noun>g <verb>gs a/an <noun>g.',
            {'proper noun': 'simplemat', 'verb': 'check', 'noun': 'check_code'},
            atm_lexicon
        )
        assert sentence == 'SimpleMat checks a check code.'


class TestFeedback:

    def test_pronoun_is_bracketed(self, parse):
        """Test that a resolved pronoun is replaced by its antecedent's name"""
        assert feedback_for(parse, "SimpleMat is a simple money dispenser.", "It has a user interface.") == [
            "SimpleMat is a simple money dispenser.",
            "[SimpleMat] has a user interface.",
        ]

    def test_pronoun_with_anonymous_antecedent(self, parse):
        """Test that an unnamed antecedent is shown with a definite article"""
        *_, last = feedback_for(parse, "A customer has a card.", "It is valid.")
        assert last == "[the card] is valid."

    def test_dependent_indefinite(self, parse):
        """Test that an indefinite under every is shown as an individual per universal"""
        assert feedback_for(parse, "Every customer has a card.") == ["Every customer has [an individual] card."]


class TestDescribeTerm:

    def test_descriptions(self, atm_lexicon):
        """Test the words used for answer values"""
        kb = KnowledgeBase()
        kb.assimilate(
            clauses(
                'named(1,simplemat).', 'customer(2).', 'valid(2).',
                'card([1,X1]) :- customer(X1).',
            ),
            "setup"
        )
        assert describe_term(Const(1), kb, atm_lexicon) == 'SimpleMat'
        assert describe_term(Const(2), kb, atm_lexicon) == 'a valid customer'
        assert describe_term(Skolem(1, (Const(2),)), kb, atm_lexicon) == 'an individual card'
        assert describe_term(Const(7), kb, atm_lexicon) == '7'
