import pytest

from spec_system.exceptions import AmbiguitySet, EmptyInput, ParseError, UnknownWord
from spec_system.parser import parse_sentence, reading_paraphrase, sentence_text, tokenize


class TestTokenize:
    def test_words_and_terminator(self):
        """Test that a sentence splits into word tokens and its terminator."""
        sentences = tokenize("SimpleMat is a simple money dispenser.")
        assert len(sentences) == 1
        kinds = [token.kind for token in sentences[0]]
        assert kinds.count('word') == 6 and kinds[-1] == 'punct'

    def test_hyphenated_word_is_one_token(self):
        """Test that a hyphenated word stays a single token."""
        tokens = tokenize("If the trap-door-algorithm calculates a number then the number equals the check code.")[0]
        assert 'trap-door-algorithm' in [token.text for token in tokens]

    def test_several_sentences(self):
        """Test that one line may hold several sentences with their positions."""
        sentences = tokenize("SimpleMat checks a card. Is it valid?")
        assert len(sentences) == 2
        assert sentences[1][0].position == (1, 0)
        assert sentence_text(sentences[1]) == "Is it valid?"

    def test_numbers(self):
        """Test integer and decimal number tokens."""
        tokens = tokenize("The amount is bigger than 2.5.")[0]
        assert [token.text for token in tokens if token.kind == 'number'] == ['2.5']

    def test_empty_input(self):
        """Test that blank text raises EmptyInput."""
        with pytest.raises(EmptyInput):
            tokenize("   ")


class TestParseSentence:
    def test_copula_sentence_increment(self, parse):
        """Test the increment of a name described by an indefinite."""
        result = parse("SimpleMat is a simple money dispenser.")
        assert result.mood == 'declarative'
        assert str(result.drs_increment) == (
            "drs([X1,X2], [gender(X1,n), number(X1,sg), named(X1,simplemat), "
            "gender(X2,n), number(X2,sg), money_dispenser(X2), simple(X2), is(X1,X2)])"
        )
        assert result.next_referent == 3

    def test_universal_increment(self, parse):
        """Test the conditional increment of a universal sentence with its agreement conditions."""
        result = parse("Every customer has a card.")
        assert str(result.drs_increment) == (
            "drs([], [ifthen(drs([X1], [gender(X1,[m,f]), number(X1,sg), customer(X1)]), "
            "drs([X2,X1], [gender(X2,n), number(X2,sg), card(X2), have(X1,X2)]))])"
        )

    def test_first_referent_offset(self, parse):
        """Test that referent numbering starts at the given number."""
        result = parse("It has a user interface.", first_referent=3)
        assert [referent.id for referent in result.drs_increment.referents] == [3, 4]
        assert result.placeholders[0].kind == 'pronoun'

    def test_wh_query(self, parse):
        """Test that a wh-question gets a query variable for its wh-word."""
        result = parse("Who is a money dispenser?")
        assert result.mood == 'wh-query'
        assert [word for _, word in result.wh_vars] == ['who']
        assert 'gender(X1,[m,f])' in str(result.drs_increment)

    def test_yes_no_query(self, parse):
        """Test do-support questions."""
        result = parse("Does SimpleMat have a simple user interface?")
        assert result.mood == 'yes-no-query'
        assert 'have(X1,X2)' in str(result.drs_increment)

    def test_negation(self, parse):
        """Test that 'does not' puts the verb phrase in a negated box."""
        result = parse("SimpleMat does not accept a blocked card.")
        assert str(result.drs_increment).count('not(') == 1
        assert result.verb_events[0].negated

    def test_relative_clause(self, parse):
        """Test a subject relative clause on the antecedent of a universal."""
        result = parse("Every customer who has a card enters a code.")
        assert 'have(X1,X2)' in str(result.drs_increment.conditions[0].antecedent)

    def test_and_then_orders_events(self, parse):
        """Test that and-then members get increasing slots."""
        result = parse("The customer enters the card and then SimpleMat checks the card.")
        assert [event.slot for event in result.verb_events] == [0, 1]
        assert all(event.kind == 'event' for event in result.verb_events)

    def test_progressive_is_state(self, parse):
        """Test that a progressive verb phrase describes a state."""
        result = parse("SimpleMat is checking the card.")
        assert result.aspect == 'progressive'
        assert result.verb_events[0].kind == 'state'


class TestParseErrors:
    def test_parse_error_position(self, atm_lexicon):
        """Test that the error names the first token no rule covers."""
        with pytest.raises(ParseError) as error:
            parse_sentence(tokenize("Customer the enters.")[0], atm_lexicon)
        assert error.value.token_number == 2
        assert error.value.token == 'the'

    def test_unknown_word(self, atm_lexicon):
        """Test that a word missing from the lexicon raises UnknownWord with its position."""
        with pytest.raises(UnknownWord) as error:
            parse_sentence(tokenize("SimpleMat swallows the card.")[0], atm_lexicon)
        assert error.value.word == 'swallows'
        assert error.value.position == (0, 1)

    def test_determiner_required(self, atm_lexicon):
        """Test that a bare noun phrase is rejected."""
        with pytest.raises(ParseError) as error:
            parse_sentence(tokenize("SimpleMat checks card.")[0], atm_lexicon)
        assert 'determiner' in str(error.value)

    def test_one_quantifier_per_sentence(self, atm_lexicon):
        """Test that two universals in one sentence are rejected."""
        with pytest.raises(ParseError):
            parse_sentence(tokenize("Every customer enters every card.")[0], atm_lexicon)

    def test_mixed_coordination_is_ambiguous(self, atm_lexicon):
        """Test that mixing 'and' with 'or' yields one reading per grouping."""
        text = "SimpleMat checks a card or SimpleMat rejects a card and SimpleMat prints a receipt."
        with pytest.raises(AmbiguitySet) as error:
            parse_sentence(tokenize(text)[0], atm_lexicon)
        assert len(error.value.readings) == 2
        paraphrases = {reading_paraphrase(reading) for reading in error.value.readings}
        assert len(paraphrases) == 2
