import logging
import random

import pytest

from spec_system.drs import (
    Atomic, Drs, Equality, Gender, IfThen, Negation, Number, Referent, accessible_referents, equivalences, merge,
    render_box, simplify, sub_drs_at, undeclared_referents
)
from spec_system.exceptions import DuplicateReferent

X1, X2, X3, X4 = (Referent(i) for i in range(1, 5))


def conditional() -> Drs:
    antecedent = Drs((X2,), (Atomic('customer', (X2,)),))
    consequent = Drs((X3,), (Atomic('card', (X3,)), Atomic('have', (X2, X3))))
    return Drs((X1,), (Atomic('named', (X1, 'simplemat')), IfThen(antecedent, consequent)))


class TestMergeAndAccess:
    def test_merge_keeps_sentence_order(self):
        """Test that merging appends referents and conditions."""
        k = Drs((X1,), (Atomic('money_dispenser', (X1,)),))
        merged = merge(k, Drs((X2,), (Atomic('user_interface', (X2,)),)))
        assert [r.id for r in merged.referents] == [1, 2]
        assert str(merged.conditions[-1]) == 'user_interface(X2)'

    def test_merge_rejects_redeclared_referent(self):
        """Test that an increment may not redeclare a referent."""
        with pytest.raises(DuplicateReferent):
            merge(Drs((X1,)), Drs((X1,)))

    def test_consequent_sees_antecedent(self):
        """Test accessibility from a consequent: own box, antecedent, then outer boxes."""
        path = ((1, 'consequent'),)
        assert [r.id for r in accessible_referents(conditional(), path)] == [3, 2, 1]

    def test_top_level_does_not_see_subordinate_boxes(self):
        """Test that referents inside a conditional are not accessible from outside."""
        assert [r.id for r in accessible_referents(conditional())] == [1]

    def test_sub_drs_at(self):
        """Test addressing a box by its path."""
        assert sub_drs_at(conditional(), ((1, 'antecedent'),)).referents == (X2,)
        with pytest.raises(ValueError):
            sub_drs_at(conditional(), ((0, 'antecedent'),))

    def test_undeclared_referents(self):
        """Test that a referent used outside its scope is reported."""
        k = conditional().with_conditions(Atomic('valid', (X3,)))
        assert undeclared_referents(k) == {3}


class TestSimplify:
    def test_equalities_keep_outermost_earliest_referent(self):
        """Test the survivor of an equality class."""
        k = Drs((X1, X2, X3), (Equality(X3, X1), Equality(X2, X3, copula=True)))
        assert equivalences(k) == {1: 1, 2: 1, 3: 1}

    def test_undeclared_referent_is_outermost(self):
        """Test that a referent of an earlier sentence survives within an increment."""
        k = Drs((X3, X4), (Equality(X3, X1), Atomic('have', (X3, X4))))
        assert equivalences(k)[3] == 1
        assert str(simplify(k)) == 'drs([X4], [have(X1,X4)])'

    def test_drops_agreement_and_duplicates(self):
        """Test that gender, number and repeated conditions disappear."""
        k = Drs((X1, X2), (
            Gender(X1, frozenset({'n'})), Number(X1, 'sg'), Atomic('named', (X1, 'simplemat')),
            Atomic('money_dispenser', (X2,)), Atomic('simple', (X2,)), Equality(X1, X2, copula=True),
            Atomic('simple', (X1,)),
        ))
        assert str(simplify(k)) == 'drs([X1], [named(X1,simplemat), money_dispenser(X1), simple(X1)])'

    def test_result_is_logged(self, caplog):
        """Test that the simplified DRS is logged at debug level."""
        k = Drs((X3, X4), (Equality(X3, X1), Atomic('have', (X3, X4))))
        with caplog.at_level(logging.DEBUG, logger='spec_system.drs.operations'):
            simplify(k)
        assert 'simplified DRS: drs([X4], [have(X1,X4)])' in caplog.text

    def test_consequent_repeating_antecedent_is_dropped(self):
        """Test that a consequent condition already in its antecedent is removed."""
        antecedent = Drs((X1,), (Atomic('customer', (X1,)),))
        consequent = Drs((), (Atomic('customer', (X1,)), Atomic('known', (X1,))))
        simplified = simplify(Drs((), (IfThen(antecedent, consequent),)))
        assert simplified.conditions[0].consequent.conditions == (Atomic('known', (X1,)),)

    def test_idempotent_on_parsed_corpus(self, parse, generated_sentences):
        """Test simplify(simplify(k)) == simplify(k) for generated sentences."""
        for sentence in generated_sentences:
            once = simplify(parse(sentence).drs_increment)
            assert simplify(once) == once, sentence

    def test_idempotent_on_random_equalities(self):
        """Test idempotence on random flat boxes with equality chains."""
        rng = random.Random(3)
        referents = [Referent(i) for i in range(1, 7)]
        for _ in range(200):
            conditions = []
            for _ in range(rng.randint(1, 8)):
                left, right = rng.sample(referents, 2)
                if rng.random() < 0.4:
                    conditions.append(Equality(left, right))
                else:
                    conditions.append(Atomic(rng.choice(('card', 'code', 'valid')), (left,)))
            k = Drs(tuple(referents), tuple(conditions))
            once = simplify(k)
            assert simplify(once) == once


class TestRender:
    def test_render_box(self):
        """Test the indented box form of a conditional."""
        lines = render_box(conditional()).splitlines()
        assert lines[0] == '[X1]'
        assert '  IF' in lines and '  THEN' in lines
        assert lines[-1].strip() == 'have(X2,X3)'

    def test_negation_term(self):
        """Test the term form of a negated box."""
        k = Drs((X1,), (Negation(Drs((), (Atomic('blocked', (X1,)),))),))
        assert str(k) == 'drs([X1], [not(drs([], [blocked(X1)]))])'
