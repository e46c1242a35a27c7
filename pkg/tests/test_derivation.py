from itertools import product

import pytest

from fibc.adders import berstel_adder
from fibc.derivation import (CarryRangeError, CarryState, TRIPLES,
                             check_append_zero, carry, derive_adder, step,
                             translate_tree, translate_word)
from fibc.fibonacci import fib_value


def test_triples_are_value_ordered():
    assert TRIPLES == ("000", "001", "010", "100", "101")
    assert [fib_value(t) for t in TRIPLES] == [0, 1, 2, 3, 4]
    assert [fib_value("1" + t) for t in TRIPLES] == [5, 6, 7, 8, 9]


def test_translate_examples():
    assert translate_word("2")[:2] == ("0", "010")
    assert translate_word("10")[:2] == ("00", "010")
    assert translate_word("22")[:2] == ("01", "001")
    assert translate_word("") == ("", "000", "")


def test_translate_invariants():
    for length in range(0, 6):
        for tup in product("012", repeat=length):
            u = "".join(tup)
            w, s, lambdas = translate_word(u)
            assert len(w) == len(u)
            assert lambdas == w
            assert fib_value(u) == fib_value(w + s)


def test_translate_tree_matches_translate_word():
    seen = 0
    for word, tr in translate_tree(5):
        seen += 1
        assert tr == translate_word(word)
    assert seen == sum(3 ** k for k in range(1, 6))


def test_carry_examples():
    assert carry("") == 0
    assert carry("2") == 4
    assert carry("22") == 2


def test_carry_matches_state_names():
    adder = derive_adder()
    for length in range(0, 6):
        for tup in product("012", repeat=length):
            u = "".join(tup)
            run = adder.run(u)
            triple, value = run.last_state.split(".")
            assert translate_word(u).triple == triple
            assert carry(u) == int(value)


def test_step_examples():
    nxt, emitted = step(CarryState("000", 0), "2")
    assert (nxt, emitted) == (CarryState("010", 4), "0")
    nxt, emitted = step(CarryState("010", 4), "2")
    assert (nxt, emitted) == (CarryState("001", 2), "1")
    nxt, emitted = step(CarryState("101", 7), "1")
    assert (nxt, emitted) == (CarryState("100", 5), "1")


def test_step_rejects_bad_input():
    with pytest.raises(ValueError):
        step(CarryState("000", 9), "0")
    with pytest.raises(ValueError):
        step(CarryState("011", 0), "0")
    with pytest.raises(ValueError):
        step(CarryState("000", 0), "3")


def test_step_range_violation_on_unreachable_class():
    with pytest.raises(CarryRangeError):
        step(CarryState("101", 4), "0")


def test_derive_shape():
    m = derive_adder()
    assert len(m.states) == 10
    assert m.transition_count == 30
    assert all(0 <= int(s.split(".")[1]) <= 7 for s in m.states)


def test_derive_equals_hardcoded():
    derived = derive_adder()
    hardcoded = berstel_adder()
    assert derived.isomorphic_to(hardcoded)
    assert derived.transitions == hardcoded.transitions
    assert derived.final_words == hardcoded.final_words


def test_derived_machine_computes_translation():
    m = derive_adder()
    for word, tr in translate_tree(6):
        run = m.run(word)
        assert run.output == tr.output
        assert run.final_output == tr.triple


def test_equivalent_classes_behave_equally_at_depth_6():
    from fibc.verify import class_inheritance_check

    result = class_inheritance_check(6)
    assert result.ok and result.checked == sum(3 ** k for k in range(7))


def test_equivalent_words_have_equal_children():
    groups = {}
    for length in range(0, 6):
        for tup in product("012", repeat=length):
            u = "".join(tup)
            key = (translate_word(u).triple, carry(u))
            children = tuple(
                (translate_word(u + a).output[-1], translate_word(u + a).triple,
                 carry(u + a))
                for a in "012"
            )
            if key in groups:
                assert groups[key] == children, u
            groups[key] = children
    assert len(groups) == 10


def test_append_zero_spot_cases():
    # u = "10", w = "02" share value 2; appending 0 moves them 1 apart.
    assert fib_value("10") == fib_value("02") == 2
    assert fib_value("100") - fib_value("020") == -1
    # u = w gives difference 0; the w = empty corner of part (ii) also holds.
    assert fib_value("0000") - fib_value("0000") == 0


def test_append_zero_exhaustive():
    report = check_append_zero(8)
    assert report.ok
    assert all(count > 0 for count in report.pairs_checked)


def test_append_zero_rejects_bad_depth():
    with pytest.raises(ValueError):
        check_append_zero(10)
    with pytest.raises(ValueError):
        check_append_zero(0)
