import json
import random

import pytest

from fibc.adders import berstel_adder, complement_adder
from fibc.mealy import (MealyMachine, MissingTransitionError, machine_diff)


def tiny_machine(**overrides):
    kwargs = dict(
        states=["a", "b"],
        initial="a",
        transitions=[
            ("a", "0", "0", "a"),
            ("a", "1", "1", "b"),
            ("b", "0", "1", "a"),
            ("b", "1", "0", "b"),
        ],
        final_words={"a": "", "b": "1"},
    )
    kwargs.update(overrides)
    return MealyMachine.build(**kwargs)


def test_build_accepts_valid_machine():
    m = tiny_machine()
    assert m.states == ("a", "b")
    assert m.transition_count == 4
    assert m.input_alphabet == ("0", "1")


def test_build_rejects_duplicate_transition():
    with pytest.raises(ValueError, match="nondeterministic"):
        tiny_machine(transitions=[
            ("a", "0", "0", "a"),
            ("a", "0", "1", "b"),
        ])


def test_build_rejects_unknown_state():
    with pytest.raises(ValueError, match="unknown state"):
        tiny_machine(transitions=[("a", "0", "0", "zz")])


def test_build_rejects_long_output():
    with pytest.raises(ValueError, match="longer than one digit"):
        tiny_machine(transitions=[("a", "0", "01", "a")])


def test_build_rejects_missing_final_word():
    with pytest.raises(ValueError, match="final output"):
        tiny_machine(final_words={"a": ""})


def test_build_prunes_unreachable_states():
    m = tiny_machine(
        states=["a", "b", "orphan"],
        final_words={"a": "", "b": "1", "orphan": "0"},
    )
    assert "orphan" not in m.states
    assert len(m.states) == 2


def test_run_and_empty_run():
    adder = berstel_adder()
    result = adder.run("2010202")
    assert result.output == "0010110"
    assert result.last_state == "100.6"
    assert result.final_output == "100"
    empty = adder.run("")
    assert empty == ("", "000.0", "000")

    signed = complement_adder()
    result = signed.run("2010202")
    assert result.output == "100110"
    assert result.last_state == "100.6"
    assert result.final_output == "100"
    assert signed.run("") == ("", "start", "000")


def test_run_with_final():
    assert berstel_adder().run_with_final("2220121") == "0101011" + "100"
    assert complement_adder().run_with_final("2220121") == "110110100"
    assert complement_adder().run_with_final("1") == "101"


def test_run_missing_transition_reports_position():
    m = tiny_machine(transitions=[("a", "0", "0", "a"), ("a", "1", "1", "b")])
    with pytest.raises(MissingTransitionError) as err:
        m.run("0010")
    assert err.value.position == 3
    assert err.value.state == "b"


def test_trace():
    steps = berstel_adder().trace("2")
    assert steps == [("000.0", "2", "0", "010.4")]
    steps = complement_adder().trace("2")
    assert steps == [("start", "2", "", "100.6")]
    assert complement_adder().trace("") == []


def test_trace_concatenates_to_run_output():
    adder = berstel_adder()
    for word in ("2220121", "2010202", "0001112", "222222"):
        steps = adder.trace(word)
        assert "".join(s.output for s in steps) == adder.run(word).output


def test_run_composes_across_split_points():
    rng = random.Random(7)
    for machine in (berstel_adder(), complement_adder()):
        for _ in range(300):
            total = rng.randrange(0, 13)
            cut = rng.randrange(0, total + 1)
            u = "".join(rng.choice("012") for _ in range(cut))
            v = "".join(rng.choice("012") for _ in range(total - cut))
            whole = machine.run(u + v)
            first = machine.run(u)
            second = machine.run(v, start=first.last_state)
            assert whole.output == first.output + second.output
            assert whole.last_state == second.last_state


def test_dot_export():
    dot = berstel_adder().to_dot()
    assert '"000.0" -> "010.4" [label="2/0"];' in dot
    assert "__start" in dot
    t_dot = complement_adder().to_dot()
    assert 'label="2/eps"' in t_dot


def test_json_round_trip_is_isomorphic():
    from fibc.derivation import derive_adder

    for machine in (berstel_adder(), complement_adder(), derive_adder()):
        again = MealyMachine.from_json(machine.to_json())
        assert again.isomorphic_to(machine)
        assert machine_diff(machine, again) == []


def test_json_schema_fields():
    doc = json.loads(berstel_adder().to_json())
    assert set(doc) == {"states", "initial", "input_alphabet",
                        "output_alphabet", "transitions", "phi"}
    assert doc["initial"] == "000.0"
    assert len(doc["states"]) == 10
    assert len(doc["transitions"]) == 30
    assert set(doc["transitions"][0]) == {"from", "input", "output", "to"}
    assert doc["phi"]["101.7"] == "101"


def test_import_rejects_malformed_documents():
    with pytest.raises(ValueError):
        MealyMachine.from_json("{}")
    with pytest.raises(ValueError):
        MealyMachine.from_json("not json at all {")
    with pytest.raises(ValueError):
        MealyMachine.from_json('{"states": 3}')


def test_isomorphic_under_renaming():
    m = berstel_adder()
    renamed = MealyMachine.build(
        states=[f"q{i}" for i in range(len(m.states))],
        initial=f"q{m.states.index(m.initial)}",
        transitions=[
            (f"q{m.states.index(src)}", a, out, f"q{m.states.index(dst)}")
            for src, a, out, dst in m.sorted_transitions()
        ],
        final_words={f"q{m.states.index(s)}": m.final_words[s] for s in m.states},
    )
    assert renamed.isomorphic_to(m)
    assert m.isomorphic_to(renamed)


def test_not_isomorphic_different_shapes():
    assert not berstel_adder().isomorphic_to(complement_adder())
    assert not complement_adder().isomorphic_to(berstel_adder())


def test_not_isomorphic_after_output_flip():
    m = berstel_adder()
    flipped = [(src, a, "1" if out == "0" else "0", dst)
               for src, a, out, dst in m.sorted_transitions()]
    other = MealyMachine.build(
        states=m.states, initial=m.initial, transitions=flipped,
        final_words=dict(m.final_words),
    )
    assert not m.isomorphic_to(other)
    assert machine_diff(m, other)
