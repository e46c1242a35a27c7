from fibc.adders import berstel_adder
from fibc.mealy import MealyMachine
from fibc import verify


def corrupted_adder():
    """The plain adder with a single transition rerouted."""
    m = berstel_adder()
    transitions = []
    for src, a, out, dst in m.sorted_transitions():
        if (src, a) == ("010.4", "1"):
            dst = "001.2"  # correct target is 000.0
        transitions.append((src, a, out, dst))
    return MealyMachine.build(
        states=m.states, initial=m.initial, transitions=transitions,
        final_words=dict(m.final_words),
    )


def test_all_checks_pass_at_small_depth():
    results = verify.run_checks(4)
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]


def test_depth_zero_is_vacuous_pass():
    results = verify.run_checks(0)
    assert all(r.ok for r in results)
    identities = next(r for r in results if r.name == "fibonacci identities")
    assert identities.checked == 1  # only k = 1


def test_corrupted_machine_is_caught_with_counterexample():
    result = verify.fib_adder_value_check(4, machine=corrupted_adder())
    assert not result.ok
    assert "counterexample" in result.detail
    # The reported word must actually witness the failure.
    word = result.detail.split()[-1]
    bad = corrupted_adder().run_with_final(word)
    from fibc.fibonacci import fib_value
    assert fib_value(bad) != fib_value(word)


def test_check_lines_are_printable():
    for result in verify.run_checks(2):
        line = result.line()
        assert result.name in line
        assert line.startswith("ok") or line.startswith("FAIL")
