"""The two concrete adders and the end-to-end addition pipelines.

`berstel_adder` rewrites a digit-wise sum of two Zeckendorf words (alphabet
0/1/2) into a binary word of equal Fibonacci value; `complement_adder` is the
same machine behind a fresh start state with three silent start transitions,
and preserves the complement value instead.  The transition table is
transcribed by hand and, as a guard against transcription slips, checked
against the independently derived machine the first time it is built.
"""

from __future__ import annotations

from functools import cache
from typing import NamedTuple

from .complement import canonicalize, fibc_rep, sum_words
from .fibonacci import fib_value, fibc_value
from .mealy import MealyMachine, machine_diff
from .zeckendorf import fib_rep, normalize_fib

# (state, input) -> output, next state.  State names are triple.carry.
_ADDER_TABLE = """
000.0 0/0 000.0   000.0 1/0 001.2   000.0 2/0 010.4
001.2 0/0 010.3   001.2 1/0 100.5   001.2 2/0 101.7
010.4 0/0 101.6   010.4 1/1 000.0   010.4 2/1 001.2
010.3 0/0 100.5   010.3 1/0 101.7   010.3 2/1 000.1
100.5 0/1 000.0   100.5 1/1 001.2   100.5 2/1 010.4
101.7 0/1 010.3   101.7 1/1 100.5   101.7 2/1 101.7
101.6 0/1 001.2   101.6 1/1 010.4   101.6 2/1 100.6
000.1 0/0 001.1   000.1 1/0 010.3   000.1 2/0 100.5
100.6 0/1 001.1   100.6 1/1 010.3   100.6 2/1 100.5
001.1 0/0 001.2   001.1 1/0 010.4   001.1 2/0 100.6
"""

START = "start"
_START_TRANSITIONS = (
    (START, "0", "", "000.0"),
    (START, "1", "", "101.7"),
    (START, "2", "", "100.6"),
)


def _parse_table() -> list[tuple[str, str, str, str]]:
    transitions = []
    fields = _ADDER_TABLE.split()
    for i in range(0, len(fields), 3):
        src, label, dst = fields[i : i + 3]
        symbol, output = label.split("/")
        transitions.append((src, symbol, output, dst))
    return transitions


def state_triple(state: str) -> str:
    """The three-digit part of an adder state name ("100.6" -> "100")."""
    return "000" if state == START else state.split(".")[0]


@cache
def berstel_adder() -> MealyMachine:
    """The 10-state adder for Fibonacci-value-preserving rewriting.

    Cross-checked against `derive_adder()` on first construction; a mismatch
    means the hardcoded table is corrupt and raises immediately.
    """
    transitions = _parse_table()
    states = sorted({t[0] for t in transitions})
    machine = MealyMachine.build(
        states=states,
        initial="000.0",
        transitions=transitions,
        final_words={s: state_triple(s) for s in states},
        input_alphabet="012",
        output_alphabet="01",
    )
    from .derivation import derive_adder

    derived = derive_adder()
    diffs = machine_diff(machine, derived)
    if diffs or not machine.isomorphic_to(derived):
        raise RuntimeError(
            "hardcoded adder disagrees with the derived one:\n" + "\n".join(diffs)
        )
    return machine


@cache
def complement_adder() -> MealyMachine:
    """The adder extended for the complement system: a fresh initial state
    with three silent transitions choosing the entry point by first digit.
    """
    base = berstel_adder()
    transitions = list(base.sorted_transitions()) + list(_START_TRANSITIONS)
    final_words = dict(base.final_words)
    final_words[START] = "000"
    return MealyMachine.build(
        states=(START, *base.states),
        initial=START,
        transitions=transitions,
        final_words=final_words,
        input_alphabet="012",
        output_alphabet="01",
    )


def add_fib(m: int, n: int) -> str:
    """Sum of two nonnegative integers, computed on Zeckendorf words: pad
    with leading zeros, add digit-wise, feed the adder, normalize.

    >>> add_fib(33, 25)
    '100000100'
    """
    if m < 0 or n < 0:
        raise ValueError("Fibonacci addition is defined for nonnegative integers")
    u, v = fib_rep(m), fib_rep(n)
    width = max(len(u), len(v))
    u, v = u.zfill(width), v.zfill(width)
    total = "".join(chr(ord(a) + ord(b) - 48) for a, b in zip(u, v))
    return normalize_fib(berstel_adder().run_with_final(total))


def add_fibc(m: int, n: int) -> str:
    """Sum of two integers, computed on complement words: pad with neutral
    prefixes, add digit-wise, feed the extended adder, canonicalize.

    >>> add_fibc(-1, -9)
    '1000100'
    """
    total = sum_words(fibc_rep(m), fibc_rep(n))
    return canonicalize(complement_adder().run_with_final(total))


def sub_fibc(m: int, n: int) -> str:
    """Difference of two integers as a complement word.

    >>> sub_fibc(3, 10)
    '1001001'
    """
    return add_fibc(m, -n)


class TableRow(NamedTuple):
    """One behavior-table row: a ternary word, its values under both systems,
    and what each adder turns it into (run output, final word)."""

    word: str
    fib_val: int
    fib_out: str
    fib_out_final: str
    fib_out_val: int
    fibc_val: int
    fibc_out: str
    fibc_out_final: str
    fibc_out_val: int


def adder_table(max_len: int = 3) -> list[TableRow]:
    """Rows for every ternary word of length 1..max_len in radix order;
    the default covers the 39 words of length up to three.
    """
    fib_machine = berstel_adder()
    fibc_machine = complement_adder()
    rows = []
    words = [""]
    for _ in range(max_len):
        words = [w + d for w in words for d in "012"]
        for word in words:
            fib_run = fib_machine.run(word)
            fibc_run = fibc_machine.run(word)
            rows.append(TableRow(
                word=word,
                fib_val=fib_value(word),
                fib_out=fib_run.output,
                fib_out_final=fib_run.final_output,
                fib_out_val=fib_value(fib_run.combined),
                fibc_val=fibc_value(word),
                fibc_out=fibc_run.output,
                fibc_out_final=fibc_run.final_output,
                fibc_out_val=fibc_value(fibc_run.combined),
            ))
    return rows


_TABLE_HEADER = ("word", "fib_value", "fib_adder", "fib_adder_value",
                 "fibc_value", "signed_adder", "signed_adder_value")


def _row_cells(row: TableRow) -> tuple[str, ...]:
    return (
        row.word,
        str(row.fib_val),
        f"{row.fib_out or 'eps'}·{row.fib_out_final}",
        str(row.fib_out_val),
        str(row.fibc_val),
        f"{row.fibc_out or 'eps'}·{row.fibc_out_final}",
        str(row.fibc_out_val),
    )


def format_table_text(rows: list[TableRow]) -> str:
    """Aligned plain-text rendering with a header line."""
    cells = [_TABLE_HEADER] + [_row_cells(r) for r in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(_TABLE_HEADER))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
             for line in cells]
    return "\n".join(lines) + "\n"


def format_table_csv(rows: list[TableRow]) -> str:
    lines = [",".join(_TABLE_HEADER)]
    lines += [",".join(_row_cells(r)) for r in rows]
    return "\n".join(lines) + "\n"
