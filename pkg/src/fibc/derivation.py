"""First-principles construction of the Fibonacci adder.

Every ternary word u translates canonically into a binary word of the same
length plus a pending three-digit tail with the same Fibonacci value; the
translation extends digit by digit, and the pair (pending tail, carry) where
the carry is an integer bounded by the construction classifies words with
identical future behavior.  Exploring those classes from the empty word
yields a 10-state transducer; `translate_word` is the brute-force oracle the
exploration is checked against.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, NamedTuple

from .fibonacci import fib_value
from .mealy import MealyMachine

# The five binary triples without adjacent ones, listed by Fibonacci value:
# fib_value(TRIPLES[i]) == i, and fib_value("1" + TRIPLES[i]) == 5 + i.
TRIPLES = ("000", "001", "010", "100", "101")
TRIPLE_VALUE = {t: i for i, t in enumerate(TRIPLES)}


class CarryRangeError(ValueError):
    """A carry left the closed range 0..7 during exploration."""


class CarryState(NamedTuple):
    """Adder state: the pending output triple and the integer carry."""

    triple: str
    carry: int

    @property
    def name(self) -> str:
        return f"{self.triple}.{self.carry}"


class Translation(NamedTuple):
    output: str    # binary word, same length as the input
    triple: str    # pending three-digit tail
    lambdas: str   # per-step emitted digits (concatenation equals output)


def translate_word(u: str) -> Translation:
    """Canonical translation of a ternary word, found by brute force.

    Starting from (empty output, tail "000"), each input digit extends the
    output by the unique digit b and replaces the tail by the unique triple t
    keeping the Fibonacci values equal.  Raises if the candidate search does
    not come back with exactly one solution.
    """
    w, s = "", "000"
    lambdas = []
    for i in range(len(u)):
        target = fib_value(u[: i + 1])
        matches = [
            (b, t)
            for b in "01"
            for t in TRIPLES
            if fib_value(w + b + t) == target
        ]
        if len(matches) != 1:
            raise RuntimeError(
                f"expected exactly one extension for {u[: i + 1]!r}, "
                f"found {len(matches)}"
            )
        b, s = matches[0]
        w += b
        lambdas.append(b)
    return Translation(w, s, "".join(lambdas))


def translate_tree(max_len: int) -> Iterator[tuple[str, Translation]]:
    """Yield (word, translation) for every nonempty ternary word of length
    <= max_len, sharing the prefix work along the ternary trie.  Performs
    the same brute-force candidate search as translate_word at each node.
    """
    if max_len < 1:
        return

    def expand(u: str, w: str) -> Iterator[tuple[str, Translation]]:
        for a in "012":
            ua = u + a
            target = fib_value(ua)
            matches = [
                (b, t)
                for b in "01"
                for t in TRIPLES
                if fib_value(w + b + t) == target
            ]
            if len(matches) != 1:
                raise RuntimeError(
                    f"expected exactly one extension for {ua!r}, "
                    f"found {len(matches)}"
                )
            b, t = matches[0]
            yield ua, Translation(w + b, t, w + b)
            if len(ua) < max_len:
                yield from expand(ua, w + b)

    yield from expand("", "")


def carry(u: str) -> int:
    """The integer carried by the translation of u: for u = va with final
    digit a, the tail values of v and u plus the input digit, minus three
    per emitted 1.  The empty word carries 0.
    """
    if not u:
        return 0
    prev = translate_word(u[:-1])
    cur = translate_word(u)
    a = ord(u[-1]) - 48
    lam = ord(cur.lambdas[-1]) - 48
    return TRIPLE_VALUE[prev.triple] + TRIPLE_VALUE[cur.triple] - 3 * lam + a


def step(state: CarryState, symbol: str) -> tuple[CarryState, str]:
    """Successor class and emitted digit for one input digit.

    The carry plus the input digit lies in 0..9 and decodes uniquely as
    (emitted digit, next tail); the next carry must stay in 0..7, which is
    exactly the finiteness claim the exploration verifies.
    """
    if not 0 <= state.carry <= 7:
        raise ValueError(f"carry {state.carry} outside 0..7")
    if state.triple not in TRIPLE_VALUE:
        raise ValueError(f"unknown triple {state.triple!r}")
    if symbol not in "012":
        raise ValueError(f"input digit must be 0, 1 or 2, got {symbol!r}")
    a = ord(symbol) - 48
    emitted, tail_value = divmod(state.carry + a, 5)
    triple = TRIPLES[tail_value]
    next_carry = TRIPLE_VALUE[state.triple] + tail_value - 3 * emitted + a
    if not 0 <= next_carry <= 7:
        raise CarryRangeError(
            f"carry {next_carry} outside 0..7 after ({state.name}, {symbol})"
        )
    return CarryState(triple, next_carry), str(emitted)


def derive_adder() -> MealyMachine:
    """Build the adder by breadth-first closure of the carry classes
    reachable from ("000", 0); must come out with 10 states, each carry
    staying within 0..7.
    """
    start = CarryState("000", 0)
    order = [start]
    seen = {start}
    transitions = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for symbol in "012":
            nxt, emitted = step(state, symbol)
            transitions.append((state.name, symbol, emitted, nxt.name))
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    if len(order) != 10:
        raise RuntimeError(f"expected 10 reachable classes, found {len(order)}")
    return MealyMachine.build(
        states=[s.name for s in order],
        initial=start.name,
        transitions=transitions,
        final_words={s.name: s.triple for s in order},
        input_alphabet="012",
        output_alphabet="01",
    )


class AppendZeroReport(NamedTuple):
    """Outcome of the append-a-zero difference checks."""

    pairs_checked: tuple[int, int, int]
    counterexamples: list[tuple[str, str, str, int]]  # (part, u, w, difference)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_append_zero(max_len: int) -> AppendZeroReport:
    """Exhaustively verify how appending a trailing zero moves the values of
    equal-value ternary words apart:

      (i)   equal even length, equal value: u0 and w0 differ by at most 1;
      (ii)  value of u equals value of w000: u0 minus w0000 is 0 or +1;
      (iii) value of u equals value of w101: u0 minus w1010 is -1 or 0.

    The pairing is cubic in the number of words, hence the small cap.
    """
    if not 1 <= max_len <= 9:
        raise ValueError("max_len must be between 1 and 9")

    def words_of(length: int) -> list[str]:
        out = [""]
        for _ in range(length):
            out = [w + d for w in out for d in "012"]
        return out

    by_len_value: dict[int, dict[int, list[str]]] = {}
    appended: dict[str, int] = {}
    for length in range(0, max_len + 1):
        groups: dict[int, list[str]] = {}
        for w in words_of(length):
            groups.setdefault(fib_value(w), []).append(w)
            appended[w] = fib_value(w + "0")
        by_len_value[length] = groups

    counterexamples = []
    checked_i = 0
    for length in range(2, max_len + 1, 2):
        for group in by_len_value[length].values():
            for u in group:
                for w in group:
                    checked_i += 1
                    if appended[u] - appended[w] not in (-1, 0, 1):
                        counterexamples.append(("i", u, w, appended[u] - appended[w]))

    checked_ii = checked_iii = 0
    for length in range(3, max_len + 1):
        groups = by_len_value[length]
        for w in words_of(length - 3):
            target = fib_value(w + "000")
            for u in groups.get(target, ()):
                checked_ii += 1
                diff = appended[u] - fib_value(w + "0000")
                if diff not in (0, 1):
                    counterexamples.append(("ii", u, w, diff))
            target = fib_value(w + "101")
            for u in groups.get(target, ()):
                checked_iii += 1
                diff = appended[u] - fib_value(w + "1010")
                if diff not in (-1, 0):
                    counterexamples.append(("iii", u, w, diff))

    return AppendZeroReport((checked_i, checked_ii, checked_iii), counterexamples)
