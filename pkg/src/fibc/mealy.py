"""Deterministic Mealy machines with a per-state final output word.

A machine reads a word left to right, emitting an output word of at most one
digit per transition, and contributes one extra word (depending on the state
it stops in) to be concatenated after the regular output.  Machines are
immutable once built; states are opaque strings, kept in breadth-first
discovery order from the initial state so that exports are deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class MissingTransitionError(ValueError):
    """A run hit a (state, symbol) pair with no transition."""

    def __init__(self, state: str, symbol: str, position: int):
        super().__init__(
            f"no transition from state {state!r} on input {symbol!r} "
            f"at position {position}"
        )
        self.state = state
        self.symbol = symbol
        self.position = position


class RunResult(NamedTuple):
    output: str       # concatenated per-transition outputs
    last_state: str
    final_output: str  # the last state's extra word

    @property
    def combined(self) -> str:
        """Output word with the final word appended."""
        return self.output + self.final_output


class TraceStep(NamedTuple):
    state: str
    symbol: str
    output: str
    next_state: str


@dataclass(frozen=True)
class MealyMachine:
    states: tuple[str, ...]
    initial: str
    input_alphabet: tuple[str, ...]
    output_alphabet: tuple[str, ...]
    transitions: dict[tuple[str, str], tuple[str, str]] = field(repr=False)
    final_words: dict[str, str] = field(repr=False)

    @classmethod
    def build(
        cls,
        states: Iterable[str],
        initial: str,
        transitions: Iterable[tuple[str, str, str, str]],
        final_words: dict[str, str],
        input_alphabet: Iterable[str] | None = None,
        output_alphabet: Iterable[str] | None = None,
    ) -> "MealyMachine":
        """Validate and assemble a machine from (src, input, output, dst)
        transition tuples; unreachable states are pruned.
        """
        declared = list(dict.fromkeys(states))
        known = set(declared)
        if initial not in known:
            raise ValueError(f"initial state {initial!r} not among the states")

        delta: dict[tuple[str, str], tuple[str, str]] = {}
        for src, symbol, output, dst in transitions:
            if src not in known or dst not in known:
                missing = src if src not in known else dst
                raise ValueError(f"transition uses unknown state {missing!r}")
            if len(symbol) != 1:
                raise ValueError(f"input symbol must be one digit, got {symbol!r}")
            if len(output) > 1:
                raise ValueError(f"transition output longer than one digit: {output!r}")
            if (src, symbol) in delta:
                raise ValueError(
                    f"nondeterministic: duplicate transition from {src!r} on {symbol!r}"
                )
            delta[(src, symbol)] = (dst, output)

        inputs = (sorted(dict.fromkeys(input_alphabet)) if input_alphabet is not None
                  else sorted({a for (_, a) in delta}))
        for (_, a) in delta:
            if a not in inputs:
                raise ValueError(f"transition input {a!r} outside declared alphabet")

        # Prune to the part reachable from the initial state, in BFS order.
        order = [initial]
        seen = {initial}
        queue = deque(order)
        while queue:
            s = queue.popleft()
            for a in inputs:
                hit = delta.get((s, a))
                if hit is not None and hit[0] not in seen:
                    seen.add(hit[0])
                    order.append(hit[0])
                    queue.append(hit[0])
        delta = {key: val for key, val in delta.items() if key[0] in seen}

        phi = {}
        for s in order:
            if s not in final_words:
                raise ValueError(f"no final output declared for state {s!r}")
            phi[s] = final_words[s]

        outputs = (sorted(dict.fromkeys(output_alphabet)) if output_alphabet is not None
                   else sorted({c for (_, out) in delta.values() for c in out}
                               | {c for w in phi.values() for c in w}))
        for (_, out) in delta.values():
            for c in out:
                if c not in outputs:
                    raise ValueError(f"transition output {out!r} outside declared alphabet")
        for w in phi.values():
            for c in w:
                if c not in outputs:
                    raise ValueError(f"final output {w!r} outside declared alphabet")

        return cls(
            states=tuple(order),
            initial=initial,
            input_alphabet=tuple(inputs),
            output_alphabet=tuple(outputs),
            transitions=delta,
            final_words=phi,
        )

    @property
    def transition_count(self) -> int:
        return len(self.transitions)

    def run(self, word: str, start: str | None = None) -> RunResult:
        """Read a word and return (output, last state, final word).

        Running the empty word stays in the start state and emits nothing.
        """
        state = self.initial if start is None else start
        if state not in self.final_words:
            raise ValueError(f"unknown start state {state!r}")
        pieces = []
        for position, symbol in enumerate(word):
            hit = self.transitions.get((state, symbol))
            if hit is None:
                raise MissingTransitionError(state, symbol, position)
            state, output = hit
            pieces.append(output)
        return RunResult("".join(pieces), state, self.final_words[state])

    def run_with_final(self, word: str, start: str | None = None) -> str:
        """Output word with the last state's extra word appended."""
        return self.run(word, start).combined

    def trace(self, word: str, start: str | None = None) -> list[TraceStep]:
        """Step-by-step path taken while reading a word."""
        state = self.initial if start is None else start
        if state not in self.final_words:
            raise ValueError(f"unknown start state {state!r}")
        steps = []
        for position, symbol in enumerate(word):
            hit = self.transitions.get((state, symbol))
            if hit is None:
                raise MissingTransitionError(state, symbol, position)
            nxt, output = hit
            steps.append(TraceStep(state, symbol, output, nxt))
            state = nxt
        return steps

    def sorted_transitions(self) -> list[tuple[str, str, str, str]]:
        """Transitions as (src, input, output, dst), in state order."""
        index = {s: i for i, s in enumerate(self.states)}
        items = [(src, a, out, dst) for (src, a), (dst, out) in self.transitions.items()]
        items.sort(key=lambda t: (index[t[0]], t[1]))
        return items

    def to_dot(self) -> str:
        """GraphViz digraph; edges labeled input/output, empty output shown
        as "eps", the initial state marked with an incoming arrow.
        """
        lines = [
            "digraph mealy {",
            "  rankdir=LR;",
            '  __start [shape=point, label=""];',
        ]
        for s in self.states:
            final = self.final_words[s] or "eps"
            lines.append(f'  "{s}" [shape=ellipse, label="{s}\\n{final}"];')
        lines.append(f'  __start -> "{self.initial}";')
        for src, a, out, dst in self.sorted_transitions():
            lines.append(f'  "{src}" -> "{dst}" [label="{a}/{out or "eps"}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "states": list(self.states),
            "initial": self.initial,
            "input_alphabet": list(self.input_alphabet),
            "output_alphabet": list(self.output_alphabet),
            "transitions": [
                {"from": src, "input": a, "output": out, "to": dst}
                for src, a, out, dst in self.sorted_transitions()
            ],
            "phi": {s: self.final_words[s] for s in self.states},
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "MealyMachine":
        doc = json.loads(text)  # JSONDecodeError carries line/column
        if not isinstance(doc, dict):
            raise ValueError("machine document must be a JSON object")
        for key in ("states", "initial", "input_alphabet", "output_alphabet",
                    "transitions", "phi"):
            if key not in doc:
                raise ValueError(f"machine document is missing key {key!r}")
        try:
            transitions = [
                (t["from"], t["input"], t["output"], t["to"])
                for t in doc["transitions"]
            ]
            return cls.build(
                states=doc["states"],
                initial=doc["initial"],
                transitions=transitions,
                final_words=dict(doc["phi"]),
                input_alphabet=doc["input_alphabet"],
                output_alphabet=doc["output_alphabet"],
            )
        except (TypeError, KeyError) as exc:
            raise ValueError(f"malformed machine document: {exc}") from exc

    def isomorphic_to(self, other: "MealyMachine") -> bool:
        """True iff some state renaming maps this machine onto the other,
        fixing the initial state and preserving transitions, outputs and
        final words.  Both machines keep only reachable states, so a single
        synchronized traversal from the initial pair decides this.
        """
        if set(self.input_alphabet) != set(other.input_alphabet):
            return False
        if set(self.output_alphabet) != set(other.output_alphabet):
            return False
        if len(self.states) != len(other.states):
            return False
        if self.final_words[self.initial] != other.final_words[other.initial]:
            return False
        pair = {self.initial: other.initial}
        reverse = {other.initial: self.initial}
        queue = deque([(self.initial, other.initial)])
        while queue:
            s, t = queue.popleft()
            for a in self.input_alphabet:
                mine = self.transitions.get((s, a))
                theirs = other.transitions.get((t, a))
                if (mine is None) != (theirs is None):
                    return False
                if mine is None:
                    continue
                (s2, out_s), (t2, out_t) = mine, theirs
                if out_s != out_t:
                    return False
                if s2 in pair or t2 in reverse:
                    if pair.get(s2) != t2 or reverse.get(t2) != s2:
                        return False
                    continue
                if self.final_words[s2] != other.final_words[t2]:
                    return False
                pair[s2] = t2
                reverse[t2] = s2
                queue.append((s2, t2))
        return len(pair) == len(self.states)


def machine_diff(a: MealyMachine, b: MealyMachine) -> list[str]:
    """Human-readable differences between two machines (empty if identical
    up to state order).  Compares by state name, not up to renaming.
    """
    diffs = []
    if set(a.states) != set(b.states):
        only_a = sorted(set(a.states) - set(b.states))
        only_b = sorted(set(b.states) - set(a.states))
        if only_a:
            diffs.append(f"states only in first: {', '.join(only_a)}")
        if only_b:
            diffs.append(f"states only in second: {', '.join(only_b)}")
    if a.initial != b.initial:
        diffs.append(f"initial states differ: {a.initial} vs {b.initial}")
    keys = set(a.transitions) | set(b.transitions)
    for key in sorted(keys):
        ta, tb = a.transitions.get(key), b.transitions.get(key)
        if ta != tb:
            src, sym = key
            diffs.append(f"transition ({src}, {sym}): {ta} vs {tb}")
    for s in sorted(set(a.final_words) & set(b.final_words)):
        if a.final_words[s] != b.final_words[s]:
            diffs.append(
                f"final word at {s}: {a.final_words[s]!r} vs {b.final_words[s]!r}"
            )
    return diffs
