"""Canonical Zeckendorf representations of the nonnegative integers.

A canonical word has no "11" factor and no leading zero; the empty word
represents 0.  fib_rep and fib_value are mutually inverse between canonical
words and the nonnegative integers, and fib_rep is increasing for the radix
order (shorter first, then lexicographic).
"""

from __future__ import annotations

from .fibonacci import _FIBS, _check_word, _extend_to_value, fib_value


def fib_rep(n: int) -> str:
    """Canonical Fibonacci word of a nonnegative integer, by the greedy
    algorithm: repeatedly subtract the largest Fibonacci number that fits.

    >>> fib_rep(0)
    ''
    >>> fib_rep(20)
    '101010'
    """
    if n < 0:
        raise ValueError(f"no Fibonacci representation for negative {n}")
    if n == 0:
        return ""
    _extend_to_value(n)
    k = len(_FIBS) - 1
    while _FIBS[k] > n:
        k -= 1
    digits = []
    rem = n
    for i in range(k, -1, -1):
        if _FIBS[i] <= rem:
            rem -= _FIBS[i]
            digits.append("1")
        else:
            digits.append("0")
    return "".join(digits)


def is_zeckendorf(w: str) -> bool:
    """True iff the binary word is canonical: no "11" factor, no leading zero.

    >>> is_zeckendorf("10101"), is_zeckendorf("011"), is_zeckendorf("")
    (True, False, True)
    """
    _check_word(w, "01", "binary")
    return "11" not in w and not w.startswith("0")


def cmp_radix(u: str, v: str) -> int:
    """Radix-order comparison: by length, ties broken lexicographically.
    Returns a negative, zero or positive int as u is below, equal or above v.
    """
    if len(u) != len(v):
        return -1 if len(u) < len(v) else 1
    if u == v:
        return 0
    return -1 if u < v else 1


def radix_key(w: str) -> tuple[int, str]:
    """Sort key realizing the radix order."""
    return (len(w), w)


def normalize_fib(w: str) -> str:
    """Canonical word with the same Fibonacci value as a ternary word.

    Goes through the integer value rather than digit rewriting; a single
    one-pass transducer cannot do this job.

    >>> normalize_fib("2")
    '10'
    """
    return fib_rep(fib_value(w))
