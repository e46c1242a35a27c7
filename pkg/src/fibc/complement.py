"""The Fibonacci's-complement numeration system for the signed integers.

Canonical words form the language of odd-length binary words with no "11"
factor that do not start with "000" or "101".  fibc_rep and fibc_value are
mutually inverse between that language and the integers.  Words starting
with 1 represent the negatives, words starting with 0 the nonnegatives;
"00" and "10" act as value-neutral padding prefixes, which is what makes
equal-length alignment (and hence digit-wise addition) possible.
"""

from __future__ import annotations

from itertools import product

from .fibonacci import _check_word, fib, fibc_value
from .zeckendorf import fib_rep


def is_canonical(w: str) -> bool:
    """True iff the binary word is a canonical complement representation.

    >>> is_canonical("0010001"), is_canonical("00010"), is_canonical("10")
    (True, False, False)
    """
    _check_word(w, "01", "binary")
    return (len(w) % 2 == 1
            and "11" not in w
            and not w.startswith("000")
            and not w.startswith("101"))


def fibc_rep(n: int) -> str:
    """Canonical complement word of any integer.

    Nonnegative n prefix the Zeckendorf word with "0" or "00" to reach odd
    length; negative n below -1 are written 1 0^j z where z is the Zeckendorf
    word of n + F(2k-1) for the unique k with -F(2k-1) <= n < -F(2k-3).

    >>> fibc_rep(0), fibc_rep(-1), fibc_rep(19), fibc_rep(-10)
    ('0', '1', '0101001', '1000100')
    """
    if n == 0:
        return "0"
    if n == -1:
        return "1"
    if n > 0:
        w = fib_rep(n)
        return ("00" if len(w) % 2 else "0") + w
    k = 1
    while n < -fib(2 * k - 1):
        k += 1
    w = fib_rep(fib(2 * k - 1) + n)
    return "1" + "0" * (2 * k - len(w)) + w


def neutral_prefix(w: str) -> str:
    """The two-digit prefix that pads w without changing its complement
    value: "00" for words starting with 0, "10" for words starting with 1.
    """
    if not w:
        raise ValueError("the empty word has no neutral prefix")
    _check_word(w, "01", "binary")
    return "00" if w[0] == "0" else "10"


def pad_words(*words: str) -> tuple[str, ...]:
    """Pad canonical words to a common length with their neutral prefixes.

    Every input must be canonical (odd length), so each deficit is even and
    is filled by whole copies of the word's neutral prefix.  Values are
    preserved componentwise.

    >>> pad_words("1", "1000101")
    ('1010101', '1000101')
    """
    if not words:
        return ()
    for w in words:
        if not is_canonical(w):
            raise ValueError(f"cannot pad non-canonical word {w!r}")
    k = max(len(w) for w in words)
    return tuple(neutral_prefix(w) * ((k - len(w)) // 2) + w for w in words)


def fibc_rep_pair(a: int, b: int) -> tuple[str, str]:
    """Equal-length representation of a pair of integers.

    >>> fibc_rep_pair(-1, -9)
    ('1010101', '1000101')
    """
    return pad_words(fibc_rep(a), fibc_rep(b))  # type: ignore[return-value]


def sum_words(u: str, v: str) -> str:
    """Digit-wise sum of two canonical words after padding; ternary output.

    >>> sum_words("1", "1000101")
    '2010202'
    """
    pu, pv = pad_words(u, v)
    return "".join(chr(ord(a) + ord(b) - 48) for a, b in zip(pu, pv))


def canonicalize(w: str) -> str:
    """Canonical word with the same complement value as a nonempty binary
    word.  Idempotent on canonical words.

    >>> canonicalize("100110100")
    '1000100'
    """
    _check_word(w, "01", "binary")
    return fibc_rep(fibc_value(w))


def cmp_reversed_radix(u: str, v: str) -> int:
    """Reversed-radix comparison: longer words first, ties lexicographic."""
    if len(u) != len(v):
        return -1 if len(u) > len(v) else 1
    if u == v:
        return 0
    return -1 if u < v else 1


def reversed_radix_key(w: str) -> tuple[int, str]:
    """Sort key realizing the reversed-radix order."""
    return (-len(w), w)


def signed_key(w: str) -> tuple[int, int, str]:
    """Sort key for the order under which canonical words sort by the
    integer they represent: 1-leading words (negatives) first in
    reversed-radix order, then 0-leading words (nonnegatives) in radix order.
    """
    if not w:
        raise ValueError("the signed order is defined on nonempty words only")
    if w[0] == "1":
        return (0, -len(w), w)
    return (1, len(w), w)


def cmp_signed(u: str, v: str) -> int:
    """Three-way comparison for the signed word order (see signed_key)."""
    ku, kv = signed_key(u), signed_key(v)
    if ku == kv:
        return 0
    return -1 if ku < kv else 1


def enumerate_canonical(max_len: int) -> list[str]:
    """All canonical words of length <= max_len (odd), smallest value first.

    The result is the image under fibc_rep of a contiguous integer interval
    containing 0.

    >>> enumerate_canonical(3)
    ['100', '1', '0', '001', '010']
    """
    if max_len < 1 or max_len % 2 == 0:
        raise ValueError(f"max_len must be odd and positive, got {max_len}")
    words = [
        w
        for length in range(1, max_len + 1, 2)
        for w in ("".join(t) for t in product("01", repeat=length))
        if is_canonical(w)
    ]
    words.sort(key=signed_key)
    return words
