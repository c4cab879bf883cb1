"""Finite-word primitives: occurrences, return words, fractional powers.

Words are plain strings. Occurrence counting includes overlaps throughout,
exponents and length ratios are exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class EmptyPattern(ValueError):
    """Occurrence queries need a nonempty pattern."""


class InsufficientWindow(ValueError):
    """The analyzed window is too short to answer the query."""


def occurrences(pattern: str, text: str) -> list[int]:
    """All start positions of pattern in text, overlaps included."""
    if not pattern:
        raise EmptyPattern("empty pattern")
    out = []
    pos = text.find(pattern)
    while pos != -1:
        out.append(pos)
        pos = text.find(pattern, pos + 1)
    return out


def return_words(u: str, text: str) -> set[str]:
    """Words separating consecutive occurrences of u in text.

    For consecutive occurrence positions p < q the return word is
    text[p:q]; u is then a prefix of w*u and occurs in it exactly twice.
    """
    occ = occurrences(u, text)
    if len(occ) < 2:
        raise InsufficientWindow(
            "need at least 2 occurrences of %r, found %d" % (u, len(occ))
        )
    return {text[p:q] for p, q in zip(occ, occ[1:])}


def min_return_length(u: str, text: str) -> int:
    """Length of the shortest return word of u seen in text."""
    occ = occurrences(u, text)
    if len(occ) < 2:
        raise InsufficientWindow(
            "need at least 2 occurrences of %r, found %d" % (u, len(occ))
        )
    return min(q - p for p, q in zip(occ, occ[1:]))


def fractional_power(u: str, exponent) -> str:
    """Prefix of length floor(|u|*exponent) of the periodic word u u u ..."""
    if not u:
        raise EmptyPattern("empty base word")
    e = Fraction(exponent)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    length = int(len(u) * e)  # Fraction floor
    reps = length // len(u) + 1
    return (u * reps)[:length]


@dataclass(frozen=True)
class PowerWitness:
    exponent: Fraction
    base: str
    position: int
    analyzed_length: int

    @property
    def factor(self) -> str:
        return fractional_power(self.base, self.exponent)


DEFAULT_POWER_CAP = 4096


def max_power_witness(text: str, cap: int | None = DEFAULT_POWER_CAP) -> PowerWitness:
    """Largest fractional power among factors of text, with a witness.

    Scans every period p: the factor starting at i with period p extends to
    length p + lce(i, i+p), giving exponent (p + ext)/p. Analysis is capped
    at `cap` symbols (None disables the cap); ties prefer the smallest
    period, then the leftmost position.
    """
    if not text:
        raise EmptyPattern("empty text")
    if cap is not None and len(text) > cap:
        text = text[:cap]
    n = len(text)
    if n == 1:
        return PowerWitness(Fraction(1), text, 0, n)

    arr = np.frombuffer(text.encode("latin-1"), dtype=np.uint8)
    best_num, best_den, best_pos = 1, 1, 0
    for p in range(1, n):
        m = arr[:-p] == arr[p:]
        size = m.size
        idx = np.arange(size)
        mism = np.where(m, size, idx)
        nxt = np.minimum.accumulate(mism[::-1])[::-1]
        ext = nxt - idx  # match run starting at each position
        i = int(np.argmax(ext))
        num = p + int(ext[i])
        # compare num/p with the running best exactly
        if num * best_den > best_num * p:
            best_num, best_den, best_pos = num, p, i
    g = Fraction(best_num, best_den)
    return PowerWitness(g, text[best_pos : best_pos + best_den], best_pos, n)


def max_fractional_power(text: str, cap: int | None = DEFAULT_POWER_CAP) -> Fraction:
    """Exact supremum of fractional exponents over factors of text."""
    return max_power_witness(text, cap).exponent


def word_counts(text: str, length: int) -> dict[str, int]:
    """Occurrence counts of every length-`length` factor of text."""
    if length < 1:
        raise ValueError("length must be >= 1")
    n = len(text)
    if n < length:
        return {}
    symbols = sorted(set(text))
    k = len(symbols)
    if k <= 1:
        return {text[:length]: n - length + 1}
    if k**length > 2**62:
        # packed codes would overflow; plain slicing is fine at these sizes
        out: dict[str, int] = {}
        for i in range(n - length + 1):
            w = text[i : i + length]
            out[w] = out.get(w, 0) + 1
        return out
    code = {c: i for i, c in enumerate(symbols)}
    arr = np.array([code[c] for c in text], dtype=np.int64)
    vals = arr[: n - length + 1].copy()
    for j in range(1, length):
        vals *= k
        vals += arr[j : j + n - length + 1]
    counts = np.bincount(vals)
    out = {}
    for v in np.nonzero(counts)[0]:
        digits = []
        x = int(v)
        for _ in range(length):
            digits.append(symbols[x % k])
            x //= k
        out["".join(reversed(digits))] = int(counts[v])
    return out
