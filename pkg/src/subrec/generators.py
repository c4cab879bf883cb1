"""Word generators: substitutions, composition towers, Sturmian codings.

All generators hand out prefixes of a single well-defined infinite word, so
a length-L request is always a prefix of the length-2L request. Sources
cache what they have produced and extend on demand.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .contfrac import CFExpansion, quadratic_of_cf
from .quadratic import QuadraticReal


class NotProlongable(ValueError):
    """seed is not a proper prefix of its image, no fixed point grows."""


class SequenceTooShort(ValueError):
    """The composed images cannot reach the requested length."""


class Morphism:
    """Map from symbols to nonempty words, applied letter by letter."""

    def __init__(self, images: dict[str, str], label: str | None = None):
        for sym, img in images.items():
            if len(sym) != 1:
                raise ValueError("symbols must be single characters: %r" % sym)
            if not img:
                raise ValueError("image of %r is empty" % sym)
        self.images = dict(images)
        self.label = label or "{%s}" % ",".join(
            "%s>%s" % (s, w) for s, w in sorted(images.items())
        )
        self._table = str.maketrans(self.images)
        self._domain = frozenset(images)

    def apply(self, word: str) -> str:
        if not self._domain.issuperset(word):
            bad = set(word) - self._domain
            raise ValueError("symbols outside domain: %s" % sorted(bad))
        return word.translate(self._table)

    def image_length(self, sym: str) -> int:
        return len(self.images[sym])

    @property
    def min_image_length(self) -> int:
        return min(len(w) for w in self.images.values())

    def __repr__(self):
        return "Morphism(%s)" % self.label


def rho(n: int) -> Morphism:
    """0 -> 0 1^(n+1), 1 -> 0 1^n."""
    if n < 1:
        raise ValueError("index must be >= 1")
    return Morphism({"0": "0" + "1" * (n + 1), "1": "0" + "1" * n}, "r%d" % n)


def gamma(n: int) -> Morphism:
    """0 -> 1 0^(n+1), 1 -> 1 0^n."""
    if n < 1:
        raise ValueError("index must be >= 1")
    return Morphism({"0": "1" + "0" * (n + 1), "1": "1" + "0" * n}, "g%d" % n)


def thue_morse() -> Morphism:
    return Morphism({"0": "01", "1": "10"}, "tm")


@dataclass(frozen=True)
class GeneratedWord:
    text: str
    source: str

    def __len__(self):
        return len(self.text)

    def __str__(self):
        return self.text


# ---------------------------------------------------------------- fixed points

def fixed_point_prefix(m: Morphism, seed: str, length: int) -> GeneratedWord:
    """Prefix of the fixed point of m starting with seed."""
    if length < 0:
        raise ValueError("length must be >= 0")
    img = m.apply(seed)
    if not img.startswith(seed) or len(img) < 2:
        raise NotProlongable(
            "image of %r is %r, need a proper extension of the seed" % (seed, img)
        )
    w = seed
    while len(w) < length:
        w = m.apply(w)
    return GeneratedWord(w[:length], "fixed-point %s seed %s" % (m.label, seed))


# ---------------------------------------------------------------- kappa towers

def kappa_image_lengths(steps: list[Morphism]) -> list[tuple[int, int]]:
    """(|k_1..k_j(0)|, |k_1..k_j(1)|) for j = 1..len(steps).

    Lengths follow the symbol counts of each image, so no word is built.
    """
    out: list[tuple[int, int]] = []
    vec: tuple[int, int] | None = None
    for m in steps:
        if vec is None:
            vec = (len(m.images["0"]), len(m.images["1"]))
        else:
            prev0, prev1 = vec
            vec = tuple(
                sum(prev0 if c == "0" else prev1 for c in m.images[s])
                for s in ("0", "1")
            )
        out.append(vec)
    return out


def kappa_images(steps: list[Morphism]) -> tuple[str, str]:
    """Fully materialized words k_1..k_n(0) and k_1..k_n(1)."""
    w0, w1 = "0", "1"
    for m in reversed(steps):
        w0, w1 = m.apply(w0), m.apply(w1)
    return w0, w1


def kappa_prefix(steps: list[Morphism], length: int) -> GeneratedWord:
    """Prefix of k_1(k_2(...k_n("0"))), built lazily.

    Raises SequenceTooShort when the composed image of "0" is shorter than
    requested; more steps would be needed to pin those symbols down.
    """
    if not steps:
        raise SequenceTooShort("empty composition")
    if length < 0:
        raise ValueError("length must be >= 0")
    lengths = kappa_image_lengths(steps)
    total = lengths[-1][0]
    if length > total:
        raise SequenceTooShort(
            "composed image of '0' has length %d < %d" % (total, length)
        )
    # how much of each intermediate word is needed
    needs = [length]
    for m in steps[:-1]:
        prev = needs[-1]
        needs.append(-(-prev // m.min_image_length))
    w = "0"
    for m, need in zip(reversed(steps), reversed(needs)):
        w = m.apply(w)[:need]
    label = ",".join(m.label for m in steps)
    return GeneratedWord(w[:length], "kappa [%s]" % label)


def length_ratio(steps: list[Morphism], k: int | None = None) -> Fraction:
    """|k_1..k_k(0)| / |k_1..k_k(1)| as an exact fraction."""
    if not steps:
        raise SequenceTooShort("empty composition")
    lengths = kappa_image_lengths(steps)
    k = len(steps) if k is None else k
    l0, l1 = lengths[k - 1]
    return Fraction(l0, l1)


def parse_kappa(text: str) -> list[Morphism]:
    """Parse "r1,g2,r3" into the corresponding morphism list."""
    steps = []
    for part in text.split(","):
        part = part.strip()
        if len(part) < 2 or part[0] not in "rg" or not part[1:].isdigit():
            raise ValueError("cannot parse kappa step %r" % part)
        n = int(part[1:])
        steps.append(rho(n) if part[0] == "r" else gamma(n))
    if not steps:
        raise ValueError("empty kappa sequence")
    return steps


# ------------------------------------------------------------- standard words

def standard_word_prefix(cf: CFExpansion, length: int) -> GeneratedWord:
    """Prefix of the angle's coding at the origin, built combinatorially.

    Convention: output is "0" followed by the limit of the standard-word
    recurrence s_k = s_{k-1}^(a_k) s_{k-2} with seeds s_-1 = "1", s_0 = "0"
    and first step s_1 = s_0^(a_1 - 1) s_-1.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    if length <= 1:
        return GeneratedWord("0" * length, "standard %s" % cf)
    # seeds t_0 = "0", t_1 = 0^(a1-1) 1; then t_k = t_{k-1}^(a_k) t_{k-2}
    prev = "0"
    cur = "0" * (cf.coefficient(1) - 1) + "1"
    i = 1
    while len(cur) < length - 1:
        i += 1
        a = cf.coefficient(i)  # raises when a finite expansion runs out
        prev, cur = cur, cur * a + prev
    return GeneratedWord("0" + cur[: length - 1], "standard %s" % cf)


# ------------------------------------------------------------ rotation coding

def _common_integer_form(alpha: QuadraticReal, t0: QuadraticReal):
    """(A, B, Aa, Ba, D, d) with t0=(A+B sqrt(d))/D, alpha=(Aa+Ba sqrt(d))/D."""
    if alpha.b == 0:
        raise ValueError("rotation angle must be irrational")
    if t0.b != 0 and t0.d != alpha.d:
        raise ValueError("t0 must live in the same quadratic field as alpha")
    d = alpha.d
    dens = [alpha.a.denominator, alpha.b.denominator, t0.a.denominator, t0.b.denominator]
    D = 1
    for q in dens:
        D = D * q // gcd(D, q)
    def lift(fr):
        return fr.numerator * (D // fr.denominator)
    return lift(t0.a), lift(t0.b), lift(alpha.a), lift(alpha.b), D, d


def rotation_coding_prefix(alpha: QuadraticReal, t0, length: int) -> GeneratedWord:
    """Coding of the rotation orbit of t0 under t -> t + alpha mod 1.

    Symbol 0 on [0, 1-alpha), symbol 1 on [1-alpha, 1). Each step compares
    t + alpha against 1 exactly in integer arithmetic.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    if not isinstance(t0, QuadraticReal):
        t0 = QuadraticReal(t0)
    if not (QuadraticReal(0) <= t0 < QuadraticReal(1)):
        raise ValueError("t0 must lie in [0, 1)")
    if not (QuadraticReal(0) < alpha < QuadraticReal(1)):
        raise ValueError("alpha must lie in (0, 1)")
    A, B, Aa, Ba, D, d = _common_integer_form(alpha, t0)
    out = bytearray()
    for _ in range(length):
        A += Aa
        B += Ba
        s = A - D
        # sign of s + B sqrt(d): t + alpha >= 1 picks symbol 1
        if s >= 0:
            one = True if B >= 0 else s * s > B * B * d
        else:
            one = False if B <= 0 else B * B * d > s * s
        if one:
            A -= D
            out.append(49)
        else:
            out.append(48)
    return GeneratedWord(out.decode("ascii"), "rotation coding t0=%s" % t0)


# ----------------------------------------------------------------- sources

class WordSource:
    """Extendable prefix provider; subclasses fill _extend."""

    name = "word"
    max_length: int | None = None

    def __init__(self):
        self._buf = ""
        self._lock = threading.Lock()

    def prefix(self, n: int) -> str:
        """First n symbols (fewer only if the source is finite)."""
        with self._lock:
            if len(self._buf) < n and (self.max_length is None or len(self._buf) < self.max_length):
                self._extend(n)
            return self._buf[:n]

    def _extend(self, n: int):
        raise NotImplementedError


class PeriodicSource(WordSource):
    def __init__(self, block: str):
        super().__init__()
        if not block:
            raise ValueError("empty block")
        self.block = block
        self.name = "periodic %s" % block

    def _extend(self, n: int):
        reps = n // len(self.block) + 1
        self._buf = self.block * reps


class FixedPointSource(WordSource):
    def __init__(self, m: Morphism, seed: str, name: str | None = None):
        super().__init__()
        fixed_point_prefix(m, seed, 0)  # validates prolongability
        self.m = m
        self.seed = seed
        self.name = name or ("fixed-point %s seed %s" % (m.label, seed))

    def _extend(self, n: int):
        w = self._buf or self.seed
        while len(w) < n:
            w = self.m.apply(w)
        self._buf = w


class StandardWordSource(WordSource):
    def __init__(self, cf: CFExpansion, name: str | None = None):
        super().__init__()
        self.cf = cf
        self.name = name or ("standard %s" % cf)

    def _extend(self, n: int):
        try:
            self._buf = standard_word_prefix(self.cf, n).text
        except Exception as exc:
            from .contfrac import InsufficientCoefficients

            if isinstance(exc, InsufficientCoefficients):
                # finite expansion: expose all we can pin down, then stop
                self._buf = self._longest_prefix()
                self.max_length = len(self._buf)
                if n <= len(self._buf):
                    return
            raise

    def _longest_prefix(self) -> str:
        prev = "0"
        cur = "0" * (self.cf.coefficient(1) - 1) + "1"
        i = 1
        while True:
            i += 1
            try:
                a = self.cf.coefficient(i)
            except Exception:
                return "0" + cur
            prev, cur = cur, cur * a + prev


class RotationCodingSource(WordSource):
    def __init__(self, alpha: QuadraticReal, t0=0, name: str | None = None):
        super().__init__()
        self.alpha = alpha
        self.t0 = t0 if isinstance(t0, QuadraticReal) else QuadraticReal(t0)
        self.name = name or ("rotation t0=%s" % self.t0)

    def _extend(self, n: int):
        self._buf = rotation_coding_prefix(self.alpha, self.t0, n).text


class KappaSource(WordSource):
    """Finite composition tower; capped at the composed image of '0'."""

    def __init__(self, steps: list[Morphism], name: str | None = None):
        super().__init__()
        self.steps = list(steps)
        self.max_length = kappa_image_lengths(self.steps)[-1][0]
        self.name = name or ("kappa [%s]" % ",".join(m.label for m in steps))

    def _extend(self, n: int):
        n = min(n, self.max_length)
        self._buf = kappa_prefix(self.steps, n).text


class KappaRuleSource(WordSource):
    """Composition tower whose steps come from a rule, extended on demand."""

    def __init__(self, rule, name: str):
        super().__init__()
        self.rule = rule
        self.name = name
        self._steps: list[Morphism] = []

    def _extend(self, n: int):
        while True:
            if self._steps:
                total = kappa_image_lengths(self._steps)[-1][0]
                if total >= n:
                    break
            self._steps.append(self.rule(len(self._steps) + 1))
        self._buf = kappa_prefix(self._steps, n).text


class FixedTextSource(WordSource):
    """A plain string; windows clip at its end."""

    def __init__(self, text: str, name: str = "text"):
        super().__init__()
        self._buf = text
        self.max_length = len(text)
        self.name = name

    def _extend(self, n: int):
        pass


class ShiftedSource(WordSource):
    """The same word with its first symbol dropped."""

    def __init__(self, inner: WordSource):
        super().__init__()
        self.inner = inner
        if inner.max_length is not None:
            self.max_length = max(inner.max_length - 1, 0)
        self.name = "shift of %s" % inner.name

    def _extend(self, n: int):
        self._buf = self.inner.prefix(n + 1)[1:]


def as_source(x) -> WordSource:
    if isinstance(x, WordSource):
        return x
    if isinstance(x, GeneratedWord):
        return FixedTextSource(x.text, x.source)
    if isinstance(x, str):
        return FixedTextSource(x)
    raise TypeError("cannot treat %r as a word source" % type(x))


def sturmian_source(cf: CFExpansion, method: str = "standard") -> WordSource:
    """Sturmian word of the given angle, symbolic or geometric route."""
    if method == "standard":
        return StandardWordSource(cf)
    if method == "rotation":
        return RotationCodingSource(quadratic_of_cf(cf), 0, "rotation %s" % cf)
    raise ValueError("unknown method %r" % method)
