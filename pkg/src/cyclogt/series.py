"""Sparse degree-truncated noncommutative series over exact rationals.

Words are tuples of generator indices into an Alphabet; every generator has
degree 1, so the degree of a word is its length.  A Series carries its own
truncation degree and every binary operation checks alphabet compatibility,
because silently mixing truncations is the dominant bug class in graded
computations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

Word = tuple[int, ...]

_T1_RE = re.compile(r"^t\^\{1(\d)\}$")
_TA_RE = re.compile(r"^t\((\d+)\)\^\{(\d)(\d)\}$")


class AlphabetMismatch(ValueError):
    """Two series (or a series and a word) live over different alphabets."""


class TruncationError(ValueError):
    """A word exceeds the truncation degree of the series."""


class ConstantTermError(ValueError):
    """exp/log/substitute precondition on the constant term is violated."""


def parse_role(label: str, N: int):
    """Role tag of a generator label.

    Returns ("t1", j) for "t^{1j}", ("t", a, i, j) for "t(a)^{ij}" and
    ("free", label) for anything else.  Index pairs must be normalized
    (i < j) and residues reduced mod N.
    """
    m = _T1_RE.match(label)
    if m:
        return ("t1", int(m.group(1)))
    m = _TA_RE.match(label)
    if m:
        a, i, j = int(m.group(1)), int(m.group(2)), int(m.group(3))
        if not 0 <= a < N:
            raise ValueError(f"residue {a} not reduced mod {N} in {label!r}")
        if not i < j:
            raise ValueError(f"indices not normalized (need i<j) in {label!r}")
        return ("t", a, i, j)
    return ("free", label)


@dataclass(frozen=True)
class Alphabet:
    """Ordered list of degree-1 generator labels with a cyclotomic order N."""

    labels: tuple[str, ...]
    N: int = 1
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("cyclotomic order N must be a positive integer")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("generator labels must be unique")
        for lab in self.labels:
            parse_role(lab, self.N)  # validates
        object.__setattr__(self, "_index", {lab: k for k, lab in enumerate(self.labels)})

    def __len__(self):
        return len(self.labels)

    def index(self, label: str) -> int:
        return self._index[label]

    def role(self, k: int):
        return parse_role(self.labels[k], self.N)

    def word(self, *labels: str) -> Word:
        return tuple(self._index[lab] for lab in labels)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Series:
    """Finite map Word -> Fraction, truncated at an inclusive degree.

    Values are immutable after construction; all operations are pure.
    """

    __slots__ = ("alphabet", "degree", "terms")

    def __init__(self, alphabet: Alphabet, degree: int, terms: Mapping[Word, Fraction] | None = None):
        if degree < 0:
            raise ValueError("truncation degree must be >= 0")
        clean: dict[Word, Fraction] = {}
        if terms:
            n = len(alphabet)
            for w, c in terms.items():
                c = _as_fraction(c)
                if c == 0:
                    continue
                if len(w) > degree:
                    raise TruncationError(f"word of degree {len(w)} above truncation {degree}")
                if any(not 0 <= k < n for k in w):
                    raise ValueError(f"word {w} has indices outside the alphabet")
                clean[w] = c
        self.alphabet = alphabet
        self.degree = degree
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet, degree: int) -> "Series":
        return cls(alphabet, degree)

    @classmethod
    def one(cls, alphabet: Alphabet, degree: int) -> "Series":
        return cls(alphabet, degree, {(): Fraction(1)})

    @classmethod
    def gen(cls, alphabet: Alphabet, label: str, degree: int) -> "Series":
        return cls(alphabet, degree, {(alphabet.index(label),): Fraction(1)})

    @classmethod
    def lincomb(cls, alphabet: Alphabet, degree: int, coeffs: Mapping[str, Fraction | int]) -> "Series":
        """Linear combination of generators given by label -> coefficient."""
        terms = {(alphabet.index(lab),): _as_fraction(c) for lab, c in coeffs.items()}
        return cls(alphabet, degree, terms)

    # -- basic protocol -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alphabet.labels, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"Series(0; D={self.degree})"
        labs = self.alphabet.labels
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            word = "".join(labs[k] for k in w) or "1"
            bits.append(f"{self.terms[w]}*{word}")
        s = " + ".join(bits[:8]) + (" + ..." if len(bits) > 8 else "")
        return f"Series({s}; D={self.degree})"

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> int | None:
        """Lowest degree carrying a nonzero term, or None for the zero series."""
        return min((len(w) for w in self.terms), default=None)

    def graded_part(self, d: int) -> "Series":
        return Series(self.alphabet, self.degree,
                      {w: c for w, c in self.terms.items() if len(w) == d})

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def _check_compatible(self, other: "Series"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("series over different alphabets")

    # -- queries ------------------------------------------------------

    def coeff(self, w: Word) -> Fraction:
        """Coefficient of the monic monomial w; 0 if absent."""
        if len(w) > self.degree:
            raise TruncationError(f"degree {len(w)} above truncation {self.degree}")
        n = len(self.alphabet)
        if any(not 0 <= k < n for k in w):
            raise AlphabetMismatch(f"word {w} not over this alphabet")
        return self.terms.get(tuple(w), Fraction(0))

    def coeff_labels(self, *labels: str) -> Fraction:
        return self.coeff(self.alphabet.word(*labels))

    # -- ring operations ----------------------------------------------

    def add(self, other: "Series") -> "Series":
        self._check_compatible(other)
        d = min(self.degree, other.degree)
        terms = {w: c for w, c in self.terms.items() if len(w) <= d}
        for w, c in other.terms.items():
            if len(w) <= d:
                c2 = terms.get(w, Fraction(0)) + c
                if c2:
                    terms[w] = c2
                elif w in terms:
                    del terms[w]
        return Series(self.alphabet, d, terms)

    def scale(self, c) -> "Series":
        c = _as_fraction(c)
        if c == 0:
            return Series(self.alphabet, self.degree)
        return Series(self.alphabet, self.degree, {w: c * v for w, v in self.terms.items()})

    def neg(self) -> "Series":
        return self.scale(-1)

    def sub(self, other: "Series") -> "Series":
        return self.add(other.neg())

    def mul(self, other: "Series") -> "Series":
        self._check_compatible(other)
        d = min(self.degree, other.degree)
        terms: dict[Word, Fraction] = {}
        right = sorted(other.terms.items(), key=lambda wc: len(wc[0]))
        for w1, c1 in self.terms.items():
            room = d - len(w1)
            if room < 0:
                continue
            for w2, c2 in right:
                if len(w2) > room:
                    break
                w = w1 + w2
                c = terms.get(w, Fraction(0)) + c1 * c2
                if c:
                    terms[w] = c
                elif w in terms:
                    del terms[w]
        return Series(self.alphabet, d, terms)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg

    def truncate(self, d: int) -> "Series":
        if d >= self.degree:
            if d == self.degree:
                return self
            raise TruncationError("cannot raise truncation degree of a series")
        return Series(self.alphabet, d, {w: c for w, c in self.terms.items() if len(w) <= d})

    def bracket(self, other: "Series") -> "Series":
        """Commutator xy - yx in the associative algebra."""
        return self.mul(other).sub(other.mul(self))


def exp_series(s: Series) -> Series:
    """exp of a series with zero constant term, truncated at s.degree."""
    if s.constant_term() != 0:
        raise ConstantTermError("exp requires zero constant term")
    out = Series.one(s.alphabet, s.degree)
    power = Series.one(s.alphabet, s.degree)
    for k in range(1, s.degree + 1):
        power = power.mul(s)
        if power.is_zero():
            break
        out = out.add(power.scale(Fraction(1, factorial(k))))
    return out


def log_series(s: Series) -> Series:
    """log of a series with constant term 1, truncated at s.degree."""
    if s.constant_term() != 1:
        raise ConstantTermError("log requires constant term 1")
    u = s.sub(Series.one(s.alphabet, s.degree))
    out = Series.zero(s.alphabet, s.degree)
    power = Series.one(s.alphabet, s.degree)
    for k in range(1, s.degree + 1):
        power = power.mul(u)
        if power.is_zero():
            break
        out = out.add(power.scale(Fraction((-1) ** (k + 1), k)))
    return out


def inverse_series(s: Series) -> Series:
    """Multiplicative inverse of a series with constant term 1."""
    if s.constant_term() != 1:
        raise ConstantTermError("inverse requires constant term 1")
    u = Series.one(s.alphabet, s.degree).sub(s)
    out = Series.one(s.alphabet, s.degree)
    power = Series.one(s.alphabet, s.degree)
    for _ in range(s.degree):
        power = power.mul(u)
        if power.is_zero():
            break
        out = out.add(power)
    return out


def substitute(s: Series, images: Mapping[str, Series]) -> Series:
    """Apply the algebra homomorphism sending each generator to its image.

    Every generator of s.alphabet must have an image over one common target
    alphabet; images must have zero constant term (grading would break
    otherwise) and truncation at least s.degree.
    """
    missing = [lab for lab in s.alphabet.labels if lab not in images]
    if missing:
        raise KeyError(f"missing images for generators: {missing}")
    some = images[s.alphabet.labels[0]]
    target, d = some.alphabet, some.degree
    for lab in s.alphabet.labels:
        im = images[lab]
        if im.alphabet != target or im.degree != d:
            raise AlphabetMismatch("images must share one target alphabet and truncation")
        if im.constant_term() != 0:
            raise ConstantTermError(f"image of {lab} has a nonzero constant term")
    if d < s.degree:
        raise TruncationError("target truncation below source truncation")
    by_index = [images[lab] for lab in s.alphabet.labels]
    cache: dict[Word, Series] = {(): Series.one(target, d)}

    def image_of(w: Word) -> Series:
        got = cache.get(w)
        if got is None:
            got = by_index[w[0]].mul(image_of(w[1:]))
            cache[w] = got
        return got

    out = Series.zero(target, d)
    for w, c in s.terms.items():
        out = out.add(image_of(w).scale(c))
    return out


def generator_images(source: Alphabet, target: Alphabet, degree: int,
                     table: Mapping[str, Mapping[str, int | Fraction]]) -> dict[str, Series]:
    """Build an image map from a label -> {target label -> coefficient} table."""
    return {lab: Series.lincomb(target, degree, dict(table[lab])) for lab in source.labels}


# -- serialization ----------------------------------------------------

def fraction_to_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def fraction_from_str(s: str) -> Fraction:
    p, _, q = s.partition("/")
    return Fraction(int(p), int(q) if q else 1)


def series_to_json(s: Series) -> dict:
    words = sorted(s.terms, key=lambda w: (len(w), w))
    return {
        "alphabet": list(s.alphabet.labels),
        "N": s.alphabet.N,
        "degree": s.degree,
        "terms": [{"word": list(w), "coeff": fraction_to_str(s.terms[w])} for w in words],
    }


def series_from_json(obj: Mapping) -> Series:
    alphabet = Alphabet(tuple(obj["alphabet"]), int(obj.get("N", 1)))
    terms = {tuple(t["word"]): fraction_from_str(t["coeff"]) for t in obj["terms"]}
    return Series(alphabet, int(obj["degree"]), terms)


def sum_series(items: Iterable[Series], alphabet: Alphabet, degree: int) -> Series:
    out = Series.zero(alphabet, degree)
    for s in items:
        out = out.add(s)
    return out
