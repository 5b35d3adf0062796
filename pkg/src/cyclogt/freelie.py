"""Free Lie algebra structure inside the series kernel.

Lyndon words with their standard bracketings give a basis in each degree;
Lie membership is tested with the degree-normalized Dynkin idempotent, and
BCH is computed through the exact exp/log kernel rather than a coefficient
table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import Alphabet, ConstantTermError, Series, Word, exp_series, log_series


def moebius(n: int) -> int:
    if n == 1:
        return 1
    m, out = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def witt_number(rank: int, d: int) -> int:
    """Dimension of the degree-d part of the free Lie algebra of given rank."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += moebius(e) * rank ** (d // e)
    return total // d


def lyndon_words(rank: int, d: int) -> list[Word]:
    """All Lyndon words of length exactly d over {0, ..., rank-1} (Duval)."""
    out: list[Word] = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == d:
            out.append(tuple(w))
        while len(w) < d:
            w.append(w[-m])
        while w and w[-1] == rank - 1:
            w.pop()
    return sorted(out)


def standard_bracketing(w: Word):
    """Right standard factorization bracket tree of a Lyndon word.

    Leaves are generator indices; internal nodes are pairs (left, right).
    """
    if len(w) == 1:
        return w[0]
    # split at the longest proper Lyndon suffix
    best = None
    for k in range(1, len(w)):
        v = w[k:]
        if all(v < v[i:] for i in range(1, len(v))):
            best = k
            break
    return (standard_bracketing(w[:best]), standard_bracketing(w[best:]))


def bracket_tree_series(tree, alphabet: Alphabet, degree: int) -> Series:
    if isinstance(tree, int):
        return Series(alphabet, degree, {(tree,): Fraction(1)})
    left = bracket_tree_series(tree[0], alphabet, degree)
    right = bracket_tree_series(tree[1], alphabet, degree)
    return left.bracket(right)


@dataclass(frozen=True)
class LyndonBasisElement:
    word: Word
    bracketing: object
    expansion: Series


def lyndon_basis(alphabet: Alphabet, d: int) -> list[LyndonBasisElement]:
    """Lyndon basis of the degree-d part of the free Lie algebra on alphabet."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    out = []
    for w in lyndon_words(len(alphabet), d):
        tree = standard_bracketing(w)
        out.append(LyndonBasisElement(w, tree, bracket_tree_series(tree, alphabet, d)))
    return out


def _dynkin_word(w: Word, alphabet: Alphabet, degree: int) -> Series:
    """Left-normed bracketing [[...[w0,w1],...],wn] of a word."""
    cur = Series(alphabet, degree, {(w[0],): Fraction(1)})
    for k in w[1:]:
        cur = cur.bracket(Series(alphabet, degree, {(k,): Fraction(1)}))
    return cur


def lie_project(s: Series) -> Series:
    """Degree-normalized Dynkin idempotent, applied degree by degree."""
    if s.constant_term() != 0:
        raise ConstantTermError("lie_project requires zero constant term")
    out = Series.zero(s.alphabet, s.degree)
    for w, c in s.terms.items():
        out = out.add(_dynkin_word(w, s.alphabet, s.degree).scale(c / len(w)))
    return out


def is_lie(s: Series) -> bool:
    """True iff every graded piece is fixed by the Dynkin projection."""
    return lie_project(s) == s


def bch(x: Series, y: Series, degree: int | None = None) -> Series:
    """log(exp x . exp y), truncated; inputs must be Lie elements."""
    if degree is not None:
        x, y = x.truncate(min(degree, x.degree)), y.truncate(min(degree, y.degree))
    if not is_lie(x) or not is_lie(y):
        raise ValueError("bch requires Lie elements")
    return log_series(exp_series(x).mul(exp_series(y)))
