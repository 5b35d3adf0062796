"""Presented Lie algebras of cyclotomic infinitesimal braids and their morphisms.

The algebras here are generated in degree 1 by t^{1i} and t(a)^{ij} letters.
Each one decomposes as an iterated semidirect product whose outer ideal is a
free Lie algebra; the canonical form for the enveloping algebra sorts words by
non-increasing "level" (the index of the ideal a letter generates), and the
straightening rule x.y -> y.x + [x,y] rewrites every mixed bracket into
brackets of ideal letters via a table derived once from the defining
relations.  The table derivation verifies closure and fails loudly if the
semidirect structure were violated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import SparseRowSpace
from .series import Alphabet, Series, Word, substitute
from .series import series_to_json

_ONE = Fraction(1)


class PresentationError(RuntimeError):
    """The bracket-table derivation could not close inside the free ideal."""


@dataclass(frozen=True)
class AlgebraId:
    family: str  # "t" | "t0" | "u" | "free"
    n: int
    N: int

    def __post_init__(self):
        if self.family not in ("t", "t0", "u", "free"):
            raise ValueError(f"unknown algebra family {self.family!r}")
        if self.n < 2 and self.family != "u":
            raise ValueError("strand count must be >= 2")
        if self.N < 1:
            raise ValueError("cyclotomic order must be >= 1")

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "N": self.N}

    @classmethod
    def from_json(cls, obj) -> "AlgebraId":
        return cls(obj["family"], int(obj["n"]), int(obj["N"]))


def t1_label(j: int) -> str:
    return f"t^{{1{j}}}"


def ta_label(a: int, i: int, j: int, N: int) -> str:
    """Normalized label of t(a)^{ij}: t(a)^{ji} with j>i is stored as t(-a)^{ij}."""
    if i == j:
        raise ValueError("t(a)^{ii} is not a generator")
    if i > j:
        a, i, j = -a, j, i
    return f"t({a % N})^{{{i}{j}}}"


def generators_with_levels(aid: AlgebraId) -> list[tuple[str, int]]:
    """Generator labels and their levels (the index of the free ideal they span)."""
    out: list[tuple[str, int]] = []
    if aid.family in ("t", "t0"):
        lo = 2
    elif aid.family == "u":
        lo = 1
    else:
        raise ValueError("free algebras have no canonical generator list")
    if aid.family in ("t", "t0"):
        for i in range(2, aid.n + 1):
            if aid.family == "t0" and i == aid.n:
                continue
            out.append((t1_label(i), i))
    for j in range(lo + 1, aid.n + 1):
        for i in range(lo, j):
            for a in range(aid.N):
                out.append((ta_label(a, i, j, aid.N), j))
    out.sort(key=lambda le: (le[1], le[0]))
    return out


def algebra_alphabet(aid: AlgebraId) -> Alphabet:
    return Alphabet(tuple(lab for lab, _ in generators_with_levels(aid)), aid.N)


def defining_relations(aid: AlgebraId) -> list[Series]:
    """All defining relation instances, as degree-2 Lie elements over the alphabet.

    The symmetry relation t(a)^{ij} = t(-a)^{ji} is a representation invariant
    of the normalized labels, not a listed relation.
    """
    alphabet = algebra_alphabet(aid)
    N = aid.N

    def g(label: str) -> Series:
        return Series.gen(alphabet, label, 2)

    def ta(a, i, j):
        return g(ta_label(a, i, j, N))

    rels: list[Series] = []
    lo = 1 if aid.family == "u" else 2
    idx = range(lo, aid.n + 1)
    has_t1 = aid.family in ("t", "t0")

    def t1_ok(i):
        return has_t1 and not (aid.family == "t0" and i == aid.n)

    # [t(a)^{ij}, t(a+b)^{ik} + t(b)^{jk}] = 0
    for i, j, k in itertools.permutations(idx, 3):
        for a in range(N):
            for b in range(N):
                rels.append(ta(a, i, j).bracket(ta(a + b, i, k) + ta(b, j, k)))
    # [t(a)^{ij}, t(b)^{kl}] = 0 for distinct i, j, k, l
    for i, j, k, l in itertools.combinations(idx, 4):
        for i2, j2 in ((i, j), (i, k), (i, l)):
            k2, l2 = sorted(set((i, j, k, l)) - {i2, j2})
            for a in range(N):
                for b in range(N):
                    rels.append(ta(a, i2, j2).bracket(ta(b, k2, l2)))
    if has_t1:
        for i, j in itertools.permutations(range(2, aid.n + 1), 2):
            tij = sum((ta(c, i, j) for c in range(N)), Series.zero(alphabet, 2))
            # [t^{1i} + t^{1j} + sum_c t(c)^{ij}, t(a)^{ij}] = 0
            if t1_ok(i) and t1_ok(j):
                for a in range(N):
                    rels.append((g(t1_label(i)) + g(t1_label(j)) + tij).bracket(ta(a, i, j)))
                # [t^{1i}, t^{1j} + sum_c t(c)^{ij}] = 0
                rels.append(g(t1_label(i)).bracket(g(t1_label(j)) + tij))
            # [t^{1i}, t(a)^{jk}] = 0 for distinct i, j, k
            if t1_ok(i):
                for k in range(2, aid.n + 1):
                    if k in (i, j) or k < j:
                        continue
                    for a in range(N):
                        rels.append(g(t1_label(i)).bracket(ta(a, j, k)))
    return [r for r in rels if not r.is_zero()]


class PresentedAlgebra:
    """Cached normal-form engine for one AlgebraId of family "t" or "u"."""

    def __init__(self, aid: AlgebraId):
        if aid.family not in ("t", "u"):
            raise ValueError("normal forms are computed in the full families t / u")
        self.aid = aid
        gl = generators_with_levels(aid)
        self.alphabet = Alphabet(tuple(lab for lab, _ in gl), aid.N)
        self.levels = tuple(level for _, level in gl)
        self._table = self._derive_bracket_table()
        self._insert_memo: dict = {}
        self._nf_memo: dict = {}

    # -- straightening table -------------------------------------------

    def _symbol_row(self, rel: Series, level: int):
        """Relation as a combination of bracket symbols at the given level."""
        row: dict = {}
        for (p, q), c in rel.terms.items():
            lp, lq = self.levels[p], self.levels[q]
            if lp == lq == level:
                key, sign = ((0, p, q), 1) if p < q else ((0, q, p), -1)
            elif lq == level and lp < level:
                key, sign = (1, p, q), 1
            elif lp == level and lq < level:
                key, sign = (1, q, p), -1
            else:
                raise AssertionError("relation instance mixes straightening levels")
            c2 = row.get(key, Fraction(0)) + sign * c
            if c2:
                row[key] = c2
            elif key in row:
                del row[key]
        return row

    def _derive_bracket_table(self):
        """Solve the defining relations for every mixed bracket [base, ideal].

        For each level k, relation instances whose maximal level is k are
        linear equations between mixed symbols [x, y] (level x < k = level y)
        and free-ideal symbols [y', y''].  Elimination must express every
        mixed symbol purely in ideal symbols, and must not impose any relation
        among the ideal symbols themselves (that is the freeness of the ideal).
        """
        rel_by_level: dict[int, list[Series]] = {}
        for rel in defining_relations(self.aid):
            level = max(self.levels[k] for w in rel.terms for k in w)
            rel_by_level.setdefault(level, []).append(rel)
        nidx = len(self.alphabet)
        table: dict[tuple[int, int], tuple] = {}
        for level, rels in sorted(rel_by_level.items()):
            space = SparseRowSpace()
            for rel in rels:
                space.add(self._symbol_row(rel, level))
            for p in range(nidx):
                if self.levels[p] != level:
                    continue
                for q in range(nidx):
                    if self.levels[q] == level and q > p and (0, p, q) in space.pivots:
                        raise PresentationError(
                            f"relations force a dependency among free-ideal brackets "
                            f"at level {level}: the semidirect structure fails")
            for x in range(nidx):
                if self.levels[x] >= level:
                    continue
                for y in range(nidx):
                    if self.levels[y] != level:
                        continue
                    red = space.reduce({(1, x, y): _ONE})
                    if any(key[0] != 0 for key in red):
                        raise PresentationError(
                            f"mixed bracket [{self.alphabet.labels[x]}, "
                            f"{self.alphabet.labels[y]}] does not close into the "
                            f"level-{level} free ideal")
                    table[(x, y)] = tuple(((p, q), c) for (_, p, q), c in red.items())
        return table

    # -- normal form -----------------------------------------------------

    def _insert(self, x: int, u: Word) -> dict:
        """x . u with u a normal word, re-expressed over normal words."""
        key = (x, u)
        got = self._insert_memo.get(key)
        if got is not None:
            return got
        if not u or self.levels[x] >= self.levels[u[0]]:
            out = {(x,) + u: _ONE}
        else:
            u0, rest = u[0], u[1:]
            out = {}
            for w, c in self._insert(x, rest).items():
                w2 = (u0,) + w
                out[w2] = out.get(w2, Fraction(0)) + c
            for (p, q), c in self._table[(x, u0)]:
                for w2, sign in (((p, q) + rest, c), ((q, p) + rest, -c)):
                    c2 = out.get(w2, Fraction(0)) + sign
                    if c2:
                        out[w2] = c2
                    elif w2 in out:
                        del out[w2]
            out = {w: c for w, c in out.items() if c}
        self._insert_memo[key] = out
        return out

    def _nf_word(self, w: Word) -> dict:
        got = self._nf_memo.get(w)
        if got is not None:
            return got
        levels = self.levels
        if all(levels[w[i]] >= levels[w[i + 1]] for i in range(len(w) - 1)):
            out = {w: _ONE}
        else:
            out = {}
            for u, c in self._nf_word(w[1:]).items():
                for v, c2 in self._insert(w[0], u).items():
                    cv = out.get(v, Fraction(0)) + c * c2
                    if cv:
                        out[v] = cv
                    elif v in out:
                        del out[v]
        self._nf_memo[w] = out
        return out

    def normal_form(self, s: Series) -> Series:
        """Canonical PBW representative; equality in U(t_{n,N}) is equality here."""
        if s.alphabet != self.alphabet:
            s = promote(s, self.alphabet)
        terms: dict[Word, Fraction] = {}
        for w, c in s.terms.items():
            for v, c2 in self._nf_word(w).items():
                cv = terms.get(v, Fraction(0)) + c * c2
                if cv:
                    terms[v] = cv
                elif v in terms:
                    del terms[v]
        return Series(self.alphabet, s.degree, terms)

    def is_normal_word(self, w: Word) -> bool:
        return all(self.levels[w[i]] >= self.levels[w[i + 1]] for i in range(len(w) - 1))

    def is_zero(self, s: Series) -> bool:
        return self.normal_form(s).is_zero()


_ALGEBRA_CACHE: dict[AlgebraId, PresentedAlgebra] = {}


def algebra(aid: AlgebraId) -> PresentedAlgebra:
    got = _ALGEBRA_CACHE.get(aid)
    if got is None:
        got = _ALGEBRA_CACHE[aid] = PresentedAlgebra(aid)
    return got


def promote(s: Series, target: Alphabet) -> Series:
    """Re-express a series over a sub-alphabet (e.g. t0 inside t) by label."""
    lut = {k: target.index(lab) for k, lab in enumerate(s.alphabet.labels)}
    return Series(target, s.degree,
                  {tuple(lut[k] for k in w): c for w, c in s.terms.items()})


def normal_form(aid: AlgebraId, s: Series) -> Series:
    """Normal form in U(t_{n,N}) / U(u_{n,N}); t0 elements embed into t."""
    if aid.family == "t0":
        aid = AlgebraId("t", aid.n, aid.N)
    return algebra(aid).normal_form(s)


# -- ambient graded dimensions ----------------------------------------------

def pbw_ambient_dims(aid: AlgebraId, dmax: int) -> list[int]:
    """dim U(algebra)_d for d = 0..dmax, read off the PBW normal words.

    Normal words sort letters by non-increasing level with no constraint
    inside a level, so the counts come from the product of free-ideal ranks.
    For t0 the identity U(t) = U(t0) (x) k[z] peels off the central element.
    """
    if aid.family == "t0":
        full = pbw_ambient_dims(AlgebraId("t", aid.n, aid.N), dmax)
        return [full[d] - (full[d - 1] if d else 0) for d in range(dmax + 1)]
    levels = [level for _, level in generators_with_levels(aid)]
    ranks = [levels.count(k) for k in sorted(set(levels))]
    dims = [1] + [0] * dmax
    for r in ranks:
        new = dims[:]
        for d in range(1, dmax + 1):
            new[d] = dims[d] + r * new[d - 1]
        dims = new
    return dims


class LinearQuotientOracle:
    """Independent model: the free algebra modulo the degree-graded relation ideal.

    Slow but assumption-free; used to validate the PBW normal form, never as
    the production path.
    """

    def __init__(self, aid: AlgebraId, dmax: int):
        self.aid = aid
        self.alphabet = algebra_alphabet(aid)
        self.dmax = dmax
        rels = [dict(r.terms) for r in defining_relations(aid)]
        n = len(self.alphabet)
        self._spaces: dict[int, SparseRowSpace] = {}
        for d in range(2, dmax + 1):
            space = SparseRowSpace()
            for a in range(d - 1):
                b = d - 2 - a
                for u in itertools.product(range(n), repeat=a):
                    for v in itertools.product(range(n), repeat=b):
                        for rel in rels:
                            space.add({u + w + v: c for w, c in rel.items()})
            self._spaces[d] = space

    def dim(self, d: int) -> int:
        if d < 2:
            return len(self.alphabet) ** d
        return len(self.alphabet) ** d - self._spaces[d].rank

    def dims(self) -> list[int]:
        return [self.dim(d) for d in range(self.dmax + 1)]

    def reduce(self, s: Series) -> dict[Word, Fraction]:
        """Canonical coordinates of a series in the quotient, degree by degree."""
        if s.alphabet != self.alphabet:
            s = promote(s, self.alphabet)
        out: dict[Word, Fraction] = {}
        for d in range(min(s.degree, self.dmax) + 1):
            part = {w: c for w, c in s.terms.items() if len(w) == d}
            if d >= 2:
                part = self._spaces[d].reduce(part)
            out.update(part)
        return out


# -- distinguished elements ---------------------------------------------------

def z_element(aid: AlgebraId, degree: int = 1) -> Series:
    """The central element z_{n,N} = sum t^{1j} + sum_{i<j} sum_a t(a)^{ij}."""
    alphabet = algebra_alphabet(aid if aid.family == "t" else AlgebraId("t", aid.n, aid.N))
    coeffs = {lab: 1 for lab in alphabet.labels}
    return Series.lincomb(alphabet, degree, coeffs)


def split_off_z(x: Series, aid: AlgebraId) -> tuple[Series, Fraction]:
    """Unique decomposition x = x0 + c z of a degree-1 element, x0 in t0."""
    alphabet = algebra_alphabet(AlgebraId("t", aid.n, aid.N))
    if x.alphabet != alphabet:
        x = promote(x, alphabet)
    for w in x.terms:
        if len(w) != 1:
            raise ValueError("split_off_z applies to degree-1 elements")
    c = x.coeff_labels(t1_label(aid.n))
    return x.sub(z_element(aid, x.degree).scale(c)), c


# -- morphisms ---------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorMap:
    """A morphism given by generator images, with a descriptive tag."""

    source: Alphabet
    target: Alphabet
    images: dict
    tag: str = ""

    def __call__(self, x: Series) -> Series:
        if x.alphabet != self.source:
            raise ValueError(f"series not over the source alphabet of {self.tag!r}")
        return substitute(x, self.images)

    def compose(self, inner: "GeneratorMap") -> "GeneratorMap":
        """self o inner (apply inner first)."""
        images = {lab: self(im) for lab, im in inner.images.items()}
        return GeneratorMap(inner.source, self.target, images,
                            tag=f"{self.tag}.{inner.tag}")

    def to_json(self) -> dict:
        return {
            "source": {"labels": list(self.source.labels), "N": self.source.N},
            "target": {"labels": list(self.target.labels), "N": self.target.N},
            "tag": self.tag,
            "images": {lab: series_to_json(im) for lab, im in self.images.items()},
        }


def t0_free_alphabet(N: int) -> Alphabet:
    """t0_{3,N} is free of rank N+1 on A = t^{12} and B(a) = t(a)^{23}."""
    return Alphabet(("A",) + tuple(f"B({a})" for a in range(N)), N)


PHI_ALPHABET = Alphabet(("A", "B"), 1)


def c_series(alphabet: Alphabet, degree: int) -> Series:
    """C = -A - sum_a B(a); C is an alias, never a stored generator."""
    return Series.lincomb(alphabet, degree, {lab: -1 for lab in alphabet.labels})


def parse_fibers(pattern: str) -> list[list[int]]:
    """"1,23,4" -> [[1], [2, 3], [4]]."""
    return [[int(ch) for ch in part] for part in pattern.split(",")]


def upper_insertion(N: int, m: int, fibers, degree: int,
                    source: str = "t03") -> GeneratorMap:
    """The morphism x -> x^f of t_{n,N} -> t_{m,N} for f with f(1) = 1.

    fibers[k] is f^{-1}(k+1); missing strands simply appear in no fiber.
    With source="t03" the map is pulled back through A = t^{12}, B(a) = t(a)^{23}.
    """
    if isinstance(fibers, str):
        fibers = parse_fibers(fibers)
    n = len(fibers)
    if 1 not in fibers[0]:
        raise ValueError("upper insertions require f(1) = 1")
    seen = [s for fib in fibers for s in fib]
    if len(seen) != len(set(seen)) or any(not 1 <= s <= m for s in seen):
        raise ValueError("fibers must be disjoint subsets of {1..m}")
    target = algebra_alphabet(AlgebraId("t", m, N))

    def image_ta(a, i, j):
        out = {}
        for i2 in fibers[i - 1]:
            for j2 in fibers[j - 1]:
                lab = ta_label(a, i2, j2, N)
                out[lab] = out.get(lab, 0) + 1
        return Series.lincomb(target, degree, out)

    def image_t1(j):
        out = {}
        for j2 in fibers[j - 1]:
            out[t1_label(j2)] = out.get(t1_label(j2), 0) + 1
        for j2, j3 in itertools.combinations(fibers[j - 1], 2):
            for c in range(N):
                lab = ta_label(c, j2, j3, N)
                out[lab] = out.get(lab, 0) + 1
        for i2 in fibers[0]:
            if i2 == 1:
                continue
            for j2 in fibers[j - 1]:
                for c in range(N):
                    lab = ta_label(c, i2, j2, N)
                    out[lab] = out.get(lab, 0) + 1
        return Series.lincomb(target, degree, out)

    if source == "t03":
        if n != 3:
            raise ValueError("t03 source needs three fibers")
        src = t0_free_alphabet(N)
        images = {"A": image_t1(2)}
        for a in range(N):
            images[f"B({a})"] = image_ta(a, 2, 3)
    else:
        src = algebra_alphabet(AlgebraId("t", n, N))
        images = {}
        for lab in src.labels:
            role = src.role(src.index(lab))
            if role[0] == "t1":
                images[lab] = image_t1(role[1])
            else:
                images[lab] = image_ta(role[1], role[2], role[3])
    tag = "^{" + ",".join("".join(map(str, f)) for f in fibers) + "}"
    return GeneratorMap(src, target, images, tag=tag)


def classical_insertion(m: int, fibers, degree: int,
                        source: str = "phi") -> GeneratorMap:
    """x -> x^f for t_n -> t_m given by (t^{ij})^f = sum t^{i'j'}; N = 1 only.

    Strand 1 is allowed in any fiber; t^{1j'} letters appear when it is.
    """
    if isinstance(fibers, str):
        fibers = parse_fibers(fibers)
    n = len(fibers)
    seen = [s for fib in fibers for s in fib]
    if len(seen) != len(set(seen)) or any(not 1 <= s <= m for s in seen):
        raise ValueError("fibers must be disjoint subsets of {1..m}")
    target = algebra_alphabet(AlgebraId("t", m, 1))

    def image_tij(i, j):
        out = {}
        for i2 in fibers[i - 1]:
            for j2 in fibers[j - 1]:
                lab = t1_label(max(i2, j2)) if min(i2, j2) == 1 else ta_label(0, i2, j2, 1)
                out[lab] = out.get(lab, 0) + 1
        return Series.lincomb(target, degree, out)

    if source == "phi":
        if n != 3:
            raise ValueError("phi source needs three fibers")
        src = PHI_ALPHABET
        images = {"A": image_tij(1, 2), "B": image_tij(2, 3)}
    else:
        src = algebra_alphabet(AlgebraId("t", n, 1))
        images = {}
        for lab in src.labels:
            role = src.role(src.index(lab))
            if role[0] == "t1":
                images[lab] = image_tij(1, role[1])
            else:
                images[lab] = image_tij(role[2], role[3])
    tag = "^{" + ",".join("".join(map(str, f)) for f in fibers) + "}_cl"
    return GeneratorMap(src, target, images, tag=tag)


def lower_insertion(N: int, m: int, fibers, degree: int,
                    source: str = "phi") -> GeneratorMap:
    """The morphism x -> x^g of t_n -> t_{m,N} for g defined on a subset of {2..m}."""
    if isinstance(fibers, str):
        fibers = parse_fibers(fibers)
    n = len(fibers)
    seen = [s for fib in fibers for s in fib]
    if len(seen) != len(set(seen)) or any(not 2 <= s <= m for s in seen):
        raise ValueError("lower-insertion fibers must be disjoint subsets of {2..m}")
    target = algebra_alphabet(AlgebraId("t", m, N))

    def image_tij(i, j):
        out = {}
        for i2 in fibers[i - 1]:
            for j2 in fibers[j - 1]:
                lab = ta_label(0, i2, j2, N)
                out[lab] = out.get(lab, 0) + 1
        return Series.lincomb(target, degree, out)

    if source == "phi":
        if n != 3:
            raise ValueError("phi source needs three fibers")
        src = PHI_ALPHABET
        images = {"A": image_tij(1, 2), "B": image_tij(2, 3)}
    else:
        src = algebra_alphabet(AlgebraId("t", n, 1))
        images = {}
        for lab in src.labels:
            role = src.role(src.index(lab))
            if role[0] == "t1":
                images[lab] = image_tij(1, role[1])
            else:
                images[lab] = image_tij(role[2], role[3])
    tag = "^{" + ",".join("".join(map(str, f)) for f in fibers) + "}_low"
    return GeneratorMap(src, target, images, tag=tag)


# -- degeneration morphisms pi, delta and the scalar rho ----------------------

def project_pi(x: Series, N: int, Nprime: int) -> Series:
    """pi_{NN'}: t^{1i} -> d t^{1i}, t(a)^{ij} -> t(a mod N')^{ij} on t0_{3,N}."""
    if N % Nprime:
        raise ValueError("pi_{NN'} needs N' | N")
    d = N // Nprime
    src, tgt = t0_free_alphabet(N), t0_free_alphabet(Nprime)
    images = {"A": Series.lincomb(tgt, x.degree, {"A": d})}
    for a in range(N):
        images[f"B({a})"] = Series.gen(tgt, f"B({a % Nprime})", x.degree)
    return substitute(promote(x, src) if x.alphabet != src else x, images)


def project_delta(x: Series, N: int, Nprime: int) -> Series:
    """delta_{NN'}: t^{1i} -> t^{1i}, t(a)^{ij} -> t(a/d)^{ij} if d | a else 0."""
    if N % Nprime:
        raise ValueError("delta_{NN'} needs N' | N")
    d = N // Nprime
    src, tgt = t0_free_alphabet(N), t0_free_alphabet(Nprime)
    images = {"A": Series.gen(tgt, "A", x.degree)}
    for a in range(N):
        if a % d == 0:
            images[f"B({a})"] = Series.gen(tgt, f"B({a // d})", x.degree)
        else:
            images[f"B({a})"] = Series.zero(tgt, x.degree)
    return substitute(promote(x, src) if x.alphabet != src else x, images)


def rho(psi: Series, N: int, Nprime: int) -> Fraction:
    """rho_{NN'}(psi) = c_{B(0)}(pi(psi)) - c_{B(0)}(psi)."""
    pi_psi = project_pi(psi, N, Nprime)
    return pi_psi.coeff_labels("B(0)") - psi.coeff_labels("B(0)")


# -- automorphisms -------------------------------------------------------------

def tau_a_map(N: int, a: int, degree: int) -> GeneratorMap:
    """tau_a: A -> A, B(c) -> B(c+a) on t0_{3,N}."""
    alphabet = t0_free_alphabet(N)
    images = {"A": Series.gen(alphabet, "A", degree)}
    for c in range(N):
        images[f"B({c})"] = Series.gen(alphabet, f"B({(c + a) % N})", degree)
    return GeneratorMap(alphabet, alphabet, images, tag=f"tau_{a}")


def tau_map(degree: int) -> GeneratorMap:
    """The involution of t0_{3,2}: A <-> B(0) and B(1) <-> C."""
    alphabet = t0_free_alphabet(2)
    images = {
        "A": Series.gen(alphabet, "B(0)", degree),
        "B(0)": Series.gen(alphabet, "A", degree),
        "B(1)": c_series(alphabet, degree),
    }
    return GeneratorMap(alphabet, alphabet, images, tag="tau")


def s_prime_map(degree: int) -> GeneratorMap:
    """s' on t0_{3,2}: t^{12} <-> t^{13} (i.e. A -> C) and t^{23}_pm swapped."""
    alphabet = t0_free_alphabet(2)
    images = {
        "A": c_series(alphabet, degree),
        "B(0)": Series.gen(alphabet, "B(1)", degree),
        "B(1)": Series.gen(alphabet, "B(0)", degree),
    }
    return GeneratorMap(alphabet, alphabet, images, tag="s'")


def s_map(degree: int) -> GeneratorMap:
    """The order-4 automorphism s of t_{4,2} (restricting to t0_{4,2})."""
    alphabet = algebra_alphabet(AlgebraId("t", 4, 2))

    def g(label):
        return Series.gen(alphabet, label, degree)

    images = {
        t1_label(2): g(t1_label(3)),
        t1_label(3): g(t1_label(2)),
        t1_label(4): g(t1_label(4)),
    }
    for a in range(2):
        images[ta_label(a, 2, 3, 2)] = g(ta_label(a + 1, 2, 3, 2))
        images[ta_label(a, 2, 4, 2)] = g(ta_label(a + 1, 3, 4, 2))
        images[ta_label(a, 3, 4, 2)] = g(ta_label(a, 2, 4, 2))
    return GeneratorMap(alphabet, alphabet, images, tag="s")


def automorphism(name: str, x: Series, a: int = 0) -> Series:
    """Apply one of the named automorphisms tau, tau_a, s, s' to x."""
    if name == "tau":
        if x.alphabet != t0_free_alphabet(2):
            raise ValueError("tau acts on t0_{3,2}")
        return tau_map(x.degree)(x)
    if name == "tau_a":
        return tau_a_map(x.alphabet.N, a, x.degree)(x)
    if name == "s'":
        if x.alphabet != t0_free_alphabet(2):
            raise ValueError("s' acts on t0_{3,2}")
        return s_prime_map(x.degree)(x)
    if name == "s":
        alphabet = algebra_alphabet(AlgebraId("t", 4, 2))
        if x.alphabet != alphabet:
            x = promote(x, alphabet)
        return s_map(x.degree)(x)
    raise ValueError(f"unknown automorphism {name!r}")


def t03_to_t3_images(N: int, degree: int) -> GeneratorMap:
    """The inclusion t0_{3,N} -> t_{3,N}: A -> t^{12}, B(a) -> t(a)^{23}."""
    src = t0_free_alphabet(N)
    tgt = algebra_alphabet(AlgebraId("t", 3, N))
    images = {"A": Series.gen(tgt, t1_label(2), degree)}
    for a in range(N):
        images[f"B({a})"] = Series.gen(tgt, ta_label(a, 2, 3, N), degree)
    return GeneratorMap(src, tgt, images, tag="t03->t3")


def subalgebra_graded_dims(gens: list[Series], alg: PresentedAlgebra, dmax: int) -> list[int]:
    """Graded dimensions of the Lie subalgebra generated by degree-1 elements."""
    gens = [alg.normal_form(g) for g in gens]
    dims = []
    layer = []
    space = SparseRowSpace()
    for g in gens:
        if space.add(dict(g.terms)):
            layer.append(g)
    dims.append(len(layer))
    prev = layer
    for _ in range(2, dmax + 1):
        space = SparseRowSpace()
        layer = []
        for x in prev:
            for g in gens:
                v = alg.normal_form(x.bracket(g))
                if space.add(dict(v.terms)):
                    layer.append(v)
        dims.append(len(layer))
        prev = layer
    return dims
