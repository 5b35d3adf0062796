"""Group and Lie structure on the pairs: derivations, Ihara-type bracket,
multiplication, torsor action, exponential flow and degree-by-degree lifting.

Conventions: the group law is

    g1 o g2 = g2(A,B) . g1(A, Ad(g2^{-1})B)
    h1 o h2 = h2 . h1(A, Ad(h2^{-1})B(0), Ad(tau_1 h2^{-1})B(1), ...)

and the torsor action is the same formula with the left factor from the
associator side.  The exponential is the time-1 flow of the right-invariant
vector field of a Lie pair, which is linear at fixed generator, so it is
computed as an honest operator exponential, truncated by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .freelie import is_lie
from .linalg import solve_affine
from .series import (Series, exp_series, inverse_series, log_series,
                     substitute)
from .tkn import PHI_ALPHABET, GeneratorMap, t0_free_alphabet, tau_a_map
from .relations import (PairGH, octagon_maps, residual_duality_hexagon,
                        residual_mixed_pentagon, residual_octagon,
                        residual_pentagon, residual_special)
from .solve import system


class LiftError(RuntimeError):
    """No lift exists at some degree; this would falsify the surjectivity
    of the truncation maps and must surface as a finding, never be absorbed."""


def word_derivation(s: Series, images: dict) -> Series:
    """Extend generator images by the Leibniz rule over associative words."""
    al = s.alphabet
    d = s.degree
    gens = [Series.gen(al, lab, d) for lab in al.labels]
    out = Series.zero(al, d)
    for w, c in s.terms.items():
        for i in range(len(w)):
            img = images[al.labels[w[i]]]
            if img.is_zero():
                continue
            pre = Series(al, d, {w[:i]: Fraction(1)})
            post = Series(al, d, {w[i + 1:]: Fraction(1)})
            out = out + pre.mul(img).mul(post).scale(c)
    return out


@dataclass(frozen=True)
class TangentialDerivation:
    """D_phi on the A,B algebra or its cyclotomic analogue on A,B(0..N-1)."""

    kind: str  # "phi" | "psi"
    series: Series
    N: int = 1

    def images(self) -> dict:
        d = self.series.degree
        if self.kind == "phi":
            al = PHI_ALPHABET
            a = Series.gen(al, "A", d)
            return {"A": self.series.bracket(a), "B": Series.zero(al, d)}
        al = t0_free_alphabet(self.N)
        a = Series.gen(al, "A", d)
        out = {"A": self.series.bracket(a)}
        for c in range(self.N):
            bc = Series.gen(al, f"B({c})", d)
            out[f"B({c})"] = (self.series - tau_a_map(self.N, c, d)(self.series)).bracket(bc)
        return out


def apply_derivation(der: TangentialDerivation, x: Series) -> Series:
    if x.alphabet != der.series.alphabet:
        raise ValueError("derivation and argument live over different algebras")
    return word_derivation(x, der.images())


def ihara_bracket(p1: PairGH, p2: PairGH) -> PairGH:
    """<v1, v2> = [v1, v2] + D_{v2}(v1) - D_{v1}(v2), componentwise."""
    if p1.mode != "lie" or p2.mode != "lie":
        raise ValueError("the bracket is defined on lie-mode pairs")
    if (p1.N, p1.degree) != (p2.N, p2.degree):
        raise ValueError("pairs must share N and truncation")
    d1p = TangentialDerivation("phi", p1.first)
    d2p = TangentialDerivation("phi", p2.first)
    d1s = TangentialDerivation("psi", p1.second, p1.N)
    d2s = TangentialDerivation("psi", p2.second, p2.N)
    phi = (p1.first.bracket(p2.first)
           + apply_derivation(d2p, p1.first) - apply_derivation(d1p, p2.first))
    psi = (p1.second.bracket(p2.second)
           + apply_derivation(d2s, p1.second) - apply_derivation(d1s, p2.second))
    return PairGH(phi, psi, p1.N, p1.degree, "lie")


# -- group law -----------------------------------------------------------------

def _ad(u: Series, x: Series) -> Series:
    return u.mul(x).mul(inverse_series(u))


def multiply(p1: PairGH, p2: PairGH) -> PairGH:
    """(g1, h1) o (g2, h2); also the right torsor action on associator pairs."""
    if p1.mode != "group" or p2.mode != "group":
        raise ValueError("multiply is defined on group-mode pairs")
    if (p1.N, p1.degree) != (p2.N, p2.degree):
        raise ValueError("pairs must share N and truncation")
    d = p1.degree
    N = p1.N
    g1, g2 = p1.first, p2.first
    al_g = PHI_ALPHABET
    g_images = {"A": Series.gen(al_g, "A", d),
                "B": _ad(inverse_series(g2), Series.gen(al_g, "B", d))}
    g = g2.mul(substitute(g1, g_images))
    h1, h2 = p1.second, p2.second
    al_h = t0_free_alphabet(N)
    h_images = {"A": Series.gen(al_h, "A", d)}
    for a in range(N):
        ta_h2 = tau_a_map(N, a, d)(h2)
        h_images[f"B({a})"] = _ad(inverse_series(ta_h2),
                                  Series.gen(al_h, f"B({a})", d))
    h = h2.mul(substitute(h1, h_images))
    return PairGH(g, h, N, d, "group")


torsor_act = multiply


def anti_realization(p: PairGH) -> tuple[GeneratorMap, GeneratorMap]:
    """The automorphism pair: A -> A, B -> Ad(g^{-1})B and its cyclotomic twin."""
    if p.mode != "group":
        raise ValueError("the realization applies to group-mode pairs")
    d, N = p.degree, p.N
    al_g = PHI_ALPHABET
    g_map = GeneratorMap(al_g, al_g, {
        "A": Series.gen(al_g, "A", d),
        "B": _ad(inverse_series(p.first), Series.gen(al_g, "B", d)),
    }, tag="A_g")
    al_h = t0_free_alphabet(N)
    h_images = {"A": Series.gen(al_h, "A", d)}
    for a in range(N):
        ta_h = tau_a_map(N, a, d)(p.second)
        h_images[f"B({a})"] = _ad(inverse_series(ta_h),
                                  Series.gen(al_h, f"B({a})", d))
    h_map = GeneratorMap(al_h, al_h, h_images, tag="Abar_h")
    return g_map, h_map


# -- exponential flow ------------------------------------------------------------

def _flow_images(v: PairGH):
    d, N = v.degree, v.N
    al_g = PHI_ALPHABET
    phi_im = {"A": Series.zero(al_g, d),
              "B": v.first.bracket(Series.gen(al_g, "B", d))}
    al_h = t0_free_alphabet(N)
    psi_im = {"A": Series.zero(al_h, d)}
    for a in range(N):
        psi_im[f"B({a})"] = tau_a_map(N, a, d)(v.second).bracket(
            Series.gen(al_h, f"B({a})", d))
    return phi_im, psi_im


def lie_residual_suite(v: PairGH) -> bool:
    """All grtm-type Lie residuals of a (possibly inhomogeneous) Lie pair."""
    checks = [
        residual_duality_hexagon(v.first, "lie")[0],
        residual_duality_hexagon(v.first, "lie")[1],
        residual_pentagon(v.first, "lie"),
        residual_special(v.first, "lie"),
        residual_mixed_pentagon(v),
        residual_octagon(v, "lie"),
        residual_special(v.second, "lie", cyclotomic=True, N=v.N),
    ]
    return all(r.zero for r in checks) and v.second.coeff_labels("B(0)") == 0


def exp_flow(v: PairGH, require_valid: bool = True) -> PairGH:
    """Time-1 flow of the right-invariant field of v, from the identity.

    The generator acts by T(g, h) = (phi.g - del_phi(g), psi.h - del_psi(h))
    with del_phi: A -> 0, B -> [phi, B] and del_psi: A -> 0,
    B(a) -> [tau_a(psi), B(a)]; T is linear, so exp(T)(1, 1) is exact.
    """
    if v.mode != "lie":
        raise ValueError("exp_flow integrates a lie-mode pair")
    if require_valid and not lie_residual_suite(v):
        raise ValueError("pair is not in the Lie algebra up to its truncation")
    d, N = v.degree, v.N
    phi_im, psi_im = _flow_images(v)
    g = Series.one(PHI_ALPHABET, d)
    h = Series.one(t0_free_alphabet(N), d)
    tg, th = g, h
    j = 0
    while True:
        j += 1
        tg = v.first.mul(tg) - word_derivation(tg, phi_im)
        th = v.second.mul(th) - word_derivation(th, psi_im)
        if tg.is_zero() and th.is_zero():
            break
        c = Fraction(1, factorial(j))
        g = g + tg.scale(c)
        h = h + th.scale(c)
    return PairGH(g, h, N, d, "group")


# -- group residual vector and lifting ---------------------------------------------

def group_residual_vector(p: PairGH) -> dict:
    """All GRTM group-mode residuals of a pair as one sparse vector."""
    fns = [
        lambda q: residual_duality_hexagon(q.first, "grt-group")[0].value,
        lambda q: residual_duality_hexagon(q.first, "grt-group")[1].value,
        lambda q: residual_pentagon(q.first, "group").value,
        lambda q: residual_special(q.first, "group").value,
        lambda q: residual_mixed_pentagon(q).value,
        lambda q: residual_octagon(q, "group").value,
        lambda q: residual_special(q.second, "group", cyclotomic=True, N=q.N).value,
    ]
    vec: dict = {}
    for k, fn in enumerate(fns):
        for w, c in fn(p).terms.items():
            vec[(k, w)] = c
    c0 = log_series(p.second).coeff_labels("B(0)")
    if c0:
        vec[("coeff", 0)] = c0
    return vec


def min_valid_degree(p: PairGH) -> int:
    """Largest n such that all group residuals vanish below degree n, capped
    at degree + 1."""
    vec = group_residual_vector(p)
    lows = [len(w) for (k, w) in vec if k != "coeff"]
    if any(k == "coeff" for k, _ in vec):
        lows.append(1)
    return min(lows, default=p.degree + 1)


def lift(p: PairGH, n: int) -> tuple[PairGH, int]:
    """Correct p at degree n so all group residuals vanish mod degree n+1.

    The correction multiplies the components on the right by exponentials of
    homogeneous degree-n Lie elements; the residual change is affine in the
    correction, so one exact affine solve finds it.  Returns the corrected
    pair and the dimension of the solution set.
    """
    if p.mode != "group":
        raise ValueError("lift applies to group-mode pairs")
    if n > p.degree:
        raise ValueError("lift degree exceeds the truncation")
    base = group_residual_vector(p)
    if any(k == "coeff" and n > 1 for (k, _) in base) or \
       any(k != "coeff" and len(w) < n for (k, w) in base):
        raise ValueError(f"pair is not valid modulo degree {n}")

    def corrected(phi: Series, psi: Series) -> PairGH:
        return PairGH(p.first.mul(exp_series(phi)),
                      p.second.mul(exp_series(psi)), p.N, p.degree, "group")

    def degree_n_vec(q: PairGH) -> dict:
        out = {}
        for key, c in group_residual_vector(q).items():
            if (key[0] == "coeff" and n == 1) or \
               (key[0] != "coeff" and len(key[1]) == n):
                out[key] = c
        return out

    cols = [(Series(PHI_ALPHABET, p.degree, a.terms),
             Series(t0_free_alphabet(p.N), p.degree, b.terms))
            for a, b in system("grtm", p.N).unknown_basis(n)]
    f0 = degree_n_vec(p)
    col_vecs = []
    for phi, psi in cols:
        fj = degree_n_vec(corrected(phi, psi))
        col_vecs.append({k: fj.get(k, Fraction(0)) - f0.get(k, Fraction(0))
                         for k in set(fj) | set(f0)})
    keys = sorted({k for v in col_vecs for k in v} | set(f0),
                  key=lambda k: (str(k[0]), str(k[1])))
    rows = [[v.get(key, Fraction(0)) for v in col_vecs] for key in keys]
    rhs = [-f0.get(key, Fraction(0)) for key in keys]
    sol = solve_affine(rows, rhs, len(cols))
    if sol is None:
        raise LiftError(
            f"no degree-{n} lift exists: the truncation map fails to be "
            f"surjective here, which contradicts the expected group structure")
    x, freedom = sol
    phi = Series.zero(PHI_ALPHABET, p.degree)
    psi = Series.zero(t0_free_alphabet(p.N), p.degree)
    for c, (a, b) in zip(x, cols):
        if c:
            phi = phi + a.scale(c)
            psi = psi + b.scale(c)
    return corrected(phi, psi), freedom


def lift_to(p: PairGH, n_from: int) -> PairGH:
    """Iterate lift from degree n_from up to the pair's truncation degree."""
    q = p
    for n in range(n_from, p.degree + 1):
        q, _ = lift(q, n)
    return q
