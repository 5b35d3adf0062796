"""Every defining equation as a residual-returning predicate.

All group-mode residuals are reported as logarithms, so that "zero up to the
truncation degree" is one representation-independent test.  Predicates never
infer the truncation degree; it travels inside the PairGH / the input series.
The C letter is an alias for -A - sum_a B(a) and is expanded on construction
of the substitution maps, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freelie import is_lie
from .series import (Alphabet, Series, exp_series, fraction_to_str,
                     inverse_series, log_series, series_to_json, substitute)
from .tkn import (PHI_ALPHABET, AlgebraId, GeneratorMap, algebra, c_series,
                  classical_insertion, lower_insertion, project_delta,
                  project_pi, rho, s_prime_map, t0_free_alphabet, tau_a_map,
                  tau_map, upper_insertion)


@dataclass(frozen=True)
class Residual:
    ambient: str
    value: Series

    @property
    def zero(self) -> bool:
        return self.value.is_zero()

    @property
    def lowest_nonzero_degree(self):
        return self.value.min_degree()

    def to_json(self, include_value: bool = False) -> dict:
        out = {"ambient": self.ambient, "zero": self.zero,
               "lowest_nonzero_degree": self.lowest_nonzero_degree}
        if include_value:
            out["residual"] = series_to_json(self.value)
        return out


def _one(alphabet: Alphabet, degree: int) -> Series:
    return Series.one(alphabet, degree)


def _is_grouplike_shape(x: Series) -> bool:
    return x.constant_term() == 1 and is_lie(log_series(x))


@dataclass(frozen=True)
class PairGH:
    """A candidate pair: (phi, psi) in lie mode or (g, h) in group mode."""

    first: Series   # over PHI_ALPHABET (A, B)
    second: Series  # over t0_free_alphabet(N) (A, B(0), ..., B(N-1))
    N: int
    degree: int
    mode: str  # "lie" | "group"

    def __post_init__(self):
        if self.mode not in ("lie", "group"):
            raise ValueError("mode must be lie or group")
        if self.first.alphabet != PHI_ALPHABET:
            raise ValueError("first component must live over the A, B alphabet")
        if self.second.alphabet != t0_free_alphabet(self.N):
            raise ValueError("second component must live over A, B(0..N-1)")
        if self.first.degree != self.degree or self.second.degree != self.degree:
            raise ValueError("components must carry the pair's truncation degree")
        if self.mode == "lie":
            if not is_lie(self.first) or not is_lie(self.second):
                raise ValueError("lie-mode components must be Lie elements")
        else:
            if not _is_grouplike_shape(self.first) or not _is_grouplike_shape(self.second):
                raise ValueError("group-mode components must be group-like")

    @classmethod
    def identity(cls, N: int, degree: int) -> "PairGH":
        return cls(_one(PHI_ALPHABET, degree), _one(t0_free_alphabet(N), degree),
                   N, degree, "group")

    @classmethod
    def from_lie(cls, phi: Series, psi: Series, N: int, degree: int) -> "PairGH":
        return cls(phi, psi, N, degree, "lie")

    def exponential(self) -> "PairGH":
        if self.mode != "lie":
            raise ValueError("exponential applies to lie-mode pairs")
        return PairGH(exp_series(self.first), exp_series(self.second),
                      self.N, self.degree, "group")

    def to_json(self) -> dict:
        return {"mode": self.mode, "N": self.N, "degree": self.degree,
                "first": series_to_json(self.first),
                "second": series_to_json(self.second)}


# -- the four argument substitutions of the octagon ---------------------------

def octagon_maps(N: int, degree: int) -> list[GeneratorMap]:
    """The substitutions behind the four octagon factors.

    In slot order: (A, B(0), ..., B(N-1)), (A, B(1), ..., B(0)),
    (C, B(1), B(0), ..., B(2)) and (C, B(0), B(N-1), ..., B(1)).
    """
    alphabet = t0_free_alphabet(N)

    def gm(tag, a_img, b_slot):
        images = {"A": a_img}
        for i in range(N):
            images[f"B({i})"] = Series.gen(alphabet, f"B({b_slot(i) % N})", degree)
        return GeneratorMap(alphabet, alphabet, images, tag=tag)

    a = Series.gen(alphabet, "A", degree)
    c = c_series(alphabet, degree)
    return [
        gm("oct1", a, lambda i: i),
        gm("oct2", a, lambda i: i + 1),
        gm("oct3", c, lambda i: 1 - i),
        gm("oct4", c, lambda i: -i),
    ]


# -- duality and hexagons (A, B ambient) ---------------------------------------

def _phi_maps(degree: int):
    """Argument substitutions (B,A), (B,C), (C,A) with C = -A-B."""
    al = PHI_ALPHABET
    a = Series.gen(al, "A", degree)
    b = Series.gen(al, "B", degree)
    c = c_series(al, degree)
    swap = GeneratorMap(al, al, {"A": b, "B": a}, tag="(B,A)")
    bc = GeneratorMap(al, al, {"A": b, "B": c}, tag="(B,C)")
    ca = GeneratorMap(al, al, {"A": c, "B": a}, tag="(C,A)")
    return swap, bc, ca


def residual_duality_hexagon(x: Series, mode: str) -> tuple[Residual, Residual]:
    """Duality and hexagon residuals; mode in {lie, grt-group, M-variant}."""
    if x.alphabet != PHI_ALPHABET:
        raise ValueError("duality/hexagon live over the A, B alphabet")
    d = x.degree
    swap, bc, ca = _phi_maps(d)
    al = PHI_ALPHABET
    if mode == "lie":
        dual = x + swap(x)
        hexa = x + bc(x) + ca(x)
    elif mode in ("grt-group", "M-variant"):
        dual = log_series(x.mul(swap(x)))
        if mode == "grt-group":
            hexa = log_series(ca(x).mul(bc(x)).mul(x))
        else:
            ea = exp_series(Series.gen(al, "A", d).scale(Fraction(1, 2)))
            eb = exp_series(Series.gen(al, "B", d).scale(Fraction(1, 2)))
            ec = exp_series(c_series(al, d).scale(Fraction(1, 2)))
            hexa = log_series(ea.mul(ca(x)).mul(ec).mul(bc(x)).mul(eb).mul(x))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Residual("t0_3", dual), Residual("t0_3", hexa)


def check_mu(g: Series, mu: Fraction) -> bool:
    cab = g.coeff_labels("A", "B")
    return mu != 0 and Fraction(mu) ** 2 == 24 * cab


def rescale(g: Series, mu) -> Series:
    """g(A/mu, B/mu); mu must be a nonzero rational with mu^2 = 24 c_AB(g).

    Only rational mu is supported; when 24 c_AB(g) is not a perfect rational
    square the rescaling would need a quadratic extension and is rejected.
    """
    mu = Fraction(mu)
    if g.coeff_labels("A", "B") == 0:
        raise ValueError("c_AB(g) = 0: no valid rescaling exists")
    if not check_mu(g, mu):
        raise ValueError("mu^2 must equal 24 c_AB(g)")
    al = PHI_ALPHABET
    images = {"A": Series.gen(al, "A", g.degree).scale(1 / mu),
              "B": Series.gen(al, "B", g.degree).scale(1 / mu)}
    return substitute(g, images)


# -- pentagon in t0_4 -----------------------------------------------------------

_PENTAGON_FIBERS = ("1,2,34", "12,3,4", "2,3,4", "1,23,4", "1,2,3")


def residual_pentagon(x: Series, mode: str) -> Residual:
    """x^{1,2,34} + x^{12,3,4} - x^{2,3,4} - x^{1,23,4} - x^{1,2,3} in U(t_4)."""
    if x.alphabet != PHI_ALPHABET:
        raise ValueError("pentagon input lives over the A, B alphabet")
    d = x.degree
    alg = algebra(AlgebraId("t", 4, 1))
    terms = [classical_insertion(4, fib, d)(x) for fib in _PENTAGON_FIBERS]
    if mode == "lie":
        value = terms[0] + terms[1] - terms[2] - terms[3] - terms[4]
        return Residual("t_4", alg.normal_form(value))
    if mode == "group":
        lhs = alg.normal_form(terms[0].mul(terms[1]))
        rhs = alg.normal_form(terms[2].mul(terms[3]).mul(terms[4]))
        value = alg.normal_form(log_series(lhs.mul(inverse_series(rhs))))
        return Residual("t_4", value)
    raise ValueError(f"unknown mode {mode!r}")


# -- special derivation / special action ----------------------------------------

def _ad(u: Series, x: Series) -> Series:
    """u x u^{-1}."""
    return u.mul(x).mul(inverse_series(u))


def residual_special(x: Series, mode: str, cyclotomic: bool = False,
                     N: int = 1) -> Residual:
    d = x.degree
    if not cyclotomic:
        if x.alphabet != PHI_ALPHABET:
            raise ValueError("non-cyclotomic special condition lives over A, B")
        al = PHI_ALPHABET
        a = Series.gen(al, "A", d)
        b = Series.gen(al, "B", d)
        c = c_series(al, d)
        to_c = GeneratorMap(al, al, {"A": a, "B": c}, tag="(A,C)")
        if mode == "lie":
            value = b.bracket(x) + c.bracket(to_c(x))
        elif mode == "group":
            value = a + _ad(inverse_series(x), b) + _ad(inverse_series(to_c(x)), c)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        return Residual("t0_3", value)
    al = t0_free_alphabet(N)
    if x.alphabet != al:
        raise ValueError("cyclotomic special condition lives over A, B(0..N-1)")
    maps = octagon_maps(N, d)
    c = c_series(al, d)
    if mode == "lie":
        value = Series.zero(al, d)
        for a_ in range(N):
            ba = Series.gen(al, f"B({a_})", d)
            value = value + tau_a_map(N, a_, d)(x).bracket(ba)
        value = value + (x - maps[3](x)).bracket(c)
    elif mode == "group":
        value = Series.gen(al, "A", d)
        for a_ in range(N):
            ba = Series.gen(al, f"B({a_})", d)
            value = value + _ad(inverse_series(tau_a_map(N, a_, d)(x)), ba)
        value = value + _ad(inverse_series(x).mul(maps[3](x)), c)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Residual(f"t0_3,{N}", value)


# -- mixed pentagon in t0_{4,N} --------------------------------------------------

def _mixed_pentagon_terms(p: PairGH):
    d = p.degree
    N = p.N
    psi_maps = [upper_insertion(N, 4, fib, d) for fib in
                ("1,2,34", "12,3,4", "1,23,4", "1,2,3")]
    phi_map = lower_insertion(N, 4, "2,3,4", d)
    return ([m(p.second) for m in psi_maps], phi_map(p.first))


def residual_mixed_pentagon(p: PairGH) -> Residual:
    """psi^{1,2,34} + psi^{12,3,4} = phi^{2,3,4} + psi^{1,23,4} + psi^{1,2,3}."""
    alg = algebra(AlgebraId("t", 4, p.N))
    (h1, h2, h4, h5), g3 = _mixed_pentagon_terms(p)
    if p.mode == "lie":
        value = alg.normal_form(h1 + h2 - g3 - h4 - h5)
    else:
        lhs = alg.normal_form(h1.mul(h2))
        rhs = alg.normal_form(g3.mul(h4).mul(h5))
        value = alg.normal_form(log_series(lhs.mul(inverse_series(rhs))))
    return Residual(f"t_4,{p.N}", value)


# -- octagon -----------------------------------------------------------------------

def residual_octagon(p: PairGH, variant: str) -> Residual:
    d = p.degree
    N = p.N
    al = t0_free_alphabet(N)
    m1, m2, m3, m4 = octagon_maps(N, d)
    h = p.second
    if variant == "lie":
        if p.mode != "lie":
            raise ValueError("lie octagon needs a lie-mode pair")
        value = m1(h) - m2(h) + m3(h) - m4(h)
    elif variant in ("group", "pseudo"):
        if p.mode != "group":
            raise ValueError(f"{variant} octagon needs a group-mode pair")
        if variant == "group":
            prod = (inverse_series(m2(h)).mul(m3(h))
                    .mul(inverse_series(m4(h))).mul(m1(h)))
        else:
            eb1 = exp_series(Series.gen(al, f"B({1 % N})", d).scale(Fraction(1, 2)))
            eb0 = exp_series(Series.gen(al, "B(0)", d).scale(Fraction(1, 2)))
            ec = exp_series(c_series(al, d).scale(Fraction(1, N)))
            ea = exp_series(Series.gen(al, "A", d).scale(Fraction(1, N)))
            prod = (inverse_series(m2(h)).mul(eb1).mul(m3(h)).mul(ec)
                    .mul(inverse_series(m4(h))).mul(eb0).mul(m1(h)).mul(ea))
        value = log_series(prod)
    else:
        raise ValueError(f"unknown octagon variant {variant!r}")
    return Residual(f"t0_3,{N}", value)


def octagon_defect(psi: Series) -> Series:
    """psi^{1,2,3} - psi^{1,3,2} + s'(psi)^{1,2,3} - s'(psi)^{1,3,2} at N = 2.

    Written in the free coordinates of t0_{3,2}, the strand swap {1,3,2} acts
    as A -> C, B(a) -> B(-a), so the defect equals the lie octagon residual.
    """
    al = t0_free_alphabet(2)
    if psi.alphabet != al:
        raise ValueError("octagon defect is an N = 2 quantity")
    d = psi.degree
    _, _, _, m4 = octagon_maps(2, d)
    sp = s_prime_map(d)
    return psi - m4(psi) + sp(psi) - m4(sp(psi))


def defect_in_free_b_subalgebra(omega: Series) -> bool:
    """Membership in the free Lie subalgebra on B(0), B(1) inside t0_{3,2}.

    A Lie element lies there iff its associative expansion avoids the letter A.
    """
    if omega.alphabet != t0_free_alphabet(2):
        raise ValueError("membership test is an N = 2 quantity")
    if not is_lie(omega):
        return False
    a_idx = omega.alphabet.index("A")
    return all(a_idx not in w for w in omega.terms)


# -- distribution -------------------------------------------------------------------

def residual_distribution(p: PairGH, Nprime: int) -> Residual:
    """(pi - delta)(psi) = rho(psi) B(0), or pi(h) = e^{rho(h)B(0)} delta(h)."""
    if p.N % Nprime:
        raise ValueError("distribution relations need N' | N")
    tgt = t0_free_alphabet(Nprime)
    psi = p.second
    r = rho(psi, p.N, Nprime)
    b0 = Series.gen(tgt, "B(0)", p.degree)
    if p.mode == "lie":
        value = project_pi(psi, p.N, Nprime) - project_delta(psi, p.N, Nprime) \
            - b0.scale(r)
    else:
        rhs = exp_series(b0.scale(r)).mul(project_delta(psi, p.N, Nprime))
        value = log_series(project_pi(psi, p.N, Nprime).mul(inverse_series(rhs)))
    return Residual(f"t0_3,{Nprime}", value)


# -- Broadhurst duality ---------------------------------------------------------------

def residual_broadhurst(x: Series, mode: str) -> tuple[Residual, Fraction]:
    """tau(psi) + psi + alpha (A + B(0)) = 0, or tau(h) e^{aB(0)} h e^{aA} = 1.

    alpha is read off as the coefficient of B(1) (of log x in group mode;
    it agrees with the coefficient in x itself since B(1) has degree 1).
    """
    al = t0_free_alphabet(2)
    if x.alphabet != al:
        raise ValueError("Broadhurst duality is an N = 2 relation")
    d = x.degree
    tau = tau_map(d)
    if mode == "lie":
        alpha = x.coeff_labels("B(1)")
        extra = Series.lincomb(al, d, {"A": 1, "B(0)": 1}).scale(alpha)
        value = tau(x) + x + extra
    elif mode == "group":
        alpha = log_series(x).coeff_labels("B(1)")
        ea = exp_series(Series.gen(al, "A", d).scale(alpha))
        eb0 = exp_series(Series.gen(al, "B(0)", d).scale(alpha))
        value = log_series(tau(x).mul(eb0).mul(x).mul(ea))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Residual("t0_3,2", value), alpha


# -- reporting -----------------------------------------------------------------------

def check_report(name: str, variant: str, N: int, degree: int,
                 residual: Residual, include_value: bool = False,
                 **extra) -> dict:
    out = {"relation": name, "variant": variant, "N": N, "degree": degree,
           "zero": residual.zero,
           "lowest_nonzero_degree": residual.lowest_nonzero_degree}
    if include_value:
        out["residual"] = series_to_json(residual.value)
    for k, v in extra.items():
        out[k] = fraction_to_str(v) if isinstance(v, Fraction) else v
    return out


def full_suite(p: PairGH, include_values: bool = False) -> list[dict]:
    """Run every applicable relation on a pair and emit check reports."""
    out = []
    mode = p.mode
    phi_mode = "lie" if mode == "lie" else "grt-group"
    dual, hexa = residual_duality_hexagon(p.first, phi_mode)
    out.append(check_report("duality", phi_mode, 1, p.degree, dual, include_values))
    out.append(check_report("hexagon", phi_mode, 1, p.degree, hexa, include_values))
    out.append(check_report("pentagon", mode, 1, p.degree,
                            residual_pentagon(p.first, mode), include_values))
    out.append(check_report("special", mode, 1, p.degree,
                            residual_special(p.first, mode), include_values))
    out.append(check_report("mixed_pentagon", mode, p.N, p.degree,
                            residual_mixed_pentagon(p), include_values))
    out.append(check_report("octagon", mode if mode == "lie" else "group",
                            p.N, p.degree,
                            residual_octagon(p, "lie" if mode == "lie" else "group"),
                            include_values))
    out.append(check_report("special_b", mode, p.N, p.degree,
                            residual_special(p.second, mode, cyclotomic=True, N=p.N),
                            include_values))
    for nprime in range(1, p.N):
        if p.N % nprime == 0:
            out.append(check_report("distribution", f"N'={nprime}", p.N, p.degree,
                                    residual_distribution(p, nprime), include_values))
    if p.N == 2:
        res, alpha = residual_broadhurst(p.second, mode)
        out.append(check_report("broadhurst", mode, 2, p.degree, res,
                                include_values, alpha=alpha))
    return out
