"""Submodules of graded free modules: Groebner bases and syzygies.

Elements of a free module R^s are plain tuples of polynomials.  Module terms
are (component, monomial) pairs ordered term-over-position: ring order on the
monomial first, then lower component wins.  The syzygy computation runs a
tracked Buchberger loop over *all* pairs with matching leading component and
records one syzygy per zero reduction; together with the syzygies produced
while interreducing the input generators these generate the full syzygy
module (Schreyer's theorem), and every returned syzygy is certified by exact
expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .groebner import DEFAULT_PAIR_BUDGET, StepBudgetExceeded
from .rings import (
    Exponent,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
)

Vec = tuple[Polynomial, ...]


@dataclass(frozen=True)
class FreeModuleElement:
    """A homogeneous element of a graded free module with degree shifts.

    ``twists[k]`` is the degree of the k-th basis vector, so the element is
    homogeneous of degree ``deg(components[k]) + twists[k]`` (constant over
    the nonzero components).
    """

    components: tuple[Polynomial, ...]
    twists: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.components) != len(self.twists):
            raise ValueError("one twist per component required")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_homogeneous(self) -> bool:
        degs = {
            c.degree() + t for c, t in zip(self.components, self.twists) if not c.is_zero()
        }
        return len(degs) <= 1 and all(
            c.is_homogeneous() for c in self.components if not c.is_zero()
        )

    def degree(self) -> int:
        degs = {
            c.degree() + t for c, t in zip(self.components, self.twists) if not c.is_zero()
        }
        if len(degs) != 1:
            raise ValueError("element is zero or inhomogeneous")
        return degs.pop()


# -- raw vector helpers ------------------------------------------------------


def vec_zero(ring: PolyRing, rank: int) -> Vec:
    return tuple(ring.zero() for _ in range(rank))

def vec_unit(ring: PolyRing, rank: int, i: int) -> Vec:
    return tuple(ring.one() if k == i else ring.zero() for k in range(rank))

def vec_is_zero(v: Vec) -> bool:
    return all(c.is_zero() for c in v)

def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))

def vec_scale(a: Vec, c: Fraction) -> Vec:
    return tuple(x.scale(c) for x in a)

def vec_mul_term(a: Vec, e: Exponent, c: Fraction) -> Vec:
    return tuple(x.mul_term(e, c) for x in a)

def vec_mul_poly(a: Vec, p: Polynomial) -> Vec:
    return tuple(x * p for x in a)

def vec_degree(v: Vec) -> int:
    return max((c.degree() for c in v if not c.is_zero()), default=-1)


def vec_leading(ring: PolyRing, v: Vec) -> tuple[int, Exponent, Fraction]:
    """Leading module term (component, monomial, coefficient), TOP order."""
    best = None
    key = None
    for comp, p in enumerate(v):
        if p.is_zero():
            continue
        e, c = p.terms[0]
        k = (ring.exp_key(e), -comp)
        if key is None or k > key:
            key, best = k, (comp, e, c)
    if best is None:
        raise ValueError("zero vector has no leading term")
    return best


def vec_primitive(v: Vec) -> tuple[Vec, Fraction]:
    """Scale to coprime integer coefficients; returns (vector, factor used)."""
    coeffs = [c for p in v for _, c in p.terms]
    if not coeffs:
        return v, Fraction(1)
    den = lcm(*(c.denominator for c in coeffs))
    g = gcd(*(c.numerator * (den // c.denominator) for c in coeffs))
    factor = Fraction(den, g)
    ring = v[0].ring
    lead = vec_leading(ring, v)
    if lead[2] * factor < 0:
        factor = -factor
    return vec_scale(v, factor), factor


def vec_strip_leading(v: Vec, comp: int) -> Vec:
    out = list(v)
    p = v[comp]
    out[comp] = Polynomial(p.ring, p.terms[1:])
    return tuple(out)


# -- module division ---------------------------------------------------------


def module_reduce(
    ring: PolyRing, f: Vec, basis: Sequence[Vec]
) -> tuple[list[tuple[Exponent, Fraction, int]], Vec]:
    """Divide f by the basis; returns (reduction steps, remainder).

    Each step (monomial, coeff, k) subtracted monomial*coeff*basis[k].  No
    term of the remainder is divisible by any basis leading term.
    """
    leads = [vec_leading(ring, g) for g in basis]
    steps: list[tuple[Exponent, Fraction, int]] = []
    rank = len(f)
    rem: list[dict[Exponent, Fraction]] = [dict() for _ in range(rank)]
    p = f
    while not vec_is_zero(p):
        comp, e, c = vec_leading(ring, p)
        hit = False
        for k, (gc, ge, gcf) in enumerate(leads):
            if gc == comp and mono_divides(ge, e):
                t_exp, t_c = mono_div(e, ge), c / gcf
                p = vec_sub(p, vec_mul_term(basis[k], t_exp, t_c))
                steps.append((t_exp, t_c, k))
                hit = True
                break
        if not hit:
            rem[comp][e] = c
            p = vec_strip_leading(p, comp)
    return steps, tuple(ring.from_dict(d) for d in rem)


def module_normal_form(ring: PolyRing, f: Vec, basis: Sequence[Vec]) -> Vec:
    if not basis:
        return f
    _, r = module_reduce(ring, f, basis)
    return r


# -- tracked Buchberger and syzygies ----------------------------------------


def _module_spair(
    ring: PolyRing, gi: Vec, gj: Vec
) -> tuple[Vec, tuple[Exponent, Fraction], tuple[Exponent, Fraction]] | None:
    ci, ei, ki = vec_leading(ring, gi)
    cj, ej, kj = vec_leading(ring, gj)
    if ci != cj:
        return None
    L = mono_lcm(ei, ej)
    ti = (mono_div(L, ei), 1 / ki)
    tj = (mono_div(L, ej), 1 / kj)
    s = vec_sub(vec_mul_term(gi, *ti), vec_mul_term(gj, *tj))
    return s, ti, tj


def syzygy_generators(
    gens: Sequence[Vec], ring: PolyRing, budget: int | None = None
) -> list[Vec]:
    """Generators of {u in R^s : sum u_k * gens[k] = 0}.

    Runs a tracked Buchberger loop: every generator and every S-vector is
    reduced while carrying its expression over the original generators, and
    each zero reduction contributes one syzygy.
    """
    limit = DEFAULT_PAIR_BUDGET if budget is None else budget
    s = len(gens)
    if s == 0:
        return []
    rank = len(gens[0])

    basis: list[Vec] = []
    reps: list[Vec] = []
    syzygies: list[Vec] = []
    pairs: list[tuple[int, int]] = []

    def add_element(v: Vec, rep: Vec) -> None:
        v, factor = vec_primitive(v)
        rep = vec_scale(rep, factor)
        lead_comp = vec_leading(ring, v)[0]
        for k, g in enumerate(basis):
            if vec_leading(ring, g)[0] == lead_comp:
                pairs.append((k, len(basis)))
        basis.append(v)
        reps.append(rep)

    def reduce_tracked(v: Vec, rep: Vec) -> tuple[Vec, Vec]:
        steps, r = module_reduce(ring, v, basis)
        for t_exp, t_c, k in steps:
            rep = vec_sub(rep, vec_mul_term(reps[k], t_exp, t_c))
        return r, rep

    for i, f in enumerate(gens):
        unit = vec_unit(ring, s, i)
        if vec_is_zero(f):
            syzygies.append(unit)
            continue
        r, rep = reduce_tracked(f, unit)
        if vec_is_zero(r):
            syzygies.append(rep)
        else:
            add_element(r, rep)

    steps_done = 0
    while pairs:
        i, j = pairs.pop()
        sp = _module_spair(ring, basis[i], basis[j])
        if sp is None:
            continue
        steps_done += 1
        if steps_done > limit:
            raise StepBudgetExceeded(f"syzygy pair budget {limit} exhausted")
        svec, ti, tj = sp
        rep = vec_sub(vec_mul_term(reps[i], *ti), vec_mul_term(reps[j], *tj))
        r, rep = reduce_tracked(svec, rep)
        if vec_is_zero(r):
            if not vec_is_zero(rep):
                syzygies.append(rep)
        else:
            add_element(r, rep)

    for u in syzygies:
        total = vec_zero(ring, rank)
        for coeff, gen in zip(u, gens):
            total = vec_add(total, vec_mul_poly(gen, coeff))
        if not vec_is_zero(total):
            raise AssertionError("syzygy certificate failed to expand to zero")
    return syzygies


def module_groebner(
    gens: Sequence[Vec], ring: PolyRing, budget: int | None = None
) -> list[Vec]:
    """Reduced Groebner basis of the submodule generated by gens (TOP order)."""
    limit = DEFAULT_PAIR_BUDGET if budget is None else budget
    basis: list[Vec] = []
    pairs: list[tuple[int, int]] = []

    def add_element(v: Vec) -> None:
        v, _ = vec_primitive(v)
        lead_comp = vec_leading(ring, v)[0]
        for k, g in enumerate(basis):
            if vec_leading(ring, g)[0] == lead_comp:
                pairs.append((k, len(basis)))
        basis.append(v)

    for f in gens:
        if not vec_is_zero(f):
            r = module_normal_form(ring, f, basis) if basis else f
            if not vec_is_zero(r):
                add_element(r)

    steps_done = 0
    while pairs:
        i, j = pairs.pop()
        sp = _module_spair(ring, basis[i], basis[j])
        if sp is None:
            continue
        steps_done += 1
        if steps_done > limit:
            raise StepBudgetExceeded(f"module pair budget {limit} exhausted")
        r = module_normal_form(ring, sp[0], basis)
        if not vec_is_zero(r):
            add_element(r)

    # minimalize and interreduce for a canonical reduced basis
    order = sorted(
        range(len(basis)),
        key=lambda k: (vec_leading(ring, basis[k])[0], ring.exp_key(vec_leading(ring, basis[k])[1])),
    )
    minimal: list[Vec] = []
    for k in order:
        c, e, _ = vec_leading(ring, basis[k])
        if not any(
            vec_leading(ring, h)[0] == c and mono_divides(vec_leading(ring, h)[1], e)
            for h in minimal
        ):
            minimal.append(basis[k])
    reduced: list[Vec] = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        r = module_normal_form(ring, g, others) if others else g
        lead = vec_leading(ring, r)
        reduced.append(vec_scale(r, 1 / lead[2]))
    reduced.sort(key=lambda v: (vec_leading(ring, v)[0], ring.exp_key(vec_leading(ring, v)[1])))
    return reduced


def module_contains(ring: PolyRing, v: Vec, groebner: Sequence[Vec]) -> bool:
    return vec_is_zero(module_normal_form(ring, v, groebner))


# -- public syzygy surface ----------------------------------------------------


def syzygy_module(
    gens: Sequence[Polynomial], budget: int | None = None
) -> list[FreeModuleElement]:
    """Generators of the graded syzygy module of a list of homogeneous polynomials."""
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
    twists = tuple(g.degree() for g in gens)
    raw = syzygy_generators([(g,) for g in gens], ring, budget)
    return [FreeModuleElement(u, twists) for u in raw]
