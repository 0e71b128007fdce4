"""Hilbert series, Krull dimension, and graded dimension counting.

The Hilbert series of R/I is computed from the leading-term ideal of a
Groebner basis via the standard pivot recursion
``N(M) = N(M + (x)) + t * N(M : x)`` on monomial ideals, with the numerator
taken over the full denominator (1-t)^n.  Graded dimensions, Krull dimension
and multiplicity all derive from the numerator exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .groebner import Ideal
from .rings import Exponent, mono_degree

IntPoly = tuple[int, ...]  # dense coefficients in the formal variable t


def _trim(c: list[int]) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _shift(a: IntPoly, k: int) -> IntPoly:
    return _trim([0] * k + list(a)) if a else a


def _mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _eval_at_one(a: IntPoly) -> int:
    return sum(a)


def _div_one_minus_t(a: IntPoly) -> IntPoly | None:
    """a / (1-t) when exact, else None (exact iff a(1) = 0)."""
    if not a:
        return ()
    if _eval_at_one(a) != 0:
        return None
    q = []
    acc = 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return _trim(q)


# -- monomial-ideal numerator -------------------------------------------------


def _minimalize(gens: frozenset[Exponent]) -> frozenset[Exponent]:
    out = []
    for g in sorted(gens, key=mono_degree):
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return frozenset(out)


def monomial_numerator(gens: Sequence[Exponent], num_vars: int) -> IntPoly:
    """Numerator of Hilb(R/M) over (1-t)^num_vars for a monomial ideal M."""
    memo: dict[frozenset[Exponent], IntPoly] = {}

    def rec(ms: frozenset[Exponent]) -> IntPoly:
        got = memo.get(ms)
        if got is not None:
            return got
        if not ms:
            result: IntPoly = (1,)
        elif any(mono_degree(g) == 0 for g in ms):
            result = ()
        else:
            supports = [tuple(i for i, x in enumerate(g) if x) for g in ms]
            if all(len(s) == 1 for s in supports):
                # pairwise coprime pure powers: product of (1 - t^deg)
                result = (1,)
                for g in ms:
                    d = mono_degree(g)
                    factor = [0] * (d + 1)
                    factor[0], factor[d] = 1, -1
                    result = _mul(result, tuple(factor))
            else:
                counts = [0] * num_vars
                for g, s in zip(ms, supports):
                    if len(s) > 1:
                        for i in s:
                            counts[i] += 1
                pivot = max(range(num_vars), key=lambda i: counts[i])
                x = tuple(1 if i == pivot else 0 for i in range(num_vars))
                plus = _minimalize(ms | {x})
                colon = _minimalize(
                    frozenset(
                        tuple(v - 1 if i == pivot and v > 0 else v for i, v in enumerate(g))
                        for g in ms
                    )
                )
                result = _add(rec(plus), _shift(rec(colon), 1))
        memo[ms] = result
        return result

    return rec(_minimalize(frozenset(gens)))


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series data of a graded quotient R/I (or one free-module slot)."""

    num_vars: int
    numerator: IntPoly
    krull_dim: int
    multiplicity: int

    def dimension_at(self, degree: int) -> int:
        """dim_Q of the graded piece of R/I in the given degree."""
        n = self.num_vars
        total = 0
        for k, c in enumerate(self.numerator):
            if c and degree - k >= 0:
                total += c * comb(degree - k + n - 1, n - 1)
        return total


def hilbert_from_numerator(numerator: IntPoly, num_vars: int) -> HilbertData:
    if not numerator:
        return HilbertData(num_vars, numerator, -1, 0)
    q = numerator
    cancels = 0
    while True:
        nxt = _div_one_minus_t(q)
        if nxt is None:
            break
        q = nxt
        cancels += 1
    return HilbertData(num_vars, numerator, num_vars - cancels, _eval_at_one(q))


def hilbert_data(I: Ideal, budget: int | None = None) -> HilbertData:
    """Hilbert data of R/I via the leading-term ideal of a Groebner basis."""
    lt = [g.leading_monomial() for g in I.groebner_basis(budget)]
    return hilbert_from_numerator(monomial_numerator(lt, I.ring.num_vars), I.ring.num_vars)


# -- graded quotients of free modules ----------------------------------------


@dataclass(frozen=True)
class ModuleHilbert:
    """Hilbert data of R^m(-twists)/N, one HilbertData per free slot."""

    twists: tuple[int, ...]
    slots: tuple[HilbertData, ...]

    @property
    def krull_dim(self) -> int:
        return max((h.krull_dim for h in self.slots), default=-1)

    def is_finite_length(self) -> bool:
        return self.krull_dim <= 0

    def dimension_at(self, degree: int) -> int:
        return sum(
            h.dimension_at(degree - t) for t, h in zip(self.twists, self.slots)
        )

    def finite_support(self) -> dict[int, int]:
        """degree -> dimension map; only valid for finite-length modules."""
        if not self.is_finite_length():
            raise ValueError("module is not finite length")
        support: dict[int, int] = {}
        for t, h in zip(self.twists, self.slots):
            # finite length: numerator/(1-t)^n is a polynomial of degree
            # deg(numerator) - n at most, so scanning that far suffices
            top = len(h.numerator)
            for d in range(0, top + 1):
                v = h.dimension_at(d)
                if v:
                    support[d + t] = support.get(d + t, 0) + v
        return dict(sorted(support.items()))


def module_hilbert(
    twists: Sequence[int], groebner_leads: Sequence[tuple[int, Exponent]], num_vars: int
) -> ModuleHilbert:
    """Hilbert data of R^m(-twists)/N from the leading terms of a module GB of N."""
    per_slot: list[list[Exponent]] = [[] for _ in twists]
    for comp, e in groebner_leads:
        per_slot[comp].append(e)
    slots = tuple(
        hilbert_from_numerator(monomial_numerator(leads, num_vars), num_vars)
        for leads in per_slot
    )
    return ModuleHilbert(tuple(twists), slots)
