"""Exact sparse multivariate polynomial arithmetic over the rationals.

A ring fixes a number of variables (named ``z0 .. z{n-1}``) and a graded
monomial order.  Monomials are bare exponent tuples; polynomials store their
terms as a tuple of ``(exponent, Fraction)`` pairs sorted descending in the
ring order, so the leading term is ``terms[0]`` and equal polynomials have
identical term tuples.  The zero polynomial has an empty term tuple.

Coefficients are ``fractions.Fraction`` throughout: every verdict downstream
(ideal membership, saturation, splitting) is a yes/no answer and floating
point would be meaningless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]
Rational = int | Fraction

GREVLEX = "grevlex"
LEX = "lex"


def grevlex_cheapest(var: int) -> tuple[str, int]:
    """Order spec for grevlex with variable ``var`` made cheapest (last).

    Plain grevlex already has the last variable cheapest; this variant is the
    same order after moving ``var`` to the last position.  It is the order
    used by single-variable saturation.
    """
    return ("grevlex_cheapest", var)


class RingMismatch(ValueError):
    """Operands live in different polynomial rings."""


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring Q[z0, ..., z{n-1}] with a fixed monomial order."""

    num_vars: int
    order: object = GREVLEX

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError("ring needs at least one variable")
        if self.order not in (GREVLEX, LEX):
            if not (
                isinstance(self.order, tuple)
                and len(self.order) == 2
                and self.order[0] == "grevlex_cheapest"
                and isinstance(self.order[1], int)
                and 0 <= self.order[1] < self.num_vars
            ):
                raise ValueError(f"unknown monomial order {self.order!r}")

    @cached_property
    def exp_key(self) -> Callable[[Exponent], object]:
        """Sort key on exponent tuples; larger key = larger monomial."""
        if self.order == GREVLEX:

            def key(e: Exponent):
                return (sum(e), tuple(-x for x in reversed(e)))

        elif self.order == LEX:

            def key(e: Exponent):
                return e

        else:
            cheap = self.order[1]
            perm = [i for i in range(self.num_vars) if i != cheap] + [cheap]

            def key(e: Exponent):
                p = tuple(e[i] for i in perm)
                return (sum(e), tuple(-x for x in reversed(p)))

        return key

    def compare(self, a: Exponent, b: Exponent) -> int:
        ka, kb = self.exp_key(a), self.exp_key(b)
        return (ka > kb) - (ka < kb)

    # -- element constructors ------------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: Rational) -> Polynomial:
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, (((0,) * self.num_vars, c),))

    def variable(self, i: int) -> Polynomial:
        if not 0 <= i < self.num_vars:
            raise IndexError(f"variable index {i} out of range")
        e = [0] * self.num_vars
        e[i] = 1
        return Polynomial(self, ((tuple(e), Fraction(1)),))

    def variables(self) -> list[Polynomial]:
        return [self.variable(i) for i in range(self.num_vars)]

    def monomial(self, exponents: Sequence[int], coeff: Rational = 1) -> Polynomial:
        e = tuple(int(x) for x in exponents)
        if len(e) != self.num_vars or any(x < 0 for x in e):
            raise ValueError(f"bad exponent tuple {exponents!r}")
        c = Fraction(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, ((e, c),))

    def from_dict(self, terms: Mapping[Exponent, Rational]) -> Polynomial:
        d = {e: Fraction(c) for e, c in terms.items() if c != 0}
        return Polynomial(self, self._sorted(d))

    def _sorted(self, d: Mapping[Exponent, Fraction]) -> tuple:
        return tuple(sorted(d.items(), key=lambda kv: self.exp_key(kv[0]), reverse=True))

    def with_order(self, order: object) -> PolyRing:
        return PolyRing(self.num_vars, order)


# -- monomial helpers (exponent tuples) ---------------------------------------


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exponent, b: Exponent) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Exponent, b: Exponent) -> Exponent:
    """Exponent of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(e: Exponent) -> int:
    return sum(e)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- predicates and views --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    def leading_coeff(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mono_degree(e) for e, _ in self.terms}
        return len(degs) == 1

    def coefficient(self, exponents: Exponent) -> Fraction:
        for e, c in self.terms:
            if e == exponents:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self.terms)

    def variables_used(self) -> set[int]:
        used: set[int] = set()
        for e, _ in self.terms:
            used.update(i for i, x in enumerate(e) if x > 0)
        return used

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if self.ring != other.ring:
            raise RingMismatch("operands belong to different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        d = dict(self.terms)
        for e, c in other.terms:
            s = d.get(e, Fraction(0)) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return Polynomial(self.ring, self.ring._sorted(d))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: Polynomial | Rational) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        d: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = mono_mul(e1, e2)
                s = d.get(e, Fraction(0)) + c1 * c2
                if s:
                    d[e] = s
                else:
                    del d[e]
        return Polynomial(self.ring, self.ring._sorted(d))

    def __rmul__(self, other: Rational) -> Polynomial:
        return self.scale(other)

    def scale(self, c: Rational) -> Polynomial:
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((e, c * k) for e, k in self.terms))

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_term(self, exponents: Exponent, coeff: Fraction) -> Polynomial:
        """Multiply by a single term (no sort needed: orders are multiplicative)."""
        if coeff == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            tuple((mono_mul(e, exponents), c * coeff) for e, c in self.terms),
        )

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        lc = self.terms[0][1]
        return Polynomial(self.ring, tuple((e, c / lc) for e, c in self.terms))

    def primitive(self) -> Polynomial:
        """Scale to coprime integer coefficients with positive leading sign.

        Keeps coefficient growth in check inside Buchberger loops.
        """
        if not self.terms:
            return self
        from math import gcd, lcm

        den = lcm(*(c.denominator for _, c in self.terms))
        nums = [c.numerator * (den // c.denominator) for _, c in self.terms]
        g = gcd(*nums)
        if self.terms[0][1] < 0:
            g = -g
        return Polynomial(
            self.ring, tuple((e, Fraction(n // g)) for (e, _), n in zip(self.terms, nums))
        )

    # -- calculus and substitution ----------------------------------------

    def partial_derivative(self, i: int) -> Polynomial:
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < self.ring.num_vars:
            raise IndexError(f"variable index {i} out of range")
        d: dict[Exponent, Fraction] = {}
        for e, c in self.terms:
            if e[i] == 0:
                continue
            new = list(e)
            new[i] -= 1
            d[tuple(new)] = c * e[i]
        return self.ring.from_dict(d)

    def evaluate(self, point: Sequence[Rational]) -> Fraction:
        if len(point) != self.ring.num_vars:
            raise ValueError("point has wrong length")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms:
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Substitute z_i <- images[i]; images live in any single ring."""
        if len(images) != self.ring.num_vars:
            raise ValueError("need one image per variable")
        target = images[0].ring
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, k: int) -> Polynomial:
            got = powers.get((i, k))
            if got is None:
                got = images[i] ** k
                powers[(i, k)] = got
            return got

        total = target.zero()
        for e, c in self.terms:
            v = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    v = v * power(i, k)
            total = total + v
        return total

    # -- comparison and rendering ------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __repr__(self) -> str:
        return f"Polynomial({self!s})"

    def __str__(self) -> str:
        return render(self)


def render(p: Polynomial) -> str:
    """Canonical text form: terms descending, e.g. ``3/2*z0^2*z1 - z3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, c in p.terms:
        mono = "*".join(
            f"z{i}^{k}" if k > 1 else f"z{i}" for i, k in enumerate(e) if k > 0
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# -- operations on polynomials -------------------------------------------------


def ring_arithmetic(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Dispatch add/sub/mul/scalar_mul by name (mirrors the library surface)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def homogenize(p: Polynomial, var: int, target_degree: int) -> Polynomial:
    """Pad every term with powers of z_var up to target_degree.

    Requires var absent from p and target_degree >= deg(p).
    """
    if var in p.variables_used():
        raise ValueError(f"variable z{var} occurs in the polynomial")
    if target_degree < p.degree():
        raise ValueError("target degree below the degree of the polynomial")
    d: dict[Exponent, Fraction] = {}
    for e, c in p.terms:
        new = list(e)
        new[var] = target_degree - mono_degree(e)
        d[tuple(new)] = c
    return p.ring.from_dict(d)


def dehomogenize(p: Polynomial, var: int) -> Polynomial:
    """Set z_var = 1."""
    d: dict[Exponent, Fraction] = {}
    for e, c in p.terms:
        new = list(e)
        new[var] = 0
        key = tuple(new)
        d[key] = d.get(key, Fraction(0)) + c
    return p.ring.from_dict(d)


def apply_linear_change(p: Polynomial, matrix: Sequence[Sequence[Rational]]) -> Polynomial:
    """Substitute z_i <- sum_j A[i][j] * z_j.

    Composition convention: applying A and then B equals a single application
    of the matrix product A@B, since p(Az)|_{z<-Bz} = p((AB)z).
    """
    n = p.ring.num_vars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("matrix size does not match the ring")
    images = [
        p.ring.from_dict(
            {
                tuple(1 if j == k else 0 for k in range(n)): Fraction(matrix[i][j])
                for j in range(n)
                if Fraction(matrix[i][j]) != 0
            }
        )
        for i in range(n)
    ]
    return p.substitute(images)


def map_to_ring(p: Polynomial, target: PolyRing, var_map: Sequence[int]) -> Polynomial:
    """Re-express p in another ring, sending old variable i to var_map[i]."""
    if len(var_map) != p.ring.num_vars:
        raise ValueError("need one target index per source variable")
    d: dict[Exponent, Fraction] = {}
    for e, c in p.terms:
        new = [0] * target.num_vars
        for i, k in enumerate(e):
            if k:
                new[var_map[i]] += k
        key = tuple(new)
        d[key] = d.get(key, Fraction(0)) + c
    return target.from_dict(d)
