"""Exact univariate polynomial arithmetic over the integers and rationals.

Everything here is exact: integer coefficients stay Python ints, rational
intermediates use fractions.Fraction. Floating point never enters.
Coefficients are stored in ascending degree order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import GraphInputError


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending; the zero polynomial is ``(0,)``."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients):
        raw = list(coefficients)
        coeffs = [int(c) for c in raw]
        for c, r in zip(coeffs, raw):
            if c != r:
                raise ValueError(f"non-integer coefficient {r!r}")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        if self.is_zero:
            return -1
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    @property
    def constant(self) -> int:
        return self.coefficients[0]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial([0])
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial([k * c for c in self.coefficients])

    def derivative(self) -> "IntPolynomial":
        if self.degree <= 0:
            return IntPolynomial([0])
        return IntPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def reverse(self) -> "IntPolynomial":
        """The reciprocal polynomial x^deg * p(1/x) (trailing zeros stripped)."""
        return IntPolynomial(tuple(reversed(self.coefficients)))

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and normalize the leading coefficient to be positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coefficients])

    def is_palindromic(self) -> bool:
        return self.coefficients == tuple(reversed(self.coefficients))

    def __str__(self) -> str:
        return format_polynomial(self)


def divide_exact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Exact division in Z[x]; raises if the remainder is nonzero."""
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coefficients)
    d = den.coefficients
    out = [0] * max(len(rem) - len(d) + 1, 1)
    for shift in range(len(rem) - len(d), -1, -1):
        lead = rem[shift + len(d) - 1]
        q, r = divmod(lead, d[-1])
        if r != 0:
            raise ValueError("division is not exact over the integers")
        out[shift] = q
        if q:
            for i, c in enumerate(d):
                rem[shift + i] -= q * c
    if any(rem):
        raise ValueError("division is not exact over the integers")
    return IntPolynomial(out)


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # lc(b)^(deg a - deg b + 1) * a  mod  b, computed in Z
    rem = list(a)
    lb = b[-1]
    while len(rem) >= len(b) and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        lead = rem[-1]
        shift = len(rem) - len(b)
        rem = [lb * c for c in rem]
        for i, c in enumerate(b):
            rem[shift + i] -= lead * c
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
    return rem


def poly_gcd(p: IntPolynomial, q: IntPolynomial, cancel=None) -> IntPolynomial:
    """Primitive gcd in Z[x] via a primitive pseudo-remainder sequence."""
    if p.is_zero:
        return q.primitive()
    if q.is_zero:
        return p.primitive()
    a = list(p.primitive().coefficients)
    b = list(q.primitive().coefficients)
    if len(a) < len(b):
        a, b = b, a
    while True:
        if cancel is not None:
            cancel.check()
        r = _pseudo_rem(a, b)
        if not any(r):
            return IntPolynomial(b).primitive()
        r = list(IntPolynomial(r).primitive().coefficients)
        a, b = b, r


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree <= 0:
        return p.primitive()
    return divide_exact(p.primitive(), poly_gcd(p, p.derivative())).primitive()


# ---------------------------------------------------------------------------
# Sturm chains over the rationals


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    rem = list(a)
    while len(rem) >= len(b):
        if rem[-1] == 0:
            rem.pop()
            if not rem:
                return [Fraction(0)]
            continue
        factor = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
        if not rem:
            return [Fraction(0)]
    return rem


def sturm_chain(p: IntPolynomial, cancel=None) -> list[list[Fraction]]:
    """Canonical Sturm chain of the squarefree part of p."""
    sf = squarefree_part(p)
    chain = [[Fraction(c) for c in sf.coefficients]]
    if sf.degree <= 0:
        return chain
    chain.append([Fraction(c) for c in sf.derivative().coefficients])
    while True:
        if cancel is not None:
            cancel.check()
        r = _frac_rem(chain[-2], chain[-1])
        if len(r) == 1 and r[0] == 0:
            return chain
        chain.append([-c for c in r])


def _eval_frac(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots_between(p: IntPolynomial, a, b, cancel=None) -> int:
    """Number of distinct real roots of p in the open interval (a, b).

    Requires p(a) != 0 and p(b) != 0, which makes open and half-open
    counts coincide.
    """
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("empty interval")
    if p(a) == 0 or p(b) == 0:
        raise ValueError("interval endpoints must not be roots")
    chain = sturm_chain(p, cancel)
    va = _sign_variations(_eval_frac(c, a) for c in chain)
    vb = _sign_variations(_eval_frac(c, b) for c in chain)
    return va - vb


# ---------------------------------------------------------------------------
# Palindromic polynomials and the x + 1/x substitution


def strip_unit_linear_factors(p: IntPolynomial) -> tuple[IntPolynomial, int, int]:
    """Divide out all (x - 1) and (x + 1) factors; returns (reduced, mult_plus1, mult_minus1)."""
    reduced = p
    plus = minus = 0
    while not reduced.is_zero and reduced(1) == 0:
        reduced = divide_exact(reduced, IntPolynomial([-1, 1]))
        plus += 1
    while not reduced.is_zero and reduced(-1) == 0:
        reduced = divide_exact(reduced, IntPolynomial([1, 1]))
        minus += 1
    return reduced, plus, minus


def palindromic_to_interval_poly(g: IntPolynomial) -> IntPolynomial:
    """For palindromic g of even degree 2s, the polynomial q with g(x) = x^s q(x + 1/x).

    Roots of g on the unit circle correspond to real roots of q in [-2, 2].
    """
    if g.is_zero or not g.is_palindromic():
        raise ValueError("polynomial is not palindromic")
    if g.degree % 2 != 0:
        raise ValueError("palindromic polynomial of odd degree has root -1; strip it first")
    s = g.degree // 2
    coeffs = g.coefficients
    # t_k(y) represents x^k + x^(-k); recurrence t_k = y*t_{k-1} - t_{k-2}
    q = IntPolynomial([coeffs[s]])
    t_prev = IntPolynomial([2])
    t_cur = IntPolynomial([0, 1])
    y = IntPolynomial([0, 1])
    for k in range(1, s + 1):
        q = q + t_cur.scale(coeffs[s + k])
        t_prev, t_cur = t_cur, y * t_cur - t_prev
    return q


def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    result = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            result = divide_exact(result, cyclotomic(d))
    return result


def companion_rows(p: IntPolynomial) -> tuple[tuple[int, ...], ...]:
    """Companion matrix of a monic polynomial, as integer rows."""
    if not p.is_monic or p.degree < 1:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.coefficients[i]
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# Human-readable syntax, e.g. "x^3 - x^2 - 2x + 1"

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<x>x)|(?P<pow>\^)|(?P<op>[+-])|(?P<mul>\*))")


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse integer polynomials in human syntax: "x^2-3x+1", "2*x + 5", "-x^3"."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise GraphInputError(f"cannot parse polynomial near {text[pos:]!r}")
        tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()

    coeffs: dict[int, int] = {}
    i = 0

    def take(kind):
        nonlocal i
        if i < len(tokens) and tokens[i][0] == kind:
            i += 1
            return tokens[i - 1][1]
        return None

    first = True
    while i < len(tokens):
        sign = 1
        op = take("op")
        if op is None and not first:
            raise GraphInputError("expected '+' or '-' between polynomial terms")
        if op == "-":
            sign = -1
        first = False
        num = take("num")
        take("mul")
        coef = sign * int(num) if num is not None else sign
        if take("x") is not None:
            if take("pow") is not None:
                exp = take("num")
                if exp is None:
                    raise GraphInputError("missing exponent after '^'")
                power = int(exp)
            else:
                power = 1
        else:
            if num is None:
                raise GraphInputError("dangling sign in polynomial")
            power = 0
        coeffs[power] = coeffs.get(power, 0) + coef
    if not coeffs:
        raise GraphInputError("empty polynomial")
    out = [0] * (max(coeffs) + 1)
    for power, c in coeffs.items():
        out[power] = c
    return IntPolynomial(out)


def format_polynomial(p: IntPolynomial) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for power in range(p.degree, -1, -1):
        c = p.coefficients[power]
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        elif power == 1:
            body = "x" if mag == 1 else f"{mag}x"
        else:
            body = f"x^{power}" if mag == 1 else f"{mag}x^{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
