"""Exact certification that integer matrices keep eigenvalue products off the unit circle.

The unit-circle test is fully exact: evaluate at +-1, take the gcd with the
reversed polynomial, rewrite the (palindromic) gcd through the x + 1/x
substitution and count real roots in (-2, 2) with a Sturm chain. Level-2
certificates additionally run the same test on the characteristic polynomial
of the second exterior power, whose roots are the pairwise eigenvalue
products. Repeated-index products are covered by the level-1 stage since
|mu^2| = 1 exactly when |mu| = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CancelToken
from .exactmat import RationalMatrix
from .polynomials import (
    IntPolynomial,
    count_real_roots_between,
    palindromic_to_interval_poly,
    poly_gcd,
    strip_unit_linear_factors,
)


def _check(cancel: CancelToken | None) -> None:
    if cancel is not None:
        cancel.check()


def _int_rows(m) -> list[list[int]]:
    if isinstance(m, RationalMatrix):
        rows = [list(r) for r in m.int_rows()]
    else:
        rows = [[int(x) for x in row] for row in m]
        for row, raw in zip(rows, m):
            for a, b in zip(row, raw):
                if a != b:
                    raise ValueError("matrix entries must be integers")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return rows


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _pattern_blocks(a: list[list[int]]) -> list[list[int]]:
    """Connected components of the nonzero pattern; each is an invariant block."""
    n = len(a)
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (a[i][j] != 0 or a[j][i] != 0):
                    seen[j] = True
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks


def _charpoly_dense(a: list[list[int]], cancel: CancelToken | None) -> IntPolynomial:
    # Faddeev-LeVerrier; all divisions are exact over the integers.
    n = len(a)
    m = [[0] * n for _ in range(n)]
    coeffs_desc = [1]
    for k in range(1, n + 1):
        _check(cancel)
        m = _matmul(a, m)
        prev = coeffs_desc[-1]
        for i in range(n):
            m[i][i] += prev
        tr = sum(a[i][j] * m[j][i] for i in range(n) for j in range(n))
        q, r = divmod(-tr, k)
        if r != 0:
            raise AssertionError("inexact division in characteristic polynomial")
        coeffs_desc.append(q)
    return IntPolynomial(list(reversed(coeffs_desc)))


def char_poly(m, cancel: CancelToken | None = None) -> IntPolynomial:
    """Monic characteristic polynomial of a square integer matrix, exactly.

    Splits the matrix along the connected components of its nonzero pattern
    first, so block-diagonal inputs cost only the sum of their blocks.
    """
    rows = _int_rows(m)
    if not rows:
        raise ValueError("matrix must be non-empty")
    result = IntPolynomial([1])
    for block in _pattern_blocks(rows):
        sub = [[rows[i][j] for j in block] for i in block]
        result = result * _charpoly_dense(sub, cancel)
    return result


def is_integer_like(p: IntPolynomial) -> bool:
    """True when the (monic) polynomial has constant term +1 or -1."""
    if not p.is_monic:
        raise ValueError("integer-likeness is defined for monic polynomials")
    return p.constant in (1, -1)


@dataclass(frozen=True)
class UnitCircleAnalysis:
    """Trace of the staged exact unit-circle test."""

    exists: bool
    stage: str
    detail: str
    root_at_one: bool
    root_at_minus_one: bool
    reciprocal_gcd_degree: int
    sturm_root_count: int | None

    def to_json_dict(self) -> dict:
        return {
            "exists": self.exists,
            "stage": self.stage,
            "detail": self.detail,
            "root_at_one": self.root_at_one,
            "root_at_minus_one": self.root_at_minus_one,
            "reciprocal_gcd_degree": self.reciprocal_gcd_degree,
            "sturm_root_count": self.sturm_root_count,
        }


def unit_circle_analysis(p: IntPolynomial, cancel: CancelToken | None = None) -> UnitCircleAnalysis:
    if p.is_zero:
        raise ValueError("the zero polynomial has every root")
    at_one = p(1) == 0
    at_minus_one = p(-1) == 0
    _check(cancel)
    g = poly_gcd(p, p.reverse(), cancel)
    if at_one or at_minus_one:
        which = [s for s, hit in (("x=1", at_one), ("x=-1", at_minus_one)) if hit]
        return UnitCircleAnalysis(
            True, "endpoints", f"root at {', '.join(which)}", at_one, at_minus_one, g.degree, None
        )
    if g.degree == 0:
        return UnitCircleAnalysis(
            False,
            "reciprocal-gcd",
            "gcd with the reversed polynomial is constant",
            False,
            False,
            0,
            None,
        )
    _check(cancel)
    core, plus, minus = strip_unit_linear_factors(g)
    if plus or minus:
        raise AssertionError("unit roots survived the endpoint stage")
    q = palindromic_to_interval_poly(core)
    count = count_real_roots_between(q, -2, 2, cancel)
    if count > 0:
        detail = f"substituted polynomial has {count} real root(s) in (-2, 2)"
    else:
        detail = "no real roots of the substituted polynomial in (-2, 2)"
    return UnitCircleAnalysis(count > 0, "sturm", detail, False, False, g.degree, count)


def unit_circle_root_exists(p: IntPolynomial, cancel: CancelToken | None = None) -> tuple[bool, str]:
    """Exact decision whether p has a root of absolute value one, with evidence."""
    analysis = unit_circle_analysis(p, cancel)
    return analysis.exists, analysis.detail


def exterior_square_char_poly(m, cancel: CancelToken | None = None) -> IntPolynomial:
    """Characteristic polynomial of the second exterior power (pairwise eigenvalue products)."""
    rows = _int_rows(m)
    n = len(rows)
    if n < 2:
        raise ValueError("exterior square needs dimension at least 2")
    pairs = list(itertools.combinations(range(n), 2))
    compound = [
        [
            rows[i][k] * rows[j][l] - rows[i][l] * rows[j][k]
            for (k, l) in pairs
        ]
        for (i, j) in pairs
    ]
    return char_poly(compound, cancel)


@dataclass(frozen=True)
class CertificateStage:
    label: str
    poly: IntPolynomial
    analysis: UnitCircleAnalysis

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "poly": list(self.poly.coefficients),
            "analysis": self.analysis.to_json_dict(),
        }


@dataclass(frozen=True)
class HyperbolicityCertificate:
    """Exact record of a level-1 or level-2 hyperbolicity check.

    Valid exactly when every stage found zero unit-circle roots (Sturm count 0
    and no roots at +-1 anywhere).
    """

    level: int
    char_poly: IntPolynomial
    reciprocal_gcd_degree: int
    sturm_root_count: int | None
    compound_char_poly: IntPolynomial | None
    stages: tuple[CertificateStage, ...]
    valid: bool
    failure: str | None

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "char_poly": list(self.char_poly.coefficients),
            "reciprocal_gcd_degree": self.reciprocal_gcd_degree,
            "sturm_root_count": self.sturm_root_count,
            "compound_char_poly": (
                list(self.compound_char_poly.coefficients) if self.compound_char_poly else None
            ),
            "stages": [s.to_json_dict() for s in self.stages],
            "valid": self.valid,
            "failure": self.failure,
        }


def certify_polynomial(p: IntPolynomial, level: int, compound: IntPolynomial | None = None,
                       cancel: CancelToken | None = None) -> HyperbolicityCertificate:
    """Certificate for eigenvalue data given directly as polynomials."""
    if level not in (1, 2):
        raise ValueError("only levels 1 and 2 are supported")
    stages = [CertificateStage("char_poly", p, unit_circle_analysis(p, cancel))]
    failure = None
    if stages[0].analysis.exists:
        failure = "eigenvalue on unit circle"
    if level == 2 and failure is None:
        if compound is None:
            raise ValueError("level 2 needs the exterior-square polynomial")
        stages.append(CertificateStage("exterior_square", compound, unit_circle_analysis(compound, cancel)))
        if stages[1].analysis.exists:
            failure = "pair product on unit circle"
    first = stages[0].analysis
    return HyperbolicityCertificate(
        level=level,
        char_poly=p,
        reciprocal_gcd_degree=first.reciprocal_gcd_degree,
        sturm_root_count=first.sturm_root_count,
        compound_char_poly=compound if level == 2 else None,
        stages=tuple(stages),
        valid=failure is None,
        failure=failure,
    )


def is_c_hyperbolic(m, c: int, cancel: CancelToken | None = None) -> HyperbolicityCertificate:
    """Exact c-hyperbolicity certificate for c in {1, 2}.

    Level 1 proves no eigenvalue lies on the unit circle; level 2 additionally
    proves no product of two eigenvalues does.
    """
    if c not in (1, 2):
        raise ValueError("only c = 1 and c = 2 occur for 2-step algebras")
    rows = _int_rows(m)
    p = char_poly(rows, cancel)
    if c == 1:
        return certify_polynomial(p, 1, cancel=cancel)
    first = unit_circle_analysis(p, cancel)
    if first.exists:
        return HyperbolicityCertificate(
            level=2,
            char_poly=p,
            reciprocal_gcd_degree=first.reciprocal_gcd_degree,
            sturm_root_count=first.sturm_root_count,
            compound_char_poly=None,
            stages=(CertificateStage("char_poly", p, first),),
            valid=False,
            failure="eigenvalue on unit circle",
        )
    compound = exterior_square_char_poly(rows, cancel)
    return certify_polynomial(p, 2, compound, cancel)
