"""Periodic expansions: Farey periods give cubic points, bary periods give rational points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg
from .bary import periodic_fixed_point
from .exact import BASE_MATRIX, Matrix, PlanePoint, identity, matmul
from .farey import CaseTag, CompressedStep, ExpansionSequence, step_matrix
from .numberfield import (
    AlgebraicNumber,
    AlgebraicPoint,
    FieldElement,
    IntPolynomial,
    NumberField,
    charpoly,
    compare,
    real_roots,
)


class NotDominant(ArithmeticError):
    """The matrix has no real eigenvalue strictly larger in modulus than all others."""


def char_poly(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(x I - m)`` for a 3x3 integer matrix."""
    return IntPolynomial(tuple(int(c) for c in charpoly(m)))


def _strictly_dominates(rho, rest: Sequence) -> bool:
    """Roots of the monic ``rest`` (degree <= 2, coefficients in Q(rho)) all have modulus < rho.

    Degree 2 uses the Schur-Cohn conditions for ``z^2 + b z + c`` in the
    disk of radius ``rho``: ``|c| < rho^2`` and ``|b| rho < rho^2 + c``.
    """
    deg = len(rest) - 1
    if deg <= 0:
        return True
    if deg == 1:
        c = rest[0]
        return (rho - c).sign() > 0 and (rho + c).sign() > 0
    c, b = rest[0], rest[1]
    r2 = rho * rho
    return ((r2 - c).sign() > 0 and (r2 + c).sign() > 0
            and (r2 + c - b * rho).sign() > 0 and (r2 + c + b * rho).sign() > 0)


def isolate_dominant_root(p: IntPolynomial) -> AlgebraicNumber:
    roots = real_roots(p)
    if not roots:
        raise NotDominant(f"{p} has no real root")
    top = roots[0]
    for r in roots[1:]:
        if compare(r, top) > 0:
            top = r
    field = NumberField(top)
    rho = field.theta
    # deflate p by (x - rho) over Q(rho)
    coeffs = [field(c) for c in p.coeffs]
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]
    quotient = [field(0)] * (len(coeffs) - 1)
    carry = field(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = carry * rho + coeffs[i]
        quotient[i - 1] = carry
    if not _strictly_dominates(rho, quotient):
        raise NotDominant(f"largest real root of {p} is not strictly dominant")
    return top


def _matrix_of(seq) -> Matrix:
    m = identity()
    if isinstance(seq, ExpansionSequence):
        seq = seq.steps
    for item in seq:
        if isinstance(item, CompressedStep):
            m = matmul(m, step_matrix(item.case, item.a))
        else:
            m = matmul(m, step_matrix(CaseTag(item), 1))
    return m


@dataclass(frozen=True)
class PeriodicSpec:
    """Preperiod followed by infinitely many copies of ``period``.

    Either part may be an :class:`ExpansionSequence`, a list of compressed
    steps or a raw list of case tags.
    """

    preperiod: object
    period: object

    def __post_init__(self) -> None:
        if not _raw(self.period):
            raise ValueError("period must be nonempty")

    def raw_prefix(self, copies: int) -> list[CaseTag]:
        return _raw(self.preperiod) + _raw(self.period) * copies


def _raw(seq) -> list[CaseTag]:
    if isinstance(seq, ExpansionSequence):
        return seq.raw()
    seq = list(seq)
    if seq and isinstance(seq[0], CompressedStep):
        return ExpansionSequence(tuple(seq)).raw()
    return [CaseTag(c) for c in seq]


@dataclass(frozen=True)
class CubicResult:
    alpha: AlgebraicNumber
    beta: AlgebraicNumber
    point_interval: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    eigenvalue: AlgebraicNumber
    field_degree: int
    algebra_dimension: int
    point: AlgebraicPoint


def _eigenvector(a: Matrix, rho: FieldElement) -> list[FieldElement]:
    """A nonzero column of ``adj(A - rho I)``, which spans the eigenline of a simple eigenvalue."""
    field = rho.field
    s = [[field(a[i][j]) - (rho if i == j else 0) for j in range(3)] for i in range(3)]
    for j in range(3):
        rows = [r for r in range(3) if r != j]
        col = []
        for i in range(3):
            cols = [k for k in range(3) if k != i]
            minor = s[rows[0]][cols[0]] * s[rows[1]][cols[1]] - s[rows[0]][cols[1]] * s[rows[1]][cols[0]]
            col.append(minor if (i + j) % 2 == 0 else -minor)
        if not all(c.is_zero() for c in col):
            return col
    raise NotDominant("eigenvalue is not simple")


def _algebra_dimension(x: FieldElement, y: FieldElement) -> int:
    """Dimension over Q of the algebra generated by ``x`` and ``y`` inside the field."""
    d = x.field.degree
    span = []
    for i in range(d + 1):
        for j in range(d + 1 - i):
            mono = x.field(1)
            for _ in range(i):
                mono = mono * x
            for _ in range(j):
                mono = mono * y
            span.append([mono.coeffs[k] if k < len(mono.coeffs) else Fraction(0) for k in range(d)])
    return _linalg.rank(span)


def periodic_to_cubic(spec: PeriodicSpec, box_width=Fraction(1, 2 ** 40)) -> CubicResult:
    """Exact point with the given eventually periodic Farey expansion.

    With ``B = M0 * (preperiod product)`` and ``A`` the period product,
    the point is ``B w`` for the eigenvector ``w`` of the dominant
    eigenvalue of ``A``; all arithmetic happens in ``Q(lambda)``.
    """
    b = matmul(BASE_MATRIX, _matrix_of(spec.preperiod))
    a = _matrix_of(spec.period)
    lam = isolate_dominant_root(char_poly(a))
    field = NumberField(lam)
    w = _eigenvector(a, field.theta)
    u = tuple(sum((b[i][k] * w[k] for k in range(3)), field(0)) for i in range(3))
    point = AlgebraicPoint(u)
    x, y = point.x, point.y
    return CubicResult(
        alpha=x.to_algebraic(),
        beta=y.to_algebraic(),
        point_interval=point.box(box_width),
        eigenvalue=lam,
        field_degree=field.degree,
        algebra_dimension=_algebra_dimension(x, y),
        point=point,
    )


def periodic_to_rational(spec: PeriodicSpec) -> PlanePoint:
    return periodic_fixed_point(_raw(spec.preperiod), _raw(spec.period))

