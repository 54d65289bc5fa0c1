"""Exact rational geometry on lattice vectors.

A point ``(p/r, q/r)`` of the plane is carried around as the integer
vector ``(p, q, r)``.  Triangles are triples of such vectors, i.e. the
columns of a 3x3 integer matrix, and every quantity computed here
(areas, barycentric coordinates, the classical ``?(x)``) is an exact
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence, Tuple

Rational = Fraction
Matrix = Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]


class DomainError(ValueError):
    """Input lies outside the region an operation is defined on."""


class DegenerateError(DomainError):
    """A vector with zero last coordinate, or a collinear triangle."""


@dataclass(frozen=True)
class LatticeVec:
    p: int
    q: int
    r: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.p, self.q, self.r))

    def __add__(self, other: LatticeVec) -> LatticeVec:
        return LatticeVec(self.p + other.p, self.q + other.q, self.r + other.r)

    def __mul__(self, k: int) -> LatticeVec:
        return LatticeVec(k * self.p, k * self.q, k * self.r)

    __rmul__ = __mul__

    def normalized(self) -> LatticeVec:
        return normalize(self)

    @property
    def point(self) -> PlanePoint:
        return vec_to_point(self)


@dataclass(frozen=True)
class PlanePoint:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.x, self.y))

    def in_base_triangle(self) -> bool:
        return 1 >= self.x >= self.y >= 0

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


def normalize(v: LatticeVec) -> LatticeVec:
    """Divide out the common factor of the entries (sign of ``r`` made positive)."""
    g = gcd(gcd(v.p, v.q), v.r)
    if g == 0:
        raise DegenerateError("zero vector")
    if v.r < 0:
        g = -g
    return LatticeVec(v.p // g, v.q // g, v.r // g)


def farey_sum(v1: LatticeVec, v2: LatticeVec, v3: LatticeVec) -> LatticeVec:
    """Componentwise sum of three vertex vectors.

    The result is deliberately left unreduced: vertex matrices stay
    unimodular only when columns are raw sums.
    """
    return LatticeVec(v1.p + v2.p + v3.p, v1.q + v2.q + v3.q, v1.r + v2.r + v3.r)


def vec_to_point(v: LatticeVec) -> PlanePoint:
    if v.r == 0:
        raise DegenerateError(f"vector {tuple(v)} has r = 0")
    return PlanePoint(Fraction(v.p, v.r), Fraction(v.q, v.r))


def point_to_vec(pt: PlanePoint) -> LatticeVec:
    x, y = Fraction(pt.x), Fraction(pt.y)
    d = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    return normalize(LatticeVec(x.numerator * (d // x.denominator),
                                y.numerator * (d // y.denominator), d))


# -- 3x3 integer matrices (row-major tuples) --------------------------------

def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )  # type: ignore[return-value]


def matvec(m: Sequence[Sequence], v: Sequence):
    return tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))


def det3(m: Sequence[Sequence]):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def adjugate(m: Sequence[Sequence]) -> tuple:
    """Classical adjoint, so that ``adj(m) @ m == det(m) * I``."""
    c = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [k for k in range(3) if k != j]
            minor = (m[rows[0]][cols[0]] * m[rows[1]][cols[1]]
                     - m[rows[0]][cols[1]] * m[rows[1]][cols[0]])
            c[j][i] = minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(row) for row in c)


def identity() -> Matrix:
    return ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def columns_to_matrix(v1: LatticeVec, v2: LatticeVec, v3: LatticeVec) -> Matrix:
    return ((v1.p, v2.p, v3.p), (v1.q, v2.q, v3.q), (v1.r, v2.r, v3.r))


def matrix_columns(m: Sequence[Sequence[int]]) -> tuple[LatticeVec, LatticeVec, LatticeVec]:
    return tuple(LatticeVec(m[0][j], m[1][j], m[2][j]) for j in range(3))  # type: ignore[return-value]


@dataclass(frozen=True)
class TriangleState:
    """Three vertex vectors, read as the columns of a 3x3 matrix."""

    v1: LatticeVec
    v2: LatticeVec
    v3: LatticeVec
    depth: int = 0

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[int]], depth: int = 0) -> TriangleState:
        return cls(*matrix_columns(m), depth=depth)

    @property
    def vertices(self) -> tuple[LatticeVec, LatticeVec, LatticeVec]:
        return (self.v1, self.v2, self.v3)

    @property
    def matrix(self) -> Matrix:
        return columns_to_matrix(self.v1, self.v2, self.v3)

    @property
    def det(self) -> int:
        return det3(self.matrix)

    @property
    def is_degenerate(self) -> bool:
        return self.det == 0

    @property
    def points(self) -> tuple[PlanePoint, PlanePoint, PlanePoint]:
        return tuple(vec_to_point(v) for v in self.vertices)  # type: ignore[return-value]

    @property
    def radii(self) -> tuple[int, int, int]:
        return (self.v1.r, self.v2.r, self.v3.r)


BASE_VERTICES = (LatticeVec(0, 0, 1), LatticeVec(1, 0, 1), LatticeVec(1, 1, 1))
BASE_TRIANGLE = TriangleState(*BASE_VERTICES)
BASE_MATRIX: Matrix = BASE_TRIANGLE.matrix


def shoelace_area(a: PlanePoint, b: PlanePoint, c: PlanePoint) -> Fraction:
    twice = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)
    return abs(twice) / 2


def triangle_area(t: TriangleState) -> Fraction:
    """``|det M| / (2 r1 r2 r3)``; zero for a degenerate (flagged) triangle."""
    r1, r2, r3 = t.radii
    if 0 in (r1, r2, r3):
        raise DegenerateError("vertex at infinity")
    return Fraction(abs(t.det), 2 * r1 * r2 * r3)


def barycentric_coords(p: PlanePoint, t: TriangleState) -> tuple[Fraction, Fraction, Fraction]:
    if t.is_degenerate:
        raise DegenerateError("barycentric coordinates in a collinear triangle")
    a, b, c = t.points
    d = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)
    beta = ((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / d
    gamma = ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / d
    return (1 - beta - gamma, beta, gamma)


def combine(weights: Sequence[Fraction], t: TriangleState) -> PlanePoint:
    """The point with barycentric coordinates ``weights`` in ``t``."""
    pts = t.points
    return PlanePoint(sum(w * q.x for w, q in zip(weights, pts)),
                      sum(w * q.y for w, q in zip(weights, pts)))


def minkowski_q(x, depth: int) -> Fraction:
    """Classical question-mark function by Farey-interval bisection.

    Exact when ``x`` is an endpoint reached within ``depth`` mediant
    steps; otherwise the midpoint of the final dyadic interval, which is
    within ``2**-(depth + 1)`` of ``?(x)``.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise DomainError(f"{x} not in [0, 1]")
    if depth < 1:
        raise ValueError("depth must be positive")
    (a, b), (c, d) = (0, 1), (1, 1)
    lo, hi = Fraction(0), Fraction(1)
    for _ in range(depth):
        if x == Fraction(a, b):
            return lo
        if x == Fraction(c, d):
            return hi
        m, mid = Fraction(a + c, b + d), (lo + hi) / 2
        if x == m:
            return mid
        if x < m:
            c, d, hi = a + c, b + d, mid
        else:
            a, b, lo = a + c, b + d, mid
    return (lo + hi) / 2
