"""The Farey-Bary map, its piecewise-linear approximants and its inverse."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import _engine
from .bary import BaryState, bary_step_matrix
from .exact import (
    BASE_MATRIX,
    DomainError,
    Matrix,
    PlanePoint,
    TriangleState,
    barycentric_coords,
    combine,
    matmul,
)
from .farey import CaseTag, _pick, step_matrix

DEFAULT_MAX_DEPTH = 5000


class ConvergenceError(RuntimeError):
    """Tolerance not reached within the allowed depth."""


@dataclass(frozen=True)
class DeltaResult:
    value: PlanePoint
    error_bound: Fraction
    depth_used: int
    exact: bool
    boundary: bool = False


def diameter_bound(t: TriangleState) -> Fraction:
    """Largest edge measured in the L1 norm; never below the Euclidean diameter."""
    a, b, c = t.points
    return max(abs(p.x - q.x) + abs(p.y - q.y) for p, q in ((a, b), (b, c), (a, c)))


def centroid(t: TriangleState) -> PlanePoint:
    a, b, c = t.points
    return PlanePoint((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)


class _Walk:
    """Lock-step descent through a source partition and its twin.

    The point is located in the source partition; the twin triangle with
    the same address is carried along.
    """

    def __init__(self, p, source: Callable[[CaseTag], Matrix], twin: Callable[[CaseTag], Matrix]):
        self.p = p
        self.vec = _engine.homogeneous(p)
        self.rational = isinstance(p, PlanePoint)
        self.source_step, self.twin_step = source, twin
        self.src: Matrix = BASE_MATRIX
        self.dst: Matrix = BASE_MATRIX
        self.depth = 0
        self.boundary = False
        self.w = _engine.weights(self.vec, self.src)
        if not _engine.is_inside(self.w):
            raise DomainError(f"point {p} is outside the base triangle")

    def step(self) -> None:
        case, tie = _pick(self.w)
        self.boundary |= tie
        self.src = matmul(self.src, self.source_step(case))
        self.dst = matmul(self.dst, self.twin_step(case))
        self.depth += 1
        self.w = _engine.weights(self.vec, self.src)

    def states(self) -> tuple[TriangleState, TriangleState]:
        return (TriangleState.from_matrix(self.src, self.depth),
                TriangleState.from_matrix(self.dst, self.depth))

    def settled(self) -> bool:
        """The image is exact from here on: a vertex, or (rational) a point of an edge.

        Edges are never split by later refinements, so the map is linear
        along them at every deeper level.
        """
        zeros = _engine.zero_indices(self.w)
        return len(zeros) == 2 or (self.rational and len(zeros) == 1)

    def linear_image(self) -> PlanePoint:
        src, dst = self.states()
        return combine(barycentric_coords(self.p, src), dst)


def _farey_step(case: CaseTag) -> Matrix:
    return step_matrix(case, 1)


def delta_n(p: PlanePoint, n: int) -> PlanePoint:
    """Piecewise-linear approximant: barycentric coordinates carried to the bary twin."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    walk = _Walk(p, _farey_step, bary_step_matrix)
    while walk.depth < n and _engine.vertex_index(walk.w) is None:
        walk.step()
    return walk.linear_image()


def _converge(walk: _Walk, tol: Fraction, max_depth: int) -> DeltaResult:
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    while True:
        if walk.settled():
            return DeltaResult(walk.linear_image(), Fraction(0), walk.depth, True, walk.boundary)
        src, dst = walk.states()
        bound = diameter_bound(dst)
        if bound <= tol and diameter_bound(src) <= tol:
            value = walk.linear_image() if walk.rational else centroid(dst)
            return DeltaResult(value, bound, walk.depth, False, walk.boundary)
        if walk.depth >= max_depth:
            raise ConvergenceError(f"tolerance {tol} not reached by depth {max_depth}")
        walk.step()


def delta(p, tol, max_depth: int = DEFAULT_MAX_DEPTH) -> DeltaResult:
    """Value of the Farey-Bary map within ``tol``.

    Refines until both the Farey triangle around ``p`` and its bary image
    have diameter at most ``tol``; the reported bound is the image
    triangle's diameter, which contains the exact limit.  Algebraic
    inputs get the centroid of that triangle.
    """
    return _converge(_Walk(p, _farey_step, bary_step_matrix), tol, max_depth)


def delta_inverse(q: PlanePoint, tol, max_depth: int = DEFAULT_MAX_DEPTH) -> DeltaResult:
    """Preimage under the Farey-Bary map, by replaying ``q``'s bary address in the Farey partition."""
    return _converge(_Walk(q, bary_step_matrix, _farey_step), tol, max_depth)


def enclosing_bary(p, n: int) -> BaryState:
    """Bary triangle with the same depth-``n`` address as ``p``."""
    walk = _Walk(p, _farey_step, bary_step_matrix)
    while walk.depth < n:
        walk.step()
    return BaryState.from_matrix(walk.dst, walk.depth)
