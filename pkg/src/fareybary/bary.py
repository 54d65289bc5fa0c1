"""Barycentric (triadic) partition of the range triangle.

Each step keeps two vertices, scaled by 3 so all last coordinates stay
equal to ``3**n``, and adds the raw column sum, which is then the
ordinary centroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg
from .exact import (
    BASE_MATRIX,
    DegenerateError,
    DomainError,
    Matrix,
    PlanePoint,
    TriangleState,
    farey_sum,
    identity,
    matmul,
    matvec,
)
from .farey import (
    CaseTag,
    CompressedStep,
    ExpansionSequence,
    _as_steps,
    run_expansion,
)
from .numberfield import charpoly, pdivmod, ptrim


@dataclass(frozen=True)
class BaryState(TriangleState):
    """Triangle of the depth-``n`` barycentric partition; every ``r`` equals ``3**n``."""

    def __post_init__(self) -> None:
        expected = 3 ** self.depth
        if any(v.r != expected for v in self.vertices):
            raise ValueError(f"bary vertices at depth {self.depth} must have r = {expected}")


BASE_BARY = BaryState.from_matrix(BASE_MATRIX)


def bary_step_matrix(case: CaseTag) -> Matrix:
    if case is CaseTag.I:
        return ((3, 0, 1), (0, 3, 1), (0, 0, 1))
    if case is CaseTag.II:
        return ((0, 0, 1), (3, 0, 1), (0, 3, 1))
    return ((3, 0, 1), (0, 0, 1), (0, 3, 1))


def bary_compressed_matrix(step: CompressedStep) -> Matrix:
    m = bary_step_matrix(step.case)
    for _ in range(step.a - 1):
        m = matmul(m, bary_step_matrix(CaseTag.I))
    return m


def bary_sequence_matrix(seq: ExpansionSequence | Sequence[CompressedStep]) -> Matrix:
    m = identity()
    for s in _as_steps(seq):
        m = matmul(m, bary_compressed_matrix(s))
    return m


def bary_replay(seq: ExpansionSequence | Sequence[CompressedStep]) -> BaryState:
    steps = _as_steps(seq)
    m = matmul(BASE_MATRIX, bary_sequence_matrix(steps))
    return BaryState.from_matrix(m, depth=sum(s.a for s in steps))


def bary_area(seq: ExpansionSequence | Sequence[CompressedStep]) -> Fraction:
    return Fraction(1, 2 * 3 ** sum(s.a for s in _as_steps(seq)))


def bary_subdivide(t: BaryState) -> tuple[BaryState, BaryState, BaryState]:
    c = farey_sum(t.v1, t.v2, t.v3)
    d = t.depth + 1
    return (BaryState(3 * t.v1, 3 * t.v2, c, d),
            BaryState(3 * t.v2, 3 * t.v3, c, d),
            BaryState(3 * t.v1, 3 * t.v3, c, d))


def bary_partition(depth: int) -> list[BaryState]:
    level = [BASE_BARY]
    for _ in range(depth):
        level = [child for t in level for child in bary_subdivide(t)]
    return level


def bary_expand(p: PlanePoint, max_raw_depth: int) -> ExpansionSequence:
    """Expansion of ``p`` against the barycentric partition (same tie-break as Farey)."""
    if max_raw_depth < 0:
        raise ValueError("max_raw_depth must be nonnegative")
    return run_expansion(p, max_raw_depth, bary_step_matrix)


def _raw_matrix(raw: Sequence[CaseTag]) -> Matrix:
    m = identity()
    for case in raw:
        m = matmul(m, bary_step_matrix(case))
    return m


def _raw_of(seq) -> list[CaseTag]:
    if isinstance(seq, ExpansionSequence):
        return seq.raw()
    seq = list(seq)
    if seq and isinstance(seq[0], CompressedStep):
        return ExpansionSequence(tuple(seq)).raw()
    return [CaseTag(c) for c in seq]


def _inside_disk(monic: Sequence[Fraction], radius: Fraction) -> bool:
    """All roots of a monic polynomial of degree <= 2 strictly inside ``|z| < radius``."""
    deg = len(monic) - 1
    if deg <= 0:
        return True
    if deg == 1:
        return abs(monic[0]) < radius
    c, b = monic[0], monic[1]
    return abs(c) < radius ** 2 and abs(b) * radius < radius ** 2 + c


def periodic_fixed_point(preperiod, period) -> PlanePoint:
    """Exact point whose bary expansion is ``preperiod`` then ``period`` forever.

    ``preperiod`` and ``period`` may be :class:`ExpansionSequence` objects,
    lists of compressed steps, or raw case lists.  The point is the limit
    of the newest vertex ``M0 B P^k e3``: with ``P = 3**s S`` and ``S``
    column-stochastic, ``S^k`` tends to the projector onto the
    ``3**s``-eigenspace along the range of ``P - 3**s I``.
    """
    pre, per = _raw_of(preperiod), _raw_of(period)
    if not per:
        raise ValueError("period must be nonempty")
    b = matmul(BASE_MATRIX, _raw_matrix(pre))
    p = _raw_matrix(per)
    lam = 3 ** len(per)
    shifted = [[p[i][j] - (lam if i == j else 0) for j in range(3)] for i in range(3)]
    kernel = _linalg.nullspace(shifted)
    if not kernel:
        raise DegenerateError("3**s is not an eigenvalue of the period matrix")
    d = len(kernel)
    # remaining eigenvalues must lie strictly inside the disk of radius 3**s
    rest = ptrim(charpoly(p))
    for _ in range(d):
        rest, rem = pdivmod(rest, (Fraction(-lam), Fraction(1)))
        if rem:
            raise DegenerateError("eigenvalue 3**s is not semisimple")
    if not _inside_disk(rest, Fraction(lam)):
        raise DegenerateError("period matrix has a competing eigenvalue; no limit point")
    range_cols = []
    for j in range(3):
        col = [Fraction(shifted[i][j]) for i in range(3)]
        if _linalg.rank(range_cols + [col]) > len(range_cols):
            range_cols.append(col)
    coeffs = _linalg.solve(kernel + range_cols, (0, 0, 1))
    k = [sum(coeffs[t] * kernel[t][i] for t in range(d)) for i in range(3)]
    u = matvec(b, k)
    if u[2] == 0:
        raise DegenerateError("limit vector lies at infinity")
    return PlanePoint(Fraction(u[0]) / u[2], Fraction(u[1]) / u[2])
