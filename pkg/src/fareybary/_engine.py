"""Point-in-subdivision tests shared by the Farey and barycentric engines.

Both partitions split a triangle ``M = (v1 v2 v3)`` at the raw column sum
``v1 + v2 + v3``.  Writing a point's homogeneous vector as ``P = M mu``,
the child containing ``P`` is the one opposite the vertex with the
smallest ``mu_i``; ties mean ``P`` sits on an internal edge.  Only signs
of differences of ``mu`` matter, so ``adj(M) P`` (times the sign of the
determinant) is used instead of ``M^-1 P``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import LatticeVec, PlanePoint, adjugate, det3, point_to_vec


def homogeneous(p) -> tuple:
    if isinstance(p, PlanePoint):
        return tuple(point_to_vec(p))
    if isinstance(p, LatticeVec):
        return tuple(p)
    return tuple(p.homogeneous())


def sign(x) -> int:
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    return x.sign()


def weights(vec: Sequence, m: Sequence[Sequence[int]]) -> tuple:
    """Vector positively proportional to the coordinates of ``vec`` in the columns of ``m``."""
    d = det3(m)
    if d == 0:
        raise ValueError("degenerate triangle")
    adj = adjugate(m)
    w = tuple(adj[i][0] * vec[0] + adj[i][1] * vec[1] + adj[i][2] * vec[2] for i in range(3))
    return w if d > 0 else tuple(-c for c in w)


def is_inside(w: Sequence) -> bool:
    return all(sign(c) >= 0 for c in w)


def zero_indices(w: Sequence) -> list[int]:
    return [i for i, c in enumerate(w) if sign(c) == 0]


def vertex_index(w: Sequence) -> int | None:
    zeros = zero_indices(w)
    if len(zeros) == 2:
        return ({0, 1, 2} - set(zeros)).pop()
    return None


def minimal_indices(w: Sequence) -> list[int]:
    best = [0]
    for i in (1, 2):
        s = sign(w[i] - w[best[0]])
        if s < 0:
            best = [i]
        elif s == 0:
            best.append(i)
    return best
