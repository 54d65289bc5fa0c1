"""Area ratios between bary and Farey triangles, the corner-triangle lemma, and sampling."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import DomainError, PlanePoint, TriangleState, triangle_area
from .farey import ExpansionSequence, _as_steps, expand, replay

QUANTILES = (0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0)
_LOG3 = math.log(3)


@dataclass(frozen=True)
class RatioRecord:
    n: int
    s_n: int
    radii_product: int
    ratio: Fraction


def ratio_series(seq: ExpansionSequence | Sequence) -> list[RatioRecord]:
    """``r1 r2 r3 / 3**s_n`` for every compressed prefix, the empty one included."""
    steps = _as_steps(seq)
    out = []
    for k in range(len(steps) + 1):
        t = replay(steps[:k])
        s = sum(st.a for st in steps[:k])
        rr = t.v1.r * t.v2.r * t.v3.r
        out.append(RatioRecord(k, s, rr, Fraction(rr, 3 ** s)))
    return out


def build_TL(t: TriangleState, L: int) -> tuple[TriangleState, TriangleState, TriangleState, Fraction]:
    """Corner triangles pulled toward each edge by weight ``L``, and the leftover area."""
    if L < 1 or int(L) != L:
        raise DomainError(f"L must be an integer >= 1, got {L}")
    if t.is_degenerate:
        raise DomainError("degenerate triangle")
    L = int(L)
    v1, v2, v3 = t.vertices
    t1 = TriangleState(v1, v2, L * v1 + L * v2 + v3, t.depth)
    t2 = TriangleState(v2, v1 + L * v2 + L * v3, v3, t.depth)
    t3 = TriangleState(v1, L * v1 + v2 + L * v3, v3, t.depth)
    rest = triangle_area(t) - triangle_area(t1) - triangle_area(t2) - triangle_area(t3)
    return t1, t2, t3, rest


def lemma_inequality_check(x: int, y: int, z: int, L) -> bool:
    """Corner-triangle area bound for a unimodular triangle with radii ``x, y, z``.

    Checks ``2Lxyz <= a + L^2 (x^3+y^3+z^3) + L^2 xyz + xyz`` with
    ``a = x^2y + x^2z + xy^2 + xz^2 + y^2z + yz^2``, and independently the
    area form ``1 - y/(Lx+y+Lz) - z/(Lx+Ly+z) - x/(x+Ly+Lz) <= (L-1)/L``.
    The polynomial form implies the area form for ``L >= 1``; a
    disagreement where it should not occur raises ``ArithmeticError``.
    """
    if min(x, y, z) < 1:
        raise DomainError("x, y, z must be positive integers")
    L = Fraction(L)
    if L < 1:
        raise DomainError("L must be >= 1")
    a = x * x * y + x * x * z + x * y * y + x * z * z + y * y * z + y * z * z
    xyz = x * y * z
    poly_ok = 2 * L * xyz <= a + L * L * (x ** 3 + y ** 3 + z ** 3) + L * L * xyz + xyz
    leftover = (1 - Fraction(y) / (L * x + y + L * z) - Fraction(z) / (L * x + L * y + z)
                - Fraction(x) / (x + L * y + L * z))
    area_ok = leftover <= (L - 1) / L
    if poly_ok and not area_ok:
        raise ArithmeticError(f"area bound fails at {(x, y, z, L)} although the polynomial form holds")
    return poly_ok and area_ok


# -- sampling -----------------------------------------------------------------

@dataclass(frozen=True)
class PointRecord:
    point: PlanePoint
    raw_depth: int
    n: int
    s_n: int
    log3_ratio: float

    @property
    def sn_over_n(self) -> float:
        return self.s_n / self.n if self.n else 0.0


@dataclass(frozen=True)
class StatSummary:
    samples: int
    depth: int
    sn_over_n: dict[float, float]
    log3_ratio: dict[float, float]

    @property
    def median_sn_over_n(self) -> float:
        return self.sn_over_n[0.5]

    @property
    def median_log3_ratio(self) -> float:
        return self.log3_ratio[0.5]


def point_record(p: PlanePoint, raw_depth: int) -> PointRecord:
    seq = expand(p, raw_depth)
    t = replay(seq)
    rr = t.v1.r * t.v2.r * t.v3.r
    s = seq.raw_length
    return PointRecord(p, s, len(seq), s, math.log(rr) / _LOG3 - s)


SAMPLE_BITS = 64


def sample_point(rng: np.random.Generator) -> PlanePoint:
    """Uniform point of the base triangle on the grid of step ``2**-64`` (rejection on the square)."""
    den = 1 << SAMPLE_BITS
    while True:
        a, b = (int(v) for v in rng.integers(0, den, size=2, dtype=np.uint64, endpoint=False))
        if a >= b:
            return PlanePoint(Fraction(a, den), Fraction(b, den))


def _one_sample(args: tuple[np.random.SeedSequence, int]) -> PointRecord:
    seed, raw_depth = args
    return point_record(sample_point(np.random.default_rng(seed)), raw_depth)


def sample_records(samples: int, raw_depth: int, seed: int, workers: int = 1) -> list[PointRecord]:
    """One record per sample; sample ``i`` always uses the ``i``-th spawned sub-seed."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    children = np.random.SeedSequence(seed).spawn(samples)
    jobs = [(c, raw_depth) for c in children]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_one_sample, jobs, chunksize=max(1, samples // (4 * workers))))
    return [_one_sample(j) for j in jobs]


def summarize(records: Sequence[PointRecord], depth: int) -> StatSummary:
    sn = np.array([r.sn_over_n for r in records])
    lr = np.array([r.log3_ratio for r in records])
    return StatSummary(
        samples=len(records),
        depth=depth,
        sn_over_n={q: float(np.quantile(sn, q)) for q in QUANTILES},
        log3_ratio={q: float(np.quantile(lr, q)) for q in QUANTILES},
    )


def monte_carlo(samples: int, raw_depth: int, seed: int, workers: int = 1) -> StatSummary:
    return summarize(sample_records(samples, raw_depth, seed, workers), raw_depth)
