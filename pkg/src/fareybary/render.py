"""Deterministic SVG drawings of the Farey and barycentric partitions."""

from __future__ import annotations

import math
import os
from fractions import Fraction

from .bary import bary_partition
from .exact import DomainError, PlanePoint, TriangleState
from .farey import partition

MAX_DEPTH_ENV = "FAREYBARY_MAX_RENDER_DEPTH"
DEFAULT_MAX_DEPTH = 7


def max_render_depth() -> int:
    return int(os.environ.get(MAX_DEPTH_ENV, DEFAULT_MAX_DEPTH))


def partition_triangles(kind: str, raw_depth: int) -> list[TriangleState]:
    if kind == "farey":
        return partition(raw_depth)
    if kind == "bary":
        return bary_partition(raw_depth)
    raise DomainError(f"unknown partition kind {kind!r}")


def _fmt(v: Fraction) -> str:
    """Exact value rounded half-up to 3 decimals (coordinates are nonnegative)."""
    whole, frac = divmod(math.floor(v * 1000 + Fraction(1, 2)), 1000)
    return f"{whole}.{frac:03d}"


def render_partition(kind: str, raw_depth: int, scale: int = 600, margin: int = 20,
                     max_depth: int | None = None) -> str:
    """SVG 1.1 document with one polygon per subtriangle.

    Each polygon carries its exact vertices in ``data-vertices``.
    """
    limit = max_render_depth() if max_depth is None else max_depth
    if raw_depth < 0 or raw_depth > limit:
        raise DomainError(f"depth {raw_depth} outside 0..{limit}")
    size = scale + 2 * margin

    def screen(p: PlanePoint) -> str:
        return f"{_fmt(margin + p.x * scale)},{_fmt(margin + (1 - p.y) * scale)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<title>{kind} partition, depth {raw_depth}</title>',
        '<g fill="none" stroke="black" stroke-width="0.5" stroke-linejoin="round">',
    ]
    for i, t in enumerate(partition_triangles(kind, raw_depth)):
        pts = t.points
        exact = " ".join(str(p) for p in pts)
        lines.append(f'<polygon id="t{i}" points="{" ".join(screen(p) for p in pts)}" '
                     f'data-vertices="{exact}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
