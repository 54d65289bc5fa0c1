"""Farey partition of the triangle and the two-dimensional continued fraction.

A point's expansion records, at every refinement, which of the three
subtriangles holds it.  Raw steps are case tags; the compressed form
``a(i)`` is one case-``i`` step followed by ``a - 1`` case-I steps.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from . import _engine
from .exact import (
    BASE_MATRIX,
    DomainError,
    Matrix,
    TriangleState,
    farey_sum,
    identity,
    matmul,
)


class CaseTag(enum.Enum):
    I = "I"
    II = "II"
    III = "III"

    def __str__(self) -> str:
        return self.value


# child that omits vertex index k (0-based): omit v3 -> I, omit v1 -> II, omit v2 -> III
_OMITTED_TO_CASE = {2: CaseTag.I, 0: CaseTag.II, 1: CaseTag.III}
_PREFERENCE = (CaseTag.I, CaseTag.II, CaseTag.III)


class Termination(enum.Enum):
    RUNNING = "running"
    VERTEX_HIT = "vertex-hit"
    DEPTH_LIMIT = "depth-limit"


@dataclass(frozen=True)
class CompressedStep:
    a: int
    case: CaseTag

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"step length must be positive, got {self.a}")

    def __str__(self) -> str:
        return f"{self.a}({self.case.value})"


def codec_compress(raw: Iterable[CaseTag]) -> list[CompressedStep]:
    steps: list[CompressedStep] = []
    for case in raw:
        if case is CaseTag.I and steps:
            last = steps[-1]
            steps[-1] = CompressedStep(last.a + 1, last.case)
        else:
            steps.append(CompressedStep(1, case))
    return steps


def codec_expand(steps: Iterable[CompressedStep]) -> list[CaseTag]:
    raw: list[CaseTag] = []
    for k, step in enumerate(steps):
        if k > 0 and step.case is CaseTag.I:
            raise ValueError(f"step {k + 1} is {step}: only the first step may be case I")
        raw.append(step.case)
        raw.extend([CaseTag.I] * (step.a - 1))
    return raw


@dataclass(frozen=True)
class ExpansionSequence:
    """Compressed steps plus how the expansion stopped.

    ``ties`` lists the raw depths at which the point sat on an internal
    edge and the I < II < III preference picked the child.
    """

    steps: tuple[CompressedStep, ...] = ()
    termination: Termination = Termination.RUNNING
    ties: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        codec_expand(self.steps)  # validates the case-I convention

    @classmethod
    def from_raw(cls, raw: Iterable[CaseTag], termination: Termination = Termination.RUNNING,
                 ties: Iterable[int] = ()) -> ExpansionSequence:
        return cls(tuple(codec_compress(raw)), termination, tuple(ties))

    @classmethod
    def parse(cls, text: str, strict: bool = True) -> ExpansionSequence:
        return parse_sequence(text, strict=strict)

    def raw(self) -> list[CaseTag]:
        return codec_expand(self.steps)

    @property
    def raw_length(self) -> int:
        return sum(s.a for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def prefix(self, k: int) -> ExpansionSequence:
        """First ``k`` compressed steps."""
        return ExpansionSequence(self.steps[:k])

    def raw_prefix(self, n: int) -> ExpansionSequence:
        return ExpansionSequence.from_raw(self.raw()[:n])

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.steps)


_STEP_RE = re.compile(r"^\s*(\d+)\s*\(\s*(I{1,3})\s*\)\s*$")


def parse_sequence(text: str, strict: bool = True) -> ExpansionSequence:
    """Read ``2(III),1(II)`` or ``raw:III,I,II``.

    With ``strict=False`` a case-I step after the first is merged into the
    preceding step, so hand-written forms like ``2(III),1(II),1(I)`` are
    read as the same cell.
    """
    text = text.strip()
    if text.startswith("raw:"):
        body = text[4:].strip()
        items = [t.strip() for t in body.split(",")] if body else []
        try:
            return ExpansionSequence.from_raw(CaseTag(t) for t in items)
        except ValueError as exc:
            raise ValueError(f"bad raw sequence {text!r}") from exc
    if not text:
        return ExpansionSequence()
    steps = []
    for item in text.split(","):
        m = _STEP_RE.match(item)
        if not m:
            raise ValueError(f"bad sequence step {item!r}")
        steps.append(CompressedStep(int(m.group(1)), CaseTag(m.group(2))))
    if strict:
        return ExpansionSequence(tuple(steps))
    raw = []
    for s in steps:
        raw.append(s.case)
        raw.extend([CaseTag.I] * (s.a - 1))
    return ExpansionSequence.from_raw(raw)


def _as_steps(seq: ExpansionSequence | Sequence[CompressedStep]) -> tuple[CompressedStep, ...]:
    if isinstance(seq, ExpansionSequence):
        return seq.steps
    steps = tuple(seq)
    codec_expand(steps)
    return steps


# -- matrices -------------------------------------------------------------------

def step_matrix(case: CaseTag, a: int = 1) -> Matrix:
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    if case is CaseTag.I:
        return ((1, 0, a), (0, 1, a), (0, 0, 1))
    if case is CaseTag.II:
        return ((0, 0, 1), (1, 0, a), (0, 1, a))
    return ((1, 0, a), (0, 0, 1), (0, 1, a))


def sequence_matrix(seq: ExpansionSequence | Sequence[CompressedStep]) -> Matrix:
    """Product ``A_1 A_2 ... A_k`` of the step matrices, without ``M_0``."""
    m = identity()
    for s in _as_steps(seq):
        m = matmul(m, step_matrix(s.case, s.a))
    return m


def replay(seq: ExpansionSequence | Sequence[CompressedStep]) -> TriangleState:
    steps = _as_steps(seq)
    m = matmul(BASE_MATRIX, sequence_matrix(steps))
    return TriangleState.from_matrix(m, depth=sum(s.a for s in steps))


def iter_replay(raw: Iterable[CaseTag], start: Matrix = BASE_MATRIX) -> Iterator[TriangleState]:
    """Triangles after each raw step (the starting triangle first)."""
    m, depth = start, 0
    yield TriangleState.from_matrix(m, depth)
    for case in raw:
        m = matmul(m, step_matrix(case, 1))
        depth += 1
        yield TriangleState.from_matrix(m, depth)


def subdivide(t: TriangleState) -> tuple[TriangleState, TriangleState, TriangleState]:
    if t.is_degenerate:
        raise DomainError("cannot subdivide a degenerate triangle")
    c = farey_sum(t.v1, t.v2, t.v3)
    d = t.depth + 1
    return (TriangleState(t.v1, t.v2, c, d),
            TriangleState(t.v2, t.v3, c, d),
            TriangleState(t.v1, t.v3, c, d))


# -- point location and expansion ----------------------------------------------

def _pick(w) -> tuple[CaseTag, bool]:
    omitted = _engine.minimal_indices(w)
    cases = {_OMITTED_TO_CASE[i] for i in omitted}
    case = next(c for c in _PREFERENCE if c in cases)
    return case, len(omitted) > 1


def locate(p, t: TriangleState) -> tuple[CaseTag, bool]:
    """Child of ``t`` holding ``p`` and whether ``p`` lies on an internal edge."""
    w = _engine.weights(_engine.homogeneous(p), t.matrix)
    if not _engine.is_inside(w):
        raise DomainError(f"point {p} is outside the triangle")
    return _pick(w)


def run_expansion(p, max_raw_depth: int, step: Callable[[CaseTag], Matrix],
                  start: Matrix = BASE_MATRIX) -> ExpansionSequence:
    vec = _engine.homogeneous(p)
    m = start
    w = _engine.weights(vec, m)
    if not _engine.is_inside(w):
        raise DomainError(f"point {p} is outside the base triangle")
    raw: list[CaseTag] = []
    ties: list[int] = []
    while True:
        if _engine.vertex_index(w) is not None:
            return ExpansionSequence.from_raw(raw, Termination.VERTEX_HIT, ties)
        if len(raw) >= max_raw_depth:
            return ExpansionSequence.from_raw(raw, Termination.DEPTH_LIMIT, ties)
        case, tie = _pick(w)
        if tie:
            ties.append(len(raw))
        raw.append(case)
        m = matmul(m, step(case))
        w = _engine.weights(vec, m)


def expand(p, max_raw_depth: int) -> ExpansionSequence:
    """Farey expansion of a rational or algebraic point of the base triangle."""
    if max_raw_depth < 0:
        raise ValueError("max_raw_depth must be nonnegative")
    return run_expansion(p, max_raw_depth, lambda c: step_matrix(c, 1))


def partition(depth: int) -> list[TriangleState]:
    """All ``3**depth`` triangles of the depth-``depth`` Farey partition, in I/II/III order."""
    level = [TriangleState.from_matrix(BASE_MATRIX)]
    for _ in range(depth):
        level = [child for t in level for child in subdivide(t)]
    return level
