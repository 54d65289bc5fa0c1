from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from fareybary.exact import (
    BASE_MATRIX,
    BASE_TRIANGLE,
    DomainError,
    LatticeVec,
    barycentric_coords,
    det3,
    matmul,
    shoelace_area,
    triangle_area,
)
from fareybary.farey import (
    CaseTag,
    CompressedStep,
    ExpansionSequence,
    Termination,
    codec_compress,
    codec_expand,
    expand,
    iter_replay,
    locate,
    parse_sequence,
    partition,
    replay,
    step_matrix,
    subdivide,
)
from strategies import base_points, cases, raw_sequences
from tiling import assert_tiles_base

F = Fraction
I, II, III = CaseTag.I, CaseTag.II, CaseTag.III


def test_step_matrices():
    assert step_matrix(I, 1) == ((1, 0, 1), (0, 1, 1), (0, 0, 1))
    assert step_matrix(II, 2) == ((0, 0, 1), (1, 0, 2), (0, 1, 2))
    assert step_matrix(III, 3) == ((1, 0, 3), (0, 0, 1), (0, 1, 3))
    for c in CaseTag:
        for a in range(1, 11):
            assert abs(det3(step_matrix(c, a))) == 1
    with pytest.raises(ValueError):
        step_matrix(I, 0)


def test_compressed_step_equals_raw_run():
    for c in CaseTag:
        m = step_matrix(c, 1)
        for _ in range(3):
            m = matmul(m, step_matrix(I, 1))
        assert m == step_matrix(c, 4)


def test_subdivide_base():
    c1, c2, c3 = subdivide(BASE_TRIANGLE)
    center = LatticeVec(2, 1, 3)
    assert c1.vertices == (LatticeVec(0, 0, 1), LatticeVec(1, 0, 1), center)
    assert c2.vertices == (LatticeVec(1, 0, 1), LatticeVec(1, 1, 1), center)
    assert c3.vertices == (LatticeVec(0, 0, 1), LatticeVec(1, 1, 1), center)
    assert sum(triangle_area(c) for c in (c1, c2, c3)) == triangle_area(BASE_TRIANGLE)


def test_replay_examples():
    assert replay(ExpansionSequence()).matrix == BASE_MATRIX
    t = replay(parse_sequence("1(I)"))
    assert t.vertices == (LatticeVec(0, 0, 1), LatticeVec(1, 0, 1), LatticeVec(2, 1, 3))


def test_locate_examples(tribonacci_point):
    assert locate(P(F(1, 2), F(1, 6)), BASE_TRIANGLE) == (I, False)
    assert locate(P(F(2, 3), F(1, 3)), BASE_TRIANGLE) == (I, True)
    assert locate(tribonacci_point, BASE_TRIANGLE) == (II, False)
    with pytest.raises(DomainError):
        locate(P(0, 1), BASE_TRIANGLE)


def test_expand_vertex_hit():
    seq = expand(P(F(2, 3), F(1, 3)), 50)
    assert seq.termination is Termination.VERTEX_HIT
    assert seq.raw_length == 1
    assert expand(P(0, 0), 5).raw_length == 0


def test_expand_depth_limit_and_first_case():
    seq = expand(P(F(1, 2), F(1, 6)), 1)
    assert seq.raw() == [I] and seq.termination is Termination.DEPTH_LIMIT


def test_edge_point_runs_into_case_one():
    # (1/2,1/6) lies on the edge from (0,0) to the centre of child I
    seq = expand(P(F(1, 2), F(1, 6)), 40)
    assert str(seq) == "2(I),38(III)"
    assert seq.ties == (1,)


def test_tribonacci_expansion_is_periodic(tribonacci_point):
    seq = expand(tribonacci_point, 15)
    assert str(seq) == ",".join(["1(II)"] * 15)


def test_codec_examples():
    assert [str(s) for s in codec_compress([III, I, II, I])] == ["2(III)", "2(II)"]
    assert [str(s) for s in codec_compress([I])] == ["1(I)"]
    assert codec_expand([CompressedStep(2, III), CompressedStep(2, II)]) == [III, I, II, I]
    with pytest.raises(ValueError):
        codec_expand([CompressedStep(1, II), CompressedStep(1, I)])


def test_sequence_text_forms():
    canonical = parse_sequence("2(III),2(II)")
    assert parse_sequence("2(III),1(II),1(I)", strict=False) == canonical
    assert parse_sequence("raw:III,I,II,I") == canonical
    with pytest.raises(ValueError):
        parse_sequence("2(III),1(II),1(I)")
    with pytest.raises(ValueError):
        parse_sequence("2(IV)")


def test_partition_counts_and_vertices():
    assert len(partition(0)) == 1
    assert {p for t in partition(1) for p in t.points} == {P(0, 0), P(1, 0), P(1, 1), P(F(2, 3), F(1, 3))}
    verts = {p for t in partition(2) for p in t.points}
    for p in (P(F(3, 5), F(1, 5)), P(F(4, 5), F(2, 5)), P(F(3, 5), F(2, 5))):
        assert p in verts


@pytest.mark.parametrize("n", range(5))
def test_partition_tiles_base(n):
    assert_tiles_base(partition(n))


@given(raw_sequences)
def test_codec_round_trip(raw):
    assert codec_expand(codec_compress(raw)) == raw


@given(raw_sequences)
def test_replay_is_unimodular_with_ordered_radii(raw):
    for t in iter_replay(raw):
        assert abs(t.det) == 1
        r1, r2, r3 = t.radii
        assert r1 <= r2 <= r3
        assert triangle_area(t) == Fraction(1, 2 * r1 * r2 * r3) == shoelace_area(*t.points)


@given(st.lists(st.tuples(st.integers(1, 8), st.sampled_from([II, III])), max_size=8), cases)
def test_r3_growth_bound(steps, first):
    seq = ExpansionSequence(tuple([CompressedStep(1, first)] + [CompressedStep(a, c) for a, c in steps]))
    prev = replay(seq.prefix(0)).radii[2]
    for k, s in enumerate(seq.steps, 1):
        r3 = replay(seq.prefix(k)).radii[2]
        assert r3 <= (2 * s.a + 1) * prev
        prev = r3


@given(base_points())
def test_nesting(p):
    seq = expand(p, 30)
    for n in range(seq.raw_length + 1):
        t = replay(seq.raw_prefix(n))
        assert all(w >= 0 for w in barycentric_coords(p, t))
