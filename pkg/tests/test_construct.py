import random

import pytest
from hypothesis import given, settings, strategies as st

from latticeiso.arith import is_core, primitive_representation, solve_unit_bezout
from latticeiso.construct import (
    PathWitness,
    StepSequence,
    axis_translation,
    build_path,
    loop_erase,
    path_length_within_bound,
    unit_translation,
    unit_translation_length,
)
from latticeiso.errors import NotCoreRadicand
from latticeiso.lattice import LatticeVector
from latticeiso.walks import PathCountQuery, count_paths

CORES = [r for r in range(1, 2000) if is_core(r)]


def test_unit_translation_examples():
    assert unit_translation(1) == [(0, 1)]
    assert unit_translation(5) == [(2, 1), (-1, 2), (-1, -2)]
    seq = unit_translation(25)
    assert len(seq) == 31
    assert seq.total() == (0, 1)


def test_unit_translation_25_expanded():
    # a=4, b=3, s=2, t=3
    group1 = [(4, 3)] * 2 + [(4, -3)] * 2 + [(-3, 4)] * 3 + [(-3, -4)] * 3
    group2 = [(3, 4)] * 2 + [(-3, 4)] * 2 + [(4, -3)] * 3 + [(-4, -3)] * 3
    expected = [(4, 3)] + group1 * 2 + group2
    assert list(unit_translation(25)) == expected


@pytest.mark.parametrize("r", [2, 3, 4, 9, 10, 45, 50])
def test_unit_translation_requires_core(r):
    with pytest.raises(NotCoreRadicand):
        unit_translation(r)


def test_unit_translation_expanded_small_cores():
    for r in CORES:
        steps = list(unit_translation(r))
        assert sum(x for x, _ in steps) == 0
        assert sum(y for _, y in steps) == 1
        assert all(x * x + y * y == r for x, y in steps)
        a, b = primitive_representation(r)
        a, b = (a, b) if a % 2 == 0 else (b, a)
        bz = solve_unit_bezout(a, b)
        assert len(steps) == (bz.s + bz.t) * (a + b - 1) + 1 == unit_translation_length(r)


@pytest.mark.parametrize("direction, total", [("+y", (0, 1)), ("-y", (0, -1)), ("+x", (1, 0)), ("-x", (-1, 0))])
def test_axis_translation(direction, total):
    for r in (1, 5, 13, 25, 65):
        seq = axis_translation(r, direction)
        assert seq.total() == total
        assert len(seq) == len(unit_translation(r))
        assert all(s.squared_norm == r for s in seq)


def test_axis_translation_examples_for_5():
    base = list(unit_translation(5))
    assert list(axis_translation(5, "-y")) == [-v for v in base]
    assert list(axis_translation(5, "+x")) == [v.swapped() for v in base]
    with pytest.raises(ValueError):
        axis_translation(5, "up")


def test_build_path_examples():
    w = build_path(5, (0, 0), (0, 0))
    assert w.length == 0 and w.end == (0, 0)
    w = build_path(5, (0, 0), (1, 0))
    assert list(w.steps) == [(1, 2), (2, -1), (-2, -1)]
    assert w.end == (1, 0)
    w = build_path(25, (0, 0), (2, -1))
    assert w.length == 93 and w.end == (2, -1)
    assert path_length_within_bound(w.length, 25)
    assert 93 < 8 * 25**1.5


def test_build_path_expanded_vertices():
    w = build_path(13, (3, -2), (-4, 5))
    pts = list(w.vertices())
    assert pts[0] == (3, -2) and pts[-1] == (-4, 5)
    assert len(pts) == w.length + 1
    for p, q in zip(pts, pts[1:]):
        assert (q - p).squared_norm == 13


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CORES), st.integers(-50, 50), st.integers(-50, 50), st.integers(-20, 20), st.integers(-20, 20))
def test_build_path_reaches_target(r, x0, y0, dx, dy):
    w = build_path(r, (x0, y0), (x0 + dx, y0 + dy))
    assert w.is_valid()
    assert w.end == (x0 + dx, y0 + dy)
    assert w.length == unit_translation_length(r) * (abs(dx) + abs(dy))


def test_build_path_bound_for_nearby_points():
    rng = random.Random(3)
    for r in CORES:
        for _ in range(10):
            while True:
                dx, dy = rng.randint(-r, r), rng.randint(-r, r)
                if dx * dx + dy * dy < r:
                    break
            w = build_path(r, (0, 0), (dx, dy))
            assert w.is_valid() and w.end == (dx, dy)
            assert path_length_within_bound(w.length, r)


def test_path_length_bound_is_exact():
    # 8 * 4^1.5 = 64
    assert path_length_within_bound(63, 4)
    assert not path_length_within_bound(64, 4)


def test_loop_erase_examples():
    empty = PathWitness(5, (0, 0), [])
    assert loop_erase(empty).length == 0
    w = PathWitness(1, (0, 0), [(1, 0), (-1, 0), (0, 1)])
    assert list(loop_erase(w).steps) == [(0, 1)]
    straight = build_path(5, (0, 0), (1, 0))
    assert straight.is_vertex_distinct()
    assert list(loop_erase(straight).steps) == list(straight.steps)


def test_loop_erase_on_constructed_walks():
    for r, target in [(25, (2, -1)), (13, (3, 3)), (5, (-4, 2)), (65, (1, 1))]:
        w = build_path(r, (0, 0), target)
        e = loop_erase(w)
        assert e.is_vertex_distinct() and e.is_valid()
        assert e.end == target and e.length <= w.length


def test_loop_erased_length_has_a_path():
    for r, target in [(5, (1, 0)), (5, (1, 1)), (13, (1, 0))]:
        e = loop_erase(build_path(r, (0, 0), target))
        assert count_paths(PathCountQuery(r, e.length, (0, 0), target), budget=10**7) >= 1


def test_step_sequence_structure():
    seq = StepSequence([((1, 0), 2), (StepSequence.of([(0, 1), (0, -1)]), 3)])
    assert len(seq) == 8
    assert list(seq) == [(1, 0)] * 2 + [(0, 1), (0, -1)] * 3
    assert seq[0] == (1, 0) and seq[3] == (0, -1) and seq[-1] == (0, -1)
    assert seq[1:4] == [(1, 0), (0, 1), (0, -1)]
    assert seq.total() == (2, 0)
    assert seq.distinct_steps == {(1, 0), (0, 1), (0, -1)}
    with pytest.raises(IndexError):
        seq[8]
    doubled = seq * 2 + StepSequence.of([(5, 5)])
    assert len(doubled) == 17 and doubled.total() == (9, 5)


def test_witness_validity_detects_bad_step():
    w = PathWitness(5, (0, 0), [(2, 1), (1, 1)])
    assert not w.is_valid()
    assert w.end == LatticeVector(3, 2)
