import io
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omqm import (
    DomainError,
    OMKnotData,
    ParseError,
    PlanarPath,
    load_path,
    reduce_to_om_knot,
    winding_number,
)

SQUARE_CCW = PlanarPath(((1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)), closed=True)


def _circle(radius, segments, center=(0.0, 0.0), phase=0.0, reverse=False):
    pts = []
    for i in range(segments):
        ang = phase + 2.0 * math.pi * i / segments
        pts.append((center[0] + radius * math.cos(ang), center[1] + radius * math.sin(ang)))
    if reverse:
        pts = pts[::-1]
    return PlanarPath(tuple(pts), closed=True)


class TestWindingNumber:
    def test_unit_square_ccw(self):
        assert winding_number(SQUARE_CCW, (0.0, 0.0)) == 1

    def test_unit_square_cw(self):
        cw = PlanarPath(tuple(reversed(SQUARE_CCW.vertices)), closed=True)
        assert winding_number(cw, (0.0, 0.0)) == -1

    def test_non_enclosing(self):
        assert winding_number(SQUARE_CCW, (5.0, 5.0)) == 0

    def test_vertex_at_center_degenerate(self):
        with pytest.raises(DomainError):
            winding_number(SQUARE_CCW, (1.0, 1.0))

    def test_open_path_rejected(self):
        open_path = PlanarPath(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0)), closed=False)
        with pytest.raises(DomainError):
            winding_number(open_path, (0.5, 0.25))

    def test_multi_turn(self):
        two_turns = _circle(2.0, 40).vertices * 2
        assert winding_number(PlanarPath(two_turns, closed=True), (0.0, 0.0)) == 2

    @given(st.integers(min_value=0, max_value=39), st.integers(min_value=5, max_value=40))
    def test_refinement_invariance(self, edge, segments):
        # inserting a midpoint along an existing segment never changes the winding
        base = _circle(3.0, 40, center=(0.5, -0.25))
        verts = list(base.vertices)
        i = edge % len(verts)
        a, b = verts[i], verts[(i + 1) % len(verts)]
        mid = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
        refined = PlanarPath(tuple(verts[: i + 1] + [mid] + verts[i + 1 :]), closed=True)
        assert winding_number(refined, (0.0, 0.0)) == winding_number(base, (0.0, 0.0))

    @given(st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
    def test_additivity_at_shared_basepoint(self, k1, k2):
        if k1 == 0 or k2 == 0:
            return
        loop1 = _circle(1.0, 24).vertices * abs(k1)
        loop2 = _circle(2.0, 24).vertices * abs(k2)
        if k1 < 0:
            loop1 = loop1[::-1]
        if k2 < 0:
            loop2 = loop2[::-1]
        # share the basepoint by starting both lists at their own first vertex
        combined = PlanarPath(loop1 + loop2, closed=True)
        w1 = winding_number(PlanarPath(loop1, closed=True), (0.0, 0.0))
        w2 = winding_number(PlanarPath(loop2, closed=True), (0.0, 0.0))
        assert winding_number(combined, (0.0, 0.0)) == w1 + w2


class TestReduceToOMKnot:
    def test_circle_scale_and_winding(self):
        knot = reduce_to_om_knot(_circle(10.0, 360), (0.0, 0.0))
        # perimeter of the inscribed 360-gon rounds to round(2*pi*10) = 63
        assert knot == OMKnotData(63, 1)

    def test_reversed_keeps_scale_flips_winding(self):
        knot = reduce_to_om_knot(_circle(10.0, 360, reverse=True), (0.0, 0.0))
        assert knot == OMKnotData(63, -1)

    def test_micro_loop_clamps_to_one_cell(self):
        knot = reduce_to_om_knot(_circle(0.1, 36), (0.0, 0.0))
        assert knot == OMKnotData(1, 1)

    def test_cell_radius_must_be_positive(self):
        with pytest.raises(DomainError):
            reduce_to_om_knot(SQUARE_CCW, (0.0, 0.0), cell_radius=0.0)

    @given(st.floats(min_value=0.0, max_value=6.28, allow_nan=False))
    def test_scale_invariant_under_rotation(self, angle):
        base = _circle(10.0, 360)
        rot = tuple(
            (
                x * math.cos(angle) - y * math.sin(angle),
                x * math.sin(angle) + y * math.cos(angle),
            )
            for x, y in base.vertices
        )
        knot = reduce_to_om_knot(PlanarPath(rot, closed=True), (0.0, 0.0))
        assert knot.scale == 63


class TestPlanarPathValidation:
    def test_duplicate_consecutive_vertices(self):
        with pytest.raises(DomainError):
            PlanarPath(((0.0, 0.0), (0.0, 0.0), (1.0, 1.0)), closed=True)

    def test_closed_needs_three(self):
        with pytest.raises(DomainError):
            PlanarPath(((0.0, 0.0), (1.0, 0.0)), closed=True)


class TestLoadPath:
    def test_closed_inference(self):
        text = "# a closed triangle\n0 0\n2 0\n1 2\n0 0\n"
        path = load_path(io.StringIO(text))
        assert path.closed
        assert len(path.vertices) == 3

    def test_open_path(self):
        path = load_path(io.StringIO("0 0\n1 0\n2 1\n"))
        assert not path.closed
        assert len(path.vertices) == 3

    def test_bad_token_is_parse_error(self):
        with pytest.raises(ParseError, match="line 2"):
            load_path(io.StringIO("0 0\nnope 1\n1 1\n"))

    def test_wrong_arity_is_parse_error(self):
        with pytest.raises(ParseError, match="line 1"):
            load_path(io.StringIO("0 0 0\n1 1 1\n"))

    def test_roundtrip_through_reduce(self, tmp_path):
        target = tmp_path / "loop.txt"
        lines = [f"{x} {y}" for x, y in _circle(10.0, 360).vertices]
        target.write_text("\n".join(lines + [lines[0]]) + "\n", encoding="utf-8")
        path = load_path(target)
        assert path.closed
        assert reduce_to_om_knot(path, (0.0, 0.0)).scale == 63
