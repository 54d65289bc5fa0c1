from __future__ import annotations

import re
import xml.etree.ElementTree as ET

import pytest

from fareybary.exact import DomainError
from fareybary.render import MAX_DEPTH_ENV, render_partition

NS = "{http://www.w3.org/2000/svg}"


def _polygons(svg: str):
    return ET.fromstring(svg.encode()).iter(f"{NS}polygon")


def test_farey_depth_one():
    polys = list(_polygons(render_partition("farey", 1)))
    assert len(polys) == 3
    verts = {v for p in polys for v in p.get("data-vertices").split()}
    assert "2/3,1/3" in verts


def test_bary_depth_zero_is_base():
    (poly,) = _polygons(render_partition("bary", 0))
    assert poly.get("data-vertices") == "0,0 1,0 1,1"
    assert poly.get("points") == "20.000,620.000 620.000,620.000 620.000,20.000"


def test_farey_depth_two_vertices():
    verts = {v for p in _polygons(render_partition("farey", 2)) for v in p.get("data-vertices").split()}
    assert {"3/5,1/5", "4/5,2/5", "3/5,2/5"} <= verts


def test_render_is_deterministic():
    assert render_partition("bary", 3) == render_partition("bary", 3)
    assert not re.search(r"\d{4}-\d{2}-\d{2}", render_partition("farey", 3))


def test_scale_changes_geometry_only():
    a, b = render_partition("farey", 2, scale=300), render_partition("farey", 2)
    va = [p.get("data-vertices") for p in _polygons(a)]
    vb = [p.get("data-vertices") for p in _polygons(b)]
    assert va == vb and a != b


def test_depth_limit(monkeypatch):
    with pytest.raises(DomainError):
        render_partition("farey", 8)
    monkeypatch.setenv(MAX_DEPTH_ENV, "2")
    with pytest.raises(DomainError):
        render_partition("farey", 3)
    with pytest.raises(DomainError):
        render_partition("hexagon", 1)
