import xml.etree.ElementTree as ET

import numpy as np
import pytest

from energy_pile import svg

NS = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("lo, hi, expected", [
    (0.0, 26.0, [0, 10, 20]),
    (0.0, 24.0, [0, 5, 10, 15, 20]),
    (-0.6, 0.2, [-0.6, -0.4, -0.2, 0.0, 0.2]),
    (0.0, 1.0, [0, 0.2, 0.4, 0.6, 0.8, 1.0]),
])
def test_nice_ticks(lo, hi, expected):
    assert svg.nice_ticks(lo, hi) == pytest.approx(expected)


def test_nice_ticks_degenerate():
    assert svg.nice_ticks(3.0, 3.0) == [3.0]
    assert svg.nice_ticks(float("nan"), 1.0) == []


def _doc(series, **panel):
    return svg.render([svg.Panel("t", "x (m)", "y (m)", series, **panel)], "title")


def test_nan_splits_polyline():
    x = np.arange(7.0)
    y = np.array([0, 1, 2, np.nan, 4, 5, 6])
    root = ET.fromstring(_doc([svg.Series("s", x, y)]).encode())
    assert len(list(root.iter(NS + "polyline"))) == 2


def test_log_axis_and_constant_series():
    x = np.geomspace(1, 1000, 20)
    root = ET.fromstring(_doc([svg.Series("s", x, np.full(20, 13.0))], log_x=True, hlines=(0, 13, 26)).encode())
    labels = [t.text for t in root.iter(NS + "text")]
    assert {"1", "10", "100", "1000"} <= set(labels)


def test_escaping_and_determinism():
    s = [svg.Series("a < b & c", [0, 1], [0, 1])]
    a, b = _doc(s), _doc(s)
    assert a == b
    assert "a &lt; b &amp; c" in a
    ET.fromstring(a.encode())
