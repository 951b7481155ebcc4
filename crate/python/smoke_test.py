"""Smoke test for the Python bindings.

Build and install first:  pip install --no-build-isolation -e crates/python
Run with:                 python -m pytest python/smoke_test.py   (or plain python)
"""

import math

import epstein_kit as ek


def test_koebe_schwarzian():
    k = ek.Map("koebe")
    assert abs(k.sup_norm() - 1.5) < 1e-6
    assert abs(k.schwarzian_norm(0j) - 1.5) < 1e-12
    assert "koebe" in ek.Map.catalog()


def test_epstein_surface():
    s = ek.EpsteinSurface(ek.Map("koebe"))
    a, b = s.principal_curvatures(0j, 1e-3)
    assert abs(a + 0.6) < 1e-3 and abs(b + 3.0) < 1e-3
    x, y, t = s.flow(0.2 + 0.1j, 0.7)
    x2, y2, t2 = ek.EpsteinSurface(ek.Map("koebe"), s=0.7).point(0.2 + 0.1j)
    assert max(abs(x - x2), abs(y - y2), abs(t - t2)) < 1e-9
    assert abs(ek.convexity_threshold(-3.0) - 0.5 * math.log(2.0)) < 1e-15


def test_dome():
    d = ek.Dome("two-disks", 0.5)
    (angle,) = d.ridge_angles()
    assert abs(angle - (math.pi - math.acos(2 * 0.25 - 1))) < 1e-9
    assert d.identity_residual([0.3 + 0.2j, -0.9 + 0.1j]) < 1e-6
    assert abs(ek.projective_metric("slit", 0j) - 4.0) < 1e-8


def test_w_volume():
    for r in (0.5, 1.0):
        b = ek.Body.ball(r)
        assert abs(b.w_volume() + 2 * math.pi * r) < 1e-6
        assert abs(b.w_volume_alternate() + 2 * math.pi * r) < 1e-6
    sp = ek.Body.spindle(1.0, 0.5)
    assert abs(sp.neighborhood(0.5).w_volume() - sp.w_volume() + math.pi) < 1e-5


def test_bounds_and_verify():
    assert math.isinf(ek.thick_part_excess(1.0))
    assert ek.bending_bound_gk(1e-6) < ek.bending_bound_gk(1e-3)
    ok, text = ek.run_verify("bounds", 7)
    assert ok and "suite bounds: PASS" in text


def test_errors_raise_value_error():
    try:
        ek.Map("no-such-map")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print("ok", name)
