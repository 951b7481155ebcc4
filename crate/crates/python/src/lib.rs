//! Python bindings. Complex arguments are Python `complex`; library errors
//! surface as `ValueError`.

use epstein_kit::bounds;
use epstein_kit::config::VerifyConfig;
use epstein_kit::dome::{self, FinitelyBentDome};
use epstein_kit::epstein::{self, EpsteinInput};
use epstein_kit::error::Error;
use epstein_kit::halfspace::H3Point;
use epstein_kit::metrics::{self, ConformalMetric, PlaneDomain, ThurstonOptions};
use epstein_kit::schwarzian::{self, MapCatalogEntry, SupNormConfig};
use epstein_kit::verify;
use epstein_kit::wvolume::{self, ConvexRevolutionBody};
use num_complex::Complex64 as C64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type Point = (f64, f64, f64);

fn point(p: &H3Point) -> Point {
    (p.xi.re, p.xi.im, p.t)
}

fn domain(name: &str, a: f64) -> PyResult<PlaneDomain> {
    match name {
        "disk" => Ok(PlaneDomain::disk()),
        "half-plane" => Ok(PlaneDomain::half_plane()),
        "slit" | "slit-plane" => Ok(PlaneDomain::SlitPlane),
        "two-disks" => PlaneDomain::two_disks(a).map_err(err),
        "strip" => Ok(PlaneDomain::Strip),
        other => Err(PyValueError::new_err(format!("unknown domain '{other}'"))),
    }
}

/// A catalogued holomorphic map, e.g. `"koebe"`, `"sector:0.5"`.
#[pyclass(name = "Map", module = "epstein_kit")]
#[derive(Clone)]
struct PyMap {
    inner: MapCatalogEntry,
}

#[pymethods]
impl PyMap {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyMap { inner: MapCatalogEntry::lookup(name).map_err(err)? })
    }

    #[staticmethod]
    fn catalog() -> Vec<String> {
        MapCatalogEntry::catalog().iter().map(|e| e.name.to_string()).collect()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.to_string()
    }

    fn __call__(&self, z: C64) -> PyResult<C64> {
        Ok(self.inner.jet(z).map_err(err)?.f)
    }

    fn schwarzian(&self, z: C64) -> PyResult<C64> {
        self.inner.schwarzian(z).map_err(err)
    }

    /// Pointwise hyperbolic norm of the Schwarzian.
    fn schwarzian_norm(&self, z: C64) -> PyResult<f64> {
        let q = self.inner.schwarzian_differential().map_err(err)?;
        schwarzian::schwarzian_norm(&q, z).map_err(err)
    }

    fn sup_norm(&self) -> PyResult<f64> {
        let q = self.inner.schwarzian_differential().map_err(err)?;
        Ok(schwarzian::sup_norm(&q, &SupNormConfig::default()).map_err(err)?.value)
    }

    /// Pullback of the projective metric of the image at `z`.
    fn projective_pullback(&self, z: C64) -> PyResult<f64> {
        metrics::thurston_pullback(&self.inner, z).map_err(err)
    }
}

/// Epstein surface of a map with the hyperbolic metric of the disk
/// scaled by `e^s`.
#[pyclass(name = "EpsteinSurface", module = "epstein_kit")]
struct PyEpstein {
    input: EpsteinInput,
}

#[pymethods]
impl PyEpstein {
    #[new]
    #[pyo3(signature = (map, s = 0.0, metric = "hyperbolic"))]
    fn new(map: &PyMap, s: f64, metric: &str) -> PyResult<Self> {
        let base = match metric {
            "hyperbolic" => ConformalMetric::Hyperbolic(PlaneDomain::disk()),
            "visual" => ConformalMetric::Visual(H3Point::new(C64::new(0.0, 0.0), 1.0).map_err(err)?),
            other => return Err(PyValueError::new_err(format!("unknown metric '{other}'"))),
        };
        let input = EpsteinInput::new(map.inner.clone(), base);
        Ok(PyEpstein { input: if s == 0.0 { input } else { input.scaled(s) } })
    }

    /// Half-space coordinates `(x, y, t)` of `Ep(z)`.
    fn point(&self, z: C64) -> PyResult<Point> {
        Ok(point(&epstein::epstein_frame(&self.input, z).map_err(err)?.point))
    }

    fn flow(&self, z: C64, s: f64) -> PyResult<Point> {
        Ok(point(&epstein::epstein_flow(&self.input, z, s).map_err(err)?.point))
    }

    #[pyo3(signature = (z, h = 1e-3))]
    fn principal_curvatures(&self, z: C64, h: f64) -> PyResult<(f64, f64)> {
        epstein::principal_curvatures_numeric(&self.input, z, h).map_err(err)
    }
}

#[pyfunction]
fn curvatures_from_norm(n: f64) -> PyResult<(f64, f64)> {
    epstein::curvatures_from_norm(n).map_err(err)
}

#[pyfunction]
fn flowed_curvature(k0: f64, s: f64) -> f64 {
    epstein::flowed_curvature(k0, s)
}

#[pyfunction]
fn convexity_threshold(k0: f64) -> f64 {
    epstein::convexity_threshold(k0)
}

/// Projective metric density at `z` and the witness disk as a string.
#[pyfunction]
#[pyo3(signature = (name, z, a = 0.5))]
fn projective_metric(name: &str, z: C64, a: f64) -> PyResult<f64> {
    let d = domain(name, a)?;
    Ok(metrics::thurston_metric(&d, z, &ThurstonOptions::default()).map_err(err)?.density)
}

#[pyfunction]
#[pyo3(signature = (name, z, a = 0.5))]
fn hyperbolic_metric(name: &str, z: C64, a: f64) -> PyResult<f64> {
    metrics::hyperbolic_metric(&domain(name, a)?, z).map_err(err)
}

/// Dome over `"disk"`, `"slit"` or `"two-disks"`.
#[pyclass(name = "Dome", module = "epstein_kit")]
struct PyDome {
    domain: PlaneDomain,
    inner: FinitelyBentDome,
}

#[pymethods]
impl PyDome {
    #[new]
    #[pyo3(signature = (name, a = 0.5))]
    fn new(name: &str, a: f64) -> PyResult<Self> {
        let d = domain(name, a)?;
        Ok(PyDome { domain: d, inner: dome::build_dome(&d).map_err(err)? })
    }

    fn retract(&self, z: C64) -> PyResult<Point> {
        Ok(point(&dome::dome_retract(&self.inner, z).map_err(err)?))
    }

    fn ridge_angles(&self) -> Vec<f64> {
        self.inner.ridges.iter().map(|r| r.angle).collect()
    }

    /// Worst distance between retraction and projective-witness projection.
    fn identity_residual(&self, samples: Vec<C64>) -> PyResult<f64> {
        dome::dome_epstein_identity_check(&self.domain, &samples).map_err(err)
    }

    fn lipschitz_estimate(&self, pairs: Vec<(C64, C64)>) -> PyResult<f64> {
        dome::lipschitz_estimate(&self.domain, &pairs).map_err(err)
    }
}

/// Convex body of revolution: `Body.ball(r)` or `Body.spindle(length, r)`.
#[pyclass(name = "Body", module = "epstein_kit")]
#[derive(Clone)]
struct PyBody {
    inner: ConvexRevolutionBody,
}

#[pymethods]
impl PyBody {
    #[staticmethod]
    fn ball(r: f64) -> PyResult<Self> {
        Ok(PyBody { inner: ConvexRevolutionBody::ball(r).map_err(err)? })
    }

    #[staticmethod]
    fn spindle(length: f64, r: f64) -> PyResult<Self> {
        Ok(PyBody { inner: ConvexRevolutionBody::spindle(length, r).map_err(err)? })
    }

    fn neighborhood(&self, t: f64) -> PyResult<Self> {
        Ok(PyBody { inner: self.inner.neighborhood(t).map_err(err)? })
    }

    fn w_volume(&self) -> PyResult<f64> {
        wvolume::w_volume(&self.inner).map_err(err)
    }

    fn w_volume_alternate(&self) -> PyResult<f64> {
        wvolume::w_volume_alternate(&self.inner).map_err(err)
    }

    fn area_at_infinity(&self) -> PyResult<f64> {
        wvolume::area_at_infinity(&self.inner).map_err(err)
    }

    fn metric_at_infinity(&self, z: C64) -> PyResult<f64> {
        wvolume::metric_at_infinity(&self.inner, z).map_err(err)
    }
}

#[pyfunction]
fn thick_part_excess(eps: f64) -> PyResult<f64> {
    bounds::thick_part_excess(eps).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (t, k = 1.5))]
fn bending_bound_gk(t: f64, k: f64) -> PyResult<f64> {
    Ok(bounds::bending_bound_gk(t, k).map_err(err)?.value)
}

#[pyfunction]
fn volume_gap_g(t: f64) -> PyResult<f64> {
    bounds::volume_gap_g(t).map_err(err)
}

/// Run a suite with default tolerances; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suite, seed = 0))]
fn run_verify(suite: &str, seed: u64) -> PyResult<(bool, String)> {
    let config = VerifyConfig::default();
    let reports = verify::run(suite, &config, seed).map_err(err)?;
    Ok((reports.iter().all(|r| r.pass), verify::render(&reports, &config)))
}

#[pymodule]
#[pyo3(name = "epstein_kit")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMap>()?;
    m.add_class::<PyEpstein>()?;
    m.add_class::<PyDome>()?;
    m.add_class::<PyBody>()?;
    m.add_function(wrap_pyfunction!(curvatures_from_norm, m)?)?;
    m.add_function(wrap_pyfunction!(flowed_curvature, m)?)?;
    m.add_function(wrap_pyfunction!(convexity_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(projective_metric, m)?)?;
    m.add_function(wrap_pyfunction!(hyperbolic_metric, m)?)?;
    m.add_function(wrap_pyfunction!(thick_part_excess, m)?)?;
    m.add_function(wrap_pyfunction!(bending_bound_gk, m)?)?;
    m.add_function(wrap_pyfunction!(volume_gap_g, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
