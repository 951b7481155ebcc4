//! Epstein surfaces as envelopes of horosphere families.
//!
//! For a locally univalent `f` and a metric `ρ` on Δ, the horosphere at `z`
//! is based at `f(z)` with Euclidean radius `R = |f′|/ρ`. Writing
//! `a = ½ f″/f′ − ∂_z log ρ`, the envelope point is
//!
//! ```text
//! t = 2|f′|ρ / (ρ² + 4|a|²),    ξ = f − 2tR · conj(a/f′).
//! ```
//!
//! Equivalently `Ep(z)` is the point `x` whose visual metric pulled back by
//! `f` agrees with `ρ` to first order at `z`.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::halfspace::{geodesic_flow, horosphere_from, H3Point, Horosphere, UnitTangent};
use crate::mesh::Mesh;
use crate::metrics::{ConformalMetric, PlaneDomain};
use crate::schwarzian::MapCatalogEntry;
use crate::sphere::ExtendedComplexPoint;

#[derive(Clone, Debug)]
pub struct EpsteinInput {
    pub f: MapCatalogEntry,
    pub metric: ConformalMetric,
}

impl EpsteinInput {
    pub fn new(f: MapCatalogEntry, metric: ConformalMetric) -> Self {
        EpsteinInput { f, metric }
    }

    /// `f` with the hyperbolic metric of Δ.
    pub fn hyperbolic(f: MapCatalogEntry) -> Self {
        EpsteinInput::new(f, ConformalMetric::Hyperbolic(PlaneDomain::disk()))
    }

    /// Same map, metric multiplied by `e^s`.
    pub fn scaled(&self, s: f64) -> Self {
        EpsteinInput::new(self.f.clone(), self.metric.clone().scaled(s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpsteinFrame {
    pub point: H3Point,
    /// Unit normal pointing into the horoball, toward `f(z)`.
    pub normal: UnitTangent,
    pub horosphere: Horosphere,
}

/// Envelope point and inward normal at `z`.
pub fn epstein_frame(input: &EpsteinInput, z: C64) -> Result<EpsteinFrame> {
    let jet = input.f.jet(z)?;
    if jet.d1.norm() == 0.0 {
        return Err(Error::CriticalPoint(format!("{z}")));
    }
    if !jet.f.is_finite() {
        return Err(Error::EnvelopeDegenerate(format!("{z}: f(z) = ∞")));
    }
    let rho = input.metric.density(z)?;
    let g = input.metric.log_gradient(z)?;
    let a = 0.5 * jet.d2 / jet.d1 - g;
    let fp = jet.d1.norm();
    let t = 2.0 * fp * rho / (rho * rho + 4.0 * a.norm_sqr());
    let radius = fp / rho;
    if !(t > 0.0 && t.is_finite() && radius.is_finite()) {
        return Err(Error::EnvelopeDegenerate(format!("{z}")));
    }
    let xi = jet.f - 2.0 * t * radius * (a / jet.d1).conj();
    let point = H3Point::new(xi, t).map_err(|_| Error::EnvelopeDegenerate(format!("{z}")))?;
    let horosphere = horosphere_from(ExtendedComplexPoint::Finite(jet.f), rho / fp)?;
    let v = jet.f - xi;
    let normal = UnitTangent::new(point, [v.re, v.im, radius - t])
        .map_err(|_| Error::EnvelopeDegenerate(format!("{z}: normal vanishes")))?;
    Ok(EpsteinFrame { point, normal, horosphere })
}

/// Frame flowed along its normal for time `s`; equals the frame of `e^s ρ`.
pub fn epstein_flow(input: &EpsteinInput, z: C64, s: f64) -> Result<EpsteinFrame> {
    let frame = epstein_frame(input, z)?;
    let normal = geodesic_flow(&frame.normal, s);
    let jet = input.f.jet(z)?;
    let rho = input.metric.density(z)? * s.exp();
    Ok(EpsteinFrame {
        point: normal.base,
        normal,
        horosphere: horosphere_from(ExtendedComplexPoint::Finite(jet.f), rho / jet.d1.norm())?,
    })
}

/// Principal curvatures `−‖Sf‖/(‖Sf‖ ± 1)` for `ρ = ρ_Δ`, in `(+, −)` order.
pub fn principal_curvatures_analytic(f: &MapCatalogEntry, z: C64) -> Result<(f64, f64)> {
    let rho = 2.0 / (1.0 - z.norm_sqr());
    let n = f.schwarzian(z)?.norm() / (rho * rho);
    curvatures_from_norm(n)
}

/// The curvature pair for a given pointwise norm.
pub fn curvatures_from_norm(n: f64) -> Result<(f64, f64)> {
    if (n - 1.0).abs() < 1e-12 {
        return Err(Error::NotImmersed(n));
    }
    Ok((-n / (n + 1.0), -n / (n - 1.0)))
}

/// Curvature of the parallel surface at distance `s` along the normal.
pub fn flowed_curvature(k0: f64, s: f64) -> f64 {
    (k0 * s.cosh() + s.sinh()) / (k0 * s.sinh() + s.cosh())
}

/// Finite-difference principal curvatures of `Ep` at `z` with hyperbolic
/// step `h`, sorted in decreasing order.
pub fn principal_curvatures_numeric(input: &EpsteinInput, z: C64, h: f64) -> Result<(f64, f64)> {
    let frame = epstein_frame(input, z)?;
    let he = h / input.metric.density(z)?;
    let mut x = [[[0.0f64; 3]; 3]; 3];
    for (i, row) in x.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let p = z + he * C64::new(i as f64 - 1.0, j as f64 - 1.0);
            if !input.f.in_source(p) || !input.metric.domain().contains(p) {
                return Err(Error::Domain(format!("curvature stencil at {z} leaves the domain")));
            }
            *cell = epstein_frame(input, p)?.point.to_array();
        }
    }
    let comp = |k: usize| -> [f64; 5] {
        let xu = (x[2][1][k] - x[0][1][k]) / (2.0 * he);
        let xv = (x[1][2][k] - x[1][0][k]) / (2.0 * he);
        let xuu = (x[2][1][k] - 2.0 * x[1][1][k] + x[0][1][k]) / (he * he);
        let xvv = (x[1][2][k] - 2.0 * x[1][1][k] + x[1][0][k]) / (he * he);
        let xuv = (x[2][2][k] - x[2][0][k] - x[0][2][k] + x[0][0][k]) / (4.0 * he * he);
        [xu, xv, xuu, xvv, xuv]
    };
    let c: Vec<[f64; 5]> = (0..3).map(comp).collect();
    let dot = |a: usize, b: usize| (0..3).map(|k| c[k][a] * c[k][b]).sum::<f64>();
    let n = frame.normal.direction;
    let ndot = |a: usize| (0..3).map(|k| c[k][a] * n[k]).sum::<f64>();
    let (e, f, g) = (dot(0, 0), dot(0, 1), dot(1, 1));
    let (l, m, nn) = (ndot(2), ndot(4), ndot(3));
    let qa = e * g - f * f;
    let qb = -(e * nn + g * l - 2.0 * f * m);
    let qc = l * nn - m * m;
    if qa <= 0.0 {
        return Err(Error::NotImmersed(f64::NAN));
    }
    let disc = (qb * qb - 4.0 * qa * qc).max(0.0).sqrt();
    let (k1, k2) = ((-qb + disc) / (2.0 * qa), (-qb - disc) / (2.0 * qa));
    let t = frame.point.t;
    let conv = |ke: f64| -(t * ke + n[2]);
    let (a, b) = (conv(k1), conv(k2));
    Ok(if a >= b { (a, b) } else { (b, a) })
}

/// Richardson-extrapolated numeric curvatures from steps `h` and `h/2`.
pub fn principal_curvatures_richardson(input: &EpsteinInput, z: C64, h: f64) -> Result<(f64, f64)> {
    let (a1, b1) = principal_curvatures_numeric(input, z, h)?;
    let (a2, b2) = principal_curvatures_numeric(input, z, 0.5 * h)?;
    Ok(((4.0 * a2 - a1) / 3.0, (4.0 * b2 - b1) / 3.0))
}

/// Flow time after which a curvature `κ₀` becomes positive under
/// `κ_t = (κ₀ cosh t + sinh t)/(κ₀ sinh t + cosh t)`.
pub fn convexity_threshold(k0: f64) -> f64 {
    if (k0 + 1.0).abs() < 1e-15 {
        return f64::INFINITY;
    }
    (0.5 * ((1.0 - k0).abs() / (1.0 + k0).abs()).ln()).max(0.0)
}

/// The threshold `log √(|1+κ₀|/|1−κ₀|)` read literally.
pub fn convexity_threshold_as_printed(k0: f64) -> f64 {
    (0.5 * ((1.0 + k0).abs() / (1.0 - k0).abs()).ln()).max(0.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvexityTime {
    /// Threshold consistent with the curvature flow law.
    pub threshold: f64,
    /// The literal reading, kept for comparison.
    pub printed: f64,
}

/// Convexity time for `ρ = ρ_Δ` at `z`, maximized over both curvatures.
pub fn convexity_time(f: &MapCatalogEntry, z: C64) -> Result<ConvexityTime> {
    let (k1, k2) = principal_curvatures_analytic(f, z)?;
    Ok(ConvexityTime {
        threshold: convexity_threshold(k1).max(convexity_threshold(k2)),
        printed: convexity_threshold_as_printed(k1).max(convexity_threshold_as_printed(k2)),
    })
}

/// Mesh of `Ep` over the hyperbolic disk of radius `radius` around 0.
pub fn epstein_mesh(input: &EpsteinInput, radius: f64, rings: usize, spokes: usize) -> Result<Mesh> {
    let center = epstein_frame(input, C64::new(0.0, 0.0))?.point.to_array();
    Mesh::polar(center, rings, spokes, |i, j| {
        let r = (0.5 * radius * i as f64 / rings as f64).tanh();
        let z = C64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / spokes as f64);
        Ok(epstein_frame(input, z)?.point.to_array())
    })
}
