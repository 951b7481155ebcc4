//! W-volume of rotationally symmetric convex bodies in H³, their metrics
//! at infinity, and the gradient algebra of the renormalized volume.
//!
//! Bodies are symmetric about the vertical geodesic over 0. A body is
//! described by its profile in the meridian half-plane `{(x, t) : x ≥ 0}`,
//! which is a totally geodesic copy of H². All profiles are unions of
//! Euclidean circle arcs (hyperbolic spheres) and a cone `x = t sinh r`
//! (the equidistant tube around the axis).

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::halfspace::{visual_density, H3Point};
use crate::optimize::scan_and_refine_max;
use crate::quadrature::{integrate, QuadratureOptions, TensorRule};
use crate::schwarzian::{QuadraticDifferential, Region};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ConvexRevolutionBody {
    /// Ball of hyperbolic radius `radius` about `(0, height)`.
    Ball { height: f64, radius: f64 },
    /// `radius`-neighborhood of the axis segment from `(0, bottom)` to
    /// `(0, top)`.
    Spindle { bottom: f64, top: f64, radius: f64 },
}

impl ConvexRevolutionBody {
    pub fn ball(radius: f64) -> Result<Self> {
        Self::check_radius(radius)?;
        Ok(ConvexRevolutionBody::Ball { height: 1.0, radius })
    }

    /// Spindle with core segment of hyperbolic length `length` starting at
    /// height 1.
    pub fn spindle(length: f64, radius: f64) -> Result<Self> {
        Self::check_radius(radius)?;
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidParameter(format!("spindle length must be positive, got {length}")));
        }
        Ok(ConvexRevolutionBody::Spindle { bottom: 1.0, top: length.exp(), radius })
    }

    fn check_radius(r: f64) -> Result<()> {
        if r >= 0.0 && r.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("radius must be nonnegative, got {r}")))
        }
    }

    pub fn radius(&self) -> f64 {
        match *self {
            ConvexRevolutionBody::Ball { radius, .. } | ConvexRevolutionBody::Spindle { radius, .. } => radius,
        }
    }

    /// Hyperbolic length of the core segment (0 for a ball).
    pub fn core_length(&self) -> f64 {
        match *self {
            ConvexRevolutionBody::Ball { .. } => 0.0,
            ConvexRevolutionBody::Spindle { bottom, top, .. } => (top / bottom).ln(),
        }
    }

    /// Euler characteristic of the boundary sphere.
    pub fn euler_characteristic(&self) -> i64 {
        2
    }

    /// The `t`-neighborhood.
    pub fn neighborhood(&self, t: f64) -> Result<Self> {
        if !(t >= 0.0) {
            return Err(Error::InvalidParameter(format!("neighborhood size must be nonnegative, got {t}")));
        }
        Ok(match *self {
            ConvexRevolutionBody::Ball { height, radius } => ConvexRevolutionBody::Ball { height, radius: radius + t },
            ConvexRevolutionBody::Spindle { bottom, top, radius } => {
                ConvexRevolutionBody::Spindle { bottom, top, radius: radius + t }
            }
        })
    }

    /// Boundary profile from the bottom of the axis to the top.
    pub fn profile(&self) -> Vec<ProfilePiece> {
        match *self {
            ConvexRevolutionBody::Ball { height, radius } => vec![ProfilePiece::Arc {
                center: height * radius.cosh(),
                radius: height * radius.sinh(),
                phi: (0.0, PI),
            }],
            ConvexRevolutionBody::Spindle { bottom, top, radius } => {
                // The spheres meet the cone tangentially at (a tanh r, a sech r).
                let pj = radius.tanh().acos();
                let sech = 1.0 / radius.cosh();
                vec![
                    ProfilePiece::Arc {
                        center: bottom * radius.cosh(),
                        radius: bottom * radius.sinh(),
                        phi: (0.0, pj),
                    },
                    ProfilePiece::Cone { slope: radius.sinh(), t: (bottom * sech, top * sech) },
                    ProfilePiece::Arc { center: top * radius.cosh(), radius: top * radius.sinh(), phi: (pj, PI) },
                ]
            }
        }
    }
}

/// A piece of a profile, parametrized by `p ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProfilePiece {
    /// `(R sin φ, C − R cos φ)` for `φ` in the given range.
    Arc { center: f64, radius: f64, phi: (f64, f64) },
    /// `x = slope · t` for `t` in the given range.
    Cone { slope: f64, t: (f64, f64) },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProfilePoint {
    pub x: f64,
    pub t: f64,
    /// Outward Euclidean unit normal `(N_x, N_t)`.
    pub normal: (f64, f64),
    /// Euclidean speed `|dγ/dp|`.
    pub speed: f64,
    /// `dt/dp`.
    pub dt: f64,
    /// Euclidean curvature, positive when bending toward the body.
    pub curvature: f64,
}

impl ProfilePiece {
    pub fn at(&self, p: f64) -> ProfilePoint {
        match *self {
            ProfilePiece::Arc { center, radius, phi } => {
                let dphi = phi.1 - phi.0;
                let f = phi.0 + p * dphi;
                let (s, c) = f.sin_cos();
                ProfilePoint {
                    x: radius * s,
                    t: center - radius * c,
                    normal: (s, -c),
                    speed: radius * dphi.abs(),
                    dt: radius * s * dphi,
                    curvature: if radius > 0.0 { 1.0 / radius } else { f64::INFINITY },
                }
            }
            ProfilePiece::Cone { slope, t } => {
                let h = (1.0 + slope * slope).sqrt();
                let tt = t.0 + p * (t.1 - t.0);
                ProfilePoint {
                    x: slope * tt,
                    t: tt,
                    normal: (1.0 / h, -slope / h),
                    speed: h * (t.1 - t.0),
                    dt: t.1 - t.0,
                    curvature: 0.0,
                }
            }
        }
    }
}

impl ProfilePoint {
    /// Hyperbolic principal curvatures (meridian, parallel) for the
    /// outward normal.
    pub fn principal_curvatures(&self) -> (f64, f64) {
        let (nx, nt) = self.normal;
        let k1 = self.t * self.curvature - nt;
        let sinh_u = self.x / self.t;
        let k2 = (nx - sinh_u * nt) / sinh_u;
        (k1, k2)
    }

    /// Hyperbolic area element per unit `p`, after integrating the angle.
    fn area_weight(&self) -> f64 {
        2.0 * PI * self.x / (self.t * self.t) * self.speed
    }
}

/// Integrals over a body and its boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BodyIntegrals {
    pub volume: f64,
    pub area: f64,
    /// `∫ H da` with `H` the average of the principal curvatures.
    pub mean_curvature: f64,
    /// `∫ det(I + B) da`.
    pub det_area: f64,
    /// Sum of the quadrature error estimates.
    pub error: f64,
}

fn tight() -> QuadratureOptions {
    QuadratureOptions { abs_tol: 1e-13, rel_tol: 1e-12, max_intervals: 4000 }
}

/// Closed forms, available for balls.
pub fn closed_form_integrals(body: &ConvexRevolutionBody) -> Option<BodyIntegrals> {
    match *body {
        ConvexRevolutionBody::Ball { radius: r, .. } => Some(BodyIntegrals {
            volume: PI * ((2.0 * r).sinh() - 2.0 * r),
            area: 4.0 * PI * r.sinh().powi(2),
            mean_curvature: 2.0 * PI * (2.0 * r).sinh(),
            det_area: 4.0 * PI * (2.0 * r).exp(),
            error: 0.0,
        }),
        ConvexRevolutionBody::Spindle { .. } => None,
    }
}

/// Revolution quadrature over the profile; volume through Green's theorem
/// as `π ∮ x² t⁻³ dt`.
pub fn integrals_by_quadrature(body: &ConvexRevolutionBody) -> Result<BodyIntegrals> {
    if body.radius() == 0.0 {
        return Ok(BodyIntegrals { volume: 0.0, area: 0.0, mean_curvature: 0.0, det_area: 0.0, error: 0.0 });
    }
    let opts = tight();
    let mut out = BodyIntegrals { volume: 0.0, area: 0.0, mean_curvature: 0.0, det_area: 0.0, error: 0.0 };
    for piece in body.profile() {
        let vol = integrate(
            |p| {
                let q = piece.at(p);
                PI * q.x * q.x / q.t.powi(3) * q.dt
            },
            0.0,
            1.0,
            &opts,
        )?;
        let area = integrate(|p| piece.at(p).area_weight(), 0.0, 1.0, &opts)?;
        let h = integrate(
            |p| {
                let q = piece.at(p);
                let (k1, k2) = q.principal_curvatures();
                0.5 * (k1 + k2) * q.area_weight()
            },
            0.0,
            1.0,
            &opts,
        )?;
        let det = integrate(
            |p| {
                let q = piece.at(p);
                let (k1, k2) = q.principal_curvatures();
                (1.0 + k1) * (1.0 + k2) * q.area_weight()
            },
            0.0,
            1.0,
            &opts,
        )?;
        out.volume += vol.value;
        out.area += area.value;
        out.mean_curvature += h.value;
        out.det_area += det.value;
        out.error += vol.error + area.error + h.error + det.error;
    }
    Ok(out)
}

pub fn integrals(body: &ConvexRevolutionBody) -> Result<BodyIntegrals> {
    match closed_form_integrals(body) {
        Some(i) => Ok(i),
        None => integrals_by_quadrature(body),
    }
}

/// `vol(N) − ½∫ H da`.
pub fn w_volume(body: &ConvexRevolutionBody) -> Result<f64> {
    let i = integrals(body)?;
    Ok(i.volume - 0.5 * i.mean_curvature)
}

/// `vol − ¼ area(ρ_N) + ½ area(∂N) + ½πχ(∂N)`, every term by quadrature
/// and the metric at infinity by contact search.
pub fn w_volume_alternate(body: &ConvexRevolutionBody) -> Result<f64> {
    let i = integrals_by_quadrature(body)?;
    let a_inf = area_at_infinity(body)?;
    Ok(i.volume - 0.25 * a_inf + 0.5 * i.area + 0.5 * PI * body.euler_characteristic() as f64)
}

/// Residuals of the mean curvature identity and of the pullback identity
/// `area(ρ_N) = ∫ det(I + B) da`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeanCurvatureResidual {
    pub identity: f64,
    pub pullback: f64,
}

pub fn mean_curvature_identity_residual(body: &ConvexRevolutionBody) -> Result<MeanCurvatureResidual> {
    let (i, a_inf) = match closed_form_integrals(body) {
        Some(i) => (i, 4.0 * PI * (2.0 * body.radius()).exp()),
        None => (integrals_by_quadrature(body)?, area_at_infinity(body)?),
    };
    let chi = body.euler_characteristic() as f64;
    Ok(MeanCurvatureResidual {
        identity: (i.mean_curvature - (0.5 * a_inf - i.area - PI * chi)).abs(),
        pullback: (a_inf - i.det_area).abs(),
    })
}

/// Point of the boundary first met by the horospheres at `z`, i.e. the
/// body point maximizing the visual metric at `z`.
pub fn contact_point(body: &ConvexRevolutionBody, z: C64) -> Result<H3Point> {
    let rho = z.norm();
    let pieces = body.profile();
    let n = pieces.len();
    let point = |sigma: f64| -> ProfilePoint {
        let k = (sigma.floor() as usize).min(n - 1);
        pieces[k].at(sigma - k as f64)
    };
    let value = |sigma: f64| -> f64 {
        let q = point(sigma);
        2.0 * q.t / (q.t * q.t + (rho - q.x).powi(2))
    };
    let (sigma, v) = scan_and_refine_max(value, 0.0, n as f64, 96 * n + 1, 1e-15);
    if !v.is_finite() {
        return Err(Error::NonConvergence { what: format!("contact point for {z}"), best: v });
    }
    let q = point(sigma);
    let dir = if rho > 0.0 { z / rho } else { C64::new(1.0, 0.0) };
    H3Point::new(dir * q.x, q.t)
}

/// Density of the metric at infinity of the body at `z`.
pub fn metric_at_infinity(body: &ConvexRevolutionBody, z: C64) -> Result<f64> {
    Ok(visual_density(&contact_point(body, z)?, z))
}

/// `area(ρ_N) = ∫ ρ_N² dA`, integrated in `log |z|`.
pub fn area_at_infinity(body: &ConvexRevolutionBody) -> Result<f64> {
    let r = body.radius();
    let (lo, hi) = match *body {
        ConvexRevolutionBody::Ball { height, .. } => (height, height),
        ConvexRevolutionBody::Spindle { bottom, top, .. } => (bottom, top),
    };
    let a = lo.ln() - r - 20.0;
    let b = hi.ln() + r + 20.0;
    let mut err = None;
    let q = integrate(
        |v| {
            let s = v.exp();
            match metric_at_infinity(body, C64::new(s, 0.0)) {
                Ok(m) => 2.0 * PI * m * m * s * s,
                Err(e) => {
                    err.get_or_insert(e);
                    f64::NAN
                }
            }
        },
        a,
        b,
        &tight(),
    );
    if let Some(e) = err {
        return Err(e);
    }
    Ok(q?.value)
}

/// A holomorphic quadratic differential with the hyperbolic metric it is
/// measured against, and a region to integrate over.
#[derive(Clone, Debug)]
pub struct GradientPair {
    pub phi: QuadraticDifferential,
    pub region: Region,
}

impl GradientPair {
    /// `φ = c dw²/w²` on the round annulus `1/R < |w| < R`, optionally
    /// perturbed by `(a w + b/w) dw²/w²`.
    pub fn annulus(r: f64, c: C64, a: C64, b: C64) -> Result<Self> {
        if !(r > 1.0) {
            return Err(Error::InvalidParameter(format!("annulus needs R > 1, got {r}")));
        }
        let metric = crate::metrics::ConformalMetric::Hyperbolic(crate::metrics::PlaneDomain::Annulus { r });
        let phi =
            QuadraticDifferential::new(format!("annulus:{r}"), metric, move |w: C64| Ok((c + a * w + b / w) / (w * w)));
        Ok(GradientPair { phi, region: Region::Annulus { center: C64::new(0.0, 0.0), inner: 1.0 / r, outer: r } })
    }
}

/// Value of the gradient Beltrami differential `−φ̄/ρ²` at `z`.
pub fn wp_gradient(pair: &GradientPair, z: C64) -> Result<C64> {
    let v = pair.phi.value(z)?;
    let rho = pair.phi.metric.density(z)?;
    Ok(-v.conj() / (rho * rho))
}

/// Fixed Gauss rule used for pairings; fixed so that the pairing is
/// exactly linear in `μ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairingRule {
    pub points: usize,
    pub panels: usize,
}

impl Default for PairingRule {
    fn default() -> Self {
        PairingRule { points: 12, panels: 24 }
    }
}

/// `Re ∫ μ φ dA` over the pair's region.
pub fn wp_pairing<M>(pair: &GradientPair, mu: M, rule: &PairingRule) -> Result<f64>
where
    M: Fn(C64) -> Result<C64>,
{
    let integrand = |z: C64| -> f64 {
        match (mu(z), pair.phi.value(z)) {
            (Ok(m), Ok(p)) => (m * p).re,
            _ => f64::NAN,
        }
    };
    let value = match pair.region {
        Region::Rectangle { x, y } => {
            TensorRule::rectangle(x, y, rule.points, rule.panels).apply(|a, b| integrand(C64::new(a, b)))
        }
        Region::Disk { center, radius } => {
            TensorRule::rectangle((0.0, radius), (0.0, 2.0 * PI), rule.points, rule.panels)
                .apply(|r, th| r * integrand(center + C64::from_polar(r, th)))
        }
        Region::Annulus { center, inner, outer } => {
            TensorRule::rectangle((inner, outer), (0.0, 2.0 * PI), rule.points, rule.panels)
                .apply(|r, th| r * integrand(center + C64::from_polar(r, th)))
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(format!("pairing with {}", pair.phi.label)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::QuadratureOptions;
    use crate::schwarzian::l2_norm;

    #[test]
    fn ball_examples() {
        for r in [0.1, 0.5, 1.0, 2.0, 3.0] {
            let b = ConvexRevolutionBody::ball(r).unwrap();
            assert!((w_volume(&b).unwrap() + 2.0 * PI * r).abs() < 1e-9);
            let alt = w_volume_alternate(&b).unwrap();
            assert!((alt + 2.0 * PI * r).abs() < 1e-6, "{r}: {alt}");
        }
        let b0 = ConvexRevolutionBody::ball(0.0).unwrap();
        assert_eq!(w_volume(&b0).unwrap(), 0.0);
        assert!(w_volume_alternate(&b0).unwrap().abs() < 1e-9);
    }

    #[test]
    fn quadrature_matches_ball_closed_forms() {
        for r in [0.3, 1.0, 2.5] {
            let b = ConvexRevolutionBody::ball(r).unwrap();
            let q = integrals_by_quadrature(&b).unwrap();
            let c = closed_form_integrals(&b).unwrap();
            for (x, y) in
                [(q.volume, c.volume), (q.area, c.area), (q.mean_curvature, c.mean_curvature), (q.det_area, c.det_area)]
            {
                assert!((x - y).abs() < 1e-9 * (1.0 + y.abs()), "{r}: {x} vs {y}");
            }
            assert!((area_at_infinity(&b).unwrap() - c.det_area).abs() < 1e-8 * c.det_area);
        }
    }

    #[test]
    fn spindle_matches_tube_decomposition() {
        // Caps form one sphere; the tube has area π sinh 2r · L,
        // volume π sinh² r · L and mean curvature ½(coth r + tanh r).
        for (l, r) in [(0.5, 0.4), (1.0, 1.0), (2.0, 0.7)] {
            let s = ConvexRevolutionBody::spindle(l, r).unwrap();
            let w = w_volume(&s).unwrap();
            assert!((w - (-2.0 * PI * r - 0.5 * PI * l)).abs() < 1e-8, "{w}");
            let alt = w_volume_alternate(&s).unwrap();
            assert!((alt - w).abs() < 1e-6, "{alt} vs {w}");
            let a = area_at_infinity(&s).unwrap();
            let expect = (2.0 * r).exp() * (4.0 * PI + 2.0 * PI * l);
            assert!((a - expect).abs() < 1e-8 * expect, "{a} vs {expect}");
        }
    }

    #[test]
    fn profiles_are_convex_and_tangent() {
        let s = ConvexRevolutionBody::spindle(1.0, 0.6).unwrap();
        let pieces = s.profile();
        for w in pieces.windows(2) {
            let (a, b) = (w[0].at(1.0), w[1].at(0.0));
            assert!((a.x - b.x).abs() < 1e-14 && (a.t - b.t).abs() < 1e-14);
            assert!((a.normal.0 - b.normal.0).abs() < 1e-14 && (a.normal.1 - b.normal.1).abs() < 1e-14);
        }
        for piece in &pieces {
            for k in 1..100 {
                let (k1, k2) = piece.at(k as f64 / 100.0).principal_curvatures();
                assert!(k1 >= 0.0 && k2 >= 0.0);
                // Sphere and tube values.
                let r = 0.6f64;
                assert!((k2 - 1.0 / r.tanh()).abs() < 1e-12);
                assert!((k1 - 1.0 / r.tanh()).abs() < 1e-12 || (k1 - r.tanh()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn metric_at_infinity_examples() {
        let r = 0.8;
        let b = ConvexRevolutionBody::ball(r).unwrap();
        let center = H3Point::new(C64::new(0.0, 0.0), 1.0).unwrap();
        for z in [C64::new(0.0, 0.0), C64::new(0.3, -1.2), C64::new(5.0, 2.0)] {
            let m = metric_at_infinity(&b, z).unwrap();
            assert!((m - r.exp() * visual_density(&center, z)).abs() < 1e-12 * m);
        }
        let p = ConvexRevolutionBody::ball(0.0).unwrap();
        assert!((metric_at_infinity(&p, C64::new(2.0, 0.0)).unwrap() - 0.4).abs() < 1e-15);
        let s = ConvexRevolutionBody::spindle(1.5, r).unwrap();
        assert!((metric_at_infinity(&s, C64::new(0.0, 0.0)).unwrap() - 2.0 * r.exp()).abs() < 1e-12);
        // Along the tube the contact lies on the cone and ρ = e^r/|z|.
        let m = metric_at_infinity(&s, C64::new(0.0, 2.0)).unwrap();
        assert!((m - r.exp() / 2.0).abs() < 1e-12, "{m}");
    }

    #[test]
    fn metric_at_infinity_flows_by_exponential() {
        let s = ConvexRevolutionBody::spindle(1.0, 0.5).unwrap();
        for t in [0.25, 1.0, 2.0] {
            let st = s.neighborhood(t).unwrap();
            for z in [C64::new(0.1, 0.0), C64::new(0.9, 0.4), C64::new(-3.0, 1.0), C64::new(20.0, 0.0)] {
                let d = metric_at_infinity(&st, z).unwrap().ln() - metric_at_infinity(&s, z).unwrap().ln();
                assert!((d - t).abs() < 1e-6, "{t} {z}: {d}");
            }
        }
    }

    #[test]
    fn scaling_and_mean_curvature_residuals() {
        let s = ConvexRevolutionBody::spindle(1.2, 0.5).unwrap();
        let w0 = w_volume(&s).unwrap();
        for t in [0.5, 1.0, 2.0] {
            let wt = w_volume(&s.neighborhood(t).unwrap()).unwrap();
            assert!(((wt - w0) / t + 2.0 * PI).abs() < 1e-5);
        }
        let res = mean_curvature_identity_residual(&s).unwrap();
        assert!(res.identity < 1e-5 && res.pullback < 1e-5, "{res:?}");
        let res = mean_curvature_identity_residual(&ConvexRevolutionBody::ball(1.3).unwrap()).unwrap();
        assert!(res.identity < 1e-9 && res.pullback < 1e-9, "{res:?}");
    }

    #[test]
    fn gradient_examples() {
        let zero = GradientPair::annulus(3.0, C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)).unwrap();
        assert_eq!(wp_gradient(&zero, C64::new(1.2, 0.1)).unwrap(), C64::new(0.0, 0.0));
        let pair = GradientPair::annulus(3.0, C64::new(0.4, 0.1), C64::new(0.05, 0.0), C64::new(0.0, -0.03)).unwrap();
        for w in [C64::new(1.2, 0.1), C64::new(-0.5, 0.6), C64::new(0.0, 2.5)] {
            let mu = wp_gradient(&pair, w).unwrap();
            let rho = pair.phi.metric.density(w).unwrap();
            let ratio = mu.norm() * rho * rho / pair.phi.value(w).unwrap().norm();
            assert!((ratio - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn pairing_identity_and_linearity() {
        for r in [1.5, 3.0, 8.0] {
            let pair =
                GradientPair::annulus(r, C64::new(0.4, 0.1), C64::new(0.05, 0.02), C64::new(0.0, -0.03)).unwrap();
            let rule = PairingRule::default();
            let p = wp_pairing(&pair, |z| wp_gradient(&pair, z), &rule).unwrap();
            let n = l2_norm(&pair.phi, &pair.region, &QuadratureOptions::default()).unwrap().value;
            assert!((p + n * n).abs() < 1e-6, "{r}: {p} vs {}", -n * n);
            let c = 2.7;
            let pc = wp_pairing(&pair, |z| Ok(c * wp_gradient(&pair, z)?), &rule).unwrap();
            assert!((pc - c * p).abs() < 1e-12 * (1.0 + p.abs()));
            let other = |z: C64| Ok(C64::new(0.1, 0.2) * z.conj() / (1.0 + z.norm_sqr()));
            let sum = wp_pairing(&pair, |z| Ok(wp_gradient(&pair, z)? + other(z)?), &rule).unwrap();
            let parts = p + wp_pairing(&pair, other, &rule).unwrap();
            assert!((sum - parts).abs() < 1e-12 * (1.0 + p.abs()));
            assert_eq!(wp_pairing(&pair, |_| Ok(C64::new(0.0, 0.0)), &rule).unwrap(), 0.0);
        }
    }
}
