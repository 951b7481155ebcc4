//! Conformal metrics on a small catalog of plane domains: hyperbolic
//! metrics, injectivity radius and the projective (Thurston) metric.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::halfspace::{visual_density, H3Point};
use crate::optimize::{golden_section_max, nelder_mead, NelderMeadOptions};
use crate::schwarzian::MapCatalogEntry;
use crate::sphere::{MobiusMap, RoundDisk};

/// Left end of the slit of the Koebe image `ℂ ∖ (−∞, −1/4]`.
pub const SLIT_TIP: f64 = -0.25;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PlaneDomain {
    /// The whole plane (only as the carrier of visual metrics).
    Plane,
    /// A disk, half-plane or disk exterior.
    Round(RoundDisk),
    /// `{|Im z| < π/2}`.
    Strip,
    /// `{1/r < |z| < r}`.
    Annulus { r: f64 },
    /// `ℂ ∖ (−∞, −1/4]`.
    SlitPlane,
    /// Union of the unit disks centered at `±a`, `0 < a < 1`.
    TwoDiskUnion { a: f64 },
}

impl PlaneDomain {
    pub fn disk() -> Self {
        PlaneDomain::Round(RoundDisk::unit())
    }

    pub fn half_plane() -> Self {
        PlaneDomain::Round(RoundDisk::upper_half_plane())
    }

    pub fn two_disks(a: f64) -> Result<Self> {
        if a > 0.0 && a < 1.0 {
            Ok(PlaneDomain::TwoDiskUnion { a })
        } else {
            Err(Error::InvalidParameter(format!("two-disk union needs 0 < a < 1, got {a}")))
        }
    }

    /// Parse a CLI domain name.
    pub fn lookup(name: &str, a: f64, r: f64) -> Result<Self> {
        match name {
            "disk" => Ok(PlaneDomain::disk()),
            "half-plane" => Ok(PlaneDomain::half_plane()),
            "strip" => Ok(PlaneDomain::Strip),
            "annulus" if r > 1.0 => Ok(PlaneDomain::Annulus { r }),
            "slit-plane" => Ok(PlaneDomain::SlitPlane),
            "two-disks" | "two-disk-union" => PlaneDomain::two_disks(a),
            _ => Err(Error::InvalidParameter(format!("unknown domain '{name}'"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PlaneDomain::Plane => "plane",
            PlaneDomain::Round(RoundDisk::HalfPlane { .. }) => "half-plane",
            PlaneDomain::Round(_) => "disk",
            PlaneDomain::Strip => "strip",
            PlaneDomain::Annulus { .. } => "annulus",
            PlaneDomain::SlitPlane => "slit-plane",
            PlaneDomain::TwoDiskUnion { .. } => "two-disk-union",
        }
    }

    pub fn contains(&self, z: C64) -> bool {
        match *self {
            PlaneDomain::Plane => z.is_finite(),
            PlaneDomain::Round(d) => d.horo_radius(z) > 0.0,
            PlaneDomain::Strip => z.im.abs() < FRAC_PI_2,
            PlaneDomain::Annulus { r } => z.norm() > 1.0 / r && z.norm() < r,
            PlaneDomain::SlitPlane => !(z.im == 0.0 && z.re <= SLIT_TIP),
            PlaneDomain::TwoDiskUnion { a } => (z - a).norm() < 1.0 || (z + a).norm() < 1.0,
        }
    }

    /// Euclidean distance from `z` to the boundary.
    pub fn boundary_distance(&self, z: C64) -> f64 {
        match *self {
            PlaneDomain::Plane => f64::INFINITY,
            PlaneDomain::Round(RoundDisk::Circle { center, radius, .. }) => ((z - center).norm() - radius).abs(),
            PlaneDomain::Round(RoundDisk::HalfPlane { point, direction }) => ((z - point) * direction.conj()).im.abs(),
            PlaneDomain::Strip => FRAC_PI_2 - z.im.abs(),
            PlaneDomain::Annulus { r } => (r - z.norm()).min(z.norm() - 1.0 / r),
            PlaneDomain::SlitPlane => slit_distance(z),
            PlaneDomain::TwoDiskUnion { a } => {
                let (d1, d2) = ((z + a).norm(), (z - a).norm());
                if d1 < 1.0 || d2 < 1.0 {
                    // Distance to the part of each circle outside the other disk.
                    two_disk_boundary_distance(z, a)
                } else {
                    0.0
                }
            }
        }
    }

    pub fn simply_connected(&self) -> bool {
        !matches!(self, PlaneDomain::Annulus { .. })
    }
}

fn slit_distance(z: C64) -> f64 {
    if z.re <= SLIT_TIP {
        z.im.abs()
    } else {
        (z - SLIT_TIP).norm()
    }
}

fn two_disk_boundary_distance(z: C64, a: f64) -> f64 {
    let corner = C64::new(0.0, (1.0 - a * a).sqrt());
    let mut best = f64::INFINITY;
    for (c, other) in [(-a, a), (a, -a)] {
        let v = z - c;
        let p = if v.norm() > 0.0 { c + v / v.norm() } else { C64::new(c - 1.0, 0.0) };
        if (p - other).norm() >= 1.0 {
            best = best.min((z - p).norm());
        } else {
            best = best.min((z - corner).norm()).min((z + corner).norm());
        }
    }
    best
}

/// A conformal metric `λ(z)|dz|`.
#[derive(Clone, Debug, PartialEq)]
pub enum ConformalMetric {
    /// Complete curvature −1 metric of the domain.
    Hyperbolic(PlaneDomain),
    /// Visual metric seen from a point of H³.
    Visual(H3Point),
    /// `e^s` times another metric.
    Scaled { base: Box<ConformalMetric>, log_factor: f64 },
    /// Projective metric of a simply connected domain.
    Thurston(PlaneDomain),
}

impl ConformalMetric {
    pub fn scaled(self, s: f64) -> Self {
        match self {
            ConformalMetric::Scaled { base, log_factor } => {
                ConformalMetric::Scaled { base, log_factor: log_factor + s }
            }
            other => ConformalMetric::Scaled { base: Box::new(other), log_factor: s },
        }
    }

    pub fn domain(&self) -> &PlaneDomain {
        match self {
            ConformalMetric::Hyperbolic(d) | ConformalMetric::Thurston(d) => d,
            ConformalMetric::Visual(_) => &PlaneDomain::Plane,
            ConformalMetric::Scaled { base, .. } => base.domain(),
        }
    }

    pub fn density(&self, z: C64) -> Result<f64> {
        match self {
            ConformalMetric::Hyperbolic(d) => hyperbolic_metric(d, z),
            ConformalMetric::Visual(x) => Ok(visual_density(x, z)),
            ConformalMetric::Scaled { base, log_factor } => Ok(log_factor.exp() * base.density(z)?),
            ConformalMetric::Thurston(d) => Ok(thurston_metric(d, z, &ThurstonOptions::default())?.density),
        }
    }

    /// `∂_z log λ`.
    pub fn log_gradient(&self, z: C64) -> Result<C64> {
        match self {
            ConformalMetric::Hyperbolic(d) => hyperbolic_log_gradient(d, z),
            ConformalMetric::Visual(x) => {
                let w = z - x.xi;
                Ok(-w.conj() / (x.t * x.t + w.norm_sqr()))
            }
            ConformalMetric::Scaled { base, .. } => base.log_gradient(z),
            ConformalMetric::Thurston(_) => {
                Err(Error::Unsupported("projective metric has no closed-form log-gradient".into()))
            }
        }
    }
}

fn outside(domain: &PlaneDomain, z: C64) -> Error {
    Error::Domain(format!("{z} is not in the {} domain", domain.name()))
}

/// Koebe inverse `k⁻¹(w) = (u−1)/(u+1)`, `u = √(1+4w)`, with its
/// derivative.
pub fn koebe_inverse(w: C64) -> (C64, C64) {
    let u = (C64::new(1.0, 0.0) + 4.0 * w).sqrt();
    let up1 = u + 1.0;
    ((u - 1.0) / up1, 4.0 / (u * up1 * up1))
}

/// Density of the hyperbolic metric of the domain at `z`.
pub fn hyperbolic_metric(domain: &PlaneDomain, z: C64) -> Result<f64> {
    if !domain.contains(z) {
        return Err(outside(domain, z));
    }
    match *domain {
        PlaneDomain::Round(d) => Ok(1.0 / d.horo_radius(z)),
        PlaneDomain::Strip => Ok(1.0 / z.im.cos()),
        PlaneDomain::Annulus { r } => {
            let l = r.ln();
            let m = z.norm();
            Ok((PI / (2.0 * l)) / (m * (PI * m.ln() / (2.0 * l)).cos()))
        }
        PlaneDomain::SlitPlane => {
            let u = (C64::new(1.0, 0.0) + 4.0 * z).sqrt();
            Ok(2.0 / (u.norm() * u.re))
        }
        PlaneDomain::Plane | PlaneDomain::TwoDiskUnion { .. } => {
            Err(Error::Unsupported(format!("no closed-form hyperbolic metric on the {}", domain.name())))
        }
    }
}

/// `∂_z log ρ` for the hyperbolic metric.
pub fn hyperbolic_log_gradient(domain: &PlaneDomain, z: C64) -> Result<C64> {
    if !domain.contains(z) {
        return Err(outside(domain, z));
    }
    match *domain {
        PlaneDomain::Round(d) => {
            let h = d.horo_radius(z);
            let dh = match d {
                RoundDisk::Circle { center, radius, interior } => {
                    let g = -(z - center).conj() / (2.0 * radius);
                    if interior {
                        g
                    } else {
                        -g
                    }
                }
                RoundDisk::HalfPlane { direction, .. } => direction.conj() / C64::new(0.0, 2.0),
            };
            Ok(-dh / h)
        }
        PlaneDomain::Strip => Ok(C64::new(0.0, -0.5 * z.im.tan())),
        PlaneDomain::Annulus { r } => {
            let a = PI / (2.0 * r.ln());
            Ok((-1.0 + a * (a * z.norm().ln()).tan()) / (2.0 * z))
        }
        PlaneDomain::SlitPlane => {
            let (zeta, dzeta) = koebe_inverse(z);
            let u = (C64::new(1.0, 0.0) + 4.0 * z).sqrt();
            let disk_grad = zeta.conj() / (1.0 - zeta.norm_sqr());
            let second_over_first = -(2.0 / u) * (1.0 / u + 2.0 / (u + 1.0));
            Ok(disk_grad * dzeta + 0.5 * second_over_first)
        }
        PlaneDomain::Plane | PlaneDomain::TwoDiskUnion { .. } => {
            Err(Error::Unsupported(format!("no closed-form hyperbolic metric on the {}", domain.name())))
        }
    }
}

/// Hyperbolic distance between two points of the domain (round disks and
/// the slit plane).
pub fn domain_distance(domain: &PlaneDomain, a: C64, b: C64) -> Result<f64> {
    if !domain.contains(a) {
        return Err(outside(domain, a));
    }
    if !domain.contains(b) {
        return Err(outside(domain, b));
    }
    match *domain {
        PlaneDomain::Round(d) => {
            let (ha, hb) = (d.horo_radius(a), d.horo_radius(b));
            Ok(2.0 * ((a - b).norm() / (2.0 * (ha * hb).sqrt())).asinh())
        }
        PlaneDomain::SlitPlane => {
            let (za, zb) = (koebe_inverse(a).0, koebe_inverse(b).0);
            let q = ((za - zb) / (C64::new(1.0, 0.0) - za.conj() * zb)).norm();
            Ok(2.0 * q.atanh())
        }
        _ => Err(Error::Unsupported(format!("no closed-form distance on the {}", domain.name()))),
    }
}

/// Length of the core geodesic `|z| = 1` of `{1/r < |z| < r}`.
pub fn annulus_core_length(r: f64) -> f64 {
    PI * PI / r.ln()
}

/// Injectivity radius; `∞` on simply connected domains.
pub fn injectivity_radius(domain: &PlaneDomain, z: C64) -> Result<f64> {
    if !domain.contains(z) {
        return Err(outside(domain, z));
    }
    match *domain {
        PlaneDomain::Annulus { r } => {
            let half = 0.5 * annulus_core_length(r);
            let cosh_d = 1.0 / (PI * z.norm().ln() / (2.0 * r.ln())).cos();
            Ok((half.sinh() * cosh_d).asinh())
        }
        _ => Ok(f64::INFINITY),
    }
}

/// Disk family used by the projective-metric search: the boundary point
/// nearest to `w` is `w + δe^{iθ}` and the curvature is `s/δ`, so `s = 0`
/// is a half-plane and `s = 1` the disk centered at `w`.
fn family_disk(w: C64, theta: f64, delta: f64, s: f64) -> RoundDisk {
    let u = C64::from_polar(1.0, theta);
    if s <= 1e-12 {
        RoundDisk::HalfPlane { point: w + delta * u, direction: C64::i() * u }
    } else {
        let radius = delta / s;
        RoundDisk::Circle { center: w + (delta - radius) * u, radius, interior: true }
    }
}

/// Whether the closed round disk lies in the closure of the domain.
pub fn round_disk_inside(domain: &PlaneDomain, d: &RoundDisk) -> bool {
    let tol = 1e-15;
    match (*domain, *d) {
        (PlaneDomain::Plane, _) => true,
        (PlaneDomain::Round(outer), inner) => round_in_round(&outer, &inner, tol),
        (PlaneDomain::Strip, RoundDisk::Circle { center, radius, interior: true }) => {
            center.im.abs() + radius <= FRAC_PI_2 + tol
        }
        (PlaneDomain::Annulus { r }, RoundDisk::Circle { center, radius, interior: true }) => {
            center.norm() + radius <= r + tol && center.norm() - radius >= 1.0 / r - tol
        }
        (PlaneDomain::SlitPlane, RoundDisk::Circle { center, radius, interior: true }) => {
            slit_distance(center) >= radius - tol
        }
        (PlaneDomain::SlitPlane, RoundDisk::HalfPlane { point, direction }) => {
            // Outward normal is −i·direction; the ray −1/4 − t must stay outside.
            let n = -C64::i() * direction;
            n.re <= tol && ((C64::new(SLIT_TIP, 0.0) - point) * n.conj()).re >= -tol
        }
        (PlaneDomain::TwoDiskUnion { a }, RoundDisk::Circle { center, radius, interior: true }) => {
            two_disk_contains(a, center, radius, tol)
        }
        _ => false,
    }
}

fn round_in_round(outer: &RoundDisk, inner: &RoundDisk, tol: f64) -> bool {
    match (*outer, *inner) {
        (
            RoundDisk::Circle { center: c0, radius: r0, interior: true },
            RoundDisk::Circle { center, radius, interior: true },
        ) => (center - c0).norm() + radius <= r0 + tol,
        (
            RoundDisk::Circle { center: c0, radius: r0, interior: false },
            RoundDisk::Circle { center, radius, interior: true },
        ) => (center - c0).norm() >= radius + r0 - tol,
        (RoundDisk::HalfPlane { point, direction }, RoundDisk::Circle { center, radius, interior: true }) => {
            ((center - point) * direction.conj()).im >= radius - tol
        }
        (RoundDisk::HalfPlane { point: p0, direction: u0 }, RoundDisk::HalfPlane { point, direction }) => {
            (direction - u0).norm() <= 1e-9 && ((point - p0) * u0.conj()).im >= -tol
        }
        (RoundDisk::Circle { center: c0, radius: r0, interior: false }, RoundDisk::HalfPlane { point, direction }) => {
            -((c0 - point) * direction.conj()).im >= r0 - tol
        }
        _ => false,
    }
}

/// Open arc `(ψ − h, ψ + h)` of the circle `|z − c| = ρ` lying outside the
/// unit disk at `q`; `None` when empty, `h = π` when the whole circle.
fn arc_outside_unit(c: C64, rho: f64, q: f64, tol: f64) -> Option<(f64, f64)> {
    let v = c - q;
    let d = v.norm();
    if d <= 1e-15 {
        return if rho <= 1.0 + tol { None } else { Some((0.0, PI)) };
    }
    let cosine = (1.0 - d * d - rho * rho) / (2.0 * rho * d);
    if cosine >= 1.0 - tol {
        None
    } else if cosine <= -1.0 {
        Some((v.arg(), PI))
    } else {
        Some((v.arg(), cosine.acos()))
    }
}

/// Exact test of `disk(c, ρ) ⊆ disk(−a,1) ∪ disk(a,1)`: the boundary arcs
/// outside each disk must be disjoint.
fn two_disk_contains(a: f64, c: C64, rho: f64, tol: f64) -> bool {
    match (arc_outside_unit(c, rho, -a, tol), arc_outside_unit(c, rho, a, tol)) {
        (None, _) | (_, None) => true,
        (Some((p1, h1)), Some((p2, h2))) => {
            let mut gap = (p1 - p2).rem_euclid(2.0 * PI);
            if gap > PI {
                gap = 2.0 * PI - gap;
            }
            gap >= h1 + h2 - tol
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ThurstonOptions {
    pub starts: usize,
    pub max_iter: usize,
    pub x_tol: f64,
}

impl Default for ThurstonOptions {
    fn default() -> Self {
        ThurstonOptions { starts: 16, max_iter: 1500, x_tol: 1e-12 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ThurstonValue {
    pub density: f64,
    pub witness: RoundDisk,
}

/// Largest `δ` with the family disk inside the domain.
fn delta_max(domain: &PlaneDomain, w: C64, theta: f64, s: f64, cap: f64) -> f64 {
    if round_disk_inside(domain, &family_disk(w, theta, cap, s)) {
        return cap;
    }
    let (mut lo, mut hi) = (0.0, cap);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if round_disk_inside(domain, &family_disk(w, theta, mid, s)) {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * cap {
            break;
        }
    }
    lo
}

const S_MIN: f64 = 1e-8;

/// Projective metric of a simply connected domain at `w`: the infimum of
/// `ρ_D(w)` over round disks `D` in the domain containing `w`, with the
/// minimizing disk.
pub fn thurston_metric(domain: &PlaneDomain, w: C64, opts: &ThurstonOptions) -> Result<ThurstonValue> {
    if !domain.contains(w) {
        return Err(outside(domain, w));
    }
    if !domain.simply_connected() || matches!(domain, PlaneDomain::Plane) {
        return Err(Error::Unsupported(format!("projective metric on the {}", domain.name())));
    }
    if let PlaneDomain::Round(d) = *domain {
        // The domain is its own largest round disk.
        return Ok(ThurstonValue { density: 1.0 / d.horo_radius(w), witness: d });
    }
    let cap = domain.boundary_distance(w);
    if !(cap > 0.0 && cap.is_finite()) {
        return Err(outside(domain, w));
    }
    // Variables (θ, v) with s = sin² v, kept off zero: circles of radius
    // beyond ~δ/S_MIN lose too many digits in the containment test, and
    // half-planes are tried separately below.
    let s_of = |v: f64| S_MIN + (1.0 - S_MIN) * v.sin().powi(2);
    let value = |x: &[f64]| -> f64 {
        let s = s_of(x[1]);
        let d = delta_max(domain, w, x[0], s, cap);
        if d <= 0.0 {
            return f64::INFINITY;
        }
        2.0 / (d * (2.0 - s))
    };
    // δ_max is bisected to ~1e-15 relative, so f cannot settle tighter than that.
    let nm = NelderMeadOptions { max_iter: opts.max_iter, f_tol: 1e-13, x_tol: opts.x_tol };
    let theta0 = nearest_boundary_angle(domain, w);
    let mut best: Option<(f64, [f64; 2])> = None;
    let mut any_converged = false;
    for k in 0..opts.starts {
        let theta = theta0 + 2.0 * PI * (k / 2) as f64 / (opts.starts / 2).max(1) as f64;
        let v = if k % 2 == 0 { 0.45 * PI } else { 0.2 * PI };
        let mut r = nelder_mead(value, &[theta, v], &[0.3, 0.2], &nm);
        // Restart once from the result to escape simplex collapse.
        let r2 = nelder_mead(value, &r.x, &[0.01, 0.01], &nm);
        if r2.f <= r.f {
            r = r2;
        }
        any_converged |= r.converged;
        let cand = (r.f, [r.x[0], r.x[1]]);
        best = match best {
            None => Some(cand),
            Some(b) => {
                let better = cand.0 < b.0 - 1e-14 * b.0
                    || ((cand.0 - b.0).abs() <= 1e-14 * b.0 && s_of(cand.1[1]) > s_of(b.1[1]));
                Some(if better { cand } else { b })
            }
        };
    }
    let (density, x) = best.expect("at least one start");
    if !density.is_finite() || !any_converged {
        return Err(Error::NonConvergence { what: format!("projective metric at {w}"), best: density });
    }
    let s = s_of(x[1]);
    if s < 1e-3 {
        // A nearly flat circle may stand in for a half-plane; try the exact
        // half-plane near the same angle.
        let (theta, d) = golden_section_max(|th| delta_max(domain, w, th, 0.0, cap), x[0] - 1e-2, x[0] + 1e-2, 1e-15);
        if d > 0.0 && 1.0 / d <= density * (1.0 + 1e-9) {
            return Ok(ThurstonValue { density: 1.0 / d, witness: family_disk(w, theta, d, 0.0) });
        }
    }
    let witness = family_disk(w, x[0], delta_max(domain, w, x[0], s, cap), s);
    Ok(ThurstonValue { density, witness })
}

fn nearest_boundary_angle(domain: &PlaneDomain, w: C64) -> f64 {
    let d = domain.boundary_distance(w);
    // Probe a ring just beyond the boundary distance for the first exit.
    let mut best = (f64::INFINITY, 0.0);
    for j in 0..64 {
        let th = 2.0 * PI * j as f64 / 64.0;
        let mut r = d;
        while domain.contains(w + C64::from_polar(r, th)) && r < 4.0 * d + 1.0 {
            r *= 1.05;
        }
        if r < best.0 {
            best = (r, th);
        }
    }
    best.1
}

/// Pullback `ρ_f(z) = ρ_proj(f(z))·|f′(z)|` for univalent catalog maps.
pub fn thurston_pullback(f: &MapCatalogEntry, z: C64) -> Result<f64> {
    if !f.univalent() || !f.on_disk() {
        return Err(Error::Unsupported(format!("{} is not a univalent map on the disk", f.name)));
    }
    let image = f
        .image_domain()
        .ok_or_else(|| Error::Unsupported(format!("image of {} is not in the domain catalog", f.name)))?;
    let jet = f.jet(z)?;
    Ok(thurston_metric(&image, jet.f, &ThurstonOptions::default())?.density * jet.d1.norm())
}

/// Sample points of the hyperbolic ball `B(z0, r)` in Δ.
pub fn hyperbolic_ball_samples(z0: C64, r: f64, radial: usize, angular: usize) -> Result<Vec<C64>> {
    let gamma = MobiusMap::disk_automorphism(-z0, 0.0)?.inverse();
    let mut out = vec![z0];
    for i in 1..=radial {
        let rad = (0.5 * r * i as f64 / radial as f64).tanh();
        for j in 0..angular {
            let p = C64::from_polar(rad, 2.0 * PI * j as f64 / angular as f64);
            out.push(gamma.apply_finite(p).expect_finite("ball sample")?);
        }
    }
    Ok(out)
}

/// `√(1+2K)·coth(r/2)` with `K` the sampled sup of `‖Sf‖` on `B(z0, r)`,
/// an upper bound for `ρ_f(z0)/ρ_Δ(z0)`.
pub fn local_anderson_factor(f: &MapCatalogEntry, z0: C64, r: f64) -> Result<f64> {
    let disk = PlaneDomain::disk();
    let mut k: f64 = 0.0;
    for p in hyperbolic_ball_samples(z0, r, 24, 48)? {
        let s = f.schwarzian(p)?;
        k = k.max(s.norm() / hyperbolic_metric(&disk, p)?.powi(2));
    }
    Ok((1.0 + 2.0 * k).sqrt() / (0.5 * r).tanh())
}
