//! Upper half-space model of H³.
//!
//! Points are `(ξ, t)` with `ξ ∈ ℂ` and height `t > 0`. Tangent directions
//! are stored as Euclidean unit vectors; the corresponding hyperbolic unit
//! vector has Euclidean components `t · direction`.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::sphere::{ExtendedComplexPoint, MobiusMap, RoundDisk};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct H3Point {
    pub xi: C64,
    pub t: f64,
}

impl H3Point {
    pub fn new(xi: C64, t: f64) -> Result<Self> {
        if t > 0.0 && t.is_finite() && xi.is_finite() {
            Ok(H3Point { xi, t })
        } else {
            Err(Error::Domain(format!("H3 point needs t > 0, got ({xi}, {t})")))
        }
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.xi.re, self.xi.im, self.t]
    }
}

/// Standard half-space distance, `cosh d = 1 + |x - y|²/(2 t t')`.
pub fn hyperbolic_distance(x: &H3Point, y: &H3Point) -> f64 {
    let chord2 = (x.xi - y.xi).norm_sqr() + (x.t - y.t).powi(2);
    2.0 * (chord2.sqrt() / (2.0 * (x.t * y.t).sqrt())).asinh()
}

/// Visual metric of `x` at a finite boundary point: `2t/(t² + |z - ξ|²)`.
pub fn visual_metric(x: &H3Point, z: ExtendedComplexPoint) -> Result<f64> {
    let z = z.expect_finite("visual_metric")?;
    Ok(visual_density(x, z))
}

pub(crate) fn visual_density(x: &H3Point, z: C64) -> f64 {
    2.0 * x.t / (x.t * x.t + (z - x.xi).norm_sqr())
}

/// Poincaré extension of a Möbius map to H³.
pub fn mobius_act(m: &MobiusMap, x: &H3Point) -> H3Point {
    let cz_d = m.c * x.xi + m.d;
    let den = cz_d.norm_sqr() + m.c.norm_sqr() * x.t * x.t;
    let xi = ((m.a * x.xi + m.b) * cz_d.conj() + m.a * m.c.conj() * x.t * x.t) / den;
    H3Point { xi, t: x.t / den }
}

/// The horosphere `{x : ρ_x(base) = ρ}`. For a finite base it is the
/// Euclidean sphere tangent to ℂ at `base` with radius `euclidean_radius`;
/// for `base = ∞` it is the horizontal plane at height `euclidean_radius`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Horosphere {
    pub base: ExtendedComplexPoint,
    pub euclidean_radius: f64,
}

impl Horosphere {
    /// Euclidean center for a finite base.
    pub fn center(&self) -> Option<[f64; 3]> {
        self.base.finite().map(|b| [b.re, b.im, self.euclidean_radius])
    }

    /// Top point of a finite-based horosphere.
    pub fn top(&self) -> Option<H3Point> {
        self.base.finite().map(|b| H3Point { xi: b, t: 2.0 * self.euclidean_radius })
    }

    /// Relative residual of the defining equation at `x`.
    pub fn residual(&self, x: &H3Point) -> f64 {
        match self.base {
            ExtendedComplexPoint::Finite(b) => {
                let rho = 1.0 / self.euclidean_radius;
                (visual_density(x, b) - rho).abs() / rho
            }
            ExtendedComplexPoint::Infinity => (x.t - self.euclidean_radius).abs() / self.euclidean_radius,
        }
    }
}

/// Horosphere based at `z` on which the visual metric at `z` equals `rho`.
///
/// At `z = ∞` the density is read in the chart `w = -1/z`, where the visual
/// metric of `(ξ, t)` at `w = 0` is `2t`; the horosphere is the plane at
/// height `rho/2`.
pub fn horosphere_from(z: ExtendedComplexPoint, rho: f64) -> Result<Horosphere> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::Domain(format!("horosphere density must be positive, got {rho}")));
    }
    let euclidean_radius = match z {
        ExtendedComplexPoint::Finite(_) => 1.0 / rho,
        ExtendedComplexPoint::Infinity => rho / 2.0,
    };
    Ok(Horosphere { base: z, euclidean_radius })
}

/// Totally geodesic plane spanning a round circle; the associated disk
/// selects one of its two sides.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicPlane {
    pub boundary: RoundDisk,
}

impl GeodesicPlane {
    pub fn new(boundary: RoundDisk) -> Self {
        GeodesicPlane { boundary }
    }

    /// `sinh` of the signed hyperbolic distance from `x` to the plane,
    /// positive on the side facing the disk.
    pub fn side_value(&self, x: &H3Point) -> f64 {
        match self.boundary {
            RoundDisk::Circle { center, radius, interior } => {
                let v = (radius * radius - (x.xi - center).norm_sqr() - x.t * x.t) / (2.0 * radius * x.t);
                if interior {
                    v
                } else {
                    -v
                }
            }
            RoundDisk::HalfPlane { point, direction } => ((x.xi - point) * direction.conj()).im / x.t,
        }
    }

    pub fn signed_distance(&self, x: &H3Point) -> f64 {
        self.side_value(x).asinh()
    }

    /// Nearest-point projection of a boundary point `z` of the disk onto the
    /// plane: the tangency point of the horosphere at `z` with density
    /// `ρ_D(z)`.
    pub fn project(&self, z: ExtendedComplexPoint) -> Result<H3Point> {
        let z = z.expect_finite("project_to_plane")?;
        let h = self.boundary.horo_radius(z);
        if !(h > 0.0) {
            return Err(Error::Domain(format!("{z} is not inside the disk bounded by the plane")));
        }
        match self.boundary {
            RoundDisk::Circle { center, radius, .. } => {
                let v = z - center;
                let len = (v.norm_sqr() + h * h).sqrt();
                H3Point::new(center + v * (radius / len), h * radius / len)
            }
            RoundDisk::HalfPlane { direction, .. } => H3Point::new(z - C64::i() * direction * h, h),
        }
    }
}

/// Nearest point projection onto a geodesic plane (free-function form).
pub fn project_to_plane(p: &GeodesicPlane, z: ExtendedComplexPoint) -> Result<H3Point> {
    p.project(z)
}

/// A complete geodesic, given by its two endpoints on Ĉ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Geodesic {
    pub start: ExtendedComplexPoint,
    pub end: ExtendedComplexPoint,
}

impl Geodesic {
    pub fn new(start: ExtendedComplexPoint, end: ExtendedComplexPoint) -> Result<Self> {
        if start == end {
            return Err(Error::InvalidParameter("geodesic endpoints coincide".into()));
        }
        Ok(Geodesic { start, end })
    }

    /// Isometry taking the geodesic to the vertical axis over 0, `start ↦ 0`.
    pub fn normalizing_map(&self) -> MobiusMap {
        MobiusMap::sending_to_zero_infinity(self.start, self.end).expect("distinct endpoints")
    }

    /// Point at signed arc length `s` from the foot of the normalization.
    pub fn point_at(&self, s: f64) -> H3Point {
        let m = self.normalizing_map().inverse();
        mobius_act(&m, &H3Point { xi: C64::new(0.0, 0.0), t: s.exp() })
    }

    /// Fermi data of `x` relative to the geodesic: (axial position,
    /// distance to the geodesic, angle around it).
    pub fn fermi(&self, x: &H3Point) -> (f64, f64, f64) {
        let y = mobius_act(&self.normalizing_map(), x);
        let s = 0.5 * (y.xi.norm_sqr() + y.t * y.t).ln();
        let u = (y.xi.norm() / y.t).asinh();
        (s, u, y.xi.arg())
    }

    /// Point of the geodesic where the horosphere family at `z` first
    /// touches it; maximizes the visual metric at `z` along the geodesic.
    pub fn nearest_to_boundary(&self, z: C64) -> Result<H3Point> {
        let m = self.normalizing_map();
        let w = m
            .apply_finite(z)
            .finite()
            .ok_or_else(|| Error::Domain("boundary point is an endpoint of the geodesic".into()))?;
        if w.norm() == 0.0 {
            return Err(Error::Domain("boundary point is an endpoint of the geodesic".into()));
        }
        Ok(mobius_act(&m.inverse(), &H3Point { xi: C64::new(0.0, 0.0), t: w.norm() }))
    }

    /// Distance from `x` to the geodesic.
    pub fn distance(&self, x: &H3Point) -> f64 {
        self.fermi(x).1
    }
}

/// Unit tangent vector; `direction` is Euclidean-unit in the chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitTangent {
    pub base: H3Point,
    pub direction: [f64; 3],
}

impl UnitTangent {
    pub fn new(base: H3Point, direction: [f64; 3]) -> Result<Self> {
        let n = (direction[0].powi(2) + direction[1].powi(2) + direction[2].powi(2)).sqrt();
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::InvalidParameter("tangent direction must be nonzero".into()));
        }
        Ok(UnitTangent { base, direction: [direction[0] / n, direction[1] / n, direction[2] / n] })
    }

    /// Euclidean components of the hyperbolic unit vector (length `t`).
    pub fn hyperbolic_components(&self) -> [f64; 3] {
        let t = self.base.t;
        [t * self.direction[0], t * self.direction[1], t * self.direction[2]]
    }

    /// Boundary point reached as the flow time tends to +∞.
    pub fn forward_endpoint(&self) -> ExtendedComplexPoint {
        let beta = self.direction[2];
        if 1.0 - beta <= 1e-15 {
            return ExtendedComplexPoint::Infinity;
        }
        let uh = C64::new(self.direction[0], self.direction[1]);
        ExtendedComplexPoint::Finite(self.base.xi + uh * (self.base.t / (1.0 - beta)))
    }
}

/// Geodesic flow for time `s`.
///
/// With `d = (u_h, β)` the Euclidean unit direction and
/// `D = cosh s − β sinh s`, the flowed vector is
/// `ξ' = ξ + u_h t sinh s / D`, `t' = t/D`, `u_h' = u_h/D`,
/// `β' = (β cosh s − sinh s)/D`.
pub fn geodesic_flow(v: &UnitTangent, s: f64) -> UnitTangent {
    let (ch, sh) = (s.cosh(), s.sinh());
    let beta = v.direction[2];
    let uh = C64::new(v.direction[0], v.direction[1]);
    let den = ch - beta * sh;
    let t = v.base.t;
    let xi = v.base.xi + uh * (t * sh / den);
    let uh2 = uh / den;
    let beta2 = (beta * ch - sh) / den;
    UnitTangent { base: H3Point { xi, t: t / den }, direction: [uh2.re, uh2.im, beta2] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::golden_section_max;
    use crate::sphere::round_disk_metric;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pt(re: f64, im: f64, t: f64) -> H3Point {
        H3Point::new(c(re, im), t).unwrap()
    }

    /// Visual metric by construction: the plane through `x` orthogonal to the
    /// ray toward `z`, its disk containing `z`, and that disk's density.
    fn visual_metric_recipe(x: &H3Point, z: C64) -> f64 {
        let v = z - x.xi;
        if v.norm() < 1e-14 {
            // Vertical ray: orthogonal plane is the hemisphere of radius t.
            let d = RoundDisk::disk(x.xi, x.t).unwrap();
            return round_disk_metric(&d, z.into()).unwrap();
        }
        let e = v / v.norm();
        // The geodesic through x and z lies in the vertical plane spanned by
        // e. In (offset along e, height) coordinates it is the circle through
        // (0, t) and (a, 0) centered at (c0, 0), c0 = (a^2 - t^2)/(2a).
        let a = v.norm();
        let c0 = (a * a - x.t * x.t) / (2.0 * a);
        // Tangent at (0, t) is perpendicular to (0 - c0, t).
        let (rx, ry) = (-c0, x.t);
        let (tx, ty) = (ry, -rx); // rotate radius by -90°
        let plane = if ty.abs() < 1e-14 * (tx.abs() + 1.0) {
            // Horizontal tangent: orthogonal plane is vertical through x.
            RoundDisk::half_plane(x.xi, C64::i() * e).unwrap()
        } else {
            // Line from (0, t) along the tangent meets height 0 at q.
            let q = -x.t * tx / ty;
            let center = x.xi + e * q;
            let r = (q * q + x.t * x.t).sqrt();
            RoundDisk::disk(center, r).unwrap()
        };
        let disk = if plane.horo_radius(z) > 0.0 {
            plane
        } else {
            match plane {
                RoundDisk::Circle { center, radius, .. } => RoundDisk::exterior(center, radius).unwrap(),
                RoundDisk::HalfPlane { point, direction } => RoundDisk::half_plane(point, -direction).unwrap(),
            }
        };
        round_disk_metric(&disk, z.into()).unwrap()
    }

    #[test]
    fn visual_metric_examples() {
        let z0 = ExtendedComplexPoint::Finite(c(0.0, 0.0));
        assert_eq!(visual_metric(&pt(0.0, 0.0, 1.0), z0).unwrap(), 2.0);
        assert_eq!(visual_metric(&pt(0.0, 0.0, 2.0), z0).unwrap(), 1.0);
        assert_eq!(visual_metric(&pt(0.0, 0.0, 1.0), c(1.0, 0.0).into()).unwrap(), 1.0);
        assert!((visual_metric_recipe(&pt(0.0, 0.0, 1.0), c(1.0, 0.0)) - 1.0).abs() < 1e-14);
        assert!(visual_metric(&pt(0.0, 0.0, 1.0), ExtendedComplexPoint::Infinity).is_err());
    }

    #[test]
    fn closed_form_matches_recipe_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let x = pt(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(0.05..3.0));
            let z = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let a = visual_density(&x, z);
            let b = visual_metric_recipe(&x, z);
            assert!((a - b).abs() <= 1e-9 * a, "x={x:?} z={z} closed={a} recipe={b}");
        }
    }

    #[test]
    fn horosphere_examples() {
        let h = horosphere_from(c(0.0, 0.0).into(), 2.0).unwrap();
        assert_eq!(h.euclidean_radius, 0.5);
        assert_eq!(h.top().unwrap(), pt(0.0, 0.0, 1.0));
        assert_eq!(horosphere_from(c(0.0, 0.0).into(), 1.0).unwrap().euclidean_radius, 1.0);
        let h = horosphere_from(c(1.0, 1.0).into(), 4.0).unwrap();
        assert_eq!(h.euclidean_radius, 0.25);
        assert_eq!(h.base, ExtendedComplexPoint::Finite(c(1.0, 1.0)));
        assert!(horosphere_from(c(0.0, 0.0).into(), 0.0).is_err());
        assert!(horosphere_from(c(0.0, 0.0).into(), -1.0).is_err());
        // Base at infinity: chart density 2t.
        let hinf = horosphere_from(ExtendedComplexPoint::Infinity, 3.0).unwrap();
        assert_eq!(hinf.euclidean_radius, 1.5);
        let inv = MobiusMap::new(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let x = pt(0.3, -0.2, 1.5);
        let y = mobius_act(&inv, &x);
        assert!((visual_density(&y, c(0.0, 0.0)) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn horosphere_tangent_to_plane_at_projection() {
        // The horosphere at z with density ρ_D(z) meets the plane exactly at
        // the projection; other plane points have smaller visual density.
        let plane = GeodesicPlane::new(RoundDisk::unit());
        let z = c(0.3, -0.4);
        let x = plane.project(z.into()).unwrap();
        let rho = round_disk_metric(&RoundDisk::unit(), z.into()).unwrap();
        let h = horosphere_from(z.into(), rho).unwrap();
        assert!(h.residual(&x) < 1e-12);
        assert!(plane.side_value(&x).abs() < 1e-12);
        for k in 0..50 {
            let th = k as f64 * 0.13;
            let ph = 0.05 + 1.5 * (k as f64 / 50.0);
            let y = pt(ph.cos() * th.cos(), ph.cos() * th.sin(), ph.sin());
            assert!(visual_density(&y, z) <= rho * (1.0 + 1e-12));
        }
    }

    #[test]
    fn projection_examples() {
        let plane = GeodesicPlane::new(RoundDisk::unit());
        assert_eq!(plane.project(c(0.0, 0.0).into()).unwrap(), pt(0.0, 0.0, 1.0));

        // z = 1/2: maximize the visual density at z over the unit semicircle.
        let x = plane.project(c(0.5, 0.0).into()).unwrap();
        let f = |th: f64| visual_density(&pt(th.cos(), 0.0, th.sin()), c(0.5, 0.0));
        let (th, _) = golden_section_max(f, 1e-6, std::f64::consts::PI - 1e-6, 1e-13);
        let oracle = pt(th.cos(), 0.0, th.sin());
        assert!(hyperbolic_distance(&x, &oracle) < 1e-6, "{x:?} vs {oracle:?}");
        assert!((x.xi.re - 0.8).abs() < 1e-12 && (x.t - 0.6).abs() < 1e-12);

        let vertical = GeodesicPlane::new(RoundDisk::upper_half_plane());
        let x = vertical.project(c(0.0, 1.0).into()).unwrap();
        assert!((x.xi - c(0.0, 0.0)).norm() < 1e-15 && (x.t - 1.0).abs() < 1e-15);

        assert!(plane.project(c(1.0, 0.0).into()).is_err());
        assert!(plane.project(c(2.0, 0.0).into()).is_err());
    }

    #[test]
    fn exterior_disk_projection() {
        let plane = GeodesicPlane::new(RoundDisk::exterior(c(0.0, 0.0), 1.0).unwrap());
        let x = plane.project(c(2.0, 0.0).into()).unwrap();
        assert!(plane.side_value(&x).abs() < 1e-12);
        let rho = 2.0 / 3.0; // 2r/(|z|^2 - r^2)
        assert!((visual_density(&x, c(2.0, 0.0)) - rho).abs() < 1e-12);
    }

    #[test]
    fn distance_examples() {
        assert!((hyperbolic_distance(&pt(0.0, 0.0, 1.0), &pt(0.0, 0.0, std::f64::consts::E)) - 1.0).abs() < 1e-15);
        assert_eq!(hyperbolic_distance(&pt(0.3, 0.1, 2.0), &pt(0.3, 0.1, 2.0)), 0.0);
        let d = hyperbolic_distance(&pt(0.0, 0.0, 1.0), &pt(1.0, 0.0, 1.0));
        assert!((d - 2.0 * 0.5f64.asinh()).abs() < 1e-15);
    }

    #[test]
    fn flow_examples() {
        let up = UnitTangent::new(pt(0.0, 0.0, 1.0), [0.0, 0.0, 1.0]).unwrap();
        let f = geodesic_flow(&up, 2f64.ln());
        assert!((f.base.t - 2.0).abs() < 1e-15 && f.base.xi.norm() < 1e-15);
        assert!((f.direction[2] - 1.0).abs() < 1e-15);
        let v = UnitTangent::new(pt(0.2, -0.1, 0.7), [0.3, -0.5, 0.2]).unwrap();
        assert_eq!(geodesic_flow(&v, 0.0), v);

        let h = UnitTangent::new(pt(0.0, 0.0, 1.0), [1.0, 0.0, 0.0]).unwrap();
        let far = geodesic_flow(&h, 40.0);
        assert!((far.base.xi - c(1.0, 0.0)).norm() < 1e-15 && far.base.t < 1e-15);
        assert_eq!(h.forward_endpoint(), ExtendedComplexPoint::Finite(c(1.0, 0.0)));
        // Stays on the unit semicircle, at unit speed.
        let mid = geodesic_flow(&h, 0.7);
        assert!((mid.base.xi.norm_sqr() + mid.base.t.powi(2) - 1.0).abs() < 1e-14);
        assert!((hyperbolic_distance(&mid.base, &h.base) - 0.7).abs() < 1e-13);
    }

    #[test]
    fn geodesic_nearest_point_and_fermi() {
        let g = Geodesic::new(c(-1.0, 0.0).into(), c(1.0, 0.0).into()).unwrap();
        let x = g.nearest_to_boundary(c(0.0, 0.0)).unwrap();
        // Symmetric point on the unit semicircle in the real vertical plane.
        assert!((x.xi.norm_sqr() + x.t * x.t - 1.0).abs() < 1e-13 && x.xi.im.abs() < 1e-14);
        assert!(x.xi.re.abs() < 1e-14 && (x.t - 1.0).abs() < 1e-14);
        assert!(g.distance(&x) < 1e-12);
        let gv = Geodesic::new(c(0.0, 0.0).into(), ExtendedComplexPoint::Infinity).unwrap();
        let (s, u, _) = gv.fermi(&pt(3.0, 0.0, 4.0));
        assert!((s - 5f64.ln()).abs() < 1e-14 && (u - 0.75f64.asinh()).abs() < 1e-14);
    }

    fn arb_unit() -> impl Strategy<Value = UnitTangent> {
        (-1.0..1.0f64, -1.0..1.0f64, 0.1..3.0f64, 0.0..std::f64::consts::TAU, -1.0..1.0f64).prop_map(
            |(x, y, t, ph, b)| {
                let a = (1.0 - b * b).sqrt();
                UnitTangent::new(H3Point { xi: C64::new(x, y), t }, [a * ph.cos(), a * ph.sin(), b]).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn flow_is_a_group(v in arb_unit(), s in -2.0..2.0f64, u in -2.0..2.0f64) {
            let a = geodesic_flow(&geodesic_flow(&v, u), s);
            let b = geodesic_flow(&v, s + u);
            prop_assert!(hyperbolic_distance(&a.base, &b.base) < 1e-9);
            for k in 0..3 {
                prop_assert!((a.direction[k] - b.direction[k]).abs() < 1e-9);
            }
        }

        #[test]
        fn flow_moves_at_unit_speed(v in arb_unit(), s in -3.0..3.0f64, a in -1.0..1.0f64) {
            let w = geodesic_flow(&v, a);
            let d = hyperbolic_distance(&geodesic_flow(&v, s).base, &geodesic_flow(&w, s).base);
            prop_assert!((d - a.abs()).abs() < 1e-9);
            let n = geodesic_flow(&v, s).direction;
            prop_assert!((n[0]*n[0] + n[1]*n[1] + n[2]*n[2] - 1.0).abs() < 1e-12);
        }

        #[test]
        fn visual_metric_is_equivariant(x in arb_unit(), zr in -2.0..2.0f64, zi in -2.0..2.0f64,
                                        a in -1.0..1.0f64, b in -1.0..1.0f64, cc in -1.0..1.0f64) {
            let m = MobiusMap::new(C64::new(1.0 + a, b), C64::new(cc, 0.3), C64::new(b, -a), C64::new(1.0, cc)).unwrap();
            let z = C64::new(zr, zi);
            if let ExtendedComplexPoint::Finite(w) = m.apply_finite(z) {
                let lhs = visual_density(&mobius_act(&m, &x.base), w) * m.derivative(z).norm();
                let rhs = visual_density(&x.base, z);
                prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs);
            }
        }

        #[test]
        fn mobius_act_is_isometric(x in arb_unit(), y in arb_unit(), a in -1.0..1.0f64, b in -1.0..1.0f64) {
            let m = MobiusMap::new(C64::new(1.0 + a, b), C64::new(0.2, a), C64::new(b, 0.5), C64::new(1.0, -b)).unwrap();
            let d0 = hyperbolic_distance(&x.base, &y.base);
            let d1 = hyperbolic_distance(&mobius_act(&m, &x.base), &mobius_act(&m, &y.base));
            prop_assert!((d0 - d1).abs() < 1e-8 * (1.0 + d0));
        }
    }
}
