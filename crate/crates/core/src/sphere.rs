//! The Riemann sphere: extended complex points, Möbius maps and round disks.
//!
//! Densities of conformal metrics are always reported in the affine chart
//! `z ∈ ℂ`; a density "at ∞" is chart dependent and is refused.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedComplexPoint {
    Finite(C64),
    Infinity,
}

impl ExtendedComplexPoint {
    pub fn finite(&self) -> Option<C64> {
        match *self {
            ExtendedComplexPoint::Finite(z) => Some(z),
            ExtendedComplexPoint::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedComplexPoint::Infinity)
    }

    /// Finite coordinate or a domain error naming `what`.
    pub fn expect_finite(&self, what: &str) -> Result<C64> {
        self.finite().ok_or_else(|| Error::Domain(format!("{what}: point at infinity has no affine density")))
    }
}

impl From<C64> for ExtendedComplexPoint {
    fn from(z: C64) -> Self {
        ExtendedComplexPoint::Finite(z)
    }
}

/// An element of PSL(2,ℂ), stored with `ad - bc = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusMap {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl MobiusMap {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let det = a * d - b * c;
        let scale = (a.norm() + b.norm() + c.norm() + d.norm()).max(f64::MIN_POSITIVE);
        if !det.is_finite() || det.norm() <= 1e-14 * scale * scale {
            return Err(Error::InvalidParameter(format!("degenerate Möbius map (ad - bc = {det})")));
        }
        let s = det.sqrt();
        Ok(MobiusMap { a: a / s, b: b / s, c: c / s, d: d / s })
    }

    pub fn identity() -> Self {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        MobiusMap { a: one, b: zero, c: zero, d: one }
    }

    pub fn translation(v: C64) -> Self {
        MobiusMap { b: v, ..Self::identity() }
    }

    /// `z ↦ (z - i)/(z + i)`, upper half-plane onto the unit disk.
    pub fn cayley() -> Self {
        let i = C64::i();
        Self::new(C64::new(1.0, 0.0), -i, C64::new(1.0, 0.0), i).expect("cayley is nondegenerate")
    }

    /// Disk automorphism `z ↦ e^{iθ}(z - p)/(1 - p̄ z)` with `|p| < 1`.
    pub fn disk_automorphism(p: C64, theta: f64) -> Result<Self> {
        if p.norm() >= 1.0 {
            return Err(Error::Domain(format!("disk automorphism needs |p| < 1, got {p}")));
        }
        let rot = C64::from_polar(1.0, theta);
        Self::new(rot, -rot * p, -p.conj(), C64::new(1.0, 0.0))
    }

    /// A map sending `p ↦ 0` and `q ↦ ∞`.
    pub fn sending_to_zero_infinity(p: ExtendedComplexPoint, q: ExtendedComplexPoint) -> Result<Self> {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        match (p, q) {
            (ExtendedComplexPoint::Finite(p), ExtendedComplexPoint::Finite(q)) => Self::new(one, -p, one, -q),
            (ExtendedComplexPoint::Finite(p), ExtendedComplexPoint::Infinity) => Self::new(one, -p, zero, one),
            (ExtendedComplexPoint::Infinity, ExtendedComplexPoint::Finite(q)) => Self::new(zero, one, one, -q),
            _ => Err(Error::InvalidParameter("endpoints coincide".into())),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn apply(&self, z: ExtendedComplexPoint) -> ExtendedComplexPoint {
        match z {
            ExtendedComplexPoint::Infinity => {
                if self.c == C64::new(0.0, 0.0) {
                    ExtendedComplexPoint::Infinity
                } else {
                    ExtendedComplexPoint::Finite(self.a / self.c)
                }
            }
            ExtendedComplexPoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den == C64::new(0.0, 0.0) {
                    ExtendedComplexPoint::Infinity
                } else {
                    ExtendedComplexPoint::Finite((self.a * z + self.b) / den)
                }
            }
        }
    }

    pub fn apply_finite(&self, z: C64) -> ExtendedComplexPoint {
        self.apply(ExtendedComplexPoint::Finite(z))
    }

    /// `m'(z) = 1/(cz + d)^2`.
    pub fn derivative(&self, z: C64) -> C64 {
        let den = self.c * z + self.d;
        1.0 / (den * den)
    }

    pub fn second_derivative(&self, z: C64) -> C64 {
        let den = self.c * z + self.d;
        -2.0 * self.c / (den * den * den)
    }

    pub fn third_derivative(&self, z: C64) -> C64 {
        let den = self.c * z + self.d;
        6.0 * self.c * self.c / (den * den * den * den)
    }

    /// Coefficient-wise comparison up to the overall sign ambiguity of PSL(2,ℂ).
    pub fn approx_eq(&self, other: &MobiusMap, tol: f64) -> bool {
        let diff = |s: f64| {
            [self.a - s * other.a, self.b - s * other.b, self.c - s * other.c, self.d - s * other.d]
                .iter()
                .map(|v| v.norm())
                .fold(0.0, f64::max)
        };
        diff(1.0) <= tol || diff(-1.0) <= tol
    }
}

/// A round disk in Ĉ: the inside or outside of a circle, or a half-plane
/// (a disk whose boundary passes through ∞).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RoundDisk {
    /// `interior == true` is `{|z - center| < radius}`, otherwise the
    /// exterior `{|z - center| > radius} ∪ {∞}`.
    Circle { center: C64, radius: f64, interior: bool },
    /// The half-plane to the left of the oriented line through `point`
    /// with unit `direction`: `{Im((z - point)·conj(direction)) > 0}`.
    HalfPlane { point: C64, direction: C64 },
}

impl RoundDisk {
    pub fn unit() -> Self {
        RoundDisk::Circle { center: C64::new(0.0, 0.0), radius: 1.0, interior: true }
    }

    pub fn disk(center: C64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!("disk radius must be positive, got {radius}")));
        }
        Ok(RoundDisk::Circle { center, radius, interior: true })
    }

    pub fn exterior(center: C64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!("disk radius must be positive, got {radius}")));
        }
        Ok(RoundDisk::Circle { center, radius, interior: false })
    }

    pub fn half_plane(point: C64, direction: C64) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::InvalidParameter("half-plane direction must be nonzero".into()));
        }
        Ok(RoundDisk::HalfPlane { point, direction: direction / n })
    }

    pub fn upper_half_plane() -> Self {
        RoundDisk::HalfPlane { point: C64::new(0.0, 0.0), direction: C64::new(1.0, 0.0) }
    }

    pub fn contains_infinity(&self) -> bool {
        matches!(self, RoundDisk::Circle { interior: false, .. })
    }

    /// Signed Euclidean radius of the horosphere at `z` tangent to the plane
    /// over the boundary circle; equals `1/ρ_D(z)` and is positive exactly
    /// inside the disk.
    pub fn horo_radius(&self, z: C64) -> f64 {
        match *self {
            RoundDisk::Circle { center, radius, interior } => {
                let gap = (radius * radius - (z - center).norm_sqr()) / (2.0 * radius);
                if interior {
                    gap
                } else {
                    -gap
                }
            }
            RoundDisk::HalfPlane { point, direction } => ((z - point) * direction.conj()).im,
        }
    }

    pub fn contains(&self, z: ExtendedComplexPoint) -> bool {
        match z {
            ExtendedComplexPoint::Infinity => self.contains_infinity(),
            ExtendedComplexPoint::Finite(z) => self.horo_radius(z) > 0.0,
        }
    }

    /// Point on the boundary circle at parameter `s` (angle for circles,
    /// signed arc length for lines).
    pub fn boundary_point(&self, s: f64) -> C64 {
        match *self {
            RoundDisk::Circle { center, radius, .. } => center + C64::from_polar(radius, s),
            RoundDisk::HalfPlane { point, direction } => point + direction * s,
        }
    }

    /// A few points strictly inside the disk, used to orient images.
    fn interior_samples(&self) -> Vec<ExtendedComplexPoint> {
        match *self {
            RoundDisk::Circle { center, radius, interior: true } => {
                vec![center.into(), (center + 0.5 * radius).into(), (center + C64::new(0.0, 0.5 * radius)).into()]
            }
            RoundDisk::Circle { center, radius, interior: false } => vec![
                ExtendedComplexPoint::Infinity,
                (center + 2.0 * radius).into(),
                (center + C64::new(0.0, 3.0 * radius)).into(),
            ],
            RoundDisk::HalfPlane { point, direction } => vec![
                (point + C64::i() * direction).into(),
                (point + (C64::i() * 2.0 + 1.0) * direction).into(),
                ExtendedComplexPoint::Finite(point + (C64::i() * 0.5 - 1.0) * direction),
            ],
        }
    }

    /// Comparison of representations with a tolerance on every parameter.
    pub fn approx_eq(&self, other: &RoundDisk, tol: f64) -> bool {
        match (*self, *other) {
            (
                RoundDisk::Circle { center: c1, radius: r1, interior: i1 },
                RoundDisk::Circle { center: c2, radius: r2, interior: i2 },
            ) => i1 == i2 && (c1 - c2).norm() <= tol * (1.0 + c1.norm()) && (r1 - r2).abs() <= tol * (1.0 + r1),
            (RoundDisk::HalfPlane { point: p1, direction: u1 }, RoundDisk::HalfPlane { point: p2, direction: u2 }) => {
                // Same oriented line: same direction and p2 on the line through p1.
                (u1 - u2).norm() <= tol && ((p2 - p1) * u1.conj()).im.abs() <= tol * (1.0 + p1.norm())
            }
            _ => false,
        }
    }
}

/// Density of the complete curvature −1 metric of the disk at `z`.
pub fn round_disk_metric(d: &RoundDisk, z: ExtendedComplexPoint) -> Result<f64> {
    let z = z.expect_finite("round_disk_metric")?;
    let h = d.horo_radius(z);
    if h > 0.0 {
        Ok(1.0 / h)
    } else {
        Err(Error::Domain(format!("{z} is not inside the disk")))
    }
}

/// Circle (or line) through three distinct points of Ĉ, returned as an
/// unoriented disk: interior/left side is arbitrary and fixed by the caller.
fn circle_through(p: [ExtendedComplexPoint; 3]) -> Result<RoundDisk> {
    let finite: Vec<C64> = p.iter().filter_map(|q| q.finite()).collect();
    if finite.len() == 2 {
        return RoundDisk::half_plane(finite[0], finite[1] - finite[0]);
    }
    if finite.len() < 2 {
        return Err(Error::InvalidParameter("three boundary points collapsed".into()));
    }
    let (w1, w2, w3) = (finite[0], finite[1], finite[2]);
    let u = w2 - w1;
    let v = w3 - w1;
    let cross = (v * u.conj()).im;
    let scale = u.norm().max(v.norm()).max((w3 - w2).norm());
    if cross.abs() <= 1e-13 * scale * scale {
        return RoundDisk::half_plane(w1, if u.norm() > 0.0 { u } else { v });
    }
    // Circumcenter relative to w1.
    let d = 2.0 * (u.re * v.im - u.im * v.re);
    let ux = (v.im * u.norm_sqr() - u.im * v.norm_sqr()) / d;
    let uy = (u.re * v.norm_sqr() - v.re * u.norm_sqr()) / d;
    let center = w1 + C64::new(ux, uy);
    Ok(RoundDisk::Circle { center, radius: (center - w1).norm(), interior: true })
}

/// Image of a round disk under a Möbius map, interior sent to interior.
pub fn disk_map(m: &MobiusMap, d: &RoundDisk) -> Result<RoundDisk> {
    let bp = match *d {
        RoundDisk::Circle { center, radius, .. } => [
            m.apply_finite(center + radius),
            m.apply_finite(center + C64::new(0.0, radius)),
            m.apply_finite(center - radius),
        ],
        RoundDisk::HalfPlane { point, direction } => {
            [m.apply_finite(point), m.apply_finite(point + direction), m.apply(ExtendedComplexPoint::Infinity)]
        }
    };
    let image = circle_through(bp)?;
    // Pick the interior sample whose image is farthest from the new boundary.
    let mut best: Option<(f64, bool)> = None;
    for q in d.interior_samples() {
        let mq = m.apply(q);
        let (score, inside) = match (image, mq) {
            (RoundDisk::Circle { .. }, ExtendedComplexPoint::Infinity) => (f64::INFINITY, false),
            (RoundDisk::HalfPlane { .. }, ExtendedComplexPoint::Infinity) => continue,
            (img, ExtendedComplexPoint::Finite(w)) => {
                let h = img.horo_radius(w);
                (h.abs(), h > 0.0)
            }
        };
        if best.is_none_or(|(s, _)| score > s) {
            best = Some((score, inside));
        }
    }
    let (_, inside) = best.ok_or_else(|| Error::InvalidParameter("could not orient image disk".into()))?;
    Ok(match image {
        RoundDisk::Circle { center, radius, .. } => RoundDisk::Circle { center, radius, interior: inside },
        RoundDisk::HalfPlane { point, direction } => {
            if inside {
                RoundDisk::HalfPlane { point, direction }
            } else {
                RoundDisk::HalfPlane { point, direction: -direction }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn apply_conventions() {
        let id = MobiusMap::identity();
        assert_eq!(id.apply_finite(c(3.0, 4.0)), ExtendedComplexPoint::Finite(c(3.0, 4.0)));
        let inv = MobiusMap::new(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(inv.apply_finite(c(0.0, 0.0)), ExtendedComplexPoint::Infinity);
        let w = MobiusMap::cayley().apply_finite(c(0.0, 0.0)).finite().unwrap();
        assert!((w - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn degenerate_map_rejected() {
        assert!(MobiusMap::new(c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)).is_err());
    }

    #[test]
    fn disk_map_examples() {
        let unit = RoundDisk::unit();
        assert!(disk_map(&MobiusMap::identity(), &unit).unwrap().approx_eq(&unit, 1e-12));

        let inv = MobiusMap::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let img = disk_map(&inv, &unit).unwrap();
        assert!(img.approx_eq(&RoundDisk::exterior(c(0.0, 0.0), 1.0).unwrap(), 1e-12), "{img:?}");
        assert!(img.contains_infinity());

        let d2 = RoundDisk::disk(c(0.0, 0.0), 2.0).unwrap();
        let img = disk_map(&MobiusMap::translation(c(1.0, 0.0)), &d2).unwrap();
        assert!(img.approx_eq(&RoundDisk::disk(c(1.0, 0.0), 2.0).unwrap(), 1e-12));
    }

    #[test]
    fn cayley_sends_upper_half_plane_to_unit_disk() {
        let img = disk_map(&MobiusMap::cayley(), &RoundDisk::upper_half_plane()).unwrap();
        assert!(img.approx_eq(&RoundDisk::unit(), 1e-12), "{img:?}");
    }

    #[test]
    fn round_disk_metric_examples() {
        let unit = RoundDisk::unit();
        assert_eq!(round_disk_metric(&unit, c(0.0, 0.0).into()).unwrap(), 2.0);
        let d2 = RoundDisk::disk(c(0.0, 0.0), 2.0).unwrap();
        assert_eq!(round_disk_metric(&d2, c(0.0, 0.0).into()).unwrap(), 1.0);
        // Upper half-plane at i: pull back 2/(1-|w|^2) by the Cayley map.
        let uhp = RoundDisk::upper_half_plane();
        let z = c(0.0, 1.0);
        let cay = MobiusMap::cayley();
        let w = cay.apply_finite(z).finite().unwrap();
        let pulled = 2.0 / (1.0 - w.norm_sqr()) * cay.derivative(z).norm();
        let direct = round_disk_metric(&uhp, z.into()).unwrap();
        assert!((direct - 1.0).abs() < 1e-15);
        assert!((pulled - direct).abs() < 1e-14);
        assert!(round_disk_metric(&unit, c(1.0, 0.0).into()).is_err());
        assert!(round_disk_metric(&unit, ExtendedComplexPoint::Infinity).is_err());
    }

    fn arb_c(scale: f64) -> impl Strategy<Value = C64> {
        (-scale..scale, -scale..scale).prop_map(|(x, y)| C64::new(x, y))
    }

    fn arb_map() -> impl Strategy<Value = MobiusMap> {
        (arb_c(2.0), arb_c(2.0), arb_c(2.0), arb_c(2.0)).prop_filter_map("nondegenerate", |(a, b, c, d)| {
            if (a * d - b * c).norm() < 0.2 {
                None
            } else {
                MobiusMap::new(a, b, c, d).ok()
            }
        })
    }

    fn arb_disk() -> impl Strategy<Value = RoundDisk> {
        prop_oneof![
            (arb_c(1.0), 0.2..2.0f64).prop_map(|(c, r)| RoundDisk::disk(c, r).unwrap()),
            (arb_c(1.0), 0.2..2.0f64).prop_map(|(c, r)| RoundDisk::exterior(c, r).unwrap()),
            (arb_c(1.0), 0.0..std::f64::consts::TAU).prop_map(|(p, t)| RoundDisk::half_plane(
                p,
                C64::from_polar(1.0, t)
            )
            .unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(m in arb_map()) {
            prop_assert!(m.inverse().compose(&m).approx_eq(&MobiusMap::identity(), 1e-12));
        }

        #[test]
        fn composition_is_associative(m1 in arb_map(), m2 in arb_map(), m3 in arb_map()) {
            let l = m1.compose(&m2).compose(&m3);
            let r = m1.compose(&m2.compose(&m3));
            prop_assert!(l.approx_eq(&r, 1e-9));
        }

        #[test]
        fn disk_metric_is_mobius_natural(m in arb_map(), d in arb_disk(), s in 0.05..0.95f64, ang in 0.0..std::f64::consts::TAU) {
            // A point inside d: pull a point of the unit disk through a chart.
            let z = match d {
                RoundDisk::Circle { center, radius, interior: true } => center + C64::from_polar(s * radius, ang),
                RoundDisk::Circle { center, radius, interior: false } => center + C64::from_polar(radius / s, ang),
                RoundDisk::HalfPlane { point, direction } => point + direction * C64::new(ang - 3.0, 3.0 * s),
            };
            let img = disk_map(&m, &d).unwrap();
            if let ExtendedComplexPoint::Finite(w) = m.apply_finite(z) {
                let lhs = round_disk_metric(&img, w.into()).unwrap() * m.derivative(z).norm();
                let rhs = round_disk_metric(&d, z.into()).unwrap();
                prop_assume!(lhs.is_finite() && w.norm() < 1e6);
                prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs, "lhs {} rhs {}", lhs, rhs);
            }
        }

        #[test]
        fn disk_map_composes(m1 in arb_map(), m2 in arb_map(), d in arb_disk()) {
            let a = disk_map(&m2, &disk_map(&m1, &d).unwrap()).unwrap();
            let b = disk_map(&m2.compose(&m1), &d).unwrap();
            // Compare through membership of a probe grid to avoid chart issues.
            for i in 0..6 {
                for j in 0..6 {
                    let q = C64::new(-2.5 + i as f64, -2.5 + j as f64);
                    let ha = a.horo_radius(q);
                    let hb = b.horo_radius(q);
                    if ha.abs() > 1e-6 && hb.abs() > 1e-6 {
                        prop_assert_eq!(ha > 0.0, hb > 0.0);
                        prop_assert!((ha - hb).abs() <= 1e-6 * (1.0 + ha.abs()));
                    }
                }
            }
        }
    }
}
