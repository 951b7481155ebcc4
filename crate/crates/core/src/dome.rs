//! Domes over a few plane domains with closed-form convex hulls: a round
//! disk, the union of two unit disks, and the Koebe slit plane.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::halfspace::{hyperbolic_distance, visual_density, Geodesic, GeodesicPlane, H3Point};
use crate::mesh::Mesh;
use crate::metrics::{domain_distance, hyperbolic_metric, thurston_metric, PlaneDomain, ThurstonOptions, SLIT_TIP};
use crate::sphere::{ExtendedComplexPoint, RoundDisk};

/// A face: part of a support plane cut out by the constraint planes
/// (points with `side_value ≤ 0` for every constraint).
#[derive(Clone, Debug, PartialEq)]
pub struct Face {
    pub plane: GeodesicPlane,
    pub constraints: Vec<GeodesicPlane>,
}

impl Face {
    fn admits(&self, x: &H3Point, tol: f64) -> bool {
        self.constraints.iter().all(|c| c.side_value(x) <= tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ridge {
    pub geodesic: Geodesic,
    /// Exterior dihedral (bending) angle in `(0, π]`.
    pub angle: f64,
    /// Indices of the two faces meeting along the ridge.
    pub faces: (usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FinitelyBentDome {
    pub domain: PlaneDomain,
    pub faces: Vec<Face>,
    pub ridges: Vec<Ridge>,
}

/// Piece of the dome a retracted point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomePart {
    Face(usize),
    Ridge(usize),
}

/// Euclidean unit normal of a plane at `x`, pointing away from the disk
/// side (out of the hull's complement).
fn plane_normal(p: &GeodesicPlane, x: &H3Point) -> [f64; 3] {
    match p.boundary {
        RoundDisk::Circle { center, radius, interior } => {
            let v = x.xi - center;
            let s = if interior { 1.0 } else { -1.0 };
            [s * v.re / radius, s * v.im / radius, s * x.t / radius]
        }
        RoundDisk::HalfPlane { direction, .. } => {
            let n = -C64::i() * direction;
            [n.re, n.im, 0.0]
        }
    }
}

/// Bending angle along a ridge from the face normals at a ridge point.
fn dihedral_angle(a: &GeodesicPlane, b: &GeodesicPlane, x: &H3Point) -> f64 {
    let (na, nb) = (plane_normal(a, x), plane_normal(b, x));
    let d: f64 = (0..3).map(|k| na[k] * nb[k]).sum();
    d.clamp(-1.0, 1.0).acos()
}

/// Dome of the domain: faces, ridges and bending angles.
pub fn build_dome(domain: &PlaneDomain) -> Result<FinitelyBentDome> {
    match *domain {
        PlaneDomain::Round(d) => Ok(FinitelyBentDome {
            domain: *domain,
            faces: vec![Face { plane: GeodesicPlane::new(d), constraints: vec![] }],
            ridges: vec![],
        }),
        PlaneDomain::TwoDiskUnion { a } => {
            let d1 = RoundDisk::disk(C64::new(-a, 0.0), 1.0)?;
            let d2 = RoundDisk::disk(C64::new(a, 0.0), 1.0)?;
            let (p1, p2) = (GeodesicPlane::new(d1), GeodesicPlane::new(d2));
            let b = (1.0 - a * a).sqrt();
            let geodesic = Geodesic::new(C64::new(0.0, b).into(), C64::new(0.0, -b).into())?;
            let top = H3Point::new(C64::new(0.0, 0.0), b)?;
            Ok(FinitelyBentDome {
                domain: *domain,
                faces: vec![Face { plane: p1, constraints: vec![p2] }, Face { plane: p2, constraints: vec![p1] }],
                ridges: vec![Ridge { geodesic, angle: dihedral_angle(&p1, &p2, &top), faces: (0, 1) }],
            })
        }
        PlaneDomain::SlitPlane => {
            let upper = GeodesicPlane::new(RoundDisk::half_plane(C64::new(0.0, 0.0), C64::new(1.0, 0.0))?);
            let lower = GeodesicPlane::new(RoundDisk::half_plane(C64::new(0.0, 0.0), C64::new(-1.0, 0.0))?);
            // Keep the half-plane Re ξ ≤ −1/4 of the vertical plane.
            let cut = GeodesicPlane::new(RoundDisk::half_plane(C64::new(SLIT_TIP, 0.0), C64::new(0.0, -1.0))?);
            let geodesic = Geodesic::new(C64::new(SLIT_TIP, 0.0).into(), ExtendedComplexPoint::Infinity)?;
            let x = H3Point::new(C64::new(SLIT_TIP, 0.0), 1.0)?;
            Ok(FinitelyBentDome {
                domain: *domain,
                faces: vec![
                    Face { plane: upper, constraints: vec![cut] },
                    Face { plane: lower, constraints: vec![cut] },
                ],
                ridges: vec![Ridge { geodesic, angle: dihedral_angle(&upper, &lower, &x), faces: (0, 1) }],
            })
        }
        _ => Err(Error::Unsupported(format!("dome of the {}", domain.name()))),
    }
}

/// Nearest point retraction: the first point of the hull met by the
/// horospheres at `z`, i.e. the dome point maximizing the visual metric
/// at `z`.
pub fn dome_retract(dome: &FinitelyBentDome, z: C64) -> Result<H3Point> {
    Ok(dome_retract_part(dome, z)?.0)
}

pub fn dome_retract_part(dome: &FinitelyBentDome, z: C64) -> Result<(H3Point, DomePart)> {
    if !dome.domain.contains(z) {
        return Err(Error::Domain(format!("{z} lies in the limit set")));
    }
    let mut best: Option<(f64, H3Point, DomePart)> = None;
    let mut consider = |x: H3Point, part: DomePart| {
        let v = visual_density(&x, z);
        if best.as_ref().is_none_or(|b| v > b.0) {
            best = Some((v, x, part));
        }
    };
    for (i, face) in dome.faces.iter().enumerate() {
        if face.plane.boundary.horo_radius(z) <= 0.0 {
            continue;
        }
        let x = face.plane.project(z.into())?;
        if face.admits(&x, 1e-12) {
            consider(x, DomePart::Face(i));
        }
    }
    for (j, ridge) in dome.ridges.iter().enumerate() {
        consider(ridge.geodesic.nearest_to_boundary(z)?, DomePart::Ridge(j));
    }
    best.map(|(_, x, p)| (x, p)).ok_or_else(|| Error::Domain(format!("no dome point sees {z}")))
}

/// Largest hyperbolic distance between `dome_retract(z)` and the projection
/// of `z` to the plane of the projective-metric witness disk.
pub fn dome_epstein_identity_check(domain: &PlaneDomain, samples: &[C64]) -> Result<f64> {
    let dome = build_dome(domain)?;
    let mut worst: f64 = 0.0;
    for &z in samples {
        let r = dome_retract(&dome, z)?;
        let w = thurston_metric(domain, z, &ThurstonOptions::default())?;
        let p = GeodesicPlane::new(w.witness).project(z.into())?;
        worst = worst.max(hyperbolic_distance(&r, &p));
    }
    Ok(worst)
}

/// Path distance on a dome with at most one ridge: hyperbolic distance on
/// a common face, otherwise the distance after unfolding the two faces
/// about the ridge into one plane.
pub fn dome_path_distance(dome: &FinitelyBentDome, a: (H3Point, DomePart), b: (H3Point, DomePart)) -> Result<f64> {
    let face_of = |p: DomePart| -> Option<usize> {
        match p {
            DomePart::Face(i) => Some(i),
            DomePart::Ridge(_) => None,
        }
    };
    match (face_of(a.1), face_of(b.1)) {
        (Some(i), Some(j)) if i != j => {
            if dome.ridges.len() != 1 {
                return Err(Error::Unsupported("path distance across more than one ridge".into()));
            }
            let g = dome.ridges[0].geodesic;
            let (s1, u1, _) = g.fermi(&a.0);
            let (s2, u2, _) = g.fermi(&b.0);
            let c = u1.cosh() * u2.cosh() * (s1 - s2).cosh() + u1.sinh() * u2.sinh();
            Ok(c.max(1.0).acosh())
        }
        _ => Ok(hyperbolic_distance(&a.0, &b.0)),
    }
}

/// Pairs `(z, w)` with `w` at hyperbolic distance about `eps` from `z`,
/// `z` drawn uniformly from `|z| ≤ extent` inside the domain.
pub fn sample_pairs(domain: &PlaneDomain, n: usize, seed: u64, extent: f64, eps: f64) -> Result<Vec<(C64, C64)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    let mut guard = 0;
    while out.len() < n {
        guard += 1;
        if guard > 1000 * n.max(1) {
            return Err(Error::InvalidParameter("could not sample the domain".into()));
        }
        let z = C64::from_polar(extent * rng.gen::<f64>().sqrt(), rng.gen::<f64>() * 2.0 * PI);
        if !domain.contains(z) || domain.boundary_distance(z) < 1e-3 {
            continue;
        }
        let rho = hyperbolic_metric(domain, z).unwrap_or(1.0 / domain.boundary_distance(z));
        let w = z + C64::from_polar(eps / rho, rng.gen::<f64>() * 2.0 * PI);
        if domain.contains(w) {
            out.push((z, w));
        }
    }
    Ok(out)
}

/// Largest sampled ratio of dome path distance to domain hyperbolic
/// distance.
pub fn lipschitz_estimate(domain: &PlaneDomain, pairs: &[(C64, C64)]) -> Result<f64> {
    let dome = build_dome(domain)?;
    let mut worst: f64 = 0.0;
    for &(z, w) in pairs {
        let d = domain_distance(domain, z, w)?;
        if d == 0.0 {
            continue;
        }
        let a = dome_retract_part(&dome, z)?;
        let b = dome_retract_part(&dome, w)?;
        worst = worst.max(dome_path_distance(&dome, a, b)? / d);
    }
    Ok(worst)
}

/// Largest sampled ratio of dome path distance to `ρ_proj(z)|z − w|`.
pub fn thurston_lipschitz_estimate(domain: &PlaneDomain, pairs: &[(C64, C64)]) -> Result<f64> {
    let dome = build_dome(domain)?;
    let mut worst: f64 = 0.0;
    for &(z, w) in pairs {
        let mid = 0.5 * (z + w);
        let rho = thurston_metric(domain, mid, &ThurstonOptions::default())?.density;
        let a = dome_retract_part(&dome, z)?;
        let b = dome_retract_part(&dome, w)?;
        worst = worst.max(dome_path_distance(&dome, a, b)? / (rho * (z - w).norm()));
    }
    Ok(worst)
}

/// A bent geodesic with its angle and length (`None` for infinite).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BendingEntry {
    pub geodesic: Geodesic,
    pub angle: f64,
    pub length: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct FiniteBendingData {
    pub entries: Vec<BendingEntry>,
}

impl FiniteBendingData {
    pub fn from_dome(dome: &FinitelyBentDome) -> Self {
        FiniteBendingData {
            entries: dome
                .ridges
                .iter()
                .map(|r| BendingEntry { geodesic: r.geodesic, angle: r.angle, length: None })
                .collect(),
        }
    }

    /// `Σ θᵢ ℓᵢ`, defined only when all lengths are finite.
    pub fn length(&self) -> Option<f64> {
        self.entries.iter().map(|e| e.length.map(|l| e.angle * l)).sum()
    }
}

/// Area of the projective metric from the bending length of a closed
/// surface of Euler characteristic `chi`.
pub fn projective_area_from_bending(bending_length: f64, chi: i64) -> f64 {
    bending_length + 2.0 * PI * chi.unsigned_abs() as f64
}

pub fn bending_from_projective_area(area: f64, chi: i64) -> f64 {
    area - 2.0 * PI * chi.unsigned_abs() as f64
}

/// Bending-length bounds for a closed surface with Euler characteristic `chi`.
pub mod bending_bounds {
    use std::f64::consts::PI;

    use crate::error::{Error, Result};

    /// `4π|χ| K` with `K = ‖φ‖_∞`.
    pub fn from_sup_norm(chi: i64, k: f64) -> f64 {
        4.0 * PI * chi.unsigned_abs() as f64 * k
    }

    /// `6π|χ|` for incompressible boundary.
    pub fn incompressible(chi: i64) -> f64 {
        6.0 * PI * chi.unsigned_abs() as f64
    }

    /// `6π|χ| coth²(δ/4)` with `δ` the length of the shortest compressible curve.
    pub fn compressible(chi: i64, delta: f64) -> Result<f64> {
        if !(delta > 0.0) {
            return Err(Error::InvalidParameter(format!("δ must be positive, got {delta}")));
        }
        Ok(6.0 * PI * chi.unsigned_abs() as f64 / (0.25 * delta).tanh().powi(2))
    }

    /// `(A/δ + B)|χ|` for caller-supplied constants.
    pub fn symbolic(chi: i64, delta: f64, a: f64, b: f64) -> Result<f64> {
        if !(delta > 0.0) {
            return Err(Error::InvalidParameter(format!("δ must be positive, got {delta}")));
        }
        Ok((a / delta + b) * chi.unsigned_abs() as f64)
    }
}

fn lift(center: C64, radius: f64, xi: C64) -> [f64; 3] {
    let h = (radius * radius - (xi - center).norm_sqr()).max(0.0).sqrt();
    [xi.re, xi.im, h]
}

/// Mesh of the dome in half-space coordinates, faces plus ridge polylines.
pub fn dome_mesh(dome: &FinitelyBentDome, rings: usize, spokes: usize) -> Result<Mesh> {
    let mut mesh = Mesh::default();
    match dome.domain {
        PlaneDomain::Round(RoundDisk::Circle { center, radius, interior: true }) => {
            mesh.append(&Mesh::polar(lift(center, radius, center), rings, spokes, |i, j| {
                let xi =
                    center + C64::from_polar(radius * i as f64 / rings as f64, 2.0 * PI * j as f64 / spokes as f64);
                Ok(lift(center, radius, xi))
            })?);
        }
        PlaneDomain::TwoDiskUnion { a } => {
            for (sign, c) in [(-1.0, -a), (1.0, a)] {
                let center = C64::new(c, 0.0);
                // Clip the disk to its own half Re ξ · sign ≥ 0.
                let clip = |xi: C64| C64::new(if sign * xi.re < 0.0 { 0.0 } else { xi.re }, xi.im);
                mesh.append(&Mesh::polar(lift(center, 1.0, clip(center)), rings, spokes, |i, j| {
                    let xi = center + C64::from_polar(i as f64 / rings as f64, 2.0 * PI * j as f64 / spokes as f64);
                    Ok(lift(center, 1.0, clip(xi)))
                })?);
            }
        }
        PlaneDomain::SlitPlane => {
            // One sheet over x ∈ [−1/4 − 4, −1/4], heights log-spaced; the
            // dome is this sheet doubled.
            let off = mesh.vertices.len();
            let (nx, nt) = (rings.max(2), spokes.max(2));
            for i in 0..nx {
                for j in 0..nt {
                    let x = SLIT_TIP - 4.0 * i as f64 / (nx - 1) as f64;
                    let t = (-(3.0f64).ln() + 2.0 * (3.0f64).ln() * j as f64 / (nt - 1) as f64).exp();
                    mesh.vertices.push([x, 0.0, t]);
                }
            }
            for i in 0..nx - 1 {
                for j in 0..nt - 1 {
                    let v = |a: usize, b: usize| off + a * nt + b;
                    mesh.faces.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)]);
                }
            }
        }
        _ => return Err(Error::Unsupported(format!("mesh of the dome of the {}", dome.domain.name()))),
    }
    for ridge in &dome.ridges {
        let off = mesh.vertices.len();
        let n = 4 * spokes.max(2);
        for k in 0..=n {
            let s = -3.0 + 6.0 * k as f64 / n as f64;
            mesh.vertices.push(ridge.geodesic.point_at(s).to_array());
        }
        mesh.lines.push((off..=off + n).collect());
    }
    Ok(mesh)
}
