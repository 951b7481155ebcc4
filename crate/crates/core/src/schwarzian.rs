//! Holomorphic jets, the Schwarzian derivative and a catalog of explicit
//! locally univalent maps on the unit disk.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::metrics::{ConformalMetric, PlaneDomain};
use crate::optimize::{nelder_mead, NelderMeadOptions};
use crate::quadrature::{integrate_2d, QuadratureOptions};
use crate::sphere::{disk_map, MobiusMap, RoundDisk};

/// Value and first three derivatives of a holomorphic map at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HolomorphicJet {
    pub f: C64,
    pub d1: C64,
    pub d2: C64,
    pub d3: C64,
}

impl HolomorphicJet {
    pub fn new(f: C64, d1: C64, d2: C64, d3: C64) -> Self {
        HolomorphicJet { f, d1, d2, d3 }
    }

    pub fn identity(z: C64) -> Self {
        HolomorphicJet::new(z, C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0))
    }

    /// Jet of `outer ∘ inner`, given `outer`'s jet at `inner.f`.
    pub fn compose(outer: &HolomorphicJet, inner: &HolomorphicJet) -> HolomorphicJet {
        let (g1, g2, g3) = (inner.d1, inner.d2, inner.d3);
        HolomorphicJet {
            f: outer.f,
            d1: outer.d1 * g1,
            d2: outer.d2 * g1 * g1 + outer.d1 * g2,
            d3: outer.d3 * g1 * g1 * g1 + 3.0 * outer.d2 * g1 * g2 + outer.d1 * g3,
        }
    }
}

/// `Sf = f‴/f′ − (3/2)(f″/f′)²`.
pub fn schwarzian_at(jet: &HolomorphicJet) -> Result<C64> {
    if jet.d1.norm() == 0.0 || !jet.d1.is_finite() {
        return Err(Error::CriticalPoint(format!("{}", jet.f)));
    }
    let a = jet.d2 / jet.d1;
    Ok(jet.d3 / jet.d1 - 1.5 * a * a)
}

/// Cocycle `S(f∘g)(z) = Sf(g z)·g′(z)² + Sg(z)`.
pub fn compose_schwarzian(sf_at_gz: C64, g_jet: &HolomorphicJet, sg_at_z: C64) -> Result<C64> {
    if g_jet.d1.norm() == 0.0 {
        return Err(Error::CriticalPoint(format!("{}", g_jet.f)));
    }
    Ok(sf_at_gz * g_jet.d1 * g_jet.d1 + sg_at_z)
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Exact jet of a Möbius map.
pub fn mobius_jet(m: &MobiusMap, z: C64) -> Result<HolomorphicJet> {
    let den = m.c * z + m.d;
    if den.norm() == 0.0 {
        return Err(Error::Domain(format!("{z} is the pole of the Möbius map")));
    }
    Ok(HolomorphicJet::new((m.a * z + m.b) / den, m.derivative(z), m.second_derivative(z), m.third_derivative(z)))
}

/// `L(z) = log((1+z)/(1−z))`, the disk onto the strip `|Im| < π/2`.
fn strip_log_jet(z: C64) -> HolomorphicJet {
    let (p, m) = (c(1.0) + z, c(1.0) - z);
    HolomorphicJet::new(
        (p / m).ln(),
        c(1.0) / p + c(1.0) / m,
        -c(1.0) / (p * p) + c(1.0) / (m * m),
        c(2.0) / (p * p * p) + c(2.0) / (m * m * m),
    )
}

/// `exp(a ζ)`.
fn exp_jet(a: C64, zeta: C64) -> HolomorphicJet {
    let e = (a * zeta).exp();
    HolomorphicJet::new(e, a * e, a * a * e, a * a * a * e)
}

fn koebe_jet(z: C64) -> HolomorphicJet {
    let m = c(1.0) - z;
    HolomorphicJet::new(
        z / (m * m),
        (c(1.0) + z) / m.powi(3),
        (c(4.0) + 2.0 * z) / m.powi(4),
        (c(18.0) + 6.0 * z) / m.powi(5),
    )
}

/// Explicit maps with exact jets.
#[derive(Clone, Debug, PartialEq)]
pub enum CatalogMap {
    Identity,
    Mobius(MobiusMap),
    /// `i(1+z)/(1−z)`, the disk onto the upper half-plane.
    Cayley,
    /// `z/(1−z)²`, onto `ℂ ∖ (−∞, −1/4]`.
    Koebe,
    /// Principal branch `z^c` on `ℂ ∖ (−∞, 0]`.
    Power(f64),
    /// `((1+z)/(1−z))^c`, onto the sector `|arg| < cπ/2`.
    Sector(f64),
    /// `log((1+z)/(1−z))`.
    StripLog,
    /// `log(i(1+z)/(1−z))`, the principal log of the Cayley map.
    HalfPlaneLog,
    /// Universal cover of `{1/R < |w| < R}`.
    AnnulusCover(f64),
}

/// A named catalog map.
#[derive(Clone, Debug, PartialEq)]
pub struct MapCatalogEntry {
    pub name: String,
    pub map: CatalogMap,
}

impl fmt::Display for MapCatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl MapCatalogEntry {
    pub fn new(map: CatalogMap) -> Self {
        let name = match &map {
            CatalogMap::Identity => "identity".to_string(),
            CatalogMap::Mobius(_) => "mobius".to_string(),
            CatalogMap::Cayley => "cayley".to_string(),
            CatalogMap::Koebe => "koebe".to_string(),
            CatalogMap::Power(c) => format!("power:{c}"),
            CatalogMap::Sector(c) => format!("sector:{c}"),
            CatalogMap::StripLog => "strip-log".to_string(),
            CatalogMap::HalfPlaneLog => "half-plane-log".to_string(),
            CatalogMap::AnnulusCover(r) => format!("annulus-cover:{r}"),
        };
        MapCatalogEntry { name, map }
    }

    /// Sample Möbius map used by the catalog; its pole `−3` is outside Δ.
    pub fn sample_mobius() -> MobiusMap {
        MobiusMap::new(c(2.0), C64::new(1.0, 0.5), c(1.0), c(3.0)).expect("nondegenerate")
    }

    /// Parse `name` or `name:parameter`.
    pub fn lookup(name: &str) -> Result<Self> {
        let (head, param) = match name.split_once(':') {
            Some((h, p)) => {
                let v: f64 =
                    p.parse().map_err(|_| Error::InvalidParameter(format!("bad parameter in map name '{name}'")))?;
                (h, Some(v))
            }
            None => (name, None),
        };
        let map = match (head, param) {
            ("identity", None) => CatalogMap::Identity,
            ("mobius", None) => CatalogMap::Mobius(Self::sample_mobius()),
            ("cayley", None) => CatalogMap::Cayley,
            ("koebe", None) => CatalogMap::Koebe,
            ("power", Some(c)) => CatalogMap::Power(c),
            ("sector", Some(c)) if c > 0.0 && c <= 2.0 => CatalogMap::Sector(c),
            ("strip-log", None) => CatalogMap::StripLog,
            ("half-plane-log", None) => CatalogMap::HalfPlaneLog,
            ("annulus-cover", Some(r)) if r > 1.0 => CatalogMap::AnnulusCover(r),
            _ => return Err(Error::InvalidParameter(format!("unknown catalog map '{name}'"))),
        };
        Ok(MapCatalogEntry::new(map))
    }

    /// Default catalog, in a fixed order.
    pub fn catalog() -> Vec<MapCatalogEntry> {
        [
            CatalogMap::Identity,
            CatalogMap::Mobius(Self::sample_mobius()),
            CatalogMap::Cayley,
            CatalogMap::Koebe,
            CatalogMap::Sector(0.5),
            CatalogMap::Sector(1.5),
            CatalogMap::Sector(2.0),
            CatalogMap::StripLog,
            CatalogMap::HalfPlaneLog,
            CatalogMap::AnnulusCover(2.0),
        ]
        .into_iter()
        .map(MapCatalogEntry::new)
        .collect()
    }

    /// Whether the source is the unit disk (everything except power maps).
    pub fn on_disk(&self) -> bool {
        !matches!(self.map, CatalogMap::Power(_))
    }

    pub fn univalent(&self) -> bool {
        match self.map {
            CatalogMap::AnnulusCover(_) => false,
            CatalogMap::Power(c) => c.abs() <= 1.0,
            CatalogMap::Sector(c) => c <= 2.0,
            _ => true,
        }
    }

    pub fn in_source(&self, z: C64) -> bool {
        match self.map {
            CatalogMap::Power(_) => !(z.im == 0.0 && z.re <= 0.0),
            _ => z.norm_sqr() < 1.0,
        }
    }

    pub fn jet(&self, z: C64) -> Result<HolomorphicJet> {
        if !self.in_source(z) {
            return Err(Error::Domain(format!("{z} is outside the source of {}", self.name)));
        }
        let jet = match &self.map {
            CatalogMap::Identity => HolomorphicJet::identity(z),
            CatalogMap::Mobius(m) => mobius_jet(m, z)?,
            CatalogMap::Cayley => mobius_jet(&MobiusMap::cayley().inverse(), z)?,
            CatalogMap::Koebe => koebe_jet(z),
            CatalogMap::Power(p) => {
                let l = z.ln();
                let log_jet = HolomorphicJet::new(l, c(1.0) / z, -c(1.0) / (z * z), c(2.0) / (z * z * z));
                HolomorphicJet::compose(&exp_jet(c(*p), l), &log_jet)
            }
            CatalogMap::Sector(p) => {
                let s = strip_log_jet(z);
                HolomorphicJet::compose(&exp_jet(c(*p), s.f), &s)
            }
            CatalogMap::StripLog => strip_log_jet(z),
            CatalogMap::HalfPlaneLog => {
                let mut s = strip_log_jet(z);
                s.f += C64::new(0.0, FRAC_PI_2);
                s
            }
            CatalogMap::AnnulusCover(r) => {
                let s = strip_log_jet(z);
                let beta = annulus_beta(*r);
                HolomorphicJet::compose(&exp_jet(C64::new(0.0, beta), s.f), &s)
            }
        };
        Ok(jet)
    }

    /// Closed-form Schwarzian, where one is known.
    pub fn closed_form_schwarzian(&self, z: C64) -> Option<C64> {
        let q = (c(1.0) - z * z).powi(2);
        match self.map {
            CatalogMap::Identity | CatalogMap::Mobius(_) | CatalogMap::Cayley => Some(c(0.0)),
            CatalogMap::Koebe => Some(c(-6.0) / q),
            CatalogMap::Power(p) => Some(c(1.0 - p * p) / (2.0 * z * z)),
            CatalogMap::Sector(p) => Some(c(2.0 * (1.0 - p * p)) / q),
            CatalogMap::StripLog | CatalogMap::HalfPlaneLog => Some(c(2.0) / q),
            CatalogMap::AnnulusCover(r) => {
                let b = annulus_beta(r);
                Some(c(2.0 * (1.0 + b * b)) / q)
            }
        }
    }

    pub fn schwarzian(&self, z: C64) -> Result<C64> {
        schwarzian_at(&self.jet(z)?)
    }

    /// Image domain, when it belongs to the domain catalog.
    pub fn image_domain(&self) -> Option<PlaneDomain> {
        match &self.map {
            CatalogMap::Identity => Some(PlaneDomain::Round(RoundDisk::unit())),
            CatalogMap::Mobius(m) => disk_map(m, &RoundDisk::unit()).ok().map(PlaneDomain::Round),
            CatalogMap::Cayley => Some(PlaneDomain::Round(RoundDisk::upper_half_plane())),
            CatalogMap::Koebe => Some(PlaneDomain::SlitPlane),
            CatalogMap::StripLog => Some(PlaneDomain::Strip),
            CatalogMap::AnnulusCover(r) => Some(PlaneDomain::Annulus { r: *r }),
            _ => None,
        }
    }

    /// Schwarzian as a quadratic differential on Δ with the hyperbolic
    /// reference metric.
    pub fn schwarzian_differential(&self) -> Result<QuadraticDifferential> {
        if !self.on_disk() {
            return Err(Error::Unsupported(format!("{} is not defined on the disk", self.name)));
        }
        let entry = self.clone();
        Ok(QuadraticDifferential::new(
            format!("S({})", self.name),
            ConformalMetric::Hyperbolic(PlaneDomain::disk()),
            move |z| entry.schwarzian(z),
        ))
    }
}

/// `β = 2 log R / π` for the cover `exp(iβ L(z))` of `{1/R < |w| < R}`.
pub fn annulus_beta(r: f64) -> f64 {
    2.0 * r.ln() / PI
}

type Evaluator = Arc<dyn Fn(C64) -> Result<C64> + Send + Sync>;

/// A quadratic differential `φ(z) dz²` with a reference metric.
#[derive(Clone)]
pub struct QuadraticDifferential {
    pub label: String,
    pub metric: ConformalMetric,
    phi: Evaluator,
}

impl fmt::Debug for QuadraticDifferential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadraticDifferential").field("label", &self.label).field("metric", &self.metric).finish()
    }
}

impl QuadraticDifferential {
    pub fn new<F>(label: impl Into<String>, metric: ConformalMetric, phi: F) -> Self
    where
        F: Fn(C64) -> Result<C64> + Send + Sync + 'static,
    {
        QuadraticDifferential { label: label.into(), metric, phi: Arc::new(phi) }
    }

    pub fn zero(metric: ConformalMetric) -> Self {
        QuadraticDifferential::new("0", metric, |_| Ok(C64::new(0.0, 0.0)))
    }

    /// Scalar multiple `s·φ`.
    pub fn scaled(&self, s: C64) -> Self {
        let inner = self.phi.clone();
        QuadraticDifferential::new(format!("{s}*{}", self.label), self.metric.clone(), move |z| Ok(s * inner(z)?))
    }

    pub fn value(&self, z: C64) -> Result<C64> {
        let v = (self.phi)(z)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(format!("{} at {z}", self.label)))
        }
    }

    pub fn domain(&self) -> &PlaneDomain {
        self.metric.domain()
    }
}

/// `‖φ(z)‖ = |φ(z)|/ρ(z)²`.
pub fn schwarzian_norm(q: &QuadraticDifferential, z: C64) -> Result<f64> {
    let rho = q.metric.density(z)?;
    Ok(q.value(z)?.norm() / (rho * rho))
}

#[derive(Clone, Copy, Debug)]
pub struct SupNormConfig {
    /// Hyperbolic radius of the sampled ball around 0.
    pub max_radius: f64,
    pub radial_steps: usize,
    pub angular_steps: usize,
    /// Number of best grid samples refined locally.
    pub refine: usize,
}

impl Default for SupNormConfig {
    fn default() -> Self {
        SupNormConfig { max_radius: 8.0, radial_steps: 64, angular_steps: 96, refine: 4 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SupNorm {
    pub value: f64,
    pub at: C64,
    /// Best raw grid value, a certified lower bound.
    pub grid_value: f64,
    /// Hyperbolic radial spacing of the grid.
    pub spacing: f64,
}

/// Grid estimate of `sup ‖φ‖` on Δ, refined by a simplex search around the
/// best grid samples. The grid value is a lower bound; the refined value is
/// an estimate.
pub fn sup_norm(q: &QuadraticDifferential, cfg: &SupNormConfig) -> Result<SupNorm> {
    if q.domain() != &PlaneDomain::disk() {
        return Err(Error::Unsupported("sup_norm samples the unit disk only".into()));
    }
    let spacing = cfg.max_radius / cfg.radial_steps as f64;
    let mut samples = vec![(schwarzian_norm(q, C64::new(0.0, 0.0))?, C64::new(0.0, 0.0))];
    for i in 1..=cfg.radial_steps {
        let r = (0.5 * spacing * i as f64).tanh();
        for j in 0..cfg.angular_steps {
            let z = C64::from_polar(r, 2.0 * PI * j as f64 / cfg.angular_steps as f64);
            samples.push((schwarzian_norm(q, z)?, z));
        }
    }
    samples.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.re.total_cmp(&b.1.re)).then(a.1.im.total_cmp(&b.1.im)));
    let (grid_value, grid_at) = samples[0];
    let rmax = (0.5 * cfg.max_radius).tanh();
    let mut best = (grid_value, grid_at);
    let opts = NelderMeadOptions { max_iter: 600, f_tol: 1e-15, x_tol: 1e-10 };
    for &(_, z0) in samples.iter().take(cfg.refine) {
        let objective = |x: &[f64]| {
            let z = C64::new(x[0], x[1]);
            if z.norm() > rmax {
                return f64::INFINITY;
            }
            schwarzian_norm(q, z).map(|v| -v).unwrap_or(f64::INFINITY)
        };
        let step = 0.25 * (1.0 - z0.norm_sqr()) * spacing + 1e-6;
        let r = nelder_mead(objective, &[z0.re, z0.im], &[step, step], &opts);
        if -r.f > best.0 {
            best = (-r.f, C64::new(r.x[0], r.x[1]));
        }
    }
    Ok(SupNorm { value: best.0, at: best.1, grid_value, spacing })
}

/// Integration regions for L² norms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Region {
    /// Euclidean disk, integrated in polar coordinates.
    Disk {
        center: C64,
        radius: f64,
    },
    Rectangle {
        x: (f64, f64),
        y: (f64, f64),
    },
    /// Round annulus `inner < |z − center| < outer`, polar coordinates.
    Annulus {
        center: C64,
        inner: f64,
        outer: f64,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct L2Norm {
    pub value: f64,
    pub error: f64,
}

/// `(∫ |φ|²/ρ² dA)^{1/2}` over `region` by adaptive quadrature.
pub fn l2_norm(q: &QuadraticDifferential, region: &Region, opts: &QuadratureOptions) -> Result<L2Norm> {
    let density = |z: C64| -> f64 {
        match (q.value(z), q.metric.density(z)) {
            (Ok(v), Ok(rho)) => v.norm_sqr() / (rho * rho),
            _ => f64::NAN,
        }
    };
    let quad = match *region {
        Region::Disk { center, radius } => integrate_2d(
            |r, th| r * density(center + C64::from_polar(r, th)),
            0.0,
            radius,
            |_| 0.0,
            |_| 2.0 * PI,
            opts,
        )?,
        Region::Rectangle { x, y } => integrate_2d(|a, b| density(C64::new(a, b)), x.0, x.1, |_| y.0, |_| y.1, opts)?,
        Region::Annulus { center, inner, outer } => integrate_2d(
            |r, th| r * density(center + C64::from_polar(r, th)),
            inner,
            outer,
            |_| 0.0,
            |_| 2.0 * PI,
            opts,
        )?,
    };
    if quad.value < 0.0 {
        return Err(Error::NonFinite("negative L² integral".into()));
    }
    let value = quad.value.sqrt();
    let error = if value > 0.0 { quad.error / (2.0 * value) } else { quad.error.sqrt() };
    Ok(L2Norm { value, error })
}
