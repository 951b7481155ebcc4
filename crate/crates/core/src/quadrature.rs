//! Adaptive Gauss–Kronrod quadrature in one and two dimensions, plus fixed
//! tensor Gauss–Legendre rules.
//!
//! The adaptive driver always bisects the interval with the largest error
//! estimate and sums the final partition in left-to-right order, so results
//! do not depend on anything but the integrand and the tolerances.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct QuadratureOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions { abs_tol: 1e-12, rel_tol: 1e-10, max_intervals: 2000 }
    }
}

fn kronrod<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        resk += WGK[j] * s;
        if j % 2 == 1 {
            resg += WG[j / 2] * s;
        }
    }
    let (k, g) = (resk * h, resg * h);
    if !k.is_finite() {
        return Err(Error::NonFinite(format!("integrand on [{a}, {b}]")));
    }
    Ok((k, (k - g).abs()))
}

/// Adaptive G7–K15 quadrature of `f` over `[a, b]`.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, opts: &QuadratureOptions) -> Result<Quadrature> {
    if a == b {
        return Ok(Quadrature { value: 0.0, error: 0.0, evaluations: 0 });
    }
    let (v, e) = kronrod(&mut f, a, b)?;
    let mut parts: Vec<(f64, f64, f64, f64)> = vec![(a, b, v, e)];
    let mut evaluations = 15;
    loop {
        let total: f64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if err <= opts.abs_tol.max(opts.rel_tol * total.abs()) {
            parts.sort_by(|p, q| p.0.total_cmp(&q.0));
            let value = parts.iter().map(|p| p.2).sum();
            return Ok(Quadrature { value, error: err, evaluations });
        }
        if parts.len() >= opts.max_intervals {
            return Err(Error::NonConvergence {
                what: format!("quadrature on [{a}, {b}] (error {err:.3e})"),
                best: total,
            });
        }
        let worst = (0..parts.len()).max_by(|&i, &j| parts[i].3.total_cmp(&parts[j].3)).unwrap_or(0);
        let (lo, hi, _, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if !(mid > lo.min(hi) && mid < lo.max(hi)) {
            return Err(Error::NonConvergence { what: "quadrature interval underflow".into(), best: total });
        }
        let (v1, e1) = kronrod(&mut f, lo, mid)?;
        let (v2, e2) = kronrod(&mut f, mid, hi)?;
        evaluations += 30;
        parts.push((lo, mid, v1, e1));
        parts.push((mid, hi, v2, e2));
    }
}

/// Iterated adaptive quadrature of `f(x, y)` over
/// `{a ≤ x ≤ b, lo(x) ≤ y ≤ hi(x)}`. The reported error adds the outer
/// estimate to the largest inner one.
pub fn integrate_2d<F, L, H>(f: F, a: f64, b: f64, lo: L, hi: H, opts: &QuadratureOptions) -> Result<Quadrature>
where
    F: Fn(f64, f64) -> f64,
    L: Fn(f64) -> f64,
    H: Fn(f64) -> f64,
{
    let inner_opts = QuadratureOptions {
        abs_tol: opts.abs_tol * 0.1,
        rel_tol: opts.rel_tol * 0.1,
        max_intervals: opts.max_intervals,
    };
    let mut inner_err: f64 = 0.0;
    let mut evaluations = 0;
    let mut failure = None;
    let outer = integrate(
        |x| {
            if failure.is_some() {
                return 0.0;
            }
            match integrate(|y| f(x, y), lo(x), hi(x), &inner_opts) {
                Ok(q) => {
                    inner_err = inner_err.max(q.error);
                    evaluations += q.evaluations;
                    q.value
                }
                Err(e) => {
                    failure = Some(e);
                    0.0
                }
            }
        },
        a,
        b,
        opts,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let outer = outer?;
    Ok(Quadrature { value: outer.value, error: outer.error + inner_err * (b - a).abs(), evaluations })
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Fixed tensor rule: `panels` equal panels per axis, `n` Gauss points per
/// panel. Linear in `f` to rounding.
#[derive(Clone, Debug)]
pub struct TensorRule {
    pub points: Vec<(f64, f64)>,
    pub weights: Vec<f64>,
}

impl TensorRule {
    pub fn rectangle(x: (f64, f64), y: (f64, f64), n: usize, panels: usize) -> Self {
        let (gx, gw) = gauss_legendre(n);
        let axis = |(a, b): (f64, f64)| -> Vec<(f64, f64)> {
            let h = (b - a) / panels as f64;
            let mut out = Vec::with_capacity(n * panels);
            for p in 0..panels {
                let c = a + h * (p as f64 + 0.5);
                for (xi, wi) in gx.iter().zip(&gw) {
                    out.push((c + 0.5 * h * xi, 0.5 * h * wi));
                }
            }
            out
        };
        let (ax, ay) = (axis(x), axis(y));
        let mut points = Vec::with_capacity(ax.len() * ay.len());
        let mut weights = Vec::with_capacity(ax.len() * ay.len());
        for &(px, wx) in &ax {
            for &(py, wy) in &ay {
                points.push((px, py));
                weights.push(wx * wy);
            }
        }
        TensorRule { points, weights }
    }

    pub fn apply<F: Fn(f64, f64) -> f64>(&self, f: F) -> f64 {
        self.points.iter().zip(&self.weights).map(|(&(x, y), w)| w * f(x, y)).sum()
    }
}
