//! Closed-form bound functions: Schwarzian distortion factors, the thick
//! part comparison `F`, the bending bound `G_K`, and volume brackets.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `√(1 + 2K)`: ratio bound between the projective and hyperbolic metrics
/// when `‖Sf‖_∞ ≤ K`.
pub fn anderson_factor(k: f64) -> Result<f64> {
    if !(k >= 0.0) {
        return Err(Error::InvalidParameter(format!("K must be nonnegative, got {k}")));
    }
    Ok((1.0 + 2.0 * k).sqrt())
}

/// `(3/2) coth²(r/2)`: pointwise Schwarzian bound at injectivity radius `r`.
pub fn injectivity_schwarzian_bound(r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameter(format!("injectivity radius must be positive, got {r}")));
    }
    Ok(1.5 / (0.5 * r).tanh().powi(2))
}

/// `F(ε) = √(1 + √(3/π) ε⁵ / tanh²(ε²/2)) · (1+ε)/(1−ε) − 1`.
/// Infinite for `ε ≥ 1`, where the estimate says nothing.
pub fn thick_part_excess(eps: f64) -> Result<f64> {
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter(format!("ε must be positive, got {eps}")));
    }
    if eps >= 1.0 {
        return Ok(f64::INFINITY);
    }
    let th = (0.5 * eps * eps).tanh();
    let root = (1.0 + (3.0 / PI).sqrt() * eps.powi(5) / (th * th)).sqrt();
    Ok(root * (1.0 + eps) / (1.0 - eps) - 1.0)
}

/// Slope of `F` at 0 implied by its closed form: `2 + 2√(3/π)`.
pub fn thick_part_slope() -> f64 {
    2.0 + 2.0 * (3.0 / PI).sqrt()
}

/// The slope `2 + 4√(3/π)` quoted alongside the closed form.
pub fn thick_part_slope_quoted() -> f64 {
    2.0 + 4.0 * (3.0 / PI).sqrt()
}

/// Value of `G_K` with the intermediate `ε = t^{1/5}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BendingBoundValue {
    pub value: f64,
    pub epsilon: f64,
    pub f: f64,
    /// `ε ≤ 0.1`; beyond that the thin part need not be Margulis-thin
    /// and the value is reported but not trusted.
    pub in_regime: bool,
}

/// `G_K(t) = 2F(ε) + F(ε)² + (3ε/2π)(1 + 2K)` with `ε = t^{1/5}`, so that
/// `L ≤ 2π|χ| G_K(‖φ‖₂)`.
pub fn bending_bound_gk(t: f64, k: f64) -> Result<BendingBoundValue> {
    if !(t > 0.0) {
        return Err(Error::InvalidParameter(format!("t must be positive, got {t}")));
    }
    if !(k >= 0.0) {
        return Err(Error::InvalidParameter(format!("K must be nonnegative, got {k}")));
    }
    let eps = t.powf(0.2);
    let f = thick_part_excess(eps)?;
    let value = 2.0 * f + f * f + 3.0 * eps / (2.0 * PI) * (1.0 + 2.0 * k);
    Ok(BendingBoundValue { value, epsilon: eps, f, in_regime: eps <= 0.1 })
}

/// `G = π G_{3/2}`.
pub fn volume_gap_g(t: f64) -> Result<f64> {
    Ok(PI * bending_bound_gk(t, 1.5)?.value)
}

/// Limit of `G_K(t)/t^{1/5}` as `t → 0`.
pub fn bending_bound_gk_rate(k: f64) -> f64 {
    2.0 * thick_part_slope() + 3.0 / (2.0 * PI) * (1.0 + 2.0 * k)
}

/// One row of the bound table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundRow {
    pub t: f64,
    pub f: f64,
    pub g_k: f64,
    pub g: f64,
}

/// Evaluators for a fixed `K`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundFunctionTable {
    pub k: f64,
}

impl Default for BoundFunctionTable {
    fn default() -> Self {
        BoundFunctionTable { k: 1.5 }
    }
}

impl BoundFunctionTable {
    pub fn row(&self, t: f64) -> Result<BoundRow> {
        Ok(BoundRow { t, f: thick_part_excess(t)?, g_k: bending_bound_gk(t, self.k)?.value, g: volume_gap_g(t)? })
    }

    /// Rows at `n` log-spaced values from `lo` to `hi`.
    pub fn log_spaced(&self, lo: f64, hi: f64, n: usize) -> Result<Vec<BoundRow>> {
        if !(lo > 0.0 && hi >= lo) {
            return Err(Error::InvalidParameter(format!("need 0 < lo ≤ hi, got [{lo}, {hi}]")));
        }
        (0..n)
            .map(|i| {
                let s = if n > 1 { i as f64 / (n - 1) as f64 } else { 0.0 };
                self.row((lo.ln() + s * (hi / lo).ln()).exp())
            })
            .collect()
    }
}

/// `V_R = vol(N) − ‖φ‖₂²`.
pub fn renormalized_volume(volume: f64, phi_l2: f64) -> f64 {
    volume - phi_l2 * phi_l2
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeBracket {
    /// `V_C − ½L`.
    pub lower: f64,
    /// `V_C − ¼L`.
    pub upper: f64,
    /// `V_C − |χ| G(‖φ‖₂)`.
    pub l2_lower: f64,
}

/// Brackets for the renormalized volume from the convex core volume `vc`,
/// the bending length `l` and the L² norm of the boundary Schwarzian.
pub fn volume_bound_chain(vc: f64, l: f64, chi: i64, phi_l2: f64) -> Result<VolumeBracket> {
    if !(l >= 0.0) {
        return Err(Error::InvalidParameter(format!("bending length must be nonnegative, got {l}")));
    }
    if !(phi_l2 >= 0.0) {
        return Err(Error::InvalidParameter(format!("L² norm must be nonnegative, got {phi_l2}")));
    }
    let gap = if phi_l2 == 0.0 { 0.0 } else { chi.unsigned_abs() as f64 * volume_gap_g(phi_l2)? };
    Ok(VolumeBracket { lower: vc - 0.5 * l, upper: vc - 0.25 * l, l2_lower: vc - gap })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_examples() {
        assert_eq!(anderson_factor(1.5).unwrap(), 2.0);
        assert_eq!(anderson_factor(0.0).unwrap(), 1.0);
        assert!(anderson_factor(-1.0).is_err());
        assert!((injectivity_schwarzian_bound(60.0).unwrap() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn thick_part_slope_from_series() {
        // Independent series: tanh(x) ≈ x, so the root is √(1 + 4√(3/π) ε)
        // and (1+ε)/(1−ε) ≈ 1 + 2ε.
        let c = (3.0 / PI).sqrt();
        let series = 0.5 * 4.0 * c + 2.0;
        assert!((thick_part_slope() - series).abs() < 1e-15);
        let ratio = thick_part_excess(1e-8).unwrap() / 1e-8;
        assert!((ratio - thick_part_slope()).abs() < 1e-6);
        assert!((ratio / thick_part_slope_quoted() - 1.0).abs() > 0.2);
        assert!(thick_part_excess(1.0).unwrap().is_infinite());
    }

    #[test]
    fn gk_rate_stabilizes() {
        let a = bending_bound_gk(1e-10, 1.5).unwrap();
        let b = bending_bound_gk(1e-12, 1.5).unwrap();
        let (ra, rb) = (a.value / 1e-10f64.powf(0.2), b.value / 1e-12f64.powf(0.2));
        assert!((ra / rb - 1.0).abs() < 0.02);
        assert!((rb / bending_bound_gk_rate(1.5) - 1.0).abs() < 0.02);
        assert!(a.in_regime && !bending_bound_gk(0.5, 1.5).unwrap().in_regime);
    }

    #[test]
    fn table_is_monotone() {
        let rows = BoundFunctionTable::default().log_spaced(1e-3, 1.0, 25).unwrap();
        assert_eq!(rows.len(), 25);
        assert!(rows.windows(2).all(|w| w[1].g_k > w[0].g_k));
        assert!(rows.iter().all(|r| (r.g - PI * r.g_k).abs() <= 1e-12 * r.g.abs() || r.g.is_infinite()));
        assert!(BoundFunctionTable::default().log_spaced(1e-3, 1.0, 0).unwrap().is_empty());
    }

    #[test]
    fn bracket_examples() {
        let b = volume_bound_chain(10.0, 0.0, -2, 0.0).unwrap();
        assert_eq!((b.lower, b.upper, b.l2_lower), (10.0, 10.0, 10.0));
        let b = volume_bound_chain(10.0, 4.0, -2, 1e-6).unwrap();
        assert_eq!((b.lower, b.upper), (8.0, 9.0));
        assert!(b.l2_lower < 10.0);
        assert!(volume_bound_chain(10.0, -1.0, -2, 0.0).is_err());
        assert_eq!(renormalized_volume(5.0, 2.0), 1.0);
    }
}
