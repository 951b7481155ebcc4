//! CSV tables for the `report` command.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::bounds::BoundFunctionTable;
use crate::error::{Error, Result};
use crate::wvolume::{area_at_infinity, integrals_by_quadrature, w_volume, w_volume_alternate, ConvexRevolutionBody};

pub const WVOLUME_HEADER: &str = "r,W_direct,W_alternate,scaling_residual,lemma33_residual";
pub const BOUND_HEADER: &str = "t,F,G_K,G";

/// Radii `from, from + step, …` up to `to` (inclusive, with a small
/// allowance for rounding). Empty when `to < from`.
pub fn radius_range(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !from.is_finite() || !to.is_finite() {
        return Err(Error::InvalidParameter(format!("bad range {from}..{to} step {step}")));
    }
    let mut out = vec![];
    let mut k = 0;
    loop {
        let r = from + k as f64 * step;
        if r > to + 1e-9 * step {
            break;
        }
        out.push(r);
        k += 1;
    }
    Ok(out)
}

/// One table row. The scaling residual uses a unit neighborhood step and
/// the quadrature pipeline; the mean curvature residual is computed from
/// revolution quadrature and the contact search, not the closed forms.
pub fn wvolume_row(r: f64, scaling_step: f64) -> Result<[f64; 5]> {
    let ball = ConvexRevolutionBody::ball(r)?;
    let direct = w_volume(&ball)?;
    let alternate = w_volume_alternate(&ball)?;
    let grown = w_volume_alternate(&ball.neighborhood(scaling_step)?)?;
    let scaling = ((grown - alternate) / scaling_step + 2.0 * PI).abs();
    let q = integrals_by_quadrature(&ball)?;
    let a_inf = area_at_infinity(&ball)?;
    let chi = ball.euler_characteristic() as f64;
    let identity = (q.mean_curvature - (0.5 * a_inf - q.area - PI * chi)).abs();
    Ok([r, direct, alternate, scaling, identity])
}

pub fn wvolume_table(radii: &[f64]) -> Result<String> {
    let rows: Vec<Result<[f64; 5]>> = radii.par_iter().map(|&r| wvolume_row(r, 0.5)).collect();
    let mut s = format!("{WVOLUME_HEADER}\n");
    for row in rows {
        let row = row?;
        let _ = writeln!(s, "{},{},{},{:e},{:e}", row[0], row[1], row[2], row[3], row[4]);
    }
    Ok(s)
}

/// `n` log-spaced rows on `[lo, hi]`.
pub fn bound_table(lo: f64, hi: f64, n: usize, k: f64) -> Result<String> {
    let rows = BoundFunctionTable { k }.log_spaced(lo, hi, n)?;
    let mut s = format!("{BOUND_HEADER}\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{}", r.t, r.f, r.g_k, r.g);
    }
    Ok(s)
}
