//! Correlation statistics for sweep aggregation: sample Pearson
//! coefficients, a multiplicity-weighted variant, and the two-predictor
//! multiple correlation.

use crate::complexity::KahanSum;
use crate::error::{Error, Result};

fn weighted_moments(xs: &[f64], ys: &[f64], ws: Option<&[f64]>) -> Result<(f64, f64, f64)> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch { left: xs.len(), right: ys.len() });
    }
    if let Some(ws) = ws {
        if ws.len() != xs.len() {
            return Err(Error::LengthMismatch { left: xs.len(), right: ws.len() });
        }
    }
    if xs.len() < 2 {
        return Err(Error::DegenerateVariance { min: 2 });
    }
    let weight = |k: usize| ws.map_or(1.0, |ws| ws[k]);
    let mut wsum = KahanSum::default();
    let mut wx = KahanSum::default();
    let mut wy = KahanSum::default();
    for k in 0..xs.len() {
        wsum.add(weight(k));
        wx.add(weight(k) * xs[k]);
        wy.add(weight(k) * ys[k]);
    }
    let mean_x = wx.value() / wsum.value();
    let mean_y = wy.value() / wsum.value();
    let mut sxx = KahanSum::default();
    let mut syy = KahanSum::default();
    let mut sxy = KahanSum::default();
    for k in 0..xs.len() {
        let dx = xs[k] - mean_x;
        let dy = ys[k] - mean_y;
        sxx.add(weight(k) * dx * dx);
        syy.add(weight(k) * dy * dy);
        sxy.add(weight(k) * dx * dy);
    }
    Ok((sxx.value(), syy.value(), sxy.value()))
}

/// Sample Pearson correlation coefficient.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    let (sxx, syy, sxy) = weighted_moments(xs, ys, None)?;
    if sxx <= 0.0 || syy <= 0.0 {
        return Err(Error::DegenerateVariance { min: 2 });
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Pearson coefficient with per-point weights, e.g. isomorphism-class
/// multiplicities. With unit weights this reduces to `pearson`; with class
/// multiplicities it reproduces the labeled-graph correlation exactly.
pub fn pearson_weighted(xs: &[f64], ys: &[f64], ws: &[f64]) -> Result<f64> {
    let (sxx, syy, sxy) = weighted_moments(xs, ys, Some(ws))?;
    if sxx <= 0.0 || syy <= 0.0 {
        return Err(Error::DegenerateVariance { min: 2 });
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Multiple correlation of `y` on two predictors via the closed
/// two-predictor formula
/// R = sqrt((r_y1^2 + r_y2^2 - 2 r_y1 r_y2 r_12) / (1 - r_12^2)).
pub fn multiple_correlation(y: &[f64], x1: &[f64], x2: &[f64]) -> Result<f64> {
    if y.len() < 3 {
        return Err(Error::DegenerateVariance { min: 3 });
    }
    let r_y1 = pearson(y, x1)?;
    let r_y2 = pearson(y, x2)?;
    let r_12 = pearson(x1, x2)?;
    let denom = 1.0 - r_12 * r_12;
    if denom <= 1e-12 {
        return Err(Error::CollinearPredictors);
    }
    let r_sq = (r_y1 * r_y1 + r_y2 * r_y2 - 2.0 * r_y1 * r_y2 * r_12) / denom;
    Ok(r_sq.clamp(0.0, 1.0).sqrt())
}
