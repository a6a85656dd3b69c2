//! The Berezin transform as a Fourier multiplier on a zero-padded grid.

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::grid::GridFunction2D;
use crate::error::Result;
use crate::symbols::{Multiplier, SpaceParams, SymbolRep};

/// Boundary modulus above which periodization is reported as a warning.
pub const DECAY_THRESHOLD: f64 = 1e-10;

/// Zero-padding factor per axis.
pub const PAD_FACTOR: usize = 2;

/// `F^{-1}[ĥ_m(ξ) F[φ](ξ)]` with `ĥ_m` built from the chosen representation.
pub fn berezin_spectral(phi: &GridFunction2D, m: u32, rep: SymbolRep) -> Result<GridFunction2D> {
    let multiplier = Multiplier::new(SpaceParams::new(1, m)?, rep);
    let mut out = apply_multiplier(phi, |xi_sq| multiplier.eval(xi_sq))?;
    out.meta.method = Some("spectral".into());
    out.meta.rep = Some(rep.to_string());
    out.meta.m = Some(m);
    let edge = phi.boundary_max_abs();
    if edge > DECAY_THRESHOLD {
        out.meta.warnings.push(format!(
            "input reaches {edge:.3e} on the boundary (threshold {DECAY_THRESHOLD:e}); periodization error is not controlled"
        ));
    }
    Ok(out)
}

/// Multiply the spectrum of the zero-padded field by `symbol(|ξ|^2)`,
/// with angular frequencies `ξ = 2π k / (N h)` for signed `k`.
pub fn apply_multiplier<S>(phi: &GridFunction2D, symbol: S) -> Result<GridFunction2D>
where
    S: Fn(f64) -> f64,
{
    let (nx, ny) = (phi.nx(), phi.ny());
    let (px, py) = (PAD_FACTOR * nx, PAD_FACTOR * ny);
    let mut planner = FftPlanner::<f64>::new();
    let (fy, iy) = (planner.plan_fft_forward(py), planner.plan_fft_inverse(py));
    let (fx, ix) = (planner.plan_fft_forward(px), planner.plan_fft_inverse(px));

    // rows along y, padded
    let mut data = vec![Complex64::new(0.0, 0.0); px * py];
    for i in 0..nx {
        data[i * py..i * py + ny].copy_from_slice(&phi.values()[i * ny..(i + 1) * ny]);
    }
    for row in data.chunks_exact_mut(py).take(nx) {
        fy.process(row);
    }
    let mut cols = transpose(&data, px, py);
    for col in cols.chunks_exact_mut(px) {
        fx.process(col);
    }

    let freq = |k: usize, n: usize, h: f64| {
        let signed = if k <= n / 2 { k as f64 } else { k as f64 - n as f64 };
        2.0 * std::f64::consts::PI * signed / (n as f64 * h)
    };
    let xs: Vec<f64> = (0..px).map(|k| freq(k, px, phi.hx())).collect();
    let ys: Vec<f64> = (0..py).map(|k| freq(k, py, phi.hy())).collect();
    for (ky, col) in cols.chunks_exact_mut(px).enumerate() {
        for (kx, v) in col.iter_mut().enumerate() {
            *v *= symbol(xs[kx] * xs[kx] + ys[ky] * ys[ky]);
        }
        ix.process(col);
    }
    let mut data = transpose(&cols, py, px);
    let scale = 1.0 / (px * py) as f64;
    let mut values = Vec::with_capacity(nx * ny);
    for row in data.chunks_exact_mut(py).take(nx) {
        iy.process(row);
        values.extend(row[..ny].iter().map(|v| v * scale));
    }
    phi.with_values(values)
}

/// `rows x cols` row-major into `cols x rows` row-major.
fn transpose(data: &[Complex64], rows: usize, cols: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); data.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = data[r * cols + c];
        }
    }
    out
}
