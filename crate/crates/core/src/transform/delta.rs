//! Finite-difference Landau operator `Δ̃ = -∂²/∂z∂z̄ + z̄ ∂/∂z̄` on planar grids.

use num_complex::Complex64;

use super::grid::GridFunction2D;
use crate::error::Result;

/// Second-order central differences with `∂²/∂z∂z̄ = (∂²_x + ∂²_y)/4` and
/// `∂/∂z̄ = (∂_x + i ∂_y)/2`. The outermost ring is set to NaN and flagged
/// in the metadata.
pub fn tilde_delta_apply(psi: &GridFunction2D) -> Result<GridFunction2D> {
    let (nx, ny) = (psi.nx(), psi.ny());
    let (hx, hy) = (psi.hx(), psi.hy());
    let nan = Complex64::new(f64::NAN, f64::NAN);
    let mut values = vec![nan; nx * ny];
    for i in 1..nx - 1 {
        for j in 1..ny - 1 {
            let c = psi.get(i, j);
            let (e, w) = (psi.get(i + 1, j), psi.get(i - 1, j));
            let (n, s) = (psi.get(i, j + 1), psi.get(i, j - 1));
            let laplacian = (e - 2.0 * c + w) / (hx * hx) + (n - 2.0 * c + s) / (hy * hy);
            let dx = (e - w) / (2.0 * hx);
            let dy = (n - s) / (2.0 * hy);
            let dzbar = 0.5 * (dx + Complex64::i() * dy);
            values[psi.index(i, j)] = -0.25 * laplacian + psi.node(i, j).conj() * dzbar;
        }
    }
    let mut out = psi.with_values(values)?;
    out.meta.method = Some("tilde_delta".into());
    out.meta.invalid_ring = 1;
    Ok(out)
}
