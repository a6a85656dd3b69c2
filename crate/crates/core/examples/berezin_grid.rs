//! Berezin transform of a sampled field with both backends, then a round
//! trip through the grid file format.
//!
//! cargo run --release --example berezin_grid -- /tmp/berezin

use std::path::PathBuf;

use bargmann::kernel::CPoint;
use bargmann::symbols::SymbolRep;
use bargmann::transform::{berezin_direct, berezin_spectral, GridFunction2D};
use num_complex::Complex64;

fn main() -> bargmann::Result<()> {
    let phi = GridFunction2D::from_fn(256, 256, (-8.0, 8.0), (-8.0, 8.0), |w| {
        let s = w - Complex64::new(0.5, 0.0);
        Complex64::new((-0.5 * s.norm_sqr()).exp() * (1.0 + 0.3 * w.im), 0.0)
    })?;

    let probes = [(128, 128), (140, 120), (110, 150)];
    for m in 0..=3 {
        let spectral = berezin_spectral(&phi, m, SymbolRep::Oracle)?;
        let points: Vec<CPoint> = probes.iter().map(|&(i, j)| CPoint::planar(phi.node(i, j))).collect();
        let direct = berezin_direct(&phi, m, &points)?;
        let gap = probes
            .iter()
            .zip(&direct)
            .map(|(&(i, j), d)| (spectral.get(i, j) - d).norm())
            .fold(0.0, f64::max);
        println!("m = {m}: B_m[phi](center) = {:.10}, backend gap {gap:.1e}", spectral.get(128, 128).re);
    }

    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    let manifest = dir.join("berezin_m2.json");
    berezin_spectral(&phi, 2, SymbolRep::KappaForm)?.write(&manifest)?;
    let back = GridFunction2D::read(&manifest)?;
    println!("wrote {} ({}x{} nodes)", manifest.display(), back.nx(), back.ny());
    Ok(())
}
