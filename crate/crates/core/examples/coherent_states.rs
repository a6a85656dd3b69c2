//! Coherent states in the plane: overlaps, the resolution of the identity,
//! and the lower symbol of a plane wave.

use bargmann::coherent::{expectation_quadrature, overlap, resolution_check, DEFAULT_QUAD_RADIUS};
use bargmann::kernel::CPoint;
use bargmann::symbols::{Multiplier, SpaceParams, SymbolRep};
use num_complex::Complex64;

fn main() -> bargmann::Result<()> {
    let z = CPoint::planar(Complex64::new(0.5, 0.25));
    for m in 0..=3 {
        let params = SpaceParams::new(1, m)?;
        let w = CPoint::planar(Complex64::new(1.25, -0.5));
        let resolution = resolution_check(m, &z, DEFAULT_QUAD_RADIUS)?;
        println!(
            "m = {m}: |<z|w>| = {:.6}, resolution of identity = {resolution:.12}",
            overlap(params, &z, &w)?.norm()
        );

        // the lower symbol of e^{i xi.w} is the Fourier multiplier times the wave
        let xi = [1.0, 0.5];
        let wave = |w: Complex64| Complex64::from_polar(1.0, xi[0] * w.re + xi[1] * w.im);
        let lower = expectation_quadrature(m, wave, &z)?;
        let predicted = wave(z.coords()[0]) * Multiplier::new(params, SymbolRep::Oracle).eval(1.25);
        println!("        lower symbol {lower:.10}, multiplier prediction {predicted:.10}");
    }
    Ok(())
}
