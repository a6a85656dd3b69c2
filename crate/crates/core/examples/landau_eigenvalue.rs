//! Finite-difference check that kernel sections are eigenfunctions of the
//! Landau operator with eigenvalue m.

use bargmann::kernel::{reproducing_kernel, CPoint};
use bargmann::symbols::SpaceParams;
use bargmann::transform::{tilde_delta_apply, GridFunction2D};
use num_complex::Complex64;

fn relative_error(m: u32, size: usize) -> bargmann::Result<f64> {
    let params = SpaceParams::new(1, m)?;
    let w0 = CPoint::planar(Complex64::new(0.3, -0.2));
    let psi = GridFunction2D::from_fn(size, size, (-1.0, 1.0), (-1.0, 1.0), |z| {
        reproducing_kernel(params, &CPoint::planar(z), &w0).expect("planar points")
    })?;
    let out = tilde_delta_apply(&psi)?;
    let (mut num, mut den) = (0.0f64, 0.0f64);
    for i in 0..size {
        for j in 0..size {
            if out.is_valid(i, j) {
                num = num.max((out.get(i, j) - psi.get(i, j) * f64::from(m)).norm());
                den = den.max(psi.get(i, j).norm());
            }
        }
    }
    Ok(num / den)
}

fn main() -> bargmann::Result<()> {
    println!("{:>3} {:>6} {:>12} {:>8}", "m", "nodes", "rel error", "order");
    for m in 0..=3 {
        let mut previous: Option<f64> = None;
        for size in [17, 33, 65, 129] {
            let err = relative_error(m, size)?;
            let order = previous.map_or(String::new(), |p| format!("{:.3}", (p / err).log2()));
            println!("{m:>3} {size:>6} {err:>12.3e} {order:>8}");
            previous = Some(err);
        }
    }
    Ok(())
}
