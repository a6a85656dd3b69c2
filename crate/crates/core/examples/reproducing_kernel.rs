//! Reproducing kernels on C^2: closed form against the truncated series, and
//! positivity of a Gram matrix.

use bargmann::kernel::{gram_matrix, is_positive_semidefinite, kernel_series, reproducing_kernel, CPoint};
use bargmann::symbols::SpaceParams;

fn main() -> bargmann::Result<()> {
    let z = CPoint::from_reals(&[0.3, -0.7, 1.1, 0.2])?;
    let w = CPoint::from_reals(&[-0.4, 0.5, 0.6, 0.9])?;
    for m in 0..=3 {
        let params = SpaceParams::new(2, m)?;
        let exact = reproducing_kernel(params, &z, &w)?;
        print!("m = {m}: K = {exact:.12}");
        for p_max in [10, 20, 40, 80] {
            let series = kernel_series(params, &z, &w, p_max)?;
            print!("  rel err({p_max}) = {:.1e}", (series - exact).norm() / exact.norm());
        }
        println!();
    }

    let points: Vec<CPoint> = (0..8)
        .map(|k| {
            let t = f64::from(k);
            CPoint::from_reals(&[t.cos(), (2.0 * t).sin(), 0.3 * t - 1.0, 0.5]).expect("four reals")
        })
        .collect();
    let gram = gram_matrix(SpaceParams::new(2, 2)?, &points)?;
    println!("8x8 Gram matrix positive semidefinite: {}", is_positive_semidefinite(&gram, 1e-10));
    Ok(())
}
