//! Two Hankel-type integrals by Gauss–Laguerre quadrature against their
//! Laguerre closed forms.

use bargmann::hankel::{
    laguerre_bessel_closed_form, laguerre_bessel_integral, monomial_bessel_closed_form,
    monomial_bessel_integral, DEFAULT_NODES,
};
use bargmann::quadrature::GaussLaguerre;

fn main() -> bargmann::Result<()> {
    let rule = GaussLaguerre::new(DEFAULT_NODES)?;
    println!("{:>2} {:>2} {:>5} {:>12} {:>12}", "s", "nu", "z", "err (x^k J)", "err (L J)");
    for s in 0..=3 {
        for nu in 0..=2 {
            for z in [0.5, 1.0, 2.0] {
                let a = monomial_bessel_integral(&rule, s, nu, z) - monomial_bessel_closed_form(s, nu, z)?;
                let u = 2.0 * f64::sqrt(z);
                let b = laguerre_bessel_integral(&rule, s, nu, u) - laguerre_bessel_closed_form(s, nu, u);
                println!("{s:>2} {nu:>2} {z:>5.2} {:>12.2e} {:>12.2e}", a.abs(), b.abs());
            }
        }
    }
    Ok(())
}
