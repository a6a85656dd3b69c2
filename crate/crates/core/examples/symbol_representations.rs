//! The Berezin symbol in its equivalent polynomial forms, and a sample of
//! its values against a direct Fourier-integral oracle.

use bargmann::rational::render;
use bargmann::symbols::{hhat_quadrature_oracle, symbol_poly, Multiplier, SpaceParams, SymbolRep};

fn main() -> bargmann::Result<()> {
    let params = SpaceParams::new(1, 2)?;
    let oracle = symbol_poly(params, SymbolRep::Oracle);
    for rep in SymbolRep::ALL {
        let poly = symbol_poly(params, rep);
        let coeffs: Vec<String> = poly.coeffs().iter().map(render).collect();
        let tag = if poly == oracle { "equal to oracle" } else { "differs from oracle" };
        println!("{:<9} P(t) = [{}]  {tag}", rep.as_str(), coeffs.join(", "));
    }

    let symbol = Multiplier::new(params, SymbolRep::Oracle);
    println!("\n{:>6} {:>22} {:>22}", "|xi|", "h_hat", "oracle");
    for k in 0..=8 {
        let xi = f64::from(k);
        let oracle = hhat_quadrature_oracle(params.m(), [xi, 0.0])?;
        println!("{xi:>6.1} {:>22.15e} {:>22.15e}", symbol.eval(xi * xi), oracle);
    }
    Ok(())
}
