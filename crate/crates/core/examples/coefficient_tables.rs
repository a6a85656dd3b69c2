//! Exact coefficient families for one level, and how each printed closed
//! form compares with the exact expansion.
//!
//! cargo run --example coefficient_tables -- 2 3

use bargmann::rational::render;
use bargmann::symbols::{convention_report, CoeffTable, SpaceParams};

fn main() -> bargmann::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, m) = (args.first().copied().unwrap_or(1), args.get(1).copied().unwrap_or(2));
    let params = SpaceParams::new(n, m)?;
    let table = CoeffTable::new(params);

    println!("n = {n}, m = {m}");
    println!("{:>3} {:>14} {:>14} {:>14} {:>14}", "j", "gamma", "sigma", "c", "kappa");
    for j in 0..table.gamma.len() {
        println!(
            "{j:>3} {:>14} {:>14} {:>14} {:>14}",
            render(&table.gamma[j]),
            render(&table.sigma[j]),
            render(&table.c[j]),
            render(&table.kappa[j])
        );
    }
    println!("unit mass identity holds: {}", table.mass_identity_holds());

    for family in convention_report(params).families {
        let adjustment = family.adjustment.map_or("none".to_string(), |a| a.to_string());
        println!("{:<9} {:<24} adjustment {adjustment}", family.family.as_str(), family.verdict.as_str());
    }
    Ok(())
}
