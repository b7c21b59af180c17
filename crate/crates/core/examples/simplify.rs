//! Parse a knot complex, check it, and print its simplified bases.
//!
//! `cargo run --example simplify -- fixtures/figure_eight.cfk`

use bordered_splice::cfk::{parse_complex, simplify};

fn main() -> bordered_splice::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "fixtures/figure_eight.cfk".into());
    let complex = parse_complex(&std::fs::read_to_string(&path)?)?.validated()?;
    let s = simplify(&complex)?;

    println!(
        "tau = {}, genus = {}, L-space form = {}",
        s.tau, s.genus, s.invariants.lspace_form
    );
    for p in 0..s.dim() {
        println!(
            "xi{p} = {:<12} A={:>2}    eta{p} = {:<12} A={:>2}",
            s.describe(s.xi(p)),
            s.xi_alexander[p],
            s.describe(s.eta(p)),
            s.eta_alexander[p]
        );
    }
    for a in &s.vertical_arrows {
        println!("vertical   xi{} -> xi{}  length {}", a.source, a.target, a.length);
    }
    for a in &s.horizontal_arrows {
        println!("horizontal eta{} -> eta{} length {}", a.source, a.target, a.length);
    }
    Ok(())
}
