//! Type D modules of the trefoil complement across framings, with their
//! structure checks.

use bordered_splice::algebra::Idempotent;
use bordered_splice::cfk::{staircase, Sign};
use bordered_splice::splice::Knot;
use bordered_splice::type_d::solve_gradings;

fn main() -> bordered_splice::Result<()> {
    let trefoil = Knot::new("trefoil", staircase(&[1, 1], Sign::Plus)?)?;
    for n in -1..=4 {
        let m = trefoil.cfd(n)?;
        let report = m.validate();
        println!(
            "framing {n:>2}: {} generators ({} in iota1), {} edges, bounded {}, checks {}",
            m.len(),
            m.idempotent_dim(Idempotent::One),
            m.edges().len(),
            report.bounded,
            if report.passed() { "ok" } else { "FAILED" }
        );
    }
    println!();
    print!("{}", solve_gradings(&trefoil.cfd(2)?)?.to_text());
    Ok(())
}
