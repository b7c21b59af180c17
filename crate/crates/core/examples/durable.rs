//! Durable generators: pairs `(x, D123 x)` of the figure-eight complement
//! that survive in every splice.

use bordered_splice::cfk::{parse_complex, staircase, Sign};
use bordered_splice::splice::{splice_report, Knot};
use bordered_splice::type_d::find_durable_pairs;

fn main() -> bordered_splice::Result<()> {
    let text = std::fs::read_to_string("fixtures/figure_eight.cfk")?;
    let fig8 = Knot::new("figure-eight", parse_complex(&text)?)?;
    let trefoil = Knot::new("trefoil", staircase(&[1, 1], Sign::Plus)?)?;

    for n in -2..=2 {
        let m = fig8.cfd(n)?;
        for p in find_durable_pairs(&m, &fig8.bases) {
            println!(
                "framing {n:>2}: {:?} {} -> {}",
                p.strength,
                m.describe(&p.x),
                m.describe(&p.y)
            );
        }
        let r = splice_report(&fig8, n, &trefoil, 3)?;
        println!(
            "            splice with trefoil[3]: ranks ({}, {}), fast path {:?}",
            r.computed.rank0, r.computed.rank1, r.durable_fast_path
        );
    }
    Ok(())
}
