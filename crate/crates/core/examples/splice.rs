//! One splice end to end: CFA of side 1, CFD of side 2, box tensor,
//! graded homology, and the predicted answer.

use bordered_splice::cfk::{staircase, Sign};
use bordered_splice::homology::graded_homology;
use bordered_splice::splice::{splice_pipeline, splice_report, Knot};

fn main() -> bordered_splice::Result<()> {
    let trefoil = Knot::new("trefoil", staircase(&[1, 1], Sign::Plus)?)?;
    let mirror = Knot::new("mirror", staircase(&[1, 1], Sign::Minus)?)?;

    let p = splice_pipeline(&trefoil, 3, &trefoil, 2)?;
    println!(
        "CFA {} generators x CFD {} generators -> complex of {} generators",
        p.cfa1.len(),
        p.cfd2.len(),
        p.complex.len()
    );
    println!("ranks {:?}", graded_homology(&p.complex)?);

    for (k2, n1, n2) in [(&trefoil, 3, 2), (&trefoil, 2, 2), (&mirror, 2, -2), (&mirror, 1, -3)] {
        let r = splice_report(&trefoil, n1, k2, n2)?;
        println!("{}", serde_json::to_string(&r).unwrap());
    }
    Ok(())
}
