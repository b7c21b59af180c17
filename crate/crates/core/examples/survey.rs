//! A framing grid for trefoil x trefoil, drawn as a table of verdicts.
//! `L` marks an L-space, `.` a non-L-space, and `!` a disagreement with
//! the predicted answer.

use bordered_splice::cfk::{staircase, Sign};
use bordered_splice::splice::{survey, Knot};

fn main() -> bordered_splice::Result<()> {
    let trefoil = Knot::new("trefoil", staircase(&[1, 1], Sign::Plus)?)?;
    let (r1, r2) = (-3..=6, -3..=6);
    let s = survey(&trefoil, r1.clone(), &trefoil, r2.clone())?;

    print!("n1\\n2");
    for n2 in r2.clone() {
        print!("{n2:>3}");
    }
    println!();
    for n1 in r1 {
        print!("{n1:>5}");
        for r in s.rows.iter().filter(|r| r.n1 == n1) {
            let mark = match (r.agree, r.verdict) {
                (false, _) => '!',
                (true, true) => 'L',
                (true, false) => '.',
            };
            print!("{mark:>3}");
        }
        println!();
    }
    println!("{} agreements, {} disagreements", s.agreements, s.disagreements);
    Ok(())
}
