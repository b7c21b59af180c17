//! Type A operations derived from a type D module by path enumeration.

use bordered_splice::algebra::ReebIndex;
use bordered_splice::cfk::{staircase, Sign};
use bordered_splice::splice::Knot;
use bordered_splice::type_a::derive_cfa;

fn main() -> bordered_splice::Result<()> {
    let k = Knot::new("T(3,4)", staircase(&[1, 2, 2, 1], Sign::Plus)?)?;
    let n = 2 * k.tau();
    let a = derive_cfa(&k.cfd(n)?)?;
    println!(
        "{} at framing {n}: {} operations, longest word {}",
        k.name,
        a.operations().len(),
        a.max_word_length()
    );
    print!("{}", a.to_text());

    use ReebIndex::*;
    let probe = a.contains("y3_1", &[R2, R123, R2], "x0");
    println!("\nm4(y3_1, rho2, rho123, rho2) = x0 present: {probe}");
    println!("grading law holds: {}", a.validate().passed());
    Ok(())
}
