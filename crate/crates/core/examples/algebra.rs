//! Multiplication table of the torus algebra and the swap-and-merge rule
//! that turns type D edge labels into type A words.

use bordered_splice::algebra::{swap_and_merge, BasisElement, ReebIndex};

fn main() {
    print!("{:>7}", "");
    for b in BasisElement::ALL {
        print!("{:>7}", b.to_string());
    }
    println!();
    for a in BasisElement::ALL {
        print!("{:>7}", a.to_string());
        for b in BasisElement::ALL {
            let cell = a.product(b).map_or("0".to_string(), |c| c.to_string());
            print!("{cell:>7}");
        }
        println!();
    }

    use ReebIndex::*;
    for labels in [
        vec![R1, R2],
        vec![R123, R2],
        vec![R3, R2, R1, R2],
        vec![R2, R3, R2, R1, R2],
    ] {
        let names: Vec<String> = labels.iter().map(|l| l.map_name()).collect();
        println!("{} -> ({})", names.join(" then "), swap_and_merge(&labels));
    }
}
