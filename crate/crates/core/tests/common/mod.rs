#![allow(dead_code)]

use std::path::PathBuf;

use bordered_splice::cfk::{parse_complex, staircase, Sign};
use bordered_splice::splice::Knot;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture(name: &str) -> Knot {
    let text = std::fs::read_to_string(fixture_path(&format!("{name}.cfk"))).unwrap();
    Knot::new(name, parse_complex(&text).unwrap()).unwrap()
}

pub fn stair(steps: &[u32], sign: Sign) -> Knot {
    let name = format!("staircase{steps:?}{sign:?}");
    Knot::new(name, staircase(steps, sign).unwrap()).unwrap()
}
