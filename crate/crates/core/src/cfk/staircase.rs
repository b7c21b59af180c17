use serde::{Deserialize, Serialize};

use super::{Entry, Generator, KnotComplex};
use crate::error::{Error, Result};

/// Orientation of a staircase: `Plus` for positive L-space knots, `Minus`
/// for their mirrors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Staircase complex with generators `x0 … x2k` whose consecutive Alexander
/// gaps are `steps`.
pub fn staircase(steps: &[u32], sign: Sign) -> Result<KnotComplex> {
    if steps.is_empty() || steps.len() % 2 == 1 {
        return Err(Error::Staircase(format!(
            "need a nonempty step vector of even length, got {} steps",
            steps.len()
        )));
    }
    if steps.contains(&0) {
        return Err(Error::Staircase("steps must be positive".into()));
    }
    if steps.iter().ne(steps.iter().rev()) {
        return Err(Error::Staircase(format!("steps {steps:?} are not palindromic")));
    }
    let len = steps.len();
    let half: i64 = steps[..len / 2].iter().map(|&b| i64::from(b)).sum();
    let mut grades = vec![-half];
    for &b in steps {
        grades.push(grades.last().unwrap() + i64::from(b));
    }
    let generators = grades
        .iter()
        .enumerate()
        .map(|(i, &a)| Generator {
            name: format!("x{i}"),
            alexander: a,
        })
        .collect();

    let mut entries = Vec::new();
    let vertical = |i: usize| Entry {
        src: i,
        dst: i - 1,
        u_power: 0,
    };
    let horizontal = |i: usize| Entry {
        src: i,
        dst: i + 1,
        u_power: steps[i],
    };
    match sign {
        Sign::Plus => {
            for i in (1..len).step_by(2) {
                entries.push(vertical(i));
                entries.push(horizontal(i));
            }
        }
        Sign::Minus => {
            entries.push(horizontal(0));
            for i in (2..len).step_by(2) {
                entries.push(vertical(i));
                entries.push(horizontal(i));
            }
            entries.push(vertical(len));
        }
    }
    KnotComplex::new(generators, entries)
}
