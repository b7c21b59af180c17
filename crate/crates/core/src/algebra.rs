//! The torus algebra: two idempotents, six Reeb elements, and the handful of
//! nonzero products between them.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Relative ℤ/2 grading value, always 0 or 1.
pub type Z2 = u8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Idempotent {
    #[serde(rename = "iota0")]
    Zero,
    #[serde(rename = "iota1")]
    One,
}

impl Idempotent {
    pub fn index(self) -> usize {
        match self {
            Idempotent::Zero => 0,
            Idempotent::One => 1,
        }
    }
}

impl fmt::Display for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Idempotent::Zero => "iota0",
            Idempotent::One => "iota1",
        })
    }
}

/// One of the eight vector-space generators of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    Iota0,
    Iota1,
    Rho1,
    Rho2,
    Rho3,
    Rho12,
    Rho23,
    Rho123,
}

impl BasisElement {
    pub const ALL: [BasisElement; 8] = [
        BasisElement::Iota0,
        BasisElement::Iota1,
        BasisElement::Rho1,
        BasisElement::Rho2,
        BasisElement::Rho3,
        BasisElement::Rho12,
        BasisElement::Rho23,
        BasisElement::Rho123,
    ];

    pub fn bit(self) -> u8 {
        1 << (self as u8)
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self, BasisElement::Iota0 | BasisElement::Iota1)
    }

    pub fn reeb(self) -> Option<ReebIndex> {
        use BasisElement::*;
        Some(match self {
            Iota0 | Iota1 => return None,
            Rho1 => ReebIndex::R1,
            Rho2 => ReebIndex::R2,
            Rho3 => ReebIndex::R3,
            Rho12 => ReebIndex::R12,
            Rho23 => ReebIndex::R23,
            Rho123 => ReebIndex::R123,
        })
    }

    fn iota(i: Idempotent) -> BasisElement {
        match i {
            Idempotent::Zero => BasisElement::Iota0,
            Idempotent::One => BasisElement::Iota1,
        }
    }

    /// `(left, right)` idempotents: `left · self · right = self`.
    pub fn idempotents(self) -> (Idempotent, Idempotent) {
        match self {
            BasisElement::Iota0 => (Idempotent::Zero, Idempotent::Zero),
            BasisElement::Iota1 => (Idempotent::One, Idempotent::One),
            other => other.reeb().expect("reeb element").idempotents().expect("nonempty"),
        }
    }

    pub fn product(self, rhs: BasisElement) -> Option<BasisElement> {
        match (self.is_idempotent(), rhs.is_idempotent()) {
            (true, true) => (self == rhs).then_some(self),
            (true, false) => (BasisElement::iota(rhs.idempotents().0) == self).then_some(rhs),
            (false, true) => (BasisElement::iota(self.idempotents().1) == rhs).then_some(self),
            (false, false) => {
                let a = self.reeb().expect("reeb");
                let b = rhs.reeb().expect("reeb");
                a.product(b).map(|c| c.basis().expect("nonempty index"))
            }
        }
    }

    /// Grading of the element; idempotents sit in grading 0.
    pub fn grading(self) -> Z2 {
        match self.reeb() {
            None => 0,
            Some(r) => r.grading(),
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reeb() {
            Some(r) => write!(f, "{r}"),
            None => f.write_str(if *self == BasisElement::Iota0 { "iota0" } else { "iota1" }),
        }
    }
}

/// An element of the algebra, stored as its support over 𝔽₂.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement(u8);

impl AlgebraElement {
    pub const ZERO: AlgebraElement = AlgebraElement(0);
    pub const ONE: AlgebraElement = AlgebraElement(0b11);

    pub fn basis(b: BasisElement) -> Self {
        AlgebraElement(b.bit())
    }

    pub fn from_support(bits: u8) -> Self {
        AlgebraElement(bits)
    }

    pub fn support_bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn support(self) -> impl Iterator<Item = BasisElement> {
        BasisElement::ALL.into_iter().filter(move |b| self.0 & b.bit() != 0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: Self) -> Self {
        AlgebraElement(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: Self) -> Self {
        let mut out = 0u8;
        for a in self.support() {
            for b in rhs.support() {
                if let Some(c) = a.product(b) {
                    out ^= c.bit();
                }
            }
        }
        AlgebraElement(out)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.support().map(|b| b.to_string()).collect();
        f.write_str(&terms.join(" + "))
    }
}

impl From<BasisElement> for AlgebraElement {
    fn from(b: BasisElement) -> Self {
        AlgebraElement::basis(b)
    }
}

/// Index of a coefficient map: `∅` (the unit) or one of the six Reeb chords.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReebIndex {
    Empty,
    R1,
    R2,
    R3,
    R12,
    R23,
    R123,
}

impl ReebIndex {
    /// All seven indices; position in this array is the index's `slot`.
    pub const ALL: [ReebIndex; 7] = [
        ReebIndex::Empty,
        ReebIndex::R1,
        ReebIndex::R2,
        ReebIndex::R3,
        ReebIndex::R12,
        ReebIndex::R23,
        ReebIndex::R123,
    ];

    pub const CHORDS: [ReebIndex; 6] = [
        ReebIndex::R1,
        ReebIndex::R2,
        ReebIndex::R3,
        ReebIndex::R12,
        ReebIndex::R23,
        ReebIndex::R123,
    ];

    pub fn slot(self) -> usize {
        self as usize
    }

    pub fn is_empty(self) -> bool {
        self == ReebIndex::Empty
    }

    pub fn basis(self) -> Option<BasisElement> {
        Some(match self {
            ReebIndex::Empty => return None,
            ReebIndex::R1 => BasisElement::Rho1,
            ReebIndex::R2 => BasisElement::Rho2,
            ReebIndex::R3 => BasisElement::Rho3,
            ReebIndex::R12 => BasisElement::Rho12,
            ReebIndex::R23 => BasisElement::Rho23,
            ReebIndex::R123 => BasisElement::Rho123,
        })
    }

    /// The algebra element `ρ_I`, with `ρ_∅ = ι₀ + ι₁`.
    pub fn element(self) -> AlgebraElement {
        match self.basis() {
            Some(b) => b.into(),
            None => AlgebraElement::ONE,
        }
    }

    /// `(left, right)` idempotents of `ρ_I`; `None` for the unit.
    pub fn idempotents(self) -> Option<(Idempotent, Idempotent)> {
        use Idempotent::{One, Zero};
        Some(match self {
            ReebIndex::Empty => return None,
            ReebIndex::R1 => (Zero, One),
            ReebIndex::R2 => (One, Zero),
            ReebIndex::R3 => (Zero, One),
            ReebIndex::R12 => (Zero, Zero),
            ReebIndex::R23 => (One, One),
            ReebIndex::R123 => (Zero, One),
        })
    }

    pub fn grading(self) -> Z2 {
        match self {
            ReebIndex::Empty | ReebIndex::R1 | ReebIndex::R3 => 0,
            ReebIndex::R2 | ReebIndex::R12 | ReebIndex::R23 | ReebIndex::R123 => 1,
        }
    }

    /// Product of two chords, if nonzero. The unit is neutral.
    pub fn product(self, rhs: ReebIndex) -> Option<ReebIndex> {
        use ReebIndex::*;
        match (self, rhs) {
            (Empty, x) | (x, Empty) => Some(x),
            (R1, R2) => Some(R12),
            (R2, R3) => Some(R23),
            (R1, R23) | (R12, R3) => Some(R123),
            _ => None,
        }
    }

    pub fn digits(self) -> &'static [u8] {
        match self {
            ReebIndex::Empty => &[],
            ReebIndex::R1 => &[1],
            ReebIndex::R2 => &[2],
            ReebIndex::R3 => &[3],
            ReebIndex::R12 => &[1, 2],
            ReebIndex::R23 => &[2, 3],
            ReebIndex::R123 => &[1, 2, 3],
        }
    }

    fn from_digit(d: u8) -> ReebIndex {
        match d {
            1 => ReebIndex::R1,
            2 => ReebIndex::R2,
            3 => ReebIndex::R3,
            _ => unreachable!("digit {d}"),
        }
    }

    /// Digit string used in `D_12`, `rho12` and the file formats.
    pub fn suffix(self) -> &'static str {
        match self {
            ReebIndex::Empty => "",
            ReebIndex::R1 => "1",
            ReebIndex::R2 => "2",
            ReebIndex::R3 => "3",
            ReebIndex::R12 => "12",
            ReebIndex::R23 => "23",
            ReebIndex::R123 => "123",
        }
    }

    pub fn map_name(self) -> String {
        match self {
            ReebIndex::Empty => "D_empty".to_string(),
            other => format!("D{}", other.suffix()),
        }
    }
}

impl fmt::Display for ReebIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReebIndex::Empty => f.write_str("1"),
            other => write!(f, "rho{}", other.suffix()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a Reeb index: {0:?}")]
pub struct ParseReebError(String);

impl FromStr for ReebIndex {
    type Err = ParseReebError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .trim()
            .trim_start_matches("rho")
            .trim_start_matches('D')
            .trim_start_matches('_');
        Ok(match digits {
            "" | "empty" | "0" => ReebIndex::Empty,
            "1" => ReebIndex::R1,
            "2" => ReebIndex::R2,
            "3" => ReebIndex::R3,
            "12" => ReebIndex::R12,
            "23" => ReebIndex::R23,
            "123" => ReebIndex::R123,
            _ => return Err(ParseReebError(s.to_string())),
        })
    }
}

/// Ordered sequence of Reeb chords: the algebra inputs of an A∞ operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReebWord(Vec<ReebIndex>);

impl ReebWord {
    pub fn new(letters: Vec<ReebIndex>) -> Self {
        debug_assert!(letters.iter().all(|l| !l.is_empty()));
        ReebWord(letters)
    }

    pub fn empty() -> Self {
        ReebWord(Vec::new())
    }

    pub fn letters(&self) -> &[ReebIndex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_merged(&self) -> bool {
        self.0.windows(2).all(|w| w[0].product(w[1]).is_none())
    }

    pub fn grading(&self) -> Z2 {
        self.0.iter().map(|l| l.grading()).sum::<u8>() % 2
    }
}

impl fmt::Display for ReebWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Each label becomes its digit string with 1 and 3 exchanged; the letters
/// are concatenated in order and then adjacent letters with a nonzero
/// product are multiplied until no product applies.
pub fn swap_and_merge(labels: &[ReebIndex]) -> ReebWord {
    let mut letters: Vec<ReebIndex> = labels
        .iter()
        .flat_map(|l| l.digits().iter().map(|&d| ReebIndex::from_digit(4 - d)))
        .collect();
    merge_fully(&mut letters);
    ReebWord(letters)
}

fn merge_fully(letters: &mut Vec<ReebIndex>) {
    let mut i = 0;
    while i + 1 < letters.len() {
        if let Some(p) = letters[i].product(letters[i + 1]) {
            letters[i] = p;
            letters.remove(i + 1);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use ReebIndex::*;

    #[test]
    fn products_from_the_table() {
        assert_eq!(R1.product(R2), Some(R12));
        assert_eq!(R2.product(R1), None);
        assert_eq!(R12.product(R3), Some(R123));
        assert_eq!(R1.product(R23), Some(R123));
        assert_eq!(R3.product(R2), None);
        let one = AlgebraElement::ONE;
        let r23 = AlgebraElement::basis(BasisElement::Rho23);
        assert_eq!(one * r23, r23);
        assert_eq!(
            AlgebraElement::basis(BasisElement::Rho2) * AlgebraElement::basis(BasisElement::Rho1),
            AlgebraElement::ZERO
        );
    }

    #[test]
    fn gradings() {
        assert_eq!(R3.grading(), 0);
        assert_eq!(R123.grading(), 1);
        assert_eq!(Empty.grading(), 0);
        assert_eq!(BasisElement::Iota1.grading(), 0);
    }

    #[test]
    fn idempotent_rows() {
        use BasisElement::*;
        assert_eq!(Iota0.product(Rho1), Some(Rho1));
        assert_eq!(Rho1.product(Iota1), Some(Rho1));
        assert_eq!(Iota1.product(Rho1), None);
        assert_eq!(Iota1.product(Rho2), Some(Rho2));
        assert_eq!(Rho2.product(Iota0), Some(Rho2));
        assert_eq!(Iota0.product(Rho12), Some(Rho12));
        assert_eq!(Rho12.product(Iota0), Some(Rho12));
        assert_eq!(Iota1.product(Rho23), Some(Rho23));
        assert_eq!(Rho123.product(Iota1), Some(Rho123));
        assert_eq!(Iota0.product(Iota1), None);
    }

    #[test]
    fn swap_and_merge_examples() {
        assert_eq!(swap_and_merge(&[R3, R2]).letters(), &[R12]);
        assert_eq!(swap_and_merge(&[R2, R12]).letters(), &[R23, R2]);
        assert_eq!(swap_and_merge(&[R123, R2]).letters(), &[R3, R2, R12]);
        assert_eq!(swap_and_merge(&[R123]).letters(), &[R3, R2, R1]);
        assert_eq!(swap_and_merge(&[Empty]).letters(), &[] as &[ReebIndex]);
        assert_eq!(swap_and_merge(&[R3, R2, R1]).letters(), &[R123]);
        assert_eq!(swap_and_merge(&[R2, R123, R2]).letters(), &[R23, R2, R12]);
        assert_eq!(swap_and_merge(&[R12, R2, R3]).letters(), &[R3, R2, R2, R1]);
    }

    #[test]
    fn single_label_never_merges() {
        for l in ReebIndex::CHORDS {
            let digits: Vec<ReebIndex> = l.digits().iter().map(|&d| ReebIndex::from_digit(4 - d)).collect();
            assert_eq!(swap_and_merge(&[l]).letters(), digits.as_slice(), "{l}");
        }
    }

    fn label() -> impl Strategy<Value = ReebIndex> {
        prop::sample::select(ReebIndex::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn merge_order_does_not_matter(labels in prop::collection::vec(label(), 0..=6),
                                       seed in any::<u64>()) {
            let canonical = swap_and_merge(&labels);
            prop_assert!(canonical.is_merged());
            // Merge in a pseudo-random order instead of left to right.
            let mut letters: Vec<ReebIndex> = labels
                .iter()
                .flat_map(|l| l.digits().iter().map(|&d| ReebIndex::from_digit(4 - d)))
                .collect();
            let mut state = seed | 1;
            loop {
                let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&i| letters[i].product(letters[i + 1]).is_some())
                    .collect();
                if spots.is_empty() { break; }
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let i = spots[(state >> 33) as usize % spots.len()];
                letters[i] = letters[i].product(letters[i + 1]).unwrap();
                letters.remove(i + 1);
            }
            prop_assert_eq!(letters.as_slice(), canonical.letters());
        }
    }
}
