//! ℤ/2-graded homology ranks and the L-space test.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vec};
use crate::pairing::ChainComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GradedRanks {
    pub rank0: usize,
    pub rank1: usize,
}

impl GradedRanks {
    pub fn total(&self) -> usize {
        self.rank0 + self.rank1
    }

    pub fn euler_abs(&self) -> usize {
        self.rank0.abs_diff(self.rank1)
    }

    /// The same ranks with the two gradings exchanged.
    pub fn swapped(&self) -> GradedRanks {
        GradedRanks {
            rank0: self.rank1,
            rank1: self.rank0,
        }
    }
}

impl Serialize for GradedRanks {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.rank0, self.rank1].serialize(s)
    }
}

/// Ranks of `∂` from grading `g` to grading `1 − g`, for `g = 0, 1`.
fn block_ranks(c: &ChainComplex) -> [usize; 2] {
    let mut out = [0, 0];
    for (g, slot) in out.iter_mut().enumerate() {
        let sources: Vec<usize> = (0..c.len()).filter(|&i| c.gradings[i] as usize == g).collect();
        let targets: Vec<usize> = (0..c.len()).filter(|&i| c.gradings[i] as usize != g).collect();
        let columns: Vec<F2Vec> = sources
            .iter()
            .map(|&s| {
                let col = c.boundary.column(s);
                F2Vec::from_indices(
                    targets.len(),
                    targets.iter().enumerate().filter(|(_, &t)| col.get(t)).map(|(k, _)| k),
                )
            })
            .collect();
        *slot = F2Matrix::from_columns(targets.len(), columns).rank();
    }
    out
}

pub fn graded_homology(c: &ChainComplex) -> Result<GradedRanks> {
    if !c.flips_grading() {
        return Err(Error::Invariant("boundary preserves a grading".into()));
    }
    let dims = [0u8, 1].map(|g| c.gradings.iter().filter(|&&x| x == g).count());
    let [out0, out1] = block_ranks(c);
    Ok(GradedRanks {
        rank0: dims[0] - out0 - out1,
        rank1: dims[1] - out1 - out0,
    })
}

/// All homology in one grading.
pub fn lspace_verdict(r: &GradedRanks) -> Result<bool> {
    if r.total() == 0 {
        return Err(Error::Invariant("homology vanishes".into()));
    }
    Ok(r.rank0.min(r.rank1) == 0)
}
