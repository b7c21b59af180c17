//! Box tensor product of a type A and a type D module.

use std::collections::HashMap;

use crate::algebra::{ReebIndex, ReebWord, Z2};
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::type_a::TypeAModule;
use crate::type_d::{solve_gradings, TypeDModule};

/// A ℤ/2-graded chain complex over 𝔽₂.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// `(type A generator, type D generator)`.
    pub generators: Vec<(usize, usize)>,
    pub gradings: Vec<Z2>,
    /// Columns are sources.
    pub boundary: F2Matrix,
}

impl ChainComplex {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, a: usize, d: usize) -> Option<usize> {
        self.generators.iter().position(|&g| g == (a, d))
    }

    pub fn d_squared_zero(&self) -> bool {
        self.boundary.compose(&self.boundary).is_zero()
    }

    /// Every boundary entry joins generators of opposite grading.
    pub fn flips_grading(&self) -> bool {
        self.boundary
            .nonzero_entries()
            .all(|(dst, src)| self.gradings[dst] != self.gradings[src])
    }

    /// Generator has no boundary entries in or out.
    pub fn isolated(&self, i: usize) -> bool {
        self.boundary.column(i).is_zero() && self.boundary.row(i).is_zero()
    }
}

/// `CFA ⊠ CFD`: pairs `x ⊗ y` of matching idempotent, with differential
/// from A∞ operations against compositions of coefficient maps, `D_∅`
/// edges of `d`, and `m₁` operations of `a`.
pub fn box_tensor(a: &TypeAModule, d: &TypeDModule) -> Result<ChainComplex> {
    if a.path_cap().is_some() && !d.is_bounded() {
        return Err(Error::Unbounded("both sides of the pairing are unbounded".into()));
    }
    let d = match d.gradings() {
        Some(_) => d.clone(),
        None => solve_gradings(d)?,
    };
    let dgr = d.gradings().unwrap();

    let mut generators = Vec::new();
    let mut gradings = Vec::new();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, x) in a.generators().iter().enumerate() {
        for (j, gr) in dgr.iter().enumerate() {
            if d.idempotent(j) == x.idempotent {
                index.insert((i, j), generators.len());
                generators.push((i, j));
                gradings.push((x.grading + gr) % 2);
            }
        }
    }
    let n = generators.len();
    let mut boundary = F2Matrix::zeros(n, n);

    let mut words: HashMap<&ReebWord, F2Matrix> = HashMap::new();
    for op in a.operations() {
        if op.word.is_empty() {
            for j in 0..d.len() {
                if let (Some(&s), Some(&t)) = (index.get(&(op.input, j)), index.get(&(op.output, j))) {
                    boundary.flip(t, s);
                }
            }
            continue;
        }
        let matrix = words
            .entry(&op.word)
            .or_insert_with(|| d.compose_word(op.word.letters()));
        for (y_out, y_in) in matrix.nonzero_entries() {
            let source = index.get(&(op.input, y_in));
            let target = index.get(&(op.output, y_out));
            match (source, target) {
                (Some(&s), Some(&t)) => boundary.flip(t, s),
                _ => {
                    return Err(Error::Idempotent(format!(
                        "operation {} meets a mismatched idempotent",
                        a.format_op(op)
                    )))
                }
            }
        }
    }
    for (y_out, y_in) in d.map(ReebIndex::Empty).nonzero_entries() {
        for i in 0..a.len() {
            if let (Some(&s), Some(&t)) = (index.get(&(i, y_in)), index.get(&(i, y_out))) {
                boundary.flip(t, s);
            }
        }
    }
    Ok(ChainComplex {
        generators,
        gradings,
        boundary,
    })
}
