//! Reduced knot Floer complexes over 𝔽₂\[U\].

mod format;
mod simplify;
mod staircase;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vec};

pub use format::{parse_complex, serialize_complex};
pub use simplify::{knot_invariants, simplify, Arrow, KnotInvariants, SimplifiedBases};
pub use staircase::{staircase, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub alexander: i64,
}

/// `∂(src)` contains `U^u_power · dst`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Entry {
    pub src: usize,
    pub dst: usize,
    pub u_power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotComplex {
    generators: Vec<Generator>,
    entries: Vec<Entry>,
}

impl KnotComplex {
    /// Builds a complex, cancelling repeated entries in pairs and sorting the rest. Indices must
    /// refer to `generators`; no invariant beyond that is checked here.
    pub fn new(generators: Vec<Generator>, entries: Vec<Entry>) -> Result<Self> {
        let n = generators.len();
        let mut names = BTreeSet::new();
        for g in &generators {
            if !names.insert(g.name.as_str()) {
                return Err(Error::InvalidComplex(format!("duplicate generator `{}`", g.name)));
            }
        }
        let mut counts: BTreeMap<Entry, usize> = BTreeMap::new();
        for e in entries {
            if e.src >= n || e.dst >= n {
                return Err(Error::InvalidComplex(format!("entry {e:?} out of range")));
            }
            *counts.entry(e).or_insert(0) += 1;
        }
        let entries = counts.into_iter().filter(|(_, c)| c % 2 == 1).map(|(e, _)| e).collect();
        Ok(KnotComplex { generators, entries })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn alexander(&self, i: usize) -> i64 {
        self.generators[i].alexander
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// `∂` reduced mod U, as a matrix with columns indexed by sources.
    pub fn vertical_matrix(&self) -> F2Matrix {
        let mut m = F2Matrix::zeros(self.len(), self.len());
        for e in self.entries.iter().filter(|e| e.u_power == 0) {
            m.flip(e.dst, e.src);
        }
        m
    }

    /// Entries preserving the horizontal level: `U^k y` with `k = A(y) − A(x)`.
    pub fn horizontal_entries(&self) -> impl Iterator<Item = &Entry> {
        self.entries
            .iter()
            .filter(move |e| e.u_power >= 1 && i64::from(e.u_power) == self.alexander(e.dst) - self.alexander(e.src))
    }

    pub fn horizontal_matrix(&self) -> F2Matrix {
        let mut m = F2Matrix::zeros(self.len(), self.len());
        for e in self.horizontal_entries() {
            m.flip(e.dst, e.src);
        }
        m
    }

    /// Terms of `∂²` that fail to cancel, as `(src, dst, u_power)`.
    pub fn d_squared(&self) -> Vec<Entry> {
        let mut out_of: Vec<Vec<&Entry>> = vec![Vec::new(); self.len()];
        for e in &self.entries {
            out_of[e.src].push(e);
        }
        let mut acc: BTreeMap<Entry, bool> = BTreeMap::new();
        for first in &self.entries {
            for second in &out_of[first.dst] {
                let key = Entry {
                    src: first.src,
                    dst: second.dst,
                    u_power: first.u_power + second.u_power,
                };
                *acc.entry(key).or_insert(false) ^= true;
            }
        }
        acc.into_iter().filter(|(_, odd)| *odd).map(|(e, _)| e).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let d_squared_zero = self.d_squared().is_empty();
        let filtered = self
            .entries
            .iter()
            .all(|e| self.alexander(e.dst) - i64::from(e.u_power) <= self.alexander(e.src));
        let reduced = self
            .entries
            .iter()
            .all(|e| e.u_power > 0 || self.alexander(e.dst) < self.alexander(e.src));
        let vertical_homology_rank = homology_rank(&self.vertical_matrix());
        let horizontal_homology_rank = homology_rank(&self.horizontal_matrix());
        let mut grades: Vec<i64> = self.generators.iter().map(|g| g.alexander).collect();
        let mut negated: Vec<i64> = grades.iter().map(|a| -a).collect();
        grades.sort_unstable();
        negated.sort_unstable();
        let mut warnings = Vec::new();
        if grades != negated {
            warnings.push("Alexander gradings are not symmetric under negation".to_string());
        }
        ValidationReport {
            d_squared_zero,
            filtered,
            reduced,
            vertical_homology_rank,
            horizontal_homology_rank,
            warnings,
        }
    }

    /// Returns the complex if every check passes.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::InvalidComplex(report.failures().join("; ")))
        }
    }
}

/// Homology dimension of a square differential over 𝔽₂; meaningless, but
/// finite, when `d² ≠ 0`.
fn homology_rank(d: &F2Matrix) -> usize {
    d.cols().saturating_sub(2 * d.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub d_squared_zero: bool,
    pub filtered: bool,
    pub reduced: bool,
    pub vertical_homology_rank: usize,
    pub horizontal_homology_rank: usize,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.d_squared_zero {
            out.push("d^2 != 0".to_string());
        }
        if !self.filtered {
            out.push("differential is not filtered".to_string());
        }
        if !self.reduced {
            out.push("complex is not reduced".to_string());
        }
        if self.vertical_homology_rank != 1 {
            out.push(format!("vertical homology has rank {}", self.vertical_homology_rank));
        }
        if self.horizontal_homology_rank != 1 {
            out.push(format!(
                "horizontal homology has rank {}",
                self.horizontal_homology_rank
            ));
        }
        out
    }
}

/// Support of a vector as generator names, for messages and tests.
pub fn describe(c: &KnotComplex, v: &F2Vec) -> String {
    let names: Vec<&str> = v.ones().map(|i| c.generators[i].name.as_str()).collect();
    if names.is_empty() {
        "0".to_string()
    } else {
        names.join(" + ")
    }
}
