//! Dense linear algebra over the two-element field.
//!
//! Vectors are packed bitsets. Matrices are stored column-major because the
//! dominant use is "image of a basis vector" (coefficient maps, boundary
//! maps), so applying a matrix to a vector is an XOR of columns.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add_assign(&mut self, other: &F2Vec) {
        assert_eq!(self.len, other.len, "F2Vec length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        assert_eq!(self.len, other.len, "F2Vec length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    pub fn last_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(wi * WORD + (WORD - 1 - w.leading_zeros() as usize));
            }
        }
        None
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{s}]")
    }
}

/// `rows x cols` matrix; column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: Vec<F2Vec>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![F2Vec::zeros(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: (0..n).map(|i| F2Vec::unit(n, i)).collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<F2Vec>) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows));
        Self { rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cols[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cols[col].set(row, value);
    }

    pub fn flip(&mut self, row: usize, col: usize) {
        self.cols[col].flip(row);
    }

    pub fn column(&self, col: usize) -> &F2Vec {
        &self.cols[col]
    }

    pub fn columns(&self) -> &[F2Vec] {
        &self.cols
    }

    pub fn row(&self, row: usize) -> F2Vec {
        F2Vec::from_indices(self.cols(), (0..self.cols()).filter(|&j| self.cols[j].get(row)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(F2Vec::is_zero)
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.ones().map(move |i| (i, j)))
    }

    pub fn apply(&self, v: &F2Vec) -> F2Vec {
        assert_eq!(v.len(), self.cols(), "dimension mismatch in apply");
        let mut out = F2Vec::zeros(self.rows);
        for j in v.ones() {
            out.add_assign(&self.cols[j]);
        }
        out
    }

    /// Row vector times matrix: the functional `f ∘ self` on the source space.
    pub fn pull_back(&self, f: &F2Vec) -> F2Vec {
        assert_eq!(f.len(), self.rows, "dimension mismatch in pull_back");
        F2Vec::from_indices(self.cols(), (0..self.cols()).filter(|&j| self.cols[j].dot(f)))
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch in compose");
        F2Matrix {
            rows: self.rows,
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols(), other.cols());
        let mut out = self.clone();
        for (a, b) in out.cols.iter_mut().zip(&other.cols) {
            a.add_assign(b);
        }
        out
    }

    pub fn transpose(&self) -> F2Matrix {
        F2Matrix {
            rows: self.cols(),
            cols: (0..self.rows).map(|i| self.row(i)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rank_of(self.cols.iter().cloned())
    }

    pub fn inverse(&self) -> Option<F2Matrix> {
        let n = self.rows;
        if self.cols() != n {
            return None;
        }
        // Gauss-Jordan on rows of [A | I].
        let mut rows: Vec<(F2Vec, F2Vec)> = (0..n).map(|i| (self.row(i), F2Vec::unit(n, i))).collect();
        for c in 0..n {
            let pivot = (c..n).find(|&r| rows[r].0.get(c))?;
            rows.swap(c, pivot);
            let (pa, pb) = rows[c].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != c && row.0.get(c) {
                    row.0.add_assign(&pa);
                    row.1.add_assign(&pb);
                }
            }
        }
        let inv_rows: Vec<F2Vec> = rows.into_iter().map(|(_, b)| b).collect();
        Some(
            F2Matrix {
                rows: n,
                cols: inv_rows,
            }
            .transpose(),
        )
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols())?;
        for i in 0..self.rows {
            let s: String = (0..self.cols())
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Incremental echelon basis keyed by pivot (lowest set index).
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    basis: Vec<F2Vec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v.add_assign(b);
            }
        }
        v
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &F2Vec) -> bool {
        let r = self.reduce(v);
        match r.first_one() {
            None => false,
            Some(p) => {
                for (b, _) in self.basis.iter_mut().zip(&self.pivots) {
                    if b.get(p) {
                        b.add_assign(&r);
                    }
                }
                self.basis.push(r);
                self.pivots.push(p);
                true
            }
        }
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[F2Vec] {
        &self.basis
    }
}

pub fn rank_of(vectors: impl IntoIterator<Item = F2Vec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(&v);
    }
    e.rank()
}

/// Basis of the kernel of the linear map whose columns are `images`.
pub fn kernel(images: &[F2Vec], target_dim: usize) -> Vec<F2Vec> {
    let n = images.len();
    // Track combinations: (image, combination) pairs reduced together.
    let mut pivots: Vec<(usize, F2Vec, F2Vec)> = Vec::new();
    let mut kernel = Vec::new();
    for (j, img) in images.iter().enumerate() {
        assert_eq!(img.len(), target_dim);
        let mut v = img.clone();
        let mut comb = F2Vec::unit(n, j);
        for (p, b, c) in &pivots {
            if v.get(*p) {
                v.add_assign(b);
                comb.add_assign(c);
            }
        }
        match v.first_one() {
            None => kernel.push(comb),
            Some(p) => {
                for (_, b, c) in pivots.iter_mut() {
                    if b.get(p) {
                        b.add_assign(&v);
                        c.add_assign(&comb);
                    }
                }
                pivots.push((p, v, comb));
            }
        }
    }
    kernel
}

/// Basis of `span(a) ∩ span(b)`, vectors of length `dim`.
pub fn intersect(a: &[F2Vec], b: &[F2Vec], dim: usize) -> Vec<F2Vec> {
    // x = Σ s_i a_i = Σ t_j b_j  <=>  (s, t) in ker [A | B].
    let mut images: Vec<F2Vec> = a.to_vec();
    images.extend(b.iter().cloned());
    let mut out = Echelon::new();
    for comb in kernel(&images, dim) {
        let mut x = F2Vec::zeros(dim);
        for i in comb.ones().filter(|&i| i < a.len()) {
            x.add_assign(&a[i]);
        }
        out.insert(&x);
    }
    out.basis().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iterates_across_words() {
        let v = F2Vec::from_indices(150, [0, 63, 64, 149]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 149]);
        assert_eq!(v.last_one(), Some(149));
        assert_eq!(v.count_ones(), 4);
    }

    #[test]
    fn duplicate_indices_cancel() {
        let v = F2Vec::from_indices(4, [1, 1, 2]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = F2Matrix::from_columns(
            3,
            vec![
                F2Vec::from_indices(3, [0, 1]),
                F2Vec::from_indices(3, [1]),
                F2Vec::from_indices(3, [0, 2]),
            ],
        );
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.compose(&inv), F2Matrix::identity(3));
        assert_eq!(inv.compose(&m), F2Matrix::identity(3));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = F2Matrix::from_columns(2, vec![F2Vec::from_indices(2, [0, 1]), F2Vec::from_indices(2, [0, 1])]);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_and_intersection() {
        let imgs = vec![
            F2Vec::from_indices(2, [0]),
            F2Vec::from_indices(2, [0]),
            F2Vec::from_indices(2, [1]),
        ];
        let k = kernel(&imgs, 2);
        assert_eq!(k, vec![F2Vec::from_indices(3, [0, 1])]);

        let a = vec![F2Vec::from_indices(3, [0]), F2Vec::from_indices(3, [1])];
        let b = vec![F2Vec::from_indices(3, [0, 1]), F2Vec::from_indices(3, [2])];
        let i = intersect(&a, &b, 3);
        assert_eq!(i, vec![F2Vec::from_indices(3, [0, 1])]);
    }

    #[test]
    fn pull_back_is_row_times_matrix() {
        let m = F2Matrix::from_columns(2, vec![F2Vec::from_indices(2, [0]), F2Vec::from_indices(2, [0, 1])]);
        let f = F2Vec::unit(2, 1);
        assert_eq!(m.pull_back(&f), F2Vec::from_indices(2, [1]));
        assert_eq!(m.transpose().apply(&f), m.pull_back(&f));
    }
}
