use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{KnotComplex, Sign};
use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vec};

/// An arrow between basis elements `source = 2j−1` and `target = 2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub length: u32,
}

/// Vertically and horizontally simplified bases of a reduced complex,
/// written at `U = 0` in the coordinates of the input generators.
#[derive(Clone, Debug)]
pub struct SimplifiedBases {
    pub generator_names: Vec<String>,
    pub generator_alexander: Vec<i64>,
    /// Column `p` is `ξ_p`.
    pub xi_basis: F2Matrix,
    /// Column `p` is `η_p`.
    pub eta_basis: F2Matrix,
    pub xi_alexander: Vec<i64>,
    pub eta_alexander: Vec<i64>,
    pub vertical_arrows: Vec<Arrow>,
    pub horizontal_arrows: Vec<Arrow>,
    /// `a[q][p] = 1` iff `η_p` occurs in `ξ_q`.
    pub a_matrix: F2Matrix,
    /// `b[p][q] = 1` iff `ξ_q` occurs in `η_p`.
    pub b_matrix: F2Matrix,
    pub tau: i64,
    pub genus: i64,
    /// Every `η_p` is a sum of `ξ`'s in its own Alexander grading.
    pub compatible: bool,
    pub invariants: KnotInvariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotInvariants {
    pub tau: i64,
    pub genus: i64,
    pub lspace_form: bool,
    pub sign: Option<Sign>,
    pub steps: Option<Vec<u32>>,
}

impl SimplifiedBases {
    /// Number of `ι₀` generators, `2m + 1`.
    pub fn dim(&self) -> usize {
        self.xi_basis.cols()
    }

    pub fn xi(&self, p: usize) -> &F2Vec {
        self.xi_basis.column(p)
    }

    pub fn eta(&self, p: usize) -> &F2Vec {
        self.eta_basis.column(p)
    }

    /// `η_p` written in the `ξ` basis.
    pub fn eta_in_xi(&self, p: usize) -> F2Vec {
        self.b_matrix.row(p)
    }

    /// A readable name for `ξ_p`: the input generator when it is a single
    /// one, otherwise `xi<p>`.
    pub fn xi_name(&self, p: usize) -> String {
        let v = self.xi(p);
        if v.count_ones() == 1 {
            self.generator_names[v.first_one().unwrap()].clone()
        } else {
            format!("xi{p}")
        }
    }

    pub fn describe(&self, v: &F2Vec) -> String {
        let names: Vec<&str> = v.ones().map(|i| self.generator_names[i].as_str()).collect();
        if names.is_empty() {
            "0".into()
        } else {
            names.join(" + ")
        }
    }
}

struct Reduction {
    /// `(source generator, pivot generator)` in processing order.
    pairs: Vec<(usize, usize)>,
    unpaired: Vec<usize>,
    v: Vec<F2Vec>,
    r: Vec<F2Vec>,
}

/// Column reduction of `d` (columns = sources) with generators processed in
/// `order`; the pivot of a column is its support element latest in `order`.
fn reduce(d: &F2Matrix, order: &[usize]) -> Reduction {
    let n = d.cols();
    let mut position = vec![0; n];
    for (p, &g) in order.iter().enumerate() {
        position[g] = p;
    }
    let pivot = |v: &F2Vec| v.ones().max_by_key(|&i| position[i]);
    let mut v: Vec<F2Vec> = (0..n).map(|i| F2Vec::unit(n, i)).collect();
    let mut r: Vec<F2Vec> = (0..n).map(|i| d.column(i).clone()).collect();
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut pairs = Vec::new();
    for &j in order {
        while let Some(low) = pivot(&r[j]) {
            match owner.get(&low) {
                Some(&c) => {
                    let (rc, vc) = (r[c].clone(), v[c].clone());
                    r[j].add_assign(&rc);
                    v[j].add_assign(&vc);
                }
                None => {
                    owner.insert(low, j);
                    pairs.push((j, low));
                    break;
                }
            }
        }
    }
    let unpaired = order
        .iter()
        .copied()
        .filter(|&j| r[j].is_zero() && !owner.contains_key(&j))
        .collect();
    Reduction { pairs, unpaired, v, r }
}

pub fn simplify(c: &KnotComplex) -> Result<SimplifiedBases> {
    let report = c.validate();
    if !report.passed() {
        return Err(Error::InvalidComplex(report.failures().join("; ")));
    }
    let n = c.len();
    let alex: Vec<i64> = (0..n).map(|i| c.alexander(i)).collect();

    let mut vertical_order: Vec<usize> = (0..n).collect();
    vertical_order.sort_by_key(|&i| (alex[i], i));
    let vert = reduce(&c.vertical_matrix(), &vertical_order);

    let mut horizontal_order: Vec<usize> = (0..n).collect();
    horizontal_order.sort_by_key(|&i| (-alex[i], i));
    let horiz = reduce(&c.horizontal_matrix(), &horizontal_order);

    for (what, red) in [("vertical", &vert), ("horizontal", &horiz)] {
        if red.unpaired.len() != 1 {
            return Err(Error::Simplify(format!(
                "{what} reduction leaves {} unmatched generators",
                red.unpaired.len()
            )));
        }
    }

    let leading = |v: &F2Vec, desc: bool| -> i64 {
        let grades = v.ones().map(|i| alex[i]);
        if desc {
            grades.min().unwrap()
        } else {
            grades.max().unwrap()
        }
    };
    let prune = |v: &F2Vec| -> F2Vec {
        let level = leading(v, true);
        F2Vec::from_indices(n, v.ones().filter(|&i| alex[i] == level))
    };

    let mut vpairs: Vec<(u32, usize, usize)> = vert
        .pairs
        .iter()
        .map(|&(s, low)| ((alex[s] - alex[low]) as u32, s, low))
        .collect();
    vpairs.sort_by_key(|&(len, s, _)| (len, s));
    let mut hpairs: Vec<(u32, usize, usize)> = horiz
        .pairs
        .iter()
        .map(|&(s, low)| ((alex[low] - alex[s]) as u32, s, low))
        .collect();
    hpairs.sort_by_key(|&(len, s, _)| (len, s));

    let mut xi = vec![vert.v[vert.unpaired[0]].clone()];
    let mut vertical_arrows = Vec::new();
    for (j, &(len, s, _)) in vpairs.iter().enumerate() {
        xi.push(vert.v[s].clone());
        xi.push(vert.r[s].clone());
        vertical_arrows.push(Arrow {
            source: 2 * j + 1,
            target: 2 * j + 2,
            length: len,
        });
    }
    let mut eta = vec![prune(&horiz.v[horiz.unpaired[0]])];
    let mut horizontal_arrows = Vec::new();
    for (j, &(len, s, _)) in hpairs.iter().enumerate() {
        eta.push(prune(&horiz.v[s]));
        eta.push(prune(&horiz.r[s]));
        horizontal_arrows.push(Arrow {
            source: 2 * j + 1,
            target: 2 * j + 2,
            length: len,
        });
    }

    let xi_alexander: Vec<i64> = xi.iter().map(|v| leading(v, false)).collect();
    let eta_alexander: Vec<i64> = eta.iter().map(|v| leading(v, true)).collect();
    let xi_basis = F2Matrix::from_columns(n, xi);
    let eta_basis = F2Matrix::from_columns(n, eta);
    let xi_inv = xi_basis
        .inverse()
        .ok_or_else(|| Error::Invariant("vertical basis is singular".into()))?;
    let eta_inv = eta_basis
        .inverse()
        .ok_or_else(|| Error::Invariant("horizontal basis is singular".into()))?;
    let b_matrix = xi_inv.compose(&eta_basis).transpose();
    let a_matrix = eta_inv.compose(&xi_basis).transpose();

    let tau = xi_alexander[0];
    if eta_alexander[0] != -tau {
        return Err(Error::Simplify(format!(
            "A(xi0) = {tau} but A(eta0) = {}",
            eta_alexander[0]
        )));
    }
    let genus = alex.iter().map(|a| a.abs()).max().unwrap_or(0);
    let compatible = (0..n).all(|p| b_matrix.row(p).ones().all(|q| xi_alexander[q] == eta_alexander[p]));

    let mut bases = SimplifiedBases {
        generator_names: c.generators().iter().map(|g| g.name.clone()).collect(),
        generator_alexander: alex,
        xi_basis,
        eta_basis,
        xi_alexander,
        eta_alexander,
        vertical_arrows,
        horizontal_arrows,
        a_matrix,
        b_matrix,
        tau,
        genus,
        compatible,
        invariants: KnotInvariants {
            tau,
            genus,
            lspace_form: false,
            sign: None,
            steps: None,
        },
    };
    bases.invariants = knot_invariants(&bases);
    Ok(bases)
}

/// τ, genus, and whether every Alexander level of the bases looks like a
/// level of a staircase.
pub fn knot_invariants(s: &SimplifiedBases) -> KnotInvariants {
    let mut levels: BTreeMap<i64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (p, &a) in s.xi_alexander.iter().enumerate() {
        levels.entry(a).or_default().0.push(p);
    }
    for (p, &a) in s.eta_alexander.iter().enumerate() {
        levels.entry(a).or_default().1.push(p);
    }
    let odd_or_zero = |p: usize| p == 0 || p % 2 == 1;
    let even = |p: usize| p.is_multiple_of(2);
    let lspace_form = levels
        .values()
        .all(|(xis, etas)| match (xis.as_slice(), etas.as_slice()) {
            ([x], [e]) => {
                let x = *x;
                let e = *e;
                (e % 2 == 0 || odd_or_zero(x))
                    && (e == 0 || e % 2 == 1 || even(x))
                    && (x % 2 == 0 || odd_or_zero(e))
                    && (x == 0 || x % 2 == 1 || even(e))
            }
            _ => false,
        });
    let (sign, steps) = if lspace_form && s.tau != 0 {
        let grades: Vec<i64> = levels.keys().copied().collect();
        let steps = grades.windows(2).map(|w| (w[1] - w[0]) as u32).collect();
        let sign = if s.tau > 0 { Sign::Plus } else { Sign::Minus };
        (Some(sign), Some(steps))
    } else {
        (None, None)
    };
    KnotInvariants {
        tau: s.tau,
        genus: s.genus,
        lspace_form,
        sign,
        steps,
    }
}
