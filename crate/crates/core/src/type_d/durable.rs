use serde::Serialize;

use super::TypeDModule;
use crate::algebra::{Idempotent, ReebIndex};
use crate::cfk::SimplifiedBases;
use crate::error::{Error, Result};
use crate::f2::{intersect, F2Vec};

use ReebIndex::{R1, R12, R123, R2, R23, R3};

/// A subspace of `ι₀`, given by a basis in `ξ` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: Vec<F2Vec>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All nonzero elements, in order of their coefficient bit patterns.
    pub fn elements(&self) -> Vec<F2Vec> {
        let d = self.basis.len().min(16);
        (1u32..(1 << d))
            .map(|mask| {
                let mut v = F2Vec::zeros(self.basis.first().map_or(0, |b| b.len()));
                for (i, b) in self.basis.iter().enumerate().take(d) {
                    if mask & (1 << i) != 0 {
                        v.add_assign(b);
                    }
                }
                v
            })
            .collect()
    }
}

/// `B′_k = B_k ∩ span{ξ₂, ξ₄, …} ∩ span{η₁, η₃, …}`.
pub fn bk_prime(s: &SimplifiedBases, k: i64) -> Subspace {
    let dim = s.dim();
    let even_level: Vec<F2Vec> = (2..dim)
        .step_by(2)
        .filter(|&p| s.xi_alexander[p] == k)
        .map(|p| F2Vec::unit(dim, p))
        .collect();
    let odd_eta: Vec<F2Vec> = (1..dim).step_by(2).map(|p| s.eta_in_xi(p)).collect();
    Subspace {
        basis: intersect(&even_level, &odd_eta, dim),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Durability {
    pub durable: bool,
    pub weakly_durable: bool,
}

/// Projection onto the coordinate of the first generator in `v`.
fn projection(m: &TypeDModule, v: &F2Vec) -> F2Vec {
    m.unit(v.first_one().expect("nonzero vector"))
}

fn idempotent_of(m: &TypeDModule, v: &F2Vec) -> Result<Idempotent> {
    let mut idem = v.ones().map(|i| m.idempotent(i));
    let first = idem
        .next()
        .ok_or_else(|| Error::Idempotent("zero vector has no idempotent".into()))?;
    if idem.any(|i| i != first) {
        return Err(Error::Idempotent(format!("{} mixes idempotents", m.describe(v))));
    }
    Ok(first)
}

/// Incoming maps: `π ∘ D_{I_r} ∘ ⋯ ∘ D_{I_1}` for `r ≤ depth`, as
/// `(labels, functional)` pairs with a nonzero functional.
fn incoming(m: &TypeDModule, pi: &F2Vec, depth: usize) -> Vec<(Vec<ReebIndex>, F2Vec)> {
    let mut out = Vec::new();
    let mut frontier = vec![(Vec::new(), pi.clone())];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (labels, f) in &frontier {
            for l in ReebIndex::ALL {
                let g = m.map(l).pull_back(f);
                if !g.is_zero() {
                    let mut ls = vec![l];
                    ls.extend(labels.iter().copied());
                    out.push((ls.clone(), g.clone()));
                    next.push((ls, g));
                }
            }
        }
        frontier = next;
    }
    out
}

/// Outgoing maps `D_{I_r} ∘ ⋯ ∘ D_{I_1}(v) ≠ 0` for `r ≤ depth`.
fn outgoing(m: &TypeDModule, v: &F2Vec, depth: usize) -> Vec<Vec<ReebIndex>> {
    let mut out = Vec::new();
    let mut frontier = vec![(Vec::new(), v.clone())];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (labels, w) in &frontier {
            for l in ReebIndex::ALL {
                let u = m.map(l).apply(w);
                if !u.is_zero() {
                    let mut ls = labels.clone();
                    ls.push(l);
                    out.push(ls.clone());
                    next.push((ls, u));
                }
            }
        }
        frontier = next;
    }
    out
}

fn durable_iota0(m: &TypeDModule, v: &F2Vec) -> bool {
    if !incoming(m, &projection(m, v), 1).is_empty() {
        return false;
    }
    outgoing(m, v, 3).iter().all(|w| {
        let r = w.len();
        matches!(w[0], R3 | R123)
            && !(w[0] == R123 && r > 1 && w[1] != R23)
            && !(w[0] == R3 && r > 1 && !matches!(w[1], R23 | R2))
            && !(r > 2 && w[1] == R2 && w[2] != R123)
    })
}

fn durable_iota1(m: &TypeDModule, v: &F2Vec) -> bool {
    let into_ok = incoming(m, &projection(m, v), 2)
        .iter()
        .all(|(w, _)| w.len() == 1 && matches!(w[0], R1 | R123));
    into_ok && outgoing(m, v, 1).iter().all(|w| w[0] == R23)
}

fn weak_iota0(m: &TypeDModule, v: &F2Vec) -> bool {
    [&[R1][..], &[R12], &[R123, R2], &[R3, R2, R1], &[R3, R2, R12]]
        .iter()
        .all(|w| m.apply_word(w, v).is_zero())
}

fn weak_iota1(m: &TypeDModule, v: &F2Vec) -> bool {
    let pi = projection(m, v);
    let through = |labels: &[ReebIndex]| labels.iter().rev().fold(pi.clone(), |f, &l| m.map(l).pull_back(&f));
    m.map(R2).apply(v).is_zero() && through(&[R3]).is_zero() && through(&[R3, R2, R1]).is_zero()
}

/// Durable and weakly durable tests for a nonzero vector in one idempotent.
pub fn durability(m: &TypeDModule, v: &F2Vec) -> Result<Durability> {
    Ok(match idempotent_of(m, v)? {
        Idempotent::Zero => Durability {
            durable: durable_iota0(m, v),
            weakly_durable: weak_iota0(m, v),
        },
        Idempotent::One => Durability {
            durable: durable_iota1(m, v),
            weakly_durable: weak_iota1(m, v),
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strength {
    Durable,
    Weak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DurablePair {
    pub x: F2Vec,
    pub y: F2Vec,
    pub strength: Strength,
}

/// Pairs `(x, D₁₂₃ x)` with both members (weakly) durable. Candidates are
/// the `ι₀` basis generators and the nonzero elements of every `B′_k`;
/// durable pairs come first.
pub fn find_durable_pairs(m: &TypeDModule, s: &SimplifiedBases) -> Vec<DurablePair> {
    let total = m.len();
    let mut candidates: Vec<F2Vec> = Vec::new();
    for k in -s.genus..=s.genus {
        for v in bk_prime(s, k).elements() {
            candidates.push(F2Vec::from_indices(total, v.ones()));
        }
    }
    for i in 0..total {
        if m.idempotent(i) == Idempotent::Zero {
            candidates.push(m.unit(i));
        }
    }
    let mut pairs = Vec::new();
    for x in candidates {
        let y = m.map(R123).apply(&x);
        if y.is_zero() || pairs.iter().any(|p: &DurablePair| p.x == x) {
            continue;
        }
        let (Ok(dx), Ok(dy)) = (durability(m, &x), durability(m, &y)) else {
            continue;
        };
        let strength = if dx.durable && dy.durable {
            Strength::Durable
        } else if dx.weakly_durable && dy.weakly_durable {
            Strength::Weak
        } else {
            continue;
        };
        pairs.push(DurablePair { x, y, strength });
    }
    pairs.sort_by_key(|p| p.strength);
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfk::{fixtures, simplify, staircase, Sign};
    use crate::type_d::build_cfd;

    fn trefoil() -> SimplifiedBases {
        simplify(&staircase(&[1, 1], Sign::Plus).unwrap()).unwrap()
    }

    #[test]
    fn figure_eight_b_prime() {
        let s = simplify(&fixtures::figure_eight()).unwrap();
        let b = bk_prime(&s, -1);
        assert_eq!(b.dim(), 1);
        assert_eq!(s.describe(&s.xi_basis.apply(&b.basis[0])), "d");
        assert_eq!(bk_prime(&s, 0).dim(), 0);
        assert_eq!(bk_prime(&s, 1).dim(), 0);
    }

    #[test]
    fn trefoil_b_prime_vanishes() {
        let s = trefoil();
        for k in -2..=2 {
            assert_eq!(bk_prime(&s, k).dim(), 0);
        }
    }

    #[test]
    fn figure_eight_d_is_durable_for_every_framing() {
        let s = simplify(&fixtures::figure_eight()).unwrap();
        for n in -3..=3 {
            let m = build_cfd(&s, n);
            let d = m.unit(m.index_of("d").unwrap());
            assert!(durability(&m, &d).unwrap().durable, "n={n}");
            let y = m.map(R123).apply(&d);
            assert!(durability(&m, &y).unwrap().durable, "n={n}");
            let pairs = find_durable_pairs(&m, &s);
            assert!(pairs.iter().any(|p| p.x == d && p.strength == Strength::Durable));
        }
    }

    #[test]
    fn trefoil_durability_by_framing() {
        let s = trefoil();
        let m = build_cfd(&s, 1);
        let x0 = m.unit(m.index_of("x0").unwrap());
        assert!(durability(&m, &x0).unwrap().durable);
        assert!(durability(&m, &m.map(R123).apply(&x0)).unwrap().durable);

        let m = build_cfd(&s, 2);
        let x0 = m.unit(m.index_of("x0").unwrap());
        let d = durability(&m, &x0).unwrap();
        assert!(!d.durable && d.weakly_durable);

        let m = build_cfd(&s, 5);
        let pairs = find_durable_pairs(&m, &s);
        assert!(pairs.iter().all(|p| p.strength == Strength::Weak));
        let x0 = m.unit(m.index_of("x0").unwrap());
        let y = m.unit(m.index_of("y0_1").unwrap());
        assert!(pairs.iter().any(|p| p.x == x0 && p.y == y));

        let m = build_cfd(&s, 0);
        assert!(find_durable_pairs(&m, &s)
            .iter()
            .any(|p| p.strength == Strength::Durable));
    }

    #[test]
    fn mixed_vector_is_rejected() {
        let m = build_cfd(&trefoil(), 2);
        let v = F2Vec::from_indices(m.len(), [0, m.len() - 1]);
        assert!(durability(&m, &v).is_err());
    }
}
