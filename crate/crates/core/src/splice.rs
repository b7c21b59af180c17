//! Splices of framed knot complements: the full pipeline, the predicted
//! answer for L-space knots, and framing surveys.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cfk::{simplify, KnotComplex, SimplifiedBases};
use crate::error::{Error, Result};
use crate::homology::{graded_homology, lspace_verdict, GradedRanks};
use crate::pairing::{box_tensor, ChainComplex};
use crate::type_a::{derive_cfa, derive_cfa_capped, TypeAModule};
use crate::type_d::{build_cfd, find_durable_pairs, Strength, TypeDModule};

/// A named knot complex together with its simplified bases.
#[derive(Clone, Debug)]
pub struct Knot {
    pub name: String,
    pub complex: KnotComplex,
    pub bases: SimplifiedBases,
}

impl Knot {
    pub fn new(name: impl Into<String>, complex: KnotComplex) -> Result<Knot> {
        let bases = simplify(&complex)?;
        Ok(Knot {
            name: name.into(),
            complex,
            bases,
        })
    }

    pub fn tau(&self) -> i64 {
        self.bases.tau
    }

    pub fn lspace_form(&self) -> bool {
        self.bases.invariants.lspace_form
    }

    pub fn summary(&self) -> KnotSummary {
        KnotSummary {
            name: self.name.clone(),
            tau: self.bases.tau,
            genus: self.bases.genus,
            lspace_form: self.lspace_form(),
        }
    }

    /// CFD of the `n`-framed complement.
    pub fn cfd(&self, n: i64) -> Result<TypeDModule> {
        let m = build_cfd(&self.bases, n);
        let report = m.validate();
        if !report.passed() {
            return Err(Error::Invariant(format!(
                "CFD of {} at framing {n}: {}",
                self.name,
                report.problems.join("; ")
            )));
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotSummary {
    pub name: String,
    pub tau: i64,
    pub genus: i64,
    pub lspace_form: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prediction {
    LSpace(bool),
    OutOfScope,
}

impl Prediction {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Prediction::LSpace(b) => Some(b),
            Prediction::OutOfScope => None,
        }
    }
}

impl Serialize for Prediction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Prediction::LSpace(b) => s.serialize_bool(*b),
            Prediction::OutOfScope => s.serialize_str("out-of-theorem-scope"),
        }
    }
}

/// Whether the splice of the `n₁`- and `n₂`-framed complements is an
/// L-space, for nontrivial knots.
pub fn predict_theorem(tau1: i64, lsf1: bool, n1: i64, tau2: i64, lsf2: bool, n2: i64) -> Prediction {
    if (lsf1 && tau1 == 0) || (lsf2 && tau2 == 0) {
        return Prediction::OutOfScope;
    }
    let framing_ok = |tau: i64, n: i64| (tau <= 0 || n >= 2 * tau) && (tau >= 0 || n <= 2 * tau);
    let boundary = tau1.signum() == tau2.signum() && n1 == 2 * tau1 && n2 == 2 * tau2;
    Prediction::LSpace(lsf1 && lsf2 && framing_ok(tau1, n1) && framing_ok(tau2, n2) && !boundary)
}

#[derive(Clone, Debug, Serialize)]
pub struct SpliceReport {
    pub schema: u32,
    pub knot1: KnotSummary,
    pub knot2: KnotSummary,
    pub n1: i64,
    pub n2: i64,
    pub t1: i64,
    pub t2: i64,
    pub prediction: Prediction,
    pub computed: GradedRanks,
    pub verdict: bool,
    pub agree: bool,
    pub durable_fast_path: Option<bool>,
}

/// The pieces of one splice computation, kept for inspection.
pub struct SplicePipeline {
    pub cfd1: TypeDModule,
    pub cfd2: TypeDModule,
    pub cfa1: TypeAModule,
    pub complex: ChainComplex,
}

/// CFA of side 1 paired with CFD of side 2, with the structural checks.
pub fn splice_pipeline(k1: &Knot, n1: i64, k2: &Knot, n2: i64) -> Result<SplicePipeline> {
    let cfd1 = k1.cfd(n1)?;
    let cfd2 = k2.cfd(n2)?;
    let cfa1 = if cfd1.is_bounded() {
        derive_cfa(&cfd1)?
    } else {
        let longest = cfd2.longest_path().ok_or_else(|| {
            Error::Unbounded(format!(
                "{} at framing {n1} and {} at framing {n2} are both unbounded",
                k1.name, k2.name
            ))
        })?;
        // A merged word has at least one letter per three path edges.
        derive_cfa_capped(&cfd1, 3 * (longest + 1))?
    };
    let report = cfa1.validate();
    if !report.passed() {
        return Err(Error::Invariant(format!(
            "CFA of {}: {}",
            k1.name,
            report.problems.join("; ")
        )));
    }
    let complex = box_tensor(&cfa1, &cfd2)?;
    if !complex.d_squared_zero() {
        return Err(Error::Invariant(format!(
            "box tensor differential squares to nonzero for ({n1}, {n2})"
        )));
    }
    Ok(SplicePipeline {
        cfd1,
        cfd2,
        cfa1,
        complex,
    })
}

pub fn splice_report(k1: &Knot, n1: i64, k2: &Knot, n2: i64) -> Result<SpliceReport> {
    let pipeline = splice_pipeline(k1, n1, k2, n2)?;
    let computed = graded_homology(&pipeline.complex)?;
    let verdict = lspace_verdict(&computed)?;
    let prediction = predict_theorem(k1.tau(), k1.lspace_form(), n1, k2.tau(), k2.lspace_form(), n2);
    let agree = prediction.as_bool().is_none_or(|p| p == verdict);

    let durable1 = find_durable_pairs(&pipeline.cfd1, &k1.bases)
        .iter()
        .any(|p| p.strength == Strength::Durable);
    let weak2 = !find_durable_pairs(&pipeline.cfd2, &k2.bases).is_empty();
    let durable_fast_path = (durable1 && weak2).then_some(true);
    if durable_fast_path.is_some() && verdict {
        return Err(Error::Invariant(format!(
            "durable generators survive but ({n1}, {n2}) computed as an L-space"
        )));
    }

    Ok(SpliceReport {
        schema: 1,
        knot1: k1.summary(),
        knot2: k2.summary(),
        n1,
        n2,
        t1: n1 - 2 * k1.tau(),
        t2: n2 - 2 * k2.tau(),
        prediction,
        computed,
        verdict,
        agree,
        durable_fast_path,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConjectureCheck {
    /// `τ₁ = 0`, where the conjecture says nothing.
    Undefined,
    /// `t = n₁`, so `r/s` has a zero denominator.
    Degenerate,
    Evaluated {
        #[serde(serialize_with = "ratio_string")]
        p_over_q: Ratio<i64>,
        #[serde(serialize_with = "ratio_string")]
        r_over_s: Ratio<i64>,
        verdict: bool,
    },
}

fn ratio_string<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl ConjectureCheck {
    pub fn verdict(&self) -> Option<bool> {
        match self {
            ConjectureCheck::Evaluated { verdict, .. } => Some(*verdict),
            _ => None,
        }
    }
}

/// `p/q = n₂` and `r/s = n₂ + 1/(t − n₁)` tested against the slope
/// conditions, for two L-space knots.
pub fn conjecture_check(tau1: i64, n1: i64, n2: i64, tau2: i64) -> ConjectureCheck {
    let t = match tau1.signum() {
        1 => 2 * tau1 - 1,
        -1 => 2 * tau1 + 1,
        _ => return ConjectureCheck::Undefined,
    };
    if t == n1 {
        return ConjectureCheck::Degenerate;
    }
    let pq = Ratio::from_integer(n2);
    let rs = pq + Ratio::new(1, t - n1);
    let order_ok = if tau1 > 0 { pq > rs } else { pq < rs };
    let interval_ok = |x: Ratio<i64>| match tau2.signum() {
        1 => x > Ratio::from_integer(2 * tau2 - 1),
        -1 => x < Ratio::from_integer(2 * tau2 + 1),
        _ => true,
    };
    ConjectureCheck::Evaluated {
        p_over_q: pq,
        r_over_s: rs,
        verdict: order_ok && interval_ok(pq) && interval_ok(rs),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Survey {
    pub rows: Vec<SpliceReport>,
    pub agreements: usize,
    pub disagreements: usize,
}

/// One report per framing pair, computed in parallel, in row-major order.
pub fn survey(
    k1: &Knot,
    range1: std::ops::RangeInclusive<i64>,
    k2: &Knot,
    range2: std::ops::RangeInclusive<i64>,
) -> Result<Survey> {
    let pairs: Vec<(i64, i64)> = range1.flat_map(|a| range2.clone().map(move |b| (a, b))).collect();
    let rows = pairs
        .par_iter()
        .map(|&(n1, n2)| splice_report(k1, n1, k2, n2))
        .collect::<Result<Vec<_>>>()?;
    let agreements = rows.iter().filter(|r| r.agree).count();
    let disagreements = rows.len() - agreements;
    Ok(Survey {
        rows,
        agreements,
        disagreements,
    })
}
