//! The acceptance suite. Runs every criterion, prints one line per
//! criterion and exits nonzero if any of them fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use bordered_splice::algebra::{AlgebraElement, BasisElement, Idempotent, ReebIndex};
use bordered_splice::cfk::Sign;
use bordered_splice::homology::graded_homology;
use bordered_splice::splice::{conjecture_check, splice_pipeline, splice_report, Knot, SpliceReport};
use bordered_splice::type_a::derive_cfa;
use bordered_splice::type_d::{find_durable_pairs, Strength};

use common::{fixture, stair};
use ReebIndex::*;

type Outcome = Result<String, String>;

struct Sweep {
    name: &'static str,
    rows: Vec<SpliceReport>,
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    use BasisElement::*;
    let idempotents = [
        (Iota0, (0, 0)),
        (Iota1, (1, 1)),
        (Rho1, (0, 1)),
        (Rho2, (1, 0)),
        (Rho3, (0, 1)),
        (Rho12, (0, 0)),
        (Rho23, (1, 1)),
        (Rho123, (0, 1)),
    ];
    let chords = [
        (Rho1, Rho2, Rho12),
        (Rho2, Rho3, Rho23),
        (Rho1, Rho23, Rho123),
        (Rho12, Rho3, Rho123),
    ];
    let to_idem = |i: u8| if i == 0 { Idempotent::Zero } else { Idempotent::One };

    for (b, (l, r)) in idempotents {
        check(b.idempotents() == (to_idem(l), to_idem(r)), || {
            format!("idempotents of {b}")
        })?;
    }
    for a in BasisElement::ALL {
        for b in BasisElement::ALL {
            let expected = match (a.is_idempotent(), b.is_idempotent()) {
                (true, true) => (a == b).then_some(a),
                (true, false) => (b.idempotents().0 == a.idempotents().0).then_some(b),
                (false, true) => (a.idempotents().1 == b.idempotents().0).then_some(a),
                (false, false) => chords.iter().find(|(x, y, _)| *x == a && *y == b).map(|(_, _, c)| *c),
            };
            check(a.product(b) == expected, || format!("{a} * {b}"))?;
            if let Some(c) = a.product(b) {
                check(c.grading() == (a.grading() + b.grading()) % 2, || {
                    format!("grading of {a} * {b}")
                })?;
            }
        }
    }
    let mut triples = 0;
    for a in BasisElement::ALL {
        for b in BasisElement::ALL {
            for c in BasisElement::ALL {
                let (a, b, c) = (
                    AlgebraElement::from(a),
                    AlgebraElement::from(b),
                    AlgebraElement::from(c),
                );
                check((a * b) * c == a * (b * c), || {
                    format!("associativity {a:?} {b:?} {c:?}")
                })?;
                triples += 1;
            }
        }
    }
    for a in BasisElement::ALL {
        let a = AlgebraElement::from(a);
        check(AlgebraElement::ONE * a == a && a * AlgebraElement::ONE == a, || {
            format!("unit on {a:?}")
        })?;
    }
    Ok(format!("{triples} triples associative, units and idempotents exact"))
}

fn run_sweep(
    name: &'static str,
    k1: &Knot,
    r1: std::ops::RangeInclusive<i64>,
    k2: &Knot,
    r2: std::ops::RangeInclusive<i64>,
) -> Sweep {
    let mut rows = Vec::new();
    for n1 in r1 {
        for n2 in r2.clone() {
            rows.push(splice_report(k1, n1, k2, n2).unwrap_or_else(|e| panic!("{name} ({n1},{n2}): {e}")));
        }
    }
    Sweep { name, rows }
}

fn full_agreement(s: &Sweep, expected: impl Fn(i64, i64) -> bool) -> Result<(), String> {
    for r in &s.rows {
        check(r.agree, || {
            format!("{}: ({},{}) disagrees with the predictor", s.name, r.n1, r.n2)
        })?;
        let e = expected(r.n1, r.n2);
        check(r.verdict == e, || {
            format!("{}: ({},{}) verdict {} expected {e}", s.name, r.n1, r.n2, r.verdict)
        })?;
    }
    Ok(())
}

fn verdict_at(s: &Sweep, n1: i64, n2: i64) -> bool {
    s.rows
        .iter()
        .find(|r| r.n1 == n1 && r.n2 == n2)
        .map(|r| r.verdict)
        .unwrap()
}

fn criterion_2(s: &Sweep) -> Outcome {
    let predicted = |n1: i64, n2: i64| n1 >= 2 && n2 >= 2 && !(n1 == 2 && n2 == 2);
    full_agreement(s, predicted)?;
    check(!verdict_at(s, 2, 2), || "(2,2) should not be an L-space".into())?;
    for (a, b) in [(2, 3), (3, 2), (6, 6)] {
        check(verdict_at(s, a, b), || format!("({a},{b}) should be an L-space"))?;
    }
    Ok(format!(
        "{}/{} rows agree",
        s.rows.iter().filter(|r| r.agree).count(),
        s.rows.len()
    ))
}

fn criterion_3(s: &Sweep) -> Outcome {
    full_agreement(s, |n1, n2| n1 >= 2 && n2 <= -2)?;
    Ok(format!("{} rows agree", s.rows.len()))
}

fn criterion_4(s: &Sweep) -> Outcome {
    full_agreement(s, |n1, n2| n1 >= 4 && n2 >= 2 && !(n1 == 4 && n2 == 2))?;
    Ok(format!("{} rows agree", s.rows.len()))
}

fn criterion_5(s: &Sweep, fig8: &Knot) -> Outcome {
    full_agreement(s, |_, _| false)?;
    for n in -2..=2 {
        let m = fig8.cfd(n).map_err(|e| e.to_string())?;
        let d = m.unit(m.index_of("d").ok_or("no generator d")?);
        let y = m.map(R123).apply(&d);
        let pairs = find_durable_pairs(&m, &fig8.bases);
        check(
            pairs
                .iter()
                .any(|p| p.x == d && p.y == y && p.strength == Strength::Durable),
            || format!("no durable pair (d, D123 d) at framing {n}"),
        )?;
    }
    Ok(format!(
        "{} rows not L-space, durable pair at framings -2..2",
        s.rows.len()
    ))
}

fn criterion_6(sweeps: &[&Sweep]) -> Outcome {
    let mut count = 0;
    for s in sweeps {
        for r in &s.rows {
            let oracle = (r.n1 * r.n2 - 1).unsigned_abs() as usize;
            check(r.computed.euler_abs() == oracle, || {
                format!(
                    "{}: ({},{}) euler {} expected {oracle}",
                    s.name,
                    r.n1,
                    r.n2,
                    r.computed.euler_abs()
                )
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} rows match |n1 n2 - 1|"))
}

fn criterion_7(
    cases: &[(
        &Knot,
        std::ops::RangeInclusive<i64>,
        &Knot,
        std::ops::RangeInclusive<i64>,
    )],
) -> Outcome {
    let mut complexes = 0;
    for name in ["trefoil", "mirror_trefoil", "t25", "t34", "figure_eight", "unknot"] {
        let k = fixture(name);
        check(k.complex.d_squared().is_empty(), || format!("d^2 != 0 for {name}"))?;
        check(k.complex.validate().passed(), || {
            format!("{name}: {:?}", k.complex.validate().failures())
        })?;
        complexes += 1;
    }
    let mut pairings = 0;
    for (k1, r1, k2, r2) in cases {
        for n1 in r1.clone() {
            for n2 in r2.clone() {
                let p = splice_pipeline(k1, n1, k2, n2).map_err(|e| e.to_string())?;
                for m in [&p.cfd1, &p.cfd2] {
                    let rep = m.validate();
                    check(rep.passed(), || format!("CFD at ({n1},{n2}): {:?}", rep.problems))?;
                }
                check(p.complex.d_squared_zero(), || format!("box d^2 != 0 at ({n1},{n2})"))?;
                check(p.complex.flips_grading(), || {
                    format!("grading not flipped at ({n1},{n2})")
                })?;
                pairings += 1;
            }
        }
    }
    Ok(format!("{complexes} complexes, {pairings} pairings structurally sound"))
}

/// Operations predicted for the CFA of an `n`-framed positive staircase.
fn staircase_operations(steps: &[u32], n: i64) -> Vec<(String, Vec<ReebIndex>, String)> {
    let two_k = steps.len();
    let tau: i64 = steps.iter().step_by(2).map(|&s| s as i64).sum();
    let x = |i: usize| format!("x{i}");
    let y = |i: usize, m: i64| format!("y{i}_{m}");
    let ell = |i: usize| steps[i] as i64;
    let mut ops = Vec::new();
    for i in (1..two_k).step_by(2) {
        ops.push((x(i), vec![R3], y(i - 1, 1)));
        ops.push((x(i), vec![R1], y(i, 1)));
    }
    for i in (2..=two_k).step_by(2) {
        let l = ell(i - 1);
        ops.push((y(i - 1, l), vec![R2], x(i)));
        if l == 1 {
            ops.push((x(i - 1), vec![R12], x(i)));
        } else {
            ops.push((y(i - 1, l - 1), vec![R2, R12], x(i)));
        }
    }
    let l_last = ell(two_k - 1);
    let t = n - 2 * tau;
    if t > 0 {
        ops.push((y(two_k, t), vec![R2], x(0)));
        if t == 1 {
            ops.push((x(two_k), vec![R3, R2, R12], x(0)));
            ops.push((y(two_k - 1, l_last), vec![R23, R2, R12], x(0)));
        } else {
            ops.push((y(two_k, t - 1), vec![R2, R12], x(0)));
        }
    } else if t == 0 {
        ops.push((x(two_k), vec![R3, R2], x(0)));
        ops.push((y(two_k - 1, l_last), vec![R23, R2], x(0)));
        if l_last == 1 {
            ops.push((x(two_k - 1), vec![R123, R2], x(0)));
        } else {
            ops.push((y(two_k - 1, l_last - 1), vec![R2, R123, R2], x(0)));
        }
    }
    ops
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for steps in [&[1, 1][..], &[1, 1, 1, 1], &[1, 2, 2, 1], &[2, 1, 1, 2], &[3, 1, 1, 3]] {
        let k = stair(steps, Sign::Plus);
        for t in 0..=3 {
            let n = 2 * k.tau() + t;
            let a = derive_cfa(&k.cfd(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            for (input, word, output) in staircase_operations(steps, n) {
                check(a.contains(&input, &word, &output), || {
                    let w: Vec<String> = word.iter().map(|r| r.to_string()).collect();
                    format!(
                        "{steps:?} n={n}: missing m{}({input}, {}) = {output}",
                        word.len() + 1,
                        w.join(", ")
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} operations present"))
}

fn criterion_9() -> Outcome {
    let k = fixture("trefoil");
    let p = splice_pipeline(&k, 2, &k, 2).map_err(|e| e.to_string())?;
    let c = &p.complex;
    let locate = |a: &str, d: &str| -> Result<usize, String> {
        let ai = p.cfa1.index_of(a).ok_or(format!("no {a} in CFA"))?;
        let di = p.cfd2.index_of(d).ok_or(format!("no {d} in CFD"))?;
        c.index_of(ai, di).ok_or(format!("no {a} (x) {d}"))
    };
    let g1 = locate("x0", "x0")?;
    let g2 = locate("y0_1", "y0_1")?;
    for g in [g1, g2] {
        check(c.isolated(g), || format!("generator {g} has boundary"))?;
    }
    check(c.gradings[g1] != c.gradings[g2], || "gradings agree".into())?;
    let r = graded_homology(c).map_err(|e| e.to_string())?;
    check(r.rank0 >= 1 && r.rank1 >= 1, || format!("ranks {r:?}"))?;
    Ok(format!(
        "both generators isolated, gradings {} and {}, ranks ({},{})",
        c.gradings[g1], c.gradings[g2], r.rank0, r.rank1
    ))
}

fn criterion_10() -> Outcome {
    let unknot = fixture("unknot");
    let mut n_cases = 0;
    for name in ["trefoil", "mirror_trefoil", "t25", "t34", "figure_eight"] {
        let k = fixture(name);
        for n in -2..=2 {
            let r = splice_report(&k, n, &unknot, 0).map_err(|e| format!("{name} {n}: {e}"))?;
            check(r.computed.total() == 1, || {
                format!("{name} at {n}: rank {}", r.computed.total())
            })?;
            n_cases += 1;
        }
    }
    Ok(format!("{n_cases} fillings have rank 1"))
}

fn criterion_11(sweeps: &[&Sweep]) -> Outcome {
    let (mut evaluated, mut degenerate) = (0, 0);
    for s in sweeps {
        for r in &s.rows {
            let c = conjecture_check(r.knot1.tau, r.n1, r.n2, r.knot2.tau);
            match (c.verdict(), r.prediction.as_bool()) {
                (Some(v), Some(p)) => {
                    check(v == p, || {
                        format!("{}: ({},{}) conjecture {v} predictor {p}", s.name, r.n1, r.n2)
                    })?;
                    evaluated += 1;
                }
                _ => degenerate += 1,
            }
        }
    }
    Ok(format!("{evaluated} rows agree, {degenerate} degenerate"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let trefoil = fixture("trefoil");
    let mirror = fixture("mirror_trefoil");
    let t25 = fixture("t25");
    let fig8 = fixture("figure_eight");

    let s2 = run_sweep("trefoil x trefoil", &trefoil, -3..=6, &trefoil, -3..=6);
    let s3 = run_sweep("trefoil x mirror", &trefoil, -4..=6, &mirror, -6..=4);
    let s4 = run_sweep("T(2,5) x trefoil", &t25, 0..=6, &trefoil, 0..=6);
    let s5 = run_sweep("figure-eight x trefoil", &fig8, -2..=2, &trefoil, -2..=2);

    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "algebra axioms", criterion_1()),
        (2, "trefoil x trefoil sweep", criterion_2(&s2)),
        (3, "mixed-sign sweep", criterion_3(&s3)),
        (4, "higher staircase sweep", criterion_4(&s4)),
        (5, "non-L-space knot", criterion_5(&s5, &fig8)),
        (6, "Euler characteristic oracle", criterion_6(&[&s2, &s3, &s4, &s5])),
        (
            7,
            "structural guards",
            criterion_7(&[
                (&trefoil, -3..=6, &trefoil, -3..=6),
                (&trefoil, -4..=6, &mirror, -6..=4),
                (&t25, 0..=6, &trefoil, 0..=6),
                (&fig8, -2..=2, &trefoil, -2..=2),
            ]),
        ),
        (8, "staircase CFA operations", criterion_8()),
        (9, "surviving generators", criterion_9()),
        (10, "meridional filling", criterion_10()),
        (11, "conjecture consistency", criterion_11(&[&s2, &s3, &s4])),
    ];

    let mut failed = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {n:>2} {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        results.len() - failed,
        results.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
