//! Type A modules derived from type D modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use serde::Serialize;

use crate::algebra::{swap_and_merge, Idempotent, ReebIndex, ReebWord, Z2};
use crate::error::{Error, Result};
use crate::type_d::{solve_gradings, TypeDModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AGenerator {
    pub id: String,
    pub idempotent: Idempotent,
    pub grading: Z2,
}

/// `m_{|word|+1}(input, word) ∋ output`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Operation {
    pub input: usize,
    pub word: ReebWord,
    pub output: usize,
}

#[derive(Clone, Debug)]
pub struct TypeAModule {
    generators: Vec<AGenerator>,
    operations: Vec<Operation>,
    by_first_letter: HashMap<(usize, Option<ReebIndex>), Vec<usize>>,
    max_word_length: usize,
    /// Path length at which enumeration stopped, when the source was unbounded.
    path_cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeAReport {
    pub idempotents_ok: bool,
    pub merged_ok: bool,
    pub grading_ok: bool,
    pub problems: Vec<String>,
}

impl TypeAReport {
    pub fn passed(&self) -> bool {
        self.idempotents_ok && self.merged_ok && self.grading_ok
    }
}

impl TypeAModule {
    pub fn new(generators: Vec<AGenerator>, operations: impl IntoIterator<Item = Operation>) -> Self {
        let mut counts: BTreeMap<Operation, bool> = BTreeMap::new();
        for op in operations {
            *counts.entry(op).or_insert(false) ^= true;
        }
        let operations: Vec<Operation> = counts.into_iter().filter(|(_, odd)| *odd).map(|(op, _)| op).collect();
        let mut by_first_letter: HashMap<(usize, Option<ReebIndex>), Vec<usize>> = HashMap::new();
        for (i, op) in operations.iter().enumerate() {
            let first = op.word.letters().first().copied();
            by_first_letter.entry((op.input, first)).or_default().push(i);
        }
        let max_word_length = operations.iter().map(|op| op.word.len()).max().unwrap_or(0);
        TypeAModule {
            generators,
            operations,
            by_first_letter,
            max_word_length,
            path_cap: None,
        }
    }

    pub fn generators(&self) -> &[AGenerator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn operations(&self) -> &[Operation] {
        &self.operations
    }

    pub fn max_word_length(&self) -> usize {
        self.max_word_length
    }

    pub fn path_cap(&self) -> Option<usize> {
        self.path_cap
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.id == id)
    }

    /// Operations on `input` whose word starts with `first` (`None` for m₁).
    pub fn operations_from(&self, input: usize, first: Option<ReebIndex>) -> impl Iterator<Item = &Operation> {
        self.by_first_letter
            .get(&(input, first))
            .into_iter()
            .flatten()
            .map(move |&i| &self.operations[i])
    }

    pub fn contains(&self, input: &str, word: &[ReebIndex], output: &str) -> bool {
        let (Some(i), Some(o)) = (self.index_of(input), self.index_of(output)) else {
            return false;
        };
        let word = ReebWord::new(word.to_vec());
        self.operations_from(i, word.letters().first().copied())
            .any(|op| op.output == o && op.word == word)
    }

    pub fn validate(&self) -> TypeAReport {
        let mut problems = Vec::new();
        let (mut idempotents_ok, mut merged_ok, mut grading_ok) = (true, true, true);
        for op in &self.operations {
            let line = self.format_op(op);
            let (x, y) = (&self.generators[op.input], &self.generators[op.output]);
            let letters = op.word.letters();
            let idem = match (letters.first(), letters.last()) {
                (None, _) => x.idempotent == y.idempotent,
                (Some(f), Some(l)) => {
                    let inner = letters
                        .windows(2)
                        .all(|w| w[0].idempotents().unwrap().1 == w[1].idempotents().unwrap().0);
                    inner && f.idempotents().unwrap().0 == x.idempotent && l.idempotents().unwrap().1 == y.idempotent
                }
                _ => unreachable!(),
            };
            if !idem {
                idempotents_ok = false;
                problems.push(format!("idempotents: {line}"));
            }
            if !op.word.is_merged() {
                merged_ok = false;
                problems.push(format!("unmerged word: {line}"));
            }
            let expected = (x.grading as usize + op.word.grading() as usize + letters.len() + 1) % 2;
            if y.grading as usize != expected {
                grading_ok = false;
                problems.push(format!("grading: {line}"));
            }
        }
        TypeAReport {
            idempotents_ok,
            merged_ok,
            grading_ok,
            problems,
        }
    }

    pub fn format_op(&self, op: &Operation) -> String {
        let mut args = vec![self.generators[op.input].id.clone()];
        args.extend(op.word.letters().iter().map(|l| l.to_string()));
        format!(
            "m{}({}) = {}",
            op.word.len() + 1,
            args.join(", "),
            self.generators[op.output].id
        )
    }

    /// One operation per line, sorted.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self.operations.iter().map(|op| self.format_op(op)).collect();
        lines.sort();
        let mut out = String::new();
        for l in lines {
            writeln!(out, "{l}").unwrap();
        }
        out
    }
}

/// Every directed path `x → ⋯ → y` of `m` contributes the operation
/// `(x̄, swap_and_merge(labels), ȳ)`; gradings of `ι₀` generators flip.
pub fn derive_cfa(m: &TypeDModule) -> Result<TypeAModule> {
    if !m.is_bounded() {
        return Err(Error::Unbounded(
            "type D module has a directed loop; supply a path cap".into(),
        ));
    }
    derive(m, usize::MAX)
}

/// As [`derive_cfa`], but paths longer than `cap` edges are not followed.
pub fn derive_cfa_capped(m: &TypeDModule, cap: usize) -> Result<TypeAModule> {
    let mut a = derive(m, cap)?;
    if !m.is_bounded() {
        a.path_cap = Some(cap);
    }
    Ok(a)
}

fn derive(m: &TypeDModule, cap: usize) -> Result<TypeAModule> {
    let report = m.validate();
    if !report.no_empty_cycles {
        return Err(Error::Unbounded("directed cycle of D_empty edges".into()));
    }
    let graded = match m.gradings() {
        Some(_) => m.clone(),
        None => solve_gradings(m)?,
    };
    let gr = graded.gradings().unwrap();
    let generators = (0..m.len())
        .map(|i| {
            let g = m.generator(i);
            let flip = u8::from(g.idempotent == Idempotent::Zero);
            AGenerator {
                id: m.display_name(i).to_string(),
                idempotent: g.idempotent,
                grading: (gr[i] + flip) % 2,
            }
        })
        .collect();

    let mut out_edges: Vec<Vec<(usize, ReebIndex)>> = vec![Vec::new(); m.len()];
    for e in m.edges() {
        out_edges[e.src].push((e.dst, e.label));
    }
    let mut ops = Vec::new();
    let mut labels = Vec::new();
    for start in 0..m.len() {
        walk(&out_edges, start, start, cap, &mut labels, &mut ops);
    }
    Ok(TypeAModule::new(generators, ops))
}

fn walk(
    out_edges: &[Vec<(usize, ReebIndex)>],
    start: usize,
    at: usize,
    cap: usize,
    labels: &mut Vec<ReebIndex>,
    ops: &mut Vec<Operation>,
) {
    if labels.len() >= cap {
        return;
    }
    for &(next, label) in &out_edges[at] {
        labels.push(label);
        ops.push(Operation {
            input: start,
            word: swap_and_merge(labels),
            output: next,
        });
        walk(out_edges, start, next, cap, labels, ops);
        labels.pop();
    }
}
