//! Type D modules over the torus algebra, stored as coefficient maps.

mod cfd;
mod durable;
mod grading;

use std::fmt::Write;

use serde::Serialize;

use crate::algebra::{Idempotent, ReebIndex, Z2};
use crate::f2::{F2Matrix, F2Vec};

pub use cfd::build_cfd;
pub use durable::{bk_prime, durability, find_durable_pairs, Durability, DurablePair, Strength, Subspace};
pub use grading::{solve_gradings, verify_gradings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Xi,
    Kappa,
    Lambda,
    Mu,
    Nu,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DGenerator {
    pub id: String,
    pub idempotent: Idempotent,
    pub role: Role,
    /// Alternative name such as `y0_1` for staircase complements.
    pub alias: Option<String>,
}

#[derive(Clone, Debug)]
pub struct TypeDModule {
    generators: Vec<DGenerator>,
    /// Indexed by `ReebIndex::slot`; columns are sources, rows targets.
    maps: Vec<F2Matrix>,
    gradings: Option<Vec<Z2>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeDReport {
    pub structure_ok: bool,
    pub idempotents_ok: bool,
    pub no_empty_cycles: bool,
    pub bounded: bool,
    pub problems: Vec<String>,
}

impl TypeDReport {
    pub fn passed(&self) -> bool {
        self.structure_ok && self.idempotents_ok && self.no_empty_cycles
    }
}

/// A labelled edge `src -D_label-> dst`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: ReebIndex,
}

impl TypeDModule {
    pub fn new(generators: Vec<DGenerator>) -> Self {
        let n = generators.len();
        TypeDModule {
            generators,
            maps: (0..7).map(|_| F2Matrix::zeros(n, n)).collect(),
            gradings: None,
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[DGenerator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &DGenerator {
        &self.generators[i]
    }

    pub fn idempotent(&self, i: usize) -> Idempotent {
        self.generators[i].idempotent
    }

    /// Looks a generator up by id or alias.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| g.id == name || g.alias.as_deref() == Some(name))
    }

    pub fn map(&self, label: ReebIndex) -> &F2Matrix {
        &self.maps[label.slot()]
    }

    pub fn gradings(&self) -> Option<&[Z2]> {
        self.gradings.as_deref()
    }

    pub(crate) fn set_gradings(&mut self, gradings: Vec<Z2>) {
        assert_eq!(gradings.len(), self.len());
        self.gradings = Some(gradings);
    }

    /// Adds one edge; a parallel edge with the same label cancels it.
    pub fn toggle_edge(&mut self, src: usize, dst: usize, label: ReebIndex) {
        self.maps[label.slot()].flip(dst, src);
    }

    /// Adds `D_label(u) ∋ v` for every `u` in `from` and `v` in `to`.
    pub fn toggle_edges(&mut self, from: &F2Vec, to: &F2Vec, label: ReebIndex) {
        for s in from.ones() {
            for t in to.ones() {
                self.toggle_edge(s, t, label);
            }
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for label in ReebIndex::ALL {
            for (dst, src) in self.map(label).nonzero_entries() {
                out.push(Edge { src, dst, label });
            }
        }
        out.sort_by_key(|e| (e.src, e.label, e.dst));
        out
    }

    pub fn unit(&self, i: usize) -> F2Vec {
        F2Vec::unit(self.len(), i)
    }

    /// `D_{I_r} ∘ ⋯ ∘ D_{I_1}(v)` for `labels = [I_1, …, I_r]`.
    pub fn apply_word(&self, labels: &[ReebIndex], v: &F2Vec) -> F2Vec {
        labels.iter().fold(v.clone(), |acc, &l| self.map(l).apply(&acc))
    }

    /// `D_{I_r} ∘ ⋯ ∘ D_{I_1}` as a matrix.
    pub fn compose_word(&self, labels: &[ReebIndex]) -> F2Matrix {
        labels
            .iter()
            .fold(F2Matrix::identity(self.len()), |acc, &l| self.map(l).compose(&acc))
    }

    pub fn idempotent_dim(&self, i: Idempotent) -> usize {
        self.generators.iter().filter(|g| g.idempotent == i).count()
    }

    /// Structure equation, idempotent compatibility, and acyclicity checks.
    pub fn validate(&self) -> TypeDReport {
        let mut problems = Vec::new();
        let mut idempotents_ok = true;
        for e in self.edges() {
            let (si, di) = (self.idempotent(e.src), self.idempotent(e.dst));
            let ok = match e.label.idempotents() {
                None => si == di,
                Some((l, r)) => si == l && di == r,
            };
            if !ok {
                idempotents_ok = false;
                problems.push(format!(
                    "{} edge {} -> {} joins {si} to {di}",
                    e.label.map_name(),
                    self.generators[e.src].id,
                    self.generators[e.dst].id
                ));
            }
        }

        let mut structure_ok = true;
        for target in ReebIndex::ALL {
            let mut sum = F2Matrix::zeros(self.len(), self.len());
            for j in ReebIndex::ALL {
                for k in ReebIndex::ALL {
                    if j.product(k) == Some(target) {
                        sum = sum.add(&self.map(k).compose(self.map(j)));
                    }
                }
            }
            if !sum.is_zero() {
                structure_ok = false;
                let (dst, src) = sum.nonzero_entries().next().unwrap();
                problems.push(format!(
                    "structure equation for rho{} fails from {} to {}",
                    target.suffix(),
                    self.generators[src].id,
                    self.generators[dst].id
                ));
            }
        }

        let no_empty_cycles = !has_cycle(self.len(), &self.edges_with(|l| l.is_empty()));
        if !no_empty_cycles {
            problems.push("directed cycle of D_empty edges".into());
        }
        let bounded = !has_cycle(self.len(), &self.edges_with(|_| true));
        TypeDReport {
            structure_ok,
            idempotents_ok,
            no_empty_cycles,
            bounded,
            problems,
        }
    }

    fn edges_with(&self, keep: impl Fn(ReebIndex) -> bool) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|e| keep(e.label))
            .map(|e| (e.src, e.dst))
            .collect()
    }

    pub fn is_bounded(&self) -> bool {
        !has_cycle(self.len(), &self.edges_with(|_| true))
    }

    /// Number of edges on the longest directed path, if the graph is acyclic.
    pub fn longest_path(&self) -> Option<usize> {
        let order = topological_order(self.len(), &self.edges_with(|_| true))?;
        let edges = self.edges();
        let mut best = vec![0usize; self.len()];
        for &u in order.iter().rev() {
            for e in edges.iter().filter(|e| e.src == u) {
                best[u] = best[u].max(best[e.dst] + 1);
            }
        }
        Some(best.into_iter().max().unwrap_or(0))
    }

    pub fn describe(&self, v: &F2Vec) -> String {
        let names: Vec<&str> = v.ones().map(|i| self.display_name(i)).collect();
        if names.is_empty() {
            "0".into()
        } else {
            names.join(" + ")
        }
    }

    pub fn display_name(&self, i: usize) -> &str {
        let g = &self.generators[i];
        g.alias.as_deref().unwrap_or(&g.id)
    }

    /// Graphviz rendering of the coefficient-map graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cfd {\n");
        for (i, g) in self.generators.iter().enumerate() {
            let grading = match &self.gradings {
                Some(gr) => gr[i].to_string(),
                None => "?".into(),
            };
            let role = serde_json::to_string(&g.role).unwrap();
            writeln!(
                out,
                "  n{i} [label=\"{}\", idempotent=\"{}\", role={role}, grading=\"{grading}\"];",
                self.display_name(i),
                g.idempotent
            )
            .unwrap();
        }
        for e in self.edges() {
            writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.src, e.dst, e.label.map_name()).unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// One line per edge, `src -D12-> dst`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, g) in self.generators.iter().enumerate() {
            let grading = self
                .gradings
                .as_ref()
                .map(|gr| format!(" gr={}", gr[i]))
                .unwrap_or_default();
            writeln!(out, "gen {} {}{}", self.display_name(i), g.idempotent, grading).unwrap();
        }
        for e in self.edges() {
            writeln!(
                out,
                "{} -{}-> {}",
                self.display_name(e.src),
                e.label.map_name(),
                self.display_name(e.dst)
            )
            .unwrap();
        }
        out
    }
}

fn topological_order(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indegree = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(s, d) in edges {
        indegree[d] += 1;
        out[s].push(d);
    }
    let mut stack: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in &out[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                stack.push(v);
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn has_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    topological_order(n, edges).is_none()
}
