use std::collections::VecDeque;

use super::TypeDModule;
use crate::algebra::Z2;
use crate::error::{Error, Result};

/// Relative ℤ/2 gradings from `gr(y) = gr(x) + 1 + gr(ρ_I)` along every
/// edge `x -D_I-> y`. The lowest-indexed generator of each connected
/// component sits in grading 0.
pub fn solve_gradings(m: &TypeDModule) -> Result<TypeDModule> {
    let n = m.len();
    // (neighbour, offset) with gr(neighbour) = gr(self) + offset
    let mut adj: Vec<Vec<(usize, Z2)>> = vec![Vec::new(); n];
    for e in m.edges() {
        let offset = (1 + e.label.grading()) % 2;
        adj[e.src].push((e.dst, offset));
        adj[e.dst].push((e.src, offset));
    }
    let mut gr: Vec<Option<Z2>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if gr[root].is_some() {
            continue;
        }
        gr[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let gu = gr[u].unwrap();
            for &(v, offset) in &adj[u] {
                let want = (gu + offset) % 2;
                match gr[v] {
                    None => {
                        gr[v] = Some(want);
                        parent[v] = Some(u);
                        queue.push_back(v);
                    }
                    Some(g) if g != want => {
                        return Err(Error::Grading(cycle_names(m, &parent, u, v)));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut out = m.clone();
    out.set_gradings(gr.into_iter().map(Option::unwrap).collect());
    Ok(out)
}

fn cycle_names(m: &TypeDModule, parent: &[Option<usize>], u: usize, v: usize) -> String {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while let Some(p) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    let common = pu.iter().find(|x| pv.contains(x)).copied().unwrap_or(u);
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != common).collect();
    cycle.push(common);
    let back: Vec<usize> = pv.iter().copied().take_while(|&x| x != common).collect();
    cycle.extend(back.into_iter().rev());
    cycle.push(u);
    let names: Vec<&str> = cycle.iter().map(|&i| m.display_name(i)).collect();
    names.join(" - ")
}

/// Edges `(src, dst)` whose endpoints violate the grading rule.
pub fn verify_gradings(m: &TypeDModule) -> Vec<(usize, usize)> {
    let Some(gr) = m.gradings() else {
        return m.edges().iter().map(|e| (e.src, e.dst)).collect();
    };
    m.edges()
        .iter()
        .filter(|e| gr[e.dst] != (gr[e.src] + 1 + e.label.grading()) % 2)
        .map(|e| (e.src, e.dst))
        .collect()
}
