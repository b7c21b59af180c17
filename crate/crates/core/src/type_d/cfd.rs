use super::{DGenerator, Role, TypeDModule};
use crate::algebra::{Idempotent, ReebIndex};
use crate::cfk::SimplifiedBases;
use crate::f2::F2Vec;

use ReebIndex::{Empty, R1, R12, R123, R2, R23, R3};

/// Where an edge of a chain attaches on the `ι₀` side.
#[derive(Clone, Copy)]
enum End {
    Xi(usize),
    Eta(usize),
}

struct Builder<'a> {
    s: &'a SimplifiedBases,
    generators: Vec<DGenerator>,
    edges: Vec<(Node, Node, ReebIndex)>,
}

#[derive(Clone, Copy)]
enum Node {
    Iota0(End),
    Extra(usize),
}

impl<'a> Builder<'a> {
    fn push(&mut self, id: String, idempotent: Idempotent, role: Role, alias: Option<String>) -> Node {
        self.generators.push(DGenerator {
            id,
            idempotent,
            role,
            alias,
        });
        Node::Extra(self.generators.len() - 1)
    }

    fn edge(&mut self, from: Node, to: Node, label: ReebIndex) {
        self.edges.push((from, to, label));
    }

    fn staircase_index(&self, end: End) -> Option<usize> {
        let v = match end {
            End::Xi(p) => self.s.xi(p),
            End::Eta(p) => self.s.eta(p),
        };
        if v.count_ones() != 1 {
            return None;
        }
        self.s.generator_names[v.first_one().unwrap()]
            .strip_prefix('x')?
            .parse()
            .ok()
    }

    fn chain_alias(&self, a: End, b: End, m: usize) -> Option<String> {
        let i = self.staircase_index(a)?.min(self.staircase_index(b)?);
        Some(format!("y{i}_{m}"))
    }
}

/// CFD of the `n`-framed complement, in the `ξ` coordinates of `ι₀`.
pub fn build_cfd(s: &SimplifiedBases, n: i64) -> TypeDModule {
    let dim = s.dim();
    let mut b = Builder {
        s,
        generators: Vec::new(),
        edges: Vec::new(),
    };
    for p in 0..dim {
        b.generators.push(DGenerator {
            id: s.xi_name(p),
            idempotent: Idempotent::Zero,
            role: Role::Xi,
            alias: None,
        });
    }
    let xi = |p| Node::Iota0(End::Xi(p));
    let eta = |p| Node::Iota0(End::Eta(p));

    for (j, arrow) in s.vertical_arrows.iter().enumerate() {
        let (src, dst) = (End::Xi(arrow.source), End::Xi(arrow.target));
        let h = arrow.length as usize;
        let kappa: Vec<Node> = (1..=h)
            .map(|m| {
                let alias = b.chain_alias(src, dst, m);
                b.push(format!("kappa{}_{m}", j + 1), Idempotent::One, Role::Kappa, alias)
            })
            .collect();
        b.edge(xi(arrow.source), kappa[0], R1);
        for m in 1..h {
            b.edge(kappa[m], kappa[m - 1], R23);
        }
        b.edge(xi(arrow.target), kappa[h - 1], R123);
    }

    for (j, arrow) in s.horizontal_arrows.iter().enumerate() {
        let (src, dst) = (End::Eta(arrow.source), End::Eta(arrow.target));
        let l = arrow.length as usize;
        let lambda: Vec<Node> = (1..=l)
            .map(|m| {
                let alias = b.chain_alias(src, dst, m);
                b.push(format!("lambda{}_{m}", j + 1), Idempotent::One, Role::Lambda, alias)
            })
            .collect();
        b.edge(eta(arrow.source), lambda[0], R3);
        for m in 1..l {
            b.edge(lambda[m - 1], lambda[m], R23);
        }
        b.edge(lambda[l - 1], eta(arrow.target), R2);
    }

    let t = n - 2 * s.tau;
    let modify = !s.invariants.lspace_form;
    let unstable_alias = |b: &Builder, m: usize| {
        b.chain_alias(End::Xi(0), End::Eta(0), m)
            .map(|_| format!("y{}_{m}", dim - 1))
    };
    let mu_chain = |b: &mut Builder, len: usize| -> Vec<Node> {
        (1..=len)
            .map(|m| {
                let alias = unstable_alias(b, m);
                b.push(format!("mu{m}"), Idempotent::One, Role::Mu, alias)
            })
            .collect()
    };
    match t {
        t if t < 0 => {
            let mu = mu_chain(&mut b, t.unsigned_abs() as usize);
            b.edge(xi(0), mu[0], R1);
            for m in 1..mu.len() {
                b.edge(mu[m], mu[m - 1], R23);
            }
            b.edge(eta(0), *mu.last().unwrap(), R3);
        }
        0 if !modify => b.edge(xi(0), eta(0), R12),
        0 => {
            let nu1 = b.push("nu1".into(), Idempotent::One, Role::Nu, None);
            let nu2 = b.push("nu2".into(), Idempotent::One, Role::Nu, None);
            b.edge(xi(0), nu1, R1);
            b.edge(nu2, nu1, Empty);
            b.edge(nu2, eta(0), R2);
        }
        t if !modify => {
            let mu = mu_chain(&mut b, t as usize);
            b.edge(xi(0), mu[0], R123);
            for m in 1..mu.len() {
                b.edge(mu[m - 1], mu[m], R23);
            }
            b.edge(*mu.last().unwrap(), eta(0), R2);
        }
        t => {
            let nu1 = b.push("nu1".into(), Idempotent::Zero, Role::Nu, None);
            let nu2 = b.push("nu2".into(), Idempotent::Zero, Role::Nu, None);
            let mu = mu_chain(&mut b, t as usize);
            b.edge(xi(0), nu1, R12);
            b.edge(nu2, nu1, Empty);
            b.edge(nu2, mu[0], R3);
            for m in 1..mu.len() {
                b.edge(mu[m - 1], mu[m], R23);
            }
            b.edge(*mu.last().unwrap(), eta(0), R2);
        }
    }

    let total = b.generators.len();
    let lift = |v: F2Vec| F2Vec::from_indices(total, v.ones());
    let sources = |node: Node| match node {
        Node::Iota0(End::Xi(p)) => F2Vec::unit(total, p),
        Node::Iota0(End::Eta(p)) => lift(s.a_matrix.column(p).clone()),
        Node::Extra(i) => F2Vec::unit(total, i),
    };
    let targets = |node: Node| match node {
        Node::Iota0(End::Xi(p)) => F2Vec::unit(total, p),
        Node::Iota0(End::Eta(p)) => lift(s.eta_in_xi(p)),
        Node::Extra(i) => F2Vec::unit(total, i),
    };
    let edges = std::mem::take(&mut b.edges);
    let mut module = TypeDModule::new(b.generators);
    for (from, to, label) in edges {
        module.toggle_edges(&sources(from), &targets(to), label);
    }
    module
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfk::{fixtures, simplify, staircase, Sign};

    fn trefoil() -> SimplifiedBases {
        simplify(&staircase(&[1, 1], Sign::Plus).unwrap()).unwrap()
    }

    fn edge_list(m: &TypeDModule) -> Vec<String> {
        m.edges()
            .iter()
            .map(|e| {
                format!(
                    "{} {} {}",
                    m.display_name(e.src),
                    e.label.map_name(),
                    m.display_name(e.dst)
                )
            })
            .collect()
    }

    #[test]
    fn trefoil_two_framed() {
        let m = build_cfd(&trefoil(), 2);
        assert_eq!(m.len(), 5);
        assert_eq!(m.idempotent_dim(Idempotent::One), 2);
        let mut edges = edge_list(&m);
        edges.sort();
        assert_eq!(
            edges,
            ["x0 D123 y0_1", "x1 D1 y0_1", "x1 D3 y1_1", "x2 D12 x0", "y1_1 D2 x2"]
        );
        let r = m.validate();
        assert!(r.passed() && r.bounded, "{:?}", r.problems);
    }

    #[test]
    fn trefoil_short_unstable_chain() {
        let m = build_cfd(&trefoil(), 1);
        let edges = edge_list(&m);
        assert!(edges.contains(&"x2 D1 y2_1".to_string()), "{edges:?}");
        assert!(edges.contains(&"x0 D3 y2_1".to_string()));
        assert_eq!(m.idempotent_dim(Idempotent::One), 3);
    }

    #[test]
    fn trefoil_long_unstable_chain() {
        let m = build_cfd(&trefoil(), 5);
        let edges = edge_list(&m);
        for e in ["x2 D123 y2_1", "y2_1 D23 y2_2", "y2_2 D23 y2_3", "y2_3 D2 x0"] {
            assert!(edges.contains(&e.to_string()), "{e} missing from {edges:?}");
        }
        assert!(m.validate().bounded);
    }

    #[test]
    fn trefoil_framings_validate() {
        let s = trefoil();
        for n in -3..=6 {
            let m = build_cfd(&s, n);
            let r = m.validate();
            assert!(r.passed(), "n={n}: {:?}", r.problems);
            assert!(r.bounded, "n={n}");
            let expect = 2 + (n - 2).unsigned_abs() as usize;
            assert_eq!(m.idempotent_dim(Idempotent::One), expect);
        }
    }

    #[test]
    fn figure_eight_zero_framed_is_modified() {
        let s = simplify(&fixtures::figure_eight()).unwrap();
        let m = build_cfd(&s, 0);
        let edges = edge_list(&m);
        for e in ["e D1 nu1", "nu2 D_empty nu1", "nu2 D2 e"] {
            assert!(edges.contains(&e.to_string()), "{e} missing from {edges:?}");
        }
        let r = m.validate();
        assert!(r.passed() && r.bounded, "{:?}", r.problems);
        for n in -3..=3 {
            let r = build_cfd(&s, n).validate();
            assert!(r.passed() && r.bounded, "n={n}: {:?}", r.problems);
        }
    }

    #[test]
    fn unknot_zero_framed_has_a_loop() {
        let s = simplify(&fixtures::unknot()).unwrap();
        let m = build_cfd(&s, 0);
        assert_eq!(edge_list(&m), ["e D12 e"]);
        let r = m.validate();
        assert!(r.structure_ok && r.idempotents_ok);
        assert!(!r.bounded);
    }
}
