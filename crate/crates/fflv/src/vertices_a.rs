//! Vertex enumeration for type-A FFLV polytopes via antichain tuples.
//!
//! The vertices of P_{a_iω_i} are the scaled indicator vectors a_i·χ_A of
//! antichains A of the straddling poset Q_i. A tuple (A_1, …, A_{n−1}) yields
//! a vertex of P_λ exactly when every adjacent pair passes the connected
//! component test on its pair graph.

use crate::error::Error;
use crate::polytope_a::{straddling_positions, PosA, TriangleA};
use crate::rat::{int, Rat};
use crate::weights::WeightA;

/// A ⪯-antichain of positions, stored sorted in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain {
    elements: Vec<PosA>,
}

impl Antichain {
    pub fn empty() -> Self {
        Antichain {
            elements: Vec::new(),
        }
    }

    pub fn new(mut elements: Vec<PosA>) -> Result<Self, Error> {
        elements.sort_by_key(|p| p.canonical_key());
        elements.dedup();
        for (k, &p) in elements.iter().enumerate() {
            for &q in &elements[k + 1..] {
                if p.comparable(q) {
                    return Err(Error::InvalidWeight(format!(
                        "({p}) and ({q}) are comparable; not an antichain"
                    )));
                }
            }
        }
        Ok(Antichain { elements })
    }

    pub fn elements(&self) -> &[PosA] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: PosA) -> bool {
        self.elements.contains(&p)
    }
}

/// All antichains of an arbitrary set of positions under ⪯, in depth-first
/// order over the canonically sorted elements (the empty antichain first).
pub fn antichains_of_poset(elements: &[PosA]) -> Vec<Antichain> {
    let mut sorted = elements.to_vec();
    sorted.sort_by_key(|p| p.canonical_key());
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_antichain(&sorted, 0, &mut current, &mut out);
    out
}

fn extend_antichain(
    sorted: &[PosA],
    start: usize,
    current: &mut Vec<PosA>,
    out: &mut Vec<Antichain>,
) {
    out.push(Antichain {
        elements: current.clone(),
    });
    for k in start..sorted.len() {
        let p = sorted[k];
        if current.iter().all(|&q| !q.comparable(p)) {
            current.push(p);
            extend_antichain(sorted, k + 1, current, out);
            current.pop();
        }
    }
}

/// All antichains of Q_i for rank n.
pub fn antichains_of_qi(n: usize, i: usize) -> Vec<Antichain> {
    antichains_of_poset(&straddling_positions(n, i))
}

/// The pair graph of adjacent antichains A_i ⊂ Q_i and A_{i+1} ⊂ Q_{i+1}:
/// nodes are the set union, edges join comparable nodes (chains in the union
/// of two antichains have length at most two, so this is the Hasse diagram),
/// and Δ is the component containing the nodes outside Q_i ∩ Q_{i+1}.
#[derive(Debug, Clone)]
pub struct PairGraph {
    pub nodes: Vec<PosA>,
    pub edges: Vec<(usize, usize)>,
    /// node is outside Q_i ∩ Q_{i+1}
    pub outside: Vec<bool>,
    /// node lies in Δ
    pub delta: Vec<bool>,
    /// the outside nodes fell into more than one component (cannot happen for
    /// genuine antichain pairs; kept as a diagnostic)
    pub split_delta: bool,
}

pub fn pair_graph(a: &Antichain, b: &Antichain, i: usize) -> PairGraph {
    let mut nodes: Vec<PosA> = a.elements().to_vec();
    for &p in b.elements() {
        if !nodes.contains(&p) {
            nodes.push(p);
        }
    }
    nodes.sort_by_key(|p| p.canonical_key());
    let mut edges = Vec::new();
    for x in 0..nodes.len() {
        for y in x + 1..nodes.len() {
            if nodes[x].comparable(nodes[y]) {
                edges.push((x, y));
            }
        }
    }
    let outside: Vec<bool> = nodes.iter().map(|p| p.j == i + 1 || p.i == i + 1).collect();

    // union-find over the comparability edges
    let mut comp: Vec<usize> = (0..nodes.len()).collect();
    fn find(comp: &mut Vec<usize>, x: usize) -> usize {
        if comp[x] != x {
            let root = find(comp, comp[x]);
            comp[x] = root;
        }
        comp[x]
    }
    for &(x, y) in &edges {
        let (rx, ry) = (find(&mut comp, x), find(&mut comp, y));
        if rx != ry {
            comp[rx] = ry;
        }
    }
    let outside_roots: Vec<usize> = (0..nodes.len())
        .filter(|&k| outside[k])
        .map(|k| find(&mut comp, k))
        .collect();
    let mut roots = outside_roots.clone();
    roots.sort_unstable();
    roots.dedup();
    let split_delta = roots.len() > 1;
    let delta: Vec<bool> = (0..nodes.len())
        .map(|k| {
            let r = find(&mut comp, k);
            roots.contains(&r)
        })
        .collect();
    PairGraph {
        nodes,
        edges,
        outside,
        delta,
        split_delta,
    }
}

/// Whether χ_{A_i} + χ_{A_{i+1}} is a vertex of P_{ω_i + ω_{i+1}}: every node
/// of the pair graph lies in A_i ∩ A_{i+1} or in Δ.
pub fn is_vertex_pair(a: &Antichain, b: &Antichain, i: usize) -> bool {
    let g = pair_graph(a, b, i);
    if g.split_delta {
        return false;
    }
    g.nodes
        .iter()
        .zip(&g.delta)
        .all(|(&p, &in_delta)| in_delta || (a.contains(p) && b.contains(p)))
}

/// Whether every adjacent pair of the tuple passes [`is_vertex_pair`].
pub fn is_nice_tuple(tuple: &[Antichain]) -> bool {
    tuple
        .windows(2)
        .enumerate()
        .all(|(k, w)| is_vertex_pair(&w[0], &w[1], k + 1))
}

/// The point Σ a_i χ_{A_i} of a tuple.
pub fn tuple_point(lambda: &WeightA, tuple: &[Antichain]) -> TriangleA {
    let n = lambda.rank();
    assert_eq!(tuple.len(), n - 1);
    let mut x = TriangleA::zero(n);
    for (k, a) in tuple.iter().enumerate() {
        let coeff = lambda.coord(k + 1);
        if coeff == 0 {
            continue;
        }
        for &p in a.elements() {
            let v = x.get(p) + Rat::from_integer(int(coeff));
            x.set(p, v);
        }
    }
    x
}

/// A vertex with its canonical antichain-tuple certificate.
#[derive(Debug, Clone)]
pub struct VertexA {
    pub certificate: Vec<Antichain>,
    pub point: TriangleA,
}

/// All vertices of P_λ. Tuples are scanned in lexicographic order over the
/// per-index antichain lists with early pair pruning. Two nice tuples yield
/// the same point exactly when they agree at every index with a_i > 0, so for
/// singular λ the first nice tuple of each such group is kept as the
/// canonical certificate.
pub fn enumerate_vertices_a(lambda: &WeightA) -> Vec<VertexA> {
    let n = lambda.rank();
    let lists: Vec<Vec<Antichain>> = (1..n).map(|i| antichains_of_qi(n, i)).collect();
    let mut out = Vec::new();
    walk_nice_tuples(lambda.coords(), &lists, &mut |tuple| {
        out.push(VertexA {
            certificate: tuple.to_vec(),
            point: tuple_point(lambda, tuple),
        });
    });
    out
}

/// Walks all nice tuples over the given per-index antichain lists in
/// lexicographic order, pruning on the first failing adjacent pair, and emits
/// one canonical representative per group of tuples that agree at every index
/// whose coefficient is positive. coords[k] is the coefficient of the list at
/// index k, and the pair at lists k−1, k is tested with pair index k.
pub(crate) fn walk_nice_tuples<F: FnMut(&[Antichain])>(
    coords: &[i64],
    lists: &[Vec<Antichain>],
    emit: &mut F,
) {
    assert_eq!(coords.len(), lists.len());
    let mut chosen: Vec<usize> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    walk_level(coords, lists, &mut chosen, &mut seen, emit);
}

fn walk_level<F: FnMut(&[Antichain])>(
    coords: &[i64],
    lists: &[Vec<Antichain>],
    chosen: &mut Vec<usize>,
    seen: &mut std::collections::HashSet<Vec<usize>>,
    emit: &mut F,
) {
    let level = chosen.len();
    if level == lists.len() {
        let key: Vec<usize> = chosen
            .iter()
            .enumerate()
            .map(|(k, &idx)| if coords[k] > 0 { idx + 1 } else { 0 })
            .collect();
        if seen.insert(key) {
            let tuple: Vec<Antichain> = chosen
                .iter()
                .enumerate()
                .map(|(k, &idx)| lists[k][idx].clone())
                .collect();
            emit(&tuple);
        }
        return;
    }
    for idx in 0..lists[level].len() {
        if level > 0 {
            let prev = &lists[level - 1][*chosen.last().unwrap()];
            if !is_vertex_pair(prev, &lists[level][idx], level) {
                continue;
            }
        }
        chosen.push(idx);
        walk_level(coords, lists, chosen, seen, emit);
        chosen.pop();
    }
}
