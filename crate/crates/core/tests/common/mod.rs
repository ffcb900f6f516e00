//! Shared fixtures for the integration suites: graph catalogues, seeded
//! weightings and brute-force oracles that do not go through the library's
//! own enumeration code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewspec::rational::frac;
use skewspec::{Rational, RationalMatrix, WeightedDigraph};

pub type Edges = Vec<(usize, usize)>;

#[derive(Clone, Debug)]
pub struct Graph {
    pub n: usize,
    pub edges: Edges,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<_> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connected simple graphs on `1..=max_n` vertices with at most
/// `max_edges` edges, one per isomorphism class.
pub fn connected_graphs(max_n: usize, max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut seen = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            if mask.count_ones() as usize > max_edges {
                continue;
            }
            let edges: Edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            if !is_connected(n, &edges) {
                continue;
            }
            if seen.insert(canonical(&edges, &perms)) {
                out.push(Graph { n, edges });
            }
        }
    }
    out
}

/// All trees on `1..=max_n` vertices up to isomorphism, from Prüfer codes.
pub fn trees(max_n: usize) -> Vec<Graph> {
    let mut out = vec![Graph { n: 1, edges: vec![] }];
    for n in 2..=max_n {
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        let codes = n.pow((n - 2) as u32);
        for code in 0..codes {
            let mut seq = Vec::with_capacity(n - 2);
            let mut c = code;
            for _ in 0..n - 2 {
                seq.push(c % n);
                c /= n;
            }
            let mut degree = vec![1; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::new();
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf.min(s), leaf.max(s)));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            if seen.insert(canonical(&edges, &perms)) {
                out.push(Graph { n, edges });
            }
        }
    }
    out
}

pub fn cycle_graph(n: usize) -> Graph {
    Graph {
        n,
        edges: (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect(),
    }
}

pub fn complete_graph(n: usize) -> Graph {
    Graph {
        n,
        edges: (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
    }
}

/// Independent oracle: does the simple graph contain a cycle of even
/// length at least 4? Plain search over vertex sequences.
pub fn has_even_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = |a: usize, b: usize| edges.iter().any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a));
    fn extend(n: usize, path: &mut Vec<usize>, adj: &dyn Fn(usize, usize) -> bool) -> bool {
        let t = path.len();
        if t >= 4 && t.is_multiple_of(2) && adj(path[t - 1], path[0]) {
            return true;
        }
        for v in 0..n {
            if !path.contains(&v) && adj(path[t - 1], v) {
                path.push(v);
                if extend(n, path, adj) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..n).any(|s| extend(n, &mut vec![s], &adj))
}

/// Independent oracle: `w(C) = w(C*)` for every sequence of distinct
/// vertices that closes into a cycle.
pub fn brute_cycle_symmetric(d: &WeightedDigraph) -> bool {
    let m = d.to_matrix();
    let n = m.dim();
    fn rec(m: &RationalMatrix, seq: &mut Vec<usize>) -> bool {
        let k = seq.len();
        if k >= 3 {
            let fwd = (0..k).fold(Rational::one(), |acc, t| acc * m.get(seq[t], seq[(t + 1) % k]));
            let rev = (0..k).fold(Rational::one(), |acc, t| acc * m.get(seq[(t + 1) % k], seq[t]));
            if fwd != rev {
                return false;
            }
        }
        for v in 0..m.dim() {
            let last = *seq.last().unwrap();
            if !seq.contains(&v) && !m.get(last, v).is_zero() {
                seq.push(v);
                let ok = rec(m, seq);
                seq.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    (0..n).all(|s| rec(&m, &mut vec![s]))
}

pub fn unit_weights(g: &Graph) -> WeightedDigraph {
    WeightedDigraph::from_graph(&g.edges, g.n).unwrap()
}

/// Independent random weights `p/q`, `p, q` in `1..=9`, on every arc.
pub fn random_weights(g: &Graph, seed: u64) -> WeightedDigraph {
    WeightedDigraph::from_graph_random(&g.edges, g.n, &mut rng(seed)).unwrap()
}

/// Cycle-symmetric random weights: `a_ij = s_ij / mu_j` with `s` symmetric.
pub fn symmetrizable_weights(g: &Graph, seed: u64) -> WeightedDigraph {
    let mut r = rng(seed);
    let mu: Vec<Rational> = (0..g.n).map(|_| frac(r.random_range(1..=9), r.random_range(1..=9))).collect();
    WeightedDigraph::from_graph_weighted(&g.edges, g.n, |(u, v)| {
        let s = frac(r.random_range(1..=9), r.random_range(1..=9));
        (&s / &mu[v], &s / &mu[u])
    })
    .unwrap()
}

/// Random `n x n` matrix with entries in `-3..=3`, about half of them zero.
pub fn random_matrix(r: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if r.random_bool(0.5) {
                m.set(i, j, frac(r.random_range(-3..=3), 1));
            }
        }
    }
    m
}

pub fn random_skew_matrix(r: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            if r.random_bool(0.5) {
                let v = frac(r.random_range(-3..=3), r.random_range(1..=3));
                m.set(i, j, v.clone());
                m.set(j, i, -v);
            }
        }
    }
    m
}

/// Random simple graph on `n` vertices with edge probability `p`.
pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| r.random_bool(p))
        .collect::<Vec<_>>();
    Graph { n, edges }
}
