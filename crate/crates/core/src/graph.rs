//! Weighted digraphs, their adjacency matrices, and pwls validation.
//!
//! Vertices are dense indices `0..n` in the API. The text formats in
//! [`crate::format`] and the JSON reports number them from 1.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

pub type Arc = (usize, usize);

/// Square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, int(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Self { n, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[_]>::to_vec).collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.first_skew_violation().is_none()
    }

    pub(crate) fn first_skew_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i..self.n {
                if *self.get(i, j) != -self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `P^T M P` for the permutation matrix sending basis vector `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(perm[i], perm[j]).clone());
            }
        }
        out
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A digraph on vertices `0..n` with nonzero rational arc weights.
///
/// Loops and negative weights are representable so that general matrices
/// can be analysed; the pwls flag is computed at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedDigraph {
    n: usize,
    arcs: BTreeMap<Arc, Rational>,
    pwls: bool,
}

impl WeightedDigraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (Arc, Rational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((u, v), w) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if w.is_zero() {
                return Err(Error::ZeroWeight(u, v));
            }
            if map.insert((u, v), w).is_some() {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(Self::from_map(n, map))
    }

    fn from_map(n: usize, arcs: BTreeMap<Arc, Rational>) -> Self {
        let pwls = pwls_violations(n, &arcs).is_empty();
        Self { n, arcs, pwls }
    }

    /// The unit-weight pwls digraph of a simple graph: each edge `{u, v}`
    /// becomes the two arcs `uv` and `vu`, both of weight 1.
    pub fn from_graph(edges: &[(usize, usize)], n: usize) -> Result<Self> {
        Self::from_graph_weighted(edges, n, |_| (int(1), int(1)))
    }

    /// Like [`from_graph`](Self::from_graph) but with independent random
    /// weights `p/q`, `p, q` uniform in `1..=9`, on every arc.
    pub fn from_graph_random<R: Rng>(edges: &[(usize, usize)], n: usize, rng: &mut R) -> Result<Self> {
        let mut draw = || Rational::new(rng.random_range(1..=9).into(), rng.random_range(1..=9).into());
        Self::from_graph_weighted(edges, n, |_| (draw(), draw()))
    }

    /// Builds a pwls digraph from a simple graph, asking `weights` for the
    /// pair `(w(uv), w(vu))` of each edge `{u, v}` as given.
    pub fn from_graph_weighted(
        edges: &[(usize, usize)],
        n: usize,
        mut weights: impl FnMut((usize, usize)) -> (Rational, Rational),
    ) -> Result<Self> {
        let mut arcs = Vec::with_capacity(edges.len() * 2);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopNotAllowed(u));
            }
            let (fw, bw) = weights((u, v));
            arcs.push(((u, v), fw));
            arcs.push(((v, u), bw));
        }
        let d = Self::new(n, arcs)?;
        if !d.is_pwls() {
            return Err(Error::NotPwls);
        }
        Ok(d)
    }

    /// Digraph associated to a matrix: `ij` is an arc iff `m_ij != 0`.
    pub fn from_matrix(m: &RationalMatrix) -> Self {
        let n = m.dim();
        let mut arcs = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let w = m.get(i, j);
                if !w.is_zero() {
                    arcs.insert((i, j), w.clone());
                }
            }
        }
        Self::from_map(n, arcs)
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.n);
        for (&(u, v), w) in &self.arcs {
            m.set(u, v, w.clone());
        }
        m
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Arc, &Rational)> + '_ {
        self.arcs.iter().map(|(&a, w)| (a, w))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&Rational> {
        self.arcs.get(&(u, v))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains_key(&(u, v))
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.range((u, 0)..(u + 1, 0)).map(|(&(_, v), _)| v)
    }

    pub fn is_pwls(&self) -> bool {
        self.pwls
    }

    pub(crate) fn require_pwls(&self) -> Result<()> {
        if self.pwls {
            Ok(())
        } else {
            Err(Error::NotPwls)
        }
    }

    /// Unordered pairs `{u, v}`, `u < v`, with both arcs present, sorted.
    pub fn digons(&self) -> Vec<(usize, usize)> {
        self.arcs
            .keys()
            .filter(|&&(u, v)| u < v && self.arcs.contains_key(&(v, u)))
            .copied()
            .collect()
    }

    /// Edges of the underlying simple graph (the digons), sorted.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        self.digons()
    }

    pub fn validate_pwls(&self) -> ValidationReport {
        ValidationReport {
            violations: pwls_violations(self.n, &self.arcs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Loop(usize),
    NonPositiveWeight(Arc),
    MissingReverse(Arc),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Loop(v) => write!(f, "loop at vertex {}", v + 1),
            Violation::NonPositiveWeight((u, v)) => {
                write!(f, "nonpositive weight on ({}, {})", u + 1, v + 1)
            }
            Violation::MissingReverse((u, v)) => {
                write!(f, "missing reverse arc ({}, {})", v + 1, u + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pwls_violations(_n: usize, arcs: &BTreeMap<Arc, Rational>) -> Vec<Violation> {
    let mut out = Vec::new();
    for (&(u, v), w) in arcs {
        if u == v {
            out.push(Violation::Loop(u));
        }
        if !w.is_positive() {
            out.push(Violation::NonPositiveWeight((u, v)));
        }
        if !arcs.contains_key(&(v, u)) {
            out.push(Violation::MissingReverse((u, v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn arcs(list: &[(usize, usize, i64)]) -> Vec<(Arc, Rational)> {
        list.iter().map(|&(u, v, w)| ((u, v), int(w))).collect()
    }

    #[test]
    fn validate_examples() {
        let ok = WeightedDigraph::new(2, arcs(&[(0, 1, 1), (1, 0, 1)])).unwrap();
        assert!(ok.validate_pwls().is_ok());
        assert!(ok.is_pwls());

        let missing = WeightedDigraph::new(2, arcs(&[(0, 1, 1)])).unwrap();
        let report = missing.validate_pwls();
        assert_eq!(report.violations, vec![Violation::MissingReverse((0, 1))]);
        assert_eq!(report.violations[0].to_string(), "missing reverse arc (2, 1)");

        let neg = WeightedDigraph::new(2, arcs(&[(0, 1, 1), (1, 0, -1)])).unwrap();
        let report = neg.validate_pwls();
        assert_eq!(report.violations, vec![Violation::NonPositiveWeight((1, 0))]);
        assert_eq!(report.violations[0].to_string(), "nonpositive weight on (2, 1)");
        assert!(!neg.is_pwls());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            WeightedDigraph::new(2, arcs(&[(0, 2, 1)])).unwrap_err(),
            Error::VertexOutOfRange { vertex: 2, n: 2 }
        );
        assert_eq!(
            WeightedDigraph::new(2, arcs(&[(0, 1, 0)])).unwrap_err(),
            Error::ZeroWeight(0, 1)
        );
        assert_eq!(
            WeightedDigraph::new(2, arcs(&[(0, 1, 1), (0, 1, 2)])).unwrap_err(),
            Error::DuplicateArc(0, 1)
        );
    }

    #[test]
    fn matrix_examples() {
        let digon = WeightedDigraph::from_graph(&[(0, 1)], 2).unwrap();
        assert_eq!(digon.to_matrix(), RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap());
        assert_eq!(WeightedDigraph::new(3, vec![]).unwrap().to_matrix(), RationalMatrix::zeros(3));
        let d = WeightedDigraph::new(2, arcs(&[(0, 1, 2), (1, 0, 3)])).unwrap();
        let m = RationalMatrix::from_i64_rows(&[&[0, 2], &[3, 0]]).unwrap();
        assert_eq!(d.to_matrix(), m);
        assert_eq!(WeightedDigraph::from_matrix(&m), d);
        assert_eq!(WeightedDigraph::from_matrix(&RationalMatrix::zeros(2)).arc_count(), 0);

        let looped = WeightedDigraph::from_matrix(&RationalMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]).unwrap());
        assert_eq!(looped.arcs().collect::<Vec<_>>(), vec![((0, 0), &int(1))]);
        assert!(!looped.is_pwls());
    }

    #[test]
    fn from_graph_examples() {
        let path = WeightedDigraph::from_graph(&[(0, 1), (1, 2)], 3).unwrap();
        assert_eq!(path.arc_count(), 4);
        assert!(path.arcs().all(|(_, w)| *w == int(1)));
        assert!(path.is_pwls());
        let tri = WeightedDigraph::from_graph(&[(0, 1), (1, 2), (2, 0)], 3).unwrap();
        assert_eq!(tri.arc_count(), 6);
        assert_eq!(tri.digons(), vec![(0, 1), (0, 2), (1, 2)]);
        let empty = WeightedDigraph::from_graph(&[], 2).unwrap();
        assert!(empty.is_pwls() && empty.arc_count() == 0);
        assert_eq!(WeightedDigraph::from_graph(&[(1, 1)], 2).unwrap_err(), Error::LoopNotAllowed(1));
        assert!(WeightedDigraph::from_graph(&[(0, 1), (1, 0)], 2).is_err());
    }

    fn matrix_strategy() -> impl Strategy<Value = RationalMatrix> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec((-3i64..=3, 1i64..=3), n * n).prop_map(move |v| {
                let rows = v.chunks(n).map(|r| r.iter().map(|&(a, b)| frac(a, b)).collect()).collect();
                RationalMatrix::from_rows(rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn matrix_round_trip(m in matrix_strategy()) {
            let d = WeightedDigraph::from_matrix(&m);
            prop_assert_eq!(d.to_matrix(), m);
            if d.arcs().all(|((u, v), _)| u != v) {
                prop_assert_eq!(WeightedDigraph::from_matrix(&d.to_matrix()), d);
            }
        }

        #[test]
        fn positive_reweighting_of_graph_is_pwls(
            edges in proptest::collection::btree_set((0usize..5, 0usize..5), 0..8),
            seed in 1i64..50,
        ) {
            let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u < v).collect();
            let mut k = seed;
            let d = WeightedDigraph::from_graph_weighted(&edges, 5, |_| {
                k += 7;
                (frac(k % 11 + 1, 3), frac(k % 5 + 1, 2))
            }).unwrap();
            prop_assert!(d.validate_pwls().is_ok());
            let flipped = WeightedDigraph::new(5, d.arcs().map(|(a, w)| (a, -w.clone()))).unwrap();
            prop_assert_eq!(flipped.validate_pwls().is_ok(), edges.is_empty());
        }
    }
}
