//! Cycles, linear subdigraphs and digon covers, and the coefficient
//! expansions of the characteristic polynomial over them.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::rational::Rational;
use crate::signing::{Sign, SkewSigning};

/// A directed cycle `v_1 -> v_2 -> ... -> v_t -> v_1` over distinct vertices,
/// rotated so the smallest vertex comes first. Direction is kept, so a
/// cycle of length at least 3 differs from its reverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes `vertices`. Returns `None` when empty or repeating a vertex.
    pub fn new(mut vertices: Vec<usize>) -> Option<Self> {
        if vertices.is_empty() {
            return None;
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return None;
        }
        let pos = vertices.iter().enumerate().min_by_key(|&(_, v)| v).map(|(i, _)| i)?;
        vertices.rotate_left(pos);
        Some(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_digon(&self) -> bool {
        self.len() == 2
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let t = self.vertices.len();
        (0..t).map(move |i| (self.vertices[i], self.vertices[(i + 1) % t]))
    }

    /// The same vertices traversed backwards (the `C*` of `C`).
    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v[1..].reverse();
        Self { vertices: v }
    }

    pub fn lies_in(&self, d: &WeightedDigraph) -> bool {
        self.arcs().all(|(u, v)| d.has_arc(u, v))
    }

    /// Product of the arc weights along the cycle, `None` if an arc is missing.
    pub fn weight(&self, d: &WeightedDigraph) -> Option<Rational> {
        self.arcs()
            .try_fold(Rational::one(), |acc, (u, v)| d.weight(u, v).map(|w| acc * w))
    }

    /// `prod_{uv in C} w(uv) w(vu)`, the square of the symmetrized weight.
    pub fn symmetrized_weight_squared(&self, d: &WeightedDigraph) -> Option<Rational> {
        self.arcs().try_fold(Rational::one(), |acc, (u, v)| {
            Some(acc * d.weight(u, v)? * d.weight(v, u)?)
        })
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v + 1).collect()
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

pub fn reverse_cycle(c: &Cycle) -> Cycle {
    c.reversed()
}

/// Depth-first extension from each start vertex through larger vertices
/// only, so every cycle is found once, already in canonical form. Visits
/// in lexicographic order of the canonical vertex sequence.
fn visit_cycles<F>(d: &WeightedDigraph, min_len: usize, max_len: usize, mut f: F)
where
    F: FnMut(&[usize]) -> bool,
{
    fn extend<F: FnMut(&[usize]) -> bool>(
        d: &WeightedDigraph,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        min_len: usize,
        max_len: usize,
        f: &mut F,
    ) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        for v in d.out_neighbors(last).collect::<Vec<_>>() {
            if v == start {
                if path.len() >= min_len && !f(path) {
                    return false;
                }
            } else if v > start && !on_path[v] && path.len() < max_len {
                path.push(v);
                on_path[v] = true;
                let go_on = extend(d, path, on_path, min_len, max_len, f);
                on_path[v] = false;
                path.pop();
                if !go_on {
                    return false;
                }
            }
        }
        true
    }

    let n = d.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len);
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        let go_on = extend(d, &mut path, &mut on_path, min_len, max_len, &mut f);
        on_path[s] = false;
        path.pop();
        if !go_on {
            return;
        }
    }
}

/// All simple directed cycles of length at most `max_len`, sorted by
/// length and then by vertex sequence. Loops count as cycles of length 1.
pub fn enumerate_cycles(d: &WeightedDigraph, max_len: usize) -> Result<Vec<Cycle>> {
    if max_len == 0 {
        return Err(Error::LengthBoundTooSmall { min: 1, got: 0 });
    }
    let mut out = Vec::new();
    visit_cycles(d, 1, max_len, |p| {
        out.push(Cycle { vertices: p.to_vec() });
        true
    });
    out.sort();
    Ok(out)
}

pub fn cycles_of_length(d: &WeightedDigraph, len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    visit_cycles(d, len, len, |p| {
        out.push(Cycle { vertices: p.to_vec() });
        true
    });
    out
}

/// The first cycle of exactly `len` vertices in canonical order, if any.
pub fn first_cycle_of_length(d: &WeightedDigraph, len: usize) -> Option<Cycle> {
    let mut found = None;
    if len == 0 {
        return None;
    }
    visit_cycles(d, len, len, |p| {
        found = Some(Cycle { vertices: p.to_vec() });
        false
    });
    found
}

/// The first even cycle of length at least 4, shortest first.
pub fn first_long_even_cycle(d: &WeightedDigraph) -> Option<Cycle> {
    (4..=d.vertex_count()).step_by(2).find_map(|len| first_cycle_of_length(d, len))
}

/// A vertex-disjoint union of cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubdigraph {
    cycles: Vec<Cycle>,
}

impl LinearSubdigraph {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn covered(&self) -> usize {
        self.cycles.iter().map(Cycle::len).sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_even_linear(&self) -> bool {
        self.cycles.iter().all(Cycle::is_even)
    }

    pub fn weight(&self, d: &WeightedDigraph) -> Rational {
        self.cycles
            .iter()
            .map(|c| c.weight(d).expect("cycle arcs belong to the digraph"))
            .product()
    }

    /// `(-1)^{#cycles} * weight`, the term contributed to `a_k`.
    pub fn signed_weight(&self, d: &WeightedDigraph) -> Rational {
        let w = self.weight(d);
        if self.num_cycles() % 2 == 1 {
            -w
        } else {
            w
        }
    }
}

fn check_cover_size(d: &WeightedDigraph, k: usize) -> Result<()> {
    if k == 0 || k > d.vertex_count() {
        return Err(Error::CoverSizeOutOfRange {
            k,
            n: d.vertex_count(),
        });
    }
    Ok(())
}

/// Calls `f` once per linear subdigraph covering between 1 and `max_cover`
/// vertices. Cycles are attached to their minimum vertex and vertices are
/// decided in increasing order, so each subdigraph is produced once.
fn for_each_linear_subdigraph<F>(d: &WeightedDigraph, max_cover: usize, even_only: bool, mut f: F)
where
    F: FnMut(&[&Cycle]),
{
    let n = d.vertex_count();
    let mut by_min: Vec<Vec<Cycle>> = vec![Vec::new(); n];
    if max_cover > 0 {
        visit_cycles(d, 1, max_cover, |p| {
            if !even_only || p.len() % 2 == 0 {
                by_min[p[0]].push(Cycle { vertices: p.to_vec() });
            }
            true
        });
    }

    struct State<'a> {
        by_min: &'a [Vec<Cycle>],
        used: Vec<bool>,
        chosen: Vec<&'a Cycle>,
        covered: usize,
        max_cover: usize,
    }

    fn recurse<'a, F: FnMut(&[&Cycle])>(st: &mut State<'a>, v: usize, f: &mut F) {
        let n = st.used.len();
        if v == n {
            if st.covered > 0 {
                f(&st.chosen);
            }
            return;
        }
        if st.used[v] {
            recurse(st, v + 1, f);
            return;
        }
        recurse(st, v + 1, f);
        let by_min = st.by_min;
        for c in &by_min[v] {
            if st.covered + c.len() > st.max_cover || c.vertices.iter().any(|&x| st.used[x]) {
                continue;
            }
            for &x in &c.vertices {
                st.used[x] = true;
            }
            st.covered += c.len();
            st.chosen.push(c);
            recurse(st, v + 1, f);
            st.chosen.pop();
            st.covered -= c.len();
            for &x in &c.vertices {
                st.used[x] = false;
            }
        }
    }

    let mut st = State {
        by_min: &by_min,
        used: vec![false; n],
        chosen: Vec::new(),
        covered: 0,
        max_cover,
    };
    recurse(&mut st, 0, &mut f);
}

/// All linear subdigraphs covering exactly `k` vertices (even linear ones
/// only when `even_only`).
pub fn enumerate_linear_subdigraphs(
    d: &WeightedDigraph,
    k: usize,
    even_only: bool,
) -> Result<Vec<LinearSubdigraph>> {
    check_cover_size(d, k)?;
    let mut out = Vec::new();
    for_each_linear_subdigraph(d, k, even_only, |cycles| {
        if cycles.iter().map(|c| c.len()).sum::<usize>() == k {
            out.push(LinearSubdigraph {
                cycles: cycles.iter().map(|&c| c.clone()).collect(),
            });
        }
    });
    Ok(out)
}

fn signed_product(d: &WeightedDigraph, cycles: &[&Cycle]) -> Rational {
    let w: Rational = cycles
        .iter()
        .map(|c| c.weight(d).expect("cycle arcs belong to the digraph"))
        .product();
    if cycles.len() % 2 == 1 {
        -w
    } else {
        w
    }
}

/// `a_k = sum over linear subdigraphs L covering k vertices of (-1)^{|L|} w(L)`.
pub fn coefficient_via_subdigraphs(d: &WeightedDigraph, k: usize) -> Result<Rational> {
    check_cover_size(d, k)?;
    let mut total = Rational::zero();
    for_each_linear_subdigraph(d, k, false, |cycles| {
        if cycles.iter().map(|c| c.len()).sum::<usize>() == k {
            total += signed_product(d, cycles);
        }
    });
    Ok(total)
}

/// `[a_1, ..., a_n]` from a single pass over all linear subdigraphs.
pub fn coefficients_via_subdigraphs(d: &WeightedDigraph) -> Vec<Rational> {
    let n = d.vertex_count();
    let mut out = vec![Rational::zero(); n];
    for_each_linear_subdigraph(d, n, false, |cycles| {
        let k: usize = cycles.iter().map(|c| c.len()).sum();
        out[k - 1] += signed_product(d, cycles);
    });
    out
}

/// Coefficient `a_k` of a skew-symmetric weighting: zero for odd `k`,
/// the even-linear sum for even `k`.
pub fn skew_coefficient_via_even_subdigraphs(d: &WeightedDigraph, k: usize) -> Result<Rational> {
    check_cover_size(d, k)?;
    if let Some((i, j)) = d.to_matrix().first_skew_violation() {
        return Err(Error::NotSkewSymmetric(i, j));
    }
    if k % 2 == 1 {
        return Ok(Rational::zero());
    }
    let mut total = Rational::zero();
    for_each_linear_subdigraph(d, k, true, |cycles| {
        if cycles.iter().map(|c| c.len()).sum::<usize>() == k {
            total += signed_product(d, cycles);
        }
    });
    Ok(total)
}

/// Vertex-disjoint digons, i.e. a matching of the underlying graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigonCover {
    digons: Vec<(usize, usize)>,
}

impl DigonCover {
    pub fn digons(&self) -> &[(usize, usize)] {
        &self.digons
    }

    pub fn covered(&self) -> usize {
        2 * self.digons.len()
    }

    /// `prod w(uv) w(vu)` over the digons.
    pub fn weight(&self, d: &WeightedDigraph) -> Rational {
        self.digons
            .iter()
            .map(|&(u, v)| d.weight(u, v).expect("digon arc") * d.weight(v, u).expect("digon arc"))
            .product()
    }
}

fn for_each_digon_cover<F: FnMut(&[(usize, usize)])>(d: &WeightedDigraph, pairs: usize, mut f: F) {
    let n = d.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in d.digons() {
        adj[u].push(v);
    }

    fn recurse<F: FnMut(&[(usize, usize)])>(
        adj: &[Vec<usize>],
        v: usize,
        pairs: usize,
        used: &mut [bool],
        chosen: &mut Vec<(usize, usize)>,
        f: &mut F,
    ) {
        if chosen.len() == pairs {
            f(chosen);
            return;
        }
        if v >= adj.len() {
            return;
        }
        if used[v] {
            recurse(adj, v + 1, pairs, used, chosen, f);
            return;
        }
        for &w in &adj[v] {
            if used[w] {
                continue;
            }
            used[v] = true;
            used[w] = true;
            chosen.push((v, w));
            recurse(adj, v + 1, pairs, used, chosen, f);
            chosen.pop();
            used[v] = false;
            used[w] = false;
        }
        recurse(adj, v + 1, pairs, used, chosen, f);
    }

    let mut used = vec![false; n];
    let mut chosen = Vec::with_capacity(pairs);
    recurse(&adj, 0, pairs, &mut used, &mut chosen, &mut f);
}

/// All collections of vertex-disjoint digons covering exactly `k` vertices.
pub fn enumerate_digon_covers(d: &WeightedDigraph, k: usize) -> Result<Vec<DigonCover>> {
    if k % 2 == 1 {
        return Err(Error::OddDigonCover(k));
    }
    if k == 0 {
        return Err(Error::CoverSizeOutOfRange {
            k,
            n: d.vertex_count(),
        });
    }
    let mut out = Vec::new();
    for_each_digon_cover(d, k / 2, |c| {
        let mut digons = c.to_vec();
        digons.sort_unstable();
        out.push(DigonCover { digons });
    });
    out.sort();
    Ok(out)
}

/// `sum over digon covers of k vertices of prod w(uv) w(vu)`.
pub fn digon_cover_sum(d: &WeightedDigraph, k: usize) -> Result<Rational> {
    Ok(enumerate_digon_covers(d, k)?
        .iter()
        .map(|c| c.weight(d))
        .sum())
}

/// The length-`k` cycles split by the sign of their signed weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedCyclePartition {
    pub positive: Vec<Cycle>,
    pub negative: Vec<Cycle>,
}

pub fn partition_cycles_by_sign(
    d: &WeightedDigraph,
    signing: &SkewSigning,
    k: usize,
) -> Result<SignedCyclePartition> {
    d.require_pwls()?;
    signing.check_against(d)?;
    let mut out = SignedCyclePartition::default();
    let mut cycles = cycles_of_length(d, k);
    cycles.sort();
    for c in cycles {
        let negatives = c
            .arcs()
            .filter(|&(u, v)| signing.arc_sign(u, v) == Some(Sign::Minus))
            .count();
        if negatives % 2 == 0 {
            out.positive.push(c);
        } else {
            out.negative.push(c);
        }
    }
    Ok(out)
}
