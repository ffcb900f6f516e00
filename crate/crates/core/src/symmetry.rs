//! Cycle-symmetry: every cycle has the same weight product as its reverse.
//!
//! For a weighting satisfying the sign-pattern condition (`a_ij a_ji > 0`
//! or both zero) this is equivalent to diagonal similarity to a symmetric
//! matrix. The witness of that similarity is a [`ScalingCertificate`]:
//! positive `mu` with `a_ij mu_j = a_ji mu_i` on every arc, where
//! `mu_v = delta_v^2` and `diag(delta)^-1 A diag(delta)` is symmetric.
//!
//! Square roots never appear exactly. The symmetrized weights are carried
//! as exact squares with a sign, plus a lossy `f64` view for display.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Arc, RationalMatrix, WeightedDigraph};
use crate::rational::{to_canonical_string, to_f64, Rational};
use crate::signing::{Sign, SkewSigning};
use crate::subdigraph::{cycles_of_length, Cycle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalingCertificate {
    mu: Vec<Rational>,
}

impl ScalingCertificate {
    pub fn mu(&self) -> &[Rational] {
        &self.mu
    }

    /// Exact check of `mu > 0` and `a_ij mu_j = a_ji mu_i` for all `i, j`.
    pub fn verify(&self, m: &RationalMatrix) -> bool {
        let n = m.dim();
        self.mu.len() == n
            && self.mu.iter().all(Signed::is_positive)
            && (0..n).all(|i| (0..n).all(|j| m.get(i, j) * &self.mu[j] == m.get(j, i) * &self.mu[i]))
    }

    pub fn mu_strings(&self) -> Vec<String> {
        self.mu.iter().map(to_canonical_string).collect()
    }
}

/// A cycle whose weight differs from that of its reverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleAsymmetry {
    pub cycle: Cycle,
    pub forward: Rational,
    pub reverse: Rational,
}

impl CycleAsymmetry {
    fn of(cycle: Cycle, m: &RationalMatrix) -> Self {
        let product = |c: &Cycle| c.arcs().fold(Rational::one(), |acc, (u, v)| acc * m.get(u, v));
        let forward = product(&cycle);
        let reverse = product(&cycle.reversed());
        Self {
            cycle,
            forward,
            reverse,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AsymmetryWitness {
    /// `a_ij a_ji < 0`, or exactly one of them is zero.
    SignPattern { i: usize, j: usize },
    Cycle(CycleAsymmetry),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetryVerdict {
    /// The certificate is present whenever full cycle-symmetry was decided.
    Symmetric(Option<ScalingCertificate>),
    Asymmetric(AsymmetryWitness),
}

impl SymmetryVerdict {
    pub fn is_cycle_symmetric(&self) -> bool {
        matches!(self, SymmetryVerdict::Symmetric(_))
    }

    pub fn certificate(&self) -> Option<&ScalingCertificate> {
        match self {
            SymmetryVerdict::Symmetric(c) => c.as_ref(),
            SymmetryVerdict::Asymmetric(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&AsymmetryWitness> {
        match self {
            SymmetryVerdict::Asymmetric(w) => Some(w),
            SymmetryVerdict::Symmetric(_) => None,
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            mu: self.certificate().map(ScalingCertificate::mu_strings),
            witness: self.witness().map(WitnessJson::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub mu: Option<Vec<String>>,
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Cycle {
        cycle: Vec<usize>,
        forward: String,
        reverse: String,
    },
    Pair {
        pair: [usize; 2],
    },
}

impl From<&AsymmetryWitness> for WitnessJson {
    fn from(w: &AsymmetryWitness) -> Self {
        match w {
            AsymmetryWitness::SignPattern { i, j } => WitnessJson::Pair { pair: [i + 1, j + 1] },
            AsymmetryWitness::Cycle(c) => WitnessJson::from(c),
        }
    }
}

impl From<&CycleAsymmetry> for WitnessJson {
    fn from(c: &CycleAsymmetry) -> Self {
        WitnessJson::Cycle {
            cycle: c.cycle.to_one_based(),
            forward: to_canonical_string(&c.forward),
            reverse: to_canonical_string(&c.reverse),
        }
    }
}

/// Spanning-forest propagation of `mu` over the nonzero pattern of `m`.
/// Requires the sign-pattern condition. A failing non-tree pair closes a
/// fundamental cycle, returned as the witness.
#[allow(clippy::result_large_err)]
fn propagate(m: &RationalMatrix) -> std::result::Result<ScalingCertificate, CycleAsymmetry> {
    let n = m.dim();
    let neighbors = |u: usize| (0..n).filter(move |&v| v != u && !m.get(u, v).is_zero());
    let mut mu: Vec<Option<Rational>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if mu[root].is_some() {
            continue;
        }
        mu[root] = Some(Rational::one());
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let mu_u = mu[u].clone().expect("visited");
            for v in neighbors(u) {
                if mu[v].is_none() {
                    mu[v] = Some(&mu_u * m.get(v, u) / m.get(u, v));
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
    }
    let mu: Vec<Rational> = mu.into_iter().map(|x| x.expect("every vertex rooted")).collect();
    for i in 0..n {
        for j in i + 1..n {
            if m.get(i, j) * &mu[j] != m.get(j, i) * &mu[i] {
                return Err(CycleAsymmetry::of(fundamental_cycle(&parent, i, j), m));
            }
        }
    }
    Ok(ScalingCertificate { mu })
}

/// The cycle formed by the non-tree arc `i -> j` and the tree path back to `i`.
fn fundamental_cycle(parent: &[usize], i: usize, j: usize) -> Cycle {
    let to_root = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let (up_i, up_j) = (to_root(i), to_root(j));
    let lca = *up_i.iter().find(|v| up_j.contains(v)).expect("same component");
    let mut walk = vec![i];
    walk.extend(up_j.iter().take_while(|&&v| v != lca));
    walk.push(lca);
    let below_lca: Vec<usize> = up_i.iter().take_while(|&&v| v != lca).copied().collect();
    walk.extend(below_lca.iter().rev());
    walk.pop();
    Cycle::new(walk).expect("tree paths to the lca are disjoint")
}

/// Decides cycle-symmetry of a zero-diagonal matrix.
pub fn check_matrix_cycle_symmetric(m: &RationalMatrix) -> Result<SymmetryVerdict> {
    let n = m.dim();
    if let Some(i) = (0..n).find(|&i| !m.get(i, i).is_zero()) {
        return Err(Error::NonZeroDiagonal(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (m.get(i, j), m.get(j, i));
            let ok = (a.is_zero() && b.is_zero()) || (a * b).is_positive();
            if !ok {
                return Ok(SymmetryVerdict::Asymmetric(AsymmetryWitness::SignPattern { i, j }));
            }
        }
    }
    Ok(match propagate(m) {
        Ok(cert) => SymmetryVerdict::Symmetric(Some(cert)),
        Err(w) => SymmetryVerdict::Asymmetric(AsymmetryWitness::Cycle(w)),
    })
}

/// Scaling certificate of a pwls digraph, or the asymmetric cycle that
/// rules one out. Components get independent roots (their lowest vertex).
pub fn build_scaling_certificate(
    d: &WeightedDigraph,
) -> Result<std::result::Result<ScalingCertificate, CycleAsymmetry>> {
    d.require_pwls()?;
    Ok(propagate(&d.to_matrix()))
}

/// Checks `w(C) = w(C*)` for every cycle of length at most `q`.
/// With `q >= n` a successful verdict carries the scaling certificate.
pub fn cycle_symmetry_up_to(d: &WeightedDigraph, q: usize) -> Result<SymmetryVerdict> {
    d.require_pwls()?;
    if q < 2 {
        return Err(Error::LengthBoundTooSmall { min: 2, got: q });
    }
    let n = d.vertex_count();
    let m = d.to_matrix();
    for len in 3..=q.min(n) {
        let mut cycles = cycles_of_length(d, len);
        cycles.sort();
        for c in cycles {
            let w = CycleAsymmetry::of(c, &m);
            if w.forward != w.reverse {
                return Ok(SymmetryVerdict::Asymmetric(AsymmetryWitness::Cycle(w)));
            }
        }
    }
    let cert = if q >= n { propagate(&m).ok() } else { None };
    Ok(SymmetryVerdict::Symmetric(cert))
}

/// Exact squares `w(uv) w(vu)` of the symmetrized weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedWeights {
    n: usize,
    squares: BTreeMap<Arc, Rational>,
}

impl SymmetrizedWeights {
    pub fn square(&self, u: usize, v: usize) -> Option<&Rational> {
        self.squares.get(&(u, v))
    }

    pub fn value(&self, u: usize, v: usize) -> Option<f64> {
        self.square(u, v).map(|s| to_f64(s).sqrt())
    }

    pub fn squares(&self) -> impl Iterator<Item = (Arc, &Rational)> + '_ {
        self.squares.iter().map(|(&a, s)| (a, s))
    }

    pub fn is_symmetric(&self) -> bool {
        self.squares.iter().all(|(&(u, v), s)| self.squares.get(&(v, u)) == Some(s))
    }

    pub fn float_matrix(&self) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; self.n]; self.n];
        for (&(u, v), s) in &self.squares {
            out[u][v] = to_f64(s).sqrt();
        }
        out
    }
}

pub fn symmetrize(d: &WeightedDigraph) -> Result<SymmetrizedWeights> {
    d.require_pwls()?;
    let squares = d
        .arcs()
        .map(|((u, v), w)| ((u, v), w * d.weight(v, u).expect("pwls is symmetric")))
        .collect();
    Ok(SymmetrizedWeights {
        n: d.vertex_count(),
        squares,
    })
}

/// Signed exact squares of the skew-symmetrized signing: the sign of
/// `w'(uv)` together with `w(uv) w(vu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewSymmetrizedWeights {
    n: usize,
    entries: BTreeMap<Arc, (Sign, Rational)>,
}

impl SkewSymmetrizedWeights {
    pub fn entry(&self, u: usize, v: usize) -> Option<&(Sign, Rational)> {
        self.entries.get(&(u, v))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.entries.iter().all(|(&(u, v), (s, sq))| {
            self.entries
                .get(&(v, u))
                .is_some_and(|(t, tq)| *t == s.flipped() && tq == sq)
        })
    }

    pub fn float_matrix(&self) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; self.n]; self.n];
        for (&(u, v), (s, sq)) in &self.entries {
            let mag = to_f64(sq).sqrt();
            out[u][v] = if *s == Sign::Plus { mag } else { -mag };
        }
        out
    }
}

pub fn skew_symmetrize(d: &WeightedDigraph, signing: &SkewSigning) -> Result<SkewSymmetrizedWeights> {
    d.require_pwls()?;
    signing.check_against(d)?;
    let entries = d
        .arcs()
        .map(|((u, v), w)| {
            let sign = signing.arc_sign(u, v).expect("every pwls arc lies on a digon");
            ((u, v), (sign, w * d.weight(v, u).expect("pwls is symmetric")))
        })
        .collect();
    Ok(SkewSymmetrizedWeights {
        n: d.vertex_count(),
        entries,
    })
}
