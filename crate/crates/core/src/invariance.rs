//! Does every skew-signing give the same characteristic polynomial?
//!
//! [`brute_force_invariance`] answers by enumeration. [`decide_invariance`]
//! answers structurally: invariance holds exactly when the digraph has no
//! even cycle of length at least 4 and is cycle-symmetric. The common
//! polynomial then only depends on digon covers ([`invariant_char_poly`]).

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::{char_poly, CharPolynomial, PolyJson};
use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::rational::Rational;
use crate::signing::{apply_signing, enumerate_skew_signings, SkewSigning};
use crate::subdigraph::{
    digon_cover_sum, first_cycle_of_length, first_long_even_cycle, partition_cycles_by_sign, Cycle,
};
use crate::symmetry::{
    build_scaling_certificate, cycle_symmetry_up_to, AsymmetryWitness, CycleAsymmetry,
    ScalingCertificate, SymmetryVerdict, WitnessJson,
};

/// Characteristic polynomial of every signing, in enumeration order.
pub fn signing_char_polys(d: &WeightedDigraph, cap: usize) -> Result<Vec<(SkewSigning, CharPolynomial)>> {
    let signings: Vec<SkewSigning> = enumerate_skew_signings(d, cap)?.collect();
    signings
        .into_par_iter()
        .map(|s| {
            let p = char_poly(&apply_signing(d, &s)?);
            Ok((s, p))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceOutcome {
    pub signings: usize,
    /// Distinct polynomials in order of first appearance.
    pub polys: Vec<CharPolynomial>,
    /// The first signing and the first one whose polynomial differs from it.
    pub distinguishing: Option<(SkewSigning, SkewSigning)>,
}

impl BruteForceOutcome {
    pub fn invariant(&self) -> bool {
        self.polys.len() == 1
    }

    pub fn to_json(&self) -> BruteJson {
        BruteJson {
            invariant: self.invariant(),
            signings: self.signings,
            distinct_polys: self.polys.iter().map(CharPolynomial::to_json).collect(),
            distinguishing_pair: self
                .distinguishing
                .as_ref()
                .map(|(a, b)| [format!("bits:{}", a.bits()), format!("bits:{}", b.bits())]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteJson {
    pub invariant: bool,
    pub signings: usize,
    pub distinct_polys: Vec<PolyJson>,
    pub distinguishing_pair: Option<[String; 2]>,
}

pub fn brute_force_invariance(d: &WeightedDigraph, cap: usize) -> Result<BruteForceOutcome> {
    let all = signing_char_polys(d, cap)?;
    let mut polys: Vec<CharPolynomial> = Vec::new();
    let mut distinguishing = None;
    for (s, p) in &all {
        if !polys.contains(p) {
            if let Some(first) = polys.first() {
                debug_assert_ne!(first, p);
                if distinguishing.is_none() {
                    distinguishing = Some((all[0].0.clone(), s.clone()));
                }
            }
            polys.push(p.clone());
        }
    }
    Ok(BruteForceOutcome {
        signings: all.len(),
        polys,
        distinguishing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvarianceVerdict {
    Invariant {
        common_poly: CharPolynomial,
        certificate: ScalingCertificate,
    },
    NotInvariant {
        even_cycle: Option<Cycle>,
        asymmetry: Option<CycleAsymmetry>,
        certificate: Option<ScalingCertificate>,
    },
}

impl InvarianceVerdict {
    pub fn is_invariant(&self) -> bool {
        matches!(self, InvarianceVerdict::Invariant { .. })
    }

    pub fn common_poly(&self) -> Option<&CharPolynomial> {
        match self {
            InvarianceVerdict::Invariant { common_poly, .. } => Some(common_poly),
            InvarianceVerdict::NotInvariant { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&ScalingCertificate> {
        match self {
            InvarianceVerdict::Invariant { certificate, .. } => Some(certificate),
            InvarianceVerdict::NotInvariant { certificate, .. } => certificate.as_ref(),
        }
    }

    pub fn to_json(&self) -> VerdictJson {
        let witness = match self {
            InvarianceVerdict::Invariant { .. } => None,
            InvarianceVerdict::NotInvariant {
                even_cycle,
                asymmetry,
                ..
            } => Some(VerdictWitnessJson {
                even_cycle: even_cycle.as_ref().map(Cycle::to_one_based),
                asymmetric_cycle: asymmetry.as_ref().map(WitnessJson::from),
            }),
        };
        VerdictJson {
            invariant: self.is_invariant(),
            common_poly: self.common_poly().map(CharPolynomial::to_json),
            mu: self.certificate().map(ScalingCertificate::mu_strings),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub invariant: bool,
    pub common_poly: Option<PolyJson>,
    pub mu: Option<Vec<String>>,
    pub witness: Option<VerdictWitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictWitnessJson {
    pub even_cycle: Option<Vec<usize>>,
    pub asymmetric_cycle: Option<WitnessJson>,
}

/// `x^n + sum_{k even} b_k x^(n-k)` with `b_k` the digon-cover sums.
fn digon_cover_poly(d: &WeightedDigraph) -> Result<CharPolynomial> {
    let n = d.vertex_count();
    let coeffs = (1..=n)
        .map(|k| {
            if k % 2 == 1 {
                Ok(Rational::zero())
            } else {
                digon_cover_sum(d, k)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharPolynomial::from_coeffs(coeffs))
}

pub fn decide_invariance(d: &WeightedDigraph) -> Result<InvarianceVerdict> {
    d.require_pwls()?;
    let even_cycle = first_long_even_cycle(d);
    let scaling = build_scaling_certificate(d)?;
    Ok(match (even_cycle, scaling) {
        (None, Ok(certificate)) => InvarianceVerdict::Invariant {
            common_poly: digon_cover_poly(d)?,
            certificate,
        },
        (even_cycle, scaling) => {
            let (certificate, asymmetry) = match scaling {
                Ok(c) => (Some(c), None),
                Err(w) => (None, Some(w)),
            };
            InvarianceVerdict::NotInvariant {
                even_cycle,
                asymmetry,
                certificate,
            }
        }
    })
}

/// The polynomial shared by all skew-signings. Fails with the witness when
/// the signings do not share one.
pub fn invariant_char_poly(d: &WeightedDigraph) -> Result<CharPolynomial> {
    match decide_invariance(d)? {
        InvarianceVerdict::Invariant { common_poly, .. } => Ok(common_poly),
        InvarianceVerdict::NotInvariant {
            even_cycle,
            asymmetry,
            ..
        } => Err(Error::not_invariant(
            even_cycle.as_ref(),
            asymmetry.as_ref().map(|a| &a.cycle),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationSummary {
    pub all_same: bool,
    pub distinct_polys: Vec<CharPolynomial>,
}

impl OrientationSummary {
    pub fn distinct_poly_count(&self) -> usize {
        self.distinct_polys.len()
    }
}

/// Skew-characteristic polynomials over all orientations of a simple graph,
/// via the unit-weight pwls digraph whose skew-signings are the orientations.
pub fn orientations_of_graph(edges: &[(usize, usize)], n: usize, cap: usize) -> Result<OrientationSummary> {
    let d = WeightedDigraph::from_graph(edges, n)?;
    let outcome = brute_force_invariance(&d, cap)?;
    Ok(OrientationSummary {
        all_same: outcome.invariant(),
        distinct_polys: outcome.polys,
    })
}

/// Coefficient `b_q` of the signing's characteristic polynomial from the
/// signed `q`-cycles: `-sum_{C+} w(C) + sum_{C-} w(C)`, plus the digon-cover
/// sum when `q >= 4` is even. For `q = 2` the digons are themselves the
/// covers and are counted once.
///
/// Requires cycle-symmetry up to length `q - 1` and no even cycles of
/// length `4..q`.
pub fn signed_cycle_coefficient(d: &WeightedDigraph, s: &SkewSigning, q: usize) -> Result<Rational> {
    d.require_pwls()?;
    let n = d.vertex_count();
    if q == 0 || q > n {
        return Err(Error::CoverSizeOutOfRange { k: q, n });
    }
    if q > 3 {
        if let SymmetryVerdict::Asymmetric(w) = cycle_symmetry_up_to(d, q - 1)? {
            let at = match w {
                AsymmetryWitness::Cycle(c) => c.cycle.to_string(),
                AsymmetryWitness::SignPattern { i, j } => format!("({}, {})", i + 1, j + 1),
            };
            return Err(Error::HypothesisViolated(format!(
                "not cycle-symmetric up to length {}: {at}",
                q - 1
            )));
        }
    }
    for len in (4..q).step_by(2) {
        if let Some(c) = first_cycle_of_length(d, len) {
            return Err(Error::HypothesisViolated(format!(
                "even cycle {c} of length {len} < {q}"
            )));
        }
    }
    let parts = partition_cycles_by_sign(d, s, q)?;
    let weight = |c: &Cycle| c.weight(d).expect("enumerated cycle");
    let mut b = Rational::zero();
    for c in &parts.positive {
        b -= weight(c);
    }
    for c in &parts.negative {
        b += weight(c);
    }
    if q.is_multiple_of(2) && q >= 4 {
        b += digon_cover_sum(d, q)?;
    }
    Ok(b)
}
