//! Skew-signings: one sign per digon `{u, v}`, `u < v`.
//!
//! Sign `+` means `w'(uv) = w(uv)` and `w'(vu) = -w(vu)`; `-` the opposite.
//! Digons are ordered lexicographically. In bit strings `1` is `+` and `0`
//! is `-`, one character per digon in that order.

use crate::error::{Error, Result};
use crate::graph::{RationalMatrix, WeightedDigraph};
use crate::rational::Rational;

/// Default maximum number of digons for exhaustive signing enumeration.
pub const DEFAULT_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, w: &Rational) -> Rational {
        match self {
            Sign::Plus => w.clone(),
            Sign::Minus => -w,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewSigning {
    digons: Vec<(usize, usize)>,
    signs: Vec<Sign>,
}

impl SkewSigning {
    pub fn new(digons: Vec<(usize, usize)>, signs: Vec<Sign>) -> Result<Self> {
        if digons.len() != signs.len() || digons.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::SigningMismatch);
        }
        Ok(Self { digons, signs })
    }

    pub fn all_plus(d: &WeightedDigraph) -> Result<Self> {
        d.require_pwls()?;
        let digons = d.digons();
        let signs = vec![Sign::Plus; digons.len()];
        Ok(Self { digons, signs })
    }

    pub fn from_bits(d: &WeightedDigraph, bits: &str) -> Result<Self> {
        d.require_pwls()?;
        let digons = d.digons();
        let signs = bits
            .chars()
            .map(|c| match c {
                '1' => Ok(Sign::Plus),
                '0' => Ok(Sign::Minus),
                _ => Err(Error::BadSigningSpec(format!("bits:{bits}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if signs.len() != digons.len() {
            return Err(Error::BadSigningSpec(format!(
                "bits:{bits} (expected {} bits)",
                digons.len()
            )));
        }
        Ok(Self { digons, signs })
    }

    /// Signing number `index` of the binary counter: bit `j` set flips digon `j` to `-`.
    fn from_counter(digons: &[(usize, usize)], index: u64) -> Self {
        let signs = (0..digons.len())
            .map(|j| if index >> j & 1 == 1 { Sign::Minus } else { Sign::Plus })
            .collect();
        Self {
            digons: digons.to_vec(),
            signs,
        }
    }

    pub fn digons(&self) -> &[(usize, usize)] {
        &self.digons
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn bits(&self) -> String {
        self.signs
            .iter()
            .map(|s| if *s == Sign::Plus { '1' } else { '0' })
            .collect()
    }

    pub fn digon_sign(&self, digon: &(usize, usize)) -> Option<Sign> {
        self.digons.binary_search(digon).ok().map(|i| self.signs[i])
    }

    /// Sign applied to arc `uv`, `None` when `{u, v}` is not a digon.
    pub fn arc_sign(&self, u: usize, v: usize) -> Option<Sign> {
        if u < v {
            self.digon_sign(&(u, v))
        } else {
            self.digon_sign(&(v, u)).map(Sign::flipped)
        }
    }

    pub fn with_sign(&self, digon: &(usize, usize), sign: Sign) -> Result<Self> {
        let i = self.digons.binary_search(digon).map_err(|_| Error::SigningMismatch)?;
        let mut out = self.clone();
        out.signs[i] = sign;
        Ok(out)
    }

    pub fn flipped_at(&self, digon: &(usize, usize)) -> Result<Self> {
        let s = self.digon_sign(digon).ok_or(Error::SigningMismatch)?;
        self.with_sign(digon, s.flipped())
    }

    pub(crate) fn check_against(&self, d: &WeightedDigraph) -> Result<()> {
        if self.digons != d.digons() {
            return Err(Error::SigningMismatch);
        }
        Ok(())
    }

    /// The signed weighting `w'` as a digraph.
    pub fn signed_digraph(&self, d: &WeightedDigraph) -> Result<WeightedDigraph> {
        Ok(WeightedDigraph::from_matrix(&apply_signing(d, self)?))
    }
}

fn check_cap(d: &WeightedDigraph, cap: usize) -> Result<Vec<(usize, usize)>> {
    d.require_pwls()?;
    let digons = d.digons();
    if digons.len() > cap || digons.len() >= 64 {
        return Err(Error::CapExceeded {
            count: digons.len(),
            cap,
        });
    }
    Ok(digons)
}

/// Number of skew-signings, checked against the cap.
pub fn signing_count(d: &WeightedDigraph, cap: usize) -> Result<u64> {
    Ok(1u64 << check_cap(d, cap)?.len())
}

/// Iterates over all `2^#digons` skew-signings, binary counter order,
/// starting from all-plus.
pub fn enumerate_skew_signings(
    d: &WeightedDigraph,
    cap: usize,
) -> Result<impl ExactSizeIterator<Item = SkewSigning> + Clone> {
    let digons = check_cap(d, cap)?;
    let total = 1u64 << digons.len();
    Ok((0..total as usize).map(move |i| SkewSigning::from_counter(&digons, i as u64)))
}

/// Signing number `index` in enumeration order.
pub fn nth_signing(d: &WeightedDigraph, index: u64) -> Result<SkewSigning> {
    d.require_pwls()?;
    Ok(SkewSigning::from_counter(&d.digons(), index))
}

/// `A(D, w')` for the signing.
pub fn apply_signing(d: &WeightedDigraph, s: &SkewSigning) -> Result<RationalMatrix> {
    d.require_pwls()?;
    s.check_against(d)?;
    let mut m = d.to_matrix();
    for ((u, v), w) in d.arcs() {
        let sign = s.arc_sign(u, v).ok_or(Error::SigningMismatch)?;
        m.set(u, v, sign.apply(w));
    }
    Ok(m)
}

/// Parses `none`, `all-plus` or `bits:<01...>`. `none` yields `None`.
pub fn parse_signing_spec(d: &WeightedDigraph, spec: &str) -> Result<Option<SkewSigning>> {
    match spec {
        "none" => Ok(None),
        "all-plus" => SkewSigning::all_plus(d).map(Some),
        _ => match spec.strip_prefix("bits:") {
            Some(bits) => SkewSigning::from_bits(d, bits).map(Some),
            None => Err(Error::BadSigningSpec(spec.to_string())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use num_traits::Signed;

    fn unit(edges: &[(usize, usize)], n: usize) -> WeightedDigraph {
        WeightedDigraph::from_graph(edges, n).unwrap()
    }

    fn digon23() -> WeightedDigraph {
        WeightedDigraph::new(2, [((0, 1), int(2)), ((1, 0), int(3))]).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_skew_signings(&digon23(), DEFAULT_CAP).unwrap().len(), 2);
        assert_eq!(enumerate_skew_signings(&unit(&[(0, 1), (1, 2)], 3), 20).unwrap().len(), 4);
        let tri = unit(&[(0, 1), (1, 2), (0, 2)], 3);
        let all: Vec<_> = enumerate_skew_signings(&tri, 20).unwrap().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0].bits(), "111");
        assert_eq!(all[1].bits(), "011");
        assert_eq!(all[7].bits(), "000");
        assert_eq!(
            enumerate_skew_signings(&tri, 2).err(),
            Some(Error::CapExceeded { count: 3, cap: 2 })
        );
    }

    #[test]
    fn signing_invariants_hold() {
        let tri = WeightedDigraph::from_graph_weighted(&[(0, 1), (1, 2), (0, 2)], 3, |(u, v)| {
            (int(u as i64 + 1), int(v as i64 + 2))
        })
        .unwrap();
        for s in enumerate_skew_signings(&tri, 20).unwrap() {
            let m = apply_signing(&tri, &s).unwrap();
            for ((u, v), w) in tri.arcs() {
                assert_eq!(&m.get(u, v).abs(), w);
                assert!(m.get(u, v) * m.get(v, u) < int(0));
            }
        }
    }

    #[test]
    fn apply_examples() {
        let d = digon23();
        let m = apply_signing(&d, &SkewSigning::all_plus(&d).unwrap()).unwrap();
        assert_eq!(m, RationalMatrix::from_i64_rows(&[&[0, 2], &[-3, 0]]).unwrap());

        let tri = unit(&[(0, 1), (1, 2), (0, 2)], 3);
        let plus = SkewSigning::all_plus(&tri).unwrap();
        let m = apply_signing(&tri, &plus).unwrap();
        assert!(m.is_skew_symmetric());

        let flipped = apply_signing(&tri, &plus.flipped_at(&(1, 2)).unwrap()).unwrap();
        let mut changed = 0;
        for i in 0..3 {
            for j in 0..3 {
                if m.get(i, j) != flipped.get(i, j) {
                    assert_eq!(*m.get(i, j), -flipped.get(i, j));
                    changed += 1;
                }
            }
        }
        assert_eq!(changed, 2);

        let other = SkewSigning::all_plus(&unit(&[(0, 1), (1, 2)], 3)).unwrap();
        assert_eq!(apply_signing(&tri, &other).unwrap_err(), Error::SigningMismatch);
    }

    #[test]
    fn signing_specs() {
        let tri = unit(&[(0, 1), (1, 2), (0, 2)], 3);
        assert_eq!(parse_signing_spec(&tri, "none").unwrap(), None);
        assert_eq!(parse_signing_spec(&tri, "bits:111").unwrap().unwrap().bits(), "111");
        assert_eq!(parse_signing_spec(&tri, "bits:010").unwrap().unwrap().signs()[1], Sign::Plus);
        assert!(parse_signing_spec(&tri, "bits:11").is_err());
        assert!(parse_signing_spec(&tri, "bits:11x").is_err());
        assert!(parse_signing_spec(&tri, "random").is_err());
        let bad = WeightedDigraph::new(2, [((0, 1), int(1))]).unwrap();
        assert_eq!(parse_signing_spec(&bad, "all-plus").unwrap_err(), Error::NotPwls);
    }
}
