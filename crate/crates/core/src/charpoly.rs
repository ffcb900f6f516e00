//! Exact characteristic polynomials.
//!
//! [`char_poly`] uses Berkowitz's division-free algorithm, so every
//! coefficient is a ring expression in the entries. [`elimination_determinant`]
//! is an independent fraction-free (Bareiss) route to the determinant.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::graph::RationalMatrix;
use crate::rational::{to_canonical_string, Rational};

/// `x^n + a_1 x^(n-1) + ... + a_n`, stored as `[a_1, ..., a_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPolynomial {
    coeffs: Vec<Rational>,
}

impl CharPolynomial {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_k`; `a_0 = 1`.
    pub fn coeff(&self, k: usize) -> Rational {
        if k == 0 {
            Rational::one()
        } else {
            self.coeffs[k - 1].clone()
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            degree: self.degree(),
            coeffs: self.coeffs.iter().map(to_canonical_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyJson {
    pub degree: usize,
    pub coeffs: Vec<String>,
}

impl fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let power = |p: usize| match p {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{p}"),
        };
        if n == 0 {
            return write!(f, "1");
        }
        write!(f, "{}", power(n))?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = n - k - 1;
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            let mag = if mag.is_one() && p > 0 {
                String::new()
            } else if mag.is_integer() || p == 0 {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            write!(f, " {sign} {mag}{}", power(p))?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - m)` by Berkowitz's algorithm.
pub fn char_poly(m: &RationalMatrix) -> CharPolynomial {
    let n = m.dim();
    // coefficients of det(xI - A_r), leading 1 first
    let mut poly = vec![Rational::one()];
    for r in 0..n {
        // column of the lower-triangular Toeplitz factor:
        // [1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C]
        let mut column = Vec::with_capacity(r + 2);
        column.push(Rational::one());
        column.push(-m.get(r, r));
        let mut v: Vec<Rational> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for step in 0..r {
            let dot = (0..r).fold(Rational::zero(), |acc, j| acc + m.get(r, j) * &v[j]);
            column.push(-dot);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(Rational::zero(), |acc, j| acc + m.get(i, j) * &v[j]))
                    .collect();
            }
        }
        let next: Vec<Rational> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(Rational::zero(), |acc, j| acc + &column[i - j] * &poly[j])
            })
            .collect();
        poly = next;
    }
    poly.remove(0);
    CharPolynomial { coeffs: poly }
}

/// `det(m) = (-1)^n a_n`, read off the characteristic polynomial.
pub fn determinant(m: &RationalMatrix) -> Rational {
    let p = char_poly(m);
    let n = p.degree();
    let an = p.coeff(n);
    if n.is_multiple_of(2) {
        an
    } else {
        -an
    }
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
pub fn elimination_determinant(m: &RationalMatrix) -> Rational {
    let n = m.dim();
    let mut a = m.rows();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = Rational::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return Rational::one();
    }
    sign * &a[n - 1][n - 1]
}
