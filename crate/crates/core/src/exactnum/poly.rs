//! Dense integer polynomials and the cyclotomic polynomials `Φ_m`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use super::arith::{divisors, euler_phi};

/// Integer coefficients, lowest degree first, no trailing zeros (except the
/// zero polynomial which is empty).
pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Division by a monic polynomial, returning `(quotient, remainder)`.
pub fn poly_divrem_monic(num: &[BigInt], den: &[BigInt]) -> (IntPoly, IntPoly) {
    assert!(den.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let mut rem: IntPoly = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for shift in (0..quot.len()).rev() {
        let lead = rem[shift + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, c) in den.iter().enumerate() {
            rem[shift + j] -= &lead * c;
        }
        quot[shift] = lead;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// `X^m - 1`.
pub fn x_pow_minus_one(m: usize) -> IntPoly {
    let mut p = vec![BigInt::zero(); m + 1];
    p[0] = -BigInt::one();
    p[m] = BigInt::one();
    p
}

/// The monic cyclotomic polynomial `Φ_m`, coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicPoly {
    pub index: u64,
    pub coeffs: Vec<BigInt>,
}

impl CyclotomicPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Companion matrix coefficients are read from here; `Φ_m` has small
    /// integer coefficients for every index this crate touches.
    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (j, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "X".to_string(),
                (1, false) => format!("{mag}X"),
                (_, true) => format!("X^{j}"),
                (_, false) => format!("{mag}X^{j}"),
            };
            terms.push((sign, body));
        }
        let mut out = String::new();
        for (idx, (sign, body)) in terms.into_iter().enumerate() {
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

static CYCLOTOMIC_CACHE: Lazy<RwLock<HashMap<u64, Arc<CyclotomicPoly>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// `Φ_m`, obtained by exact division of `X^m - 1` by the product of `Φ_d`
/// over the proper divisors `d` of `m`.
pub fn cyclotomic_polynomial(m: u64) -> Arc<CyclotomicPoly> {
    assert!(m >= 1, "cyclotomic index must be positive");
    if let Some(hit) = CYCLOTOMIC_CACHE.read().unwrap().get(&m) {
        return hit.clone();
    }
    let mut divisor_product: IntPoly = vec![BigInt::one()];
    for d in divisors(m) {
        if d < m {
            divisor_product = poly_mul(&divisor_product, &cyclotomic_polynomial(d).coeffs);
        }
    }
    let (quot, rem) = poly_divrem_monic(&x_pow_minus_one(m as usize), &divisor_product);
    assert!(rem.is_empty(), "X^{m} - 1 not divisible by proper cyclotomic factors");
    debug_assert_eq!(quot.len() as u64 - 1, euler_phi(m));
    let poly = Arc::new(CyclotomicPoly { index: m, coeffs: quot });
    CYCLOTOMIC_CACHE
        .write()
        .unwrap()
        .entry(m)
        .or_insert_with(|| poly.clone())
        .clone()
}
