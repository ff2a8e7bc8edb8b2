//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! An element is stored in the power basis `1, ζ_m, …, ζ_m^{φ(m)-1}` as a
//! vector of integer numerators over one shared positive denominator. The
//! public view of the coefficients is a list of reduced rationals.
//!
//! Binary operations lift both operands to the least common multiple of the
//! conductors. The conductor is only minimised on request
//! ([`Cyclotomic::minimize_conductor`], [`Cyclotomic::try_to_rational`] and
//! serialisation).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::arith::{divisors, euler_phi, gcd, lcm, mobius};
use super::poly::cyclotomic_polynomial;
use super::Rational;
use crate::error::{Error, Result};

/// Reduction data for one conductor: `reduce[e]` holds `X^e mod Φ_m` for
/// `0 <= e < m` as sparse `(index, coefficient)` pairs.
struct FieldTables {
    phi: usize,
    reduce: Vec<Vec<(usize, BigInt)>>,
}

static TABLES: Lazy<RwLock<HashMap<u64, Arc<FieldTables>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn tables(m: u64) -> Arc<FieldTables> {
    if let Some(t) = TABLES.read().unwrap().get(&m) {
        return t.clone();
    }
    let poly = cyclotomic_polynomial(m);
    let phi = poly.degree();
    let mut reduce = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..m {
        reduce.push(
            cur.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect(),
        );
        // multiply by X and reduce the overflow term with Φ_m (monic)
        let top = cur.pop().unwrap();
        cur.insert(0, BigInt::zero());
        if !top.is_zero() {
            for (j, slot) in cur.iter_mut().enumerate() {
                *slot -= &top * poly.coeff(j);
            }
        }
    }
    let t = Arc::new(FieldTables { phi, reduce });
    TABLES.write().unwrap().entry(m).or_insert_with(|| t.clone()).clone()
}

/// An element of `Q(ζ_m)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    fn from_raw(conductor: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len() as u64, euler_phi(conductor));
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        if !den.is_one() {
            let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
            if !g.is_one() {
                num.iter_mut().for_each(|c| *c /= &g);
                den /= &g;
            }
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        }
        Cyclotomic { conductor, num, den }
    }

    pub fn zero_in(conductor: u64) -> Self {
        let phi = euler_phi(conductor) as usize;
        Cyclotomic {
            conductor,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            num: vec![q.numer().clone()],
            den: q.denom().clone(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Cyclotomic {
            conductor: 1,
            num: vec![n.into()],
            den: BigInt::one(),
        }
    }

    /// `ζ_m^k`, with `k` taken modulo `m`.
    pub fn root_of_unity(m: u64, k: i64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let e = k.rem_euclid(m as i64) as usize;
        let t = tables(m);
        let mut num = vec![BigInt::zero(); t.phi];
        for (j, c) in &t.reduce[e] {
            num[*j] += c;
        }
        Cyclotomic {
            conductor: m,
            num,
            den: BigInt::one(),
        }
    }

    /// `Σ c · ζ_m^e` over the given `(exponent, coefficient)` terms.
    pub fn from_power_terms<I>(m: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let t = tables(m);
        let mut num = vec![BigInt::zero(); t.phi];
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (j, r) in &t.reduce[e.rem_euclid(m as i64) as usize] {
                num[*j] += &c * r;
            }
        }
        Cyclotomic {
            conductor: m,
            num,
            den: BigInt::one(),
        }
    }

    /// Builds an element from power-basis coefficients; `coeffs.len()` must be `φ(m)`.
    pub fn from_coeffs(m: u64, coeffs: &[Rational]) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let phi = euler_phi(m) as usize;
        if coeffs.len() != phi {
            return Err(Error::Parse(format!(
                "conductor {m} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::from_raw(m, num, den))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients as reduced rationals (length `φ(conductor)`).
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    /// The rational value, or `None` when some higher coefficient is non-zero.
    pub fn try_to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Rational integer value, if the element is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// Re-expresses the element in `Q(ζ_M)` for a multiple `M` of the conductor.
    pub fn embed(&self, target: u64) -> Self {
        assert!(
            target % self.conductor == 0,
            "cannot embed conductor {} into {target}",
            self.conductor
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let t = tables(target);
        let mut num = vec![BigInt::zero(); t.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (idx, r) in &t.reduce[j * step] {
                num[*idx] += c * r;
            }
        }
        Cyclotomic {
            conductor: target,
            num,
            den: self.den.clone(),
        }
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.conductor, other.conductor);
        (self.embed(m), other.embed(m))
    }

    pub fn scalar_mul(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::from_raw(self.conductor, num, &self.den * q.denom())
    }

    fn add_same(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            return Self::from_raw(self.conductor, num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Self::from_raw(self.conductor, num, &self.den * &other.den)
    }

    fn mul_same(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        let m = self.conductor;
        if other.is_rational() {
            let num = self.num.iter().map(|c| c * &other.num[0]).collect();
            return Self::from_raw(m, num, &self.den * &other.den);
        }
        if self.is_rational() {
            return other.mul_same(self);
        }
        let t = tables(m);
        let phi = t.phi;
        let mut wide = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut num: Vec<BigInt> = wide.drain(..phi).collect();
        for (off, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (phi + off) % m as usize;
            for (j, r) in &t.reduce[e] {
                num[*j] += &c * r;
            }
        }
        Self::from_raw(m, num, &self.den * &other.den)
    }

    /// The automorphism `σ_k : ζ_m ↦ ζ_m^k`.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let m = self.conductor;
        let k_mod = k.rem_euclid(m as i64) as u64;
        if gcd(k_mod, m) != 1 {
            return Err(Error::NotCoprime { k, m });
        }
        let t = tables(m);
        let mut num = vec![BigInt::zero(); t.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((j as u64 * k_mod) % m) as usize;
            for (idx, r) in &t.reduce[e] {
                num[*idx] += c * r;
            }
        }
        Ok(Cyclotomic {
            conductor: m,
            num,
            den: self.den.clone(),
        })
    }

    pub fn complex_conjugate(&self) -> Self {
        let m = self.conductor;
        self.galois_apply(m as i64 - 1)
            .expect("m - 1 is always a unit modulo m")
    }

    /// True when `σ_k(self) = self` for every unit `k ≡ 1 (mod d)`.
    fn fixed_over(&self, d: u64) -> bool {
        let m = self.conductor;
        let mut k = 1 + d;
        while k < m + 1 {
            if gcd(k, m) == 1 && k % m != 1 {
                let img = self.galois_apply(k as i64).unwrap();
                if img.num != self.num {
                    return false;
                }
            }
            k += d;
        }
        true
    }

    /// Smallest conductor whose field contains this element.
    pub fn minimal_conductor(&self) -> u64 {
        if self.is_rational() {
            return 1;
        }
        divisors(self.conductor)
            .into_iter()
            .find(|&d| d == self.conductor || self.fixed_over(d))
            .unwrap()
    }

    /// The same element written over its minimal conductor.
    pub fn minimize_conductor(&self) -> Self {
        if let Some(q) = self.try_to_rational() {
            return Self::from_rational(&q);
        }
        let d = self.minimal_conductor();
        if d == self.conductor {
            return self.clone();
        }
        self.restrict_to(d)
    }

    /// Solves for the coordinates of `self` in the power basis of `Q(ζ_d)`.
    fn restrict_to(&self, d: u64) -> Self {
        let m = self.conductor;
        let phi_m = self.num.len();
        let phi_d = euler_phi(d) as usize;
        // columns: images of ζ_d^j inside Q(ζ_m); augmented with self
        let cols: Vec<Cyclotomic> = (0..phi_d).map(|j| Self::root_of_unity(d, j as i64).embed(m)).collect();
        let mut rows: Vec<Vec<Rational>> = (0..phi_m)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| Rational::from_integer(c.num[i].clone())).collect();
                row.push(Rational::new(self.num[i].clone(), self.den.clone()));
                row
            })
            .collect();
        let solution = super::linalg::solve_consistent(&mut rows, phi_d)
            .expect("element is fixed by the subgroup, so it lies in the subfield");
        Self::from_coeffs(d, &solution).unwrap()
    }

    /// Canonical key: minimal conductor plus reduced coefficients.
    pub fn canonical_key(&self) -> (u64, Vec<BigInt>, BigInt) {
        let c = self.minimize_conductor();
        (c.conductor, c.num, c.den)
    }

    /// Integer numerators and shared denominator after embedding into `Q(ζ_M)`.
    pub fn key_at(&self, target: u64) -> (Vec<BigInt>, BigInt) {
        let e = self.embed(target);
        (e.num, e.den)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }
}

/// Sum of all primitive `m`-th roots of unity, which is `μ(m)`.
pub fn sum_primitive_roots(m: u64) -> Rational {
    Rational::from_integer(BigInt::from(mobius(m)))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.lift_pair(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return self.add_same(rhs);
        }
        let (a, b) = self.lift_pair(rhs);
        a.add_same(&b)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return self.mul_same(rhs);
        }
        let (a, b) = self.lift_pair(rhs);
        a.mul_same(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_integer(v)
    }
}

/// ASCII rendering over the minimal conductor, e.g. `-1 - 2*z9^3 + 1/2*z9`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.minimize_conductor();
        if c.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, q) in c.coeffs().into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let root = match j {
                0 => String::new(),
                1 => format!("z{}", c.conductor),
                _ => format!("z{}^{}", c.conductor, j),
            };
            if root.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{mag}*{root}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    conductor: u64,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.minimize_conductor();
        CyclotomicJson {
            conductor: c.conductor,
            coeffs: c
                .coeffs()
                .into_iter()
                .map(|q| [q.numer().to_string(), q.denom().to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CyclotomicJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|[n, q]| {
                let n: BigInt = n.parse().map_err(D::Error::custom)?;
                let q: BigInt = q.parse().map_err(D::Error::custom)?;
                if q.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::new(n, q))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Cyclotomic::from_coeffs(raw.conductor, &coeffs).map_err(D::Error::custom)
    }
}
