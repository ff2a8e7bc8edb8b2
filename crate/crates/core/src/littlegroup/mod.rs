//! Complex irreducible characters of `G = N ⋊ U` with `N = ⟨a⟩` cyclic and
//! `U = (Z/p^n)^*`, by the little-group method.
//!
//! The dual of `N` is `{χ_t : a ↦ ζ_{p^n}^t}`; `U` acts by `u·t = u t`. For
//! each orbit representative `t` with unit stabilizer `S`, every linear
//! character `λ` of `S` gives `ψ(i, u) = ζ^{t i} λ(u)` on `N ⋊ S`, and
//! `Ind_{N⋊S}^G ψ` is irreducible. Each orbit contributes `|S|` irreducibles
//! of degree `|U : S|`.
//!
//! Induction uses the coset section `x = (0, s)` with
//! `s = c^ε b^{-j}`, basis vector `e_m` at `m = ε·e + j`. With this ordering
//! `ρ(a)` is the diagonal `ζ^{t r^j}` (then `ζ^{-t 5^j}` for the `c`-block).
//! Because conjugation here reads `b a b⁻¹ = a^r`, `ρ(b)` is the transpose of
//! the familiar cyclic-shift-with-`ω`-corner shape: `e_m ↦ e_{m-1}` and
//! `e_0 ↦ ω e_{e-1}`.

mod model;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use model::MatrixModel;

use crate::error::{Error, Result};
use crate::exactnum::arith::{euler_phi, gcd, inv_mod, mul_mod, pow_mod};
use crate::exactnum::{Cyclotomic, Matrix, Rational};
use crate::holgroup::{ConjClasses, Element, Holomorph, Subgroup};

/// One orbit of `U` on `Z/p^n`, i.e. on the dual of `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    /// `k` with representative `p^{n-k}` (`k ≥ 1`) or `0` (`k = 0`).
    pub index: u32,
    pub representative: u64,
    pub members: Vec<u64>,
    /// Units fixing the representative, sorted.
    pub stabilizer: Vec<u64>,
    /// `e` with `S ∩ ⟨b⟩ = ⟨b^e⟩`; `1` when `b` is absent.
    pub b_step: u64,
    /// Whether `c = -1` is a generator and lies in the stabilizer.
    pub c_in_stabilizer: bool,
    /// Unit section `s_m = c^ε b^{-j}`, indexed by `m = ε·e + j`.
    pub transversal: Vec<u64>,
}

impl Orbit {
    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn stabilizes(&self, u: u64) -> bool {
        self.stabilizer.binary_search(&u).is_ok()
    }

    /// Order of `S ∩ ⟨b⟩`.
    pub fn b_part_order(&self, group: &Holomorph) -> u64 {
        group.b_unit().map_or(1, |(_, o)| o) / self.b_step
    }
}

/// The orbits `O_0, …, O_n` of the unit group on residues modulo `p^n`.
pub fn dual_orbits(group: &Holomorph) -> Result<Vec<Orbit>> {
    let (p, n, q) = (group.p(), group.n(), group.modulus());
    let units = group.units();
    let (b, b_order) = group.b_unit().unwrap_or((1 % q, 1));
    let b_inv = inv_mod(b, q).unwrap_or(0);
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let t = if k == 0 { 0 } else { p.pow(n - k) % q };
        let mut members: Vec<u64> = units.iter().map(|&u| mul_mod(u, t, q)).collect();
        members.sort_unstable();
        members.dedup();
        let stabilizer: Vec<u64> = units.iter().copied().filter(|&u| mul_mod(u, t, q) == t).collect();
        let b_step = (1..=b_order).find(|&e| mul_mod(pow_mod(b, e, q), t, q) == t).unwrap();
        let c_in_stabilizer = group.c_unit().is_some_and(|c| mul_mod(c, t, q) == t);
        let product_order = (b_order / b_step) * if c_in_stabilizer { 2 } else { 1 };
        if product_order != stabilizer.len() as u64 {
            return Err(Error::Falsified(format!(
                "stabilizer of {t} is not the product of its parts in <b> and <c>"
            )));
        }
        let c_cosets = match group.c_unit() {
            Some(_) if !c_in_stabilizer => 2,
            _ => 1,
        };
        let mut transversal = Vec::new();
        for eps in 0..c_cosets {
            for j in 0..b_step {
                let s = pow_mod(b_inv, j, q);
                transversal.push(if eps == 1 { mul_mod(s, q - 1, q) } else { s });
            }
        }
        if transversal.len() != members.len() {
            return Err(Error::Falsified(format!(
                "orbit of {t} has {} members but {} cosets",
                members.len(),
                transversal.len()
            )));
        }
        out.push(Orbit {
            index: k,
            representative: t,
            members,
            stabilizer,
            b_step,
            c_in_stabilizer,
            transversal,
        });
    }
    Ok(out)
}

/// Parameters of one irreducible: the orbit and a linear character `λ` of
/// the unit stabilizer with `λ(b^e) = ω = ζ_s^{omega_exp}` (`s = omega_root`)
/// and, when `-1` stabilizes, `λ(c) = epsilon`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrrepParams {
    pub orbit: u32,
    pub omega_root: u64,
    pub omega_exp: u64,
    pub epsilon: Option<i8>,
}

impl IrrepParams {
    /// Multiplicative order of `ω`; the `d` in the `Q(ζ_d)` labels.
    pub fn omega_order(&self) -> u64 {
        self.omega_root / gcd(self.omega_exp, self.omega_root)
    }

    fn sort_key(&self) -> (u32, u64, bool) {
        (self.orbit, self.omega_exp, self.epsilon == Some(-1))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexIrrep {
    pub degree: u64,
    pub params: IrrepParams,
    /// Character values on the conjugacy classes, in class order.
    pub values: Vec<Cyclotomic>,
}

impl ComplexIrrep {
    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| *v == Cyclotomic::one())
    }
}

/// `χ` values and the data needed to rebuild the induced matrices.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Holomorph,
    classes: ConjClasses,
    orbits: Vec<Orbit>,
    irreps: Vec<ComplexIrrep>,
    exponent: u64,
}

/// `λ(u)` for `u` in the stabilizer, as `(exponent of ζ_E, sign)`.
fn linear_value(group: &Holomorph, orbit: &Orbit, params: &IrrepParams, exponent: u64, u: u64) -> (u64, bool) {
    let (j, eps) = group.unit_word(u);
    debug_assert_eq!(j % orbit.b_step, 0);
    let s = params.omega_root;
    let root_exp = (params.omega_exp * (j / orbit.b_step)) % s * (exponent / s);
    let negative = eps == 1 && params.epsilon == Some(-1);
    (root_exp, negative)
}

impl CharacterTable {
    pub fn compute(group: &Holomorph, budget: u64) -> Result<Self> {
        let classes = group.conjugacy_classes(budget)?;
        let orbits = dual_orbits(group)?;
        let exponent = group.exponent();
        let q = group.modulus();
        let reps = classes.representatives();
        let mut irreps = Vec::new();
        for orbit in &orbits {
            let s = orbit.b_part_order(group);
            let signs: &[Option<i8>] = if orbit.c_in_stabilizer {
                &[Some(1), Some(-1)]
            } else {
                &[None]
            };
            // Σ_{t' ∈ O} ζ_q^{t' i} as exponents of ζ_E, per class representative
            let orbit_sums: Vec<Option<Vec<u64>>> = reps
                .iter()
                .map(|g| {
                    orbit.stabilizes(g.u).then(|| {
                        orbit
                            .members
                            .iter()
                            .map(|&t| mul_mod(t, g.i, q) * (exponent / q))
                            .collect()
                    })
                })
                .collect();
            for w in 0..s {
                for &epsilon in signs {
                    let params = IrrepParams {
                        orbit: orbit.index,
                        omega_root: s,
                        omega_exp: w,
                        epsilon,
                    };
                    let values = reps
                        .iter()
                        .zip(&orbit_sums)
                        .map(|(g, sum)| match sum {
                            None => Cyclotomic::zero_in(exponent),
                            Some(exps) => {
                                let (lam, negative) = linear_value(group, orbit, &params, exponent, g.u);
                                let coeff = BigInt::from(if negative { -1 } else { 1 });
                                Cyclotomic::from_power_terms(
                                    exponent,
                                    exps.iter().map(|&e| (((e + lam) % exponent) as i64, coeff.clone())),
                                )
                            }
                        })
                        .collect();
                    irreps.push(ComplexIrrep {
                        degree: orbit.size(),
                        params,
                        values,
                    });
                }
            }
        }
        irreps.sort_by_key(|r| (r.degree, r.params.sort_key()));
        Ok(CharacterTable {
            group: group.clone(),
            classes,
            orbits,
            irreps,
            exponent,
        })
    }

    pub fn group(&self) -> &Holomorph {
        &self.group
    }

    pub fn classes(&self) -> &ConjClasses {
        &self.classes
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn irreps(&self) -> &[ComplexIrrep] {
        &self.irreps
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    /// Exponent `E` of `G`; every character value lies in `Q(ζ_E)`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    /// `(1/|G|) Σ_classes |C| x(C) conj(y(C))`.
    pub fn inner_product(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> Cyclotomic {
        let total: Cyclotomic = self
            .classes
            .classes
            .iter()
            .zip(x.iter().zip(y))
            .map(|(c, (a, b))| (a * &b.complex_conjugate()).scalar_mul(&Rational::from_integer(c.size.into())))
            .sum();
        total.scalar_mul(&Rational::new(1.into(), self.group.order().into()))
    }

    /// Class indices where `χ(g) = χ(1)`.
    pub fn kernel_classes(&self, idx: usize) -> Vec<usize> {
        let row = &self.irreps[idx].values;
        (0..row.len()).filter(|&c| row[c] == row[0]).collect()
    }

    pub fn kernel(&self, idx: usize) -> Subgroup {
        let mut members: Vec<Element> = self
            .kernel_classes(idx)
            .into_iter()
            .flat_map(|c| self.classes.classes[c].members.iter().copied())
            .collect();
        members.sort_unstable();
        Subgroup::from_sorted(members.clone(), members)
    }

    pub fn is_faithful(&self, idx: usize) -> bool {
        self.kernel_classes(idx) == [0]
    }

    pub fn faithful_index(&self) -> Result<usize> {
        let faithful: Vec<usize> = (0..self.len()).filter(|&i| self.is_faithful(i)).collect();
        match faithful.as_slice() {
            [one] => Ok(*one),
            _ => Err(Error::Falsified(format!(
                "expected exactly one faithful irreducible character, found {}",
                faithful.len()
            ))),
        }
    }

    pub fn faithful_irrep(&self) -> Result<&ComplexIrrep> {
        Ok(&self.irreps[self.faithful_index()?])
    }

    fn orbit_of(&self, idx: usize) -> &Orbit {
        &self.orbits[self.irreps[idx].params.orbit as usize]
    }

    /// `ρ(g)` for the induced representation: `ρ(g) e_m = ψ(x_{m'}⁻¹ g x_m) e_{m'}`.
    pub fn represent(&self, idx: usize, g: Element) -> Matrix<Cyclotomic> {
        let group = &self.group;
        let q = group.modulus();
        let orbit = self.orbit_of(idx);
        let params = &self.irreps[idx].params;
        let e_big = self.exponent;
        let t = orbit.representative;
        let coset_of = self.coset_lookup(orbit);
        let d = orbit.transversal.len();
        let mut m = Matrix::zeros(d);
        for (col, &s_m) in orbit.transversal.iter().enumerate() {
            let row = coset_of[&mul_mod(g.u, s_m, q)];
            let s_inv = inv_mod(orbit.transversal[row], q).unwrap();
            let h_i = mul_mod(s_inv, g.i, q);
            let h_u = mul_mod(mul_mod(s_inv, g.u, q), s_m, q);
            let (lam, negative) = linear_value(group, orbit, params, e_big, h_u);
            let exp = (mul_mod(t, h_i, q) * (e_big / q) + lam) % e_big;
            let mut value = Cyclotomic::root_of_unity(e_big, exp as i64);
            if negative {
                value = -value;
            }
            m.set(row, col, value);
        }
        m
    }

    fn coset_lookup(&self, orbit: &Orbit) -> HashMap<u64, usize> {
        let q = self.group.modulus();
        let mut map = HashMap::new();
        for (m, &s) in orbit.transversal.iter().enumerate() {
            for &v in &orbit.stabilizer {
                map.insert(mul_mod(s, v, q), m);
            }
        }
        map
    }

    /// Induced matrices on the generators of `G`.
    pub fn matrix_model(&self, idx: usize) -> MatrixModel<Cyclotomic> {
        let images = self
            .group
            .generators()
            .iter()
            .map(|g| self.represent(idx, g.element))
            .collect();
        MatrixModel::new(images)
    }

    /// Index of the row `σ_k(χ_idx)` for `k` coprime to the exponent.
    pub fn galois_image(&self, idx: usize, k: u64) -> Result<usize> {
        let target = self.galois_row(idx, k)?;
        self.irreps
            .iter()
            .position(|r| r.values == target)
            .ok_or_else(|| Error::Falsified(format!("Galois conjugate of row {idx} under σ_{k} is not a row")))
    }

    pub(crate) fn galois_row(&self, idx: usize, k: u64) -> Result<Vec<Cyclotomic>> {
        self.irreps[idx]
            .values
            .iter()
            .map(|v| v.embed(self.exponent).galois_apply(k as i64))
            .collect()
    }

    /// Rows keyed by their coefficient vectors in `Q(ζ_E)`.
    pub(crate) fn row_keys(&self) -> HashMap<Vec<(Vec<BigInt>, BigInt)>, usize> {
        self.irreps
            .iter()
            .enumerate()
            .map(|(i, r)| (r.values.iter().map(|v| v.key_at(self.exponent)).collect(), i))
            .collect()
    }

    /// Values of the element `g` under every row (a column of the table).
    pub fn column(&self, g: Element) -> Vec<Cyclotomic> {
        let c = self.classes.class_index(&self.group, g);
        self.irreps.iter().map(|r| r.values[c].clone()).collect()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.sizes()
    }

    pub fn representatives(&self) -> Vec<Element> {
        self.classes.representatives()
    }
}

/// `(1 + p + … + p^n) - p^{n-1}`; valid for `p` odd and for `p = 2`, `n ≥ 3`.
pub fn complex_count_formula(p: u64, n: u32) -> Result<u64> {
    closed_form_domain(p, n)?;
    Ok((0..=n).map(|k| p.pow(k)).sum::<u64>() - p.pow(n - 1))
}

/// Degree ↦ number of irreducibles of that degree, from the closed forms.
pub fn expected_degree_multiset(p: u64, n: u32) -> Result<BTreeMap<u64, u64>> {
    closed_form_domain(p, n)?;
    let mut out = BTreeMap::new();
    if p == 2 {
        out.insert(1, 2u64.pow(n));
        for k in 2..=n {
            *out.entry(2u64.pow(k - 1)).or_default() += 2u64.pow(n - k);
        }
    } else {
        out.insert(1, euler_phi(p.pow(n)));
        for k in 1..=n {
            *out.entry(euler_phi(p.pow(k))).or_default() += p.pow(n - k);
        }
    }
    Ok(out)
}

pub(crate) fn closed_form_domain(p: u64, n: u32) -> Result<()> {
    if p == 2 && n < 3 {
        return Err(Error::OutOfDomain(format!(
            "closed forms for p = 2 need n >= 3, got n = {n}"
        )));
    }
    Ok(())
}
