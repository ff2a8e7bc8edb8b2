//! Rational representations: Galois classes of complex irreducibles, their
//! rational characters `Ψ = Σ χ^σ`, the Wedderburn decomposition of `Q[G]`
//! and explicit rational models where one is available.

mod cyclic;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use cyclic::{cyclic_rational_reps, CyclicRationalRep};

use crate::error::{Error, Result};
use crate::exactnum::arith::{divisors, euler_phi, units_mod};
use crate::exactnum::{companion_matrix, cyclotomic_polynomial, Cyclotomic, Matrix, Rational};
use crate::holgroup::{Element, Holomorph, Subgroup};
use crate::littlegroup::{closed_form_domain, CharacterTable, IrrepParams, MatrixModel};

pub type RationalMatrixModel = MatrixModel<Rational>;

/// One Galois class of complex irreducibles and its rational character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalIrrep {
    /// Row indices into the complex character table.
    pub members: Vec<usize>,
    pub member_params: Vec<IrrepParams>,
    pub complex_degree: u64,
    /// `Ψ(1)`.
    pub degree: u64,
    /// `Ψ` on the conjugacy classes.
    pub psi: Vec<i64>,
    /// Least `m` with the character field equal to `Q(ζ_m)`.
    pub field_conductor: u64,
    /// Order of the `ω` parameter; the `d` in `Q(ζ_d)` labels.
    pub paper_label: u64,
    pub schur_index: u64,
    pub kernel_classes: Vec<usize>,
}

impl RationalIrrep {
    pub fn galois_order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn kernel(&self, table: &CharacterTable) -> Subgroup {
        table.kernel(self.members[0])
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_classes == [0]
    }
}

/// Partitions the complex irreducibles into orbits of `Gal(Q(ζ_E)/Q)`.
pub fn galois_classes(table: &CharacterTable) -> Result<Vec<RationalIrrep>> {
    let e = table.exponent();
    let keys = table.row_keys();
    let ks = units_mod(e);
    let mut visited = vec![false; table.len()];
    let mut out = Vec::new();
    for start in 0..table.len() {
        if visited[start] {
            continue;
        }
        // images[k] = index of σ_k(χ_start), aligned with `ks`
        let mut images = Vec::with_capacity(ks.len());
        for &k in &ks {
            let row: Vec<_> = table.galois_row(start, k)?.iter().map(|v| v.key_at(e)).collect();
            let idx = *keys
                .get(&row)
                .ok_or_else(|| Error::Falsified(format!("σ_{k} of row {start} is not an irreducible character")))?;
            images.push(idx);
        }
        let mut members = images.clone();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            visited[m] = true;
        }

        let field_conductor = divisors(e)
            .into_iter()
            .find(|&m| ks.iter().zip(&images).all(|(&k, &img)| k % m != 1 % m || img == start))
            .unwrap();
        if members.len() as u64 != euler_phi(field_conductor) {
            return Err(Error::Falsified(format!(
                "character field of row {start} is not Q(ζ_{field_conductor})"
            )));
        }

        let irreps = table.irreps();
        let mut psi = Vec::with_capacity(table.classes().len());
        for c in 0..table.classes().len() {
            let total: Cyclotomic = members.iter().map(|&m| irreps[m].values[c].clone()).sum();
            psi.push(total.to_i64().ok_or_else(|| {
                Error::Falsified(format!("Ψ of the class of row {start} is not integral at class {c}"))
            })?);
        }
        let kernel_classes: Vec<usize> = (0..psi.len()).filter(|&c| psi[c] == psi[0]).collect();
        if members.iter().any(|&m| table.kernel_classes(m) != kernel_classes) {
            return Err(Error::Falsified(format!(
                "kernel of Ψ differs from the kernel of its members (row {start})"
            )));
        }
        let complex_degree = irreps[start].degree;
        out.push(RationalIrrep {
            member_params: members.iter().map(|&m| irreps[m].params).collect(),
            complex_degree,
            degree: psi[0] as u64,
            psi,
            field_conductor,
            paper_label: irreps[members[0]].params.omega_order(),
            schur_index: 1,
            kernel_classes,
            members,
        });
    }
    out.sort_by_key(|r| (r.degree, r.field_conductor, r.paper_label, r.members[0]));
    Ok(out)
}

/// Closed-form number of rational irreducibles: `d(φ(p^n)) + n(n+1)/2` for
/// `p` odd, `4(n-1) + n(n-1)/2` for `p = 2`, `n ≥ 3`.
pub fn rational_count_formula(p: u64, n: u32) -> Result<u64> {
    closed_form_domain(p, n)?;
    let n = n as u64;
    if p == 2 {
        Ok(4 * (n - 1) + n * (n - 1) / 2)
    } else {
        let d = divisors(euler_phi(p.pow(n as u32))).len() as u64;
        Ok(d + n * (n + 1) / 2)
    }
}

/// A simple summand `M_n(Q(ζ_d))` of `Q[G]`, repeated `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WedderburnComponent {
    pub n: u64,
    pub conductor: u64,
    pub paper_label: u64,
    pub multiplicity: u64,
}

impl WedderburnComponent {
    /// `Q`-dimension of all copies together.
    pub fn dimension(&self) -> u64 {
        self.multiplicity * self.n * self.n * euler_phi(self.conductor)
    }

    fn field(&self) -> String {
        if self.conductor == 1 {
            "Q".to_string()
        } else {
            format!("Q(ζ_{})", self.paper_label)
        }
    }
}

impl fmt::Display for WedderburnComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        let one = if self.n == 1 {
            field
        } else {
            format!("M_{}({field})", self.n)
        };
        let copies = vec![one; self.multiplicity as usize];
        write!(f, "{}", copies.join(" ⊕ "))
    }
}

/// Summands keyed by `(n, conductor, paper_label)`; valid because every
/// Schur index is 1 for these groups.
pub fn wedderburn(classes: &[RationalIrrep]) -> Vec<WedderburnComponent> {
    let mut counts: BTreeMap<(u64, u64, u64), u64> = BTreeMap::new();
    for r in classes {
        *counts
            .entry((r.complex_degree * r.schur_index, r.field_conductor, r.paper_label))
            .or_default() += 1;
    }
    counts
        .into_iter()
        .map(|((n, conductor, paper_label), multiplicity)| WedderburnComponent {
            n,
            conductor,
            paper_label,
            multiplicity,
        })
        .collect()
}

pub fn render_wedderburn(components: &[WedderburnComponent]) -> String {
    components
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

/// `Q(ζ_{p^n})` as a `Q`-vector space with basis `ζ^j`, `j < φ(p^n)`: `a`
/// acts by multiplication by `ζ`, a unit `u` by the field automorphism `ζ ↦ ζ^u`.
pub fn faithful_rational_model(group: &Holomorph) -> RationalMatrixModel {
    let q = group.modulus();
    let images = group
        .generators()
        .iter()
        .map(|g| {
            if g.element.u == 1 % q {
                companion_matrix(&cyclotomic_polynomial(q))
            } else {
                automorphism_matrix(q, g.element.u)
            }
        })
        .collect();
    MatrixModel::new(images)
}

/// Matrix of `σ_u` on the power basis of `Q(ζ_q)`; column `j` holds `ζ^{uj}`.
fn automorphism_matrix(q: u64, u: u64) -> Matrix<Rational> {
    let d = euler_phi(q) as usize;
    let mut m = Matrix::zeros(d);
    for j in 0..d {
        let image = Cyclotomic::root_of_unity(q, (u * j as u64 % q) as i64);
        for (row, c) in image.embed(q).coeffs().into_iter().enumerate() {
            m.set(row, j, c);
        }
    }
    m
}

/// Rational model of a degree-one Galois class: if `χ(g) = ζ_o^{e(g)}` then
/// `g ↦ C_{Φ_o}^{e(g)}`, whose trace is `Σ_σ χ^σ(g)`.
pub fn linear_rational_model(table: &CharacterTable, class: &RationalIrrep) -> Result<RationalMatrixModel> {
    if class.complex_degree != 1 {
        return Err(Error::InvalidParams("linear model needs a degree-one class".into()));
    }
    let group = table.group();
    let chi = class.members[0];
    let values: Vec<Cyclotomic> = group
        .generators()
        .iter()
        .map(|g| table.column(g.element)[chi].clone())
        .collect();
    let e = table.exponent();
    let exps: Vec<u64> = values
        .iter()
        .map(|v| {
            (0..e)
                .find(|&k| Cyclotomic::root_of_unity(e, k as i64) == *v)
                .ok_or_else(|| Error::Falsified("linear character value is not a root of unity".into()))
        })
        .collect::<Result<_>>()?;
    // image is generated by ζ_E^{exps}; its order o is E / gcd(E, exps…)
    let g = exps.iter().fold(e, |acc, &x| crate::exactnum::arith::gcd(acc, x));
    let o = e / g;
    let c = companion_matrix(&cyclotomic_polynomial(o));
    let images = exps.iter().map(|&x| c.pow(x / g)).collect();
    Ok(MatrixModel::new(images))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchurStatus {
    /// An explicit rational model was built and trace-checked.
    Certified,
    /// Index 1 is taken as a known fact; only global consistency is checked.
    Asserted,
}

impl fmt::Display for SchurStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchurStatus::Certified => "certified",
            SchurStatus::Asserted => "asserted",
        })
    }
}

/// Certifies Schur index 1 where a rational model is constructed: every
/// degree-one class and the faithful class.
pub fn schur_index_report(table: &CharacterTable, classes: &[RationalIrrep]) -> Result<Vec<SchurStatus>> {
    let group = table.group();
    classes
        .iter()
        .map(|class| {
            let model = if class.complex_degree == 1 {
                linear_rational_model(table, class)?
            } else if class.is_faithful() {
                faithful_rational_model(group)
            } else {
                return Ok(SchurStatus::Asserted);
            };
            model.check_relations(group)?;
            let traces = model.trace_function(group, table.classes());
            let expected: Vec<Rational> = class.psi.iter().map(|&v| Rational::from_integer(v.into())).collect();
            if traces != expected {
                return Err(Error::Falsified(format!(
                    "rational model trace differs from Ψ for the class of row {}",
                    class.members[0]
                )));
            }
            Ok(SchurStatus::Certified)
        })
        .collect()
}

/// The faithful Galois class (its `Ψ` is the faithful irreducible itself).
pub fn faithful_class(classes: &[RationalIrrep]) -> Result<&RationalIrrep> {
    let mut faithful = classes.iter().filter(|c| c.is_faithful());
    match (faithful.next(), faithful.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::Falsified(
            "expected exactly one faithful rational irreducible".into(),
        )),
    }
}

/// `Ψ` evaluated at an arbitrary element.
pub fn psi_at(table: &CharacterTable, class: &RationalIrrep, g: Element) -> i64 {
    class.psi[table.classes().class_index(table.group(), g)]
}

#[cfg(test)]
mod tests;
