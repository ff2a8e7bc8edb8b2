//! Minimal degrees of faithful quasi-permutation and permutation
//! representations.
//!
//! For an irreducible `χ` with Galois class `Γ(χ)`:
//! `d(χ) = |Γ(χ)| χ(1)`, `m(χ) = |min_g Σ_σ χ^σ(g)|` (0 for the trivial
//! character) and `c(χ) = Σ_σ χ^σ + m(χ)·1`, so `c(χ)(1) = d(χ) + m(χ)`.
//! With a unique minimal normal subgroup, `c(G)` is the least `c(χ)(1)` over
//! faithful `χ`, `q(G)` weights by Schur indices, and `p(G)` is the least
//! index of a core-free subgroup.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holgroup::{BitSet, Holomorph, Subgroup};
use crate::littlegroup::{CharacterTable, IrrepParams};
use crate::ratreps::{RationalIrrep, SchurStatus};

/// Default cap on `|G|` for the subgroup oracle.
pub const DEFAULT_ORACLE_BOUND: u64 = 100;

/// Default cap on the number of nontrivial Galois classes in the subset search.
pub const DEFAULT_CLASS_BUDGET: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPermData {
    pub row: usize,
    pub galois_order: u64,
    pub d_val: u64,
    pub m_val: u64,
    pub c_degree: u64,
    /// `c(χ)` on the conjugacy classes.
    pub c_values: Vec<i64>,
}

fn class_of_row(classes: &[RationalIrrep], row: usize) -> &RationalIrrep {
    classes
        .iter()
        .find(|c| c.members.contains(&row))
        .expect("every row lies in a Galois class")
}

/// `m(χ)`: zero for the trivial character, else `|min Ψ|` over classes.
pub fn m_of_chi(table: &CharacterTable, classes: &[RationalIrrep], row: usize) -> u64 {
    if table.irreps()[row].is_trivial() {
        return 0;
    }
    let psi = &class_of_row(classes, row).psi;
    psi.iter().copied().min().unwrap().unsigned_abs()
}

pub fn c_of_chi(table: &CharacterTable, classes: &[RationalIrrep], row: usize) -> Result<QuasiPermData> {
    let class = class_of_row(classes, row);
    let m_val = m_of_chi(table, classes, row);
    let c_values: Vec<i64> = class.psi.iter().map(|&v| v + m_val as i64).collect();
    if c_values.iter().any(|&v| v < 0) {
        return Err(Error::Falsified(format!("c(χ) is negative somewhere for row {row}")));
    }
    let d_val = class.galois_order() * table.irreps()[row].degree;
    Ok(QuasiPermData {
        row,
        galois_order: class.galois_order(),
        d_val,
        m_val,
        c_degree: d_val + m_val,
        c_values,
    })
}

fn require_unique_minimal_normal(group: &Holomorph, budget: u64) -> Result<()> {
    let mins = group.minimal_normal_subgroups(budget)?;
    if mins.len() != 1 {
        return Err(Error::Falsified(format!(
            "expected a unique minimal normal subgroup, found {}",
            mins.len()
        )));
    }
    Ok(())
}

/// `c(G) = min c(χ)(1)` over faithful irreducibles, with the first such row as witness.
pub fn c_of_group(table: &CharacterTable, classes: &[RationalIrrep], budget: u64) -> Result<(u64, usize)> {
    require_unique_minimal_normal(table.group(), budget)?;
    (0..table.len())
        .filter(|&i| table.is_faithful(i))
        .map(|i| c_of_chi(table, classes, i).map(|d| (d.c_degree, i)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::Falsified("no faithful irreducible character".into()))
}

/// `q(G) = min m_Q(χ)·c(χ)(1)` over faithful `χ`, and the status of the
/// Schur-index premise used for the minimizer.
pub fn q_of_group(
    table: &CharacterTable,
    classes: &[RationalIrrep],
    schur: &[SchurStatus],
    budget: u64,
) -> Result<(u64, SchurStatus)> {
    require_unique_minimal_normal(table.group(), budget)?;
    let mut best: Option<(u64, usize)> = None;
    for i in (0..table.len()).filter(|&i| table.is_faithful(i)) {
        let class_idx = classes.iter().position(|c| c.members.contains(&i)).unwrap();
        let value = classes[class_idx].schur_index * c_of_chi(table, classes, i)?.c_degree;
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, class_idx));
        }
    }
    let (q, class_idx) = best.ok_or_else(|| Error::Falsified("no faithful irreducible character".into()))?;
    Ok((q, schur[class_idx]))
}

pub fn p_of_group_formula(p: u64, n: u32) -> u64 {
    p.pow(n)
}

/// Least index of a core-free subgroup, found by full subgroup enumeration.
/// Only valid when `G` has a unique minimal normal subgroup, which is checked.
pub fn p_of_group_oracle(group: &Holomorph, order_bound: u64) -> Result<(u64, Subgroup)> {
    if group.order() > order_bound {
        return Err(Error::BudgetExceeded {
            what: "permutation-degree oracle",
            size: group.order(),
            budget: order_bound,
        });
    }
    require_unique_minimal_normal(group, order_bound)?;
    let subgroups = group.all_subgroups(order_bound)?;
    // least index = largest core-free order; witness is the first such in canonical order
    let best_order = subgroups
        .iter()
        .filter(|h| group.is_core_free(h))
        .map(Subgroup::order)
        .max()
        .unwrap();
    let witness = subgroups
        .into_iter()
        .find(|h| h.order() == best_order && group.is_core_free(h))
        .unwrap();
    Ok((group.order() / best_order, witness))
}

/// Exact minimum of `ξ(1) + m(ξ)` over inclusion-minimal sets of nontrivial
/// Galois classes whose kernels intersect trivially; `ξ = Σ Ψ_i` for `c(G)`
/// and `ξ = Σ m_Q(Ψ_i) Ψ_i` for `q(G)`.
pub fn behravesh_exact_cqg(
    table: &CharacterTable,
    classes: &[RationalIrrep],
    class_budget: usize,
) -> Result<(u64, u64)> {
    let nontrivial: Vec<&RationalIrrep> = classes
        .iter()
        .filter(|c| c.kernel_classes.len() != c.psi.len())
        .collect();
    if nontrivial.len() > class_budget {
        return Err(Error::BudgetExceeded {
            what: "Galois-class subset search",
            size: nontrivial.len() as u64,
            budget: class_budget as u64,
        });
    }
    let n_classes = table.classes().len();
    let kernels: Vec<BitSet> = nontrivial
        .iter()
        .map(|c| {
            let mut b = BitSet::new(n_classes);
            c.kernel_classes.iter().for_each(|&k| {
                b.insert(k);
            });
            b
        })
        .collect();
    let kernel_of = |mask: u64| {
        let mut acc = BitSet::full(n_classes);
        for (i, k) in kernels.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc.intersect_with(k);
            }
        }
        acc
    };
    let trivial = |mask: u64| kernel_of(mask).count() == 1;
    let mut best_c = u64::MAX;
    let mut best_q = u64::MAX;
    for mask in 1u64..(1 << nontrivial.len()) {
        if !trivial(mask) {
            continue;
        }
        let minimal = (0..nontrivial.len())
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| !trivial(mask & !(1 << i)));
        if !minimal {
            continue;
        }
        let score = |weighted: bool| {
            let mut xi = vec![0i64; n_classes];
            for (i, c) in nontrivial.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let w = if weighted { c.schur_index as i64 } else { 1 };
                    for (x, v) in xi.iter_mut().zip(&c.psi) {
                        *x += w * v;
                    }
                }
            }
            xi[0] as u64 + xi.iter().copied().min().unwrap().unsigned_abs()
        };
        best_c = best_c.min(score(false));
        best_q = best_q.min(score(true));
    }
    if best_c == u64::MAX {
        return Err(Error::Falsified("no set of Galois classes has trivial kernel".into()));
    }
    Ok((best_c, best_q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// Table row of the faithful irreducible attaining `c(G)`.
    pub c_row: usize,
    pub c_params: IrrepParams,
    /// Core-free subgroup attaining `p(G)`, when the oracle ran.
    pub p_subgroup: Option<Subgroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreesReport {
    pub c: u64,
    pub q: u64,
    pub p_formula: u64,
    pub p_oracle: Option<u64>,
    /// Why the oracle did not run, when it was requested but skipped.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_skipped: Option<String>,
    pub witnesses: Witnesses,
    pub schur_premise: SchurStatus,
}

/// Assembles `c(G)`, `q(G)`, the closed form for `p(G)` and, when `oracle_bound`
/// is given, the subgroup oracle (skipped above the bound).
pub fn degrees_report(
    table: &CharacterTable,
    classes: &[RationalIrrep],
    schur: &[SchurStatus],
    oracle_bound: Option<u64>,
    budget: u64,
) -> Result<DegreesReport> {
    let group = table.group();
    let (c, c_row) = c_of_group(table, classes, budget)?;
    let (q, schur_premise) = q_of_group(table, classes, schur, budget)?;
    let p_formula = p_of_group_formula(group.p(), group.n());
    let (mut p_oracle, mut p_subgroup, mut oracle_skipped) = (None, None, None);
    if let Some(bound) = oracle_bound {
        if group.order() > bound {
            oracle_skipped = Some(format!("|G| = {} exceeds the oracle bound {bound}", group.order()));
        } else {
            let (index, witness) = p_of_group_oracle(group, bound)?;
            p_oracle = Some(index);
            p_subgroup = Some(witness);
        }
    }
    if !(c <= q && q <= p_oracle.unwrap_or(p_formula)) {
        return Err(Error::Falsified(format!(
            "degree chain c <= q <= p fails: {c}, {q}, {p_formula}"
        )));
    }
    Ok(DegreesReport {
        c,
        q,
        p_formula,
        p_oracle,
        oracle_skipped,
        witnesses: Witnesses {
            c_row,
            c_params: table.irreps()[c_row].params,
            p_subgroup,
        },
        schur_premise,
    })
}
