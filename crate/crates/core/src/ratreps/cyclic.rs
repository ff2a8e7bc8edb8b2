use serde::{Deserialize, Serialize};

use crate::exactnum::{companion_matrix, cyclotomic_polynomial, Matrix, Rational};

/// The rational irreducible `ρ_i` of `C_{p^n} = ⟨a⟩` with `a ↦ C_{Φ_{p^i}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CyclicRationalRep {
    pub index: u32,
    /// `p^i`.
    pub order: u64,
    /// Modulus `p^n` of the cyclic group.
    pub modulus: u64,
    #[serde(skip)]
    pub generator_image: Option<Matrix<Rational>>,
}

impl CyclicRationalRep {
    pub fn dim(&self) -> usize {
        self.image(1).dim()
    }

    pub fn image(&self, j: u64) -> Matrix<Rational> {
        let c = self
            .generator_image
            .clone()
            .unwrap_or_else(|| companion_matrix(&cyclotomic_polynomial(self.order)));
        c.pow(j % self.modulus)
    }

    /// `tr ρ_i(a^j)` for `j = 0, …, p^n - 1`.
    pub fn character(&self) -> Vec<Rational> {
        (0..self.modulus).map(|j| self.image(j).trace()).collect()
    }

    /// Exponents `j` with `ρ_i(a^j) = 1`.
    pub fn kernel(&self) -> Vec<u64> {
        let one = Matrix::identity(self.dim());
        (0..self.modulus).filter(|&j| self.image(j) == one).collect()
    }
}

/// `ρ_0, …, ρ_n`; `ρ_n` is the faithful one.
pub fn cyclic_rational_reps(p: u64, n: u32) -> Vec<CyclicRationalRep> {
    let modulus = p.pow(n);
    (0..=n)
        .map(|i| {
            let order = p.pow(i);
            CyclicRationalRep {
                index: i,
                order,
                modulus,
                generator_image: Some(companion_matrix(&cyclotomic_polynomial(order))),
            }
        })
        .collect()
}
