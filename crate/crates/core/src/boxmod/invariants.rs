use std::collections::BTreeMap;

use crate::ideal::{minimal_primes_of, MonomialIdeal, MonomialPrime};
use crate::lattice::{subsets, ExponentVector};
use crate::linalg::DenseMatrix;

use super::{BoxModule, ModuleError};

/// Annihilator and Krull dimension; `dim` is `-1` for the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorDim {
    pub annihilator: MonomialIdeal,
    pub dim: i64,
}

impl BoxModule {
    pub fn hilbert_function(&self) -> BTreeMap<ExponentVector, usize> {
        self.window.iter().zip(self.dims.iter().copied()).collect()
    }

    /// `r^*M = 0` iff `M_a = 0` for every `a` with `a_i ∈ {0, t_i}`.
    pub fn radical_vanishes(&self) -> Result<bool, ModuleError> {
        let t = self.require_determined()?;
        let n = self.arity();
        Ok(subsets(n).all(|face| {
            let a = ExponentVector::indicator(n, &face).hadamard(t.as_vector());
            self.dim_at(&a) == 0
        }))
    }

    /// `x^b ∈ ann(M)` iff `x^b` acts as zero from every degree; for a
    /// determined module it suffices to test `b ∈ [0, t]`.
    pub fn annihilator_and_dim(&self) -> Result<AnnihilatorDim, ModuleError> {
        self.require_determined()?;
        let n = self.arity();
        let w = &self.window;
        if self.is_zero() {
            return Ok(AnnihilatorDim {
                annihilator: MonomialIdeal::unit(n),
                dim: -1,
            });
        }
        // kills[c_idx] for each source: whether M_a -> M_c vanishes
        let zero_tables: Vec<(ExponentVector, Vec<bool>)> = w
            .iter()
            .enumerate()
            .filter(|(idx, _)| self.dims[*idx] > 0)
            .map(|(_, a)| {
                let table = self
                    .actions_from(&a)
                    .into_iter()
                    .map(|m| m.map(|m| m.is_zero()).unwrap_or(false))
                    .collect();
                (a, table)
            })
            .collect();
        let mut gens = Vec::new();
        for b in w.iter() {
            let kills = zero_tables.iter().all(|(a, table)| {
                let c = w.cap(&(a + &b));
                table[w.index_of(&c).unwrap()]
            });
            if kills {
                gens.push(b);
            }
        }
        let annihilator = MonomialIdeal::minimalize(n, gens)?;
        let (dim, _) = annihilator.dim_and_minimal_primes()?;
        Ok(AnnihilatorDim {
            annihilator,
            dim: dim as i64,
        })
    }

    /// Associated primes: `P_F ∈ Ass(M)` iff some `0 ≠ u ∈ M_a` has
    /// `x_i u = 0` for all `i ∉ F` and `x^{t·e_F} u ≠ 0`.
    pub fn ass_primes(&self) -> Result<Vec<MonomialPrime>, ModuleError> {
        let t = self.require_determined()?;
        let n = self.arity();
        let f = self.field;
        let mut out = Vec::new();
        for face in subsets(n) {
            let outside: Vec<usize> = (0..n).filter(|i| !face.contains(i)).collect();
            let survive = ExponentVector::indicator(n, &face).hadamard(t.as_vector());
            let found = self.window.iter().enumerate().any(|(idx, a)| {
                let d = self.dims[idx];
                if d == 0 {
                    return false;
                }
                let mut conditions = DenseMatrix::zeros(f, 0, d);
                for &i in &outside {
                    let step = self
                        .evaluate_action(&a, &ExponentVector::unit(n, i))
                        .expect("determined modules act everywhere");
                    conditions = conditions.vstack(&step);
                }
                let kernel = conditions.kernel_basis();
                if kernel.dim() == 0 {
                    return false;
                }
                let lift = self
                    .evaluate_action(&a, &survive)
                    .expect("determined modules act everywhere");
                !lift.mul(&kernel.as_columns()).is_zero()
            });
            if found {
                out.push(crate::ideal::MonomialPrime::from_face(n, face));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Minimal elements of `Ass(M)`.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>, ModuleError> {
        Ok(minimal_primes_of(&self.ass_primes()?))
    }

    /// All minimal primes have the same dimension (vacuous for `M = 0`).
    pub fn is_equidimensional(&self) -> Result<bool, ModuleError> {
        let mins = self.minimal_primes()?;
        Ok(mins.windows(2).all(|w| w[0].dim() == w[1].dim()))
    }
}
