use crate::ideal::MonomialIdeal;
use crate::lattice::{BoundVector, ExponentVector, Window};
use crate::linalg::{induced_map, DenseMatrix, Field, Subquotient};

use super::monomial_matrix::{inclusion_matrix, shifts_below};
use super::{BoxModule, ModuleError, MonomialMatrix};

impl BoxModule {
    /// The quotient `J/I` for monomial ideals `I ⊆ J`, both `t`-determined.
    pub fn from_ideal_pair(
        i: &MonomialIdeal,
        j: &MonomialIdeal,
        t: &BoundVector,
        field: Field,
    ) -> Result<Self, ModuleError> {
        for g in i.generators() {
            if !j.contains(g)? {
                return Err(ModuleError::NotContained(g.clone()));
            }
        }
        for ideal in [i, j] {
            if !ideal.is_t_determined(t) {
                return Err(crate::ideal::IdealError::NotDetermined(t.clone()).into());
            }
        }
        let window = Window::bounded(t);
        let dims: Vec<usize> = window
            .iter()
            .map(|a| usize::from(j.contains_unchecked(&a) && !i.contains_unchecked(&a)))
            .collect();
        let w = window.clone();
        let d = dims.clone();
        BoxModule::from_parts(
            field,
            window,
            dims,
            |a, k| {
                let src = d[w.index_of(a).unwrap()];
                let tgt = d[w.index_of(&a.plus_unit(k)).unwrap()];
                Ok(if src == 1 && tgt == 1 {
                    DenseMatrix::identity(field, 1)
                } else {
                    DenseMatrix::zeros(field, tgt, src)
                })
            },
            true,
        )
    }

    /// `S/I` on `[0, t]`.
    pub fn quotient_ring(i: &MonomialIdeal, t: &BoundVector, field: Field) -> Result<Self, ModuleError> {
        BoxModule::from_ideal_pair(i, &MonomialIdeal::unit(i.arity()), t, field)
    }

    /// The free module `⊕ S(-a)` over the given shifts, boxed on `[0, t]`.
    pub fn free_box(shifts: &[ExponentVector], t: &BoundVector, field: Field) -> Result<Self, ModuleError> {
        let phi = MonomialMatrix::zero(field, shifts.to_vec(), Vec::new());
        BoxModule::from_presentation(&phi, t, field)
    }

    /// The cokernel of a presentation `F_1 -> F_0` with all shifts in `[0, t]`.
    pub fn from_presentation(
        phi: &MonomialMatrix,
        t: &BoundVector,
        field: Field,
    ) -> Result<Self, ModuleError> {
        for s in phi.row_shifts().iter().chain(phi.col_shifts()) {
            if s.len() != t.len() || !s.is_nonnegative() || !s.le_unchecked(t.as_vector()) {
                return Err(ModuleError::ShiftOutOfRange {
                    shift: s.clone(),
                    bound: t.as_vector().clone(),
                });
            }
        }
        let window = Window::bounded(t);
        let quotients: Vec<Subquotient> = window
            .iter()
            .map(|b| Subquotient::quotient_of_ambient(phi.strand(&b).image_basis()))
            .collect();
        let dims = quotients.iter().map(Subquotient::dim).collect();
        let w = window.clone();
        let rows = phi.row_shifts().to_vec();
        BoxModule::from_parts(
            field,
            window,
            dims,
            |a, i| {
                let b = a.plus_unit(i);
                let inc = inclusion_matrix(field, &shifts_below(&rows, a), &shifts_below(&rows, &b));
                let src = &quotients[w.index_of(a).unwrap()];
                let tgt = &quotients[w.index_of(&b).unwrap()];
                Ok(induced_map(&inc, src, tgt)?)
            },
            true,
        )
    }

    /// Degreewise direct sum with block-diagonal edges.
    pub fn direct_sum(&self, other: &BoxModule) -> Result<BoxModule, ModuleError> {
        if !self.same_context(other) || self.saturated != other.saturated {
            return Err(ModuleError::MismatchedContext);
        }
        let f = self.field;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        BoxModule::from_parts(
            f,
            self.window.clone(),
            dims,
            |a, i| Ok(block_diagonal(f, self.edge(a, i), other.edge(a, i))),
            self.saturated,
        )
    }
}

pub(crate) fn block_diagonal(f: Field, a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    DenseMatrix::from_fn(f, ra + rb, ca + cb, |i, j| {
        if i < ra && j < ca {
            a.get(i, j).clone()
        } else if i >= ra && j >= ca {
            b.get(i - ra, j - ca).clone()
        } else {
            f.zero()
        }
    })
}
