use crate::lattice::ExponentVector;
use crate::linalg::{DenseMatrix, Field, Scalar};

use super::ModuleError;

/// A degree-preserving map `⊕_k S(-b_k) -> ⊕_j S(-a_j)` of graded free
/// modules. Entry `(j, k)` is `c_{jk} · x^{b_k - a_j}`; only the scalars are
/// stored since the exponent is forced by the shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    row_shifts: Vec<ExponentVector>,
    col_shifts: Vec<ExponentVector>,
    scalars: DenseMatrix,
}

impl MonomialMatrix {
    pub fn new(
        row_shifts: Vec<ExponentVector>,
        col_shifts: Vec<ExponentVector>,
        scalars: DenseMatrix,
    ) -> Result<Self, ModuleError> {
        assert_eq!(scalars.shape(), (row_shifts.len(), col_shifts.len()));
        for (j, a) in row_shifts.iter().enumerate() {
            for (k, b) in col_shifts.iter().enumerate() {
                if !scalars.get(j, k).is_zero() && !a.le_unchecked(b) {
                    return Err(ModuleError::BadEntry { row: j, col: k });
                }
            }
        }
        Ok(MonomialMatrix {
            row_shifts,
            col_shifts,
            scalars,
        })
    }

    pub fn zero(field: Field, row_shifts: Vec<ExponentVector>, col_shifts: Vec<ExponentVector>) -> Self {
        let scalars = DenseMatrix::zeros(field, row_shifts.len(), col_shifts.len());
        MonomialMatrix {
            row_shifts,
            col_shifts,
            scalars,
        }
    }

    pub fn field(&self) -> Field {
        self.scalars.field()
    }

    pub fn row_shifts(&self) -> &[ExponentVector] {
        &self.row_shifts
    }

    pub fn col_shifts(&self) -> &[ExponentVector] {
        &self.col_shifts
    }

    pub fn scalars(&self) -> &DenseMatrix {
        &self.scalars
    }

    /// `(c, exponent)` of entry `(j, k)`, or `None` when it vanishes.
    pub fn entry(&self, j: usize, k: usize) -> Option<(Scalar, ExponentVector)> {
        let c = self.scalars.get(j, k);
        (!c.is_zero()).then(|| (c.clone(), &self.col_shifts[k] - &self.row_shifts[j]))
    }

    /// Row indices whose shift lies below `b`: a basis of the degree-`b`
    /// component of the target.
    pub fn rows_below(&self, b: &ExponentVector) -> Vec<usize> {
        shifts_below(&self.row_shifts, b)
    }

    pub fn cols_below(&self, b: &ExponentVector) -> Vec<usize> {
        shifts_below(&self.col_shifts, b)
    }

    /// The degree-`b` component as a scalar matrix.
    pub fn strand(&self, b: &ExponentVector) -> DenseMatrix {
        self.scalars
            .select_rows(&self.rows_below(b))
            .select_columns(&self.cols_below(b))
    }

    /// No entry is a nonzero scalar with exponent zero.
    pub fn is_minimal(&self) -> bool {
        (0..self.row_shifts.len()).all(|j| {
            (0..self.col_shifts.len()).all(|k| {
                self.scalars.get(j, k).is_zero() || self.row_shifts[j] != self.col_shifts[k]
            })
        })
    }

    /// Applies a degree map to every shift, keeping the scalars.
    pub fn map_shifts(
        &self,
        q: impl Fn(&ExponentVector) -> ExponentVector,
    ) -> Result<MonomialMatrix, ModuleError> {
        MonomialMatrix::new(
            self.row_shifts.iter().map(&q).collect(),
            self.col_shifts.iter().map(&q).collect(),
            self.scalars.clone(),
        )
    }
}

pub(crate) fn shifts_below(shifts: &[ExponentVector], b: &ExponentVector) -> Vec<usize> {
    (0..shifts.len()).filter(|&j| shifts[j].le_unchecked(b)).collect()
}

/// Coordinate inclusion between two sorted index lists `small ⊆ large`.
pub(crate) fn inclusion_matrix(field: Field, small: &[usize], large: &[usize]) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(field, large.len(), small.len());
    for (c, j) in small.iter().enumerate() {
        let r = large.binary_search(j).expect("index lists are nested");
        m.set(r, c, field.one());
    }
    m
}
