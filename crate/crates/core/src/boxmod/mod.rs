//! Finite representations of `Z^n`-graded modules on a degree window.
//!
//! A [`BoxModule`] stores one vector space dimension per degree of a window
//! `[lo, hi]` and one matrix per unit step `a -> a + e_i` inside the window.
//! When the module is *saturated*, multiplication by `x_i` from a degree
//! with `a_i >= hi_i` is understood to be the identity; a saturated module
//! on `[0, t]` is exactly a positively `t`-determined module.

mod build;
mod compare;
mod functors;
mod invariants;
mod monomial_matrix;
mod morphism;

use thiserror::Error;

use crate::ideal::IdealError;
use crate::lattice::{BoundVector, ExponentVector, LatticeError, Window};
use crate::linalg::{DenseMatrix, Field, LinalgError};

pub use compare::{compare_graded, ProfileVerdict};
pub use invariants::AnnihilatorDim;
pub use monomial_matrix::MonomialMatrix;
pub(crate) use monomial_matrix::{inclusion_matrix, shifts_below};
pub use morphism::{hom_basis, BoxMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("edge at {degree} in direction {direction} has shape {got:?}, expected {expected:?}")]
    EdgeShape {
        degree: ExponentVector,
        direction: usize,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("square at {degree} in directions {i},{j} does not commute")]
    NotCommutative {
        degree: ExponentVector,
        i: usize,
        j: usize,
    },
    #[error("degree {0} lies outside the window")]
    OutsideWindow(ExponentVector),
    #[error("module is not positively determined on a window starting at 0")]
    NotDetermined,
    #[error("degree map is not order preserving at {0}")]
    NotOrderPreserving(ExponentVector),
    #[error("ideal inclusion fails: {0} is not in the larger ideal")]
    NotContained(ExponentVector),
    #[error("shift {shift} is outside [0, {bound}]")]
    ShiftOutOfRange {
        shift: ExponentVector,
        bound: ExponentVector,
    },
    #[error("modules live over different fields, arities or windows")]
    MismatchedContext,
    #[error("monomial matrix entry ({row},{col}) has negative exponent")]
    BadEntry { row: usize, col: usize },
    #[error("generator lies in degree {0} but the module vanishes there")]
    MissingDegree(ExponentVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxModule {
    field: Field,
    window: Window,
    dims: Vec<usize>,
    /// `edges[idx * n + i]` is multiplication by `x_i` from the degree at
    /// `idx`, present when the step stays in the window.
    edges: Vec<Option<DenseMatrix>>,
    saturated: bool,
}

impl BoxModule {
    /// Assembles a module from degreewise data and re-verifies every edge
    /// shape and every commutative square.
    pub fn from_parts(
        field: Field,
        window: Window,
        dims: Vec<usize>,
        mut edge: impl FnMut(&ExponentVector, usize) -> Result<DenseMatrix, ModuleError>,
        saturated: bool,
    ) -> Result<Self, ModuleError> {
        let n = window.arity();
        assert_eq!(dims.len(), window.size());
        let mut edges = Vec::with_capacity(dims.len() * n);
        for (idx, a) in window.iter().enumerate() {
            for i in 0..n {
                let b = a.plus_unit(i);
                match window.index_of(&b) {
                    Some(jdx) => {
                        let m = edge(&a, i)?;
                        let expected = (dims[jdx], dims[idx]);
                        if m.shape() != expected {
                            return Err(ModuleError::EdgeShape {
                                degree: a,
                                direction: i,
                                got: m.shape(),
                                expected,
                            });
                        }
                        edges.push(Some(m));
                    }
                    None => edges.push(None),
                }
            }
        }
        let module = BoxModule {
            field,
            window,
            dims,
            edges,
            saturated,
        };
        module.verify_commutativity()?;
        Ok(module)
    }

    /// The zero module on a window.
    pub fn zero(field: Field, window: Window, saturated: bool) -> Self {
        let n = window.arity();
        let size = window.size();
        let edges = (0..size * n)
            .map(|k| {
                let a = window.point(k / n);
                window
                    .contains(&a.plus_unit(k % n))
                    .then(|| DenseMatrix::zeros(field, 0, 0))
            })
            .collect();
        BoxModule {
            field,
            window,
            dims: vec![0; size],
            edges,
            saturated,
        }
    }

    pub fn verify_commutativity(&self) -> Result<(), ModuleError> {
        let n = self.arity();
        for a in self.window.iter() {
            for i in 0..n {
                for j in (i + 1)..n {
                    let top = a.plus_unit(i).plus_unit(j);
                    if !self.window.contains(&top) {
                        continue;
                    }
                    let via_i = self.edge(&a.plus_unit(i), j).mul(self.edge(&a, i));
                    let via_j = self.edge(&a.plus_unit(j), i).mul(self.edge(&a, j));
                    if via_i != via_j {
                        return Err(ModuleError::NotCommutative { degree: a, i, j });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn arity(&self) -> usize {
        self.window.arity()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    /// True when the module is a positively `hi`-determined module on `[0, hi]`.
    pub fn is_determined(&self) -> bool {
        self.saturated && self.window.lo().is_zero()
    }

    /// The bound `t = hi` of a determined module.
    pub fn bound(&self) -> Result<BoundVector, ModuleError> {
        if !self.is_determined() {
            return Err(ModuleError::NotDetermined);
        }
        Ok(BoundVector::new(self.window.hi().clone())?)
    }

    pub(crate) fn require_determined(&self) -> Result<BoundVector, ModuleError> {
        self.bound()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension at any degree: capped into the window when saturated,
    /// zero for degrees not above `lo`.
    pub fn dim_at(&self, a: &ExponentVector) -> usize {
        if let Some(idx) = self.window.index_of(a) {
            return self.dims[idx];
        }
        if self.saturated && self.window.lo().le_unchecked(a) {
            return self.dims[self.window.index_of(&self.window.cap(a)).unwrap()];
        }
        0
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Multiplication by `x_i` from `a` to `a + e_i`, both in the window.
    pub fn edge(&self, a: &ExponentVector, i: usize) -> &DenseMatrix {
        let idx = self.window.index_of(a).expect("edge source outside window");
        self.edges[idx * self.arity() + i]
            .as_ref()
            .expect("edge target outside window")
    }

    pub(crate) fn edge_at(&self, idx: usize, i: usize) -> Option<&DenseMatrix> {
        self.edges[idx * self.arity() + i].as_ref()
    }

    /// Matrix of multiplication by `x^b` from `M_a` to `M_{min(a+b, hi)}`.
    ///
    /// Steps past `hi` are the identity when the module is saturated.
    pub fn evaluate_action(
        &self,
        a: &ExponentVector,
        b: &ExponentVector,
    ) -> Result<DenseMatrix, ModuleError> {
        if !self.window.contains(a) {
            return Err(ModuleError::OutsideWindow(a.clone()));
        }
        if b.len() != a.len() {
            return Err(LatticeError::LengthMismatch(a.len(), b.len()).into());
        }
        if !b.is_nonnegative() {
            return Err(LatticeError::NegativeComponent(b.clone()).into());
        }
        let end = a + b;
        if !self.saturated && !self.window.contains(&end) {
            return Err(ModuleError::OutsideWindow(end));
        }
        let hi = self.window.hi();
        let mut cur = a.clone();
        let mut mat = DenseMatrix::identity(self.field, self.dim_at(a));
        for i in 0..self.arity() {
            let steps = b[i].min(hi[i] - cur[i]).max(0);
            for _ in 0..steps {
                mat = self.edge(&cur, i).mul(&mat);
                cur = cur.plus_unit(i);
            }
        }
        Ok(mat)
    }

    /// Multiplication maps `M_a -> M_c` for every window degree `c >= a`,
    /// indexed by window position (`None` where `c` is not above `a`).
    pub fn actions_from(&self, a: &ExponentVector) -> Vec<Option<DenseMatrix>> {
        let w = &self.window;
        let start = w.index_of(a).expect("degree outside window");
        let mut out: Vec<Option<DenseMatrix>> = vec![None; w.size()];
        out[start] = Some(DenseMatrix::identity(self.field, self.dims[start]));
        for idx in start + 1..w.size() {
            let c = w.point(idx);
            if !a.le_unchecked(&c) {
                continue;
            }
            let i = (0..self.arity()).find(|&i| c[i] > a[i]).unwrap();
            let prev = c.minus_unit(i);
            let pidx = w.index_of(&prev).unwrap();
            let step = self.edge(&prev, i);
            out[idx] = Some(step.mul(out[pidx].as_ref().unwrap()));
        }
        out
    }

    pub(crate) fn same_context(&self, other: &BoxModule) -> bool {
        self.field == other.field && self.window == other.window
    }
}
