use crate::lattice::{map_r, map_s, ExponentVector, Window};
use crate::linalg::{DenseMatrix, Scalar};

use super::{BoxModule, ModuleError};

/// A degree-preserving module map, one matrix per window degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxMorphism {
    pub maps: Vec<DenseMatrix>,
}

impl BoxMorphism {
    pub fn identity(m: &BoxModule) -> Self {
        BoxMorphism {
            maps: m.dims().iter().map(|&d| DenseMatrix::identity(m.field(), d)).collect(),
        }
    }

    pub fn zero(source: &BoxModule, target: &BoxModule) -> Self {
        BoxMorphism {
            maps: source
                .dims()
                .iter()
                .zip(target.dims())
                .map(|(&s, &t)| DenseMatrix::zeros(source.field(), t, s))
                .collect(),
        }
    }

    /// Shapes match and every edge square commutes.
    pub fn is_morphism(&self, source: &BoxModule, target: &BoxModule) -> bool {
        if !source.same_context(target) || self.maps.len() != source.window().size() {
            return false;
        }
        let w = source.window();
        for (idx, a) in w.iter().enumerate() {
            if self.maps[idx].shape() != (target.dims()[idx], source.dims()[idx]) {
                return false;
            }
            for i in 0..source.arity() {
                if let Some(em) = source.edge_at(idx, i) {
                    let jdx = w.index_of(&a.plus_unit(i)).unwrap();
                    let en = target.edge_at(idx, i).unwrap();
                    if self.maps[jdx].mul(em) != en.mul(&self.maps[idx]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `Σ c_k · f_k`.
    pub fn combination(basis: &[BoxMorphism], coeffs: &[Scalar], template: &BoxMorphism) -> BoxMorphism {
        let mut out = template.clone();
        for (f, c) in basis.iter().zip(coeffs) {
            for (acc, m) in out.maps.iter_mut().zip(&f.maps) {
                *acc = acc.sub(&m.scale(&acc.field().neg(c)));
            }
        }
        out
    }

    /// `q^*(f)`: the component at `a` is `f_{q(a)}` (capped into the window).
    pub fn pullback(
        &self,
        source: &BoxModule,
        target_window: &Window,
        q: impl Fn(&ExponentVector) -> ExponentVector,
    ) -> BoxMorphism {
        let w = source.window();
        BoxMorphism {
            maps: target_window
                .iter()
                .map(|a| self.maps[w.index_of(&w.cap(&q(&a))).unwrap()].clone())
                .collect(),
        }
    }
}

/// A basis of `Hom(M, N)` in degree zero, by solving the commuting-square
/// equations exactly.
pub fn hom_basis(m: &BoxModule, n: &BoxModule) -> Result<Vec<BoxMorphism>, ModuleError> {
    if !m.same_context(n) {
        return Err(ModuleError::MismatchedContext);
    }
    let f = m.field();
    let w = m.window();
    let mut offsets = Vec::with_capacity(w.size() + 1);
    let mut total = 0;
    for idx in 0..w.size() {
        offsets.push(total);
        total += m.dims()[idx] * n.dims()[idx];
    }
    offsets.push(total);
    let var = |idx: usize, r: usize, c: usize| offsets[idx] + r * m.dims()[idx] + c;

    let mut equations: Vec<Vec<Scalar>> = Vec::new();
    for (idx, a) in w.iter().enumerate() {
        for i in 0..m.arity() {
            let (Some(em), Some(en)) = (m.edge_at(idx, i), n.edge_at(idx, i)) else {
                continue;
            };
            let jdx = w.index_of(&a.plus_unit(i)).unwrap();
            let (dm_a, dn_a) = (m.dims()[idx], n.dims()[idx]);
            let (dm_b, dn_b) = (m.dims()[jdx], n.dims()[jdx]);
            // (f_b · em - en · f_a)[r][c] = 0
            for r in 0..dn_b {
                for c in 0..dm_a {
                    let mut row = vec![f.zero(); total];
                    for k in 0..dm_b {
                        let x = em.get(k, c);
                        if !x.is_zero() {
                            let v = var(jdx, r, k);
                            row[v] = f.add(&row[v], x);
                        }
                    }
                    for k in 0..dn_a {
                        let x = en.get(r, k);
                        if !x.is_zero() {
                            let v = var(idx, k, c);
                            row[v] = f.sub(&row[v], x);
                        }
                    }
                    equations.push(row);
                }
            }
        }
    }
    let system = DenseMatrix::from_fn(f, equations.len(), total, |i, j| equations[i][j].clone());
    let kernel = system.kernel_basis();
    Ok(kernel
        .vectors()
        .into_iter()
        .map(|v| BoxMorphism {
            maps: (0..w.size())
                .map(|idx| {
                    DenseMatrix::from_fn(f, n.dims()[idx], m.dims()[idx], |r, c| v[var(idx, r, c)].clone())
                })
                .collect(),
        })
        .collect())
}

impl BoxModule {
    /// Components of `Φ_M : M -> r^*M`: at `a`, multiplication by
    /// `x^{a·(t-1)}` from `M_a` into `M_{a·t} ≅ M_{r(a)}`.
    pub fn phi_components(&self) -> Result<Vec<DenseMatrix>, ModuleError> {
        let t = self.require_determined()?;
        let t_minus_one = &t.as_vector().clone() - &ExponentVector::one(self.arity());
        self.window
            .iter()
            .map(|a| {
                debug_assert_eq!(self.window.cap(&a.hadamard(t.as_vector())), map_r(&a, &t).unwrap());
                self.evaluate_action(&a, &a.hadamard(&t_minus_one))
            })
            .collect()
    }

    /// Components of `Ψ_M : s^*M -> σ_{1-t}M` on `[0, 1]`: at `a`,
    /// multiplication by `x^{a + t - 1 - s(a)}` from `M_{s(a)}` to `M_{a+t-1}`.
    pub fn psi_components(&self) -> Result<Vec<DenseMatrix>, ModuleError> {
        let t = self.require_determined()?;
        let n = self.arity();
        let t_minus_one = &t.as_vector().clone() - &ExponentVector::one(n);
        Window::unit_cube(n)
            .iter()
            .map(|a| {
                let s = map_s(&a, &t)?;
                let target = &a + &t_minus_one;
                self.evaluate_action(&s, &(&target - &s))
            })
            .collect()
    }
}
