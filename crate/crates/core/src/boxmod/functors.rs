use crate::lattice::{map_p, map_r, map_s, BoundVector, ExponentVector, Window};
use crate::linalg::{induced_map, DenseMatrix, Subquotient, SubspaceBasis};

use super::{BoxModule, ModuleError};

impl BoxModule {
    /// `(q^* M)_a = M_{q(a)}` on `target`, with `x_i` acting as
    /// `x^{q(a + e_i) - q(a)}`. Degrees `q(a)` above the window are read
    /// through saturation.
    pub fn pullback(
        &self,
        target: Window,
        q: impl Fn(&ExponentVector) -> ExponentVector,
        saturated: bool,
    ) -> Result<BoxModule, ModuleError> {
        let source_of = |a: &ExponentVector| -> Result<ExponentVector, ModuleError> {
            let s = q(a);
            if !self.window.lo().le_unchecked(&s) {
                return Err(ModuleError::OutsideWindow(s));
            }
            if !self.window.contains(&s) && !self.saturated {
                return Err(ModuleError::OutsideWindow(s));
            }
            Ok(self.window.cap(&s))
        };
        let mut dims = Vec::with_capacity(target.size());
        for a in target.iter() {
            dims.push(self.dim_at(&source_of(&a)?));
        }
        BoxModule::from_parts(
            self.field,
            target,
            dims,
            |a, i| {
                let b = a.plus_unit(i);
                if !q(a).le_unchecked(&q(&b)) {
                    return Err(ModuleError::NotOrderPreserving(a.clone()));
                }
                let s1 = source_of(a)?;
                let s2 = source_of(&b)?;
                self.evaluate_action(&s1, &(&s2 - &s1))
            },
            saturated,
        )
    }

    /// The radical functor `r^*`, landing in squarefree modules on `[0, 1]`.
    pub fn radical_functor(&self) -> Result<BoxModule, ModuleError> {
        self.radical_functor_on(Window::unit_cube(self.arity()))
    }

    /// `r^*` evaluated on an arbitrary window of `N^n`.
    pub fn radical_functor_on(&self, target: Window) -> Result<BoxModule, ModuleError> {
        let t = self.require_determined()?;
        self.pullback(target, |a| map_r(a, &t).expect("window degrees are nonnegative"), true)
    }

    /// `s^*`, where `s(a)_i = t_i` if `a_i >= 1` and `t_i - 1` otherwise.
    pub fn s_functor(&self) -> Result<BoxModule, ModuleError> {
        let t = self.require_determined()?;
        self.pullback(
            Window::unit_cube(self.arity()),
            |a| map_s(a, &t).expect("window degrees are nonnegative"),
            true,
        )
    }

    /// `p_u^*` on `[0, u]`. With `u >= hi` this re-boxes the module on a
    /// larger window (the embedding of `Mod_hi` into `Mod_u`).
    pub fn p_functor(&self, u: &BoundVector) -> Result<BoxModule, ModuleError> {
        self.require_determined()?;
        self.pullback(
            Window::bounded(u),
            |a| map_p(a, u).expect("window degrees are nonnegative"),
            true,
        )
    }

    /// `σ_a(M) = M(-a)`: the same data relabelled by `b ↦ b + a`.
    pub fn shift(&self, a: &ExponentVector) -> BoxModule {
        BoxModule {
            field: self.field,
            window: self.window.shifted(a),
            dims: self.dims.clone(),
            edges: self.edges.clone(),
            saturated: self.saturated,
        }
    }

    /// `τ_{≥a}(M) = ⊕_{b ≥ a} M_b`.
    pub fn truncate_low(&self, a: &ExponentVector) -> Result<BoxModule, ModuleError> {
        if self.saturated && !a.le_unchecked(self.window.hi()) {
            return Err(ModuleError::OutsideWindow(a.clone()));
        }
        let f = self.field;
        let keep = |b: &ExponentVector| a.le_unchecked(b);
        let dims = self
            .window
            .iter()
            .zip(&self.dims)
            .map(|(b, &d)| if keep(&b) { d } else { 0 })
            .collect();
        BoxModule::from_parts(
            f,
            self.window.clone(),
            dims,
            |b, i| {
                let c = b.plus_unit(i);
                Ok(match (keep(b), keep(&c)) {
                    (true, true) => self.edge(b, i).clone(),
                    (false, true) => DenseMatrix::zeros(f, self.dim_at(&c), 0),
                    (true, false) => unreachable!("degrees above a stay above a"),
                    (false, false) => DenseMatrix::zeros(f, 0, 0),
                })
            },
            self.saturated,
        )
    }

    /// `τ^a(M) = M / (S · ⊕_{b ≰ a} M_b)`, computed by propagating the
    /// generated submodule along edges. The result vanishes above `a` and is
    /// not saturated.
    pub fn truncate_high(&self, a: &ExponentVector) -> Result<BoxModule, ModuleError> {
        let f = self.field;
        let w = &self.window;
        let mut generated: Vec<SubspaceBasis> = Vec::with_capacity(w.size());
        for (idx, c) in w.iter().enumerate() {
            let d = self.dims[idx];
            let span = if !c.le_unchecked(a) {
                SubspaceBasis::full(f, d)
            } else {
                let mut s = SubspaceBasis::zero(f, d);
                for i in 0..self.arity() {
                    if c[i] > w.lo()[i] {
                        let prev = c.minus_unit(i);
                        let pidx = w.index_of(&prev).unwrap();
                        s = s.sum(&generated[pidx].image_under(self.edge(&prev, i)));
                    }
                }
                s
            };
            generated.push(span);
        }
        let quotients: Vec<Subquotient> = generated
            .into_iter()
            .map(Subquotient::quotient_of_ambient)
            .collect();
        let dims = quotients.iter().map(Subquotient::dim).collect();
        BoxModule::from_parts(
            f,
            w.clone(),
            dims,
            |c, i| {
                let src = &quotients[w.index_of(c).unwrap()];
                let tgt = &quotients[w.index_of(&c.plus_unit(i)).unwrap()];
                Ok(induced_map(self.edge(c, i), src, tgt)?)
            },
            false,
        )
    }

    /// The same module seen on a sub-window.
    pub fn restrict(&self, target: &Window) -> Result<BoxModule, ModuleError> {
        for corner in [target.lo(), target.hi()] {
            if !self.window.contains(corner) {
                return Err(ModuleError::OutsideWindow(corner.clone()));
            }
        }
        let dims = target.iter().map(|a| self.dim_at(&a)).collect();
        let saturated = self.saturated && target.hi() == self.window.hi();
        BoxModule::from_parts(
            self.field,
            target.clone(),
            dims,
            |a, i| Ok(self.edge(a, i).clone()),
            saturated,
        )
    }

    /// Alexander duality `A_t`: `(A_t M)_a = (M_{t - p_t(a)})^*`, edges the
    /// transposes of the reversed edges of `M`.
    pub fn alexander_dual(&self) -> Result<BoxModule, ModuleError> {
        let t = self.require_determined()?;
        let tv = t.as_vector().clone();
        let dims = self.window.iter().map(|a| self.dim_at(&(&tv - &a))).collect();
        BoxModule::from_parts(
            self.field,
            self.window.clone(),
            dims,
            |a, i| {
                let src = (&tv - a).minus_unit(i);
                Ok(self.edge(&src, i).transpose())
            },
            true,
        )
    }
}
