use crate::boxmod::{inclusion_matrix, BoxModule};
use crate::lattice::{ExponentVector, Window};
use crate::linalg::{induced_map, DenseMatrix, Subquotient, SubspaceBasis};

use super::{minimal_resolution, FreeComplex, HomologicalError};

/// Both sides of a comparison between two Ext modules on `[0, 1]`.
#[derive(Clone, Debug)]
pub struct ExtSides {
    pub left: BoxModule,
    pub right: BoxModule,
}

/// Indices `j` with `a_j >= c - b`: a basis of `Hom(F_q, S(-c))_b`.
fn dual_basis(shifts: &[ExponentVector], c: &ExponentVector, b: &ExponentVector) -> Vec<usize> {
    let need = c - b;
    (0..shifts.len()).filter(|&j| need.le_unchecked(&shifts[j])).collect()
}

/// `Ext^p(H_0(F), S(-c))` on a window, from the degree-`b` strands of
/// `Hom(F, S(-c))` whose differentials are transposed scalar matrices.
pub fn ext_window(
    complex: &FreeComplex,
    c: &ExponentVector,
    p: usize,
    window: &Window,
    saturated: bool,
) -> Result<BoxModule, HomologicalError> {
    let f = complex.field();
    // δ_q : Hom(F_q) -> Hom(F_{q+1}) at degree b
    let delta = |q: usize, b: &ExponentVector| -> DenseMatrix {
        let rows = dual_basis(complex.shifts(q + 1), c, b);
        let cols = dual_basis(complex.shifts(q), c, b);
        match complex.maps().get(q) {
            Some(d) => d.scalars().transpose().select_rows(&rows).select_columns(&cols),
            None => DenseMatrix::zeros(f, rows.len(), cols.len()),
        }
    };
    let mut pieces = Vec::with_capacity(window.size());
    for b in window.iter() {
        let here = dual_basis(complex.shifts(p), c, &b).len();
        let incoming = if p == 0 {
            DenseMatrix::zeros(f, here, 0)
        } else {
            delta(p - 1, &b)
        };
        let outgoing = delta(p, &b);
        if !outgoing.mul(&incoming).is_zero() {
            return Err(HomologicalError::NotAComplex(p));
        }
        let sub = SubspaceBasis::span_of_columns(&incoming);
        let bigger = outgoing.kernel_basis();
        pieces.push(Subquotient::new(sub, bigger)?);
    }
    let dims = pieces.iter().map(Subquotient::dim).collect();
    let shifts = complex.shifts(p);
    Ok(BoxModule::from_parts(
        f,
        window.clone(),
        dims,
        |b, i| {
            let next = b.plus_unit(i);
            let inc = inclusion_matrix(f, &dual_basis(shifts, c, b), &dual_basis(shifts, c, &next));
            let src = &pieces[window.index_of(b).unwrap()];
            let tgt = &pieces[window.index_of(&next).unwrap()];
            Ok(induced_map(&inc, src, tgt)?)
        },
        saturated,
    )?)
}

/// `Ext^p(M, S(-t))` on `[0, t]`; it is again `t`-determined.
pub fn ext_box(m: &BoxModule, p: usize) -> Result<BoxModule, HomologicalError> {
    let t = m.bound()?;
    let res = minimal_resolution(m)?;
    ext_window(&res, t.as_vector(), p, &Window::bounded(&t), true)
}

/// `D_t(M) = Ext^0(M, S(-t))` on `[0, t]`.
pub fn dual_t(m: &BoxModule) -> Result<BoxModule, HomologicalError> {
    ext_box(m, 0)
}

/// `Ext^p(H_0(F), S(-1))` in degrees `>= 0`, seen on `[0, 1]`. It is
/// computed on `[-1, 1]` and truncated, so negative degrees are exercised.
pub fn ext_canonical_nonnegative(complex: &FreeComplex, p: usize) -> Result<BoxModule, HomologicalError> {
    let n = complex.arity();
    let one = ExponentVector::one(n);
    let wide = Window::new(ExponentVector::constant(n, -1), one.clone()).expect("nonempty window");
    let full = ext_window(complex, &one, p, &wide, false)?;
    let truncated = full.truncate_low(&ExponentVector::zero(n))?;
    Ok(truncated.restrict(&Window::unit_cube(n))?)
}

/// Left: `τ_{≥0} Ext^p(M, S(-1))`. Right: `Ext^p(r^*M, S(-1))`.
pub fn ext_window_a(m: &BoxModule, p: usize) -> Result<ExtSides, HomologicalError> {
    let left = ext_canonical_nonnegative(&minimal_resolution(m)?, p)?;
    let right = ext_box(&m.radical_functor()?, p)?;
    Ok(ExtSides { left, right })
}

/// Left: `r^* Ext^p(M, S(-t))`. Right: `Ext^p(s^*M, S(-1))`.
pub fn ext_window_b(m: &BoxModule, p: usize) -> Result<ExtSides, HomologicalError> {
    let left = ext_box(m, p)?.radical_functor()?;
    let right = ext_box(&m.s_functor()?, p)?;
    Ok(ExtSides { left, right })
}
