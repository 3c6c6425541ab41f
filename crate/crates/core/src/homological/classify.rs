use serde::Serialize;

use crate::boxmod::BoxModule;

use super::{ext_box, minimal_resolution, HomologicalError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub projdim: usize,
    pub depth: usize,
    pub dim: usize,
    pub is_cm: bool,
    pub is_seq_cm: bool,
    pub is_gen_cm: bool,
}

/// `(projdim, depth, dim)` of a nonzero module.
fn basic(m: &BoxModule) -> Result<(usize, usize, usize), HomologicalError> {
    let pd = minimal_resolution(m)?.length().ok_or(HomologicalError::ZeroModule)?;
    let dim = m.annihilator_and_dim()?.dim;
    if dim < 0 {
        return Err(HomologicalError::ZeroModule);
    }
    Ok((pd, m.arity() - pd, dim as usize))
}

/// Projective dimension, depth (Auslander-Buchsbaum), Krull dimension and
/// the Cohen-Macaulay type flags. Ext is taken against `S(-t)`, a shift of
/// the canonical module, so dimensions and depths are unaffected.
pub fn classify(m: &BoxModule) -> Result<Classification, HomologicalError> {
    let (projdim, depth, dim) = basic(m)?;
    let n = m.arity();
    let exts = (0..=n).map(|p| ext_box(m, p)).collect::<Result<Vec<_>, _>>()?;
    let mut is_gen_cm = true;
    for (p, e) in exts.iter().enumerate() {
        if p != n - dim && e.annihilator_and_dim()?.dim > 0 {
            is_gen_cm = false;
        }
    }
    // Ext^{n-i}(M, ω) is zero or Cohen-Macaulay of dimension i, for all i.
    let mut is_seq_cm = true;
    for i in 0..=n {
        let e = &exts[n - i];
        if e.is_zero() {
            continue;
        }
        let (_, d_depth, d_dim) = basic(e)?;
        if d_dim != i || d_depth != d_dim {
            is_seq_cm = false;
            break;
        }
    }
    Ok(Classification {
        projdim,
        depth,
        dim,
        is_cm: depth == dim,
        is_seq_cm,
        is_gen_cm,
    })
}
