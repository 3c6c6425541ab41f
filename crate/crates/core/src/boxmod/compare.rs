use std::fmt;

use crate::lattice::ExponentVector;
use crate::linalg::Scalar;

use super::BoxModule;

/// Outcome of comparing the graded profiles of two modules: dimensions at
/// every degree and ranks of multiplication along every comparable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProfileVerdict {
    Equal,
    ContextMismatch,
    DimensionDiffers {
        degree: ExponentVector,
        left: usize,
        right: usize,
    },
    RankDiffers {
        from: ExponentVector,
        to: ExponentVector,
        left: usize,
        right: usize,
    },
}

impl ProfileVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, ProfileVerdict::Equal)
    }
}

impl fmt::Display for ProfileVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileVerdict::Equal => write!(f, "profile-equal"),
            ProfileVerdict::ContextMismatch => write!(f, "windows or fields differ"),
            ProfileVerdict::DimensionDiffers { degree, left, right } => {
                write!(f, "dimension differs at {degree}: {left} vs {right}")
            }
            ProfileVerdict::RankDiffers { from, to, left, right } => {
                write!(f, "rank of {from} -> {to} differs: {left} vs {right}")
            }
        }
    }
}

/// Necessary condition for a graded isomorphism.
pub fn compare_graded(m: &BoxModule, n: &BoxModule) -> ProfileVerdict {
    if !m.same_context(n) {
        return ProfileVerdict::ContextMismatch;
    }
    let w = m.window();
    for (idx, a) in w.iter().enumerate() {
        let (l, r) = (m.dims[idx], n.dims[idx]);
        if l != r {
            return ProfileVerdict::DimensionDiffers {
                degree: a,
                left: l,
                right: r,
            };
        }
    }
    for (idx, a) in w.iter().enumerate() {
        if m.dims[idx] == 0 {
            continue;
        }
        let left = m.actions_from(&a);
        let right = n.actions_from(&a);
        for (cidx, (l, r)) in left.iter().zip(&right).enumerate() {
            if let (Some(l), Some(r)) = (l, r) {
                let (lr, rr) = (l.rank(), r.rank());
                if lr != rr {
                    return ProfileVerdict::RankDiffers {
                        from: a,
                        to: w.point(cidx),
                        left: lr,
                        right: rr,
                    };
                }
            }
        }
    }
    ProfileVerdict::Equal
}

impl BoxModule {
    /// Decides graded isomorphism for modules whose components all have
    /// dimension at most one; `None` when either module is thicker.
    pub fn thin_isomorphic(&self, other: &BoxModule) -> Option<bool> {
        if self.dims.iter().chain(&other.dims).any(|&d| d > 1) {
            return None;
        }
        if !self.same_context(other) || self.saturated != other.saturated {
            return Some(false);
        }
        if self.dims != other.dims {
            return Some(false);
        }
        let f = self.field;
        let w = self.window();
        let n = self.arity();
        // Scale factors g_a with g_{a+e_i}·m_e = n_e·g_a along every edge.
        let mut scale: Vec<Option<Scalar>> = vec![None; w.size()];
        for root in 0..w.size() {
            if self.dims[root] == 0 || scale[root].is_some() {
                continue;
            }
            scale[root] = Some(f.one());
            let mut stack = vec![root];
            while let Some(idx) = stack.pop() {
                let a = w.point(idx);
                let g = scale[idx].clone().unwrap();
                let mut neighbours = Vec::new();
                for i in 0..n {
                    if let Some(m) = self.edge_at(idx, i) {
                        let nidx = w.index_of(&a.plus_unit(i)).unwrap();
                        neighbours.push((nidx, m, other.edge_at(idx, i).unwrap(), true));
                    }
                    if a[i] > w.lo()[i] {
                        let pidx = w.index_of(&a.minus_unit(i)).unwrap();
                        neighbours.push((pidx, self.edge_at(pidx, i).unwrap(), other.edge_at(pidx, i).unwrap(), false));
                    }
                }
                for (nidx, me, ne, forward) in neighbours {
                    if self.dims[nidx] == 0 {
                        continue;
                    }
                    let mv = me.get(0, 0);
                    let nv = ne.get(0, 0);
                    if mv.is_zero() != nv.is_zero() {
                        return Some(false);
                    }
                    if mv.is_zero() {
                        continue;
                    }
                    // forward: g_next = n·g / m ; backward: g_prev = m·g / n
                    let candidate = if forward {
                        f.mul(&f.mul(nv, &g), &f.inv(mv))
                    } else {
                        f.mul(&f.mul(mv, &g), &f.inv(nv))
                    };
                    match &scale[nidx] {
                        Some(existing) if *existing != candidate => return Some(false),
                        Some(_) => {}
                        None => {
                            scale[nidx] = Some(candidate);
                            stack.push(nidx);
                        }
                    }
                }
            }
        }
        Some(true)
    }
}
