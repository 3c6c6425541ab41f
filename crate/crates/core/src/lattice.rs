//! Exponent vectors, the componentwise order on `Z^n`, and the degree maps
//! `r`, `sqrt`, `s` and `p_t` that drive the functors on positively
//! determined modules.

use std::fmt;
use std::ops::{Add, Index, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("negative component in {0}")]
    NegativeComponent(ExponentVector),
    #[error("bound vector {0} must be >= 1 componentwise")]
    BoundTooSmall(ExponentVector),
    #[error("empty window: {lo} is not <= {hi}")]
    EmptyWindow { lo: ExponentVector, hi: ExponentVector },
}

/// A point of `Z^n`: a multidegree, a shift, or a bound vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn one(n: usize) -> Self {
        ExponentVector(vec![1; n])
    }

    pub fn constant(n: usize, value: i64) -> Self {
        ExponentVector(vec![value; n])
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    /// The indicator vector `e_F` of a subset of `0..n`.
    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut v = vec![0; n];
        for &i in set {
            v[i] = 1;
        }
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn check_len(&self, other: &Self) -> Result<(), LatticeError> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(LatticeError::LengthMismatch(self.len(), other.len()))
        }
    }

    fn check_nonnegative(&self) -> Result<(), LatticeError> {
        if self.is_nonnegative() {
            Ok(())
        } else {
            Err(LatticeError::NegativeComponent(self.clone()))
        }
    }

    /// The componentwise partial order.
    pub fn leq(&self, other: &Self) -> Result<bool, LatticeError> {
        self.check_len(other)?;
        Ok(self.le_unchecked(other))
    }

    /// `self <= other` componentwise; panics on length mismatch.
    pub fn le_unchecked(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "exponent vector length mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise product `a·b`.
    pub fn hadamard(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn with(&self, i: usize, value: i64) -> Self {
        let mut v = self.clone();
        v.0[i] = value;
        v
    }

    pub fn plus_unit(&self, i: usize) -> Self {
        let mut v = self.clone();
        v.0[i] += 1;
        v
    }

    pub fn minus_unit(&self, i: usize) -> Self {
        let mut v = self.clone();
        v.0[i] -= 1;
        v
    }

    /// Indices with a positive entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] > 0).collect()
    }
}

impl Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(v: [i64; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

/// A bound vector `t >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BoundVector(ExponentVector);

impl BoundVector {
    pub fn new(t: ExponentVector) -> Result<Self, LatticeError> {
        if t.entries().iter().all(|&x| x >= 1) {
            Ok(BoundVector(t))
        } else {
            Err(LatticeError::BoundTooSmall(t))
        }
    }

    pub fn ones(n: usize) -> Self {
        BoundVector(ExponentVector::one(n))
    }

    pub fn as_vector(&self) -> &ExponentVector {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_ones(&self) -> bool {
        self.0.entries().iter().all(|&x| x == 1)
    }
}

impl Index<usize> for BoundVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for BoundVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_degree(a: &ExponentVector, t: &BoundVector) -> Result<(), LatticeError> {
    a.check_len(t.as_vector())?;
    a.check_nonnegative()
}

/// `r(a)_i = t_i` if `a_i > 0`, else `0`.
pub fn map_r(a: &ExponentVector, t: &BoundVector) -> Result<ExponentVector, LatticeError> {
    check_degree(a, t)?;
    Ok(ExponentVector(
        a.0.iter()
            .zip(&t.0 .0)
            .map(|(&x, &ti)| if x > 0 { ti } else { 0 })
            .collect(),
    ))
}

/// The componentwise positivity indicator `sqrt(a)`.
pub fn map_sqrt(a: &ExponentVector) -> Result<ExponentVector, LatticeError> {
    a.check_nonnegative()?;
    Ok(ExponentVector(a.0.iter().map(|&x| i64::from(x > 0)).collect()))
}

/// `s(a)_i = t_i` if `a_i >= 1`, else `t_i - 1`.
pub fn map_s(a: &ExponentVector, t: &BoundVector) -> Result<ExponentVector, LatticeError> {
    check_degree(a, t)?;
    Ok(ExponentVector(
        a.0.iter()
            .zip(&t.0 .0)
            .map(|(&x, &ti)| if x >= 1 { ti } else { ti - 1 })
            .collect(),
    ))
}

/// `p_t(a)_i = min(a_i, t_i)`.
pub fn map_p(a: &ExponentVector, t: &BoundVector) -> Result<ExponentVector, LatticeError> {
    check_degree(a, t)?;
    Ok(a.meet(t.as_vector()))
}

/// `(supp(a), supp^t(a))` as sorted index lists.
pub fn supports(
    a: &ExponentVector,
    t: &BoundVector,
) -> Result<(Vec<usize>, Vec<usize>), LatticeError> {
    check_degree(a, t)?;
    let supp = a.support();
    let supp_t = (0..a.len()).filter(|&i| a[i] >= t[i]).collect();
    Ok((supp, supp_t))
}

/// A finite box `[lo, hi]` of `Z^n`, indexed in lexicographic order
/// (first coordinate most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Window {
    lo: ExponentVector,
    hi: ExponentVector,
}

impl Window {
    pub fn new(lo: ExponentVector, hi: ExponentVector) -> Result<Self, LatticeError> {
        if !lo.leq(&hi)? {
            return Err(LatticeError::EmptyWindow { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    /// The window `[0, hi]`.
    pub fn from_origin(hi: &ExponentVector) -> Result<Self, LatticeError> {
        Window::new(ExponentVector::zero(hi.len()), hi.clone())
    }

    /// The poset `P_t = [0, t]`.
    pub fn bounded(t: &BoundVector) -> Self {
        Window {
            lo: ExponentVector::zero(t.len()),
            hi: t.as_vector().clone(),
        }
    }

    pub fn unit_cube(n: usize) -> Self {
        Window {
            lo: ExponentVector::zero(n),
            hi: ExponentVector::one(n),
        }
    }

    pub fn lo(&self) -> &ExponentVector {
        &self.lo
    }

    pub fn hi(&self) -> &ExponentVector {
        &self.hi
    }

    pub fn arity(&self) -> usize {
        self.lo.len()
    }

    pub fn size(&self) -> usize {
        (0..self.arity())
            .map(|i| (self.hi[i] - self.lo[i] + 1) as usize)
            .product()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        a.len() == self.arity() && self.lo.le_unchecked(a) && a.le_unchecked(&self.hi)
    }

    /// Lexicographic position of `a`; `None` outside the window.
    pub fn index_of(&self, a: &ExponentVector) -> Option<usize> {
        if !self.contains(a) {
            return None;
        }
        let mut idx = 0usize;
        for i in 0..self.arity() {
            let width = (self.hi[i] - self.lo[i] + 1) as usize;
            idx = idx * width + (a[i] - self.lo[i]) as usize;
        }
        Some(idx)
    }

    pub fn point(&self, mut idx: usize) -> ExponentVector {
        let n = self.arity();
        let mut v = vec![0; n];
        for i in (0..n).rev() {
            let width = (self.hi[i] - self.lo[i] + 1) as usize;
            v[i] = self.lo[i] + (idx % width) as i64;
            idx /= width;
        }
        ExponentVector(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        (0..self.size()).map(move |k| self.point(k))
    }

    /// Clamp `a` into the window from above.
    pub fn cap(&self, a: &ExponentVector) -> ExponentVector {
        a.meet(&self.hi)
    }

    pub fn shifted(&self, by: &ExponentVector) -> Window {
        Window {
            lo: &self.lo + by,
            hi: &self.hi + by,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// All points of `[lo, hi]` in lexicographic ascending order.
pub fn box_enumerate(
    lo: &ExponentVector,
    hi: &ExponentVector,
) -> Result<Vec<ExponentVector>, LatticeError> {
    let w = Window::new(lo.clone(), hi.clone())?;
    Ok(w.iter().collect())
}

/// All subsets of `0..n` as sorted index lists, in order of increasing bitmask.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1u32 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}
