//! Monomial ideals given by their minimal monomial generators.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{map_r, map_sqrt, BoundVector, ExponentVector, LatticeError, Window};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("negative exponent in generator {0}")]
    NegativeExponent(ExponentVector),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("the unit ideal has no minimal primes")]
    UnitIdeal,
    #[error("ideal is not {0}-determined")]
    NotDetermined(BoundVector),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A monomial prime `P_F = (x_i : i ∉ F)`, recorded by its face `F`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct MonomialPrime {
    n: usize,
    face: Vec<usize>,
}

impl MonomialPrime {
    pub fn from_face(n: usize, mut face: Vec<usize>) -> Self {
        face.sort_unstable();
        face.dedup();
        assert!(face.iter().all(|&i| i < n));
        MonomialPrime { n, face }
    }

    /// The prime generated by the given variables.
    pub fn from_generators(n: usize, vars: &[usize]) -> Self {
        let face = (0..n).filter(|i| !vars.contains(i)).collect();
        MonomialPrime { n, face }
    }

    pub fn face(&self) -> &[usize] {
        &self.face
    }

    pub fn generators(&self) -> Vec<usize> {
        (0..self.n).filter(|i| !self.face.contains(i)).collect()
    }

    pub fn height(&self) -> usize {
        self.n - self.face.len()
    }

    /// Dimension of `S / P_F`.
    pub fn dim(&self) -> usize {
        self.face.len()
    }

    pub fn is_contained_in(&self, other: &MonomialPrime) -> bool {
        other.face.iter().all(|i| self.face.contains(i))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "({})", gens.join(","))
    }
}

/// Minimal elements of a set of primes under inclusion.
pub fn minimal_primes_of(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    let mut out: Vec<MonomialPrime> = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_contained_in(p)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A monomial ideal; `generators` is always its minimal system `G(I)`,
/// sorted lexicographically, so equal ideals are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Drops every generator divisible by another one.
    pub fn minimalize(n: usize, gens: Vec<ExponentVector>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.len() != n {
                return Err(IdealError::ArityMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            if !g.is_nonnegative() {
                return Err(IdealError::NegativeExponent(g.clone()));
            }
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<ExponentVector> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.le_unchecked(g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            n,
            generators: minimal,
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![ExponentVector::zero(n)],
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(ExponentVector::is_zero)
    }

    fn check_arity(&self, u: &ExponentVector) -> Result<(), IdealError> {
        if u.len() != self.n {
            return Err(IdealError::ArityMismatch {
                expected: self.n,
                got: u.len(),
            });
        }
        if !u.is_nonnegative() {
            return Err(IdealError::NegativeExponent(u.clone()));
        }
        Ok(())
    }

    /// `x^u ∈ I`.
    pub fn contains(&self, u: &ExponentVector) -> Result<bool, IdealError> {
        self.check_arity(u)?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.le_unchecked(u))
    }

    /// `other ⊆ self`, tested generator-wise.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.n == self.n && other.generators.iter().all(|g| self.contains_unchecked(g))
    }

    /// `I : x^u`, generated by `max(g - u, 0)`.
    pub fn colon(&self, u: &ExponentVector) -> Result<MonomialIdeal, IdealError> {
        self.check_arity(u)?;
        let gens = self
            .generators
            .iter()
            .map(|g| (g - u).join(&ExponentVector::zero(self.n)))
            .collect();
        MonomialIdeal::minimalize(self.n, gens)
    }

    /// The radical, from the squarefree parts of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| map_sqrt(g).expect("generators are nonnegative"))
            .collect();
        MonomialIdeal::minimalize(self.n, gens).expect("squarefree parts are valid")
    }

    /// The radical read off degreewise: `x^a ∈ √I` iff `x^{r(a)} ∈ I`, over
    /// squarefree `a`. Requires `I` to be `t`-determined.
    pub fn radical_degreewise(&self, t: &BoundVector) -> Result<MonomialIdeal, IdealError> {
        if !self.is_t_determined(t) {
            return Err(IdealError::NotDetermined(t.clone()));
        }
        let mut gens = Vec::new();
        for a in Window::unit_cube(self.n).iter() {
            if self.contains_unchecked(&map_r(&a, t)?) {
                gens.push(a);
            }
        }
        MonomialIdeal::minimalize(self.n, gens)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.entries().iter().all(|&x| x <= 1))
    }

    /// Every minimal generator lies below `t`.
    pub fn is_t_determined(&self, t: &BoundVector) -> bool {
        t.len() == self.n && self.generators.iter().all(|g| g.le_unchecked(t.as_vector()))
    }

    /// `t_i = max ν_i(u)` over `G(I)`, raised to at least 1.
    pub fn tight_bound(&self) -> BoundVector {
        let mut t = ExponentVector::one(self.n);
        for g in &self.generators {
            t = t.join(g);
        }
        BoundVector::new(t).expect("entries are at least one")
    }

    /// Krull dimension of `S/I` and its minimal primes, by enumerating faces.
    pub fn dim_and_minimal_primes(&self) -> Result<(usize, Vec<MonomialPrime>), IdealError> {
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        let n = self.n;
        // I ⊆ P_F iff no generator is supported inside F.
        let admissible = |mask: u32| {
            self.generators
                .iter()
                .all(|g| g.support().iter().any(|&i| mask & (1 << i) == 0))
        };
        let faces: Vec<u32> = (0u32..(1 << n)).filter(|&m| admissible(m)).collect();
        let maximal: Vec<u32> = faces
            .iter()
            .copied()
            .filter(|&m| !faces.iter().any(|&o| o != m && o & m == m))
            .collect();
        let mut primes: Vec<MonomialPrime> = maximal
            .iter()
            .map(|&m| MonomialPrime::from_face(n, (0..n).filter(|&i| m & (1 << i) != 0).collect()))
            .collect();
        primes.sort();
        let dim = primes.iter().map(MonomialPrime::dim).max().unwrap_or(0);
        Ok((dim, primes))
    }

    /// Formats generators as power products over the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.generators
            .iter()
            .map(|g| monomial_string(g, names))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub(crate) fn monomial_string(g: &ExponentVector, names: &[String]) -> String {
    let parts: Vec<String> = (0..g.len())
        .filter(|&i| g[i] > 0)
        .map(|i| {
            if g[i] == 1 {
                names[i].clone()
            } else {
                format!("{}^{}", names[i], g[i])
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display_with(&default_names(self.n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect())
            .unwrap()
    }

    fn v(x: &[i64]) -> ExponentVector {
        ExponentVector::new(x.to_vec())
    }

    #[test]
    fn minimalize_examples() {
        // {x^2 y, x y, y} -> {y}
        assert_eq!(ideal(2, &[&[2, 1], &[1, 1], &[0, 1]]).generators(), &[v(&[0, 1])]);
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(i.generators(), &[v(&[0, 2]), v(&[2, 0])]);
        assert!(ideal(2, &[]).is_zero());
        assert!(matches!(
            MonomialIdeal::minimalize(2, vec![v(&[-1, 0])]),
            Err(IdealError::NegativeExponent(_))
        ));
    }

    #[test]
    fn membership_examples() {
        assert!(!MonomialIdeal::zero(2).contains(&v(&[3, 3])).unwrap());
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&v(&[1, 1])).unwrap());
        assert!(!i.contains(&v(&[1, 0])).unwrap());
        assert!(i.contains(&v(&[1])).is_err());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon(&v(&[0, 0])).unwrap(), i);
        assert_eq!(ideal(2, &[&[2, 1]]).colon(&v(&[1, 1])).unwrap(), ideal(2, &[&[1, 0]]));
        assert!(ideal(2, &[&[1, 0]]).colon(&v(&[5, 0])).unwrap().is_unit());
    }

    #[test]
    fn radical_examples() {
        let sq = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sq.radical(), sq);
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1]]).radical(), ideal(2, &[&[1, 0]]));
        // (a^4 d^4, a^2 b^3, b^3 c^2, b^3 d) -> (ad, ab, bc, bd)
        let i = ideal(4, &[&[4, 0, 0, 4], &[2, 3, 0, 0], &[0, 3, 2, 0], &[0, 3, 0, 1]]);
        let expected = ideal(4, &[&[1, 0, 0, 1], &[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(i.radical(), expected);
        assert_eq!(i.radical_degreewise(&i.tight_bound()).unwrap(), expected);
    }

    #[test]
    fn determinedness_examples() {
        let t = |x: &[i64]| BoundVector::new(v(x)).unwrap();
        assert!(ideal(2, &[&[2, 0], &[1, 1]]).is_t_determined(&t(&[2, 1])));
        assert!(!ideal(2, &[&[3, 0]]).is_t_determined(&t(&[2, 5])));
        let i = ideal(3, &[&[3, 0, 1], &[0, 2, 0]]);
        assert_eq!(i.tight_bound(), t(&[3, 2, 1]));
        assert!(i.is_t_determined(&i.tight_bound()));
        assert!(matches!(
            i.radical_degreewise(&t(&[1, 1, 1])),
            Err(IdealError::NotDetermined(_))
        ));
    }

    #[test]
    fn dimension_examples() {
        let (d, primes) = MonomialIdeal::zero(3).dim_and_minimal_primes().unwrap();
        assert_eq!(d, 3);
        assert_eq!(primes, vec![MonomialPrime::from_face(3, vec![0, 1, 2])]);

        let (d, primes) = ideal(2, &[&[1, 1]]).dim_and_minimal_primes().unwrap();
        assert_eq!(d, 1);
        assert_eq!(primes.len(), 2);
        assert!(primes.contains(&MonomialPrime::from_generators(2, &[0])));
        assert!(primes.contains(&MonomialPrime::from_generators(2, &[1])));

        let (d, primes) = ideal(2, &[&[2, 0], &[1, 1]]).dim_and_minimal_primes().unwrap();
        assert_eq!(d, 1);
        assert_eq!(primes, vec![MonomialPrime::from_generators(2, &[0])]);

        assert_eq!(
            MonomialIdeal::unit(2).dim_and_minimal_primes().unwrap_err(),
            IdealError::UnitIdeal
        );
    }

    #[test]
    fn display_uses_power_products() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.to_string(), "(x1*x2, x1^2)");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "(1)");
    }
}
