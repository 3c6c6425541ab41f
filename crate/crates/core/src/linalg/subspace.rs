use super::{DenseMatrix, Field, LinalgError, Scalar};

/// A subspace of `K^ambient`, stored as the nonzero rows of a reduced
/// echelon matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient: usize,
    basis: DenseMatrix,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            basis: DenseMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            basis: DenseMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let m = DenseMatrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        Self::span_of_rows(&m)
    }

    pub fn span_of_rows(m: &DenseMatrix) -> Self {
        let r = m.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        SubspaceBasis {
            ambient: m.cols(),
            basis: r.matrix.select_rows(&keep),
            pivots: r.pivots,
        }
    }

    pub fn span_of_columns(m: &DenseMatrix) -> Self {
        Self::span_of_rows(&m.transpose())
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as rows (reduced echelon form).
    pub fn rows(&self) -> &DenseMatrix {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn as_columns(&self) -> DenseMatrix {
        self.basis.transpose()
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(r).iter().enumerate() {
                if !x.is_zero() {
                    residual[j] = f.sub(&residual[j], &f.mul(c, x));
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.ambient == other.ambient
            && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient);
        Self::span_of_rows(&self.basis.vstack(&other.basis))
    }

    /// Image of this subspace under `f`.
    pub fn image_under(&self, f: &DenseMatrix) -> SubspaceBasis {
        assert_eq!(f.cols(), self.ambient);
        SubspaceBasis::span_of_columns(&f.mul(&self.as_columns()))
    }
}

/// The subquotient `bigger / sub` together with a chosen basis of a
/// complement of `sub` inside `bigger`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    sub: SubspaceBasis,
    bigger: SubspaceBasis,
    complement: DenseMatrix,
    projection: DenseMatrix,
}

impl Subquotient {
    pub fn new(sub: SubspaceBasis, bigger: SubspaceBasis) -> Result<Self, LinalgError> {
        if !sub.is_subspace_of(&bigger) {
            return Err(LinalgError::NotSubspace);
        }
        let f = bigger.field();
        let ambient = bigger.ambient();
        let mut running = sub.clone();
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        for v in bigger.vectors() {
            if !running.contains(&v) {
                running = running.sum(&SubspaceBasis::span(f, ambient, std::slice::from_ref(&v)));
                chosen.push(v);
            }
        }
        let q = chosen.len();
        let s = sub.dim();
        let complement = DenseMatrix::from_columns(f, ambient, &chosen);
        // Left inverse of [sub | complement] from the rref of [A | I].
        let a = sub.as_columns().hstack(&complement);
        let k = s + q;
        let aug = a.hstack(&DenseMatrix::identity(f, ambient)).rref().matrix;
        let projection = DenseMatrix::from_fn(f, q, ambient, |i, j| aug.get(s + i, k + j).clone());
        Ok(Subquotient {
            sub,
            bigger,
            complement,
            projection,
        })
    }

    /// `K^ambient / sub`.
    pub fn quotient_of_ambient(sub: SubspaceBasis) -> Self {
        let full = SubspaceBasis::full(sub.field(), sub.ambient());
        Self::new(sub, full).expect("every subspace lies in the ambient space")
    }

    pub fn dim(&self) -> usize {
        self.complement.cols()
    }

    pub fn ambient(&self) -> usize {
        self.bigger.ambient()
    }

    pub fn sub(&self) -> &SubspaceBasis {
        &self.sub
    }

    pub fn bigger(&self) -> &SubspaceBasis {
        &self.bigger
    }

    /// `ambient × dim` matrix whose columns lift the quotient basis.
    pub fn complement(&self) -> &DenseMatrix {
        &self.complement
    }

    /// `dim × ambient` matrix sending a vector of `bigger` to the
    /// coordinates of its residue class.
    pub fn projection(&self) -> &DenseMatrix {
        &self.projection
    }
}

/// `dim bigger/sub` and the projection onto quotient coordinates.
pub fn subquotient(
    ambient: usize,
    sub: &SubspaceBasis,
    bigger: &SubspaceBasis,
) -> Result<(usize, DenseMatrix), LinalgError> {
    if sub.ambient() != ambient || bigger.ambient() != ambient {
        return Err(LinalgError::AmbientMismatch);
    }
    let sq = Subquotient::new(sub.clone(), bigger.clone())?;
    Ok((sq.dim(), sq.projection().clone()))
}

/// `dim ker(g) - rank(f)` for a complex `A --f--> B --g--> C`.
pub fn homology_dim(f: &DenseMatrix, g: &DenseMatrix) -> Result<usize, LinalgError> {
    let gf = g.try_mul(f)?;
    if !gf.is_zero() {
        return Err(LinalgError::NonzeroComposition);
    }
    let kernel = g.cols() - g.rank();
    Ok(kernel - f.rank())
}

/// The map between subquotients induced by `f`.
pub fn induced_map(
    f: &DenseMatrix,
    source: &Subquotient,
    target: &Subquotient,
) -> Result<DenseMatrix, LinalgError> {
    if f.cols() != source.ambient() || f.rows() != target.ambient() {
        return Err(LinalgError::ShapeMismatch {
            left: f.shape(),
            right: (target.ambient(), source.ambient()),
        });
    }
    if !source.sub().image_under(f).is_subspace_of(target.sub())
        || !source.bigger().image_under(f).is_subspace_of(target.bigger())
    {
        return Err(LinalgError::FiltrationViolated);
    }
    Ok(target.projection().mul(&f.mul(source.complement())))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn vec_of(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn subquotient_examples() {
        let full = SubspaceBasis::full(Q, 3);
        let (d, _) = subquotient(3, &full, &full).unwrap();
        assert_eq!(d, 0);

        let (d, p) = subquotient(3, &SubspaceBasis::zero(Q, 3), &full).unwrap();
        assert_eq!(d, 3);
        assert_eq!(p.rank(), 3);

        let x_axis = SubspaceBasis::span(Q, 2, &[vec_of(&[1, 0])]);
        let (d, p) = subquotient(2, &x_axis, &SubspaceBasis::full(Q, 2)).unwrap();
        assert_eq!(d, 1);
        assert!(p.apply(&vec_of(&[1, 0])).iter().all(Scalar::is_zero));
    }

    #[test]
    fn subquotient_rejects_non_subspace() {
        let a = SubspaceBasis::span(Q, 2, &[vec_of(&[1, 0])]);
        let b = SubspaceBasis::span(Q, 2, &[vec_of(&[0, 1])]);
        assert_eq!(subquotient(2, &a, &b).unwrap_err(), LinalgError::NotSubspace);
    }

    #[test]
    fn projection_kills_sub_and_inverts_complement() {
        let bigger = SubspaceBasis::span(Q, 4, &[vec_of(&[1, 1, 0, 0]), vec_of(&[0, 1, 1, 0]), vec_of(&[0, 0, 1, 1])]);
        let sub = SubspaceBasis::span(Q, 4, &[vec_of(&[1, 2, 1, 0])]);
        let sq = Subquotient::new(sub.clone(), bigger).unwrap();
        assert_eq!(sq.dim(), 2);
        assert!(sq.projection().mul(&sub.as_columns()).is_zero());
        assert!(sq.projection().mul(sq.complement()).is_identity());
    }

    #[test]
    fn homology_examples() {
        let z = DenseMatrix::zeros(Q, 3, 2);
        let z2 = DenseMatrix::zeros(Q, 1, 3);
        assert_eq!(homology_dim(&z, &z2).unwrap(), 3);

        // f surjective onto ker g
        let f = DenseMatrix::from_ints(Q, 1, &[vec![1], vec![0]]);
        let g = DenseMatrix::from_ints(Q, 2, &[vec![0, 1]]);
        assert_eq!(homology_dim(&f, &g).unwrap(), 0);

        let bad = DenseMatrix::from_ints(Q, 2, &[vec![1, 0]]);
        assert_eq!(homology_dim(&f, &bad).unwrap_err(), LinalgError::NonzeroComposition);
    }

    #[test]
    fn induced_map_examples() {
        let sub = SubspaceBasis::span(Q, 2, &[vec_of(&[1, 0])]);
        let sq = Subquotient::quotient_of_ambient(sub.clone());
        let id = DenseMatrix::identity(Q, 2);
        assert!(induced_map(&id, &sq, &sq).unwrap().is_identity());
        let zero = DenseMatrix::zeros(Q, 2, 2);
        assert!(induced_map(&zero, &sq, &sq).unwrap().is_zero());

        // The swap carries e_2 to e_1, which is zero modulo the first axis;
        // but it does not preserve the sub, so use a source with zero sub.
        let swap = DenseMatrix::from_ints(Q, 2, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(induced_map(&swap, &sq, &sq).unwrap_err(), LinalgError::FiltrationViolated);
        let src = Subquotient::new(
            SubspaceBasis::zero(Q, 2),
            SubspaceBasis::span(Q, 2, &[vec_of(&[0, 1])]),
        )
        .unwrap();
        let m = induced_map(&swap, &src, &sq).unwrap();
        assert_eq!(m.shape(), (1, 1));
        assert!(m.is_zero());
    }
}
