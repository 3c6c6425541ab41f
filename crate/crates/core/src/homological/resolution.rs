use crate::boxmod::{inclusion_matrix, shifts_below, BoxModule, MonomialMatrix};
use crate::lattice::{map_sqrt, BoundVector, ExponentVector, Window};
use crate::linalg::{homology_dim, DenseMatrix, Field, Scalar, Subquotient, SubspaceBasis};

use super::{BettiTable, HomologicalError};

/// `F_0 <- F_1 <- ... <- F_L`, with `maps[i] : F_{i+1} -> F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    field: Field,
    arity: usize,
    shifts: Vec<Vec<ExponentVector>>,
    maps: Vec<MonomialMatrix>,
}

impl FreeComplex {
    /// Checks that adjacent shifts agree and that `d ∘ d = 0`.
    pub fn new(
        field: Field,
        arity: usize,
        shifts: Vec<Vec<ExponentVector>>,
        maps: Vec<MonomialMatrix>,
    ) -> Result<Self, HomologicalError> {
        assert_eq!(maps.len() + 1, shifts.len().max(1));
        for (i, d) in maps.iter().enumerate() {
            assert_eq!(d.row_shifts(), &shifts[i][..]);
            assert_eq!(d.col_shifts(), &shifts[i + 1][..]);
        }
        let c = FreeComplex {
            field,
            arity,
            shifts,
            maps,
        };
        c.check_composition()?;
        Ok(c)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Shifts of `F_i` (empty past the end).
    pub fn shifts(&self, i: usize) -> &[ExponentVector] {
        self.shifts.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn maps(&self) -> &[MonomialMatrix] {
        &self.maps
    }

    /// Index of the last nonzero free module; `None` for the zero complex.
    pub fn length(&self) -> Option<usize> {
        self.shifts.iter().rposition(|s| !s.is_empty())
    }

    /// `d_i ∘ d_{i+1} = 0`; monomial exponents are forced by the shifts, so
    /// only the scalar product has to vanish.
    pub fn check_composition(&self) -> Result<(), HomologicalError> {
        for i in 1..self.maps.len() {
            if !self.maps[i - 1].scalars().mul(self.maps[i].scalars()).is_zero() {
                return Err(HomologicalError::NotAComplex(i));
            }
        }
        Ok(())
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(MonomialMatrix::is_minimal)
    }

    /// Shift multiplicities; equals the Betti table when the complex is a
    /// minimal resolution.
    pub fn shift_table(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, level) in self.shifts.iter().enumerate() {
            for a in level {
                t.add(i, a.clone(), 1);
            }
        }
        t
    }

    /// Replaces every shift `a` by `√a`, keeping all scalars.
    pub fn radicalize(&self) -> Result<FreeComplex, HomologicalError> {
        let sqrt = |a: &ExponentVector| map_sqrt(a).expect("shifts are nonnegative");
        let maps = self
            .maps
            .iter()
            .map(|d| d.map_shifts(sqrt))
            .collect::<Result<Vec<_>, _>>()?;
        let shifts = self.shifts.iter().map(|s| s.iter().map(sqrt).collect()).collect();
        FreeComplex::new(self.field, self.arity, shifts, maps)
    }

    /// Degree-`b` component of `maps[i]`, or the zero map when `i` is past
    /// the end.
    fn strand(&self, i: usize, b: &ExponentVector) -> DenseMatrix {
        match self.maps.get(i) {
            Some(d) => d.strand(b),
            None => DenseMatrix::zeros(
                self.field,
                shifts_below(self.shifts(i), b).len(),
                shifts_below(self.shifts(i + 1), b).len(),
            ),
        }
    }

    /// `dim H_i(F)_b` for `i >= 1`.
    pub fn homology_dim(&self, i: usize, b: &ExponentVector) -> Result<usize, HomologicalError> {
        assert!(i >= 1);
        Ok(homology_dim(&self.strand(i, b), &self.strand(i - 1, b))?)
    }

    /// Every `H_i` with `i >= 1` vanishes at every degree of the window.
    pub fn check_exact_on(&self, window: &Window) -> Result<(), HomologicalError> {
        let top = self.shifts.len();
        for b in window.iter() {
            for i in 1..top {
                if self.homology_dim(i, &b)? != 0 {
                    return Err(HomologicalError::NotExact { position: i, degree: b });
                }
            }
        }
        Ok(())
    }

    /// `H_0 = coker(F_1 -> F_0)` as a module on `[0, t]`.
    pub fn presented_module(&self, t: &BoundVector) -> Result<BoxModule, HomologicalError> {
        let phi = match self.maps.first() {
            Some(d) => d.clone(),
            None => MonomialMatrix::zero(self.field, self.shifts(0).to_vec(), Vec::new()),
        };
        Ok(BoxModule::from_presentation(&phi, t, self.field)?)
    }

    /// `Tor_i(H_0, K)_b` read off the complex tensored with the field; for a
    /// resolution these are the Betti numbers even when it is not minimal.
    pub fn tor_table(&self) -> Result<BettiTable, HomologicalError> {
        let f = self.field;
        let mut degrees: Vec<ExponentVector> = self.shifts.iter().flatten().cloned().collect();
        degrees.sort();
        degrees.dedup();
        let at = |i: usize, b: &ExponentVector| -> Vec<usize> {
            (0..self.shifts(i).len()).filter(|&j| self.shifts(i)[j] == *b).collect()
        };
        let scalar_strand = |i: usize, b: &ExponentVector| -> DenseMatrix {
            let rows = at(i, b);
            let cols = at(i + 1, b);
            match self.maps.get(i) {
                Some(d) => d.scalars().select_rows(&rows).select_columns(&cols),
                None => DenseMatrix::zeros(f, rows.len(), cols.len()),
            }
        };
        let mut table = BettiTable::new();
        for b in &degrees {
            for i in 0..self.shifts.len() {
                let incoming = scalar_strand(i, b);
                let outgoing = if i == 0 {
                    DenseMatrix::zeros(f, 0, at(0, b).len())
                } else {
                    scalar_strand(i - 1, b)
                };
                table.add(i, b.clone(), homology_dim(&incoming, &outgoing)?);
            }
        }
        Ok(table)
    }
}

/// Minimal homogeneous generators: lifts of a basis of
/// `M_a / Σ_i x_i M_{a-e_i}` at every window degree.
fn minimal_generators(m: &BoxModule) -> Vec<(ExponentVector, Vec<Scalar>)> {
    let f = m.field();
    let w = m.window();
    let mut out = Vec::new();
    for (idx, a) in w.iter().enumerate() {
        let d = m.dims()[idx];
        if d == 0 {
            continue;
        }
        let mut generated = SubspaceBasis::zero(f, d);
        for i in 0..m.arity() {
            if a[i] > w.lo()[i] {
                generated = generated.sum(&SubspaceBasis::span_of_columns(m.edge(&a.minus_unit(i), i)));
            }
        }
        let q = Subquotient::quotient_of_ambient(generated);
        let lifts = q.complement();
        for c in 0..lifts.cols() {
            out.push((a.clone(), lifts.column(c)));
        }
    }
    out
}

/// The minimal free resolution, by repeated generator extraction and
/// degreewise syzygies on `[0, t]`.
pub fn minimal_resolution(m: &BoxModule) -> Result<FreeComplex, HomologicalError> {
    let t = m.bound()?;
    let n = m.arity();
    let f = m.field();
    let w = Window::bounded(&t);
    let mut current = m.clone();
    // columns of the current syzygy module inside the previous free module
    let mut embedding: Option<Vec<DenseMatrix>> = None;
    let mut prev_shifts: Vec<ExponentVector> = Vec::new();
    let mut shifts = Vec::new();
    let mut maps = Vec::new();
    loop {
        let gens = minimal_generators(&current);
        if gens.is_empty() {
            break;
        }
        assert!(shifts.len() <= n, "minimal resolutions have length at most n");
        let new_shifts: Vec<ExponentVector> = gens.iter().map(|(a, _)| a.clone()).collect();
        if let Some(emb) = &embedding {
            let mut scalars = DenseMatrix::zeros(f, prev_shifts.len(), gens.len());
            for (k, (c, v)) in gens.iter().enumerate() {
                let column = emb[w.index_of(c).unwrap()].apply(v);
                for (pos, &row) in shifts_below(&prev_shifts, c).iter().enumerate() {
                    scalars.set(row, k, column[pos].clone());
                }
            }
            maps.push(MonomialMatrix::new(prev_shifts.clone(), new_shifts.clone(), scalars)?);
        }
        shifts.push(new_shifts.clone());

        let tables: Vec<Vec<Option<DenseMatrix>>> = gens.iter().map(|(a, _)| current.actions_from(a)).collect();
        let kernels: Vec<SubspaceBasis> = w
            .iter()
            .enumerate()
            .map(|(idx, b)| {
                let cols: Vec<Vec<Scalar>> = shifts_below(&new_shifts, &b)
                    .into_iter()
                    .map(|k| tables[k][idx].as_ref().unwrap().apply(&gens[k].1))
                    .collect();
                let image = DenseMatrix::from_columns(f, current.dims()[idx], &cols);
                image.kernel_basis()
            })
            .collect();
        let columns: Vec<DenseMatrix> = kernels.iter().map(SubspaceBasis::as_columns).collect();
        let dims = kernels.iter().map(SubspaceBasis::dim).collect();
        let syzygies = BoxModule::from_parts(
            f,
            w.clone(),
            dims,
            |b, i| {
                let c = b.plus_unit(i);
                let inc = inclusion_matrix(f, &shifts_below(&new_shifts, b), &shifts_below(&new_shifts, &c));
                let moved = inc.mul(&columns[w.index_of(b).unwrap()]);
                let target = &kernels[w.index_of(&c).unwrap()];
                let coords: Vec<Vec<Scalar>> = (0..moved.cols())
                    .map(|j| target.coordinates(&moved.column(j)).expect("syzygies map into syzygies"))
                    .collect();
                Ok(DenseMatrix::from_columns(f, target.dim(), &coords))
            },
            true,
        )?;
        current = syzygies;
        embedding = Some(columns);
        prev_shifts = new_shifts;
    }
    FreeComplex::new(f, n, shifts, maps)
}
