use rayon::prelude::*;

use crate::boxmod::BoxModule;
use crate::lattice::{ExponentVector, Window};
use crate::linalg::{homology_dim, DenseMatrix};

use super::{BettiTable, HomologicalError};

/// Betti numbers from the Koszul strands
/// `⊕_{|F|=i} M_{a-e_F}` at every degree `a` of `[0, t]`.
pub fn betti_table(m: &BoxModule) -> Result<BettiTable, HomologicalError> {
    let t = m.bound()?;
    let window = Window::bounded(&t);
    let degrees: Vec<ExponentVector> = window.iter().collect();
    let per_degree: Vec<Vec<(usize, usize)>> = degrees
        .par_iter()
        .map(|a| koszul_homology(m, a))
        .collect::<Result<_, _>>()?;
    let mut table = BettiTable::new();
    for (a, row) in degrees.into_iter().zip(per_degree) {
        for (i, b) in row {
            table.add(i, a.clone(), b);
        }
    }
    Ok(table)
}

/// Faces of `supp(a)` of each size, as sorted index lists.
fn faces_by_size(support: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let k = support.len();
    let mut out = vec![Vec::new(); k + 1];
    for mask in 0u32..(1 << k) {
        let face: Vec<usize> = (0..k).filter(|&j| mask & (1 << j) != 0).map(|j| support[j]).collect();
        out[face.len()].push(face);
    }
    out
}

/// `(i, β_{i,a})` for every `i` with nonzero homology.
fn koszul_homology(m: &BoxModule, a: &ExponentVector) -> Result<Vec<(usize, usize)>, HomologicalError> {
    let n = m.arity();
    let f = m.field();
    let faces = faces_by_size(&a.support());
    let degree_of = |face: &[usize]| {
        let mut b = a.clone();
        for &j in face {
            b = b.minus_unit(j);
        }
        b
    };
    let dims: Vec<Vec<usize>> = faces
        .iter()
        .map(|level| level.iter().map(|face| m.dim_at(&degree_of(face))).collect())
        .collect();
    // differential from position i to i - 1
    let differential = |i: usize| -> DenseMatrix {
        let (src, tgt) = (&faces[i], &faces[i - 1]);
        let col_offsets: Vec<usize> = offsets(&dims[i]);
        let row_offsets: Vec<usize> = offsets(&dims[i - 1]);
        let mut d = DenseMatrix::zeros(f, *row_offsets.last().unwrap(), *col_offsets.last().unwrap());
        for (c, face) in src.iter().enumerate() {
            let from = degree_of(face);
            for (pos, &j) in face.iter().enumerate() {
                let smaller: Vec<usize> = face.iter().copied().filter(|&x| x != j).collect();
                let r = tgt.iter().position(|g| *g == smaller).unwrap();
                let edge = m.edge(&from, j);
                let sign = if pos % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                for x in 0..edge.rows() {
                    for y in 0..edge.cols() {
                        let v = edge.get(x, y);
                        if !v.is_zero() {
                            d.set(row_offsets[r] + x, col_offsets[c] + y, f.mul(&sign, v));
                        }
                    }
                }
            }
        }
        d
    };
    let top = faces.len() - 1;
    let total = |i: usize| dims[i].iter().sum::<usize>();
    let mut out = Vec::new();
    for i in 0..=top.min(n) {
        let incoming = if i < top {
            differential(i + 1)
        } else {
            DenseMatrix::zeros(f, total(i), 0)
        };
        let outgoing = if i > 0 {
            differential(i)
        } else {
            DenseMatrix::zeros(f, 0, total(0))
        };
        let h = homology_dim(&incoming, &outgoing)?;
        if h > 0 {
            out.push((i, h));
        }
    }
    Ok(out)
}

fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(sizes.len() + 1);
    let mut acc = 0;
    out.push(0);
    for &s in sizes {
        acc += s;
        out.push(acc);
    }
    out
}
