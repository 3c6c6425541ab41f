use std::collections::BTreeMap;

use crate::ideal::MonomialIdeal;
use crate::lattice::ExponentVector;
use crate::linalg::{homology_dim, DenseMatrix, Field};

use super::{BettiTable, HomologicalError};

pub const TAYLOR_GENERATOR_CAP: usize = 12;

/// Betti numbers of `S/I` from the Taylor complex tensored with the field:
/// in degree `b` the basis is the generator subsets with lcm `b`, and only
/// faces `F \ j` with the same lcm survive in the differential.
pub fn taylor_oracle(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable, HomologicalError> {
    let gens = ideal.generators();
    let m = gens.len();
    if m > TAYLOR_GENERATOR_CAP {
        return Err(HomologicalError::TooManyGenerators {
            cap: TAYLOR_GENERATOR_CAP,
            got: m,
        });
    }
    let n = ideal.arity();
    let mut lcm = vec![ExponentVector::zero(n); 1 << m];
    for mask in 1usize..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        lcm[mask] = lcm[mask & (mask - 1)].join(&gens[low]);
    }
    // lcm -> faces grouped by size
    let mut groups: BTreeMap<ExponentVector, Vec<Vec<usize>>> = BTreeMap::new();
    for (mask, b) in lcm.iter().enumerate() {
        let levels = groups.entry(b.clone()).or_insert_with(|| vec![Vec::new(); m + 1]);
        levels[mask.count_ones() as usize].push(mask);
    }
    let mut table = BettiTable::new();
    for (b, levels) in groups {
        let differential = |i: usize| -> DenseMatrix {
            let (src, tgt) = (&levels[i], &levels[i - 1]);
            let mut d = DenseMatrix::zeros(field, tgt.len(), src.len());
            for (c, &mask) in src.iter().enumerate() {
                let mut pos = 0;
                for j in 0..m {
                    if mask & (1 << j) == 0 {
                        continue;
                    }
                    let smaller = mask & !(1 << j);
                    if let Ok(r) = tgt.binary_search(&smaller) {
                        let sign = if pos % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                        d.set(r, c, sign);
                    }
                    pos += 1;
                }
            }
            d
        };
        for i in 0..=m {
            if levels[i].is_empty() {
                continue;
            }
            let incoming = if i < m {
                differential(i + 1)
            } else {
                DenseMatrix::zeros(field, levels[i].len(), 0)
            };
            let outgoing = if i > 0 {
                differential(i)
            } else {
                DenseMatrix::zeros(field, 0, levels[0].len())
            };
            table.add(i, b.clone(), homology_dim(&incoming, &outgoing)?);
        }
    }
    Ok(table)
}
