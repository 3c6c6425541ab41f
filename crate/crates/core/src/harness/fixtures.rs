use std::time::Instant;

use serde::Serialize;

use crate::boxmod::{compare_graded, BoxModule, MonomialMatrix};
use crate::homological::classify;
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::lattice::{BoundVector, ExponentVector};
use crate::linalg::{DenseMatrix, Field};

use super::HarnessError;

#[derive(Clone, Debug, Serialize)]
pub struct FixtureCase {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FixtureReport {
    pub cases: Vec<FixtureCase>,
    pub elapsed_ms: u128,
}

impl FixtureReport {
    pub fn is_pass(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: &str, passed: bool, detail: String) {
        self.cases.push(FixtureCase {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

fn ideal(n: usize, gens: &[&[i64]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(n, gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect())
        .expect("fixture generators are nonnegative")
}

fn bound(t: &[i64]) -> BoundVector {
    BoundVector::new(ExponentVector::new(t.to_vec())).expect("fixture bounds are positive")
}

fn sorted(mut v: Vec<MonomialPrime>) -> Vec<MonomialPrime> {
    v.sort();
    v
}

/// `J/I` in four variables a, b, c, d with a strict dimension drop under r*.
pub fn first_example(field: Field) -> Result<(BoxModule, BoxModule), HarnessError> {
    let i = ideal(4, &[&[4, 0, 0, 4], &[2, 3, 0, 0], &[0, 3, 2, 0], &[0, 3, 0, 1]]);
    let j = ideal(4, &[&[3, 0, 0, 3], &[3, 1, 0, 0], &[0, 2, 0, 0]]);
    let t = bound(&[4, 3, 2, 4]);
    let m = BoxModule::from_ideal_pair(&i, &j, &t, field)?;
    let reduced = BoxModule::from_ideal_pair(&i.radical(), &j.radical(), &BoundVector::ones(4), field)?;
    Ok((m, reduced))
}

/// `(S/(x1))(-e1) ⊕ S/P1 ⊕ S/P2` with `P1 = (x1,x2)`, `P2 = (x1,x3,x4)` and
/// `t = (2,1,1,1)`: equidimensional, while r* kills the first summand.
pub fn second_example(field: Field) -> Result<BoxModule, HarnessError> {
    let t = bound(&[2, 1, 1, 1]);
    let shifted = MonomialMatrix::new(
        vec![ExponentVector::unit(4, 0)],
        vec![ExponentVector::new(vec![2, 0, 0, 0])],
        DenseMatrix::identity(field, 1),
    )?;
    let first = BoxModule::from_presentation(&shifted, &t, field)?;
    let p1 = BoxModule::quotient_ring(&ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]), &t, field)?;
    let p2 = BoxModule::quotient_ring(&ideal(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]), &t, field)?;
    Ok(first.direct_sum(&p1)?.direct_sum(&p2)?)
}

/// Both worked examples with every asserted quantity.
pub fn reference_examples(field: Field) -> Result<FixtureReport, HarnessError> {
    let start = Instant::now();
    let mut report = FixtureReport::default();

    let (m, reduced) = first_example(field)?;
    let dm = m.annihilator_and_dim()?.dim;
    let dr = reduced.annihilator_and_dim()?.dim;
    report.record("example1.dim", dm == 2, format!("dim(J/I) = {dm}"));
    report.record("example1.dim_radical", dr == 1, format!("dim(sqrt J / sqrt I) = {dr}"));
    let r = m.radical_functor()?;
    let verdict = compare_graded(&r, &reduced);
    report.record("example1.r_star", verdict.is_equal(), format!("r*(J/I) vs sqrt J / sqrt I: {verdict}"));
    let dr_functor = r.annihilator_and_dim()?.dim;
    report.record("example1.dim_r_star", dr_functor == 1, format!("dim r*(J/I) = {dr_functor}"));

    let m = second_example(field)?;
    let r = m.radical_functor()?;
    let dm = m.annihilator_and_dim()?.dim;
    let dr = r.annihilator_and_dim()?.dim;
    report.record("example2.dim", dm == 3 && dr == 2, format!("dim M = {dm}, dim r*M = {dr}"));
    report.record("example2.dim_drop", dm > dr, format!("{dm} > {dr}"));
    let min_m = m.minimal_primes()?;
    let expected_min = vec![MonomialPrime::from_generators(4, &[0])];
    report.record(
        "example2.equidimensional",
        m.is_equidimensional()? && min_m == expected_min,
        format!("minimal primes of M: {}", display_primes(&min_m)),
    );
    let ass_r = sorted(r.ass_primes()?);
    let expected = sorted(vec![
        MonomialPrime::from_generators(4, &[0, 1]),
        MonomialPrime::from_generators(4, &[0, 2, 3]),
    ]);
    let heights: Vec<usize> = ass_r.iter().map(MonomialPrime::height).collect();
    report.record(
        "example2.ass_r_star",
        ass_r == expected,
        format!("Ass(r*M) = {} with heights {heights:?}", display_primes(&ass_r)),
    );
    report.record(
        "example2.not_equidimensional",
        !r.is_equidimensional()?,
        "r*M has minimal primes of different heights".to_string(),
    );

    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

pub(crate) fn display_primes(primes: &[MonomialPrime]) -> String {
    let parts: Vec<String> = primes.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Sequentially Cohen-Macaulay quotients `S/I` built from shellable complexes
/// and their polarization-style thickenings, plus two CM quotients.
pub fn seq_cm_quotients() -> Vec<(&'static str, MonomialIdeal, BoundVector)> {
    vec![
        ("x2_xy", ideal(2, &[&[2, 0], &[1, 1]]), bound(&[2, 1])),
        ("line_and_plane", ideal(4, &[&[2, 0, 0, 1], &[0, 1, 0, 1]]), bound(&[2, 1, 1, 1])),
        ("thick_point_and_line", ideal(3, &[&[2, 2, 0], &[2, 0, 1]]), bound(&[2, 2, 1])),
        ("x3_x2y", ideal(2, &[&[3, 0], &[2, 1]]), bound(&[3, 1])),
        ("hypersurface", ideal(3, &[&[1, 1, 1]]), bound(&[1, 1, 1])),
        ("complete_intersection", ideal(2, &[&[2, 0], &[0, 3]]), bound(&[2, 3])),
    ]
}

/// Each fixture must be seq-CM, and so must its image under r*.
pub fn seq_cm_fixtures(field: Field) -> Result<FixtureReport, HarnessError> {
    let start = Instant::now();
    let mut report = FixtureReport::default();
    for (name, i, t) in seq_cm_quotients() {
        let m = BoxModule::quotient_ring(&i, &t, field)?;
        let r = m.radical_functor()?;
        let cm = classify(&m)?;
        let cr = classify(&r)?;
        let cm_transfer = !cm.is_cm || (cr.is_cm && cr.dim == cm.dim);
        report.record(
            name,
            cm.is_seq_cm && cr.is_seq_cm && cm_transfer,
            format!(
                "M: seq-CM {} CM {} dim {}; r*M: seq-CM {} CM {} dim {}",
                cm.is_seq_cm, cm.is_cm, cm.dim, cr.is_seq_cm, cr.is_cm, cr.dim
            ),
        );
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// `(S/(x3))(-e3) ⊕ S/(x1,x3) ⊕ S/(x2)` with `t = (1,1,2)`: equidimensional
/// of dimension 2, and `r*M = S/(x1,x3) ⊕ S/(x2)` has the same dimension but
/// minimal primes of heights 1 and 2.
pub fn equidim_counterexample(field: Field) -> Result<BoxModule, HarnessError> {
    let t = bound(&[1, 1, 2]);
    let shifted = MonomialMatrix::new(
        vec![ExponentVector::unit(3, 2)],
        vec![ExponentVector::new(vec![0, 0, 2])],
        DenseMatrix::identity(field, 1),
    )?;
    let first = BoxModule::from_presentation(&shifted, &t, field)?;
    let line = BoxModule::quotient_ring(&ideal(3, &[&[1, 0, 0], &[0, 0, 1]]), &t, field)?;
    let plane = BoxModule::quotient_ring(&ideal(3, &[&[0, 1, 0]]), &t, field)?;
    Ok(first.direct_sum(&line)?.direct_sum(&plane)?)
}

/// `S/(x1 x2^2 x3^2, x1^2 x2^2)`: the embedded prime `(x1,x3)` of dimension 1
/// makes it not generalized CM, while `r*M = S/(x1 x2)` is a hypersurface.
pub fn gcm_converse_counterexample(field: Field) -> Result<BoxModule, HarnessError> {
    let i = ideal(3, &[&[1, 2, 2], &[2, 2, 0]]);
    Ok(BoxModule::quotient_ring(&i, &bound(&[2, 2, 2]), field)?)
}

/// The two-variable ideal pair where even `β_0` breaks the per-degree
/// inequality: `J/I = (x2^2, x1^2)/(x1^2)` with `t = (3,2)`.
pub fn betti_literal_counterexample(field: Field) -> Result<BoxModule, HarnessError> {
    let i = ideal(2, &[&[2, 0]]);
    let j = ideal(2, &[&[2, 0], &[0, 2]]);
    Ok(BoxModule::from_ideal_pair(&i, &j, &bound(&[3, 2]), field)?)
}
