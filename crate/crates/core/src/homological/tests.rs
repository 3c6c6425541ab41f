use super::*;
use crate::boxmod::{compare_graded, BoxModule};
use crate::ideal::MonomialIdeal;
use crate::lattice::{BoundVector, ExponentVector, Window};
use crate::linalg::Field;

const Q: Field = Field::Rationals;

fn ev<const N: usize>(a: [i64; N]) -> ExponentVector {
    ExponentVector::from(a)
}

fn bound<const N: usize>(a: [i64; N]) -> BoundVector {
    BoundVector::new(ev(a)).unwrap()
}

fn ideal(n: usize, gens: &[&[i64]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(n, gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect()).unwrap()
}

fn x2_xy_ideal() -> MonomialIdeal {
    ideal(2, &[&[2, 0], &[1, 1]])
}

fn x2_xy() -> BoxModule {
    BoxModule::quotient_ring(&x2_xy_ideal(), &bound([2, 1]), Q).unwrap()
}

fn table(entries: &[(usize, ExponentVector, usize)]) -> BettiTable {
    let mut t = BettiTable::new();
    for (i, a, m) in entries {
        t.add(*i, a.clone(), *m);
    }
    t
}

#[test]
fn betti_of_free_module() {
    let s = BoxModule::free_box(&[ev([0, 0])], &bound([2, 2]), Q).unwrap();
    assert_eq!(betti_table(&s).unwrap(), table(&[(0, ev([0, 0]), 1)]));
}

#[test]
fn betti_of_two_generator_quotient() {
    let expected = table(&[
        (0, ev([0, 0]), 1),
        (1, ev([2, 0]), 1),
        (1, ev([1, 1]), 1),
        (2, ev([2, 1]), 1),
    ]);
    assert_eq!(betti_table(&x2_xy()).unwrap(), expected);
    assert_eq!(taylor_oracle(&x2_xy_ideal(), Q).unwrap(), expected);
}

#[test]
fn betti_of_radical_quotient() {
    let r = x2_xy().radical_functor().unwrap();
    let b = betti_table(&r).unwrap();
    assert_eq!(b, table(&[(0, ev([0, 0]), 1), (1, ev([1, 0]), 1)]));
    let m = betti_table(&x2_xy()).unwrap();
    assert!(m.get(2, &ev([2, 1])) >= b.get(2, &ev([1, 1])));
    assert!(m.get(1, &ev([2, 0])) >= b.get(1, &ev([1, 0])));
}

#[test]
fn taylor_single_variable() {
    let t = taylor_oracle(&ideal(1, &[&[1]]), Q).unwrap();
    assert_eq!(t, table(&[(0, ev([0]), 1), (1, ev([1]), 1)]));
}

#[test]
fn triangle_routes_agree() {
    let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    let taylor = taylor_oracle(&i, Q).unwrap();
    let koszul = betti_table(&BoxModule::quotient_ring(&i, &BoundVector::ones(3), Q).unwrap()).unwrap();
    assert_eq!(taylor, koszul);
    assert_eq!(koszul.get(2, &ev([1, 1, 1])), 2);
    assert_eq!(koszul.row(1).len(), 3);
}

#[test]
fn taylor_cap_is_enforced() {
    let gens: Vec<ExponentVector> = (0..13).map(|k| ev([k, 12 - k])).collect();
    let big = MonomialIdeal::minimalize(2, gens).unwrap();
    assert!(matches!(
        taylor_oracle(&big, Q),
        Err(HomologicalError::TooManyGenerators { .. })
    ));
}

#[test]
fn unit_and_zero_ideals() {
    assert!(taylor_oracle(&MonomialIdeal::unit(2), Q).unwrap().is_empty());
    assert_eq!(
        taylor_oracle(&MonomialIdeal::zero(2), Q).unwrap(),
        table(&[(0, ev([0, 0]), 1)])
    );
}

#[test]
fn resolution_of_free_module_has_length_zero() {
    let s = BoxModule::free_box(&[ev([1, 0]), ev([0, 1])], &bound([1, 1]), Q).unwrap();
    let res = minimal_resolution(&s).unwrap();
    assert_eq!(res.length(), Some(0));
    assert!(res.maps().is_empty());
}

#[test]
fn resolution_of_two_generator_quotient() {
    let m = x2_xy();
    let res = minimal_resolution(&m).unwrap();
    assert!(res.is_minimal());
    assert_eq!(res.shift_table(), betti_table(&m).unwrap());
    assert_eq!(res.length(), Some(2));
    res.check_exact_on(&Window::bounded(&bound([2, 1]))).unwrap();
    assert!(compare_graded(&res.presented_module(&bound([2, 1])).unwrap(), &m).is_equal());
}

#[test]
fn radicalized_resolution_is_exact_and_not_minimal() {
    let m = x2_xy();
    let rad = minimal_resolution(&m).unwrap().radicalize().unwrap();
    assert_eq!(rad.shifts(0), &[ev([0, 0])]);
    let mut level1 = rad.shifts(1).to_vec();
    level1.sort();
    assert_eq!(level1, vec![ev([1, 0]), ev([1, 1])]);
    assert_eq!(rad.shifts(2), &[ev([1, 1])]);
    assert!(!rad.is_minimal());
    rad.check_exact_on(&Window::unit_cube(2)).unwrap();
    let r = m.radical_functor().unwrap();
    assert!(compare_graded(&rad.presented_module(&BoundVector::ones(2)).unwrap(), &r).is_equal());
    assert_eq!(rad.tor_table().unwrap(), betti_table(&r).unwrap());
}

#[test]
fn squarefree_resolution_is_unchanged_by_radicalizing() {
    let m = BoxModule::quotient_ring(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), &BoundVector::ones(3), Q).unwrap();
    let res = minimal_resolution(&m).unwrap();
    assert_eq!(res.radicalize().unwrap(), res);
}

#[test]
fn ext_of_free_module_vanishes_in_positive_degrees() {
    let s = BoxModule::free_box(&[ev([0, 1])], &bound([1, 2]), Q).unwrap();
    for p in 1..=2 {
        assert!(ext_box(&s, p).unwrap().is_zero());
        let sides = ext_window_b(&s, p).unwrap();
        assert!(sides.left.is_zero() && sides.right.is_zero());
    }
}

#[test]
fn ext_of_one_variable_quotient() {
    let m = BoxModule::quotient_ring(&ideal(1, &[&[1]]), &bound([1]), Q).unwrap();
    let e = ext_box(&m, 1).unwrap();
    assert_eq!(e.dim_at(&ev([0])), 1);
    assert_eq!(e.dim_at(&ev([1])), 0);
    assert!(ext_box(&m, 0).unwrap().is_zero());
}

#[test]
fn ext_zero_of_ring_is_canonical_profile() {
    let s = BoxModule::free_box(&[ev([0, 0])], &bound([2, 1]), Q).unwrap();
    let sides = ext_window_b(&s, 0).unwrap();
    let omega = BoxModule::free_box(&[ev([1, 1])], &BoundVector::ones(2), Q).unwrap();
    assert!(compare_graded(&sides.left, &omega).is_equal());
    assert!(compare_graded(&sides.right, &omega).is_equal());
}

#[test]
fn ext_sides_agree_on_two_generator_quotient() {
    let m = x2_xy();
    for p in 0..=2 {
        let a = ext_window_a(&m, p).unwrap();
        assert!(compare_graded(&a.left, &a.right).is_equal(), "ext(a) at p = {p}");
        let b = ext_window_b(&m, p).unwrap();
        assert!(compare_graded(&b.left, &b.right).is_equal(), "ext(b) at p = {p}");
    }
}

#[test]
fn classify_free_and_quotients() {
    let s = BoxModule::free_box(&[ev([0, 0, 0])], &bound([1, 1, 1]), Q).unwrap();
    let c = classify(&s).unwrap();
    assert_eq!((c.depth, c.dim, c.projdim), (3, 3, 0));
    assert!(c.is_cm && c.is_seq_cm && c.is_gen_cm);

    let m = classify(&x2_xy()).unwrap();
    assert_eq!((m.depth, m.dim), (0, 1));
    assert!(!m.is_cm);
    assert!(m.is_seq_cm);
    let r = classify(&x2_xy().radical_functor().unwrap()).unwrap();
    assert_eq!((r.depth, r.dim), (1, 1));
    assert!(r.is_cm);
    assert!(m.depth <= r.depth);
}

#[test]
fn classify_rejects_zero_module() {
    let z = BoxModule::zero(Q, Window::unit_cube(2), true);
    assert_eq!(classify(&z), Err(HomologicalError::ZeroModule));
}

#[test]
fn non_seq_cm_example() {
    // two skew lines: (x,y) ∩ (z,w) has depth 1, dimension 2
    let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
    let c = classify(&BoxModule::quotient_ring(&i, &BoundVector::ones(4), Q).unwrap()).unwrap();
    assert_eq!((c.depth, c.dim), (1, 2));
    assert!(!c.is_cm && !c.is_seq_cm && c.is_gen_cm);
}

#[test]
fn betti_display_lines() {
    let s = format!("{}", betti_table(&x2_xy()).unwrap());
    assert_eq!(s, "0  (0,0)  1\n1  (1,1)  1\n1  (2,0)  1\n2  (2,1)  1\n");
}

#[test]
fn prime_field_agrees_on_small_example() {
    let f = Field::prime(7).unwrap();
    let m = BoxModule::quotient_ring(&x2_xy_ideal(), &bound([2, 1]), f).unwrap();
    assert_eq!(betti_table(&m).unwrap(), taylor_oracle(&x2_xy_ideal(), f).unwrap());
}
