use proptest::prelude::*;

use posdet::boxmod::{compare_graded, BoxModule};
use posdet::format::parse_document;
use posdet::harness::{random_instance, InstanceKind, InstanceSpec};
use posdet::homological::{betti_table, taylor_oracle};
use posdet::ideal::MonomialIdeal;
use posdet::lattice::{map_p, map_r, map_s, map_sqrt, BoundVector, ExponentVector, Window};
use posdet::linalg::{DenseMatrix, Field};

const Q: Field = Field::Rationals;

fn bound_strategy(max_n: usize, max_t: i64) -> impl Strategy<Value = BoundVector> {
    prop::collection::vec(1..=max_t, 1..=max_n).prop_map(|t| BoundVector::new(ExponentVector::new(t)).unwrap())
}

/// A bound together with two comparable points `a <= b` in `[0, t + 1]`.
fn chain_strategy() -> impl Strategy<Value = (BoundVector, ExponentVector, ExponentVector)> {
    bound_strategy(4, 3).prop_flat_map(|t| {
        let n = t.len();
        let hi: Vec<i64> = t.as_vector().entries().iter().map(|x| x + 1).collect();
        let a = hi.iter().map(|&h| 0..=h).collect::<Vec<_>>();
        let step = prop::collection::vec(0..=2i64, n);
        (Just(t), a, step)
    })
    .prop_map(|(t, a, step)| {
        let b: Vec<i64> = a.iter().zip(&step).map(|(x, s)| x + s).collect();
        (t, ExponentVector::new(a), ExponentVector::new(b))
    })
}

fn spec_strategy() -> impl Strategy<Value = InstanceSpec> {
    (bound_strategy(3, 3), 0..4usize, 1..=5usize, any::<u64>()).prop_map(|(bound, k, max_generators, seed)| {
        InstanceSpec {
            kind: InstanceKind::ALL[k],
            bound,
            max_generators,
            seed,
        }
    })
}

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1..=3usize).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0..=3i64, n), 1..=5).prop_map(move |gens| {
            MonomialIdeal::minimalize(n, gens.into_iter().map(ExponentVector::new).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn degree_maps_preserve_order((t, a, b) in chain_strategy()) {
        prop_assert!(map_r(&a, &t).unwrap().le_unchecked(&map_r(&b, &t).unwrap()));
        prop_assert!(map_sqrt(&a).unwrap().le_unchecked(&map_sqrt(&b).unwrap()));
        prop_assert!(map_s(&a, &t).unwrap().le_unchecked(&map_s(&b, &t).unwrap()));
        prop_assert!(map_p(&a, &t).unwrap().le_unchecked(&map_p(&b, &t).unwrap()));
        let top = &(&a + t.as_vector()) - &ExponentVector::one(t.len());
        prop_assert!(map_s(&a, &t).unwrap().le_unchecked(&top));
    }

    #[test]
    fn r_factors_through_sqrt((t, a, _b) in chain_strategy()) {
        let via = map_sqrt(&a).unwrap().hadamard(t.as_vector());
        prop_assert_eq!(map_r(&a, &t).unwrap(), via);
    }

    #[test]
    fn radical_is_idempotent_and_agrees_degreewise(i in ideal_strategy()) {
        let r = i.radical();
        prop_assert!(r.is_squarefree());
        prop_assert_eq!(r.radical(), r.clone());
        let t = if i.is_unit() { BoundVector::ones(i.arity()) } else { i.tight_bound() };
        prop_assert_eq!(i.radical_degreewise(&t).unwrap(), r.clone());
        for g in i.generators() {
            prop_assert!(r.contains(g).unwrap());
        }
    }

    #[test]
    fn generator_is_deterministic(spec in spec_strategy()) {
        let a = random_instance(&spec).unwrap();
        let b = random_instance(&spec).unwrap();
        prop_assert_eq!(a.text(), b.text());
        let m = a.module(Q).unwrap();
        prop_assert_eq!(m, b.module(Q).unwrap());
    }

    #[test]
    fn instance_text_round_trips(spec in spec_strategy()) {
        let inst = random_instance(&spec).unwrap();
        let doc = parse_document(&inst.text()).unwrap();
        prop_assert_eq!(doc.to_text(), inst.text());
        prop_assert_eq!(doc.module(Q).unwrap(), inst.module(Q).unwrap());
    }

    #[test]
    fn ideal_pairs_are_nested(spec in spec_strategy()) {
        let spec = InstanceSpec { kind: InstanceKind::IdealPair, ..spec };
        let inst = random_instance(&spec).unwrap();
        let (i, j) = (inst.ideal("I").unwrap(), inst.ideal("J").unwrap());
        prop_assert!(j.contains_ideal(i));
    }

    #[test]
    fn modules_commute_and_alexander_dual_is_an_involution(spec in spec_strategy()) {
        let m = random_instance(&spec).unwrap().module(Q).unwrap();
        m.verify_commutativity().unwrap();
        let d = m.alexander_dual().unwrap();
        d.verify_commutativity().unwrap();
        prop_assert!(compare_graded(&d.alexander_dual().unwrap(), &m).is_equal());
    }

    #[test]
    fn radical_functor_lands_in_squarefree_modules(spec in spec_strategy()) {
        let m = random_instance(&spec).unwrap().module(Q).unwrap();
        let r = m.radical_functor().unwrap();
        prop_assert!(r.bound().unwrap().is_ones());
        prop_assert_eq!(r.radical_functor().unwrap(), r.clone());
        prop_assert_eq!(r.is_zero(), m.radical_vanishes().unwrap());
    }

    #[test]
    fn koszul_matches_taylor(i in ideal_strategy()) {
        let t = if i.is_unit() { BoundVector::ones(i.arity()) } else { i.tight_bound() };
        let m = BoxModule::quotient_ring(&i, &t, Q).unwrap();
        prop_assert_eq!(betti_table(&m).unwrap(), taylor_oracle(&i, Q).unwrap());
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3..=3i64, 4), 0..5)) {
        let a = DenseMatrix::from_ints(Q, 4, &rows);
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.dim(), a.cols());
        for v in kernel.vectors() {
            prop_assert!(a.apply(&v).iter().all(|x| x.is_zero()));
        }
    }
}

#[test]
fn thousand_seeds_give_determined_ideals() {
    let t = BoundVector::new(ExponentVector::new(vec![2, 2, 2])).unwrap();
    for seed in 0..1000 {
        let spec = InstanceSpec {
            kind: InstanceKind::Ideal,
            bound: t.clone(),
            max_generators: 6,
            seed,
        };
        let inst = random_instance(&spec).unwrap();
        assert!(inst.ideal("I").unwrap().is_t_determined(&t), "seed {seed}");
    }
}

#[test]
fn presentation_shifts_stay_in_the_box() {
    let t = BoundVector::new(ExponentVector::new(vec![3, 2, 1])).unwrap();
    let window = Window::bounded(&t);
    for seed in 0..200 {
        let spec = InstanceSpec {
            kind: InstanceKind::Presentation,
            bound: t.clone(),
            max_generators: 4,
            seed,
        };
        let text = random_instance(&spec).unwrap().text();
        let m = parse_document(&text).unwrap().module(Q).unwrap();
        assert_eq!(m.window(), &window);
    }
}
