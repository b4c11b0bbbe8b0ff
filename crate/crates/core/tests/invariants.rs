use cotan_core::charlib::{partition_count, q_partition, Engine};
use cotan_core::orbits::{dominance_leq, Partition};
use cotan_core::theorems::check_condition_b;
use cotan_core::weyl::{min_coset_reps, DEFAULT_ENUMERATION_CAP};
use cotan_core::{NodeSet, RootSystem, RootSystemSpec, RootVector, Weight, WeylElement};
use proptest::prelude::*;

const TYPES: [&str; 7] = ["A2", "A3", "B2", "C3", "B3", "G2", "F4"];

fn rs(label: &str) -> RootSystem {
    RootSystem::build(RootSystemSpec::parse(label).unwrap()).unwrap()
}

fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..12)
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-6i64..=6, rank).prop_map(Weight)
}

fn system_word_weight() -> impl Strategy<Value = (&'static str, Vec<usize>, Vec<usize>, Weight)> {
    prop::sample::select(&TYPES[..]).prop_flat_map(|t| {
        let n = rs(t).rank();
        (Just(t), word(n), word(n), weight(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dot_action_is_an_action((t, a, b, lambda) in system_word_weight()) {
        let r = rs(t);
        let x = WeylElement::from_word(&r, &a).unwrap();
        let y = WeylElement::from_word(&r, &b).unwrap();
        let xy = x.compose(&r, &y);
        prop_assert_eq!(x.dot(&y.dot(&lambda)), xy.dot(&lambda));
        prop_assert_eq!(x.act(&y.act(&lambda)), xy.act(&lambda));
        prop_assert_eq!(xy.sign(), x.sign() * y.sign());
    }

    #[test]
    fn reduced_words_and_inversions((t, a, _b, _l) in system_word_weight()) {
        let r = rs(t);
        let x = WeylElement::from_word(&r, &a).unwrap();
        prop_assert!(x.length() <= a.len());
        prop_assert_eq!(x.length() % 2, a.len() % 2);
        prop_assert_eq!(x.inversion_set(&r).len(), x.length());
        prop_assert_eq!(WeylElement::from_word(&r, x.word()).unwrap(), x.clone());
        let inv = x.inverse(&r);
        prop_assert!(x.compose(&r, &inv).is_identity());
        prop_assert_eq!(inv.length(), x.length());
    }

    #[test]
    fn bott_alternates_under_dot_reflections(
        (t, i, lambda) in prop::sample::select(&["A2", "B2", "G2"][..])
            .prop_flat_map(|t| { let n = rs(t).rank(); (Just(t), 0..n, weight(n)) })
    ) {
        let e = Engine::new(RootSystemSpec::parse(t).unwrap()).unwrap();
        let r = e.root_system();
        let s = WeylElement::from_word(r, &[i]).unwrap();
        let a = e.bott_euler(&lambda).unwrap();
        let b = e.bott_euler(&s.dot(&lambda)).unwrap();
        prop_assert_eq!(a.scaled(-1), b);
    }

    #[test]
    fn characters_are_w_invariant(
        (t, lambda) in prop::sample::select(&["A2", "B2", "G2", "A3"][..])
            .prop_flat_map(|t| { let n = rs(t).rank(); (Just(t), prop::collection::vec(0i64..=3, n).prop_map(Weight)) })
    ) {
        let e = Engine::new(RootSystemSpec::parse(t).unwrap()).unwrap();
        let r = e.root_system();
        let ch = e.weyl_character(&lambda).unwrap();
        for i in 0..r.rank() {
            for (mu, m) in ch.iter() {
                let mut v = mu.clone();
                r.reflect_weight(i, &mut v);
                prop_assert_eq!(ch.get(&v), *m);
            }
        }
        prop_assert_eq!(ch.mass() as i128, e.weyl_dim(&lambda).unwrap());
    }

    #[test]
    fn q_partition_specializes(
        (t, mu) in prop::sample::select(&["A3", "B3", "C3", "G2"][..])
            .prop_flat_map(|t| { let n = rs(t).rank(); (Just(t), prop::collection::vec(0i64..=4, n).prop_map(RootVector)) })
    ) {
        let r = rs(t);
        let roots = r.positive_roots();
        let p = q_partition(&mu, roots);
        prop_assert_eq!(p.eval_one(), partition_count(&mu, roots));
        prop_assert!(!p.has_negative_coefficient());
        if let Some(d) = p.degree() {
            prop_assert!(d as i64 <= mu.height());
        }
    }

    #[test]
    fn transpose_is_an_involution_reversing_dominance(
        (a, b) in (1usize..=10).prop_flat_map(|n| {
            let all = Partition::all(n);
            (prop::sample::select(all.clone()), prop::sample::select(all))
        })
    ) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        let forward = dominance_leq(&a, &b).unwrap();
        let backward = dominance_leq(&b.transpose(), &a.transpose()).unwrap();
        prop_assert_eq!(forward, backward);
    }
}

#[test]
fn condition_b_is_monotone_in_gamma() {
    for t in ["A2", "B2", "G2", "A3"] {
        let r = rs(t);
        let n = r.rank();
        let h = r.coxeter_number();
        for ell in [h + 1, 2 * h + 1] {
            for j in NodeSet::all_subsets(n) {
                let off: Vec<usize> = (0..n).filter(|&i| !j.contains(i)).collect();
                let gammas: Vec<Weight> = (0..3i64.pow(off.len() as u32))
                    .map(|mut code| {
                        let mut g = Weight::zero(n);
                        for &i in &off {
                            g.0[i] = code % 3;
                            code /= 3;
                        }
                        g
                    })
                    .collect();
                for w in min_coset_reps(&r, j, DEFAULT_ENUMERATION_CAP).unwrap() {
                    for g in &gammas {
                        if !check_condition_b(&r, ell, j, &w, g) {
                            continue;
                        }
                        for g2 in &gammas {
                            assert!(check_condition_b(&r, ell, j, &w, &(g + g2)), "{t} {j} {g} {g2}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn coset_representatives_factor_the_group() {
    for t in TYPES {
        let r = rs(t);
        let e = Engine::new(r.spec()).unwrap();
        for j in NodeSet::all_subsets(r.rank()) {
            let reps = min_coset_reps(&r, j, DEFAULT_ENUMERATION_CAP).unwrap();
            let levi = e.levi(j).unwrap();
            assert_eq!(reps.len() * levi.group.order(), e.group().order(), "{t} {j}");
            let n_nil = r.nilradical_roots(j).len();
            assert_eq!(reps.iter().map(|w| w.length()).max().unwrap(), n_nil);
        }
    }
}
