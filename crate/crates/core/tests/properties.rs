mod common;

use hodge_core::invariants::{
    depth_stanley_reisner, is_buchsbaum_complex, is_cohen_macaulay_complex, krull_dim_stanley_reisner,
};
use hodge_core::monomial::MonomialIdeal;
use hodge_core::{Face, FieldSpec, Poset, PosetIdeal, SimplicialComplex};
use proptest::prelude::*;

const FIELDS: [FieldSpec; 2] = [FieldSpec::RATIONAL, FieldSpec::GF2];

/// A poset on `n ≤ max` elements related only along the index order.
fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut relation = vec![vec![false; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    relation[i][j] = bits[k];
                    k += 1;
                }
            }
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            Poset::from_relation(labels, relation).unwrap()
        })
    })
}

fn poset_with_ideal(max: usize) -> impl Strategy<Value = (Poset, PosetIdeal)> {
    poset(max).prop_flat_map(|p| {
        let n = p.len();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |seeds| {
            let seeds: Vec<usize> = (0..n).filter(|&i| seeds[i]).collect();
            let q = PosetIdeal::down_closure(&p, &seeds);
            (p.clone(), q)
        })
    })
}

fn complex(max_vertices: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_vertices).prop_flat_map(|n| {
        proptest::collection::vec(0u128..(1u128 << n), 1..6).prop_map(move |masks| {
            let vertices = (0..n).map(|i| format!("v{i}")).collect();
            SimplicialComplex::from_face_sets(vertices, masks.into_iter().map(Face).collect()).unwrap()
        })
    })
}

fn monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(proptest::collection::vec(0u32..4, 4), 1..5)
        .prop_filter("proper", |gens| gens.iter().all(|g| g.iter().any(|&e| e > 0)))
        .prop_map(|gens| MonomialIdeal::new(&["x", "y", "z", "w"], gens).unwrap())
}

/// Replaces each copy `x(j)` by `x` and re-minimalizes.
fn depolarize(polarized: &MonomialIdeal, original: &MonomialIdeal) -> MonomialIdeal {
    let base = original.variables();
    let gens = polarized
        .generators()
        .iter()
        .map(|g| {
            let mut m = vec![0u32; base.len()];
            for (i, &e) in g.iter().enumerate() {
                let name = &polarized.variables()[i];
                let root = name.split('(').next().unwrap();
                m[base.iter().position(|b| b == root).unwrap()] += e;
            }
            m
        })
        .collect();
    MonomialIdeal::new(base, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn euler_poincare_for_posets(p in poset(7)) {
        let delta = p.order_complex().unwrap();
        for f in FIELDS {
            prop_assert_eq!(delta.reduced_betti_numbers(f).alternating_sum(), p.reduced_euler_char());
        }
    }

    #[test]
    fn euler_poincare_for_complexes(k in complex(8)) {
        for f in FIELDS {
            prop_assert_eq!(k.reduced_betti_numbers(f).alternating_sum(), k.reduced_euler_char());
        }
    }

    #[test]
    fn opposite_is_an_involution(p in poset(7)) {
        let op = p.opposite();
        prop_assert_eq!(op.opposite(), p.clone());
        for a in 0..p.len() {
            for b in 0..p.len() {
                prop_assert_eq!(p.lt(a, b), op.lt(b, a));
            }
        }
    }

    #[test]
    fn pure_iff_order_complex_equidimensional(p in poset(7)) {
        prop_assert_eq!(p.is_pure(), p.order_complex().unwrap().is_equidimensional());
    }

    #[test]
    fn uplus_shape((p, q) in poset_with_ideal(6)) {
        let u = p.uplus(&q).unwrap();
        let n = p.len();
        prop_assert_eq!(u.len(), n + q.len());
        let originals: Vec<usize> = (0..n).collect();
        prop_assert_eq!(u.induced(&originals), p.clone());
        let starred: Vec<usize> = (n..u.len()).collect();
        let copy = u.induced(&starred);
        for (i, &x) in q.members().iter().enumerate() {
            prop_assert!(u.lt(n + i, x));
            prop_assert_eq!(copy.label(i), format!("{}*", p.label(x)));
            for (j, &y) in q.members().iter().enumerate() {
                prop_assert_eq!(copy.lt(i, j), p.lt(x, y));
            }
        }
        prop_assert_eq!(p.uplus(&PosetIdeal::empty()).unwrap(), p);
    }

    #[test]
    fn order_complex_reflects_chains(p in poset(6)) {
        let delta = p.order_complex().unwrap();
        let chains = p.chains();
        prop_assert_eq!(chains.len(), delta.all_faces().len());
        for c in chains {
            prop_assert!(delta.is_face(Face::from_indices(c)));
        }
    }

    #[test]
    fn depth_bounds_and_cm_hierarchy(k in complex(7)) {
        prop_assume!(!k.is_empty_face_only());
        for f in FIELDS {
            let depth = depth_stanley_reisner(&k, f).unwrap();
            let dim = krull_dim_stanley_reisner(&k);
            let cm = is_cohen_macaulay_complex(&k, f);
            prop_assert!(depth <= dim);
            prop_assert_eq!(depth == dim, cm);
            if cm {
                prop_assert!(is_buchsbaum_complex(&k, f));
            }
            if is_buchsbaum_complex(&k, f) {
                prop_assert!(k.is_equidimensional());
            }
        }
    }

    #[test]
    fn recursive_depth_matches_all_faces_formula(k in complex(7)) {
        prop_assume!(!k.is_empty_face_only());
        for f in FIELDS {
            prop_assert_eq!(depth_stanley_reisner(&k, f).unwrap(), common::depth_all_faces(&k, f));
        }
    }

    #[test]
    fn polarization_is_squarefree_and_reversible(i in monomial_ideal()) {
        let (pol, aux) = i.polarize().unwrap();
        prop_assert!(pol.is_squarefree());
        prop_assert_eq!(pol.variables().len(), i.variables().len() + aux);
        prop_assert_eq!(depolarize(&pol, &i), i.clone());
        let (again, extra) = pol.polarize().unwrap();
        prop_assert_eq!((again, extra), (pol.clone(), 0));
        // polarization adds exactly `aux` to the Krull dimension
        prop_assert_eq!(pol.dim_quotient().unwrap(), i.dim_quotient().unwrap() + aux);
    }

    #[test]
    fn radical_and_colon_laws(i in monomial_ideal(), j in monomial_ideal()) {
        let r = i.radical().unwrap();
        prop_assert!(i.is_subset(&r));
        prop_assert_eq!(r.radical().unwrap(), r.clone());
        prop_assert_eq!(r.dim_quotient().unwrap(), i.dim_quotient().unwrap());
        let c = i.colon(&j).unwrap();
        prop_assert!(i.is_subset(&c));
        prop_assert_eq!(i.colon(&MonomialIdeal::unit(i.variables())).unwrap(), i.clone());
        let both = i.intersection(&j).unwrap();
        prop_assert!(both.is_subset(&i) && both.is_subset(&j));
    }

    #[test]
    fn betti_numbers_match_smith_oracle(k in complex(7)) {
        for f in [FieldSpec::RATIONAL, FieldSpec::GF2, FieldSpec::prime(3).unwrap()] {
            prop_assert_eq!(k.reduced_betti_numbers(f).values().to_vec(), common::betti_via_smith(&k, f));
        }
    }
}
