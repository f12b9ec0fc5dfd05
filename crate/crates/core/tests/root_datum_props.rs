use std::collections::BTreeSet;

use decomp_core::field::{Field, FiniteField, GaloisField, PrimeField, Rationals};
use decomp_core::root_datum::{
    build_gl, build_pgl, build_sl, center_of_levi, generic_phi, is_stabiliser_type, load_root_datum,
    phi_y, Characteristic, LeviDescriptor, RootDatum, SubspaceDescriptor,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ch(p: u64) -> Characteristic {
    Characteristic::new(p).unwrap()
}

fn datum(kind: u8, n: usize) -> RootDatum {
    match kind % 3 {
        0 => build_gl(n),
        1 => build_sl(n),
        _ => build_pgl(n),
    }
    .unwrap()
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << (n - 1)))
        .map(|mask| {
            let mut out = vec![1];
            for i in 1..n {
                if mask & (1 << (i - 1)) != 0 {
                    out.push(1);
                } else {
                    *out.last_mut().unwrap() += 1;
                }
            }
            out
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vanishing_is_scalar_invariant_mod_p(
        kind in 0u8..3,
        n in 2usize..=5,
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        coords in prop::collection::vec(-20i64..=20, 5),
        scale in 1u64..7,
    ) {
        let d = datum(kind, n);
        let f = PrimeField::new(p).unwrap();
        let y: Vec<u64> = coords[..d.rank()].iter().map(|&c| f.from_i64(c)).collect();
        let s = f.from_i64(scale as i64);
        let scaled: Vec<u64> = y.iter().map(|v| f.mul(&s, v)).collect();
        let base = phi_y(&d, ch(p), &f, &y).unwrap();
        let other = phi_y(&d, ch(p), &f, &scaled).unwrap();
        if f.is_zero(&s) {
            prop_assert_eq!(other, d.all_roots());
        } else {
            prop_assert_eq!(other, base);
        }
    }

    #[test]
    fn vanishing_is_scalar_invariant_over_q(
        kind in 0u8..3,
        n in 2usize..=5,
        coords in prop::collection::vec(-20i64..=20, 5),
        scale in -9i64..=9,
    ) {
        let d = datum(kind, n);
        let f = Rationals;
        let y: Vec<_> = coords[..d.rank()].iter().map(|&c| f.from_i64(c)).collect();
        let s = f.from_i64(scale);
        let scaled: Vec<_> = y.iter().map(|v| f.mul(&s, v)).collect();
        let base = phi_y(&d, ch(0), &f, &y).unwrap();
        let other = phi_y(&d, ch(0), &f, &scaled).unwrap();
        prop_assert!(base.is_subset(&other));
        if scale != 0 {
            prop_assert_eq!(other, base);
        }
    }

    #[test]
    fn generic_phi_is_monotone(
        kind in 0u8..3,
        n in 2usize..=5,
        p in prop::sample::select(vec![0u64, 2, 3, 5]),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..6),
        extra in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    ) {
        let d = datum(kind, n);
        let small: Vec<Vec<i64>> = picks.iter().map(|i| d.roots()[i.index(d.num_roots())].clone()).collect();
        let mut large = small.clone();
        large.extend(extra.iter().map(|i| d.roots()[i.index(d.num_roots())].clone()));
        let a = generic_phi(&d, &SubspaceDescriptor::new(d.rank(), small.clone(), ch(p)).unwrap()).unwrap();
        let b = generic_phi(&d, &SubspaceDescriptor::new(d.rank(), large, ch(p)).unwrap()).unwrap();
        // More equations cut out a smaller subspace, which kills more roots.
        prop_assert!(a.is_subset(&b));
        for eq in &small {
            prop_assert!(a.contains(&d.index_of_root(eq).unwrap()));
        }
    }

    #[test]
    fn center_of_levi_kills_its_roots(
        kind in 0u8..3,
        n in 2usize..=6,
        p in prop::sample::select(vec![0u64, 2, 3, 5]),
        mask in any::<u32>(),
    ) {
        let d = datum(kind, n);
        let comps = compositions(n);
        let blocks = &comps[mask as usize % comps.len()];
        let levi = LeviDescriptor::type_a(&d, blocks).unwrap();
        let g = generic_phi(&d, &center_of_levi(&d, ch(p), &levi)).unwrap();
        prop_assert!(levi.root_indices().is_subset(&g));
    }
}

#[test]
fn every_type_a_levi_is_stabiliser_type_in_characteristic_zero() {
    for n in 2..=6 {
        for kind in 0..3 {
            let d = datum(kind, n);
            for blocks in compositions(n) {
                let levi = LeviDescriptor::type_a(&d, &blocks).unwrap();
                assert!(is_stabiliser_type(&d, ch(0), &levi), "{} {blocks:?}", d.label());
            }
        }
    }
}

fn random_point(f: &GaloisField, basis: &[Vec<i64>], rank: usize, rng: &mut impl Rng) -> Vec<Vec<u64>> {
    let mut y = vec![f.zero(); rank];
    for b in basis {
        let c = f.from_index(rng.gen_range(0..f.order()));
        for (yi, &bi) in y.iter_mut().zip(b) {
            *yi = f.add(yi, &f.mul(&c, &f.from_i64(bi)));
        }
    }
    y
}

#[test]
fn sampled_points_of_the_centre_over_cubic_extensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [2u64, 3] {
        let f = GaloisField::new(p, 3).unwrap();
        for (kind, n) in [(0u8, 2usize), (1, 2), (2, 2), (0, 3), (1, 3), (2, 3), (1, 4)] {
            let d = datum(kind, n);
            for blocks in compositions(n) {
                let levi = LeviDescriptor::type_a(&d, &blocks).unwrap();
                let z = center_of_levi(&d, ch(p), &levi);
                let generic = generic_phi(&d, &z).unwrap();
                let basis = z.basis_mod_p();
                let mut hit: Option<BTreeSet<usize>> = None;
                for _ in 0..50 {
                    let y = random_point(&f, &basis, d.rank(), &mut rng);
                    let phi = phi_y(&d, ch(p), &f, &y).unwrap();
                    assert!(generic.is_subset(&phi), "{} {blocks:?} p={p}", d.label());
                    if phi == generic {
                        hit = Some(phi);
                    }
                }
                if is_stabiliser_type(&d, ch(p), &levi) {
                    assert!(hit.is_some(), "{} {blocks:?} p={p}: no generic sample", d.label());
                }
            }
        }
    }
}

#[test]
fn text_format_round_trips() {
    for kind in 0..3 {
        for n in 2..=5 {
            let d = datum(kind, n);
            let text = d.to_text();
            let back = load_root_datum(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(back.to_text(), text);
        }
    }
}

#[test]
fn sl2_torus_depends_on_the_characteristic() {
    let sl2 = build_sl(2).unwrap();
    let pgl2 = build_pgl(2).unwrap();
    let torus = LeviDescriptor::torus();
    assert!(!is_stabiliser_type(&sl2, ch(2), &torus));
    assert!(is_stabiliser_type(&sl2, ch(3), &torus));
    assert!(is_stabiliser_type(&pgl2, ch(2), &torus));
}
