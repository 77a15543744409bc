mod common;

use num_bigint::BigInt;
use num_traits::Signed;
use orderpoly::ehrhart::{
    ehrhart_by_counting, ehrhart_by_hstar, ehrhart_from_hstar, ehrhart_pmn, ehrhart_qk_closed_form,
    hstar_from_ehrhart, hstar_ordinal_sum, hstar_via_linear_extensions, qk_coefficient_raw,
};
use orderpoly::exactnum::Rational;
use orderpoly::poset::{
    count_linear_extensions, enumerate_posets, ideal_lattice, linear_extensions, make_qk, Poset,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_posets_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(|k| enumerate_posets(k).unwrap()).collect()
}

#[test]
fn counting_matches_brute_force_maps() {
    for p in all_posets_up_to(4) {
        let e = ehrhart_by_counting(&p).unwrap();
        for t in 0..=4 {
            assert_eq!(e.eval(t as i64), Rational::from(common::brute_count(&p, t) as i64), "{p:?}");
        }
    }
}

#[test]
fn counting_equals_hstar_route_for_small_posets() {
    for p in all_posets_up_to(6) {
        let counted = ehrhart_by_counting(&p).unwrap();
        let via_ext = ehrhart_by_hstar(&p).unwrap();
        assert_eq!(counted.poly(), via_ext.poly(), "{p:?}");
        assert_eq!(hstar_from_ehrhart(&counted).unwrap(), hstar_via_linear_extensions(&p).unwrap());
    }
}

#[test]
fn leading_coefficient_is_normalized_volume() {
    for p in all_posets_up_to(6) {
        let e = ehrhart_by_counting(&p).unwrap();
        let ext = linear_extensions(&p).unwrap().count() as i64;
        let n = p.len();
        let expect = Rational::new(ext, common::factorial(n as u64)).unwrap();
        assert_eq!(e.coeff(n), expect, "{p:?}");
        assert_eq!(BigInt::from(count_linear_extensions(&p).unwrap()), BigInt::from(ext));
        assert_eq!(e.eval(1), Rational::from(ideal_lattice(&p).unwrap().len() as i64));
    }
}

#[test]
fn h_star_invariants_hold() {
    for p in all_posets_up_to(6) {
        let h = hstar_via_linear_extensions(&p).unwrap();
        assert_eq!(h.entries()[0], BigInt::from(1));
        assert!(h.entries().iter().all(|v| !v.is_negative()));
        assert_eq!(h.sum(), BigInt::from(linear_extensions(&p).unwrap().count()));
        assert_eq!(h.dim(), p.len());
    }
}

#[test]
fn h_star_round_trip_on_random_posets() {
    let pool = all_posets_up_to(5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in pool.choose_multiple(&mut rng, 50) {
        let e = ehrhart_by_counting(p).unwrap();
        let back = ehrhart_from_hstar(&hstar_from_ehrhart(&e).unwrap()).unwrap();
        assert_eq!(back.poly(), e.poly());
    }
}

#[test]
fn ordinal_sum_multiplies_h_star() {
    let pool = all_posets_up_to(4);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let p = pool.choose(&mut rng).unwrap();
        let q = pool.choose(&mut rng).unwrap();
        let sum = p.ordinal_sum(q);
        let direct = hstar_from_ehrhart(&ehrhart_by_counting(&sum).unwrap()).unwrap();
        let parts = hstar_ordinal_sum(
            &hstar_from_ehrhart(&ehrhart_by_counting(p).unwrap()).unwrap(),
            &hstar_from_ehrhart(&ehrhart_by_counting(q).unwrap()).unwrap(),
        );
        assert_eq!(direct, parts, "{p:?} + {q:?}");
    }
}

#[test]
fn qk_three_ways() {
    for k in 0..=10 {
        let closed = ehrhart_qk_closed_form(k);
        let counted = ehrhart_by_counting(&make_qk(k)).unwrap();
        let product = ehrhart_pmn(k.max(1), 1).unwrap();
        assert_eq!(closed.poly(), counted.poly(), "k={k}");
        if k >= 1 {
            assert_eq!(closed.poly(), product.poly(), "k={k}");
        }
        for j in 1..=k + 1 {
            assert_eq!(qk_coefficient_raw(k, j).unwrap(), closed.coeff(j));
        }
    }
}

#[test]
fn ehrhart_values_are_positive_integers() {
    for p in all_posets_up_to(5) {
        let e = ehrhart_by_counting(&p).unwrap();
        for t in 0..=8 {
            let v = e.eval(t);
            assert!(v.is_integer() && v.is_positive());
        }
    }
    let e = ehrhart_pmn(8, 9).unwrap();
    for t in 0..=5 {
        let v = e.eval(t);
        assert!(v.is_integer() && !v.is_zero() && v.is_positive());
    }
}
