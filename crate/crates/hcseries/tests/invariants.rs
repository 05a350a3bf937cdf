use std::sync::Arc;

use hcseries::arith::{CycNumber, Field, Ring};
use hcseries::coxeter::CoxeterDatum;
use hcseries::hecke::{HeckeAlgebra, HeckeElt};
use hcseries::simplecount::{analyze, kz_node_params, AlgebraTable, Limits};
use num_rational::BigRational;
use proptest::prelude::*;

fn cyc() -> impl Strategy<Value = CycNumber> {
    (prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]), prop::collection::vec(-3i64..=3, 1..4)).prop_map(|(n, cs)| {
        cs.iter().enumerate().fold(CycNumber::zero(), |acc, (k, &c)| acc.add(&CycNumber::zeta_pow(n, k as i64).mul(&CycNumber::from_int(c))))
    })
}

fn b3() -> Arc<HeckeAlgebra<hcseries::arith::LaurentPoly>> {
    HeckeAlgebra::generic(&Arc::new(CoxeterDatum::build("B3").unwrap())).unwrap()
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..3, 0..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.sub(&a), CycNumber::zero());
    }

    #[test]
    fn hecke_multiplication_is_associative(x in word(), y in word(), z in word()) {
        let h = b3();
        let (a, b, c) = (h.t_word(&x), h.t_word(&y), h.t_word(&z));
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left.terms(), right.terms());
    }

    #[test]
    fn quadratic_relation(x in word(), s in 0usize..3) {
        let h = b3();
        let a = h.t_word(&x);
        let ts = h.generator(s);
        let q = h.param(s).clone();
        // (T_s - 1)(T_s + q) = 0
        let f = ts.sub(&h.one()).unwrap().multiply(&ts.add(&h.scalar(q)).unwrap()).unwrap();
        prop_assert!(a.multiply(&f).unwrap().is_zero());
    }

    #[test]
    fn serialization_roundtrip(x in word(), y in word()) {
        let h = b3();
        let a = h.t_word(&x).multiply(&h.t_word(&y)).unwrap();
        let back = HeckeElt::deserialize(&h, &a.serialize()).unwrap();
        prop_assert_eq!(back.terms(), a.terms());
    }

    #[test]
    fn counts_do_not_depend_on_basis_order(num in 1i64..6, perm in Just((0..24).collect::<Vec<usize>>()).prop_shuffle()) {
        let d = Arc::new(CoxeterDatum::build("A3").unwrap());
        let c = [BigRational::new(num.into(), 6.into())];
        let alg = AlgebraTable::hecke(&d, &kz_node_params(&d, &c).unwrap(), &Limits::default()).unwrap();
        let a = analyze(&alg).unwrap();
        let b = analyze(&alg.permuted(&perm)).unwrap();
        prop_assert_eq!((a.radical_dim, a.simples), (b.radical_dim, b.simples));
    }
}
