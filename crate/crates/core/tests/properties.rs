//! Randomized invariants over partitions, cyclotomic integers and series.

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

use tcores::cyclotomic::CycInt;
use tcores::gbg;
use tcores::littlewood;
use tcores::partition::{NVector, Partition};
use tcores::qseries::QSeries;

fn arb_partition() -> impl Strategy<Value = Partition> {
    vec(1u64..30, 0..12).prop_map(Partition::from_parts)
}

fn arb_nvector(t: usize) -> impl Strategy<Value = NVector> {
    vec(-4i64..=4, t - 1).prop_map(move |mut v| {
        let last = -v.iter().sum::<i64>();
        v.push(last);
        NVector::new(v).expect("construction forces the zero sum")
    })
}

fn arb_series(order: usize) -> impl Strategy<Value = QSeries> {
    vec(-5i64..=5, order).prop_map(|cs| {
        QSeries::from_coeffs(cs.into_iter().map(BigInt::from).collect())
    })
}

proptest! {
    #[test]
    fn display_parse_round_trip(pi in arb_partition()) {
        let text = pi.to_string();
        let inner = text.trim_start_matches('(').trim_end_matches(')');
        prop_assert_eq!(Partition::parse(inner).unwrap(), pi);
    }

    #[test]
    fn conjugate_is_an_involution(pi in arb_partition()) {
        prop_assert_eq!(pi.conjugate().conjugate(), pi.clone());
        prop_assert_eq!(pi.conjugate().norm(), pi.norm());
        prop_assert_eq!(pi.conjugate().durfee(), pi.durfee());
    }

    #[test]
    fn beta_set_round_trip(pi in arb_partition(), extra in 0usize..6) {
        let m = pi.len() + extra;
        prop_assert_eq!(Partition::from_beta_set(pi.beta_set(m)), pi);
    }

    #[test]
    fn residue_counts_sum_to_norm(pi in arb_partition(), s in 2usize..7) {
        let r = pi.r_vector(s).unwrap();
        prop_assert_eq!(r.counts().iter().sum::<u64>(), pi.norm());
    }

    #[test]
    fn core_is_idempotent_and_norm_compatible(pi in arb_partition(), t in 2usize..6) {
        let core = pi.t_core_of(t);
        prop_assert!(core.is_t_core(t));
        prop_assert_eq!(core.t_core_of(t), core.clone());
        prop_assert!(core.norm() <= pi.norm());
        prop_assert_eq!((pi.norm() - core.norm()) % t as u64, 0);
    }

    #[test]
    fn vector_round_trip(n in (2usize..6).prop_flat_map(arb_nvector)) {
        let t = n.modulus();
        let core = n.to_core();
        prop_assert!(core.is_t_core(t));
        prop_assert_eq!(core.norm(), n.core_norm());
        prop_assert_eq!(core.core_to_nvec(t).unwrap(), n.clone());
    }

    #[test]
    fn quotient_round_trip(pi in arb_partition(), t in 2usize..6) {
        let d = littlewood::decompose(&pi, t).unwrap();
        prop_assert_eq!(d.norm(), pi.norm());
        prop_assert_eq!(littlewood::recompose(&d).unwrap(), pi);
    }

    #[test]
    fn rank_ignores_core_reduction(pi in arb_partition(), s in 2usize..6) {
        prop_assert!(littlewood::s_core_gbg_invariance_check(&pi, s).unwrap());
    }

    #[test]
    fn rank_additivity_and_conjugation(pi in arb_partition(), s in 2usize..6) {
        prop_assert!(gbg::diagonal_additivity_check(&pi, s).unwrap());
        let direct = gbg::gbg_direct(&pi, s).unwrap();
        let conj = gbg::gbg_direct(&pi.conjugate(), s).unwrap();
        prop_assert_eq!(conj, direct.galois(s as i64 - 1).unwrap());
    }

    #[test]
    fn cyclotomic_ring_laws(
        a in vec(-6i64..=6, 0..6),
        b in vec(-6i64..=6, 0..6),
        s in 2usize..10,
    ) {
        let x = a.iter().fold(CycInt::zero(s), |acc, &k| {
            acc.add(&CycInt::root_power(s, k)).unwrap()
        });
        let y = b.iter().fold(CycInt::zero(s), |acc, &k| {
            acc.add(&CycInt::root_power(s, k)).unwrap()
        });
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().sub(&y).unwrap(), x.clone());
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).unwrap().div_exact(&y).unwrap(), x.clone());
        }
        // galois maps compose through exponent multiplication
        let g2 = x.galois(3).and_then(|v| v.galois(5));
        if s % 3 != 0 && s % 5 != 0 {
            prop_assert_eq!(g2.unwrap(), x.galois(15).unwrap());
        }
    }

    #[test]
    fn series_ring_laws(a in arb_series(16), b in arb_series(16), c in arb_series(16)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a.neg()), QSeries::zero(16));
    }

    #[test]
    fn series_inverse(tail in vec(-5i64..=5, 15), unit in prop_oneof![Just(1i64), Just(-1)]) {
        let mut cs = vec![BigInt::from(unit)];
        cs.extend(tail.into_iter().map(BigInt::from));
        let a = QSeries::from_coeffs(cs);
        prop_assert_eq!(a.mul(&a.invert().unwrap()), QSeries::one(16));
    }
}
