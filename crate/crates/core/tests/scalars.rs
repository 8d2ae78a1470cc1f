use blobtensor::scalar::{validate_params, BlobParams, Cyclotomic, One, RationalFunction as R, Zero};
use blobtensor::{Cyclo3, Cyclo5, Cyclo7, Params, Scalar};
use proptest::prelude::*;

/// Long division of integer polynomials (ascending coefficients), exact.
fn poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    let mut quo = vec![0; r.len() + 1 - dl];
    for k in (0..quo.len()).rev() {
        let c = r[k + dl - 1] / lead;
        assert_eq!(c * lead, r[k + dl - 1]);
        quo[k] = c;
        for (j, d) in den.iter().enumerate() {
            r[k + j] -= c * d;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "division not exact");
    quo
}

#[test]
fn gauss_two_by_division() {
    // (q^2 − q^-2)/(q − q^-1) = q^-1 (q^4 − 1)/(q^2 − 1)
    let quo = poly_div(&[-1, 0, 0, 0, 1], &[-1, 0, 1]);
    let terms: Vec<(i64, i64)> = quo.iter().enumerate().map(|(k, &c)| (c, k as i64 - 1)).collect();
    let p = Params::<R>::new(0, 2).unwrap();
    assert_eq!(p.gauss(2), R::laurent(&terms));
    assert_eq!(p.gauss(2), p.q().clone() + p.q_inv());
}

#[test]
fn gauss_vanishes_at_root_order() {
    let p5 = Params::<Cyclo5>::new(5, 2).unwrap();
    assert!(p5.gauss(5).is_zero());
    assert!(!p5.gauss(4).is_zero());
    let p3 = Params::<Cyclo3>::new(3, 2).unwrap();
    assert!(p3.gauss(3).is_zero());
    let p7 = Params::<Cyclo7>::new(7, 3).unwrap();
    assert!(p7.gauss(7).is_zero() && p7.gauss(14).is_zero());
}

#[test]
fn lambda_product() {
    let p = Params::<R>::new(0, 3).unwrap();
    let d = p.q_minus_q_inv();
    assert_eq!(p.lambda1().clone() * p.lambda2(), (d.clone() * &d).try_inv().unwrap());
    assert_eq!(p.lambda1().clone() - p.lambda2(), p.gauss(3));
}

#[test]
fn parameter_validation() {
    let ok = |l, m| validate_params(&BlobParams { n: 3, l, m }).is_ok();
    assert!(ok(5, 2));
    assert!(ok(0, 2) && ok(0, -3));
    assert!(!ok(5, 0) && !ok(5, 1) && !ok(5, 6) && !ok(5, 10));
    assert!(!ok(4, 2) && !ok(2, 3) && !ok(6, 2) && !ok(1, 2));
    assert!(!ok(0, 0) && !ok(0, 1));
    let e = validate_params(&BlobParams { n: 3, l: 4, m: 2 }).unwrap_err();
    assert!(e.to_string().contains("q^4 = 1"));
    assert!(Params::<Cyclo5>::new(3, 2).is_err());
}

fn laurent() -> impl Strategy<Value = R> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..4).prop_map(|t| R::laurent(&t))
}

fn rational() -> impl Strategy<Value = R> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(a, b)| {
        let b = b + &R::one();
        if b.is_zero() {
            None
        } else {
            Some(a.try_div(&b).unwrap())
        }
    })
}

fn cyclo<const L: u32>() -> impl Strategy<Value = Cyclotomic<L>> {
    prop::collection::vec(-3i64..=3, 0..6).prop_map(|cs| {
        cs.iter()
            .enumerate()
            .fold(Cyclotomic::<L>::zero(), |acc, (k, &c)| acc + Cyclotomic::<L>::q_power(k as i64) * &Cyclotomic::<L>::from_integer(c))
    })
}

fn gauss_identities<S: Scalar>(p: &Params<S>, k: i64) {
    assert_eq!(p.gauss(k), -p.gauss(-k));
    assert_eq!(p.gauss(k + 1), p.q().clone() * &p.gauss(k) + &p.q_pow(-k));
}

proptest! {
    #[test]
    fn gauss_recursions(k in -12i64..12) {
        gauss_identities(&Params::<R>::new(0, 2).unwrap(), k);
        gauss_identities(&Params::<Cyclo5>::new(5, 3).unwrap(), k);
        gauss_identities(&Params::<Cyclo7>::new(7, 2).unwrap(), k);
    }

    #[test]
    fn lambda_ratio(m in 2i64..9) {
        let p = Params::<R>::new(0, m).unwrap();
        prop_assert_eq!(p.lambda1().try_div(p.lambda2()).unwrap(), p.q_pow(2 * m));
        if m % 7 > 1 {
            let c = Params::<Cyclo7>::new(7, m).unwrap();
            prop_assert_eq!(c.lambda1().try_div(c.lambda2()).unwrap(), c.q_pow(2 * m));
        }
    }

    #[test]
    fn rational_round_trip(a in rational()) {
        let s = a.to_string();
        let b: R = s.parse().unwrap();
        prop_assert_eq!(&b, &a);
        prop_assert_eq!(b.to_string(), s);
    }

    #[test]
    fn normalization_idempotent(a in rational(), b in rational()) {
        let prod = a.clone() * &b;
        if !b.is_zero() {
            prop_assert_eq!(prod.try_div(&b).unwrap(), a.clone());
        }
        prop_assert_eq!(a.clone() - &a, R::zero());
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
    }

    #[test]
    fn cyclotomic_round_trip(a in cyclo::<5>(), b in cyclo::<7>()) {
        prop_assert_eq!(a.to_string().parse::<Cyclotomic<5>>().unwrap(), a);
        prop_assert_eq!(b.to_string().parse::<Cyclotomic<7>>().unwrap(), b);
    }

    #[test]
    fn cyclotomic_field_inverse(a in cyclo::<5>()) {
        if !a.is_zero() {
            prop_assert_eq!(a.try_inv().unwrap() * &a, Cyclotomic::<5>::one());
        } else {
            prop_assert!(a.try_inv().is_err());
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(a in rational(), b in rational()) {
        type C = Cyclotomic<5>;
        let (sa, sb) = (C::specialize(&a), C::specialize(&b));
        if let (Ok(sa), Ok(sb)) = (sa, sb) {
            prop_assert_eq!(C::specialize(&(a.clone() + &b)).unwrap(), sa.clone() + &sb);
            prop_assert_eq!(C::specialize(&(a.clone() * &b)).unwrap(), sa * &sb);
        }
    }
}

#[test]
fn specialization_of_q() {
    let q = R::q();
    assert_eq!(Cyclotomic::<5>::specialize(&q).unwrap(), Cyclotomic::<5>::q());
    let qi5 = Cyclotomic::<5>::specialize(&R::monomial(1, 4)).unwrap();
    assert_eq!(qi5, Cyclotomic::<5>::q().try_inv().unwrap());
    // a pole at the root: 1/(q^5 − 1)
    let pole = R::one().try_div(&(R::monomial(1, 5) - &R::one())).unwrap();
    assert!(Cyclotomic::<5>::specialize(&pole).is_err());
}
