mod common;

use blobtensor::linalg::Matrix;
use blobtensor::specht::*;
use blobtensor::tensor::Word;
use blobtensor::weightmod::{idempotent_e, WeightLabel, WeightModule};
use blobtensor::scalar::Zero;
use blobtensor::{Cyclo3, Cyclo5, Generic, Params, Scalar};

#[test]
fn bitableau_counts_and_phi() {
    assert_eq!(standard_bitableaux(Shape::row(2, 2)).unwrap().len(), 6);
    assert_eq!(standard_bitableaux(Shape::col(3, 2)).unwrap().len(), 10);
    let map = phi_map(1, 1).unwrap();
    let got: Vec<(String, String)> = map.iter().map(|(t, w)| (t.to_string(), w.to_string())).collect();
    assert_eq!(got, [("(1|2)".to_string(), "21".to_string()), ("(2|1)".to_string(), "12".to_string())]);
    assert_eq!(phi(&special_col_tableau(1, 2)).to_string(), "221");
    for (n1, n2) in [(2, 3), (3, 3), (4, 1)] {
        let mut ws: Vec<Word> = phi_map(n1, n2).unwrap().into_iter().map(|(_, w)| w).collect();
        ws.sort();
        ws.dedup();
        assert_eq!(ws.len(), common::weight_words(n1 + n2, n1).len());
    }
}

#[test]
fn bitableau_json() {
    let t = special_col_tableau(1, 2);
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(s, r#"{"t1":[1,2],"t2":[3],"shape":"col"}"#);
    let back: Bitableau = serde_json::from_str(&s).unwrap();
    assert_eq!(back, t);
    let r = &standard_bitableaux(Shape::row(1, 1)).unwrap()[0];
    assert!(serde_json::to_string(r).unwrap().contains(r#""shape":"row""#));
}

#[test]
fn g_quadratic_on_tableaux() {
    let p = Params::<Generic>::new(0, 2).unwrap();
    for shape in [Shape::col(2, 3), Shape::row(3, 2)] {
        for g in specht_g_matrices(shape, &p).unwrap() {
            let quad = g.sub_scalar(p.q()).mul(&g.sub_scalar(&-p.q_inv().clone()));
            assert!(quad.is_zero());
        }
    }
}

#[test]
fn phi_intertwines_and_x_eigenvalues() {
    fn run<S: Scalar>(p: &Params<S>, nmax: usize) {
        for n in 1..=nmax {
            for label in WeightLabel::all(n) {
                let r = duality_report(label.n1(), label.n2(), p).unwrap();
                assert!(r.passed(), "n={n} lambda={} {:?}", label.lambda, r);
                assert!(verify_xi_row_shape(label.n1(), label.n2(), p).unwrap().passed());
            }
        }
    }
    run(&Params::<Generic>::new(0, 3).unwrap(), 5);
    run(&Params::<Cyclo5>::new(5, 2).unwrap(), 6);
}

#[test]
fn row_word_eigenvalues_by_oracle() {
    let p = Params::<Cyclo5>::new(5, 3).unwrap();
    let (n1, n2) = (2, 3);
    let n = n1 + n2;
    let w: Word = "22211".parse().unwrap();
    let idx = common::index(&w);
    for (i, xm) in common::xs(n, &p).iter().enumerate() {
        let col = xm.column(idx);
        let want = if i < n2 {
            p.lambda2().clone() * &p.q_pow(2 * i as i64)
        } else {
            p.lambda1().clone() * &p.q_pow(2 * (i - n2) as i64)
        };
        assert_eq!(col[idx], want);
        assert!(col.iter().enumerate().all(|(k, c)| k == idx || c.is_zero()));
        assert_eq!(xi_eigenvalue(i + 1, n2, &p), want);
    }
    // X2(221) = lambda2 q^2 221
    let xs = common::xs(3, &p);
    let w = common::index(&"221".parse().unwrap());
    assert_eq!(xs[1][(w, w)], p.lambda2().clone() * &p.q_pow(2));
}

#[test]
fn dualize_properties() {
    let p = Params::<Cyclo5>::new(5, 2).unwrap();
    let rep = build_s_prime(2, 2, &p).unwrap();
    let dd = dualize(&dualize(&rep));
    assert_eq!(dd.x, rep.x);
    assert_eq!(dd.g, rep.g);
    let d = dualize(&rep);
    assert!(d.verify_relations(&p).passed());
    assert!(rep.verify_relations(&p).passed());
    let mult = |x: &Matrix<_>, s| x.sub_scalar(s).kernel().len();
    assert_eq!(mult(&d.x, p.lambda1()), mult(&rep.x, p.lambda1()));
    assert_eq!(mult(&d.x, p.lambda2()), mult(&rep.x, p.lambda2()));
}

/// Dual surjectivity by an independent closure: transposed oracle matrices.
fn oracle_dual_surjective<S: Scalar>(n: usize, ones: usize, p: &Params<S>) -> bool {
    let words = common::weight_words(n, ones);
    let gens: Vec<Matrix<S>> = common::blob_gens(n, p)
        .iter()
        .map(|g| common::block(g, &words).transpose())
        .collect();
    let e = gens.last().unwrap().scale(&-p.gauss(2).try_inv().unwrap());
    common::closure_dim(words.len(), e.columns(), &gens) == words.len()
}

#[test]
fn dual_verdict_small_point() {
    let p = Params::<Cyclo3>::new(3, 2).unwrap();
    let v = dual_adjointness_check(3, 1, &p).unwrap();
    assert_eq!(v.surjective, oracle_dual_surjective(3, 2, &p));
    assert!(v.surjective && v.injective && v.n1_congruent_m);
    assert_eq!(v.matches, ResidueMatch::Congruent);
    let w = dual_adjointness_check(3, -1, &p).unwrap();
    assert!(!w.surjective && !oracle_dual_surjective(3, 1, &p));
    assert!(!w.n1_congruent_m && w.n1_congruent_neg_m);
    assert_eq!(w.matches, ResidueMatch::Congruent);
    // the printed obstruction vanishes iff n1 = m
    assert!(v.obstruction_zero && !w.obstruction_zero);
}

#[test]
fn dual_verdicts_follow_swapped_special_scalar() {
    for m in 2..5 {
        let p = Params::<Cyclo5>::new(5, m).unwrap();
        for n in 3..=6 {
            for label in WeightLabel::interior(n) {
                let v = dual_adjointness_check(n, label.lambda, &p).unwrap();
                assert!(v.routes_agree && v.swap_symmetry && v.eigen_swap);
                assert_eq!(v.surjective, !v.n1_congruent_neg_m);
                assert_eq!(v.surjective, oracle_dual_surjective(n, label.n1(), &p));
            }
        }
    }
}

#[test]
fn idempotent_is_symmetric_on_weight_spaces() {
    let p = Params::<Generic>::new(0, 2).unwrap();
    let m = WeightModule::new(5, 1, &p).unwrap();
    let e = idempotent_e(5, &p).unwrap().matrix(m.basis()).unwrap();
    assert_eq!(e.transpose(), e);
    assert_ne!(m.x().transpose(), m.x());
}
