use logarr::arrgmt::Arrangement;
use logarr::cycle::{
    beta_intersection, class_data, multidegree, Check, HilbertPolynomial, Status, Verifier, VerifyOptions,
};
use logarr::exactalg::{IntBiPoly, RatBiPoly, Rational};
use logarr::fixtures::builtin_matching;
use logarr::groebner::HilbertSeries;
use num_bigint::BigInt;

fn three_lines() -> Arrangement {
    Arrangement::from_int_rows("3lines", 2, &[&[1, 0], &[0, 1], &[1, -1]]).unwrap()
}

fn tame(a: &Arrangement) -> Verifier {
    Verifier::new(a, VerifyOptions { tame: true, ..VerifyOptions::default() })
}

#[test]
fn multidegree_of_a_complete_intersection() {
    // two forms of bidegree (0,1) and (1,1) in P^1 x P^2
    let one = IntBiPoly::one();
    let u = IntBiPoly::y();
    let k = &(&one - &u) * &(&one - &(&IntBiPoly::x() * &u));
    let cls = multidegree(&HilbertSeries { m: 2, n: 3, k }, 2).unwrap();
    assert_eq!(cls.display(), "h*k + k^2");
    // lower-degree parts must vanish
    assert!(multidegree(&HilbertSeries { m: 2, n: 3, k: one }, 2).is_err());
}

#[test]
fn classes_of_small_arrangements() {
    assert_eq!(class_data(&three_lines(), None).unwrap().class.display(), "h*k + k^2");
    assert!(class_data(&Arrangement::boolean(3), None).unwrap().class.is_zero());
    let pencil = Arrangement::from_int_rows("pencil", 2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]).unwrap();
    assert_eq!(class_data(&pencil, None).unwrap().class.display(), "2*h*k + k^2");
}

#[test]
fn every_check_passes_on_three_lines() {
    let v = tame(&three_lines());
    for c in Check::ALL {
        let r = v.run(c).unwrap();
        assert_eq!(r.status, Status::Pass, "{c}: {}", serde_json::to_string(&r.to_json_value(false)).unwrap());
    }
}

#[test]
fn recurrence_classes_on_three_lines() {
    let v = tame(&three_lines());
    for i in 0..3 {
        let r = v.recurrence(i).unwrap();
        assert!(r.passed());
        assert_eq!(r.witnesses["bridge"], false);
        // A' is Boolean, so [X(A')] = 0 and A'' is a point
        assert_eq!(r.witnesses["deletion_class"]["class"], "0");
        assert_eq!(r.witnesses["restriction_boolean"], true);
    }
}

#[test]
fn bridge_recurrence_and_delres() {
    let a = Arrangement::from_int_rows("bridge", 3, &[&[1, 0, 0], &[0, 1, 0], &[1, -1, 0], &[0, 0, 1]]).unwrap();
    let v = tame(&a);
    let r = v.recurrence(3).unwrap();
    assert!(r.passed() && r.witnesses["bridge"] == true);
    let s = v.delres_set(3).unwrap();
    assert!(s.passed());
    assert_eq!(s.witnesses["exact_containment"], true);
    for i in 0..3 {
        assert!(v.delres_set(i).unwrap().passed(), "hyperplane {i}");
    }
}

#[test]
fn dcplx_on_three_lines_to_bound_five() {
    let a = three_lines();
    let v = Verifier::new(&a, VerifyOptions { tame: true, dcplx_bound: 5, ..VerifyOptions::default() });
    let r = v.dcplx().unwrap();
    assert!(r.passed());
    assert_eq!(r.witnesses["table"].as_array().unwrap().len(), 21);
}

#[test]
fn beta_and_chern() {
    let v = tame(&three_lines());
    let d = v.class_data().unwrap();
    assert_eq!(beta_intersection(&d.class), BigInt::from(1));
    assert_eq!(v.essential().beta(), BigInt::from(1));
    assert!(v.beta().unwrap().passed());
    assert!(v.chern().unwrap().passed());
}

#[test]
fn monic_is_skipped_for_boolean() {
    let v = tame(&Arrangement::boolean(2));
    assert_eq!(v.monic().unwrap().status, Status::Skipped);
    assert_eq!(v.hs_leading().unwrap().status, Status::Skipped);
    assert!(v.main_theorem().unwrap().passed());
}

#[test]
fn ziegler_hilbert_polynomial_leading_part() {
    // (15 q^7 + 42 p q^6 + 21 p^2 q^5) / 7!
    let want = RatBiPoly::from_terms(
        [((0, 7), 15), ((1, 6), 42), ((2, 5), 21)].into_iter().map(|(e, c)| (e, Rational::new(c.into(), 5040.into()))),
    );
    for f in builtin_matching("ziegler") {
        let v = f.verifier();
        let d = v.class_data().unwrap();
        let hp = HilbertPolynomial::from_series(&d.series);
        assert_eq!(hp.total_degree(), Some(7), "{}", f.name());
        assert_eq!(hp.poly.homogeneous_part(7), want, "{}", f.name());
        assert!(v.hpoly().unwrap().passed(), "{}", f.name());
    }
}

#[test]
fn reports_are_deterministic() {
    let a = three_lines();
    let one = serde_json::to_string(&tame(&a).run(Check::Main).unwrap().to_json_value(false)).unwrap();
    let two = serde_json::to_string(&tame(&a).run(Check::Main).unwrap().to_json_value(false)).unwrap();
    assert_eq!(one, two);
    assert!(!one.contains("elapsed"));
}

#[test]
fn unflagged_solomon_terao_is_truncated() {
    let a = Arrangement::from_int_rows("generic4", 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
    let r = Verifier::new(&a, VerifyOptions::default()).solomon_terao().unwrap();
    assert_eq!(r.status, Status::Skipped);
    assert_eq!(r.witnesses["path"], "truncated");
    assert!(tame(&a).solomon_terao().unwrap().passed());
}
