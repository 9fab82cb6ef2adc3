use gca_core::algebra::{AlgebraId, Generator};
use gca_core::combinatorics::Partition;
use gca_core::realizations::{
    boson_apply, boson_bracket_check, vf_apply, vf_bracket_check, FockState, OperatorImage, SpaceTimeMonomial,
};
use gca_core::symbolic::Rational;
use num_traits::{One, Zero};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn mono(t: i64, x1: u32, x2: u32, th: u32) -> SpaceTimeMonomial {
    SpaceTimeMonomial::new(t, x1, x2, th)
}

#[test]
fn vector_field_examples() {
    let g = AlgebraId::GPlain;
    assert_eq!(vf_apply(&Generator::j(0), &mono(0, 1, 0, 0), g).unwrap(), OperatorImage::single(mono(0, 0, 1, 0), q(1)));
    assert_eq!(vf_apply(&Generator::p1(-1), &mono(0, 1, 0, 0), g).unwrap(), OperatorImage::single(mono(0, 0, 0, 0), q(-1)));
    assert_eq!(vf_apply(&Generator::l(0), &mono(1, 1, 0, 0), g).unwrap(), OperatorImage::single(mono(1, 1, 0, 0), q(-2)));
    assert!(vf_apply(&Generator::theta(0), &mono(0, 0, 0, 1), g).is_err());
}

#[test]
fn checked_vector_fields_touch_theta_only_through_p_and_theta() {
    let alg = AlgebraId::GCheck;
    let x = mono(2, 1, 1, 1);
    for g in [Generator::l(1), Generator::j(-2)] {
        let img = vf_apply(&g, &x, alg).unwrap();
        assert!(img.terms().all(|(y, _)| y.theta == 1), "{g}");
    }
    let img = vf_apply(&Generator::p1(1), &x, alg).unwrap();
    assert!(img.terms().any(|(y, _)| y.theta == 0));
    assert_eq!(vf_apply(&Generator::theta(3), &x, alg).unwrap(), OperatorImage::single(mono(5, 1, 1, 0), q(-1)));
    // the plain realization never sees theta
    let plain = vf_apply(&Generator::p1(1), &mono(0, 0, 1, 0), AlgebraId::GPlain).unwrap();
    assert!(plain.is_zero());
}

#[test]
fn vector_fields_realize_both_algebras() {
    for alg in [AlgebraId::GPlain, AlgebraId::GCheck] {
        let r = vf_bracket_check(alg, 3, 4).unwrap();
        assert!(r.passed(), "{alg}: {:?}", r.failures.first());
        assert!(r.pairs_checked > 0);
    }
}

#[test]
fn zero_mode_measures_scaling_weight() {
    let x = mono(-3, 2, 1, 0);
    let l0 = Generator::l(0);
    let once = vf_apply(&l0, &x, AlgebraId::GPlain).unwrap();
    assert_eq!(once, OperatorImage::single(x, q(3 - 3)));
}

fn vac() -> FockState {
    FockState::vacuum(Rational::zero())
}

fn apply(g: Generator, v: &OperatorImage<FockState>) -> OperatorImage<FockState> {
    let mut out = OperatorImage::zero();
    for (s, c) in v.terms() {
        out.add_scaled(&boson_apply(&g, s).unwrap(), c);
    }
    out
}

fn commutator(x: Generator, y: Generator, s: &FockState) -> OperatorImage<FockState> {
    let v = OperatorImage::single(s.clone(), Rational::one());
    let mut out = apply(x, &apply(y, &v));
    out.add_scaled(&apply(y, &apply(x, &v)), &q(-1));
    out
}

#[test]
fn boson_examples() {
    let one = FockState::new(Partition::new(vec![1]).unwrap(), Rational::zero(), 0, 0, 0);
    assert_eq!(boson_apply(&Generator::j(-1), &vac()).unwrap(), OperatorImage::single(one, q(1)));
    let s = FockState::new(Partition::empty(), Rational::zero(), 2, 0, 0);
    assert!(boson_apply(&Generator::p1(0), &s).unwrap().is_zero());
    let s = FockState::new(Partition::empty(), Rational::zero(), 2, 1, 0);
    let expect = FockState::new(Partition::empty(), Rational::zero(), 3, 0, 0);
    assert_eq!(boson_apply(&Generator::p1(0), &s).unwrap(), OperatorImage::single(expect, q(-1)));
    assert!(boson_apply(&Generator::theta(0), &vac()).is_err());
}

#[test]
fn boson_central_terms_on_vacuum() {
    // [L2, L-2] = 4 L0 + 1/2; L0 kills the a0 = 0 vacuum
    let c = commutator(Generator::l(2), Generator::l(-2), &vac());
    assert_eq!(c, OperatorImage::single(vac(), Rational::new(1.into(), 2.into())));
    assert_eq!(commutator(Generator::j(1), Generator::j(-1), &vac()), OperatorImage::single(vac(), q(1)));
    let s = FockState::new(Partition::new(vec![2, 1]).unwrap(), q(3), -1, 1, 1);
    assert!(commutator(Generator::p1(1), Generator::p2(-2), &s).is_zero());
}

#[test]
fn boson_heisenberg_relation() {
    // [a1, a-1] = 1 through J = a + (b-sector) on b-free states
    let s = FockState::new(Partition::new(vec![3, 1, 1]).unwrap(), q(2), 4, 0, 0);
    assert_eq!(commutator(Generator::j(1), Generator::j(-1), &s), OperatorImage::single(s, q(1)));
}

#[test]
fn boson_realization_with_unit_charges() {
    let r = boson_bracket_check(3, 4).unwrap();
    assert!(r.passed(), "{:?}", r.failures.first());
}

#[test]
fn boson_degree_bookkeeping() {
    // X_m lowers the a-level by m on the a-sector and shifts cbar by the explicit power
    let s = FockState::new(Partition::new(vec![2, 1]).unwrap(), Rational::zero(), 0, 1, 0);
    for m in -3i64..=3 {
        for (s2, _) in boson_apply(&Generator::j(m), &s).unwrap().terms() {
            let a_shift = s.level() as i64 - s2.level() as i64;
            let c_shift = s2.cbar - s.cbar;
            assert!(a_shift == m || c_shift == m, "J{m}: {s2}");
        }
        for (s2, _) in boson_apply(&Generator::l(m), &s).unwrap().terms() {
            let a_shift = s.level() as i64 - s2.level() as i64;
            assert!(a_shift == m || (a_shift == 0 && s2.cbar - s.cbar == m), "L{m}: {s2}");
        }
    }
}
