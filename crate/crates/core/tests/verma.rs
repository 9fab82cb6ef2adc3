mod oracle;

use gca_core::algebra::{Family, Generator};
use gca_core::combinatorics::{partitions_of, split_count, Partition};
use gca_core::symbolic::{det_exact, det_rational, MultiPoly, PolyMatrix, Rational, Var};
use gca_core::verma::*;
use num_traits::Signed;
use oracle::Oracle;

fn v(x: Var) -> MultiPoly {
    MultiPoly::var(x)
}

fn int(n: i64) -> MultiPoly {
    MultiPoly::from_int(n)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn rho_sq() -> MultiPoly {
    &(&v(Var::Rho1) * &v(Var::Rho1)) + &(&v(Var::Rho2) * &v(Var::Rho2))
}

fn state(a: &[u32], b: &[u32], c: &[u32], d: &[u32]) -> StateVector {
    StateVector::basis(BasisVector::new(part(a), part(b), part(c), part(d)))
}

#[test]
fn engine_matches_oracle_up_to_level_two() {
    let m = VermaModule::symbolic();
    let oracle = Oracle::symbolic();
    for n in 0..=2 {
        let basis = enumerate_basis(n, BasisOrder::Horizontal);
        for x in &basis {
            for y in &basis {
                assert_eq!(m.pairing(x, y), oracle.pairing(&x.word(), &y.word()), "<{x}|{y}>");
            }
        }
    }
}

#[test]
fn engine_matches_oracle_under_another_zero_mode_order() {
    let order = [Family::P2, Family::P1, Family::J, Family::L];
    let m = VermaModule::symbolic().with_convention(ZeroModeConvention::Ordered(order));
    let oracle = Oracle { values: Default::default(), order };
    for n in 1..=2 {
        let basis = enumerate_basis(n, BasisOrder::Horizontal);
        for x in &basis {
            for y in &basis {
                assert_eq!(m.pairing(x, y), oracle.pairing(&x.word(), &y.word()), "<{x}|{y}>");
            }
        }
    }
}

#[test]
fn engine_matches_oracle_on_level_three_sample() {
    let m = VermaModule::symbolic();
    let oracle = Oracle::symbolic();
    let basis = enumerate_basis(3, BasisOrder::Horizontal);
    for (i, x) in basis.iter().enumerate().step_by(3) {
        for y in basis.iter().skip(i % 5).step_by(5) {
            assert_eq!(m.pairing(x, y), oracle.pairing(&x.word(), &y.word()), "<{x}|{y}>");
        }
    }
}

#[test]
fn act_examples() {
    let m = VermaModule::symbolic();
    let out = m.act(&Generator::l(1), &state(&[1], &[], &[], &[])).unwrap();
    assert_eq!(out, StateVector::from_terms(0, [(BasisVector::vacuum(), int(2) * v(Var::H))]).unwrap());

    let out = m.act(&Generator::j(1), &state(&[], &[], &[1], &[])).unwrap();
    assert_eq!(out.coefficient(&BasisVector::vacuum()), v(Var::Rho2));

    let out = m.act(&Generator::p1(2), &state(&[1, 1], &[], &[], &[])).unwrap();
    let expected = Oracle::symbolic().vev(&[Generator::p1(2), Generator::l(-1), Generator::l(-1)]);
    assert_eq!(out.coefficient(&BasisVector::vacuum()), expected);
    assert_eq!(expected, int(6) * v(Var::Rho1));
}

#[test]
fn act_normal_orders_negative_modes() {
    let m = VermaModule::symbolic();
    // L_{-1} J_{-1}|0> is already ordered; J_{-1} L_{-1}|0> = L_{-1}J_{-1}|0> - J_{-2}|0>
    let out = m.act(&Generator::j(-1), &state(&[1], &[], &[], &[])).unwrap();
    assert_eq!(out.coefficient(&BasisVector::new(part(&[1]), part(&[1]), part(&[]), part(&[]))), int(1));
    assert_eq!(out.coefficient(&BasisVector::new(part(&[]), part(&[2]), part(&[]), part(&[]))), int(-1));
    assert!(m.act(&Generator::theta(0), &StateVector::vacuum()).is_err());
    assert!(m.act(&Generator::l(3), &state(&[1], &[], &[], &[])).unwrap().is_zero());
}

#[test]
fn level_one_gram_entries() {
    let m = VermaModule::symbolic();
    let g = m.gram_matrix(1, BasisOrder::Horizontal);
    let (r1, r2) = (v(Var::Rho1), v(Var::Rho2));
    // rows/cols P1, P2, L, J
    let expected = PolyMatrix::from_rows(vec![
        vec![int(0), int(0), int(2) * r1.clone(), -r2.clone()],
        vec![int(0), int(0), int(2) * r2.clone(), r1.clone()],
        vec![int(2) * r1.clone(), int(2) * r2.clone(), int(2) * v(Var::H), v(Var::Mu)],
        vec![r2, -r1, v(Var::Mu), v(Var::Beta)],
    ])
    .unwrap();
    assert_eq!(g, expected);
}

#[test]
fn pairing_is_not_symmetric_on_j_p_entries() {
    // omega(X_m) = X_{-m} reverses every bracket except [J, P^i], so the form
    // picks up a sign exactly on the J/P sector.
    let m = VermaModule::symbolic();
    let g = m.gram_matrix(1, BasisOrder::Horizontal);
    for i in 0..4 {
        for j in 0..4 {
            let jp = matches!((i, j), (0 | 1, 3) | (3, 0 | 1));
            if jp {
                assert_eq!(g[(i, j)], -g[(j, i)].clone());
            } else {
                assert_eq!(g[(i, j)], g[(j, i)]);
            }
        }
    }
    assert!(!m.gram_matrix(2, BasisOrder::Horizontal).is_symmetric());
}

#[test]
fn level_zero_gram_is_one() {
    let m = VermaModule::symbolic();
    for order in [BasisOrder::Horizontal, BasisOrder::Vertical] {
        assert_eq!(m.gram_matrix(0, order), PolyMatrix::identity(1));
    }
}

#[test]
fn different_levels_are_orthogonal() {
    let m = VermaModule::symbolic();
    assert!(m.inner_product(&state(&[1], &[], &[], &[]), &state(&[2], &[], &[], &[])).is_zero());
}

#[test]
fn inner_product_is_bilinear() {
    let m = VermaModule::symbolic();
    let x = StateVector::from_terms(
        1,
        [(BasisVector::new(part(&[1]), part(&[]), part(&[]), part(&[])), int(3)), (BasisVector::new(part(&[]), part(&[1]), part(&[]), part(&[])), v(Var::H))],
    )
    .unwrap();
    let y = state(&[], &[], &[], &[1]);
    let expected = &(int(3) * (int(2) * v(Var::Rho2))) + &(&v(Var::H) * &(-v(Var::Rho1)));
    assert_eq!(m.inner_product(&x, &y), expected);
}

#[test]
fn echelon_structure_levels_one_to_three() {
    let m = VermaModule::symbolic();
    for (n, blocks) in [(1, 2), (2, 5), (3, 10)] {
        let r = m.echelon_check(n);
        assert_eq!(r.blocks, blocks);
        assert!(r.passed(), "level {n}: {:?}", r.violations);
        assert!(r.entries_checked > 0);
    }
}

#[test]
fn mixed_matrix_has_nonzero_diagonal_blocks() {
    let m = VermaModule::symbolic();
    let layout = LevelLayout::new(2, BasisOrder::Horizontal);
    let mixed = m.gram_matrix(2, BasisOrder::Vertical);
    for (_, r) in &layout.blocks {
        let idx: Vec<usize> = r.clone().collect();
        assert!(!det_exact(&mixed.submatrix(&idx, &idx)).unwrap().is_zero());
    }
}

#[test]
fn vanishing_and_factorization_lemmas() {
    let m = VermaModule::symbolic();
    for n in 1..=3 {
        assert!(m.vanishing_check(n).is_empty(), "level {n}");
        assert!(m.factorization_check(n).is_empty(), "level {n}");
    }
}

#[test]
fn single_part_block_matrix() {
    let m = VermaModule::symbolic();
    let (r1, r2) = (v(Var::Rho1), v(Var::Rho2));
    for a in 1..=4i64 {
        let got = m.lj_matrix(&part(&[a as u32]));
        let expected = PolyMatrix::from_rows(vec![
            vec![r2.clone(), -r1.clone()],
            vec![int(2 * a) * r1.clone(), int(2 * a) * r2.clone()],
        ])
        .unwrap();
        assert_eq!(got, expected);
        assert_eq!(det_exact(&got).unwrap(), int(2 * a) * rho_sq());
    }
    assert_eq!(m.lj_matrix(&Partition::empty()), PolyMatrix::identity(1));
    assert_eq!(m.p_matrix(&Partition::empty()), PolyMatrix::identity(1));
}

#[test]
fn repeated_part_block_exponent() {
    let m = VermaModule::symbolic();
    let d = det_exact(&m.lj_matrix(&part(&[1, 1]))).unwrap();
    let c = d.try_div(&rho_sq().pow(3)).unwrap();
    assert!(c.is_constant() && !c.is_zero());
}

#[test]
fn block_constants_up_to_degree_four() {
    let m = VermaModule::symbolic();
    let table = m.lambda_table(4).unwrap();
    assert_eq!(table.len(), 1 + 2 + 3 + 5);
    for e in &table {
        assert_eq!(e.exponent as usize, split_count(&e.partition) * e.partition.len() / 2);
        assert_eq!(e.lambda.abs(), e.lambda_tilde.abs());
    }
}

#[test]
fn brute_and_block_determinants_agree() {
    let m = VermaModule::symbolic();
    for n in 1..=2 {
        let brute = m.kac_det(n, KacMethod::Brute, 0, 0).unwrap();
        let blocks = m.kac_det(n, KacMethod::Blocks, 0, 0).unwrap();
        let formula = m.kac_det(n, KacMethod::Formula, 0, 0).unwrap();
        assert_eq!(brute.power, kac_power_formula(n));
        assert_eq!((brute.power, &brute.coefficient), (blocks.power, &blocks.coefficient));
        assert_eq!((formula.power, &formula.coefficient), (blocks.power, &blocks.coefficient));
    }
    let sampled = m.kac_det(3, KacMethod::Sampled, 10, 7).unwrap();
    let blocks = m.kac_det(3, KacMethod::Blocks, 0, 0).unwrap();
    assert_eq!((sampled.power, &sampled.coefficient), (blocks.power, &blocks.coefficient));
}

#[test]
fn level_one_constant_is_four() {
    let m = VermaModule::symbolic();
    let det = m.gram_determinant(1).unwrap();
    assert_eq!(det, -(int(4) * rho_sq().pow(2)));
}

#[test]
fn gram_determinant_ignores_central_charges_and_zero_mode_labels() {
    let m = VermaModule::symbolic();
    for n in 1..=2 {
        assert!(m.gram_determinant(n).unwrap().uses_only(&[Var::Rho1, Var::Rho2]));
    }
}

#[test]
fn mixed_and_horizontal_determinants_differ_by_sign() {
    let m = VermaModule::symbolic();
    for n in 1..=2 {
        let h = det_exact(&m.gram_matrix(n, BasisOrder::Horizontal)).unwrap();
        let v = det_exact(&m.gram_matrix(n, BasisOrder::Vertical)).unwrap();
        assert!(h == v || h == -v);
    }
}

#[test]
fn sampled_determinants_are_reproducible() {
    let m = VermaModule::symbolic();
    let a = m.sampled_determinants(2, 3, 42);
    let b = m.sampled_determinants(2, 3, 42);
    assert_eq!(a, b);
    let gram = m.gram_matrix(2, BasisOrder::Horizontal);
    for (point, det) in a {
        assert_eq!(det_rational(&gram.eval(&point)).unwrap(), det);
    }
}

#[test]
fn partially_numeric_weight() {
    let hw = HighestWeight::symbolic().with(Var::Rho1, q(1)).with(Var::Rho2, q(2));
    let m = VermaModule::new(hw);
    let r = m.kac_det(2, KacMethod::Brute, 0, 0).unwrap();
    assert_eq!(r.coefficient, q(262144));
    assert_eq!(r.power, 12);
    let det = m.gram_determinant(2).unwrap().as_constant().unwrap();
    assert_eq!(det, q(262144) * num_traits::pow(q(5), 12));
}

#[test]
fn singular_kernels() {
    let generic = HighestWeight::numeric([q(3), q(-2), q(1), q(0), q(5), q(7)]);
    let m = VermaModule::new(generic);
    for n in 0..=2 {
        assert!(m.singular_kernel(n).unwrap().is_empty());
    }
    let degenerate = HighestWeight::numeric([q(3), q(-2), q(0), q(0), q(5), q(7)]);
    let m = VermaModule::new(degenerate);
    let kernel = m.singular_kernel(1).unwrap();
    assert!(kernel.len() >= 2);
    for k in &kernel {
        for b in enumerate_basis(1, BasisOrder::Horizontal) {
            assert!(m.inner_product(&StateVector::basis(b), k).is_zero());
        }
    }
    let symbolic = VermaModule::symbolic();
    assert!(symbolic.singular_kernel(1).is_err());
}

#[test]
fn kernel_of_level_zero_is_empty() {
    let m = VermaModule::new(HighestWeight::numeric([q(0), q(0), q(0), q(0), q(0), q(0)]));
    assert!(m.singular_kernel(0).unwrap().is_empty());
}

#[test]
fn basis_counts() {
    for n in 0..=4 {
        let total: usize = blocks(n).iter().map(|b| split_count(&b.lj) * split_count(&b.p)).sum();
        assert_eq!(total, enumerate_basis(n, BasisOrder::Horizontal).len());
    }
    assert_eq!(blocks(3).len(), 10);
    assert_eq!(partitions_of(4).len(), 5);
}
