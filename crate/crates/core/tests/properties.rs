use dunkl_core::birep::{rep_matrices, verify_rep};
use dunkl_core::ck::{fischer_decompose, psi};
use dunkl_core::closedform::{closed_psi, homogenized_jacobi, homogenized_jacobi_hypergeometric, jacobi, MomentTable};
use dunkl_core::exactnum::{rat, Params, Rational};
use dunkl_core::operators::{
    anticommutator, bi_generator, central_element, dirac, gamma_op, gamma_plus_one, involution_z, laplace, LinOp,
};
use dunkl_core::poly::{Axis, ScalarPoly, Spin};
use dunkl_core::suite::{random_homogeneous, random_spinor};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_rational() -> impl Strategy<Value = Rational> {
    (0i64..=12, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn params() -> impl Strategy<Value = Params> {
    (small_rational(), small_rational(), small_rational()).prop_map(|(a, b, c)| Params::new(a, b, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dirac_squares_to_laplacian(mu in params(), seed in any::<u64>()) {
        let f = random_spinor(&mut ChaCha8Rng::seed_from_u64(seed), 4, 5);
        let d = dirac(&mu);
        prop_assert_eq!(d.apply(&d.apply(&f)), laplace(&mu).apply(&f));
    }

    #[test]
    fn bannai_ito_relation_on_random_spinors(mu in params(), seed in any::<u64>()) {
        let f = random_spinor(&mut ChaCha8Rng::seed_from_u64(seed), 3, 5);
        let k = Axis::ALL.map(|a| bi_generator(&mu, a));
        let lhs = anticommutator(&k[0], &k[1]).apply(&f);
        let rhs = (&k[2] + &central_element(&mu).scale_rational(&(mu.mu3() * rat(2, 1)))
            + LinOp::rational(mu.mu1() * mu.mu2() * rat(2, 1)))
        .apply(&f);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_and_involutions_are_self_adjoint(mu in params(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = (random_spinor(&mut rng, 3, 4), random_spinor(&mut rng, 3, 4));
        let table = MomentTable::new(&mu);
        for op in [gamma_op(&mu), involution_z(Axis::X2), bi_generator(&mu, Axis::X3)] {
            prop_assert_eq!(table.inner_product(&op.apply(&f), &g), table.inner_product(&f, &op.apply(&g)));
        }
    }

    #[test]
    fn closed_form_matches_ck(mu in params(), n in 0u32..=4, k_frac in 0u32..=4, up in any::<bool>()) {
        let k = k_frac.min(n);
        let spin = if up { Spin::Up } else { Spin::Down };
        let f = psi(n, k, spin, &mu);
        prop_assert_eq!(closed_psi(n, k, spin, &mu), f.clone());
        prop_assert!(dirac(&mu).apply(&f).is_zero());
    }

    #[test]
    fn homogenized_jacobi_forms_agree(m in 0u32..=6, alpha in small_rational(), beta in small_rational()) {
        let (x, y) = (ScalarPoly::var(Axis::X1), ScalarPoly::var(Axis::X2));
        let direct = homogenized_jacobi(m, &alpha, &beta, &x, &y);
        prop_assert_eq!(&direct, &homogenized_jacobi_hypergeometric(m, &alpha, &beta, &x, &y));
        // the pure X^m coefficient is P_m(1) = (α+1)_m/m!
        let at_one = jacobi(m, &alpha, &beta).eval(&rat(1, 1));
        let top = direct.coef(&dunkl_core::poly::MultiIndex::new(m, 0, 0));
        prop_assert_eq!(top, at_one.into());
    }

    #[test]
    fn fischer_reconstructs(mu in params(), n in 0u32..=3, seed in any::<u64>()) {
        let f = random_homogeneous(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let parts = fischer_decompose(&f, &mu).unwrap();
        prop_assert_eq!(parts.reassemble(), f);
        let d = dirac(&mu);
        prop_assert!(parts.components.iter().all(|m| d.apply(m).is_zero()));
    }

    #[test]
    fn representation_holds(mu in params(), n in 0u32..=5) {
        let report = verify_rep(n, &mu);
        prop_assert!(report.passed(), "{}", report);
        prop_assert_eq!(rep_matrices(n, &mu).k3.diagonal().len(), n as usize + 1);
    }

    #[test]
    fn scasimir_eigenvalue_on_monogenics(mu in params(), n in 0u32..=4) {
        let g1 = gamma_plus_one(&mu);
        let f = psi(n, n / 2, Spin::Up, &mu);
        let value = rat(n as i64, 1) + mu.mu_sum() + rat(1, 1);
        prop_assert_eq!(g1.apply(&f), f.scale_rational(&value));
    }
}
