//! Property-based invariants for the exact pseudoinverse and the Euler
//! measure, driven by proptest.

mod common;

use common::penrose_holds;
use eulercat::ratmat::{block_diag, rat, RatMatrix, Rational};
use eulercat::{gen::Generator, standard, weights};
use proptest::prelude::*;

fn square_matrix(max_n: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max_n)
        .prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=5, n * n).prop_map(move |v| {
                RatMatrix::from_entries(n, n, v.into_iter().map(|x| rat(x, 1)).collect())
            })
        })
}

fn permutation_matrix(perm: &[usize]) -> RatMatrix {
    let n = perm.len();
    let mut p = RatMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, rat(1, 1));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transpose_is_an_involution(m in square_matrix(6)) {
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn penrose_equations_hold(m in square_matrix(5)) {
        let p = m.pinv().unwrap();
        prop_assert!(penrose_holds(&m, &p));
    }

    #[test]
    fn permutation_factor_law(m in square_matrix(5), seed in any::<u64>()) {
        // (MP)⁺ = Pᵀ M⁺ for permutation matrices P (P⁺ = Pᵀ).
        let mut gen = Generator::new(seed, 5, 4);
        let p = permutation_matrix(&gen.permutation(m.rows()));
        let lhs = m.mat_mul(&p).unwrap().pinv().unwrap();
        let rhs = p.transpose().mat_mul(&m.pinv().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kronecker_pinv_law(a in square_matrix(3), b in square_matrix(3)) {
        // (A ⊗ B)⁺ = A⁺ ⊗ B⁺.
        let lhs = a.kronecker(&b).pinv().unwrap();
        let rhs = a.pinv().unwrap().kronecker(&b.pinv().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn block_diag_pinv_law(a in square_matrix(3), b in square_matrix(3)) {
        // diag(A,B)⁺ = diag(A⁺,B⁺).
        let lhs = block_diag(&[a.clone(), b.clone()]).unwrap().pinv().unwrap();
        let rhs = block_diag(&[a.pinv().unwrap(), b.pinv().unwrap()]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pinv_is_basis_independent(m in square_matrix(5), seed in any::<u64>()) {
        // Conjugating by a permutation and un-conjugating reproduces pinv:
        // (PᵀMP)⁺ = Pᵀ M⁺ P, so the algorithm's pivot choices don't leak.
        let mut gen = Generator::new(seed, 5, 4);
        let p = permutation_matrix(&gen.permutation(m.rows()));
        let conj = p.transpose().mat_mul(&m).unwrap().mat_mul(&p).unwrap();
        let back = p
            .mat_mul(&conj.pinv().unwrap())
            .unwrap()
            .mat_mul(&p.transpose())
            .unwrap();
        prop_assert_eq!(back, m.pinv().unwrap());
    }

    #[test]
    fn chi_is_permutation_invariant(seed in any::<u64>()) {
        let mut gen = Generator::new(seed, 5, 4);
        let c = gen.category();
        let perm = gen.permutation(c.object_count());
        let permuted = c.permute_objects(&perm);
        prop_assert_eq!(weights::chi(&c).unwrap(), weights::chi(&permuted).unwrap());
    }

    #[test]
    fn sls_sum_identity(seed in any::<u64>()) {
        // Whenever both a weighting and a coweighting exist they share the
        // same total, namely 1ᵀM⁺1.
        let mut gen = Generator::new(seed, 5, 4);
        let m = gen.category().adjacency().unwrap();
        if let (Some(w), Some(v)) = (weights::weighting(&m), weights::coweighting(&m)) {
            let chi = weights::chi_of_matrix(&m).unwrap();
            prop_assert_eq!(w.entry_sum(), chi.clone());
            prop_assert_eq!(v.entry_sum(), chi);
        }
    }
}

#[test]
fn known_chi_values() {
    assert_eq!(weights::chi(&standard::terminal()).unwrap(), rat(1, 1));
    for n in 0..5 {
        assert_eq!(
            weights::chi(&standard::discrete(n)).unwrap(),
            Rational::from_integer(n.into())
        );
    }
    for k in [1usize, 2, 3, 4, 6] {
        assert_eq!(
            weights::chi(&standard::cyclic_group(k)).unwrap(),
            rat(1, k as i64)
        );
    }
}
