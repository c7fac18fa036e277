//! Acceptance gate: one test per release criterion, each printing a single
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; any FAIL also fails the test harness.

mod common;

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use common::{frf_pinv, penrose_holds};
use eulercat::gen::Generator;
use eulercat::io;
use eulercat::ratmat::{rat, RatMatrix, Rational};
use eulercat::{constructions, standard, weights};

/// Best-of-n wall time: immune to scheduler noise from parallel test threads.
fn time_min(n: usize, mut f: impl FnMut()) -> Duration {
    (0..n)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .unwrap()
}

fn criterion(name: &str, f: impl FnOnce() + std::panic::UnwindSafe) {
    let result = std::panic::catch_unwind(f);
    match &result {
        Ok(()) => println!("PASS {name}"),
        Err(_) => println!("FAIL {name}"),
    }
    if let Err(e) = result {
        std::panic::resume_unwind(e);
    }
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn criterion_1_rank_one_2x2_example() {
    criterion("1: 2x2 rank-one pseudoinverse and measure", || {
        let m = RatMatrix::from_i64_rows(&[&[3, 2], &[3, 2]]);
        let elapsed = time_min(5, || {
            m.pinv().unwrap();
            weights::chi_of_matrix(&m).unwrap();
        });
        let p = m.pinv().unwrap();
        let chi = weights::chi_of_matrix(&m).unwrap();
        let expected = RatMatrix::from_rows(vec![
            vec![rat(3, 26), rat(3, 26)],
            vec![rat(1, 13), rat(1, 13)],
        ]);
        assert_eq!(p, expected);
        assert_eq!(chi, rat(5, 13));
        assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    });
}

#[test]
fn criterion_2_rank_one_3x3_example() {
    criterion("2: 3x3 rank-one pseudoinverse and measure", || {
        let m = RatMatrix::from_i64_rows(&[&[3, 2, 2], &[3, 2, 2], &[3, 2, 2]]);
        let elapsed = time_min(5, || {
            m.pinv().unwrap();
            weights::chi_of_matrix(&m).unwrap();
        });
        let p = m.pinv().unwrap();
        let chi = weights::chi_of_matrix(&m).unwrap();
        let expected = RatMatrix::from_rows(vec![
            vec![rat(1, 17), rat(1, 17), rat(1, 17)],
            vec![rat(2, 51), rat(2, 51), rat(2, 51)],
            vec![rat(2, 51), rat(2, 51), rat(2, 51)],
        ]);
        assert_eq!(p, expected);
        assert_eq!(chi, rat(7, 17));
        assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    });
}

#[test]
fn criterion_3_inclusion_exclusion_counterexample() {
    criterion("3: bundled counterexample diagram (5/13 vs 7/17)", || {
        let d = io::load_diagram(&corpus_dir().join("ex3_diagram.json")).unwrap();
        d.validate().unwrap();
        let report = constructions::chi_inclusion_exclusion(&d).unwrap();
        assert_eq!(report.actual, rat(7, 17));
        assert_eq!(report.predicted, rat(5, 13));
        assert!(!report.applies);
    });
}

#[test]
fn criterion_4_span_poset_inclusion_exclusion() {
    criterion("4: span poset inverse and pullback-style formula", || {
        let p = RatMatrix::from_i64_rows(&[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]]);
        let pinv = p.pinv().unwrap();
        assert_eq!(
            pinv,
            RatMatrix::from_i64_rows(&[&[1, -1, -1], &[0, 1, 0], &[0, 0, 1]])
        );
        let ones = RatMatrix::ones(3);
        assert_eq!(
            pinv.mat_mul(&ones).unwrap(),
            RatMatrix::from_rows(vec![vec![rat(-1, 1)], vec![rat(1, 1)], vec![rat(1, 1)]])
        );

        // χ(G(F)) = χ(F(b)) + χ(F(c)) - χ(F(a)) on three fiber assignments,
        // one of them with a fiber of measure 1/2 (the two-element group).
        let span = standard::poset_span();
        let assignments: Vec<(Vec<eulercat::FinCategory>, Vec<&str>)> = vec![
            (
                vec![standard::terminal(), standard::terminal(), standard::terminal()],
                vec!["*", "*", "*"],
            ),
            (
                vec![standard::terminal(), standard::discrete(2), standard::cyclic_group(2)],
                vec!["*", "o0", "o"],
            ),
            (
                vec![standard::cyclic_group(2), standard::cyclic_group(2), standard::cyclic_group(2)],
                vec!["o", "o", "o"],
            ),
        ];
        for (fibers, basepoints) in assignments {
            let d = constructions::pointed_diagram(&span, &fibers, &basepoints);
            let report = constructions::chi_inclusion_exclusion(&d).unwrap();
            let by_hand = weights::chi(&fibers[1]).unwrap() + weights::chi(&fibers[2]).unwrap()
                - weights::chi(&fibers[0]).unwrap();
            assert!(report.applies);
            assert_eq!(report.actual, by_hand);
            assert_eq!(report.predicted, by_hand);
        }
    });
}

#[test]
fn criterion_5_penrose_and_oracle_suite() {
    criterion("5: Penrose equations + factorization oracle, 200 matrices", || {
        let start = Instant::now();
        let mut gen = Generator::new(20250826, 8, 4);
        for trial in 0..200 {
            let n = 1 + trial % 8;
            let m = gen.int_matrix(n, -3, 5);
            let p = m.pinv().unwrap();
            assert!(penrose_holds(&m, &p), "Penrose failed on trial {trial}: {m:?}");
            assert_eq!(p, frf_pinv(&m), "oracle mismatch on trial {trial}: {m:?}");
        }
        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    });
}

#[test]
fn criterion_6_measure_laws_suite() {
    criterion("6: additivity, multiplicativity, poset formula, separation", || {
        let start = Instant::now();
        let mut gen = Generator::new(6021023, 4, 4);
        for _ in 0..50 {
            let a = gen.category();
            let b = gen.category();
            let chi_a = weights::chi(&a).unwrap();
            let chi_b = weights::chi(&b).unwrap();
            let co = constructions::coproduct(&a, &b).unwrap();
            assert_eq!(weights::chi(&co).unwrap(), chi_a.clone() + chi_b.clone());
            let pr = constructions::product(&a, &b).unwrap();
            assert_eq!(weights::chi(&pr).unwrap(), chi_a * chi_b);
        }
        for trial in 0..50 {
            let d = gen.diagram_over_poset();
            let report = constructions::chi_inclusion_exclusion(&d).unwrap();
            assert!(report.applies, "trial {trial} should satisfy the theorem");
            assert_eq!(report.actual, report.predicted, "trial {trial}");

            let total = constructions::grothendieck(&d).unwrap().total;
            let (l1, l2) = constructions::decompose_l1_l2(&d).unwrap();
            assert_eq!(total.adjacency().unwrap(), l1.mat_mul(&l2).unwrap());
        }
        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    });
}

#[test]
fn criterion_7_permutation_invariance() {
    criterion("7: measure invariant under object permutation, 50 categories", || {
        let mut gen = Generator::new(7171717, 5, 4);
        for _ in 0..50 {
            let c = gen.category();
            let perm = gen.permutation(c.object_count());
            let permuted = c.permute_objects(&perm);
            assert!(permuted.validate().is_valid());
            assert_eq!(weights::chi(&c).unwrap(), weights::chi(&permuted).unwrap());
        }
    });
}

#[test]
fn criterion_8_sls_consistency_on_corpus() {
    criterion("8: weighting/coweighting totals agree on the corpus", || {
        let dir = corpus_dir();
        let manifest: Vec<serde_json::Value> =
            serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap())
                .unwrap();
        let mut matrices = Vec::new();
        for e in &manifest {
            let path = dir.join(e["path"].as_str().unwrap());
            match e["kind"].as_str().unwrap() {
                "matrix" => matrices.push(io::load_matrix(&path).unwrap()),
                "category" => {
                    matrices.push(io::load_category(&path).unwrap().adjacency().unwrap())
                }
                _ => {}
            }
        }
        assert!(matrices.len() >= 10, "corpus unexpectedly small");
        let mut checked = 0;
        for m in &matrices {
            if let (Some(w), Some(v)) = (weights::weighting(m), weights::coweighting(m)) {
                let chi = weights::chi_of_matrix(m).unwrap();
                assert_eq!(w.entry_sum(), chi.clone());
                assert_eq!(v.entry_sum(), chi);
                checked += 1;
            }
        }
        assert!(checked > 0, "no corpus matrix had both a weighting and a coweighting");
    });
}

#[test]
fn criterion_9_known_values() {
    criterion("9: known measures of stock categories", || {
        assert_eq!(weights::chi(&standard::terminal()).unwrap(), rat(1, 1));
        for n in 0..6 {
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
    });
}
