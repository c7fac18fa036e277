//! Randomized verification of the theorems the library rests on. Every law
//! is an exact identity; a single failure is an implementation bug, and the
//! first failing witness is serialized for reproduction.

use crate::constructions;
use crate::gen::Generator;
use crate::io;
use crate::ratmat::{stack_columns, RatMatrix};
use crate::weights;

#[derive(Debug, Clone)]
pub struct LawRunConfig {
    pub seed: u64,
    pub count: usize,
    pub max_objects: usize,
    pub max_hom: usize,
}

impl LawRunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.count < 1 {
            return Err("count must be >= 1".into());
        }
        if self.max_objects < 1 || self.max_hom < 1 {
            return Err("size bounds must be >= 1".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct LawSummary {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl LawSummary {
    fn new(name: &'static str) -> Self {
        LawSummary {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(witness());
            }
        }
    }
}

fn penrose_holds(m: &RatMatrix) -> bool {
    let p = match m.pinv() {
        Ok(p) => p,
        Err(_) => return false,
    };
    let mp = m.mat_mul(&p).unwrap();
    let pm = p.mat_mul(m).unwrap();
    mp.mat_mul(m).unwrap() == *m
        && pm.mat_mul(&p).unwrap() == p
        && pm.transpose() == pm
        && mp.transpose() == mp
}

fn law_penrose(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("penrose");
    let mut g = Generator::new(cfg.seed.wrapping_add(1), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let size = g.size(1, 8);
        let m = g.int_matrix(size, -3, 5);
        s.record(penrose_holds(&m), || io::matrix_to_json(&m).to_string());
    }
    s
}

fn law_additivity(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("additivity");
    let mut g = Generator::new(cfg.seed.wrapping_add(2), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let a = g.category();
        let b = g.category();
        let union = constructions::coproduct(&a, &b).expect("generated categories are valid");
        let ok = weights::chi(&union).unwrap()
            == weights::chi(&a).unwrap() + weights::chi(&b).unwrap();
        s.record(ok, || {
            format!(
                "{{\"a\":{},\"b\":{}}}",
                io::category_to_json(&a),
                io::category_to_json(&b)
            )
        });
    }
    s
}

fn law_multiplicativity(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("multiplicativity");
    let mut g = Generator::new(cfg.seed.wrapping_add(3), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let a = g.category();
        let b = g.category();
        let prod = constructions::product(&a, &b).expect("generated categories are valid");
        let ok = weights::chi(&prod).unwrap()
            == weights::chi(&a).unwrap() * weights::chi(&b).unwrap();
        s.record(ok, || {
            format!(
                "{{\"a\":{},\"b\":{}}}",
                io::category_to_json(&a),
                io::category_to_json(&b)
            )
        });
    }
    s
}

fn law_sls(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("sls");
    let mut g = Generator::new(cfg.seed.wrapping_add(4), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let c = g.category();
        let adj = c.adjacency().expect("generated categories are valid");
        // vacuously true unless both a weighting and a coweighting exist
        let ok = match weights::check_sls(&adj) {
            Ok(v) => v,
            Err(_) => true,
        };
        s.record(ok, || io::category_to_json(&c).to_string());
    }
    s
}

fn law_separation(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("separation");
    let mut g = Generator::new(cfg.seed.wrapping_add(5), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let d = g.diagram();
        let total = constructions::grothendieck(&d).expect("generated diagrams are valid");
        let (l1, l2) = constructions::decompose_l1_l2(&d).unwrap();
        let ok = total.total.adjacency_unchecked() == l1.mat_mul(&l2).unwrap();
        s.record(ok, || io::category_to_json(&d.index).to_string());
    }
    s
}

fn law_weighting_assembly(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("weighting-assembly");
    let mut g = Generator::new(cfg.seed.wrapping_add(6), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let d = g.diagram_over_poset();
        let index_adj = d.index.adjacency_unchecked();
        let Some(lambda) = weights::weighting(&index_adj) else {
            s.record(false, || io::category_to_json(&d.index).to_string());
            continue;
        };
        let pieces: Vec<RatMatrix> = d
            .index
            .objects
            .iter()
            .enumerate()
            .map(|(i, a)| {
                weights::weighting(&d.fibers[a].adjacency_unchecked())
                    .expect("fibers are generated with weightings")
                    .scale(lambda.get(i, 0))
            })
            .collect();
        let stacked = stack_columns(&pieces).unwrap();
        let total = constructions::grothendieck(&d).unwrap().total;
        let adj = total.adjacency_unchecked();
        let ok = adj.mat_mul(&stacked).unwrap() == RatMatrix::ones(adj.rows());
        s.record(ok, || io::category_to_json(&d.index).to_string());
    }
    s
}

fn law_poset_inclusion_exclusion(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("poset-inclusion-exclusion");
    let mut g = Generator::new(cfg.seed.wrapping_add(7), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let d = g.diagram_over_poset();
        let r = constructions::chi_inclusion_exclusion(&d).unwrap();
        let ok = r.applies && r.predicted == r.actual;
        s.record(ok, || io::category_to_json(&d.index).to_string());
    }
    s
}

fn law_permutation_invariance(cfg: &LawRunConfig) -> LawSummary {
    let mut s = LawSummary::new("permutation-invariance");
    let mut g = Generator::new(cfg.seed.wrapping_add(8), cfg.max_objects, cfg.max_hom);
    for _ in 0..cfg.count {
        let c = g.category();
        let perm = g.permutation(c.object_count());
        let pc = c.permute_objects(&perm);
        let ok = weights::chi(&c).unwrap() == weights::chi(&pc).unwrap();
        s.record(ok, || io::category_to_json(&c).to_string());
    }
    s
}

/// Runs every law suite `cfg.count` times. Deterministic for a fixed config.
pub fn run_all(cfg: &LawRunConfig) -> Result<Vec<LawSummary>, String> {
    cfg.validate()?;
    Ok(vec![
        law_penrose(cfg),
        law_additivity(cfg),
        law_multiplicativity(cfg),
        law_sls(cfg),
        law_separation(cfg),
        law_weighting_assembly(cfg),
        law_poset_inclusion_exclusion(cfg),
        law_permutation_invariance(cfg),
    ])
}
