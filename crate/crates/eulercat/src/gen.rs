//! Seeded random instances for law verification: matrices, categories built
//! from valid-by-construction primitives, and strict diagrams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catcore::FinCategory;
use crate::constructions::{pointed_diagram, Diagram};
use crate::ratmat::{rat, RatMatrix};
use crate::standard;

pub struct Generator {
    rng: ChaCha8Rng,
    pub max_objects: usize,
    pub max_hom: usize,
}

impl Generator {
    pub fn new(seed: u64, max_objects: usize, max_hom: usize) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_objects: max_objects.max(1),
            max_hom: max_hom.max(2),
        }
    }

    /// Square matrix with integer entries in `[lo, hi]`.
    pub fn int_matrix(&mut self, size: usize, lo: i64, hi: i64) -> RatMatrix {
        let mut m = RatMatrix::zeros(size, size);
        for i in 0..size {
            for j in 0..size {
                m.set(i, j, rat(self.rng.gen_range(lo..=hi), 1));
            }
        }
        m
    }

    pub fn size(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.rng.gen_range(0..=i);
            p.swap(i, j);
        }
        p
    }

    /// Random poset: reflexive-transitive closure of a random DAG on `n`
    /// objects with shuffled object order.
    pub fn poset(&mut self, n: usize) -> FinCategory {
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.rng.gen_bool(0.4) {
                    covers.push((i, j));
                }
            }
        }
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let cover_refs: Vec<(&str, &str)> = covers
            .iter()
            .map(|&(i, j)| (name_refs[i], name_refs[j]))
            .collect();
        let c = standard::poset(&name_refs, &cover_refs);
        let perm = self.permutation(n);
        c.permute_objects(&perm)
    }

    /// Category with a random prescribed adjacency (absorbing composition).
    pub fn absorbing(&mut self, n: usize) -> FinCategory {
        let counts: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let lo = if i == j { 2 } else { 1 };
                        self.rng.gen_range(lo..=self.max_hom.max(lo))
                    })
                    .collect()
            })
            .collect();
        standard::absorbing_category(&counts)
    }

    /// A random valid finite category.
    pub fn category(&mut self) -> FinCategory {
        let n = self.size(1, self.max_objects);
        match self.rng.gen_range(0..7) {
            0 => standard::discrete(n),
            1 => standard::indiscrete(n.max(1)),
            2 => standard::cyclic_group(self.size(1, 6)),
            3 => self.poset(n),
            4 => self.absorbing(n.min(3).max(1)),
            5 => {
                let k = self.size(1, 4);
                let m = self.size(1, 2);
                let b = self.poset(m);
                crate::constructions::coproduct(&standard::cyclic_group(k), &b)
                    .expect("both valid")
            }
            _ => {
                let m = self.size(1, 2);
                let a = self.poset(m);
                let k = self.size(1, 3);
                crate::constructions::product(&a, &standard::cyclic_group(k)).expect("both valid")
            }
        }
    }

    /// A small category whose adjacency matrix has a weighting.
    pub fn weighted_fiber(&mut self) -> FinCategory {
        let n = self.size(1, 3);
        let c = match self.rng.gen_range(0..5) {
            0 => standard::terminal(),
            1 => standard::discrete(n),
            2 => standard::indiscrete(n),
            3 => standard::cyclic_group(self.size(1, 6)),
            _ => self.poset(n),
        };
        debug_assert!(crate::weights::weighting(&c.adjacency_unchecked()).is_some());
        c
    }

    fn basepoints(&mut self, fibers: &[FinCategory]) -> Vec<String> {
        fibers
            .iter()
            .map(|f| f.objects[self.rng.gen_range(0..f.objects.len())].clone())
            .collect()
    }

    /// Diagram over a random poset index with weighted fibers; all
    /// non-identity arrows are constant functors.
    pub fn diagram_over_poset(&mut self) -> Diagram {
        let n = self.size(1, self.max_objects);
        let index = self.poset(n);
        let fibers: Vec<FinCategory> = index.objects.iter().map(|_| self.weighted_fiber()).collect();
        let basepoints = self.basepoints(&fibers);
        let refs: Vec<&str> = basepoints.iter().map(|s| s.as_str()).collect();
        pointed_diagram(&index, &fibers, &refs)
    }

    /// Arbitrary strict diagram: poset-indexed pointed, absorbing-indexed
    /// pointed (EX3-shaped), or a constant fiber with identity arrows over
    /// any index.
    pub fn diagram(&mut self) -> Diagram {
        match self.rng.gen_range(0..3) {
            0 => self.diagram_over_poset(),
            1 => {
                let n = self.size(1, 3);
                let index = self.absorbing(n);
                let fibers: Vec<FinCategory> =
                    index.objects.iter().map(|_| self.weighted_fiber()).collect();
                let basepoints = self.basepoints(&fibers);
                let refs: Vec<&str> = basepoints.iter().map(|s| s.as_str()).collect();
                pointed_diagram(&index, &fibers, &refs)
            }
            _ => {
                let index = self.category();
                let fiber = self.weighted_fiber();
                let arrows = index
                    .morphisms
                    .iter()
                    .map(|m| {
                        (
                            m.id.clone(),
                            crate::catcore::FunctorData::identity(&fiber),
                        )
                    })
                    .collect();
                Diagram {
                    fibers: index
                        .objects
                        .iter()
                        .map(|o| (o.clone(), fiber.clone()))
                        .collect(),
                    index,
                    arrows,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_categories_are_valid() {
        let mut g = Generator::new(7, 4, 4);
        for _ in 0..40 {
            let c = g.category();
            let report = c.validate();
            assert!(report.is_valid(), "{report}");
        }
    }

    #[test]
    fn generated_diagrams_are_valid() {
        let mut g = Generator::new(11, 3, 3);
        for _ in 0..20 {
            g.diagram().validate().unwrap();
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let mut a = Generator::new(42, 4, 4);
        let mut b = Generator::new(42, 4, 4);
        for _ in 0..10 {
            assert_eq!(a.category(), b.category());
        }
    }
}
