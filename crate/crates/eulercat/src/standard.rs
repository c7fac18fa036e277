//! Stock finite categories: the building blocks for tests, the bundled
//! corpus, and the random generators.

use std::collections::BTreeMap;

use crate::catcore::{FinCategory, Morphism};

/// The empty category (0 objects, 0 morphisms).
pub fn empty() -> FinCategory {
    FinCategory {
        objects: vec![],
        morphisms: vec![],
        identities: BTreeMap::new(),
        composition: BTreeMap::new(),
    }
}

/// One object, one identity morphism.
pub fn terminal() -> FinCategory {
    discrete_named(&["*"])
}

/// n objects, identity morphisms only.
pub fn discrete(n: usize) -> FinCategory {
    let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    discrete_named(&names.iter().map(|s| s.as_str()).collect::<Vec<_>>())
}

pub fn discrete_named(names: &[&str]) -> FinCategory {
    let mut c = empty();
    for &o in names {
        c.objects.push(o.to_string());
        let id = format!("id_{o}");
        c.morphisms.push(Morphism {
            id: id.clone(),
            src: o.to_string(),
            dst: o.to_string(),
        });
        c.identities.insert(o.to_string(), id.clone());
        c.composition.insert((id.clone(), id.clone()), id);
    }
    c
}

/// n objects with exactly one morphism between every ordered pair.
pub fn indiscrete(n: usize) -> FinCategory {
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut c = empty();
    c.objects = objects.clone();
    for i in 0..n {
        for j in 0..n {
            let id = format!("u_{i}_{j}");
            c.morphisms.push(Morphism {
                id: id.clone(),
                src: objects[i].clone(),
                dst: objects[j].clone(),
            });
            if i == j {
                c.identities.insert(objects[i].clone(), id);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c.composition.insert(
                    (format!("u_{j}_{k}"), format!("u_{i}_{j}")),
                    format!("u_{i}_{k}"),
                );
            }
        }
    }
    c
}

/// The cyclic group Z/k as a one-object category.
pub fn cyclic_group(k: usize) -> FinCategory {
    assert!(k >= 1);
    let mut c = empty();
    c.objects.push("o".to_string());
    for i in 0..k {
        c.morphisms.push(Morphism {
            id: format!("g{i}"),
            src: "o".to_string(),
            dst: "o".to_string(),
        });
    }
    c.identities.insert("o".to_string(), "g0".to_string());
    for i in 0..k {
        for j in 0..k {
            c.composition
                .insert((format!("g{i}"), format!("g{j}")), format!("g{}", (i + j) % k));
        }
    }
    c
}

/// Poset as a category from a strict order relation; the stored relation is
/// the reflexive-transitive closure of `covers`. Object order is `names` order.
pub fn poset(names: &[&str], covers: &[(&str, &str)]) -> FinCategory {
    let n = names.len();
    let idx: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[i][i] = true;
    }
    for &(a, b) in covers {
        leq[idx[a]][idx[b]] = true;
    }
    // Floyd-Warshall closure.
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            assert!(
                i == j || !(leq[i][j] && leq[j][i]),
                "relation has a cycle through {} and {}",
                names[i],
                names[j]
            );
        }
    }

    let mor_id = |i: usize, j: usize| {
        if i == j {
            format!("id_{}", names[i])
        } else {
            format!("f_{}_{}", names[i], names[j])
        }
    };
    let mut c = empty();
    c.objects = names.iter().map(|s| s.to_string()).collect();
    for i in 0..n {
        for j in 0..n {
            if leq[i][j] {
                c.morphisms.push(Morphism {
                    id: mor_id(i, j),
                    src: names[i].to_string(),
                    dst: names[j].to_string(),
                });
            }
        }
        c.identities.insert(names[i].to_string(), mor_id(i, i));
    }
    for i in 0..n {
        for j in 0..n {
            if !leq[i][j] {
                continue;
            }
            for k in 0..n {
                if leq[j][k] {
                    c.composition.insert((mor_id(j, k), mor_id(i, j)), mor_id(i, k));
                }
            }
        }
    }
    c
}

/// The span poset `b <- a -> c`.
pub fn poset_span() -> FinCategory {
    poset(&["a", "b", "c"], &[("a", "b"), ("a", "c")])
}

/// A finite category with the prescribed adjacency matrix, built by making
/// every composite of two non-identity morphisms equal to a designated
/// absorbing morphism `z` of the appropriate hom set.
///
/// Requires every hom count >= 1 and every diagonal count >= 2 (identity and
/// `z` must be distinct). Associativity holds because a composite involving
/// any non-identity pair is already absorbing.
pub fn absorbing_category(counts: &[Vec<usize>]) -> FinCategory {
    let n = counts.len();
    assert!(counts.iter().all(|row| row.len() == n), "counts must be square");
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            assert!(c >= 1, "hom count ({i},{j}) must be >= 1");
            assert!(i != j || c >= 2, "diagonal count ({i},{i}) must be >= 2");
        }
    }
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut c = empty();
    c.objects = objects.clone();
    let z_id = |i: usize, j: usize| format!("z_{i}_{j}");
    for i in 0..n {
        let id = format!("id_{i}");
        c.morphisms.push(Morphism {
            id: id.clone(),
            src: objects[i].clone(),
            dst: objects[i].clone(),
        });
        c.identities.insert(objects[i].clone(), id);
        for j in 0..n {
            c.morphisms.push(Morphism {
                id: z_id(i, j),
                src: objects[i].clone(),
                dst: objects[j].clone(),
            });
            let extra = counts[i][j] - if i == j { 2 } else { 1 };
            for e in 0..extra {
                c.morphisms.push(Morphism {
                    id: format!("m{e}_{i}_{j}"),
                    src: objects[i].clone(),
                    dst: objects[j].clone(),
                });
            }
        }
    }
    let identities: Vec<String> = (0..n).map(|i| format!("id_{i}")).collect();
    let is_identity = |id: &str| identities.iter().any(|i| i == id);
    let morphisms = c.morphisms.clone();
    for f in &morphisms {
        for g in morphisms.iter().filter(|g| g.src == f.dst) {
            let composite = if is_identity(&f.id) {
                g.id.clone()
            } else if is_identity(&g.id) {
                f.id.clone()
            } else {
                let i = objects.iter().position(|o| *o == f.src).unwrap();
                let k = objects.iter().position(|o| *o == g.dst).unwrap();
                z_id(i, k)
            };
            c.composition.insert((g.id.clone(), f.id.clone()), composite);
        }
    }
    c
}

/// A category with adjacency `[[3,2],[3,2]]`: weighting, no coweighting.
pub fn c1() -> FinCategory {
    absorbing_category(&[vec![3, 2], vec![3, 2]])
}

/// A category with adjacency `[[3,2,2],[3,2,2],[3,2,2]]`, equivalent to `c1`.
pub fn c2() -> FinCategory {
    absorbing_category(&[vec![3, 2, 2], vec![3, 2, 2], vec![3, 2, 2]])
}
