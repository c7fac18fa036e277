//! Category combinators: product, disjoint union, poset detection, and the
//! Grothendieck construction with its χ inclusion-exclusion formula.
//!
//! Diagrams are strict functors into Cat: identities map to identity
//! functors and composites to composite functors on the nose; pseudofunctor
//! coherence isomorphisms are proof devices and carry no computational
//! content here.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::catcore::{CatError, FinCategory, FunctorData, Morphism};
use crate::ratmat::{block_diag, rat, RatMatrix, Rational};
use crate::weights;

#[derive(Debug, Error, Clone)]
pub enum ConError {
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
}

/// A strict functor `index -> Cat`: a fiber category per index object and a
/// functor per index morphism.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub index: FinCategory,
    pub fibers: BTreeMap<String, FinCategory>,
    pub arrows: BTreeMap<String, FunctorData>,
}

/// Total category of a diagram with the pairing that produced each object.
#[derive(Debug, Clone)]
pub struct GrothendieckResult {
    pub total: FinCategory,
    /// total object id -> (index object, fiber object)
    pub object_index: BTreeMap<String, (String, String)>,
}

/// Outcome of the inclusion-exclusion formula `χ(F)[𝒜]⁺1` against the
/// directly computed χ of the total category. `applies` records whether the
/// theorem hypotheses hold; `predicted == actual` is guaranteed only then.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncExcReport {
    pub predicted: Rational,
    pub actual: Rational,
    pub applies: bool,
}

impl Diagram {
    pub fn fiber(&self, obj: &str) -> Option<&FinCategory> {
        self.fibers.get(obj)
    }

    pub fn validate(&self) -> Result<(), ConError> {
        let report = self.index.validate();
        if !report.is_valid() {
            return Err(ConError::InvalidDiagram(format!("index category: {report}")));
        }
        for o in &self.index.objects {
            let Some(f) = self.fibers.get(o) else {
                return Err(ConError::InvalidDiagram(format!("no fiber for index object {o:?}")));
            };
            let report = f.validate();
            if !report.is_valid() {
                return Err(ConError::InvalidDiagram(format!("fiber at {o:?}: {report}")));
            }
        }
        for m in &self.index.morphisms {
            let Some(arrow) = self.arrows.get(&m.id) else {
                return Err(ConError::InvalidDiagram(format!(
                    "no arrow for index morphism {:?}",
                    m.id
                )));
            };
            let report = arrow.validate(&self.fibers[&m.src], &self.fibers[&m.dst]);
            if !report.is_valid() {
                return Err(ConError::InvalidDiagram(format!("arrow at {:?}: {report}", m.id)));
            }
        }
        for (o, id) in &self.index.identities {
            if self.arrows[id] != FunctorData::identity(&self.fibers[o]) {
                return Err(ConError::InvalidDiagram(format!(
                    "arrow at identity {id:?} of {o:?} is not the identity functor"
                )));
            }
        }
        for ((g, f), gf) in &self.index.composition {
            let composed = FunctorData::compose(&self.arrows[f], &self.arrows[g]);
            if composed != self.arrows[gf] {
                return Err(ConError::InvalidDiagram(format!(
                    "strict functoriality fails at composite ({g:?},{f:?})"
                )));
            }
        }
        Ok(())
    }
}

fn ensure_valid(c: &FinCategory) -> Result<(), CatError> {
    let report = c.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(CatError::InvalidCategory(report))
    }
}

/// Product category: pair objects and morphisms, componentwise composition.
/// Object order is row-major in the first factor, matching `[𝒜]⊗[ℬ]`.
pub fn product(a: &FinCategory, b: &FinCategory) -> Result<FinCategory, CatError> {
    ensure_valid(a)?;
    ensure_valid(b)?;
    let pair = |x: &str, y: &str| format!("({x},{y})");
    let mut c = crate::standard::empty();
    for x in &a.objects {
        for y in &b.objects {
            c.objects.push(pair(x, y));
            c.identities
                .insert(pair(x, y), pair(&a.identities[x], &b.identities[y]));
        }
    }
    for f in &a.morphisms {
        for g in &b.morphisms {
            c.morphisms.push(Morphism {
                id: pair(&f.id, &g.id),
                src: pair(&f.src, &g.src),
                dst: pair(&f.dst, &g.dst),
            });
        }
    }
    for ((g1, f1), h1) in &a.composition {
        for ((g2, f2), h2) in &b.composition {
            c.composition
                .insert((pair(g1, g2), pair(f1, f2)), pair(h1, h2));
        }
    }
    Ok(c)
}

/// Disjoint union with namespaced ids; objects of `a` first.
pub fn coproduct(a: &FinCategory, b: &FinCategory) -> Result<FinCategory, CatError> {
    ensure_valid(a)?;
    ensure_valid(b)?;
    let mut c = crate::standard::empty();
    for (prefix, part) in [("l", a), ("r", b)] {
        let tag = |s: &str| format!("{prefix}:{s}");
        c.objects.extend(part.objects.iter().map(|o| tag(o)));
        c.morphisms.extend(part.morphisms.iter().map(|m| Morphism {
            id: tag(&m.id),
            src: tag(&m.src),
            dst: tag(&m.dst),
        }));
        c.identities
            .extend(part.identities.iter().map(|(o, i)| (tag(o), tag(i))));
        c.composition.extend(
            part.composition
                .iter()
                .map(|((g, f), gf)| ((tag(g), tag(f)), tag(gf))),
        );
    }
    Ok(c)
}

/// If `c` is a poset (every hom set has at most one morphism, no nontrivial
/// endomorphisms or 2-cycles), returns a total order on its objects that
/// extends the partial order, with ties broken by input order.
pub fn is_poset(c: &FinCategory) -> Option<Vec<String>> {
    for x in &c.objects {
        for y in &c.objects {
            let hom = c.hom(x, y);
            if hom.len() > 1 {
                return None;
            }
            if x == y && !hom.is_empty() && hom[0] != c.identities[x] {
                return None;
            }
            if x != y && !hom.is_empty() && !c.hom(y, x).is_empty() {
                return None;
            }
        }
    }
    // Kahn's algorithm; the candidate with no remaining predecessors that
    // comes first in input order is emitted next.
    let n = c.objects.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&i| {
            !placed[i]
                && (0..n).all(|j| {
                    placed[j]
                        || j == i
                        || c.hom(&c.objects[j], &c.objects[i]).is_empty()
                })
        })?;
        placed[next] = true;
        order.push(c.objects[next].clone());
    }
    Some(order)
}

struct TotalMorphism {
    id: String,
    index_mor: String,
    zeta: String,
    src_fiber_obj: String,
    src: String,
    dst: String,
}

fn total_object_id(a: &str, x: &str) -> String {
    format!("({a},{x})")
}

/// Grothendieck construction: objects `(a, x)` with fibers in index order and
/// fiber objects in fiber order; morphisms `(f, ζ)` with `f : a -> b` in the
/// index and `ζ : F(f)(x) -> y` in the target fiber.
pub fn grothendieck(d: &Diagram) -> Result<GrothendieckResult, ConError> {
    d.validate()?;
    let mut total = crate::standard::empty();
    let mut object_index = BTreeMap::new();
    for a in &d.index.objects {
        for x in &d.fibers[a].objects {
            let id = total_object_id(a, x);
            total.objects.push(id.clone());
            object_index.insert(id, (a.clone(), x.clone()));
        }
    }

    // Morphism ids carry the source fiber object: distinct sources can share
    // the same (f, ζ) pair when F(f) is not injective on objects.
    let mut morphisms: Vec<TotalMorphism> = Vec::new();
    for f in &d.index.morphisms {
        let arrow = &d.arrows[&f.id];
        let target_fiber = &d.fibers[&f.dst];
        for x in &d.fibers[&f.src].objects {
            let fx = &arrow.object_map[x];
            for zeta in target_fiber.morphisms.iter().filter(|m| m.src == *fx) {
                morphisms.push(TotalMorphism {
                    id: format!("({},{})@{}", f.id, zeta.id, x),
                    index_mor: f.id.clone(),
                    zeta: zeta.id.clone(),
                    src_fiber_obj: x.clone(),
                    src: total_object_id(&f.src, x),
                    dst: total_object_id(&f.dst, &zeta.dst),
                });
            }
        }
    }
    for m in &morphisms {
        total.morphisms.push(Morphism {
            id: m.id.clone(),
            src: m.src.clone(),
            dst: m.dst.clone(),
        });
    }
    for a in &d.index.objects {
        let id_a = &d.index.identities[a];
        for x in &d.fibers[a].objects {
            let id_x = &d.fibers[a].identities[x];
            total
                .identities
                .insert(total_object_id(a, x), format!("({id_a},{id_x})@{x}"));
        }
    }
    // (g, ξ) ∘ (f, ζ) = (g∘f, ξ ∘ F(g)(ζ))
    for first in &morphisms {
        let f = d.index.morphism(&first.index_mor).unwrap();
        for second in morphisms.iter().filter(|s| s.src == first.dst) {
            let g = d.index.morphism(&second.index_mor).unwrap();
            let gf = d.index.compose(&g.id, &f.id).ok_or_else(|| {
                ConError::InvalidDiagram(format!("index composition missing at ({:?},{:?})", g.id, f.id))
            })?;
            let g_of_zeta = &d.arrows[&g.id].morphism_map[&first.zeta];
            let fiber_c = &d.fibers[&g.dst];
            let zeta_composite = fiber_c.compose(&second.zeta, g_of_zeta).ok_or_else(|| {
                ConError::InvalidDiagram(format!(
                    "fiber composition missing at ({:?},{:?}) in fiber {:?}",
                    second.zeta, g_of_zeta, g.dst
                ))
            })?;
            total.composition.insert(
                (second.id.clone(), first.id.clone()),
                format!("({gf},{zeta_composite})@{}", first.src_fiber_obj),
            );
        }
    }

    let report = total.validate();
    if !report.is_valid() {
        return Err(ConError::InvalidDiagram(format!(
            "constructed total category is invalid: {report}"
        )));
    }
    Ok(GrothendieckResult { total, object_index })
}

/// The factor matrices `([G(L₁F)], [G(L₂F)])` over the total object order.
/// The second is the block diagonal of fiber adjacencies; the first counts,
/// at ((a,x),(a',y)), the index morphisms `f : a -> a'` with `F(f)(x) = y`.
/// Their product equals the adjacency of the total category.
pub fn decompose_l1_l2(d: &Diagram) -> Result<(RatMatrix, RatMatrix), ConError> {
    d.validate()?;
    let fiber_adjacencies: Vec<RatMatrix> = d
        .index
        .objects
        .iter()
        .map(|a| d.fibers[a].adjacency_unchecked())
        .collect();
    let l2 = block_diag(&fiber_adjacencies).expect("adjacencies are square");

    let mut positions: Vec<(String, String)> = Vec::new();
    for a in &d.index.objects {
        for x in &d.fibers[a].objects {
            positions.push((a.clone(), x.clone()));
        }
    }
    let n = positions.len();
    let mut l1 = RatMatrix::zeros(n, n);
    for (i, (a, x)) in positions.iter().enumerate() {
        for (j, (a2, y)) in positions.iter().enumerate() {
            let count = d
                .index
                .morphisms
                .iter()
                .filter(|f| f.src == *a && f.dst == *a2 && d.arrows[&f.id].object_map[x] == *y)
                .count();
            if count > 0 {
                l1.set(i, j, rat(count as i64, 1));
            }
        }
    }
    Ok((l1, l2))
}

/// The row `[χ(F(a₁)) ... χ(F(aₘ))]` in index-object order.
pub fn chi_diagram_row(d: &Diagram) -> Result<RatMatrix, ConError> {
    d.validate()?;
    let chis: Vec<Rational> = d
        .index
        .objects
        .iter()
        .map(|a| weights::chi_of_matrix(&d.fibers[a].adjacency_unchecked()).expect("square"))
        .collect();
    Ok(RatMatrix::from_rows(vec![chis]))
}

/// Predicted `χ(F)[𝒜]⁺1` versus actual `χ(G(F))`, with the theorem
/// applicability flag: either the index is a poset and every fiber has a
/// weighting, or `[G(F)]` has a coweighting, `[𝒜]` a weighting, and every
/// fiber both a weighting and a coweighting.
pub fn chi_inclusion_exclusion(d: &Diagram) -> Result<IncExcReport, ConError> {
    let total = grothendieck(d)?;
    let index_adj = d.index.adjacency_unchecked();
    let row = chi_diagram_row(d)?;
    let predicted = row
        .mat_mul(&index_adj.pinv().expect("square"))
        .expect("1xm times mxm")
        .mat_mul(&RatMatrix::ones(d.index.object_count()))
        .expect("1xm times mx1")
        .entry_sum();
    let actual = weights::chi(&total.total)?;

    let fibers_weighted = d
        .index
        .objects
        .iter()
        .all(|a| weights::weighting(&d.fibers[a].adjacency_unchecked()).is_some());
    let poset_case = is_poset(&d.index).is_some() && fibers_weighted;
    let coweighting_case = || {
        let total_adj = total.total.adjacency_unchecked();
        weights::coweighting(&total_adj).is_some()
            && weights::weighting(&index_adj).is_some()
            && d.index.objects.iter().all(|a| {
                let adj = d.fibers[a].adjacency_unchecked();
                weights::weighting(&adj).is_some() && weights::coweighting(&adj).is_some()
            })
    };
    let applies = poset_case || coweighting_case();
    Ok(IncExcReport {
        predicted,
        actual,
        applies,
    })
}

/// Diagram whose non-identity arrows are constant functors at a chosen
/// basepoint of each target fiber. Strict whenever no composite of two
/// non-identity index morphisms is an identity (posets and absorbing
/// categories qualify).
pub fn pointed_diagram(
    index: &FinCategory,
    fibers: &[FinCategory],
    basepoints: &[&str],
) -> Diagram {
    assert_eq!(fibers.len(), index.object_count());
    assert_eq!(basepoints.len(), index.object_count());
    let fiber_map: BTreeMap<String, FinCategory> = index
        .objects
        .iter()
        .cloned()
        .zip(fibers.iter().cloned())
        .collect();
    let base: BTreeMap<&str, &str> = index
        .objects
        .iter()
        .map(|o| o.as_str())
        .zip(basepoints.iter().copied())
        .collect();
    let mut arrows = BTreeMap::new();
    for m in &index.morphisms {
        let arrow = if index.identities[&m.src] == m.id {
            FunctorData::identity(&fiber_map[&m.src])
        } else {
            FunctorData::constant(
                &fiber_map[&m.src],
                &fiber_map[&m.dst],
                base[m.dst.as_str()],
            )
        };
        arrows.insert(m.id.clone(), arrow);
    }
    Diagram {
        index: index.clone(),
        fibers: fiber_map,
        arrows,
    }
}

/// The stock inclusion-exclusion counterexample: index with adjacency
/// `[[3,2],[3,2]]`,
/// fibers the terminal category and the two-object indiscrete category.
pub fn ex3_diagram() -> Diagram {
    let index = crate::standard::c1();
    let fibers = vec![crate::standard::terminal(), crate::standard::indiscrete(2)];
    pointed_diagram(&index, &fibers, &["*", "o0"])
}
