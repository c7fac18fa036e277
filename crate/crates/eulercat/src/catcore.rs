//! Finite categories as explicit data: objects, morphisms, identity
//! assignment, and a total composition table. The validator exhaustively
//! checks the category axioms; adjacency and functor matrices feed the
//! linear-algebra layer.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::ratmat::RatMatrix;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Morphism {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// A finite category. Object order is the stored order; all matrices use it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    /// object id -> identity morphism id
    pub identities: BTreeMap<String, String>,
    /// (g, f) -> g∘f, for every composable pair (dst(f) = src(g))
    pub composition: BTreeMap<(String, String), String>,
}

/// Violated axioms with witnesses. Empty report = valid category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Error, Clone)]
pub enum CatError {
    #[error("invalid category:\n{0}")]
    InvalidCategory(ValidationReport),
    #[error("invalid functor:\n{0}")]
    InvalidFunctor(ValidationReport),
    #[error("functor source/target mismatch: {0}")]
    SourceTargetMismatch(String),
}

impl FinCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_index(&self, obj: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == obj)
    }

    pub fn morphism(&self, id: &str) -> Option<&Morphism> {
        self.morphisms.iter().find(|m| m.id == id)
    }

    /// Morphism ids in `Hom(src, dst)`, in stored order.
    pub fn hom(&self, src: &str, dst: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|m| m.src == src && m.dst == dst)
            .map(|m| m.id.as_str())
            .collect()
    }

    pub fn compose(&self, g: &str, f: &str) -> Option<&str> {
        self.composition
            .get(&(g.to_string(), f.to_string()))
            .map(|s| s.as_str())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut objects = BTreeSet::new();
        for o in &self.objects {
            if !objects.insert(o.clone()) {
                report.violations.push(format!("duplicate object id {o:?}"));
            }
        }
        let mut by_id: BTreeMap<&str, &Morphism> = BTreeMap::new();
        for m in &self.morphisms {
            if by_id.insert(&m.id, m).is_some() {
                report.violations.push(format!("duplicate morphism id {:?}", m.id));
            }
            if !objects.contains(&m.src) {
                report
                    .violations
                    .push(format!("morphism {:?} has unknown source {:?}", m.id, m.src));
            }
            if !objects.contains(&m.dst) {
                report
                    .violations
                    .push(format!("morphism {:?} has unknown target {:?}", m.id, m.dst));
            }
        }
        if !report.is_valid() {
            // Endpoint data is broken; the remaining checks would cascade.
            return report;
        }

        for o in &self.objects {
            match self.identities.get(o) {
                None => report.violations.push(format!("object {o:?} has no identity")),
                Some(id) => match by_id.get(id.as_str()) {
                    None => report
                        .violations
                        .push(format!("identity of {o:?} is unknown morphism {id:?}")),
                    Some(m) => {
                        if m.src != *o || m.dst != *o {
                            report.violations.push(format!(
                                "identity {id:?} of {o:?} has endpoints {:?} -> {:?}",
                                m.src, m.dst
                            ));
                        }
                    }
                },
            }
        }
        for (o, _) in &self.identities {
            if !objects.contains(o) {
                report
                    .violations
                    .push(format!("identity assigned to unknown object {o:?}"));
            }
        }

        // Composition table: defined exactly on composable pairs, endpoints respected.
        for ((g, f), gf) in &self.composition {
            let (Some(mg), Some(mf)) = (by_id.get(g.as_str()), by_id.get(f.as_str())) else {
                report
                    .violations
                    .push(format!("composition entry ({g:?},{f:?}) names unknown morphisms"));
                continue;
            };
            if mf.dst != mg.src {
                report.violations.push(format!(
                    "composition entry ({g:?},{f:?}) is not composable: dst(f)={:?}, src(g)={:?}",
                    mf.dst, mg.src
                ));
                continue;
            }
            match by_id.get(gf.as_str()) {
                None => report
                    .violations
                    .push(format!("composite {gf:?} of ({g:?},{f:?}) is unknown")),
                Some(mgf) => {
                    if mgf.src != mf.src || mgf.dst != mg.dst {
                        report.violations.push(format!(
                            "composite {gf:?} of ({g:?},{f:?}) has endpoints {:?} -> {:?}, expected {:?} -> {:?}",
                            mgf.src, mgf.dst, mf.src, mg.dst
                        ));
                    }
                }
            }
        }
        for f in &self.morphisms {
            for g in &self.morphisms {
                if f.dst == g.src && self.compose(&g.id, &f.id).is_none() {
                    report
                        .violations
                        .push(format!("composition not total at ({:?},{:?})", g.id, f.id));
                }
            }
        }
        if !report.is_valid() {
            return report;
        }

        // Identity laws.
        for f in &self.morphisms {
            let id_src = &self.identities[&f.src];
            let id_dst = &self.identities[&f.dst];
            if self.compose(&f.id, id_src) != Some(f.id.as_str()) {
                report
                    .violations
                    .push(format!("right identity law fails for {:?}", f.id));
            }
            if self.compose(id_dst, &f.id) != Some(f.id.as_str()) {
                report
                    .violations
                    .push(format!("left identity law fails for {:?}", f.id));
            }
        }

        // Associativity over all composable triples.
        for f in &self.morphisms {
            for g in self.morphisms.iter().filter(|g| g.src == f.dst) {
                let gf = self.compose(&g.id, &f.id).unwrap().to_string();
                for h in self.morphisms.iter().filter(|h| h.src == g.dst) {
                    let hg = self.compose(&h.id, &g.id).unwrap();
                    let left = self.compose(&h.id, &gf);
                    let right = self.compose(hg, &f.id);
                    if left != right {
                        report.violations.push(format!(
                            "associativity fails at ({:?},{:?},{:?}): {:?} != {:?}",
                            h.id, g.id, f.id, left, right
                        ));
                    }
                }
            }
        }
        report
    }

    /// Adjacency matrix: entry (i,j) counts morphisms from object i to object j.
    pub fn adjacency(&self) -> Result<RatMatrix, CatError> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(CatError::InvalidCategory(report));
        }
        Ok(self.adjacency_unchecked())
    }

    pub(crate) fn adjacency_unchecked(&self) -> RatMatrix {
        let n = self.objects.len();
        let index: BTreeMap<&str, usize> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.as_str(), i))
            .collect();
        let mut m = RatMatrix::zeros(n, n);
        for mor in &self.morphisms {
            let i = index[mor.src.as_str()];
            let j = index[mor.dst.as_str()];
            let v = m.get(i, j) + crate::ratmat::rat(1, 1);
            m.set(i, j, v);
        }
        m
    }

    /// Same category with objects listed in permuted order; `perm[i]` is the
    /// position in the old order of the object placed at position `i`.
    pub fn permute_objects(&self, perm: &[usize]) -> FinCategory {
        assert_eq!(perm.len(), self.objects.len());
        FinCategory {
            objects: perm.iter().map(|&i| self.objects[i].clone()).collect(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            composition: self.composition.clone(),
        }
    }
}

/// Object and morphism maps of a functor. Source and target categories are
/// supplied at the call sites; the maps are plain id translations.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FunctorData {
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

impl FunctorData {
    pub fn identity(c: &FinCategory) -> FunctorData {
        FunctorData {
            object_map: c.objects.iter().map(|o| (o.clone(), o.clone())).collect(),
            morphism_map: c
                .morphisms
                .iter()
                .map(|m| (m.id.clone(), m.id.clone()))
                .collect(),
        }
    }

    /// Constant functor at `target_obj`: every object to `target_obj`, every
    /// morphism to its identity.
    pub fn constant(src: &FinCategory, dst: &FinCategory, target_obj: &str) -> FunctorData {
        let id = dst.identities[target_obj].clone();
        FunctorData {
            object_map: src
                .objects
                .iter()
                .map(|o| (o.clone(), target_obj.to_string()))
                .collect(),
            morphism_map: src
                .morphisms
                .iter()
                .map(|m| (m.id.clone(), id.clone()))
                .collect(),
        }
    }

    /// `second ∘ first` where `first: a -> b` and `second: b -> c`.
    pub fn compose(first: &FunctorData, second: &FunctorData) -> FunctorData {
        FunctorData {
            object_map: first
                .object_map
                .iter()
                .map(|(o, mid)| (o.clone(), second.object_map[mid].clone()))
                .collect(),
            morphism_map: first
                .morphism_map
                .iter()
                .map(|(m, mid)| (m.clone(), second.morphism_map[mid].clone()))
                .collect(),
        }
    }

    /// Checks strict functoriality against the given source and target.
    pub fn validate(&self, src: &FinCategory, dst: &FinCategory) -> ValidationReport {
        let mut report = ValidationReport::default();
        for o in &src.objects {
            match self.object_map.get(o) {
                None => report.violations.push(format!("object {o:?} is not mapped")),
                Some(t) => {
                    if dst.object_index(t).is_none() {
                        report
                            .violations
                            .push(format!("object {o:?} maps to unknown object {t:?}"));
                    }
                }
            }
        }
        for m in &src.morphisms {
            match self.morphism_map.get(&m.id) {
                None => report
                    .violations
                    .push(format!("morphism {:?} is not mapped", m.id)),
                Some(t) => match dst.morphism(t) {
                    None => report
                        .violations
                        .push(format!("morphism {:?} maps to unknown morphism {t:?}", m.id)),
                    Some(tm) => {
                        let want_src = self.object_map.get(&m.src);
                        let want_dst = self.object_map.get(&m.dst);
                        if want_src != Some(&tm.src) || want_dst != Some(&tm.dst) {
                            report.violations.push(format!(
                                "morphism {:?} does not preserve endpoints: image {t:?} is {:?} -> {:?}",
                                m.id, tm.src, tm.dst
                            ));
                        }
                    }
                },
            }
        }
        if !report.is_valid() {
            return report;
        }
        for (o, id) in &src.identities {
            let image = &self.morphism_map[id];
            let expected = &dst.identities[&self.object_map[o]];
            if image != expected {
                report.violations.push(format!(
                    "identity of {o:?} maps to {image:?}, expected {expected:?}"
                ));
            }
        }
        for ((g, f), gf) in &src.composition {
            let image = dst.compose(&self.morphism_map[g], &self.morphism_map[f]);
            if image != Some(self.morphism_map[gf].as_str()) {
                report.violations.push(format!(
                    "composition not preserved at ({g:?},{f:?}): image composite {:?}, expected {:?}",
                    image, self.morphism_map[gf]
                ));
            }
        }
        report
    }

    /// `|dst| x |src|` 0/1 matrix with one 1 per column, marking object images.
    pub fn matrix(&self, src: &FinCategory, dst: &FinCategory) -> Result<RatMatrix, CatError> {
        let report = self.validate(src, dst);
        if !report.is_valid() {
            return Err(CatError::InvalidFunctor(report));
        }
        let mut m = RatMatrix::zeros(dst.object_count(), src.object_count());
        for (j, o) in src.objects.iter().enumerate() {
            let i = dst.object_index(&self.object_map[o]).unwrap();
            m.set(i, j, crate::ratmat::rat(1, 1));
        }
        Ok(m)
    }
}

/// Matrix-level adjunction check: `[𝒜][R] = [L]ᵀ[ℬ]`, i.e. hom-cardinality
/// compatibility `|𝒜(a, Rb)| = |ℬ(La, b)|` for all a, b. Necessary for
/// `L ⊣ R`, and the identity the χ-transport theorem consumes.
pub fn check_adjunction_matrices(
    a: &FinCategory,
    b: &FinCategory,
    l: &FunctorData,
    r: &FunctorData,
) -> Result<bool, CatError> {
    let adj_a = a.adjacency()?;
    let adj_b = b.adjacency()?;
    let l_mat = l.matrix(a, b)?;
    let r_mat = r.matrix(b, a)?;
    let left = adj_a
        .mat_mul(&r_mat)
        .map_err(|e| CatError::SourceTargetMismatch(e.to_string()))?;
    let right = l_mat
        .transpose()
        .mat_mul(&adj_b)
        .map_err(|e| CatError::SourceTargetMismatch(e.to_string()))?;
    Ok(left == right)
}
