//! Ordered simplicial complexes, finite categories and their nerves.
//!
//! Vertices of a simplicial complex are globally ordered integers, simplices
//! are strictly increasing tuples closed under taking subtuples. Finite
//! categories carry an explicit composition table validated by exhaustion.
//! Both serve as the bases over which twisting cochains live.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complexes::{ChainComplex, ComplexError, GradedModule};
use crate::exactlin::Mat;
use crate::scalar::Scalar;
use crate::Q;

#[derive(Debug, Error)]
pub enum SimplicialError {
    #[error("vertex {vertex} out of range (vertex_count = {count})")]
    VertexRange { vertex: usize, count: usize },
    #[error("simplex {0:?} is not strictly increasing")]
    NotIncreasing(Vec<usize>),
    #[error("face {face:?} of simplex {simplex:?} is missing (closure violation)")]
    MissingFace { simplex: Vec<usize>, face: Vec<usize> },
    #[error("face index {index} out of range for a {dim}-simplex")]
    FaceRange { index: usize, dim: usize },
    #[error("complex is not a closed {n}-manifold: {reason}")]
    NotManifold { n: usize, reason: String },
    #[error("complex is not connected in top dimension; fundamental cycle requires a connected manifold")]
    Disconnected,
    #[error("complex is not orientable: no consistent signs exist")]
    NotOrientable,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Error)]
pub enum CategoryError {
    #[error("morphism {id}: unknown object {object}")]
    UnknownObject { id: String, object: String },
    #[error("duplicate morphism id {0}")]
    DuplicateMorphism(String),
    #[error("composition table entry ({g}, {f}): {reason}")]
    BadComposite { g: String, f: String, reason: String },
    #[error("missing composite for composable pair ({g}, {f})")]
    MissingComposite { g: String, f: String },
    #[error("associativity fails on ({h}, {g}, {f})")]
    Associativity { h: String, g: String, f: String },
    #[error("object {0} has no identity morphism")]
    MissingIdentity(String),
    #[error("unknown morphism id {0}")]
    UnknownMorphism(String),
}

// ---------------------------------------------------------------------------
// Ordered simplicial complexes.
// ---------------------------------------------------------------------------

pub type Simplex = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSimplicialComplex {
    vertex_count: usize,
    simplices: BTreeSet<Simplex>,
}

impl OrderedSimplicialComplex {
    /// Builds from the given simplices, checking order and face closure.
    pub fn new(vertex_count: usize, simplices: Vec<Simplex>) -> Result<Self, SimplicialError> {
        let set: BTreeSet<Simplex> = simplices.into_iter().collect();
        for s in &set {
            if !s.windows(2).all(|w| w[0] < w[1]) {
                return Err(SimplicialError::NotIncreasing(s.clone()));
            }
            for &v in s {
                if v >= vertex_count {
                    return Err(SimplicialError::VertexRange { vertex: v, count: vertex_count });
                }
            }
            if s.len() > 1 {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    if !set.contains(&face) {
                        return Err(SimplicialError::MissingFace {
                            simplex: s.clone(),
                            face,
                        });
                    }
                }
            }
        }
        Ok(OrderedSimplicialComplex { vertex_count, simplices: set })
    }

    /// Builds from maximal simplices, generating all faces.
    pub fn from_maximal(vertex_count: usize, maximal: Vec<Simplex>) -> Result<Self, SimplicialError> {
        let mut set = BTreeSet::new();
        let mut stack = maximal;
        while let Some(s) = stack.pop() {
            if !s.windows(2).all(|w| w[0] < w[1]) {
                return Err(SimplicialError::NotIncreasing(s));
            }
            if set.insert(s.clone()) && s.len() > 1 {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    stack.push(face);
                }
            }
        }
        Self::new(vertex_count, set.into_iter().collect())
    }

    pub fn point() -> Self {
        Self::new(1, vec![vec![0]]).unwrap()
    }

    /// Circle: 3 vertices, 3 edges.
    pub fn hollow_triangle() -> Self {
        Self::from_maximal(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    /// 2-sphere: all proper faces of the 3-simplex.
    pub fn sphere_boundary_of_simplex() -> Self {
        Self::from_maximal(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
            .unwrap()
    }

    /// Solid 3-simplex with all faces.
    pub fn solid_tetrahedron() -> Self {
        Self::from_maximal(4, vec![vec![0, 1, 2, 3]]).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices.contains(s)
    }

    /// Simplices of dimension p (p+1 vertices), in lexicographic order.
    pub fn simplices_of_dim(&self, p: usize) -> Vec<Simplex> {
        self.simplices.iter().filter(|s| s.len() == p + 1).cloned().collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    /// Simplicial chain complex with boundary sum of (-1)^i (delete vertex i).
    pub fn chain_complex<T: Scalar>(&self) -> Result<ChainComplex<T>, ComplexError> {
        let dim = match self.dimension() {
            Some(d) => d,
            None => return Ok(ChainComplex::zero()),
        };
        let mut ranks = Vec::new();
        let mut index: Vec<BTreeMap<Simplex, usize>> = Vec::new();
        for p in 0..=dim {
            let list = self.simplices_of_dim(p);
            let map = list.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
            ranks.push(list.len());
            index.push(map);
        }
        let module = GradedModule::from_vec(&ranks);
        let mut boundaries = BTreeMap::new();
        for p in 1..=dim {
            let sources = self.simplices_of_dim(p);
            let mut d = Mat::<T>::zero(ranks[p - 1], sources.len());
            for (j, s) in sources.iter().enumerate() {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let row = index[p - 1][&face];
                    let sign = if i % 2 == 0 { T::one() } else { -T::one() };
                    d[(row, j)] = sign;
                }
            }
            boundaries.insert(p as i64, d);
        }
        ChainComplex::new(module, boundaries)
    }

    /// First barycentric subdivision. New vertices are the simplices of the
    /// original complex, ordered by (dimension, lexicographic tuple), which is
    /// compatible with inclusion; new simplices are flags of inclusions.
    pub fn barycentric_subdivision(&self) -> OrderedSimplicialComplex {
        let verts: Vec<Simplex> = {
            let mut v: Vec<Simplex> = self.simplices.iter().cloned().collect();
            v.sort_by_key(|s| (s.len(), s.clone()));
            v
        };
        let number: BTreeMap<&Simplex, usize> =
            verts.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut simplices: BTreeSet<Simplex> = BTreeSet::new();
        // enumerate flags s_0 < s_1 < ... (strict inclusions)
        fn extend(
            chain: &mut Vec<usize>,
            last: &Simplex,
            all: &BTreeSet<Simplex>,
            number: &BTreeMap<&Simplex, usize>,
            out: &mut BTreeSet<Simplex>,
        ) {
            out.insert(chain.clone());
            for next in all.iter().filter(|t| t.len() > last.len()) {
                if last.iter().all(|v| next.contains(v)) {
                    chain.push(number[next]);
                    extend(chain, next, all, number, out);
                    chain.pop();
                }
            }
        }
        for s in &self.simplices {
            let mut chain = vec![number[s]];
            extend(&mut chain, s, &self.simplices, &number, &mut simplices);
        }
        OrderedSimplicialComplex { vertex_count: verts.len(), simplices }
    }

    /// A cycle in top dimension with all coefficients +-1, one per
    /// n-simplex. Requires a connected closed orientable triangulated
    /// n-manifold; the sign convention gives +1 to the lexicographically
    /// first n-simplex.
    pub fn fundamental_cycle(&self, n: usize) -> Result<Vec<(Simplex, i64)>, SimplicialError> {
        let top = self.simplices_of_dim(n);
        if top.is_empty() {
            return Err(SimplicialError::NotManifold {
                n,
                reason: "no simplices in top dimension".into(),
            });
        }
        if self.dimension() != Some(n) {
            return Err(SimplicialError::NotManifold {
                n,
                reason: "complex has simplices above the stated dimension".into(),
            });
        }
        // every (n-1)-simplex must bound exactly two n-simplices
        let mut coface: BTreeMap<Simplex, Vec<(usize, i64)>> = BTreeMap::new();
        for (j, s) in top.iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                coface.entry(face).or_default().push((j, sign));
            }
        }
        for (face, cofs) in &coface {
            if cofs.len() != 2 {
                return Err(SimplicialError::NotManifold {
                    n,
                    reason: format!("face {:?} lies in {} top simplices", face, cofs.len()),
                });
            }
        }
        // propagate signs across shared faces
        let mut eps: Vec<Option<i64>> = vec![None; top.len()];
        eps[0] = Some(1);
        let mut queue = vec![0usize];
        while let Some(j) = queue.pop() {
            let ej = eps[j].unwrap();
            for i in 0..top[j].len() {
                let mut face = top[j].clone();
                face.remove(i);
                let cofs = &coface[&face];
                let (other, s_other) = if cofs[0].0 == j { cofs[1] } else { cofs[0] };
                let s_this = if cofs[0].0 == j { cofs[0].1 } else { cofs[1].1 };
                // cancellation: eps_j * s_this + eps_other * s_other = 0
                let needed = -ej * s_this * s_other;
                match eps[other] {
                    None => {
                        eps[other] = Some(needed);
                        queue.push(other);
                    }
                    Some(e) if e != needed => return Err(SimplicialError::NotOrientable),
                    _ => {}
                }
            }
        }
        if eps.iter().any(Option::is_none) {
            return Err(SimplicialError::Disconnected);
        }
        let cycle: Vec<(Simplex, i64)> =
            top.into_iter().zip(eps.into_iter().map(Option::unwrap)).collect();
        // verify the boundary vanishes exactly
        let complex: ChainComplex<Q> = self.chain_complex()?;
        let mut vec = vec![Q::from_integer(0.into()); complex.rank(n as i64)];
        for (idx, (_, e)) in cycle.iter().enumerate() {
            vec[idx] = Q::from_integer((*e).into());
        }
        let bd = complex.boundary(n as i64).mul_vec(&vec).expect("shape");
        if bd.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return Err(SimplicialError::NotOrientable);
        }
        Ok(cycle)
    }
}

/// Front p-face: first p+1 vertices.
pub fn front_face(s: &[usize], p: usize) -> Result<Simplex, SimplicialError> {
    if p + 1 > s.len() {
        return Err(SimplicialError::FaceRange { index: p, dim: s.len() - 1 });
    }
    Ok(s[..=p].to_vec())
}

/// Back q-face: last q+1 vertices.
pub fn back_face(s: &[usize], q: usize) -> Result<Simplex, SimplicialError> {
    if q + 1 > s.len() {
        return Err(SimplicialError::FaceRange { index: q, dim: s.len() - 1 });
    }
    Ok(s[s.len() - 1 - q..].to_vec())
}

// ---------------------------------------------------------------------------
// Finite categories.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// A finite category: explicit objects, morphisms and composition table.
/// `compose(g, f)` is g after f. Identities are detected from the table.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    compose: BTreeMap<(String, String), String>,
    identities: BTreeMap<String, String>, // object -> identity morphism id
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: BTreeMap<(String, String), String>,
    ) -> Result<Self, CategoryError> {
        let objset: BTreeSet<&String> = objects.iter().collect();
        let mut by_id: BTreeMap<&String, &Morphism> = BTreeMap::new();
        for m in &morphisms {
            if by_id.insert(&m.id, m).is_some() {
                return Err(CategoryError::DuplicateMorphism(m.id.clone()));
            }
            if !objset.contains(&m.src) {
                return Err(CategoryError::UnknownObject { id: m.id.clone(), object: m.src.clone() });
            }
            if !objset.contains(&m.dst) {
                return Err(CategoryError::UnknownObject { id: m.id.clone(), object: m.dst.clone() });
            }
        }
        // table sanity: defined exactly on composable pairs, endpoints line up
        for ((g, f), gf) in &compose {
            let (mg, mf) = match (by_id.get(g), by_id.get(f)) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(CategoryError::BadComposite {
                        g: g.clone(),
                        f: f.clone(),
                        reason: "unknown morphism id".into(),
                    })
                }
            };
            if mf.dst != mg.src {
                return Err(CategoryError::BadComposite {
                    g: g.clone(),
                    f: f.clone(),
                    reason: "not composable".into(),
                });
            }
            let Some(mgf) = by_id.get(gf) else {
                return Err(CategoryError::BadComposite {
                    g: g.clone(),
                    f: f.clone(),
                    reason: format!("unknown composite id {gf}"),
                });
            };
            if mgf.src != mf.src || mgf.dst != mg.dst {
                return Err(CategoryError::BadComposite {
                    g: g.clone(),
                    f: f.clone(),
                    reason: "composite endpoints wrong".into(),
                });
            }
        }
        for g in &morphisms {
            for f in &morphisms {
                if f.dst == g.src && !compose.contains_key(&(g.id.clone(), f.id.clone())) {
                    return Err(CategoryError::MissingComposite {
                        g: g.id.clone(),
                        f: f.id.clone(),
                    });
                }
            }
        }
        // associativity by exhaustion
        for h in &morphisms {
            for g in &morphisms {
                if g.dst != h.src {
                    continue;
                }
                for f in &morphisms {
                    if f.dst != g.src {
                        continue;
                    }
                    let hg = &compose[&(h.id.clone(), g.id.clone())];
                    let gf = &compose[&(g.id.clone(), f.id.clone())];
                    let left = &compose[&(hg.clone(), f.id.clone())];
                    let right = &compose[&(h.id.clone(), gf.clone())];
                    if left != right {
                        return Err(CategoryError::Associativity {
                            h: h.id.clone(),
                            g: g.id.clone(),
                            f: f.id.clone(),
                        });
                    }
                }
            }
        }
        // identities: for each object find an endomorphism neutral on both sides
        let mut identities = BTreeMap::new();
        for x in &objects {
            let mut found = None;
            'search: for e in &morphisms {
                if &e.src != x || &e.dst != x {
                    continue;
                }
                for f in &morphisms {
                    if f.dst == *x && compose[&(e.id.clone(), f.id.clone())] != f.id {
                        continue 'search;
                    }
                    if f.src == *x && compose[&(f.id.clone(), e.id.clone())] != f.id {
                        continue 'search;
                    }
                }
                found = Some(e.id.clone());
                break;
            }
            match found {
                Some(id) => {
                    identities.insert(x.clone(), id);
                }
                None => return Err(CategoryError::MissingIdentity(x.clone())),
            }
        }
        Ok(FiniteCategory { objects, morphisms, compose, identities })
    }

    /// One object, one identity.
    pub fn point() -> Self {
        Self::new(
            vec!["*".into()],
            vec![Morphism { id: "id".into(), src: "*".into(), dst: "*".into() }],
            [(("id".to_string(), "id".to_string()), "id".to_string())].into_iter().collect(),
        )
        .unwrap()
    }

    /// The category I: objects 0, 1 and one nonidentity arrow u: 0 -> 1.
    pub fn interval() -> Self {
        let objects = vec!["0".to_string(), "1".to_string()];
        let morphisms = vec![
            Morphism { id: "id0".into(), src: "0".into(), dst: "0".into() },
            Morphism { id: "id1".into(), src: "1".into(), dst: "1".into() },
            Morphism { id: "u".into(), src: "0".into(), dst: "1".into() },
        ];
        let mut compose = BTreeMap::new();
        compose.insert(("id0".to_string(), "id0".to_string()), "id0".to_string());
        compose.insert(("id1".to_string(), "id1".to_string()), "id1".to_string());
        compose.insert(("u".to_string(), "id0".to_string()), "u".to_string());
        compose.insert(("id1".to_string(), "u".to_string()), "u".to_string());
        Self::new(objects, morphisms, compose).unwrap()
    }

    /// The poset [k] as a category: objects 0..=k, one arrow j -> i for each
    /// j >= i, so nondegenerate nerve chains are strictly increasing tuples.
    pub fn chain_poset(k: usize) -> Self {
        let objects: Vec<String> = (0..=k).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        for j in 0..=k {
            for i in 0..=j {
                morphisms.push(Morphism {
                    id: format!("m{j}to{i}"),
                    src: j.to_string(),
                    dst: i.to_string(),
                });
            }
        }
        let mut compose = BTreeMap::new();
        for j in 0..=k {
            for i in 0..=j {
                for l in 0..=i {
                    compose.insert(
                        (format!("m{i}to{l}"), format!("m{j}to{i}")),
                        format!("m{j}to{l}"),
                    );
                }
            }
        }
        Self::new(objects, morphisms, compose).unwrap()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, id: &str) -> Result<&Morphism, CategoryError> {
        self.morphisms
            .iter()
            .find(|m| m.id == id)
            .ok_or_else(|| CategoryError::UnknownMorphism(id.to_string()))
    }

    pub fn identity_of(&self, object: &str) -> &str {
        &self.identities[object]
    }

    pub fn is_identity(&self, id: &str) -> bool {
        self.identities.values().any(|v| v == id)
    }

    /// g after f.
    pub fn composite(&self, g: &str, f: &str) -> Option<&str> {
        self.compose.get(&(g.to_string(), f.to_string())).map(String::as_str)
    }

    /// Same objects, arrows reversed, composition transposed.
    pub fn opposite(&self) -> Self {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism { id: m.id.clone(), src: m.dst.clone(), dst: m.src.clone() })
            .collect();
        let compose = self
            .compose
            .iter()
            .map(|((g, f), gf)| ((f.clone(), g.clone()), gf.clone()))
            .collect();
        FiniteCategory {
            objects: self.objects.clone(),
            morphisms,
            compose,
            identities: self.identities.clone(),
        }
    }

    /// Product with the interval category I; object and morphism counts double/triple.
    pub fn product_with_interval(&self) -> Self {
        let interval = Self::interval();
        let mut objects = Vec::new();
        for x in &self.objects {
            for e in interval.objects() {
                objects.push(format!("{x}|{e}"));
            }
        }
        let mut morphisms = Vec::new();
        for m in &self.morphisms {
            for w in interval.morphisms() {
                morphisms.push(Morphism {
                    id: format!("{}|{}", m.id, w.id),
                    src: format!("{}|{}", m.src, w.src),
                    dst: format!("{}|{}", m.dst, w.dst),
                });
            }
        }
        let mut compose = BTreeMap::new();
        for (m2, w2) in self.morphisms.iter().flat_map(|m| {
            interval.morphisms().iter().map(move |w| (m, w))
        }) {
            for (m1, w1) in self
                .morphisms
                .iter()
                .flat_map(|m| interval.morphisms().iter().map(move |w| (m, w)))
            {
                if m1.dst == m2.src && w1.dst == w2.src {
                    let mc = self.composite(&m2.id, &m1.id).unwrap().to_string();
                    let wc = interval.composite(&w2.id, &w1.id).unwrap().to_string();
                    compose.insert(
                        (format!("{}|{}", m2.id, w2.id), format!("{}|{}", m1.id, w1.id)),
                        format!("{mc}|{wc}"),
                    );
                }
            }
        }
        Self::new(objects, morphisms, compose).expect("product of valid categories is valid")
    }

    /// All composable chains (f_1, ..., f_p) with f_i: X_i -> X_{i-1}, up to
    /// length `up_to`, grouped by p. Chains containing identities are
    /// degenerate and flagged. p = 0 chains are objects.
    pub fn nerve(&self, up_to: usize) -> Vec<Vec<NerveSimplex>> {
        let mut out: Vec<Vec<NerveSimplex>> = Vec::new();
        out.push(
            self.objects
                .iter()
                .map(|x| NerveSimplex { morphism_ids: Vec::new(), objects: vec![x.clone()], degenerate: false })
                .collect(),
        );
        for p in 1..=up_to {
            let mut level = Vec::new();
            for prev in &out[p - 1] {
                // extend X_0 <- ... <- X_{p-1} by f_p: X_p -> X_{p-1}
                let tail = prev.objects.last().unwrap();
                for m in &self.morphisms {
                    if &m.dst == tail {
                        let mut ids = prev.morphism_ids.clone();
                        ids.push(m.id.clone());
                        let mut objs = prev.objects.clone();
                        objs.push(m.src.clone());
                        let degenerate =
                            prev.degenerate || self.is_identity(&m.id);
                        level.push(NerveSimplex { morphism_ids: ids, objects: objs, degenerate });
                    }
                }
            }
            out.push(level);
        }
        out
    }

    /// Nondegenerate chains of length p.
    pub fn nondegenerate_chains(&self, p: usize) -> Vec<NerveSimplex> {
        self.nerve(p)
            .pop()
            .unwrap_or_default()
            .into_iter()
            .filter(|s| !s.degenerate)
            .collect()
    }

    /// Length of the longest nondegenerate chain, capped at `cap`; returns
    /// (dimension, truncated?).
    pub fn nerve_dimension(&self, cap: usize) -> (usize, bool) {
        let mut dim = 0;
        for p in 1..=cap {
            if self.nondegenerate_chains(p).is_empty() {
                return (dim, false);
            }
            dim = p;
        }
        (dim, true)
    }
}

/// A p-chain X_0 <- X_1 <- ... <- X_p in a category, stored as the morphism
/// ids (f_1, ..., f_p) together with the object trail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NerveSimplex {
    pub morphism_ids: Vec<String>,
    pub objects: Vec<String>,
    pub degenerate: bool,
}

impl NerveSimplex {
    pub fn dim(&self) -> usize {
        self.morphism_ids.len()
    }

    pub fn key(&self) -> String {
        self.morphism_ids.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::HomologyGroup;

    #[test]
    fn closure_violation_rejected() {
        assert!(matches!(
            OrderedSimplicialComplex::new(3, vec![vec![0, 1]]),
            Err(SimplicialError::MissingFace { .. })
        ));
        assert!(OrderedSimplicialComplex::new(3, vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn point_homology() {
        let k = OrderedSimplicialComplex::point();
        let c: ChainComplex<Q> = k.chain_complex().unwrap();
        let h = c.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup::free(1)));
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn sphere_homology() {
        let k = OrderedSimplicialComplex::sphere_boundary_of_simplex();
        assert_eq!(k.simplices_of_dim(0).len(), 4);
        assert_eq!(k.simplices_of_dim(1).len(), 6);
        assert_eq!(k.simplices_of_dim(2).len(), 4);
        let c: ChainComplex<Q> = k.chain_complex().unwrap();
        let h = c.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup::free(1)));
        assert_eq!(h.get(&1), None);
        assert_eq!(h.get(&2), Some(&HomologyGroup::free(1)));
    }

    #[test]
    fn hollow_triangle_homology() {
        let k = OrderedSimplicialComplex::hollow_triangle();
        let c: ChainComplex<Q> = k.chain_complex().unwrap();
        let h = c.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup::free(1)));
        assert_eq!(h.get(&1), Some(&HomologyGroup::free(1)));
    }

    #[test]
    fn front_back_faces() {
        assert_eq!(front_face(&[0, 1, 2], 1).unwrap(), vec![0, 1]);
        assert_eq!(back_face(&[0, 1, 2], 1).unwrap(), vec![1, 2]);
        assert_eq!(front_face(&[0, 1, 2], 2).unwrap(), vec![0, 1, 2]);
        assert!(front_face(&[0, 1], 2).is_err());
        // shared middle vertex when j + k = dim s
        let s = [0, 2, 5, 7];
        for j in 0..=3usize {
            let k = 3 - j;
            let f = front_face(&s, j).unwrap();
            let b = back_face(&s, k).unwrap();
            assert_eq!(f.last(), b.first());
        }
    }

    #[test]
    fn chain_complex_d_squared_on_random_2d() {
        // random 2-dimensional complexes: all subsets of the triangles on 5 vertices
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let mut maximal = Vec::new();
            for a in 0..5usize {
                for b in a + 1..5 {
                    for c in b + 1..5 {
                        if rng.gen_bool(0.4) {
                            maximal.push(vec![a, b, c]);
                        }
                    }
                }
            }
            if maximal.is_empty() {
                continue;
            }
            let k = OrderedSimplicialComplex::from_maximal(5, maximal).unwrap();
            // construction validates d^2 = 0
            let _: ChainComplex<Q> = k.chain_complex().unwrap();
        }
    }

    #[test]
    fn nerve_point_category() {
        let c = FiniteCategory::point();
        let nerve = c.nerve(2);
        assert_eq!(nerve[0].len(), 1);
        assert!(nerve[1].iter().all(|s| s.degenerate));
        assert!(nerve[2].iter().all(|s| s.degenerate));
    }

    #[test]
    fn nerve_interval() {
        let c = FiniteCategory::interval();
        let nd1 = c.nondegenerate_chains(1);
        assert_eq!(nd1.len(), 1);
        assert_eq!(nd1[0].morphism_ids, vec!["u".to_string()]);
        assert!(c.nondegenerate_chains(2).is_empty());
    }

    #[test]
    fn nerve_chain_poset_2() {
        let c = FiniteCategory::chain_poset(2);
        assert_eq!(c.nondegenerate_chains(1).len(), 3);
        let nd2 = c.nondegenerate_chains(2);
        assert_eq!(nd2.len(), 1);
        // the unique 2-chain is 0 <- 1 <- 2
        assert_eq!(nd2[0].objects, vec!["0", "1", "2"]);
        assert_eq!(c.nerve_dimension(10), (2, false));
    }

    /// Path-count oracle: nondegenerate p-chains of a poset category match
    /// strictly increasing paths in the order relation.
    #[test]
    fn nerve_counts_match_path_counts() {
        for k in 1..=3usize {
            let c = FiniteCategory::chain_poset(k);
            // count strictly increasing sequences of length p+1 in 0..=k
            for p in 0..=k {
                let expected = binomial(k + 1, p + 1);
                assert_eq!(c.nondegenerate_chains(p).len(), expected, "k={k} p={p}");
            }
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn product_with_interval_counts() {
        let p = FiniteCategory::point().product_with_interval();
        assert_eq!(p.objects().len(), 2);
        assert_eq!(p.morphisms().len(), 3);

        let ii = FiniteCategory::interval().product_with_interval();
        assert_eq!(ii.objects().len(), 4);
        assert_eq!(ii.morphisms().len(), 9);

        let c2 = FiniteCategory::chain_poset(2).product_with_interval();
        assert_eq!(c2.objects().len(), 2 * 3);
    }

    #[test]
    fn opposite_involution() {
        let c = FiniteCategory::chain_poset(2);
        let op = c.opposite();
        assert_eq!(op.morphism("m2to0").unwrap().src, "0");
        let opop = op.opposite();
        assert_eq!(opop.morphism("m2to0").unwrap().src, "2");
    }

    #[test]
    fn fundamental_cycle_circle() {
        let k = OrderedSimplicialComplex::hollow_triangle();
        let z = k.fundamental_cycle(1).unwrap();
        assert_eq!(z.len(), 3);
        assert!(z.iter().all(|(_, e)| e.abs() == 1));
        assert_eq!(z[0].1, 1);
    }

    #[test]
    fn fundamental_cycle_sphere() {
        let k = OrderedSimplicialComplex::sphere_boundary_of_simplex();
        let z = k.fundamental_cycle(2).unwrap();
        assert_eq!(z.len(), 4);
        // alternating sign pattern for the standard orientation of the boundary
        let signs: Vec<i64> = z.iter().map(|(_, e)| *e).collect();
        assert!(signs.iter().all(|e| e.abs() == 1));
    }

    #[test]
    fn fundamental_cycle_rejects_disjoint_circles() {
        let k = OrderedSimplicialComplex::from_maximal(
            6,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![3, 4], vec![3, 5], vec![4, 5]],
        )
        .unwrap();
        assert!(matches!(k.fundamental_cycle(1), Err(SimplicialError::Disconnected)));
    }

    #[test]
    fn fundamental_cycle_rejects_non_manifold() {
        // three edges sharing a vertex: vertex 0 in three edges? use a path: endpoints lie in one edge
        let k = OrderedSimplicialComplex::from_maximal(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(matches!(k.fundamental_cycle(1), Err(SimplicialError::NotManifold { .. })));
    }

    #[test]
    fn barycentric_subdivision_circle() {
        let k = OrderedSimplicialComplex::hollow_triangle();
        let sd = k.barycentric_subdivision();
        assert_eq!(sd.vertex_count(), 6); // 3 vertices + 3 edges
        assert_eq!(sd.simplices_of_dim(1).len(), 6);
        let c: ChainComplex<Q> = sd.chain_complex().unwrap();
        let h = c.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup::free(1)));
        assert_eq!(h.get(&1), Some(&HomologyGroup::free(1)));
    }

    #[test]
    fn barycentric_subdivision_sphere() {
        let k = OrderedSimplicialComplex::sphere_boundary_of_simplex();
        let sd = k.barycentric_subdivision();
        let c: ChainComplex<Q> = sd.chain_complex().unwrap();
        let h = c.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup::free(1)));
        assert_eq!(h.get(&2), Some(&HomologyGroup::free(1)));
    }
}
