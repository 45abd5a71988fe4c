//! Graded free modules, chain complexes, graded maps and their homology.
//!
//! Degrees are arbitrary integers. A chain complex stores one boundary
//! matrix per degree n, of shape ranks(n-1) x ranks(n), and d*d = 0 is
//! verified exactly at construction. Homology over the rationals is rank
//! arithmetic; over the integers it goes through Smith normal form and also
//! reports torsion coefficients.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactlin::{snf, Mat, MatError};
use crate::scalar::{FieldScalar, Scalar};
use crate::{Q, Z};

pub type Degree = i64;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("boundary at degree {degree} has shape {got}, expected {expected}")]
    BoundaryShape { degree: Degree, got: String, expected: String },
    #[error("d^2 != 0 at degree {degree}")]
    NotAComplex { degree: Degree },
    #[error("graded map component at degree {degree} has shape {got}, expected {expected}")]
    ComponentShape { degree: Degree, got: String, expected: String },
    #[error("graded map endpoints do not match: {0}")]
    Endpoints(String),
    #[error("map is not a chain map (m1 residual nonzero at degree {degree})")]
    NotChainMap { degree: Degree },
    #[error("complex is not integral: boundary at degree {degree}, entry ({row},{col})")]
    NotIntegral { degree: Degree, row: usize, col: usize },
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// Finitely supported assignment of ranks to integer degrees.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedModule {
    ranks: BTreeMap<Degree, usize>,
}

impl GradedModule {
    pub fn new(ranks: BTreeMap<Degree, usize>) -> Self {
        let ranks = ranks.into_iter().filter(|(_, r)| *r > 0).collect();
        GradedModule { ranks }
    }

    pub fn from_ranks(pairs: &[(Degree, usize)]) -> Self {
        Self::new(pairs.iter().cloned().collect())
    }

    /// Ranks r_0, r_1, ... in consecutive degrees starting at 0.
    pub fn from_vec(ranks: &[usize]) -> Self {
        Self::new(ranks.iter().enumerate().map(|(i, &r)| (i as Degree, r)).collect())
    }

    pub fn rank(&self, degree: Degree) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn degrees(&self) -> impl Iterator<Item = Degree> + '_ {
        self.ranks.keys().copied()
    }

    pub fn ranks(&self) -> &BTreeMap<Degree, usize> {
        &self.ranks
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn min_degree(&self) -> Option<Degree> {
        self.ranks.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<Degree> {
        self.ranks.keys().next_back().copied()
    }

    pub fn is_nonnegatively_graded(&self) -> bool {
        self.min_degree().map_or(true, |d| d >= 0)
    }

    /// Degrees negated, as under dualization.
    pub fn negate_degrees(&self) -> Self {
        Self::new(self.ranks.iter().map(|(&d, &r)| (-d, r)).collect())
    }

    pub fn shift(&self, by: Degree) -> Self {
        Self::new(self.ranks.iter().map(|(&d, &r)| (d + by, r)).collect())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut ranks = self.ranks.clone();
        for (&d, &r) in &other.ranks {
            *ranks.entry(d).or_insert(0) += r;
        }
        Self::new(ranks)
    }
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedModule{:?}", self.ranks)
    }
}

impl<T: Scalar> fmt::Debug for ChainComplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainComplex")
            .field("module", &self.module)
            .field("boundaries", &self.boundaries)
            .finish()
    }
}

/// Chain complex of free modules with exact boundary matrices.
#[derive(Clone, PartialEq)]
pub struct ChainComplex<T> {
    module: GradedModule,
    boundaries: BTreeMap<Degree, Mat<T>>,
}

impl<T: Scalar> ChainComplex<T> {
    /// Validates shapes and d*d = 0 exactly.
    pub fn new(
        module: GradedModule,
        boundaries: BTreeMap<Degree, Mat<T>>,
    ) -> Result<Self, ComplexError> {
        let boundaries: BTreeMap<Degree, Mat<T>> =
            boundaries.into_iter().filter(|(_, m)| m.rows() > 0 && m.cols() > 0).collect();
        for (&n, d) in &boundaries {
            let expected = (module.rank(n - 1), module.rank(n));
            if (d.rows(), d.cols()) != expected {
                return Err(ComplexError::BoundaryShape {
                    degree: n,
                    got: format!("{}x{}", d.rows(), d.cols()),
                    expected: format!("{}x{}", expected.0, expected.1),
                });
            }
        }
        let c = ChainComplex { module, boundaries };
        c.check_d_squared()?;
        Ok(c)
    }

    pub fn zero() -> Self {
        ChainComplex { module: GradedModule::default(), boundaries: BTreeMap::new() }
    }

    /// Free module concentrated in one degree, zero differential.
    pub fn concentrated(degree: Degree, rank: usize) -> Self {
        ChainComplex {
            module: GradedModule::from_ranks(&[(degree, rank)]),
            boundaries: BTreeMap::new(),
        }
    }

    /// Module with zero differential.
    pub fn with_zero_differential(module: GradedModule) -> Self {
        ChainComplex { module, boundaries: BTreeMap::new() }
    }

    /// Two-term complex `top --m--> top-1`.
    pub fn two_term(top: Degree, m: Mat<T>) -> Result<Self, ComplexError> {
        let module = GradedModule::from_ranks(&[(top - 1, m.rows()), (top, m.cols())]);
        let mut boundaries = BTreeMap::new();
        boundaries.insert(top, m);
        Self::new(module, boundaries)
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn rank(&self, degree: Degree) -> usize {
        self.module.rank(degree)
    }

    /// Boundary d_n: C_n -> C_{n-1}, materialized as a zero matrix when absent.
    pub fn boundary(&self, n: Degree) -> Mat<T> {
        match self.boundaries.get(&n) {
            Some(m) => m.clone(),
            None => Mat::zero(self.module.rank(n - 1), self.module.rank(n)),
        }
    }

    pub fn boundaries(&self) -> &BTreeMap<Degree, Mat<T>> {
        &self.boundaries
    }

    fn check_d_squared(&self) -> Result<(), ComplexError> {
        for &n in self.boundaries.keys() {
            let d_n = self.boundary(n);
            let d_prev = self.boundary(n - 1);
            if !d_prev.mul(&d_n).map_err(ComplexError::Mat)?.is_zero() {
                return Err(ComplexError::NotAComplex { degree: n });
            }
        }
        Ok(())
    }

    pub fn identity_map(&self) -> GradedMap<T> {
        GradedMap::identity(&self.module)
    }

    /// Euler characteristic: alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.module
            .ranks()
            .iter()
            .map(|(&d, &r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

impl ChainComplex<Q> {
    pub fn is_integral(&self) -> bool {
        self.boundaries.values().all(Mat::is_integral)
    }

    pub fn to_integer(&self) -> Result<ChainComplex<Z>, ComplexError> {
        let mut boundaries = BTreeMap::new();
        for (&n, m) in &self.boundaries {
            let zm = m.to_integer().map_err(|e| match e {
                MatError::NotIntegral { row, col } => {
                    ComplexError::NotIntegral { degree: n, row, col }
                }
                other => ComplexError::Mat(other),
            })?;
            boundaries.insert(n, zm);
        }
        Ok(ChainComplex { module: self.module.clone(), boundaries })
    }
}

/// A degree-d map between graded modules: component at n maps source degree n
/// to target degree n + d. Missing components are zero.
#[derive(Clone, PartialEq)]
pub struct GradedMap<T> {
    source: GradedModule,
    target: GradedModule,
    degree: Degree,
    components: BTreeMap<Degree, Mat<T>>,
}

impl<T: Scalar> GradedMap<T> {
    pub fn new(
        source: GradedModule,
        target: GradedModule,
        degree: Degree,
        components: BTreeMap<Degree, Mat<T>>,
    ) -> Result<Self, ComplexError> {
        let components: BTreeMap<Degree, Mat<T>> =
            components.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        for (&n, m) in &components {
            let expected = (target.rank(n + degree), source.rank(n));
            if (m.rows(), m.cols()) != expected {
                return Err(ComplexError::ComponentShape {
                    degree: n,
                    got: format!("{}x{}", m.rows(), m.cols()),
                    expected: format!("{}x{}", expected.0, expected.1),
                });
            }
        }
        Ok(GradedMap { source, target, degree, components })
    }

    pub fn zero(source: GradedModule, target: GradedModule, degree: Degree) -> Self {
        GradedMap { source, target, degree, components: BTreeMap::new() }
    }

    /// Identity in degree 0 on a module.
    pub fn identity(module: &GradedModule) -> Self {
        let components = module.ranks().iter().map(|(&d, &r)| (d, Mat::identity(r))).collect();
        GradedMap { source: module.clone(), target: module.clone(), degree: 0, components }
    }

    pub fn source(&self) -> &GradedModule {
        &self.source
    }

    pub fn target(&self) -> &GradedModule {
        &self.target
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn component(&self, n: Degree) -> Mat<T> {
        match self.components.get(&n) {
            Some(m) => m.clone(),
            None => Mat::zero(self.target.rank(n + self.degree), self.source.rank(n)),
        }
    }

    pub fn components(&self) -> &BTreeMap<Degree, Mat<T>> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(Mat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.degree == 0
            && self.source == self.target
            && self.source.degrees().all(|d| self.component(d).is_identity())
    }

    /// self o other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self, ComplexError> {
        if other.target != self.source {
            return Err(ComplexError::Endpoints(format!(
                "compose: inner target {:?} != outer source {:?}",
                other.target, self.source
            )));
        }
        let mut components = BTreeMap::new();
        for (&n, f) in &other.components {
            let g = self.component(n + other.degree);
            let prod = g.mul(f)?;
            if !prod.is_zero() {
                components.insert(n, prod);
            }
        }
        GradedMap::new(
            other.source.clone(),
            self.target.clone(),
            self.degree + other.degree,
            components,
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self, ComplexError> {
        if self.source != other.source
            || self.target != other.target
            || self.degree != other.degree
        {
            return Err(ComplexError::Endpoints("add: mismatched graded maps".into()));
        }
        let mut components = BTreeMap::new();
        let degrees: std::collections::BTreeSet<Degree> =
            self.components.keys().chain(other.components.keys()).copied().collect();
        for n in degrees {
            let sum = self.component(n).add(&other.component(n))?;
            if !sum.is_zero() {
                components.insert(n, sum);
            }
        }
        Ok(GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            components,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ComplexError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            components: self.components.iter().map(|(&n, m)| (n, m.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut components: BTreeMap<Degree, Mat<T>> =
            self.components.iter().map(|(&n, m)| (n, m.scale(c))).collect();
        components.retain(|_, m| !m.is_zero());
        GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            components,
        }
    }

    /// The dual map between negated-degree modules; the component at
    /// -n-degree is the transpose of the component at n. No signs.
    pub fn dualize(&self) -> Self {
        let source = self.target.negate_degrees();
        let target = self.source.negate_degrees();
        let mut components = BTreeMap::new();
        for (&n, m) in &self.components {
            components.insert(-n - self.degree, m.transpose());
        }
        GradedMap { source, target, degree: self.degree, components }
    }

    pub fn apply(&self, n: Degree, v: &[T]) -> Result<Vec<T>, MatError> {
        self.component(n).mul_vec(v)
    }
}

impl<T: Scalar> fmt::Debug for GradedMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedMap")
            .field("degree", &self.degree)
            .field("components", &self.components)
            .finish()
    }
}

/// Hom-complex differential: m1(f) = d_D f - (-1)^{deg f} f d_C.
pub fn m1<T: Scalar>(
    f: &GradedMap<T>,
    c: &ChainComplex<T>,
    d: &ChainComplex<T>,
) -> Result<GradedMap<T>, ComplexError> {
    if f.source() != c.module() || f.target() != d.module() {
        return Err(ComplexError::Endpoints(
            "m1: map endpoints do not match the given complexes".into(),
        ));
    }
    let deg = f.degree();
    let sign_neg = deg.rem_euclid(2) == 1;
    let mut components = BTreeMap::new();
    let mut degrees: std::collections::BTreeSet<Degree> = f.components().keys().copied().collect();
    for n in f.components().keys() {
        degrees.insert(n + 1);
    }
    for n in degrees {
        // d_D o f_n and f_{n-1} o d_n, both C_n -> D_{n+deg-1}
        let df = d.boundary(n + deg).mul(&f.component(n))?;
        let fd = f.component(n - 1).mul(&c.boundary(n))?;
        let m = if sign_neg { df.add(&fd)? } else { df.sub(&fd)? };
        if !m.is_zero() {
            components.insert(n, m);
        }
    }
    GradedMap::new(c.module().clone(), d.module().clone(), deg - 1, components)
}

/// m1(m1(f)) == 0; holds for every f because d^2 = 0 on both sides.
pub fn m1_squared_is_zero<T: Scalar>(
    f: &GradedMap<T>,
    c: &ChainComplex<T>,
    d: &ChainComplex<T>,
) -> Result<bool, ComplexError> {
    let once = m1(f, c, d)?;
    let twice = m1(&once, c, d)?;
    Ok(twice.is_zero())
}

pub fn is_chain_map<T: Scalar>(
    f: &GradedMap<T>,
    c: &ChainComplex<T>,
    d: &ChainComplex<T>,
) -> Result<bool, ComplexError> {
    Ok(f.degree() == 0 && m1(f, c, d)?.is_zero())
}

// ---------------------------------------------------------------------------
// Homology.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Invariant factors > 1, each dividing the next. Empty over a field.
    pub torsion: Vec<Z>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

pub type Homology = BTreeMap<Degree, HomologyGroup>;

impl<T: FieldScalar> ChainComplex<T> {
    /// Betti numbers over the coefficient field. Zero groups are omitted.
    pub fn homology_field(&self) -> Homology {
        let mut out = BTreeMap::new();
        for n in self.module.degrees() {
            let betti = self.module.rank(n) - self.boundary(n).rank() - self.boundary(n + 1).rank();
            if betti > 0 {
                out.insert(n, HomologyGroup::free(betti));
            }
        }
        out
    }
}

impl ChainComplex<Q> {
    /// Integral homology: free rank plus torsion via Smith normal form.
    /// Fails when any boundary matrix has a nontrivial denominator.
    pub fn homology_integral(&self) -> Result<Homology, ComplexError> {
        let zc = self.to_integer()?;
        let mut out = BTreeMap::new();
        for n in zc.module.degrees() {
            let snf_n1 = snf(&zc.boundary(n + 1));
            let rank_dn = zc.boundary(n).to_rational().rank();
            let betti = zc.module.rank(n) - rank_dn - snf_n1.rank();
            let torsion = snf_n1.torsion();
            if betti > 0 || !torsion.is_empty() {
                out.insert(n, HomologyGroup { rank: betti, torsion });
            }
        }
        Ok(out)
    }
}

/// Mapping cone of a degree-0 chain map f: C -> D, with cone(n) =
/// C(n-1) (+) D(n) and boundary [[-d_C, 0], [-f, d_D]]. The convention is
/// fixed so the cone of the identity is acyclic.
pub fn mapping_cone<T: Scalar>(
    f: &GradedMap<T>,
    c: &ChainComplex<T>,
    d: &ChainComplex<T>,
) -> Result<ChainComplex<T>, ComplexError> {
    if f.degree() != 0 || f.source() != c.module() || f.target() != d.module() {
        return Err(ComplexError::Endpoints("mapping_cone: need a degree-0 map C -> D".into()));
    }
    let residual = m1(f, c, d)?;
    if !residual.is_zero() {
        let bad = residual.components().keys().next().copied().unwrap_or_default();
        return Err(ComplexError::NotChainMap { degree: bad });
    }
    let module = c.module().shift(1).direct_sum(d.module());
    let mut boundaries = BTreeMap::new();
    for n in module.degrees().collect::<Vec<_>>() {
        let a = c.boundary(n - 1).neg();
        let b = Mat::zero(c.rank(n - 2), d.rank(n));
        let lower_left = f.component(n - 1).neg();
        let dd = d.boundary(n);
        let block = Mat::block2x2(&a, &b, &lower_left, &dd)?;
        boundaries.insert(n, block);
    }
    ChainComplex::new(module, boundaries)
}

/// Degrees negated, boundaries transposed: the linear dual over a field.
pub fn dualize_complex<T: FieldScalar>(c: &ChainComplex<T>) -> ChainComplex<T> {
    let module = c.module().negate_degrees();
    let mut boundaries = BTreeMap::new();
    for m in module.degrees().collect::<Vec<_>>() {
        // dual boundary at m is the transpose of d_{1-m}
        let t = c.boundary(1 - m).transpose();
        if !t.is_zero() {
            boundaries.insert(m, t);
        }
    }
    ChainComplex { module, boundaries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn qm(rows: &[&[i64]]) -> Mat<Q> {
        Mat::from_int_rows(rows)
    }

    /// Simplicial circle: 3 vertices, 3 edges.
    fn circle() -> ChainComplex<Q> {
        // edges 01, 02, 12; d(uv) = v - u
        let d1 = qm(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]);
        ChainComplex::two_term(1, d1).unwrap()
    }

    #[test]
    fn complex_rejects_bad_d_squared() {
        let module = GradedModule::from_vec(&[1, 1, 1]);
        let mut boundaries = BTreeMap::new();
        boundaries.insert(1, qm(&[&[1]]));
        boundaries.insert(2, qm(&[&[1]]));
        assert!(matches!(
            ChainComplex::new(module, boundaries),
            Err(ComplexError::NotAComplex { degree: 2 })
        ));
    }

    #[test]
    fn m1_of_chain_map_is_zero() {
        let c = circle();
        let id = c.identity_map();
        assert!(m1(&id, &c, &c).unwrap().is_zero());
    }

    #[test]
    fn m1_single_component_example() {
        // C = (Q -1-> Q) in degrees 1, 0; f degree 0 with components (1, 0):
        // m1(f) lands in the degree-1-to-degree-0 slot with value 1.
        let c = ChainComplex::two_term(1, qm(&[&[1]])).unwrap();
        let mut comps = BTreeMap::new();
        comps.insert(1, qm(&[&[1]]));
        let f = GradedMap::new(c.module().clone(), c.module().clone(), 0, comps).unwrap();
        let r = m1(&f, &c, &c).unwrap();
        assert_eq!(r.degree(), -1);
        assert_eq!(r.component(1), qm(&[&[1]]));
        assert!(r.component(0).is_zero());
    }

    fn random_complex(rng: &mut ChaCha8Rng) -> ChainComplex<Q> {
        // Cone over a scalar multiple of the identity on a random two-term
        // complex; always satisfies d^2 = 0 and has mixed ranks.
        let r0 = rng.gen_range(0..=2);
        let r1 = rng.gen_range(0..=2);
        let m = Mat::<Q>::build(r0, r1, |_, _| rat(rng.gen_range(-3i64..=3)));
        let base = ChainComplex::two_term(1, m).unwrap();
        let lambda = rat(rng.gen_range(-2i64..=2));
        let f = base.identity_map().scale(&lambda);
        mapping_cone(&f, &base, &base).unwrap()
    }

    #[test]
    fn m1_squared_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let c = random_complex(&mut rng);
            let d = random_complex(&mut rng);
            let deg = rng.gen_range(-1i64..=1);
            let mut comps = BTreeMap::new();
            for n in c.module().degrees() {
                let rows = d.module().rank(n + deg);
                let cols = c.module().rank(n);
                if rows * cols > 0 {
                    comps.insert(
                        n,
                        Mat::<Q>::build(rows, cols, |_, _| rat(rng.gen_range(-3i64..=3))),
                    );
                }
            }
            let f = GradedMap::new(c.module().clone(), d.module().clone(), deg, comps).unwrap();
            assert!(m1_squared_is_zero(&f, &c, &d).unwrap());
        }
    }

    #[test]
    fn homology_zero_complex() {
        let c = ChainComplex::<Q>::zero();
        assert!(c.homology_field().is_empty());
        assert!(c.homology_integral().unwrap().is_empty());
    }

    #[test]
    fn homology_circle() {
        let c = circle();
        let h = c.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup::free(1)));
        assert_eq!(h.get(&1), Some(&HomologyGroup::free(1)));
        let hq = c.homology_field();
        assert_eq!(hq.get(&0), Some(&HomologyGroup::free(1)));
        assert_eq!(hq.get(&1), Some(&HomologyGroup::free(1)));
    }

    #[test]
    fn homology_times_two() {
        // Z --x2--> Z in degrees 1, 0: H_0 = Z/2, H_1 = 0.
        let c = ChainComplex::two_term(1, qm(&[&[2]])).unwrap();
        let h = c.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup { rank: 0, torsion: vec![Z::from(2)] }));
        assert_eq!(h.get(&1), None);
        assert_eq!(format!("{}", h[&0]), "Z/2");
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..10 {
            let c = random_complex(&mut rng);
            let cone = mapping_cone(&c.identity_map(), &c, &c).unwrap();
            assert!(cone.homology_field().is_empty());
        }
    }

    #[test]
    fn cone_of_zero_is_shifted_sum() {
        let c = circle();
        let d = ChainComplex::concentrated(0, 2);
        let zero = GradedMap::zero(c.module().clone(), d.module().clone(), 0);
        let cone = mapping_cone(&zero, &c, &d).unwrap();
        let h = cone.homology_field();
        // shifted H(circle) in degrees 1, 2; H(d) = Q^2 in degree 0
        assert_eq!(h.get(&0), Some(&HomologyGroup::free(2)));
        assert_eq!(h.get(&1), Some(&HomologyGroup::free(1)));
        assert_eq!(h.get(&2), Some(&HomologyGroup::free(1)));
    }

    #[test]
    fn cone_of_times_two() {
        let c = ChainComplex::concentrated(0, 1);
        let f = GradedMap::new(
            c.module().clone(),
            c.module().clone(),
            0,
            [(0i64, qm(&[&[2]]))].into_iter().collect(),
        )
        .unwrap();
        let cone = mapping_cone(&f, &c, &c).unwrap();
        let h = cone.homology_integral().unwrap();
        assert_eq!(h.get(&0), Some(&HomologyGroup { rank: 0, torsion: vec![Z::from(2)] }));
        assert_eq!(h.get(&1), None);
    }

    #[test]
    fn cone_rejects_non_chain_map() {
        let c = circle();
        let mut comps = BTreeMap::new();
        comps.insert(1, qm(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        let f = GradedMap::new(c.module().clone(), c.module().clone(), 0, comps).unwrap();
        assert!(mapping_cone(&f, &c, &c).is_err());
    }

    #[test]
    fn dualize_involution_and_transpose() {
        let c = circle();
        let dual = dualize_complex(&c);
        assert_eq!(dual.module().rank(0), 3);
        assert_eq!(dual.module().rank(-1), 3);
        let double = dualize_complex(&dual);
        assert_eq!(double, c);
        let two = ChainComplex::two_term(1, qm(&[&[1], &[2]])).unwrap();
        let dual2 = dualize_complex(&two);
        assert_eq!(dual2.boundary(0), qm(&[&[1, 2]]));
        assert!(dualize_complex(&ChainComplex::<Q>::zero()).module().is_zero());
    }

    #[test]
    fn euler_characteristic_matches_betti() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..15 {
            let c = random_complex(&mut rng);
            let h = c.homology_field();
            let chi_h: i64 = h
                .iter()
                .map(|(&d, g)| if d.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) })
                .sum();
            assert_eq!(c.euler_characteristic(), chi_h);
        }
    }

    #[test]
    fn betti_agree_over_z_and_q() {
        let cases = vec![circle(), ChainComplex::two_term(1, qm(&[&[2]])).unwrap()];
        for c in cases {
            let hq = c.homology_field();
            let hz = c.homology_integral().unwrap();
            for n in c.module().degrees() {
                let bq = hq.get(&n).map_or(0, |g| g.rank);
                let bz = hz.get(&n).map_or(0, |g| g.rank);
                assert_eq!(bq, bz, "betti mismatch at degree {n}");
            }
        }
    }
}
