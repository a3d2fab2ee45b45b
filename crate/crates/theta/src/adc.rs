//! Augmented directed complexes with prescribed bases.
//!
//! A complex is stored as a graded basis (one degree per element, in
//! declaration order), an integer boundary chain for every positive-degree
//! element, and an augmentation value for every degree-0 element.  The
//! distinguished submonoid in each degree is the set of nonnegative integer
//! combinations of basis elements, so positivity is a property of
//! coefficients and never needs separate state.
//!
//! Coefficients are arbitrary-precision integers throughout.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub type Coeff = BigInt;

/// Convenience for literal coefficients in tests and constructors.
pub fn coeff(n: i64) -> Coeff {
    BigInt::from(n)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexShapeError {
    #[error("lengths of degrees/boundary/augmentation data disagree")]
    LengthMismatch,
    #[error("boundary of element {element} must have degree {expected}, got {got}")]
    BoundaryDegree { element: usize, expected: usize, got: usize },
    #[error("boundary of degree-0 element {0} must be zero")]
    BoundaryOnDegreeZero(usize),
    #[error("boundary of element {element} mentions {term}, which is not one degree lower")]
    BoundaryTermDegree { element: usize, term: usize },
    #[error("boundary term {term} of element {element} is out of range")]
    BoundaryTermRange { element: usize, term: usize },
    #[error("augmentation given for positive-degree element {0}")]
    AugmentationOnPositiveDegree(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("boundary of boundary is nonzero at element {0}")]
    BoundarySquareNonzero(usize),
    #[error("augmented boundary is nonzero at element {0}")]
    AugmentedBoundaryNonzero(usize),
}

/// A formal integer combination of basis elements of a single degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<usize, Coeff>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn unit(degree: usize, element: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(element, Coeff::one());
        Chain { degree, terms }
    }

    /// Sums duplicate terms and drops zeros.
    pub fn from_terms(degree: usize, iter: impl IntoIterator<Item = (usize, Coeff)>) -> Self {
        let mut terms: BTreeMap<usize, Coeff> = BTreeMap::new();
        for (ix, c) in iter {
            let entry = terms.entry(ix).or_insert_with(Coeff::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Chain { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Basis indices with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Coeff)> {
        self.terms.iter().map(|(&ix, c)| (ix, c))
    }

    pub fn coefficient(&self, element: usize) -> Coeff {
        self.terms.get(&element).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree, "degree mismatch in chain addition");
        Chain::from_terms(
            self.degree,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(&ix, c)| (ix, c.clone())),
        )
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree, "degree mismatch in chain subtraction");
        Chain::from_terms(
            self.degree,
            self.terms
                .iter()
                .map(|(&ix, c)| (ix, c.clone()))
                .chain(other.terms.iter().map(|(&ix, c)| (ix, -c.clone()))),
        )
    }

    pub fn neg(&self) -> Chain {
        Chain::from_terms(self.degree, self.terms.iter().map(|(&ix, c)| (ix, -c.clone())))
    }

    pub fn scale(&self, factor: &Coeff) -> Chain {
        Chain::from_terms(
            self.degree,
            self.terms.iter().map(|(&ix, c)| (ix, c * factor)),
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Split into positive and negative parts: `self = plus - minus`, both
    /// nonnegative with disjoint supports.
    pub fn split_signs(&self) -> (PositiveChain, PositiveChain) {
        let mut plus = BTreeMap::new();
        let mut minus = BTreeMap::new();
        for (&ix, c) in &self.terms {
            if c.is_positive() {
                plus.insert(ix, c.clone());
            } else {
                minus.insert(ix, -c.clone());
            }
        }
        (
            PositiveChain(Chain { degree: self.degree, terms: plus }),
            PositiveChain(Chain { degree: self.degree, terms: minus }),
        )
    }

    /// Sum of single basis elements, each with coefficient one.
    pub fn sum_of(degree: usize, elements: &[usize]) -> Chain {
        Chain::from_terms(degree, elements.iter().map(|&ix| (ix, Coeff::one())))
    }

    /// The multiplicity-free support, if every coefficient is exactly one.
    pub fn as_element_set(&self) -> Option<Vec<usize>> {
        if self.terms.values().all(|c| c.is_one()) {
            Some(self.terms.keys().copied().collect())
        } else {
            None
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&ix, c) in &self.terms {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}*{ix}")?;
            first = false;
        }
        Ok(())
    }
}

/// A chain with all coefficients >= 0, i.e. a member of the distinguished
/// submonoid of its degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveChain(Chain);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("chain has a negative coefficient at element {0}")]
pub struct NegativeEntry(pub usize);

impl PositiveChain {
    pub fn new(chain: Chain) -> Result<Self, NegativeEntry> {
        match chain.terms.iter().find(|(_, c)| c.is_negative()) {
            Some((&ix, _)) => Err(NegativeEntry(ix)),
            None => Ok(PositiveChain(chain)),
        }
    }

    pub fn zero(degree: usize) -> Self {
        PositiveChain(Chain::zero(degree))
    }

    pub fn unit(degree: usize, element: usize) -> Self {
        PositiveChain(Chain::unit(degree, element))
    }

    pub fn chain(&self) -> &Chain {
        &self.0
    }

    pub fn into_chain(self) -> Chain {
        self.0
    }
}

impl std::ops::Deref for PositiveChain {
    type Target = Chain;
    fn deref(&self) -> &Chain {
        &self.0
    }
}

/// An augmented directed complex with a prescribed basis.
#[derive(Debug, PartialEq, Eq)]
pub struct AugmentedDirectedComplex {
    degrees: Vec<usize>,
    boundary: Vec<Chain>,
    augmentation: Vec<Coeff>,
    by_degree: Vec<Vec<usize>>,
}

impl AugmentedDirectedComplex {
    /// `boundary[i]` must be a chain of degree `degrees[i] - 1` (zero of
    /// degree 0 for degree-0 elements); `augmentation[i]` must be zero for
    /// positive-degree elements.
    pub fn new(
        degrees: Vec<usize>,
        boundary: Vec<Chain>,
        augmentation: Vec<Coeff>,
    ) -> Result<Self, ComplexShapeError> {
        let n = degrees.len();
        if boundary.len() != n || augmentation.len() != n {
            return Err(ComplexShapeError::LengthMismatch);
        }
        for i in 0..n {
            if degrees[i] == 0 {
                if !boundary[i].is_zero() {
                    return Err(ComplexShapeError::BoundaryOnDegreeZero(i));
                }
            } else {
                let expected = degrees[i] - 1;
                if boundary[i].degree() != expected {
                    return Err(ComplexShapeError::BoundaryDegree {
                        element: i,
                        expected,
                        got: boundary[i].degree(),
                    });
                }
                for t in boundary[i].support() {
                    if t >= n {
                        return Err(ComplexShapeError::BoundaryTermRange { element: i, term: t });
                    }
                    if degrees[t] != expected {
                        return Err(ComplexShapeError::BoundaryTermDegree { element: i, term: t });
                    }
                }
            }
            if degrees[i] > 0 && !augmentation[i].is_zero() {
                return Err(ComplexShapeError::AugmentationOnPositiveDegree(i));
            }
        }
        let max_degree = degrees.iter().max().copied().unwrap_or(0);
        let mut by_degree = vec![Vec::new(); max_degree + 1];
        for (i, &d) in degrees.iter().enumerate() {
            by_degree[d].push(i);
        }
        Ok(AugmentedDirectedComplex { degrees, boundary, augmentation, by_degree })
    }

    pub fn basis_len(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, element: usize) -> usize {
        self.degrees[element]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn boundary(&self, element: usize) -> &Chain {
        &self.boundary[element]
    }

    pub fn augmentation(&self, element: usize) -> &Coeff {
        &self.augmentation[element]
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len().saturating_sub(1)
    }

    /// Basis elements of the given degree, in declaration order.
    pub fn elements_of_degree(&self, degree: usize) -> &[usize] {
        self.by_degree.get(degree).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Linear extension of the boundary to chains of positive degree.
    pub fn boundary_of(&self, chain: &Chain) -> Chain {
        assert!(chain.degree() > 0, "boundary is defined in positive degrees");
        let mut acc = Chain::zero(chain.degree() - 1);
        for (ix, c) in chain.terms() {
            acc = acc.add(&self.boundary[ix].scale(c));
        }
        acc
    }

    /// Linear extension of the augmentation to degree-0 chains.
    pub fn augmentation_of(&self, chain: &Chain) -> Coeff {
        assert_eq!(chain.degree(), 0, "augmentation is defined in degree 0");
        chain
            .terms()
            .map(|(ix, c)| c * &self.augmentation[ix])
            .sum()
    }

    /// Apply `steps` times the operation "take the positive (or negative)
    /// part of the boundary".
    pub fn iterated_part(&self, chain: &Chain, steps: usize, positive: bool) -> Chain {
        let mut cur = chain.clone();
        for _ in 0..steps {
            let (plus, minus) = self.boundary_of(&cur).split_signs();
            cur = if positive { plus.into_chain() } else { minus.into_chain() };
        }
        cur
    }

    /// Exactness of the data: boundary squares to zero and augments to zero.
    pub fn check_structure(&self) -> Result<(), StructureError> {
        for i in 0..self.basis_len() {
            match self.degrees[i] {
                0 => {}
                1 => {
                    if !self.augmentation_of(&self.boundary[i]).is_zero() {
                        return Err(StructureError::AugmentedBoundaryNonzero(i));
                    }
                }
                _ => {
                    if !self.boundary_of(&self.boundary[i]).is_zero() {
                        return Err(StructureError::BoundarySquareNonzero(i));
                    }
                }
            }
        }
        Ok(())
    }

    /// A basis is unital when the iterated negative and positive boundary
    /// parts of every element augment to 1.
    pub fn is_unital(&self) -> bool {
        for b in 0..self.basis_len() {
            let d = self.degrees[b];
            let unit = Chain::unit(d, b);
            for positive in [false, true] {
                let bottom = self.iterated_part(&unit, d, positive);
                if !self.augmentation_of(&bottom).is_one() {
                    return false;
                }
            }
        }
        true
    }

    /// A basis is strongly loop-free when the relation "a is a term in the
    /// negative boundary part of b, or b is a term in the positive boundary
    /// part of a" extends to a partial order, i.e. is acyclic.
    pub fn is_strongly_loop_free(&self) -> bool {
        let mut edges = Vec::new();
        for b in 0..self.basis_len() {
            if self.degrees[b] == 0 {
                continue;
            }
            let (plus, minus) = self.boundary[b].split_signs();
            for a in minus.support() {
                edges.push((a, b));
            }
            for a in plus.support() {
                edges.push((b, a));
            }
        }
        relation_is_acyclic(self.basis_len(), &edges)
    }

    /// A basis is loop-free when, for every q, the relation induced by the
    /// q-fold iterated boundary parts on elements of degree >= q is acyclic.
    pub fn is_loop_free(&self) -> bool {
        for q in 0..=self.max_degree() {
            let mut edges = Vec::new();
            for b in 0..self.basis_len() {
                let d = self.degrees[b];
                if d <= q {
                    continue;
                }
                let unit = Chain::unit(d, b);
                for a in self.iterated_part(&unit, d - q, false).support() {
                    edges.push((a, b));
                }
                for a in self.iterated_part(&unit, d - q, true).support() {
                    edges.push((b, a));
                }
            }
            if !relation_is_acyclic(self.basis_len(), &edges) {
                return false;
            }
        }
        true
    }
}

/// Every nonnegative coefficient vector over the given elements with entries
/// bounded by `bound`, as chains of the given degree, in odometer order.
pub(crate) fn bounded_vectors(degree: usize, elements: &[usize], bound: u32) -> Vec<Chain> {
    let mut out = Vec::new();
    let mut counter = vec![0u32; elements.len()];
    loop {
        out.push(Chain::from_terms(
            degree,
            elements.iter().zip(counter.iter()).map(|(&ix, &c)| (ix, Coeff::from(c))),
        ));
        let mut pos = 0;
        loop {
            if pos == counter.len() {
                return out;
            }
            if counter[pos] < bound {
                counter[pos] += 1;
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
    }
}

/// Kahn's algorithm; true iff the edge relation has no directed cycle.
fn relation_is_acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for &(a, b) in edges {
        adj[a].push(b);
        indegree[b] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for &w in &adj[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push(w);
            }
        }
    }
    seen == n
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of element {element} has degree {got}, expected {expected}")]
    ImageDegree { element: usize, expected: usize, got: usize },
    #[error("image of element {element} mentions {term}, which is out of range or of the wrong degree")]
    ImageTerm { element: usize, term: usize },
    #[error("negative entry in the image of element {0}")]
    NegativeEntry(usize),
    #[error("chain-map law fails at element {0}")]
    NotChainMap(usize),
    #[error("augmentation not preserved at element {0}")]
    NotAugmented(usize),
    #[error("source and target complexes do not match")]
    SourceTargetMismatch,
}

/// An augmentation-preserving chain map carrying nonnegative combinations to
/// nonnegative combinations, stored as the image chain of every source basis
/// element.
#[derive(Debug, Clone)]
pub struct ChainMorphism {
    source: Arc<AugmentedDirectedComplex>,
    target: Arc<AugmentedDirectedComplex>,
    images: Vec<Chain>,
}

impl ChainMorphism {
    /// Validating constructor: checks shape, nonnegativity, the chain-map
    /// law and augmentation preservation.
    pub fn new(
        source: Arc<AugmentedDirectedComplex>,
        target: Arc<AugmentedDirectedComplex>,
        images: Vec<Chain>,
    ) -> Result<Self, MorphismError> {
        if images.len() != source.basis_len() {
            return Err(MorphismError::ImageCount {
                expected: source.basis_len(),
                got: images.len(),
            });
        }
        for (b, image) in images.iter().enumerate() {
            let d = source.degree(b);
            if image.degree() != d {
                return Err(MorphismError::ImageDegree { element: b, expected: d, got: image.degree() });
            }
            for t in image.support() {
                if t >= target.basis_len() || target.degree(t) != d {
                    return Err(MorphismError::ImageTerm { element: b, term: t });
                }
            }
            if !image.is_nonnegative() {
                return Err(MorphismError::NegativeEntry(b));
            }
        }
        let candidate = ChainMorphism { source, target, images };
        for b in 0..candidate.source.basis_len() {
            let d = candidate.source.degree(b);
            if d == 0 {
                let expected = candidate.source.augmentation(b);
                if &candidate.target.augmentation_of(&candidate.images[b]) != expected {
                    return Err(MorphismError::NotAugmented(b));
                }
            } else {
                let pushed = candidate.apply(candidate.source.boundary(b));
                let bounded = candidate.target.boundary_of(&candidate.images[b]);
                if pushed != bounded {
                    return Err(MorphismError::NotChainMap(b));
                }
            }
        }
        Ok(candidate)
    }

    /// A chain map that need not preserve the augmentation.  Only the
    /// brute-force searches build these; they satisfy the chain-map law by
    /// construction and are inspected for their matrices alone.
    pub(crate) fn raw_chain_map(
        source: Arc<AugmentedDirectedComplex>,
        target: Arc<AugmentedDirectedComplex>,
        images: Vec<Chain>,
    ) -> Self {
        ChainMorphism { source, target, images }
    }

    /// For morphisms known valid by construction; validated in debug builds.
    pub(crate) fn new_unchecked(
        source: Arc<AugmentedDirectedComplex>,
        target: Arc<AugmentedDirectedComplex>,
        images: Vec<Chain>,
    ) -> Self {
        debug_assert!(
            ChainMorphism::new(source.clone(), target.clone(), images.clone()).is_ok(),
            "morphism assumed valid fails validation"
        );
        ChainMorphism { source, target, images }
    }

    pub fn identity(complex: &Arc<AugmentedDirectedComplex>) -> Self {
        let images = (0..complex.basis_len())
            .map(|i| Chain::unit(complex.degree(i), i))
            .collect();
        ChainMorphism { source: complex.clone(), target: complex.clone(), images }
    }

    pub fn zero(
        source: &Arc<AugmentedDirectedComplex>,
        target: &Arc<AugmentedDirectedComplex>,
    ) -> Result<Self, MorphismError> {
        let images = (0..source.basis_len())
            .map(|i| Chain::zero(source.degree(i)))
            .collect();
        ChainMorphism::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &Arc<AugmentedDirectedComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AugmentedDirectedComplex> {
        &self.target
    }

    pub fn image(&self, element: usize) -> &Chain {
        &self.images[element]
    }

    pub fn images(&self) -> &[Chain] {
        &self.images
    }

    /// Linear extension to arbitrary chains of the source.
    pub fn apply(&self, chain: &Chain) -> Chain {
        let mut acc = Chain::zero(chain.degree());
        for (ix, c) in chain.terms() {
            acc = acc.add(&self.images[ix].scale(c));
        }
        acc
    }

    /// `g.compose(f)` is `g` after `f`; the target of `f` must equal the
    /// source of `g`.
    pub fn compose(&self, first: &ChainMorphism) -> Result<ChainMorphism, MorphismError> {
        if !same_complex(&first.target, &self.source) {
            return Err(MorphismError::SourceTargetMismatch);
        }
        let images = first.images.iter().map(|c| self.apply(c)).collect();
        Ok(ChainMorphism::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            images,
        ))
    }

    pub fn is_zero_map(&self) -> bool {
        self.images.iter().all(Chain::is_zero)
    }

    /// Matrix of the given degree: rows indexed by target basis elements of
    /// that degree, columns by source basis elements, declaration order.
    pub fn degree_matrix(&self, degree: usize) -> Vec<Vec<Coeff>> {
        let rows = self.target.elements_of_degree(degree);
        let cols = self.source.elements_of_degree(degree);
        rows.iter()
            .map(|&r| cols.iter().map(|&c| self.images[c].coefficient(r)).collect())
            .collect()
    }

    /// Rebuild from per-degree matrices; missing degrees mean zero blocks.
    pub fn from_degree_matrices(
        source: Arc<AugmentedDirectedComplex>,
        target: Arc<AugmentedDirectedComplex>,
        matrices: &BTreeMap<usize, Vec<Vec<Coeff>>>,
    ) -> Result<Self, MorphismError> {
        let mut images: Vec<Chain> = (0..source.basis_len())
            .map(|i| Chain::zero(source.degree(i)))
            .collect();
        for (&degree, matrix) in matrices {
            let rows = target.elements_of_degree(degree);
            let cols = source.elements_of_degree(degree);
            if matrix.len() != rows.len() || matrix.iter().any(|r| r.len() != cols.len()) {
                return Err(MorphismError::ImageCount { expected: rows.len(), got: matrix.len() });
            }
            for (ci, &col) in cols.iter().enumerate() {
                images[col] = Chain::from_terms(
                    degree,
                    rows.iter()
                        .enumerate()
                        .map(|(ri, &row)| (row, matrix[ri][ci].clone())),
                );
            }
        }
        ChainMorphism::new(source, target, images)
    }

    /// Canonical comparison key: the images in declaration order.
    pub fn sort_key(&self) -> Vec<Vec<(usize, Coeff)>> {
        self.images
            .iter()
            .map(|c| c.terms().map(|(ix, co)| (ix, co.clone())).collect())
            .collect()
    }
}

impl PartialEq for ChainMorphism {
    fn eq(&self, other: &Self) -> bool {
        same_complex(&self.source, &other.source)
            && same_complex(&self.target, &other.target)
            && self.images == other.images
    }
}

impl Eq for ChainMorphism {}

/// Structural equality with a pointer fast path.
pub fn same_complex(a: &Arc<AugmentedDirectedComplex>, b: &Arc<AugmentedDirectedComplex>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::DimensionSequence;
    use crate::simple::{Convention, SimpleAdc};

    fn arrow() -> SimpleAdc {
        SimpleAdc::from_dims(
            &DimensionSequence::new(vec![0, 1, 0]).unwrap(),
            Convention::Std,
        )
    }

    /// Two 0-elements joined by arrows in both directions.
    fn two_arrow_cycle() -> Arc<AugmentedDirectedComplex> {
        Arc::new(
            AugmentedDirectedComplex::new(
                vec![0, 0, 1, 1],
                vec![
                    Chain::zero(0),
                    Chain::zero(0),
                    Chain::from_terms(0, [(1, coeff(1)), (0, coeff(-1))]),
                    Chain::from_terms(0, [(0, coeff(1)), (1, coeff(-1))]),
                ],
                vec![coeff(1), coeff(1), coeff(0), coeff(0)],
            )
            .unwrap(),
        )
    }

    #[test]
    fn splits_signs() {
        let zero = Chain::zero(0);
        let (p, m) = zero.split_signs();
        assert!(p.is_zero() && m.is_zero());

        // 2b - 3a
        let c = Chain::from_terms(0, [(1, coeff(2)), (0, coeff(-3))]);
        let (p, m) = c.split_signs();
        assert_eq!(p.chain(), &Chain::from_terms(0, [(1, coeff(2))]));
        assert_eq!(m.chain(), &Chain::from_terms(0, [(0, coeff(3))]));

        let k = arrow();
        let (p, m) = k.adc().boundary(1).split_signs();
        assert_eq!(p.chain(), &Chain::unit(0, 2));
        assert_eq!(m.chain(), &Chain::unit(0, 0));
    }

    #[test]
    fn positive_chain_rejects_negative_entries() {
        let c = Chain::from_terms(0, [(0, coeff(-1))]);
        assert_eq!(PositiveChain::new(c), Err(NegativeEntry(0)));
    }

    #[test]
    fn unitality() {
        for dims in [vec![0], vec![0, 1, 0], vec![0, 1, 2, 1, 0], vec![0, 1, 2, 3, 2, 1, 0]] {
            let k = SimpleAdc::from_dims(&DimensionSequence::new(dims).unwrap(), Convention::Std);
            assert!(k.adc().is_unital());
        }
        // a single point of augmentation 2 is not unital
        let k = AugmentedDirectedComplex::new(vec![0], vec![Chain::zero(0)], vec![coeff(2)]).unwrap();
        assert!(!k.is_unital());
        // cycle complex is unital but not loop-free
        assert!(two_arrow_cycle().is_unital());
    }

    #[test]
    fn loop_freeness() {
        let point = AugmentedDirectedComplex::new(vec![0], vec![Chain::zero(0)], vec![coeff(1)]).unwrap();
        assert!(point.is_strongly_loop_free());
        assert!(point.is_loop_free());

        let cycle = two_arrow_cycle();
        assert!(!cycle.is_strongly_loop_free());
        assert!(!cycle.is_loop_free());

        // empty boundary maps give empty relations
        let discrete =
            AugmentedDirectedComplex::new(vec![0, 0], vec![Chain::zero(0), Chain::zero(0)], vec![coeff(1), coeff(1)])
                .unwrap();
        assert!(discrete.is_loop_free());

        for dims in [vec![0, 1, 0], vec![0, 1, 2, 1, 0], vec![0, 1, 2, 1, 2, 1, 0]] {
            let k = SimpleAdc::from_dims(&DimensionSequence::new(dims).unwrap(), Convention::Std);
            assert!(k.adc().is_strongly_loop_free());
            assert!(k.adc().is_loop_free());
        }
    }

    #[test]
    fn structure_checks() {
        let k = arrow();
        assert!(k.adc().check_structure().is_ok());
        assert!(two_arrow_cycle().check_structure().is_ok());

        // epsilon of a boundary must vanish
        let bad = AugmentedDirectedComplex::new(
            vec![0, 1],
            vec![Chain::zero(0), Chain::unit(0, 0)],
            vec![coeff(1), coeff(0)],
        )
        .unwrap();
        assert_eq!(bad.check_structure(), Err(StructureError::AugmentedBoundaryNonzero(1)));
    }

    #[test]
    fn validates_morphisms() {
        let k = arrow();
        let id = ChainMorphism::identity(k.adc());
        assert!(ChainMorphism::new(k.adc().clone(), k.adc().clone(), id.images().to_vec()).is_ok());

        // a <-> b swapped under the identity on x is not a chain map
        let swap = ChainMorphism::new(
            k.adc().clone(),
            k.adc().clone(),
            vec![Chain::unit(0, 2), Chain::unit(1, 1), Chain::unit(0, 0)],
        );
        assert_eq!(swap.unwrap_err(), MorphismError::NotChainMap(1));

        // dropping x while keeping the endpoints is not a chain map either
        let drop_x = ChainMorphism::new(
            k.adc().clone(),
            k.adc().clone(),
            vec![Chain::unit(0, 0), Chain::zero(1), Chain::unit(0, 2)],
        );
        assert_eq!(drop_x.unwrap_err(), MorphismError::NotChainMap(1));

        let neg = ChainMorphism::new(
            k.adc().clone(),
            k.adc().clone(),
            vec![Chain::unit(0, 0), Chain::from_terms(1, [(1, coeff(-1))]), Chain::unit(0, 2)],
        );
        assert_eq!(neg.unwrap_err(), MorphismError::NegativeEntry(1));

        let unaug = ChainMorphism::new(
            k.adc().clone(),
            k.adc().clone(),
            vec![Chain::zero(0), Chain::zero(1), Chain::zero(0)],
        );
        assert_eq!(unaug.unwrap_err(), MorphismError::NotAugmented(0));
    }

    #[test]
    fn composes_morphisms() {
        let k = arrow();
        let point = SimpleAdc::from_dims(&DimensionSequence::new(vec![0]).unwrap(), Convention::Std);
        let id = ChainMorphism::identity(k.adc());

        // collapse the arrow onto the point
        let collapse = ChainMorphism::new(
            k.adc().clone(),
            point.adc().clone(),
            vec![Chain::unit(0, 0), Chain::zero(1), Chain::unit(0, 0)],
        )
        .unwrap();

        assert_eq!(collapse.compose(&id).unwrap(), collapse);

        let point_id = ChainMorphism::identity(point.adc());
        let double = point_id.compose(&collapse).unwrap();
        assert_eq!(double, collapse);

        let mismatch = collapse.compose(&collapse);
        assert_eq!(mismatch.unwrap_err(), MorphismError::SourceTargetMismatch);
    }

    #[test]
    fn matrix_round_trip() {
        let k = arrow();
        let id = ChainMorphism::identity(k.adc());
        let mut mats = BTreeMap::new();
        mats.insert(0, id.degree_matrix(0));
        mats.insert(1, id.degree_matrix(1));
        let back = ChainMorphism::from_degree_matrices(k.adc().clone(), k.adc().clone(), &mats).unwrap();
        assert_eq!(back, id);
    }

    #[test]
    fn acyclicity_detector() {
        assert!(relation_is_acyclic(3, &[(0, 1), (1, 2)]));
        assert!(!relation_is_acyclic(3, &[(0, 1), (1, 2), (2, 0)]));
        assert!(relation_is_acyclic(0, &[]));
    }
}
