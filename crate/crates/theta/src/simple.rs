//! Simple augmented directed complexes.
//!
//! A simple complex is the one generated by a continuously graded ordered
//! set: the basis is the set itself, degree-0 elements augment to 1, and the
//! boundary of a positive-degree element is the difference of the nearest
//! lower-dimensional elements on either side.  Morphisms between simple
//! complexes admit a purely combinatorial description in terms of separated
//! sequences and bridging, which is what makes exhaustive hom-set
//! enumeration possible.

use crate::adc::{same_complex, AugmentedDirectedComplex, Chain, ChainMorphism, Coeff};
use crate::rep::{DimensionSequence, GradedOrderedSet};
use num_traits::{One, Zero};
use std::sync::Arc;
use thiserror::Error;

/// Orientation of the boundary of a simple complex.
///
/// `Std` takes the boundary of an element to be (first lower-dimensional
/// element after it) minus (last one before it); `Swapped` negates that.
/// Both labelings appear in the literature, so the choice is surfaced as a
/// flag; hom-sets and all derived cardinalities are identical under either.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Std,
    Swapped,
}

impl Convention {
    pub fn sign(self) -> i64 {
        match self {
            Convention::Std => 1,
            Convention::Swapped => -1,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparationError {
    #[error("sequence mixes basis elements of different degrees")]
    MixedDegrees,
    #[error("the endpoint sequences are not comparable")]
    NotComparable,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimpleMorphismError {
    #[error("expected images for {expected} basis elements, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of element {element} mentions {term}, which is out of range or of the wrong degree")]
    ImageTerm { element: usize, term: usize },
    #[error("image of element {0} is not a separated sequence")]
    NotSeparated(usize),
    #[error("zero-dimensional images must be increasing singletons (element {0})")]
    Condition1Violated(usize),
    #[error("bridging condition fails at element {0}")]
    Condition2Violated(usize),
}

/// A simple augmented directed complex together with the total basis order
/// it was generated from.
#[derive(Debug, Clone)]
pub struct SimpleAdc {
    adc: Arc<AugmentedDirectedComplex>,
    dims: DimensionSequence,
    convention: Convention,
}

impl PartialEq for SimpleAdc {
    fn eq(&self, other: &Self) -> bool {
        self.convention == other.convention && self.dims == other.dims
    }
}

impl Eq for SimpleAdc {}

impl SimpleAdc {
    pub fn from_dims(dims: &DimensionSequence, convention: Convention) -> Self {
        Self::from_graded_set(&GradedOrderedSet::new(dims.clone()), convention)
    }

    /// The complex generated by a graded ordered set: basis equal to the
    /// set, augmentation 1 in degree 0, boundary the signed difference of
    /// the two neighbouring lower-dimensional elements.
    pub fn from_graded_set(set: &GradedOrderedSet, convention: Convention) -> Self {
        let n = set.len();
        let mut degrees = Vec::with_capacity(n);
        let mut boundary = Vec::with_capacity(n);
        let mut augmentation = Vec::with_capacity(n);
        for i in 0..n {
            let d = set.dim(i);
            degrees.push(d);
            if d == 0 {
                boundary.push(Chain::zero(0));
                augmentation.push(Coeff::one());
            } else {
                let (before, after) = set.boundaries(i).expect("positive degree");
                let diff = Chain::unit(d - 1, after).sub(&Chain::unit(d - 1, before));
                boundary.push(match convention {
                    Convention::Std => diff,
                    Convention::Swapped => diff.neg(),
                });
                augmentation.push(Coeff::zero());
            }
        }
        let adc = AugmentedDirectedComplex::new(degrees, boundary, augmentation)
            .expect("generated complexes are well-shaped");
        debug_assert!(adc.check_structure().is_ok());
        SimpleAdc { adc: Arc::new(adc), dims: set.dims().clone(), convention }
    }

    /// Recognize a complex produced by [`SimpleAdc::from_graded_set`] under
    /// the given convention.
    pub fn try_from_adc_with(
        adc: &Arc<AugmentedDirectedComplex>,
        convention: Convention,
    ) -> Option<SimpleAdc> {
        let dims = DimensionSequence::new(adc.degrees().iter().map(|&d| d as i64).collect()).ok()?;
        let expected = SimpleAdc::from_dims(&dims, convention);
        if expected.adc.as_ref() == adc.as_ref() {
            Some(SimpleAdc { adc: adc.clone(), dims, convention })
        } else {
            None
        }
    }

    /// Recognize a simple complex under either convention (`Std` preferred
    /// when the two coincide, e.g. for a single point).
    pub fn try_from_adc(adc: &Arc<AugmentedDirectedComplex>) -> Option<SimpleAdc> {
        SimpleAdc::try_from_adc_with(adc, Convention::Std)
            .or_else(|| SimpleAdc::try_from_adc_with(adc, Convention::Swapped))
    }

    pub fn adc(&self) -> &Arc<AugmentedDirectedComplex> {
        &self.adc
    }

    pub fn dims(&self) -> &DimensionSequence {
        &self.dims
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn degree(&self, element: usize) -> usize {
        self.adc.degree(element)
    }

    /// The boundary oriented so that it always reads (first after) minus
    /// (last before), independently of the stored convention.
    pub fn oriented_boundary(&self, chain: &Chain) -> Chain {
        let b = self.adc.boundary_of(chain);
        match self.convention {
            Convention::Std => b,
            Convention::Swapped => b.neg(),
        }
    }

    fn uniform_degree(&self, seq: &[usize]) -> Result<Option<usize>, SeparationError> {
        let mut degree = None;
        for &e in seq {
            let d = self.adc.degree(e);
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return Err(SeparationError::MixedDegrees),
                _ => {}
            }
        }
        Ok(degree)
    }

    /// Ordered sequence whose consecutive terms strictly enclose an element
    /// of lower dimension.  Empty sequences and singletons are separated.
    pub fn is_separated(&self, seq: &[usize]) -> Result<bool, SeparationError> {
        let degree = match self.uniform_degree(seq)? {
            None => return Ok(true),
            Some(d) => d,
        };
        for w in seq.windows(2) {
            let (x, y) = (w[0], w[1]);
            if x > y {
                return Ok(false);
            }
            let enclosed = (x + 1..y).any(|m| self.adc.degree(m) < degree);
            if !enclosed {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The partial order on separated sequences of one degree: same length,
    /// termwise order, and nothing of lower dimension strictly between the
    /// corresponding terms.
    pub fn separated_leq(&self, lo: &[usize], hi: &[usize]) -> bool {
        if lo.len() != hi.len() {
            return false;
        }
        let degree = match (self.uniform_degree(lo), self.uniform_degree(hi)) {
            (Ok(a), Ok(b)) if a == b => match a {
                None => return true,
                Some(d) => d,
            },
            _ => return false,
        };
        for (&a, &b) in lo.iter().zip(hi.iter()) {
            if a > b {
                return false;
            }
            if (a + 1..b).any(|m| self.adc.degree(m) < degree) {
                return false;
            }
        }
        true
    }

    /// The equivalent characterization of the partial order: the difference
    /// is the boundary of a nonnegative combination one degree up.  Searches
    /// coefficients up to `bound`; used as an independent cross-check.
    pub fn leq_by_boundary_search(&self, lo: &[usize], hi: &[usize], bound: u32) -> bool {
        if lo.len() != hi.len() {
            return false;
        }
        let degree = match (self.uniform_degree(lo), self.uniform_degree(hi)) {
            (Ok(a), Ok(b)) if a == b => match a {
                None => return true,
                Some(d) => d,
            },
            _ => return false,
        };
        let diff = Chain::sum_of(degree, hi).sub(&Chain::sum_of(degree, lo));
        crate::adc::bounded_vectors(degree + 1, self.adc.elements_of_degree(degree + 1), bound)
            .iter()
            .any(|chain| self.oriented_boundary(chain) == diff)
    }

    /// Does the sequence `b` (elements one degree above) bridge `lo` and
    /// `hi`?  Defined by the chain equation: the boundary of the sum of `b`
    /// equals the difference of the endpoint sums.
    pub fn bridges(&self, b: &[usize], lo: &[usize], hi: &[usize]) -> Result<bool, SeparationError> {
        if !self.separated_leq(lo, hi) {
            return Err(SeparationError::NotComparable);
        }
        let endpoint_degree = self.uniform_degree(lo)?;
        let bridge_degree = self.uniform_degree(b)?;
        let degree = match (endpoint_degree, bridge_degree) {
            (None, None) => return Ok(true), // empty bridges empty endpoints
            (None, Some(bd)) => {
                if bd == 0 {
                    return Ok(false);
                }
                bd - 1
            }
            (Some(ed), None) => ed,
            (Some(ed), Some(bd)) => {
                if bd != ed + 1 {
                    return Ok(false);
                }
                ed
            }
        };
        let diff = Chain::sum_of(degree, hi).sub(&Chain::sum_of(degree, lo));
        let sum = Chain::sum_of(degree + 1, b);
        Ok(self.oriented_boundary(&sum) == diff)
    }

    /// The interleaving description of bridging: one element per gap between
    /// consecutive same-degree elements of the endpoint intervals.
    pub fn bridges_by_interleaving(
        &self,
        b: &[usize],
        lo: &[usize],
        hi: &[usize],
    ) -> Result<bool, SeparationError> {
        if !self.separated_leq(lo, hi) {
            return Err(SeparationError::NotComparable);
        }
        self.uniform_degree(b)?;
        let degree = match self.uniform_degree(lo)? {
            None => return Ok(b.is_empty()),
            Some(d) => d,
        };
        let mut expected = Vec::new();
        for (&a_lo, &a_hi) in lo.iter().zip(hi.iter()) {
            let stops: Vec<usize> = (a_lo..=a_hi).filter(|&m| self.adc.degree(m) == degree).collect();
            for w in stops.windows(2) {
                expected.push((w[0], w[1]));
            }
        }
        if b.len() != expected.len() {
            return Ok(false);
        }
        for (&elem, &(x, y)) in b.iter().zip(expected.iter()) {
            if !(x < elem && elem < y && self.adc.degree(elem) == degree + 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All sequences bridging `lo` and `hi`, in lexicographic order of the
    /// chosen elements.  Empty when the endpoints are not comparable.
    pub fn enumerate_bridges(&self, lo: &[usize], hi: &[usize]) -> Vec<Vec<usize>> {
        if !self.separated_leq(lo, hi) {
            return Vec::new();
        }
        let degree = match self.uniform_degree(lo) {
            Ok(None) => return vec![Vec::new()],
            Ok(Some(d)) => d,
            Err(_) => return Vec::new(),
        };
        let mut slots: Vec<Vec<usize>> = Vec::new();
        for (&a_lo, &a_hi) in lo.iter().zip(hi.iter()) {
            let stops: Vec<usize> = (a_lo..=a_hi).filter(|&m| self.adc.degree(m) == degree).collect();
            for w in stops.windows(2) {
                let choices: Vec<usize> = (w[0] + 1..w[1])
                    .filter(|&m| self.adc.degree(m) == degree + 1)
                    .collect();
                slots.push(choices);
            }
        }
        let mut out = vec![Vec::new()];
        for slot in &slots {
            let mut next = Vec::with_capacity(out.len() * slot.len());
            for prefix in &out {
                for &choice in slot {
                    let mut p = prefix.clone();
                    p.push(choice);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// Pairs of (n-1)-dimensional elements enclosing only elements of
    /// dimension >= n, together with the n-dimensional elements between
    /// them.  Every n-dimensional element lies in exactly one such gap.
    pub fn gap_pairs(&self, n: usize) -> Vec<Gap> {
        assert!(n >= 1);
        let lower: Vec<usize> = (0..self.adc.basis_len())
            .filter(|&i| self.adc.degree(i) == n - 1)
            .collect();
        let mut out = Vec::new();
        for w in lower.windows(2) {
            let (before, after) = (w[0], w[1]);
            if (before + 1..after).any(|m| self.adc.degree(m) < n) {
                continue;
            }
            let elements: Vec<usize> = (before + 1..after)
                .filter(|&m| self.adc.degree(m) == n)
                .collect();
            out.push(Gap { before, after, elements });
        }
        out
    }
}

/// A maximal run of elements of dimension >= n strictly between two
/// consecutive (n-1)-dimensional elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gap {
    pub before: usize,
    pub after: usize,
    pub elements: Vec<usize>,
}

/// Validate a combinatorial assignment (one sequence of target elements per
/// source basis element) and build the chain morphism it determines.
pub fn validate_morphism(
    k: &SimpleAdc,
    l: &SimpleAdc,
    images: &[Vec<usize>],
) -> Result<ChainMorphism, SimpleMorphismError> {
    let n = k.adc().basis_len();
    if images.len() != n {
        return Err(SimpleMorphismError::ImageCount { expected: n, got: images.len() });
    }
    for (b, image) in images.iter().enumerate() {
        let d = k.degree(b);
        for &t in image {
            if t >= l.adc().basis_len() || l.degree(t) != d {
                return Err(SimpleMorphismError::ImageTerm { element: b, term: t });
            }
        }
        match l.is_separated(image) {
            Ok(true) => {}
            _ => return Err(SimpleMorphismError::NotSeparated(b)),
        }
    }

    // condition on degree 0: increasing singletons
    let zeros = k.adc().elements_of_degree(0);
    for w in zeros.windows(2) {
        if !l.separated_leq(&images[w[0]], &images[w[1]]) {
            return Err(SimpleMorphismError::Condition1Violated(w[1]));
        }
    }
    for &z in zeros {
        if images[z].len() != 1 {
            return Err(SimpleMorphismError::Condition1Violated(z));
        }
    }

    // condition in each positive degree: bridging and monotone over gaps
    for degree in 1..=k.dims().max_dim() {
        for gap in k.gap_pairs(degree) {
            let lo = &images[gap.before];
            let hi = &images[gap.after];
            for &e in &gap.elements {
                match l.bridges_by_interleaving(&images[e], lo, hi) {
                    Ok(true) => {}
                    _ => return Err(SimpleMorphismError::Condition2Violated(e)),
                }
            }
            for w in gap.elements.windows(2) {
                if !l.separated_leq(&images[w[0]], &images[w[1]]) {
                    return Err(SimpleMorphismError::Condition2Violated(w[1]));
                }
            }
        }
    }

    let chains = images
        .iter()
        .enumerate()
        .map(|(b, els)| Chain::sum_of(k.degree(b), els))
        .collect();
    Ok(ChainMorphism::new(k.adc().clone(), l.adc().clone(), chains)
        .expect("the combinatorial conditions guarantee a valid chain morphism"))
}

/// The image of a basis element as a set of target elements, when the image
/// chain is multiplicity-free.
pub fn image_sequence(f: &ChainMorphism, element: usize) -> Option<Vec<usize>> {
    f.image(element).as_element_set()
}

/// Images of valid morphisms between simple complexes are separated
/// sequences; exposed as a checkable property.
pub fn image_is_separated(l: &SimpleAdc, f: &ChainMorphism, element: usize) -> bool {
    match image_sequence(f, element) {
        Some(seq) => matches!(l.is_separated(&seq), Ok(true)),
        None => false,
    }
}

/// The complete hom-set between two simple complexes, built dimension by
/// dimension from the combinatorial description, in a canonical order.
pub fn enumerate_hom(k: &SimpleAdc, l: &SimpleAdc) -> Vec<ChainMorphism> {
    assert_eq!(
        k.convention(),
        l.convention(),
        "hom-sets require one orientation convention on both sides"
    );
    let max_dim = k.dims().max_dim();
    let mut search = HomSearch {
        k,
        l,
        max_dim,
        images: vec![Vec::new(); k.adc().basis_len()],
        out: Vec::new(),
    };
    search.dimension(0);
    let mut out = search.out;
    out.sort_by_key(|m| m.sort_key());
    out.dedup();
    out
}

struct HomSearch<'a> {
    k: &'a SimpleAdc,
    l: &'a SimpleAdc,
    max_dim: usize,
    images: Vec<Vec<usize>>,
    out: Vec<ChainMorphism>,
}

impl HomSearch<'_> {
    fn dimension(&mut self, n: usize) {
        if n > self.max_dim {
            self.emit();
            return;
        }
        if n == 0 {
            self.zero_choice(0, 0);
        } else {
            let gaps = self.k.gap_pairs(n);
            self.gap_choice(n, &gaps, 0);
        }
    }

    fn zero_choice(&mut self, i: usize, min_pos: usize) {
        let zeros_k = self.k.adc().elements_of_degree(0);
        if i == zeros_k.len() {
            self.dimension(1);
            return;
        }
        let element = zeros_k[i];
        let zeros_l: Vec<usize> = self.l.adc().elements_of_degree(0).to_vec();
        for (pos, &candidate) in zeros_l.iter().enumerate().skip(min_pos) {
            self.images[element] = vec![candidate];
            self.zero_choice(i + 1, pos);
        }
    }

    fn gap_choice(&mut self, n: usize, gaps: &[Gap], g: usize) {
        if g == gaps.len() {
            self.dimension(n + 1);
            return;
        }
        let lo = self.images[gaps[g].before].clone();
        let hi = self.images[gaps[g].after].clone();
        let bridges = self.l.enumerate_bridges(&lo, &hi);
        self.bridge_choice(n, gaps, g, &bridges, 0, None);
    }

    fn bridge_choice(
        &mut self,
        n: usize,
        gaps: &[Gap],
        g: usize,
        bridges: &[Vec<usize>],
        e: usize,
        prev: Option<usize>,
    ) {
        let gap = &gaps[g];
        if e == gap.elements.len() {
            self.gap_choice(n, gaps, g + 1);
            return;
        }
        for (bi, bridge) in bridges.iter().enumerate() {
            if let Some(p) = prev {
                if !self.l.separated_leq(&bridges[p], bridge) {
                    continue;
                }
            }
            self.images[gap.elements[e]] = bridge.clone();
            self.bridge_choice(n, gaps, g, bridges, e + 1, Some(bi));
        }
    }

    fn emit(&mut self) {
        let chains = self
            .images
            .iter()
            .enumerate()
            .map(|(b, els)| Chain::sum_of(self.k.adc().degree(b), els))
            .collect();
        self.out.push(ChainMorphism::new_unchecked(
            self.k.adc().clone(),
            self.l.adc().clone(),
            chains,
        ));
    }
}

/// Composition of a composable pair coming from hom-set enumeration; thin
/// wrapper that keeps call sites readable.
pub fn compose(outer: &ChainMorphism, inner: &ChainMorphism) -> ChainMorphism {
    assert!(same_complex(inner.target(), outer.source()));
    outer.compose(inner).expect("endpoints checked")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adc::coeff;

    fn simple(dims: &[i64]) -> SimpleAdc {
        SimpleAdc::from_dims(&DimensionSequence::new(dims.to_vec()).unwrap(), Convention::Std)
    }

    #[test]
    fn generates_boundaries_from_the_order() {
        let point = simple(&[0]);
        assert_eq!(point.adc().basis_len(), 1);
        assert!(point.adc().boundary(0).is_zero());

        let arrow = simple(&[0, 1, 0]);
        assert_eq!(
            arrow.adc().boundary(1),
            &Chain::unit(0, 2).sub(&Chain::unit(0, 0))
        );

        let globe = simple(&[0, 1, 2, 1, 0]);
        assert_eq!(globe.adc().boundary(2), &Chain::unit(1, 3).sub(&Chain::unit(1, 1)));
        assert_eq!(globe.adc().boundary(1), &Chain::unit(0, 4).sub(&Chain::unit(0, 0)));
        assert_eq!(globe.adc().boundary(3), &Chain::unit(0, 4).sub(&Chain::unit(0, 0)));
        assert!(globe.adc().check_structure().is_ok());
    }

    #[test]
    fn swapped_convention_negates_boundaries() {
        let dims = DimensionSequence::new(vec![0, 1, 0]).unwrap();
        let std = SimpleAdc::from_dims(&dims, Convention::Std);
        let swapped = SimpleAdc::from_dims(&dims, Convention::Swapped);
        assert_eq!(swapped.adc().boundary(1), &std.adc().boundary(1).neg());
        // the oriented boundary agrees under both conventions
        let c = Chain::unit(1, 1);
        assert_eq!(std.oriented_boundary(&c), swapped.oriented_boundary(&c));
    }

    #[test]
    fn recognizes_generated_complexes() {
        for dims in [vec![0], vec![0, 1, 0], vec![0, 1, 2, 1, 0]] {
            for conv in [Convention::Std, Convention::Swapped] {
                let k = SimpleAdc::from_dims(&DimensionSequence::new(dims.clone()).unwrap(), conv);
                let back = SimpleAdc::try_from_adc(k.adc()).unwrap();
                assert_eq!(back.dims(), k.dims());
            }
        }
        let cycle = Arc::new(
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
        );
        assert!(SimpleAdc::try_from_adc(&cycle).is_none());
    }

    #[test]
    fn separatedness() {
        let pair = simple(&[0, 1, 0, 1, 0]); // a x b y c
        assert_eq!(pair.is_separated(&[]), Ok(true));
        assert_eq!(pair.is_separated(&[1, 3]), Ok(true));
        assert_eq!(pair.is_separated(&[1, 1]), Ok(false));
        assert_eq!(pair.is_separated(&[0]), Ok(true));
        assert_eq!(pair.is_separated(&[0, 2]), Ok(false)); // nothing of lower dim between
        assert_eq!(pair.is_separated(&[0, 1]), Err(SeparationError::MixedDegrees));
    }

    #[test]
    fn separated_order() {
        let arrow = simple(&[0, 1, 0]);
        assert!(arrow.separated_leq(&[0], &[0]));
        assert!(arrow.separated_leq(&[0], &[2]));
        assert!(!arrow.separated_leq(&[2], &[0]));
        assert!(!arrow.separated_leq(&[0], &[0, 2]));

        // both characterizations agree here
        assert!(arrow.leq_by_boundary_search(&[0], &[2], 1));
        assert!(!arrow.leq_by_boundary_search(&[2], &[0], 2));

        // between the two 1-cells of a globe sits only the 2-cell
        let globe = simple(&[0, 1, 2, 1, 0]);
        assert!(globe.separated_leq(&[1], &[3]));
        assert!(globe.leq_by_boundary_search(&[1], &[3], 1));
    }

    #[test]
    fn bridging() {
        let arrow = simple(&[0, 1, 0]);
        assert_eq!(arrow.bridges(&[], &[0], &[0]), Ok(true));
        assert_eq!(arrow.bridges(&[1], &[0], &[2]), Ok(true));
        assert_eq!(arrow.bridges_by_interleaving(&[1], &[0], &[2]), Ok(true));

        let pair = simple(&[0, 1, 0, 1, 0]);
        assert_eq!(pair.bridges(&[1], &[0], &[4]), Ok(false));
        assert_eq!(pair.bridges(&[1, 3], &[0], &[4]), Ok(true));
        assert_eq!(pair.bridges_by_interleaving(&[1, 3], &[0], &[4]), Ok(true));
        assert_eq!(
            pair.bridges(&[1], &[2], &[0]),
            Err(SeparationError::NotComparable)
        );
    }

    #[test]
    fn enumerates_bridges() {
        let pair = simple(&[0, 1, 0, 1, 0]);
        assert_eq!(pair.enumerate_bridges(&[0], &[0]), vec![Vec::<usize>::new()]);
        assert_eq!(pair.enumerate_bridges(&[0], &[2]), vec![vec![1]]);
        assert_eq!(pair.enumerate_bridges(&[0], &[4]), vec![vec![1, 3]]);
    }

    #[test]
    fn gap_structure() {
        let two_globes = simple(&[0, 1, 2, 1, 2, 1, 0]);
        let gaps1 = two_globes.gap_pairs(1);
        assert_eq!(gaps1.len(), 1);
        assert_eq!(gaps1[0].elements, vec![1, 3, 5]);
        let gaps2 = two_globes.gap_pairs(2);
        assert_eq!(gaps2.len(), 2);
        assert_eq!(gaps2[0].elements, vec![2]);
        assert_eq!(gaps2[1].elements, vec![4]);
    }

    #[test]
    fn validates_combinatorial_morphisms() {
        let arrow = simple(&[0, 1, 0]);
        let id = validate_morphism(&arrow, &arrow, &[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(id, ChainMorphism::identity(arrow.adc()));

        // collapse both endpoints onto the source point
        let collapse = validate_morphism(&arrow, &arrow, &[vec![0], vec![], vec![0]]).unwrap();
        assert!(collapse.image(1).is_zero());

        let swap = validate_morphism(&arrow, &arrow, &[vec![2], vec![1], vec![0]]);
        assert_eq!(swap.unwrap_err(), SimpleMorphismError::Condition1Violated(2));
    }

    #[test]
    fn hom_counts_match_the_simplex_category() {
        let objects: Vec<SimpleAdc> = (0..=3)
            .map(|m| {
                let mut dims = vec![0i64];
                for _ in 0..m {
                    dims.push(1);
                    dims.push(0);
                }
                simple(&dims)
            })
            .collect();
        // |Hom([m], [n])| = C(m + n + 1, m + 1)
        fn binomial(n: u64, k: u64) -> u64 {
            let mut acc = 1u64;
            for i in 0..k {
                acc = acc * (n - i) / (i + 1);
            }
            acc
        }
        for (m, a) in objects.iter().enumerate() {
            for (n, b) in objects.iter().enumerate() {
                let hom = enumerate_hom(a, b);
                let expected = binomial((m + n + 1) as u64, (m + 1) as u64);
                assert_eq!(hom.len() as u64, expected, "hom({m},{n})");
            }
        }
    }

    #[test]
    fn hom_of_globes() {
        let globe = simple(&[0, 1, 2, 1, 0]);
        assert_eq!(enumerate_hom(&globe, &globe).len(), 5);
        let point = simple(&[0]);
        assert_eq!(enumerate_hom(&point, &point).len(), 1);
        assert_eq!(enumerate_hom(&point, &globe).len(), 2);
    }

    #[test]
    fn images_are_separated() {
        let pair = simple(&[0, 1, 0, 1, 0]);
        let globe = simple(&[0, 1, 2, 1, 0]);
        for (a, b) in [(&pair, &globe), (&globe, &pair), (&pair, &pair)] {
            for f in enumerate_hom(a, b) {
                for e in 0..a.adc().basis_len() {
                    assert!(image_is_separated(b, &f, e));
                }
            }
        }
    }

    #[test]
    fn hom_sets_are_closed_under_composition() {
        let arrow = simple(&[0, 1, 0]);
        let pair = simple(&[0, 1, 0, 1, 0]);
        let hom_ab = enumerate_hom(&arrow, &pair);
        let hom_ba = enumerate_hom(&pair, &arrow);
        let hom_aa = enumerate_hom(&arrow, &arrow);
        for f in &hom_ab {
            for g in &hom_ba {
                let gf = g.compose(f).unwrap();
                assert!(hom_aa.contains(&gf));
            }
        }
    }
}
