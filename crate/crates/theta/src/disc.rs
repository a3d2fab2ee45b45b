//! The finite-disc side of the duality: coaugmented cochain complexes.
//!
//! Dualizing a simple complex transposes its boundary into a coboundary and
//! its augmentation into the coaugmentation sending 1 to the sum of the
//! degree-0 basis elements.  Morphisms dualize contravariantly by matrix
//! transposition.  The coboundary also admits a direct description by
//! window scans along the basis order; agreement of the two is a verified
//! property, not the constructor.

use crate::adc::{bounded_vectors, AugmentedDirectedComplex, Chain, ChainMorphism, Coeff};
use crate::simple::{Convention, SimpleAdc};
use num_traits::Zero;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CochainShapeError {
    #[error("lengths of degrees/coboundary data disagree")]
    LengthMismatch,
    #[error("coboundary of element {element} must have degree {expected}, got {got}")]
    CoboundaryDegree { element: usize, expected: usize, got: usize },
    #[error("coboundary of element {element} mentions {term}, which is not one degree higher")]
    CoboundaryTermDegree { element: usize, term: usize },
    #[error("the coaugmentation must be a degree-0 chain over the basis")]
    BadCoaugmentation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CochainMorphismError {
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of element {element} mentions {term}, which is out of range or of the wrong degree")]
    ImageTerm { element: usize, term: usize },
    #[error("negative entry in the image of element {0}")]
    NegativeEntry(usize),
    #[error("cochain-map law fails at element {0}")]
    NotCochainMap(usize),
    #[error("the coaugmentation is not preserved")]
    NotCoaugmented,
}

/// A coaugmented cochain complex of free abelian groups with a prescribed
/// basis; the coboundary raises degree by one.
#[derive(Debug, PartialEq, Eq)]
pub struct CochainComplex {
    degrees: Vec<usize>,
    coboundary: Vec<Chain>,
    eta: Chain,
    by_degree: Vec<Vec<usize>>,
}

impl CochainComplex {
    pub fn new(
        degrees: Vec<usize>,
        coboundary: Vec<Chain>,
        eta: Chain,
    ) -> Result<Self, CochainShapeError> {
        let n = degrees.len();
        if coboundary.len() != n {
            return Err(CochainShapeError::LengthMismatch);
        }
        for i in 0..n {
            let expected = degrees[i] + 1;
            if coboundary[i].degree() != expected {
                return Err(CochainShapeError::CoboundaryDegree {
                    element: i,
                    expected,
                    got: coboundary[i].degree(),
                });
            }
            for t in coboundary[i].support() {
                if t >= n || degrees[t] != expected {
                    return Err(CochainShapeError::CoboundaryTermDegree { element: i, term: t });
                }
            }
        }
        if eta.degree() != 0 || eta.support().any(|t| t >= n || degrees[t] != 0) {
            return Err(CochainShapeError::BadCoaugmentation);
        }
        let max_degree = degrees.iter().max().copied().unwrap_or(0);
        let mut by_degree = vec![Vec::new(); max_degree + 1];
        for (i, &d) in degrees.iter().enumerate() {
            by_degree[d].push(i);
        }
        Ok(CochainComplex { degrees, coboundary, eta, by_degree })
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

    pub fn coboundary(&self, element: usize) -> &Chain {
        &self.coboundary[element]
    }

    pub fn eta(&self) -> &Chain {
        &self.eta
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len().saturating_sub(1)
    }

    pub fn elements_of_degree(&self, degree: usize) -> &[usize] {
        self.by_degree.get(degree).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn coboundary_of(&self, chain: &Chain) -> Chain {
        let mut acc = Chain::zero(chain.degree() + 1);
        for (ix, c) in chain.terms() {
            acc = acc.add(&self.coboundary[ix].scale(c));
        }
        acc
    }

    /// Exactness: the coboundary squares to zero and kills the
    /// coaugmentation.
    pub fn check_structure(&self) -> bool {
        (0..self.basis_len()).all(|i| self.coboundary_of(&self.coboundary[i]).is_zero())
            && self.coboundary_of(&self.eta).is_zero()
    }
}

/// Transpose a complex: same graded basis, coboundary dual to the boundary,
/// coaugmentation dual to the augmentation.
pub fn dualize(k: &AugmentedDirectedComplex) -> CochainComplex {
    let n = k.basis_len();
    let mut coboundary: Vec<Vec<(usize, Coeff)>> = vec![Vec::new(); n];
    for x in 0..n {
        if k.degree(x) == 0 {
            continue;
        }
        for (e, c) in k.boundary(x).terms() {
            coboundary[e].push((x, c.clone()));
        }
    }
    let coboundary = coboundary
        .into_iter()
        .enumerate()
        .map(|(e, terms)| Chain::from_terms(k.degree(e) + 1, terms))
        .collect();
    let eta = Chain::from_terms(
        0,
        k.elements_of_degree(0)
            .iter()
            .map(|&b| (b, k.augmentation(b).clone())),
    );
    CochainComplex::new(k.degrees().to_vec(), coboundary, eta)
        .expect("the transpose of a well-shaped complex is well-shaped")
}

/// Transpose back; the double transpose is the identity.
pub fn undualize(c: &CochainComplex) -> Result<AugmentedDirectedComplex, crate::adc::ComplexShapeError> {
    let n = c.basis_len();
    let mut boundary: Vec<Vec<(usize, Coeff)>> = vec![Vec::new(); n];
    for e in 0..n {
        for (x, co) in c.coboundary(e).terms() {
            boundary[x].push((e, co.clone()));
        }
    }
    let boundary = boundary
        .into_iter()
        .enumerate()
        .map(|(x, terms)| Chain::from_terms(c.degree(x).saturating_sub(1), terms))
        .collect();
    let augmentation = (0..n)
        .map(|b| if c.degree(b) == 0 { c.eta().coefficient(b) } else { Coeff::zero() })
        .collect();
    AugmentedDirectedComplex::new(c.degrees().to_vec(), boundary, augmentation)
}

/// The direct description of the coboundary of a simple complex: for each
/// element, sum the elements one dimension higher reachable through a window
/// of strictly higher-dimensional elements, on either side.  Under the
/// standard convention the positive part lies before the element; under the
/// swapped convention the sides trade places.
pub fn window_coboundary(k: &SimpleAdc) -> Vec<Chain> {
    let dims = k.dims().dims();
    let n = dims.len();
    let mut out = Vec::with_capacity(n);
    for q in 0..n {
        let d = dims[q];
        let mut before = Vec::new();
        let mut t = q;
        while t > 0 && dims[t - 1] > d {
            t -= 1;
            if dims[t] == d + 1 {
                before.push(t);
            }
        }
        let mut after = Vec::new();
        let mut s = q;
        while s + 1 < n && dims[s + 1] > d {
            s += 1;
            if dims[s] == d + 1 {
                after.push(s);
            }
        }
        let before = Chain::sum_of(d + 1, &before);
        let after = Chain::sum_of(d + 1, &after);
        out.push(match k.convention() {
            Convention::Std => before.sub(&after),
            Convention::Swapped => after.sub(&before),
        });
    }
    out
}

/// A coaugmentation-preserving cochain map with nonnegative matrices.
#[derive(Debug, Clone)]
pub struct CochainMorphism {
    source: Arc<CochainComplex>,
    target: Arc<CochainComplex>,
    images: Vec<Chain>,
}

impl CochainMorphism {
    pub fn new(
        source: Arc<CochainComplex>,
        target: Arc<CochainComplex>,
        images: Vec<Chain>,
    ) -> Result<Self, CochainMorphismError> {
        if images.len() != source.basis_len() {
            return Err(CochainMorphismError::ImageCount {
                expected: source.basis_len(),
                got: images.len(),
            });
        }
        for (e, image) in images.iter().enumerate() {
            let d = source.degree(e);
            if image.degree() != d {
                return Err(CochainMorphismError::ImageTerm { element: e, term: usize::MAX });
            }
            for t in image.support() {
                if t >= target.basis_len() || target.degree(t) != d {
                    return Err(CochainMorphismError::ImageTerm { element: e, term: t });
                }
            }
            if !image.is_nonnegative() {
                return Err(CochainMorphismError::NegativeEntry(e));
            }
        }
        let candidate = CochainMorphism { source, target, images };
        for e in 0..candidate.source.basis_len() {
            let pushed = candidate.apply(candidate.source.coboundary(e));
            let cobounded = candidate.target.coboundary_of(&candidate.images[e]);
            if pushed != cobounded {
                return Err(CochainMorphismError::NotCochainMap(e));
            }
        }
        if candidate.apply(candidate.source.eta()) != *candidate.target.eta() {
            return Err(CochainMorphismError::NotCoaugmented);
        }
        Ok(candidate)
    }

    pub fn source(&self) -> &Arc<CochainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CochainComplex> {
        &self.target
    }

    pub fn image(&self, element: usize) -> &Chain {
        &self.images[element]
    }

    pub fn apply(&self, chain: &Chain) -> Chain {
        let mut acc = Chain::zero(chain.degree());
        for (ix, c) in chain.terms() {
            acc = acc.add(&self.images[ix].scale(c));
        }
        acc
    }

    pub fn degree_matrix(&self, degree: usize) -> Vec<Vec<Coeff>> {
        let rows = self.target.elements_of_degree(degree);
        let cols = self.source.elements_of_degree(degree);
        rows.iter()
            .map(|&r| cols.iter().map(|&c| self.images[c].coefficient(r)).collect())
            .collect()
    }

    pub fn sort_key(&self) -> Vec<Vec<(usize, Coeff)>> {
        self.images
            .iter()
            .map(|c| c.terms().map(|(ix, co)| (ix, co.clone())).collect())
            .collect()
    }
}

impl PartialEq for CochainMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.images == other.images
    }
}

impl Eq for CochainMorphism {}

/// Contravariant dual of a chain morphism f: K -> L, a cochain morphism
/// dual(L) -> dual(K) given by the transposed matrices.
pub fn dualize_morphism(f: &ChainMorphism) -> CochainMorphism {
    let source = Arc::new(dualize(f.target()));
    let target = Arc::new(dualize(f.source()));
    let mut images: Vec<Vec<(usize, Coeff)>> = vec![Vec::new(); f.target().basis_len()];
    for b in 0..f.source().basis_len() {
        for (c, co) in f.image(b).terms() {
            images[c].push((b, co.clone()));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(c, terms)| Chain::from_terms(f.target().degree(c), terms))
        .collect();
    CochainMorphism::new(source, target, images)
        .expect("transposes of valid morphisms are valid cochain morphisms")
}

/// Exhaustive search over all bounded nonnegative matrix families
/// satisfying the cochain-map and coaugmentation conditions.  Processes
/// elements from the top degree down so each constraint only involves
/// images already chosen.
pub fn enumerate_cochain_hom_matrix_search(
    source: &Arc<CochainComplex>,
    target: &Arc<CochainComplex>,
    bound: u32,
) -> Vec<CochainMorphism> {
    let mut order: Vec<usize> = (0..source.basis_len()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(source.degree(e)), e));
    let mut images: Vec<Chain> = (0..source.basis_len())
        .map(|e| Chain::zero(source.degree(e)))
        .collect();
    let mut found = Vec::new();

    fn assign(
        source: &Arc<CochainComplex>,
        target: &Arc<CochainComplex>,
        bound: u32,
        order: &[usize],
        pos: usize,
        images: &mut Vec<Chain>,
        found: &mut Vec<CochainMorphism>,
    ) {
        if pos == order.len() {
            // the coaugmentation couples the degree-0 columns; check last
            if let Ok(m) = CochainMorphism::new(source.clone(), target.clone(), images.clone()) {
                found.push(m);
            }
            return;
        }
        let e = order[pos];
        let d = source.degree(e);
        for candidate in bounded_vectors(d, target.elements_of_degree(d), bound) {
            // higher-degree images are already fixed
            let pushed = {
                let mut acc = Chain::zero(d + 1);
                for (ix, c) in source.coboundary(e).terms() {
                    acc = acc.add(&images[ix].scale(c));
                }
                acc
            };
            if target.coboundary_of(&candidate) == pushed {
                images[e] = candidate;
                assign(source, target, bound, order, pos + 1, images, found);
            }
        }
        images[e] = Chain::zero(d);
    }

    assign(source, target, bound, &order, 0, &mut images, &mut found);
    found.sort_by_key(|m| m.sort_key());
    found.dedup();
    found
}
