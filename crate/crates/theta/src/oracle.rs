//! Independent brute-force searches.
//!
//! These enumerators know nothing about separated sequences or bridging:
//! they walk every family of per-degree nonnegative matrices with entries up
//! to a bound and keep the ones satisfying the defining equations.  They
//! exist to cross-check the combinatorial enumerators and stay deliberately
//! naive; the only concession to speed is that the defining constraints are
//! checked column by column, which prunes the product search without
//! changing its result.

use crate::adc::{bounded_vectors, AugmentedDirectedComplex, Chain, ChainMorphism};
use num_traits::Zero;
use std::sync::Arc;

/// What the search requires of the augmentation in degree 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentationMode {
    /// Epsilon of the image equals epsilon of the element (morphisms of
    /// augmented directed complexes).
    Preserve,
    /// Epsilon of the image is zero (the hypothesis of the vanishing
    /// criterion for chain maps into loop-free unital bases).
    Zero,
}

struct MatrixSearch<'a> {
    source: &'a Arc<AugmentedDirectedComplex>,
    target: &'a Arc<AugmentedDirectedComplex>,
    bound: u32,
    mode: AugmentationMode,
    order: Vec<usize>,
    images: Vec<Chain>,
    found: Vec<ChainMorphism>,
}

impl MatrixSearch<'_> {
    fn assign(&mut self, pos: usize) {
        if pos == self.order.len() {
            let morphism = match self.mode {
                // revalidate through the public constructor
                AugmentationMode::Preserve => {
                    ChainMorphism::new(self.source.clone(), self.target.clone(), self.images.clone())
                        .expect("search constraints imply validity")
                }
                // deliberately not augmentation-preserving; callers only
                // inspect the matrices
                AugmentationMode::Zero => ChainMorphism::raw_chain_map(
                    self.source.clone(),
                    self.target.clone(),
                    self.images.clone(),
                ),
            };
            self.found.push(morphism);
            return;
        }
        let b = self.order[pos];
        let d = self.source.degree(b);
        for candidate in bounded_vectors(d, self.target.elements_of_degree(d), self.bound) {
            let ok = if d == 0 {
                let eps = self.target.augmentation_of(&candidate);
                match self.mode {
                    AugmentationMode::Preserve => &eps == self.source.augmentation(b),
                    AugmentationMode::Zero => eps.is_zero(),
                }
            } else {
                // lower-degree images are already fixed
                let mut pushed = Chain::zero(d - 1);
                for (ix, c) in self.source.boundary(b).terms() {
                    pushed = pushed.add(&self.images[ix].scale(c));
                }
                self.target.boundary_of(&candidate) == pushed
            };
            if ok {
                self.images[b] = candidate;
                self.assign(pos + 1);
            }
        }
        self.images[b] = Chain::zero(d);
    }
}

/// Exhaustive search over all bounded nonnegative matrix families
/// satisfying the chain-map law and the requested augmentation condition.
/// Returns the surviving morphisms in canonical order.
pub fn enumerate_hom_matrix_search(
    source: &Arc<AugmentedDirectedComplex>,
    target: &Arc<AugmentedDirectedComplex>,
    bound: u32,
    mode: AugmentationMode,
) -> Vec<ChainMorphism> {
    // process basis elements by increasing degree so the chain-map
    // constraint for an element only involves images already chosen
    let mut order: Vec<usize> = (0..source.basis_len()).collect();
    order.sort_by_key(|&b| (source.degree(b), b));
    let images = (0..source.basis_len())
        .map(|b| Chain::zero(source.degree(b)))
        .collect();
    let mut search = MatrixSearch { source, target, bound, mode, order, images, found: Vec::new() };
    search.assign(0);
    let mut found = search.found;
    found.sort_by_key(|m| m.sort_key());
    found.dedup();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::DimensionSequence;
    use crate::simple::{enumerate_hom, Convention, SimpleAdc};

    fn simple(dims: &[i64]) -> SimpleAdc {
        SimpleAdc::from_dims(&DimensionSequence::new(dims.to_vec()).unwrap(), Convention::Std)
    }

    #[test]
    fn matrix_search_agrees_with_the_combinatorial_enumeration() {
        let objects = [
            simple(&[0]),
            simple(&[0, 1, 0]),
            simple(&[0, 1, 0, 1, 0]),
            simple(&[0, 1, 2, 1, 0]),
        ];
        for a in &objects {
            for b in &objects {
                let combinatorial = enumerate_hom(a, b);
                let searched = enumerate_hom_matrix_search(a.adc(), b.adc(), 1, AugmentationMode::Preserve);
                assert_eq!(combinatorial, searched, "{} -> {}", a.dims(), b.dims());
            }
        }
    }

    #[test]
    fn raising_the_bound_adds_no_morphisms() {
        let objects = [simple(&[0]), simple(&[0, 1, 0]), simple(&[0, 1, 2, 1, 0])];
        for a in &objects {
            for b in &objects {
                let one = enumerate_hom_matrix_search(a.adc(), b.adc(), 1, AugmentationMode::Preserve);
                let two = enumerate_hom_matrix_search(a.adc(), b.adc(), 2, AugmentationMode::Preserve);
                assert_eq!(one, two);
            }
        }
    }

    #[test]
    fn zero_augmentation_forces_the_zero_map() {
        let objects = [simple(&[0, 1, 0]), simple(&[0, 1, 2, 1, 0])];
        for a in &objects {
            for b in &objects {
                let maps = enumerate_hom_matrix_search(a.adc(), b.adc(), 1, AugmentationMode::Zero);
                assert_eq!(maps.len(), 1);
                assert!(maps[0].is_zero_map());
            }
        }
    }
}
