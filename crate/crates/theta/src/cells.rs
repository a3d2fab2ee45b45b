//! The omega-category carried by an augmented directed complex.
//!
//! A cell is a finitely supported double sequence of nonnegative chains
//! (x_0^-, x_0^+ | x_1^-, x_1^+ | ...) whose degree-0 components augment to
//! 1 and whose level differences match the boundaries one level up:
//! x_q^+ - x_q^- = boundary(x_{q+1}^-) = boundary(x_{q+1}^+).  Identities
//! truncate a cell at a level; composition at level n is x - z + y where z
//! is the shared identity.  Every basis element of a unital complex carries
//! an atom, the cell of its iterated boundary parts.

use crate::adc::{
    bounded_vectors, same_complex, AugmentedDirectedComplex, Chain, ChainMorphism, Coeff,
    PositiveChain,
};
use crate::simple::SimpleAdc;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CellError {
    #[error("degree-0 components must augment to 1")]
    BadAugmentation,
    #[error("component difference at level {0} does not match the boundary one level up")]
    BoundaryMismatch(usize),
    #[error("nonzero components above the top degree of the complex")]
    InfiniteSupport,
    #[error("the complex does not have a unital basis")]
    NotUnital,
    #[error("the cells are not composable at this level")]
    NotComposable,
}

/// An element of the omega-category of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    complex: Arc<AugmentedDirectedComplex>,
    levels: Vec<(Chain, Chain)>, // trailing zero pairs trimmed
}

impl Cell {
    /// Validating constructor; checks the augmentation and the level
    /// matching conditions.
    pub fn new(
        complex: Arc<AugmentedDirectedComplex>,
        levels: Vec<(PositiveChain, PositiveChain)>,
    ) -> Result<Cell, CellError> {
        let levels: Vec<(Chain, Chain)> = levels
            .into_iter()
            .map(|(m, p)| (m.into_chain(), p.into_chain()))
            .collect();
        Cell::from_parts(complex, levels)
    }

    fn from_parts(
        complex: Arc<AugmentedDirectedComplex>,
        mut levels: Vec<(Chain, Chain)>,
    ) -> Result<Cell, CellError> {
        while levels.len() > 1
            && levels.last().map(|(m, p)| m.is_zero() && p.is_zero()).unwrap_or(false)
        {
            levels.pop();
        }
        if levels.is_empty() {
            return Err(CellError::BadAugmentation);
        }
        if levels.len() > complex.max_degree() + 1 {
            return Err(CellError::InfiniteSupport);
        }
        for (q, (m, p)) in levels.iter().enumerate() {
            assert!(
                m.degree() == q && p.degree() == q,
                "component at level {q} has the wrong degree"
            );
            assert!(
                m.support().chain(p.support()).all(|ix| complex.degree(ix) == q),
                "component at level {q} mentions elements of another degree"
            );
        }
        let (m0, p0) = &levels[0];
        if !complex.augmentation_of(m0).is_one() || !complex.augmentation_of(p0).is_one() {
            return Err(CellError::BadAugmentation);
        }
        for q in 0..levels.len() {
            let diff = levels[q].1.sub(&levels[q].0);
            let (bm, bp) = if q + 1 < levels.len() {
                (
                    complex.boundary_of(&levels[q + 1].0),
                    complex.boundary_of(&levels[q + 1].1),
                )
            } else {
                (Chain::zero(q), Chain::zero(q))
            };
            if diff != bm || diff != bp {
                return Err(CellError::BoundaryMismatch(q));
            }
        }
        Ok(Cell { complex, levels })
    }

    // for values valid by construction; fully checked in debug builds
    fn from_raw(complex: Arc<AugmentedDirectedComplex>, mut levels: Vec<(Chain, Chain)>) -> Cell {
        while levels.len() > 1
            && levels.last().map(|(m, p)| m.is_zero() && p.is_zero()).unwrap_or(false)
        {
            levels.pop();
        }
        debug_assert!(Cell::from_parts(complex.clone(), levels.clone()).is_ok());
        Cell { complex, levels }
    }

    pub fn complex(&self) -> &Arc<AugmentedDirectedComplex> {
        &self.complex
    }

    pub fn levels(&self) -> &[(Chain, Chain)] {
        &self.levels
    }

    /// Highest level with nonzero components; every cell is an identity for
    /// composition at and above this level.
    pub fn top_level(&self) -> usize {
        self.levels.len() - 1
    }

    /// Both components at a level, zeros above the top.
    pub fn components(&self, q: usize) -> (Chain, Chain) {
        match self.levels.get(q) {
            Some((m, p)) => (m.clone(), p.clone()),
            None => (Chain::zero(q), Chain::zero(q)),
        }
    }

    /// The left (`Minus`) or right (`Plus`) identity at level n: components
    /// below n are kept, level n is doubled from the chosen side, everything
    /// above is zero.
    pub fn truncate(&self, n: usize, sign: Sign) -> Cell {
        if n >= self.top_level() {
            return self.clone();
        }
        let mut levels: Vec<(Chain, Chain)> = self.levels[..n].to_vec();
        let pick = match sign {
            Sign::Minus => self.levels[n].0.clone(),
            Sign::Plus => self.levels[n].1.clone(),
        };
        levels.push((pick.clone(), pick));
        Cell::from_raw(self.complex.clone(), levels)
    }

    pub fn sort_key(&self) -> Vec<(Vec<(usize, Coeff)>, Vec<(usize, Coeff)>)> {
        self.levels
            .iter()
            .map(|(m, p)| {
                (
                    m.terms().map(|(ix, c)| (ix, c.clone())).collect(),
                    p.terms().map(|(ix, c)| (ix, c.clone())).collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, (m, p)) in self.levels.iter().enumerate() {
            if !first {
                write!(f, "; ")?;
            }
            write!(f, "{q}: ({m} | {p})")?;
            first = false;
        }
        Ok(())
    }
}

/// Composition at level n: defined when the right identity of `x` at n
/// equals the left identity of `y` at n, in which case the composite is
/// x - z + y componentwise.
pub fn compose(n: usize, x: &Cell, y: &Cell) -> Result<Cell, CellError> {
    if !same_complex(x.complex(), y.complex()) {
        return Err(CellError::NotComposable);
    }
    let z = x.truncate(n, Sign::Plus);
    if z != y.truncate(n, Sign::Minus) {
        return Err(CellError::NotComposable);
    }
    let top = x.levels.len().max(y.levels.len());
    let mut levels = Vec::with_capacity(top);
    for q in 0..top {
        let (xm, xp) = x.components(q);
        let (ym, yp) = y.components(q);
        let (zm, zp) = z.components(q);
        levels.push((xm.sub(&zm).add(&ym), xp.sub(&zp).add(&yp)));
    }
    Ok(Cell::from_raw(x.complex.clone(), levels))
}

/// The atom of a basis element: iterated negative parts on the left,
/// iterated positive parts on the right, the element itself doubled on top.
pub fn atom(complex: &Arc<AugmentedDirectedComplex>, element: usize) -> Result<Cell, CellError> {
    if !complex.is_unital() {
        return Err(CellError::NotUnital);
    }
    let d = complex.degree(element);
    let unit = Chain::unit(d, element);
    let mut rev = vec![(unit.clone(), unit)];
    for _ in 0..d {
        let (m, p) = rev.last().expect("nonempty");
        let next_m = complex.boundary_of(m).split_signs().1.into_chain();
        let next_p = complex.boundary_of(p).split_signs().0.into_chain();
        rev.push((next_m, next_p));
    }
    rev.reverse();
    Cell::from_parts(complex.clone(), rev)
}

/// The identities of an atom one level down are the atoms of the boundary
/// parts; meaningful for positive-dimensional elements of simple complexes,
/// where those parts are single basis elements.
pub fn atom_respects_boundaries(k: &SimpleAdc, element: usize) -> bool {
    let d = k.degree(element);
    assert!(d > 0, "zero-dimensional elements have no boundary atoms");
    let cell = match atom(k.adc(), element) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let (plus, minus) = k.adc().boundary(element).split_signs();
    let (lo, hi) = match (minus.as_element_set(), plus.as_element_set()) {
        (Some(lo), Some(hi)) if lo.len() == 1 && hi.len() == 1 => (lo[0], hi[0]),
        _ => return false,
    };
    cell.truncate(d - 1, Sign::Minus) == atom(k.adc(), lo).expect("unital")
        && cell.truncate(d - 1, Sign::Plus) == atom(k.adc(), hi).expect("unital")
}

/// Push a cell forward along a chain morphism, componentwise.
pub fn push_forward(f: &ChainMorphism, x: &Cell) -> Cell {
    assert!(
        same_complex(x.complex(), f.source()),
        "cell does not live in the source of the morphism"
    );
    let levels = x.levels.iter().map(|(m, p)| (f.apply(m), f.apply(p))).collect();
    Cell::from_raw(f.target().clone(), levels)
}

/// All cells with every coefficient bounded by `cap`, in canonical order.
/// For the complexes in the catalog the list is already complete at cap 1.
pub fn enumerate(complex: &Arc<AugmentedDirectedComplex>, cap: u32) -> Vec<Cell> {
    let top = complex.max_degree();
    // group candidate components of each positive degree by their boundary
    let mut by_boundary: Vec<BTreeMap<Chain, Vec<Chain>>> = Vec::with_capacity(top + 1);
    by_boundary.push(BTreeMap::new()); // unused slot for degree 0
    for q in 1..=top {
        let mut groups: BTreeMap<Chain, Vec<Chain>> = BTreeMap::new();
        for c in bounded_vectors(q, complex.elements_of_degree(q), cap) {
            groups.entry(complex.boundary_of(&c)).or_default().push(c);
        }
        by_boundary.push(groups);
    }

    fn extend(
        complex: &Arc<AugmentedDirectedComplex>,
        by_boundary: &[BTreeMap<Chain, Vec<Chain>>],
        top: usize,
        q: usize,
        levels: &mut Vec<(Chain, Chain)>,
        out: &mut Vec<Cell>,
    ) {
        let diff = levels[q - 1].1.sub(&levels[q - 1].0);
        if q > top {
            if diff.is_zero() {
                out.push(Cell::from_raw(complex.clone(), levels.clone()));
            }
            return;
        }
        let empty = Vec::new();
        let matching = by_boundary[q].get(&diff).unwrap_or(&empty);
        for m in matching {
            for p in matching {
                levels.push((m.clone(), p.clone()));
                extend(complex, by_boundary, top, q + 1, levels, out);
                levels.pop();
            }
        }
    }

    let mut out = Vec::new();
    let zero_candidates: Vec<Chain> = bounded_vectors(0, complex.elements_of_degree(0), cap)
        .into_iter()
        .filter(|c| complex.augmentation_of(c).is_one())
        .collect();
    for m in &zero_candidates {
        for p in &zero_candidates {
            let mut levels = vec![(m.clone(), p.clone())];
            extend(complex, &by_boundary, top, 1, &mut levels, &mut out);
        }
    }
    out.sort_by_key(|c| c.sort_key());
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::DimensionSequence;
    use crate::simple::{enumerate_hom, Convention};

    fn simple(dims: &[i64]) -> SimpleAdc {
        SimpleAdc::from_dims(&DimensionSequence::new(dims.to_vec()).unwrap(), Convention::Std)
    }

    fn pos(c: Chain) -> PositiveChain {
        PositiveChain::new(c).unwrap()
    }

    #[test]
    fn validates_cells() {
        let arrow = simple(&[0, 1, 0]);
        // the identity cell of an endpoint
        let id_a = Cell::new(
            arrow.adc().clone(),
            vec![(pos(Chain::unit(0, 0)), pos(Chain::unit(0, 0)))],
        );
        assert!(id_a.is_ok());

        // the arrow itself
        let x = Cell::new(
            arrow.adc().clone(),
            vec![
                (pos(Chain::unit(0, 0)), pos(Chain::unit(0, 2))),
                (pos(Chain::unit(1, 1)), pos(Chain::unit(1, 1))),
            ],
        );
        assert!(x.is_ok());

        // distinct endpoints with no connecting level
        let broken = Cell::new(
            arrow.adc().clone(),
            vec![(pos(Chain::unit(0, 0)), pos(Chain::unit(0, 2)))],
        );
        assert_eq!(broken.unwrap_err(), CellError::BoundaryMismatch(0));

        let not_unit = Cell::new(
            arrow.adc().clone(),
            vec![(pos(Chain::sum_of(0, &[0, 2])), pos(Chain::unit(0, 0)))],
        );
        assert_eq!(not_unit.unwrap_err(), CellError::BadAugmentation);
    }

    #[test]
    fn atoms() {
        let point = simple(&[0]);
        let a = atom(point.adc(), 0).unwrap();
        assert_eq!(a.top_level(), 0);

        let arrow = simple(&[0, 1, 0]);
        let x = atom(arrow.adc(), 1).unwrap();
        assert_eq!(x.components(0), (Chain::unit(0, 0), Chain::unit(0, 2)));
        assert_eq!(x.components(1), (Chain::unit(1, 1), Chain::unit(1, 1)));

        let globe = simple(&[0, 1, 2, 1, 0]);
        let alpha = atom(globe.adc(), 2).unwrap();
        assert_eq!(alpha.components(0), (Chain::unit(0, 0), Chain::unit(0, 4)));
        assert_eq!(alpha.components(1), (Chain::unit(1, 1), Chain::unit(1, 3)));
        assert_eq!(alpha.components(2), (Chain::unit(2, 2), Chain::unit(2, 2)));

        // a non-unital complex has no atoms
        let bad = Arc::new(
            AugmentedDirectedComplex::new(vec![0], vec![Chain::zero(0)], vec![Coeff::from(2)])
                .unwrap(),
        );
        assert_eq!(atom(&bad, 0).unwrap_err(), CellError::NotUnital);
    }

    #[test]
    fn truncation() {
        let arrow = simple(&[0, 1, 0]);
        let x = atom(arrow.adc(), 1).unwrap();
        assert_eq!(x.truncate(0, Sign::Minus), atom(arrow.adc(), 0).unwrap());
        assert_eq!(x.truncate(0, Sign::Plus), atom(arrow.adc(), 2).unwrap());
        // no support above the top level: truncation is the identity
        assert_eq!(x.truncate(1, Sign::Plus), x);
        assert_eq!(x.truncate(5, Sign::Minus), x);

        let globe = simple(&[0, 1, 2, 1, 0]);
        let alpha = atom(globe.adc(), 2).unwrap();
        let d1p = alpha.truncate(1, Sign::Plus);
        assert_eq!(d1p, atom(globe.adc(), 3).unwrap());
        assert_eq!(d1p.components(1), (Chain::unit(1, 3), Chain::unit(1, 3)));
    }

    #[test]
    fn atom_boundary_compatibility() {
        let arrow = simple(&[0, 1, 0]);
        assert!(atom_respects_boundaries(&arrow, 1));
        let globe = simple(&[0, 1, 2, 1, 0]);
        for e in [1, 2, 3] {
            assert!(atom_respects_boundaries(&globe, e));
        }
    }

    #[test]
    fn composition() {
        let pair = simple(&[0, 1, 0, 1, 0]);
        let x = atom(pair.adc(), 1).unwrap();
        let y = atom(pair.adc(), 3).unwrap();

        // x followed by its own right identity
        let idem = compose(0, &x, &x.truncate(0, Sign::Plus)).unwrap();
        assert_eq!(idem, x);

        let xy = compose(0, &x, &y).unwrap();
        assert_eq!(xy.components(0), (Chain::unit(0, 0), Chain::unit(0, 4)));
        assert_eq!(
            xy.components(1),
            (Chain::sum_of(1, &[1, 3]), Chain::sum_of(1, &[1, 3]))
        );

        let arrow = simple(&[0, 1, 0]);
        let a = atom(arrow.adc(), 1).unwrap();
        assert_eq!(compose(0, &a, &a).unwrap_err(), CellError::NotComposable);
    }

    #[test]
    fn cell_counts() {
        // free-category cell counts, enumerated by hand: a point has one
        // cell; a single arrow has both endpoints and the arrow; two
        // composable arrows add their composite; a 2-globe has two
        // endpoints, two parallel arrows and the 2-cell
        let expectations = [
            (vec![0i64], 1usize),
            (vec![0, 1, 0], 3),
            (vec![0, 1, 0, 1, 0], 6),
            (vec![0, 1, 2, 1, 0], 5),
        ];
        for (dims, expected) in expectations {
            let k = simple(&dims);
            let cells = enumerate(k.adc(), 1);
            assert_eq!(cells.len(), expected, "dims {dims:?}");
            // coefficients above 1 do not occur in these complexes
            assert_eq!(enumerate(k.adc(), 2).len(), expected, "cap 2, dims {dims:?}");
        }
    }

    #[test]
    fn push_forward_collapses() {
        let arrow = simple(&[0, 1, 0]);
        let point = simple(&[0]);
        let collapse =
            crate::simple::validate_morphism(&arrow, &point, &[vec![0], vec![], vec![0]]).unwrap();
        let x = atom(arrow.adc(), 1).unwrap();
        assert_eq!(push_forward(&collapse, &x), atom(point.adc(), 0).unwrap());

        let id = ChainMorphism::identity(arrow.adc());
        assert_eq!(push_forward(&id, &x), x);
    }

    #[test]
    fn push_forward_is_natural() {
        let pair = simple(&[0, 1, 0, 1, 0]);
        let arrow = simple(&[0, 1, 0]);
        let cells = enumerate(pair.adc(), 1);
        for f in enumerate_hom(&pair, &arrow) {
            for u in &cells {
                for v in &cells {
                    if let Ok(uv) = compose(0, u, v) {
                        let lhs = push_forward(&f, &uv);
                        let rhs = compose(0, &push_forward(&f, u), &push_forward(&f, v)).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn truncation_laws() {
        let globe = simple(&[0, 1, 2, 1, 0]);
        let cells = enumerate(globe.adc(), 1);
        for x in &cells {
            for n in 0..=2usize {
                for m in 0..n {
                    for s1 in [Sign::Minus, Sign::Plus] {
                        for s2 in [Sign::Minus, Sign::Plus] {
                            // lower truncation absorbs higher truncation
                            assert_eq!(x.truncate(n, s1).truncate(m, s2), x.truncate(m, s2));
                        }
                    }
                }
            }
            // every cell is an identity at its own top level
            assert_eq!(x.truncate(x.top_level(), Sign::Minus), *x);
        }
    }
}
