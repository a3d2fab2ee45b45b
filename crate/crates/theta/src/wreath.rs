//! Wreath products over the simplex category and the joined suspension
//! functor.
//!
//! A wreath object is a tuple of complexes; a wreath morphism is a monotone
//! endpoint tuple phi together with one component morphism f_i^j for every
//! target slot j in the interval assigned to source slot i.  The functor V
//! builds from a wreath object the complex of joined suspensions
//! Zp^0 + sK^1 + Zp^1 + ... + sK^m + Zp^m, raising every component degree by
//! one and tying the suspended degree-0 elements to the neighbouring points.
//! On objects generated by graded ordered sets this inserts the component
//! dimension sequences, shifted up by one, between zeros.

use crate::adc::{same_complex, AugmentedDirectedComplex, Chain, ChainMorphism, Coeff};
use crate::rep::DimensionSequence;
use crate::simple::{enumerate_hom, Convention, SimpleAdc};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WreathError {
    #[error("phi must have one entry per source component plus one, got {got} for m = {m}")]
    PhiLength { m: usize, got: usize },
    #[error("phi must be monotone with values between 0 and {max}")]
    PhiOutOfRange { max: usize },
    #[error("expected {expected} component morphisms, got {got}")]
    MapCount { expected: usize, got: usize },
    #[error("component morphism for slot {slot} has the wrong endpoints")]
    MapEndpoints { slot: usize },
    #[error("source and target wreath objects do not match")]
    SourceTargetMismatch,
    #[error("component {0} lies outside the admissible class: it is zero or its basis is not loop-free unital")]
    ComponentOutsidePhi(usize),
    #[error("component {0} is not generated by a graded ordered set; its hom-sets cannot be enumerated")]
    ComponentNotSimple(usize),
}

/// An object of the wreath product: an ordered (possibly empty) tuple of
/// complexes.
#[derive(Debug, Clone)]
pub struct WreathObject {
    components: Vec<Arc<AugmentedDirectedComplex>>,
}

impl WreathObject {
    pub fn new(components: Vec<Arc<AugmentedDirectedComplex>>) -> Self {
        WreathObject { components }
    }

    pub fn from_simple(components: &[SimpleAdc]) -> Self {
        WreathObject { components: components.iter().map(|s| s.adc().clone()).collect() }
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Arc<AugmentedDirectedComplex>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Arc<AugmentedDirectedComplex> {
        &self.components[i]
    }
}

impl PartialEq for WreathObject {
    fn eq(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(other.components.iter())
                .all(|(a, b)| same_complex(a, b))
    }
}

impl Eq for WreathObject {}

/// A morphism (phi, f) of the wreath product.  The flat list of component
/// morphisms holds f_i^j for the slots j strictly after phi(i-1) and up to
/// phi(i); slot j lives at flat index j - phi(0) - 1.
#[derive(Debug, Clone)]
pub struct WreathMorphism {
    source: WreathObject,
    target: WreathObject,
    phi: Vec<usize>,
    maps: Vec<ChainMorphism>,
}

impl WreathMorphism {
    pub fn new(
        source: WreathObject,
        target: WreathObject,
        phi: Vec<usize>,
        maps: Vec<ChainMorphism>,
    ) -> Result<Self, WreathError> {
        let m = source.m();
        let n = target.m();
        if phi.len() != m + 1 {
            return Err(WreathError::PhiLength { m, got: phi.len() });
        }
        if phi.windows(2).any(|w| w[0] > w[1]) || phi[m] > n {
            return Err(WreathError::PhiOutOfRange { max: n });
        }
        let expected = phi[m] - phi[0];
        if maps.len() != expected {
            return Err(WreathError::MapCount { expected, got: maps.len() });
        }
        for i in 1..=m {
            for j in phi[i - 1] + 1..=phi[i] {
                let f = &maps[j - phi[0] - 1];
                if !same_complex(f.source(), source.component(i - 1))
                    || !same_complex(f.target(), target.component(j - 1))
                {
                    return Err(WreathError::MapEndpoints { slot: j });
                }
            }
        }
        Ok(WreathMorphism { source, target, phi, maps })
    }

    pub fn identity(object: &WreathObject) -> Self {
        let phi = (0..=object.m()).collect();
        let maps = object.components().iter().map(ChainMorphism::identity).collect();
        WreathMorphism { source: object.clone(), target: object.clone(), phi, maps }
    }

    pub fn source(&self) -> &WreathObject {
        &self.source
    }

    pub fn target(&self) -> &WreathObject {
        &self.target
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn maps(&self) -> &[ChainMorphism] {
        &self.maps
    }

    /// The component morphism sitting in target slot j, together with the
    /// source component it comes from.
    pub fn map_for_slot(&self, j: usize) -> (&ChainMorphism, usize) {
        let m = self.source.m();
        assert!(self.phi[0] < j && j <= self.phi[m], "slot {j} carries no morphism");
        let i = (1..=m)
            .find(|&i| self.phi[i - 1] < j && j <= self.phi[i])
            .expect("monotone phi covers the interval");
        (&self.maps[j - self.phi[0] - 1], i)
    }

    /// Composition: the endpoint tuples compose as functions and the
    /// component for a slot k of the composite is g_j^k after f_i^j for the
    /// unique middle slot j.
    pub fn compose(&self, first: &WreathMorphism) -> Result<WreathMorphism, WreathError> {
        if first.target != self.source {
            return Err(WreathError::SourceTargetMismatch);
        }
        let phi: Vec<usize> = first.phi.iter().map(|&i| self.phi[i]).collect();
        let m = first.source.m();
        let mut maps = Vec::with_capacity(phi[m] - phi[0]);
        for i in 1..=m {
            for k in phi[i - 1] + 1..=phi[i] {
                let (outer, j) = self.map_for_slot(k);
                debug_assert!(first.phi[i - 1] < j && j <= first.phi[i]);
                let inner = &first.maps[j - first.phi[0] - 1];
                maps.push(outer.compose(inner).expect("endpoints match by construction"));
            }
        }
        WreathMorphism::new(first.source.clone(), self.target.clone(), phi, maps)
    }
}

impl PartialEq for WreathMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.phi == other.phi
            && self.maps == other.maps
    }
}

impl Eq for WreathMorphism {}

// positions of the point and suspended basis elements inside V(m, K)
struct VLayout {
    offsets: Vec<usize>, // offsets[i]: start of component i's block (0-based components)
    points: Vec<usize>,  // positions of p^0 ... p^m
    total: usize,
}

impl VLayout {
    fn of(object: &WreathObject) -> VLayout {
        let mut offsets = Vec::with_capacity(object.m());
        let mut points = Vec::with_capacity(object.m() + 1);
        let mut pos = 0;
        points.push(pos);
        for component in object.components() {
            pos += 1;
            offsets.push(pos);
            pos += component.basis_len();
            points.push(pos);
        }
        VLayout { offsets, points, total: pos + 1 }
    }

    fn point(&self, i: usize) -> usize {
        self.points[i]
    }

    fn suspended(&self, component: usize, local: usize) -> usize {
        self.offsets[component] + local
    }
}

/// The joined suspension of a wreath object: points p^0..p^m in degree 0
/// interleaved with the components, every component degree raised by one.
/// Suspended degree-0 elements hang between their neighbouring points with
/// the orientation fixed by the convention.
pub fn v_object(object: &WreathObject, convention: Convention) -> Arc<AugmentedDirectedComplex> {
    let layout = VLayout::of(object);
    let mut degrees = vec![0usize; layout.total];
    let mut boundary: Vec<Chain> = (0..layout.total).map(|_| Chain::zero(0)).collect();
    let mut augmentation = vec![Coeff::zero(); layout.total];
    for i in 0..=object.m() {
        augmentation[layout.point(i)] = Coeff::one();
    }
    for (ci, component) in object.components().iter().enumerate() {
        for local in 0..component.basis_len() {
            let global = layout.suspended(ci, local);
            let d = component.degree(local);
            degrees[global] = d + 1;
            boundary[global] = if d == 0 {
                let diff = Chain::unit(0, layout.point(ci + 1))
                    .sub(&Chain::unit(0, layout.point(ci)))
                    .scale(component.augmentation(local));
                match convention {
                    Convention::Std => diff,
                    Convention::Swapped => diff.neg(),
                }
            } else {
                Chain::from_terms(
                    d,
                    component
                        .boundary(local)
                        .terms()
                        .map(|(ix, c)| (layout.suspended(ci, ix), c.clone())),
                )
            };
        }
    }
    Arc::new(
        AugmentedDirectedComplex::new(degrees, boundary, augmentation)
            .expect("the joined suspension of well-shaped complexes is well-shaped"),
    )
}

/// The joined suspension of a wreath morphism: points map to points along
/// phi, and a suspended element maps to the suspensions of its images under
/// the component morphisms for the covered slots.
pub fn v_morphism(morphism: &WreathMorphism, convention: Convention) -> ChainMorphism {
    let source = v_object(morphism.source(), convention);
    let target = v_object(morphism.target(), convention);
    let source_layout = VLayout::of(morphism.source());
    let target_layout = VLayout::of(morphism.target());
    let m = morphism.source().m();
    let phi = morphism.phi();

    let mut images: Vec<Chain> = (0..source.basis_len())
        .map(|g| Chain::zero(source.degree(g)))
        .collect();
    for i in 0..=m {
        images[source_layout.point(i)] = Chain::unit(0, target_layout.point(phi[i]));
    }
    for i in 1..=m {
        let component = morphism.source().component(i - 1);
        for local in 0..component.basis_len() {
            let global = source_layout.suspended(i - 1, local);
            let d = component.degree(local) + 1;
            let mut acc = Chain::zero(d);
            for j in phi[i - 1] + 1..=phi[i] {
                let (f, _) = morphism.map_for_slot(j);
                let image = f.image(local);
                acc = acc.add(&Chain::from_terms(
                    d,
                    image
                        .terms()
                        .map(|(ix, c)| (target_layout.suspended(j - 1, ix), c.clone())),
                ));
            }
            images[global] = acc;
        }
    }
    ChainMorphism::new(source, target, images)
        .expect("the joined suspension of a wreath morphism is a valid chain morphism")
}

/// All wreath morphisms between two objects, given an enumerator for the
/// component hom-sets (indexed by source and target component positions).
/// Deterministic order: phi tuples lexicographically, then component
/// choices lexicographically.
pub fn enumerate_wreath_hom(
    source: &WreathObject,
    target: &WreathObject,
    component_hom: impl Fn(usize, usize) -> Vec<ChainMorphism>,
) -> Vec<WreathMorphism> {
    let m = source.m();
    let n = target.m();
    let mut hom_cache: BTreeMap<(usize, usize), Vec<ChainMorphism>> = BTreeMap::new();
    let mut out = Vec::new();

    let mut phi = vec![0usize; m + 1];
    enumerate_phis(&mut phi, 0, n, &mut |phi| {
        let mut slots = Vec::new(); // (source component i, target slot j)
        for i in 1..=m {
            for j in phi[i - 1] + 1..=phi[i] {
                slots.push((i - 1, j - 1));
            }
        }
        for &(ci, cj) in &slots {
            hom_cache
                .entry((ci, cj))
                .or_insert_with(|| component_hom(ci, cj));
        }
        // cartesian product over the slot hom-sets
        let mut choice = vec![0usize; slots.len()];
        loop {
            let maps: Option<Vec<ChainMorphism>> = slots
                .iter()
                .zip(choice.iter())
                .map(|(&(ci, cj), &c)| hom_cache[&(ci, cj)].get(c).cloned())
                .collect();
            match maps {
                Some(maps) => {
                    out.push(
                        WreathMorphism::new(source.clone(), target.clone(), phi.to_vec(), maps)
                            .expect("enumerated data satisfies the invariants"),
                    );
                }
                None => return, // some slot has an empty hom-set
            }
            let mut pos = slots.len();
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < hom_cache[&slots[pos]].len() {
                    break;
                }
                choice[pos] = 0;
                if pos == 0 {
                    return;
                }
            }
        }
    });
    out
}

fn enumerate_phis(phi: &mut Vec<usize>, index: usize, n: usize, visit: &mut impl FnMut(&[usize])) {
    if index == phi.len() {
        visit(phi);
        return;
    }
    let lo = if index == 0 { 0 } else { phi[index - 1] };
    for v in lo..=n {
        phi[index] = v;
        enumerate_phis(phi, index + 1, n, visit);
    }
}

/// Outcome of the full-faithfulness check for one pair of wreath objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaithfulnessReport {
    pub wreath_hom: usize,
    pub suspension_hom: usize,
    pub bijective: bool,
}

/// Verify that the joined suspension induces a bijection between the wreath
/// hom-set and the hom-set of the suspended complexes.  Components must be
/// non-zero with loop-free unital bases, and (for enumeration) generated by
/// graded ordered sets under the given convention.
pub fn check_fully_faithful(
    source: &WreathObject,
    target: &WreathObject,
    convention: Convention,
) -> Result<FaithfulnessReport, WreathError> {
    let mut simple_components: Vec<Vec<SimpleAdc>> = Vec::new();
    for object in [source, target] {
        let mut simples = Vec::new();
        for (i, component) in object.components().iter().enumerate() {
            if component.basis_len() == 0 || !component.is_unital() || !component.is_loop_free() {
                return Err(WreathError::ComponentOutsidePhi(i));
            }
            match SimpleAdc::try_from_adc_with(component, convention) {
                Some(s) => simples.push(s),
                None => return Err(WreathError::ComponentNotSimple(i)),
            }
        }
        simple_components.push(simples);
    }
    let target_simples = simple_components.pop().expect("two entries");
    let source_simples = simple_components.pop().expect("two entries");

    let wreath_hom = enumerate_wreath_hom(source, target, |i, j| {
        enumerate_hom(&source_simples[i], &target_simples[j])
    });

    let va = SimpleAdc::try_from_adc_with(&v_object(source, convention), convention)
        .expect("suspensions of simple components are simple");
    let vb = SimpleAdc::try_from_adc_with(&v_object(target, convention), convention)
        .expect("suspensions of simple components are simple");
    let suspension_hom = enumerate_hom(&va, &vb);

    let mut image_keys: Vec<_> = wreath_hom
        .iter()
        .map(|wm| v_morphism(wm, convention).sort_key())
        .collect();
    image_keys.sort();
    let injective = image_keys.windows(2).all(|w| w[0] != w[1]);
    let expected_keys: Vec<_> = suspension_hom.iter().map(|f| f.sort_key()).collect();
    let surjective = image_keys == expected_keys;

    Ok(FaithfulnessReport {
        wreath_hom: wreath_hom.len(),
        suspension_hom: suspension_hom.len(),
        bijective: injective && surjective && wreath_hom.len() == suspension_hom.len(),
    })
}

/// The objects reachable by iterating the joined suspension `level` times
/// starting from the point, with dimension sequences of at most `cap`
/// entries; equivalently, all objects whose dimensions do not exceed
/// `level`.  Returned sorted by (length, sequence).
pub fn iterated_wreath_objects(level: usize, cap: usize, convention: Convention) -> Vec<SimpleAdc> {
    let mut seen: BTreeMap<DimensionSequence, SimpleAdc> = BTreeMap::new();
    if cap == 0 {
        return Vec::new();
    }
    if level == 0 {
        let point = SimpleAdc::from_dims(&DimensionSequence::new(vec![0]).unwrap(), convention);
        return vec![point];
    }
    let previous = iterated_wreath_objects(level - 1, cap.saturating_sub(2), convention);

    // ordered tuples of previous-level objects whose suspension fits the cap
    fn tuples(
        previous: &[SimpleAdc],
        cap: usize,
        used: usize,
        current: &mut Vec<Arc<AugmentedDirectedComplex>>,
        convention: Convention,
        seen: &mut BTreeMap<DimensionSequence, SimpleAdc>,
    ) {
        if used <= cap {
            let object = WreathObject::new(current.clone());
            let v = v_object(&object, convention);
            let s = SimpleAdc::try_from_adc_with(&v, convention)
                .expect("suspensions of simple components are simple");
            seen.entry(s.dims().clone()).or_insert(s);
        }
        for p in previous {
            let extra = p.adc().basis_len() + 1;
            if used + extra > cap {
                continue;
            }
            current.push(p.adc().clone());
            tuples(previous, cap, used + extra, current, convention, seen);
            current.pop();
        }
    }

    let mut current = Vec::new();
    tuples(&previous, cap, 1, &mut current, convention, &mut seen);
    let mut out: Vec<SimpleAdc> = seen.into_values().collect();
    out.sort_by_key(|s| (s.dims().len(), s.dims().clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple(dims: &[i64]) -> SimpleAdc {
        SimpleAdc::from_dims(&DimensionSequence::new(dims.to_vec()).unwrap(), Convention::Std)
    }

    fn point_object(m: usize) -> WreathObject {
        WreathObject::from_simple(&vec![simple(&[0]); m])
    }

    #[test]
    fn suspension_of_points() {
        let empty = WreathObject::new(Vec::new());
        let v = v_object(&empty, Convention::Std);
        assert_eq!(v.degrees(), &[0]);

        let one = point_object(1);
        let v = v_object(&one, Convention::Std);
        assert_eq!(v.degrees(), &[0, 1, 0]);
        let arrow = simple(&[0, 1, 0]);
        assert_eq!(v.as_ref(), arrow.adc().as_ref());
    }

    #[test]
    fn suspension_interleaves_shifted_sequences() {
        let object = WreathObject::from_simple(&[simple(&[0]), simple(&[0, 1, 0])]);
        let v = v_object(&object, Convention::Std);
        assert_eq!(v.degrees(), &[0, 1, 0, 1, 2, 1, 0]);
        let expected = simple(&[0, 1, 0, 1, 2, 1, 0]);
        assert_eq!(v.as_ref(), expected.adc().as_ref());

        // and under the swapped convention as well
        let swapped = SimpleAdc::from_dims(
            &DimensionSequence::new(vec![0, 1, 0, 1, 2, 1, 0]).unwrap(),
            Convention::Swapped,
        );
        let object_swapped = WreathObject::new(vec![
            SimpleAdc::from_dims(&DimensionSequence::new(vec![0]).unwrap(), Convention::Swapped)
                .adc()
                .clone(),
            SimpleAdc::from_dims(&DimensionSequence::new(vec![0, 1, 0]).unwrap(), Convention::Swapped)
                .adc()
                .clone(),
        ]);
        let v_swapped = v_object(&object_swapped, Convention::Swapped);
        assert_eq!(v_swapped.as_ref(), swapped.adc().as_ref());
    }

    #[test]
    fn suspension_preserves_basis_predicates() {
        let object = WreathObject::from_simple(&[simple(&[0, 1, 0]), simple(&[0, 1, 2, 1, 0])]);
        let v = v_object(&object, Convention::Std);
        assert!(v.check_structure().is_ok());
        assert!(v.is_unital());
        assert!(v.is_loop_free());
        assert!(v.is_strongly_loop_free());
    }

    #[test]
    fn collapse_endomorphism_from_constant_phi() {
        let one = point_object(1);
        let collapse = WreathMorphism::new(one.clone(), one.clone(), vec![0, 0], Vec::new()).unwrap();
        let f = v_morphism(&collapse, Convention::Std);
        assert_eq!(f.image(0), &Chain::unit(0, 0));
        assert_eq!(f.image(2), &Chain::unit(0, 0));
        assert!(f.image(1).is_zero());

        // composing the collapse with itself keeps phi constant
        let twice = collapse.compose(&collapse).unwrap();
        assert_eq!(twice.phi(), &[0, 0]);
        assert!(twice.maps().is_empty());
    }

    #[test]
    fn identity_morphisms_behave() {
        let object = WreathObject::from_simple(&[simple(&[0]), simple(&[0, 1, 0])]);
        let id = WreathMorphism::identity(&object);
        assert_eq!(id.phi(), &[0, 1, 2]);
        let composed = id.compose(&id).unwrap();
        assert_eq!(composed, id);
        let v = v_morphism(&id, Convention::Std);
        let expected = ChainMorphism::identity(&v_object(&object, Convention::Std));
        assert_eq!(v, expected);
    }

    #[test]
    fn counts_small_wreath_homs() {
        let one = point_object(1);
        let homs = enumerate_wreath_hom(&one, &one, |_, _| {
            enumerate_hom(&simple(&[0]), &simple(&[0]))
        });
        assert_eq!(homs.len(), 3); // phi in {(0,0),(0,1),(1,1)}

        let empty = WreathObject::new(Vec::new());
        for n in 0..4 {
            let target = point_object(n);
            let homs = enumerate_wreath_hom(&empty, &target, |_, _| unreachable!("no slots"));
            assert_eq!(homs.len(), n + 1);
        }

        let two = point_object(2);
        let homs = enumerate_wreath_hom(&one, &two, |_, _| {
            enumerate_hom(&simple(&[0]), &simple(&[0]))
        });
        assert_eq!(homs.len(), 6); // monotone pairs 0 <= phi0 <= phi1 <= 2
    }

    #[test]
    fn wreath_composition_is_associative_on_a_sample() {
        let one = point_object(1);
        let two = point_object(2);
        let hom_12 = enumerate_wreath_hom(&one, &two, |_, _| {
            enumerate_hom(&simple(&[0]), &simple(&[0]))
        });
        let hom_21 = enumerate_wreath_hom(&two, &one, |_, _| {
            enumerate_hom(&simple(&[0]), &simple(&[0]))
        });
        for f in &hom_12 {
            for g in &hom_21 {
                for h in &hom_12 {
                    let left = h.compose(&g.compose(f).unwrap()).unwrap();
                    let right = h.compose(g).unwrap().compose(f).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn full_faithfulness_on_small_pairs() {
        let pairs = [
            (point_object(1), point_object(1)),
            (WreathObject::new(Vec::new()), point_object(1)),
            (point_object(2), point_object(1)),
            (
                WreathObject::from_simple(&[simple(&[0, 1, 0])]),
                WreathObject::from_simple(&[simple(&[0, 1, 0])]),
            ),
        ];
        for (a, b) in &pairs {
            let report = check_fully_faithful(a, b, Convention::Std).unwrap();
            assert!(report.bijective, "{:?} -> {:?}: {report:?}", a.m(), b.m());
        }

        let report = check_fully_faithful(&point_object(1), &point_object(1), Convention::Std).unwrap();
        assert_eq!(report.wreath_hom, 3);
        assert_eq!(report.suspension_hom, 3);
    }

    #[test]
    fn rejects_components_outside_the_admissible_class() {
        let zero_component = Arc::new(
            AugmentedDirectedComplex::new(Vec::new(), Vec::new(), Vec::new()).unwrap(),
        );
        let bad = WreathObject::new(vec![zero_component]);
        let err = check_fully_faithful(&bad, &point_object(1), Convention::Std).unwrap_err();
        assert_eq!(err, WreathError::ComponentOutsidePhi(0));
    }

    #[test]
    fn filtration_levels() {
        let level0 = iterated_wreath_objects(0, 5, Convention::Std);
        assert_eq!(level0.len(), 1);
        assert_eq!(level0[0].dims().dims(), &[0]);

        let level1 = iterated_wreath_objects(1, 5, Convention::Std);
        let dims: Vec<_> = level1.iter().map(|s| s.dims().dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![0], vec![0, 1, 0], vec![0, 1, 0, 1, 0]]);

        let level2 = iterated_wreath_objects(2, 7, Convention::Std);
        assert!(level2.iter().any(|s| s.dims().dims() == [0, 1, 2, 1, 0]));

        // levels agree with the height-bounded sequence enumeration
        for level in 0..=3usize {
            let cap = 9;
            let generated: Vec<_> = iterated_wreath_objects(level, cap, Convention::Std)
                .into_iter()
                .map(|s| s.dims().clone())
                .collect();
            let mut expected = DimensionSequence::enumerate_bounded(cap, level);
            expected.sort_by_key(|s| (s.len(), s.clone()));
            assert_eq!(generated, expected, "level {level}");
        }
    }
}
