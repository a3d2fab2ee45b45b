//! Object representations and the bijections among them.
//!
//! A simple globular set is determined up to isomorphism by the sequence of
//! dimensions of its elements read along the total order.  That sequence can
//! equivalently be compressed to an up-and-down vector (the maxima and
//! internal minima) or drawn as a planar rooted tree.  This module implements
//! the four representations and the explicit conversions between them, plus
//! the recovered globular structure on a graded ordered set.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("dimension sequence is empty")]
    EmptySequence,
    #[error("dimension sequence must begin and end with 0")]
    EndpointNotZero,
    #[error("adjacent entries must differ by exactly 1 (position {0})")]
    StepNotOne(usize),
    #[error("negative dimension at position {0}")]
    NegativeDimension(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UpDownError {
    #[error("up-and-down vector is empty")]
    Empty,
    #[error("up-and-down vector must have odd length, got {0}")]
    EvenLength(usize),
    #[error("negative entry at position {0}")]
    NegativeEntry(usize),
    #[error("up/down inequality fails at position {0}")]
    NotAlternating(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundaryError {
    #[error("element {0} is zero-dimensional and has no boundaries")]
    ZeroDimensional(usize),
}

/// The dimensions of a continuously graded ordered set, in order.
///
/// Invariants: non-empty, first and last entries are 0, adjacent entries
/// differ by exactly 1.  This is the canonical identity of an object;
/// up-and-down vectors and level trees are derived views.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimensionSequence {
    dims: Vec<usize>,
}

impl DimensionSequence {
    pub fn new(dims: Vec<i64>) -> Result<Self, SequenceError> {
        if dims.is_empty() {
            return Err(SequenceError::EmptySequence);
        }
        for (i, &d) in dims.iter().enumerate() {
            if d < 0 {
                return Err(SequenceError::NegativeDimension(i));
            }
        }
        if dims[0] != 0 || dims[dims.len() - 1] != 0 {
            return Err(SequenceError::EndpointNotZero);
        }
        for i in 1..dims.len() {
            if (dims[i] - dims[i - 1]).abs() != 1 {
                return Err(SequenceError::StepNotOne(i));
            }
        }
        Ok(DimensionSequence {
            dims: dims.into_iter().map(|d| d as usize).collect(),
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false // validated sequences are never empty
    }

    /// Largest dimension occurring in the sequence.  An object belongs to
    /// the n-th level of the filtration by n-categories iff this is <= n.
    pub fn max_dim(&self) -> usize {
        *self.dims.iter().max().expect("sequence is non-empty")
    }

    /// The subsequence of maxima (entries with no neighbour one higher) and
    /// internal minima (entries with both neighbours one higher).
    pub fn to_updown(&self) -> UpDownVector {
        let d = &self.dims;
        let last = d.len() - 1;
        let mut entries = Vec::new();
        for i in 0..=last {
            let up_left = i > 0 && d[i - 1] == d[i] + 1;
            let up_right = i < last && d[i + 1] == d[i] + 1;
            if (!up_left && !up_right) || (up_left && up_right) {
                entries.push(d[i]);
            }
        }
        debug_assert!(UpDownVector::new(entries.iter().map(|&e| e as i64).collect()).is_ok());
        UpDownVector { entries }
    }

    /// All valid sequences with at most `max_len` entries, in lexicographic
    /// order.
    pub fn enumerate(max_len: usize) -> Vec<DimensionSequence> {
        Self::enumerate_bounded(max_len, usize::MAX)
    }

    /// All valid sequences with at most `max_len` entries and maximum entry
    /// at most `max_dim`, in lexicographic order.
    pub fn enumerate_bounded(max_len: usize, max_dim: usize) -> Vec<DimensionSequence> {
        let mut out = Vec::new();
        let mut cur = vec![0usize];
        fn rec(cur: &mut Vec<usize>, max_len: usize, max_dim: usize, out: &mut Vec<DimensionSequence>) {
            let last = *cur.last().unwrap();
            if last == 0 {
                out.push(DimensionSequence { dims: cur.clone() });
            }
            // descending first keeps the output lexicographic
            if last > 0 && cur.len() < max_len {
                cur.push(last - 1);
                rec(cur, max_len, max_dim, out);
                cur.pop();
            }
            // after stepping up to last+1 we still need last+1 steps down
            if last < max_dim && cur.len() + last + 1 < max_len {
                cur.push(last + 1);
                rec(cur, max_len, max_dim, out);
                cur.pop();
            }
        }
        if max_len >= 1 {
            rec(&mut cur, max_len, max_dim, &mut out);
        }
        out
    }
}

impl fmt::Display for DimensionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dims:")?;
        for d in &self.dims {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

/// An alternating vector (u_0, v_1, u_1, ..., v_k, u_k) with
/// u_{i-1} > v_i and v_i < u_i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UpDownVector {
    entries: Vec<usize>,
}

impl UpDownVector {
    pub fn new(entries: Vec<i64>) -> Result<Self, UpDownError> {
        if entries.is_empty() {
            return Err(UpDownError::Empty);
        }
        if entries.len() % 2 == 0 {
            return Err(UpDownError::EvenLength(entries.len()));
        }
        for (i, &e) in entries.iter().enumerate() {
            if e < 0 {
                return Err(UpDownError::NegativeEntry(i));
            }
        }
        // odd positions hold the internal minima v_i
        for i in (1..entries.len()).step_by(2) {
            if entries[i - 1] <= entries[i] || entries[i] >= entries[i + 1] {
                return Err(UpDownError::NotAlternating(i));
            }
        }
        Ok(UpDownVector {
            entries: entries.into_iter().map(|e| e as usize).collect(),
        })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Recover the dimension sequence by interpolating every intermediate
    /// integer between consecutive entries (with leading and trailing
    /// descents to 0 restored).
    pub fn to_seq(&self) -> DimensionSequence {
        let mut targets = Vec::with_capacity(self.entries.len() + 2);
        targets.push(0usize);
        targets.extend_from_slice(&self.entries);
        targets.push(0);
        let mut dims = vec![targets[0]];
        for &t in &targets[1..] {
            let mut cur = *dims.last().unwrap();
            while cur != t {
                if cur < t {
                    cur += 1;
                } else {
                    cur -= 1;
                }
                dims.push(cur);
            }
        }
        DimensionSequence { dims }
    }

    /// Build the planar tree whose maximal root paths P_0, ..., P_k, taken
    /// in planar order, have u_i edges, with P_{i-1} and P_i sharing v_i
    /// edges.
    pub fn to_tree(&self) -> LevelTree {
        // arena of child lists; node 0 is the root
        let mut children: Vec<Vec<usize>> = vec![Vec::new()];
        let mut path = vec![0usize]; // nodes on the current maximal path
        let grow = |children: &mut Vec<Vec<usize>>, path: &mut Vec<usize>, upto: usize| {
            while path.len() <= upto {
                let id = children.len();
                children.push(Vec::new());
                let parent = *path.last().unwrap();
                children[parent].push(id);
                path.push(id);
            }
        };
        grow(&mut children, &mut path, self.entries[0]);
        for i in (1..self.entries.len()).step_by(2) {
            let v = self.entries[i];
            let u = self.entries[i + 1];
            path.truncate(v + 1);
            grow(&mut children, &mut path, u);
        }
        fn build(children: &Vec<Vec<usize>>, id: usize) -> LevelTree {
            LevelTree {
                children: children[id].iter().map(|&c| build(children, c)).collect(),
            }
        }
        build(&children, 0)
    }
}

impl fmt::Display for UpDownVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "updown:")?;
        for e in &self.entries {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

/// A finite rooted tree with ordered (planar) child lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelTree {
    children: Vec<LevelTree>,
}

impl LevelTree {
    pub fn leaf() -> Self {
        LevelTree { children: Vec::new() }
    }

    pub fn node(children: Vec<LevelTree>) -> Self {
        LevelTree { children }
    }

    pub fn children(&self) -> &[LevelTree] {
        &self.children
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }

    /// Read off (u_0, v_1, u_1, ...) from the maximal root paths: u_i is the
    /// depth of the i-th leaf in planar order and v_i the depth of the
    /// branch point shared with the previous leaf.
    pub fn to_updown(&self) -> UpDownVector {
        let paths = self.leaf_paths();
        let mut entries = vec![paths[0].len()];
        for w in paths.windows(2) {
            let shared = w[0]
                .iter()
                .zip(w[1].iter())
                .take_while(|(a, b)| a == b)
                .count();
            entries.push(shared);
            entries.push(w[1].len());
        }
        debug_assert!(UpDownVector::new(entries.iter().map(|&e| e as i64).collect()).is_ok());
        UpDownVector { entries }
    }

    // root-to-leaf paths as sequences of child positions, planar order
    fn leaf_paths(&self) -> Vec<Vec<usize>> {
        if self.children.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (ci, child) in self.children.iter().enumerate() {
            for mut p in child.leaf_paths() {
                let mut q = Vec::with_capacity(p.len() + 1);
                q.push(ci);
                q.append(&mut p);
                out.push(q);
            }
        }
        out
    }
}

impl fmt::Display for LevelTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A continuously graded ordered set.  Elements are identified with their
/// 0-based position in the total order; the dimension function is the
/// underlying sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedOrderedSet {
    dims: DimensionSequence,
}

impl GradedOrderedSet {
    pub fn new(dims: DimensionSequence) -> Self {
        GradedOrderedSet { dims }
    }

    pub fn dims(&self) -> &DimensionSequence {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self, element: usize) -> usize {
        self.dims.dims()[element]
    }

    /// Source and target of a positive-dimensional element: the last
    /// (d-1)-dimensional element before it and the first after it.  These
    /// functions make the set a simple globular set.
    pub fn boundaries(&self, element: usize) -> Result<(usize, usize), BoundaryError> {
        let d = self.dim(element);
        if d == 0 {
            return Err(BoundaryError::ZeroDimensional(element));
        }
        let dims = self.dims.dims();
        let before = (0..element)
            .rev()
            .find(|&j| dims[j] == d - 1)
            .expect("continuity guarantees a lower-dimensional element before");
        let after = (element + 1..dims.len())
            .find(|&j| dims[j] == d - 1)
            .expect("continuity guarantees a lower-dimensional element after");
        Ok((before, after))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(dims: &[i64]) -> DimensionSequence {
        DimensionSequence::new(dims.to_vec()).unwrap()
    }

    fn updown(entries: &[i64]) -> UpDownVector {
        UpDownVector::new(entries.to_vec()).unwrap()
    }

    const LONG: &[i64] = &[0, 1, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 0, 1, 0];

    #[test]
    fn validates_sequences() {
        assert!(DimensionSequence::new(vec![0, 1, 0]).is_ok());
        assert!(DimensionSequence::new(LONG.to_vec()).is_ok());
        assert_eq!(
            DimensionSequence::new(vec![]),
            Err(SequenceError::EmptySequence)
        );
        assert_eq!(
            DimensionSequence::new(vec![0, 2, 0]),
            Err(SequenceError::StepNotOne(1))
        );
        assert_eq!(
            DimensionSequence::new(vec![1, 0]),
            Err(SequenceError::EndpointNotZero)
        );
        assert_eq!(
            DimensionSequence::new(vec![0, -1, 0]),
            Err(SequenceError::NegativeDimension(1))
        );
    }

    #[test]
    fn validates_updown() {
        assert!(UpDownVector::new(vec![0]).is_ok());
        assert!(UpDownVector::new(vec![2, 1, 4, 2, 4, 0, 1]).is_ok());
        assert_eq!(UpDownVector::new(vec![]), Err(UpDownError::Empty));
        assert_eq!(UpDownVector::new(vec![1, 0]), Err(UpDownError::EvenLength(2)));
        // v_1 must be strictly below both neighbours
        assert_eq!(
            UpDownVector::new(vec![1, 1, 2]),
            Err(UpDownError::NotAlternating(1))
        );
        assert_eq!(
            UpDownVector::new(vec![1, -1, 1]),
            Err(UpDownError::NegativeEntry(1))
        );
    }

    #[test]
    fn extracts_maxima_and_internal_minima() {
        assert_eq!(seq(LONG).to_updown(), updown(&[2, 1, 4, 2, 4, 0, 1]));
        assert_eq!(seq(&[0]).to_updown(), updown(&[0]));
        assert_eq!(seq(&[0, 1, 0]).to_updown(), updown(&[1]));
        assert_eq!(seq(&[0, 1, 0, 1, 0]).to_updown(), updown(&[1, 0, 1]));
    }

    #[test]
    fn interpolates_back_to_sequences() {
        assert_eq!(updown(&[0]).to_seq(), seq(&[0]));
        assert_eq!(updown(&[2, 1, 4, 2, 4, 0, 1]).to_seq(), seq(LONG));
        assert_eq!(updown(&[1, 0, 1]).to_seq(), seq(&[0, 1, 0, 1, 0]));
    }

    #[test]
    fn sequence_updown_round_trip_small() {
        for s in DimensionSequence::enumerate(9) {
            assert_eq!(s.to_updown().to_seq(), s);
        }
    }

    #[test]
    fn enumeration_counts_are_catalan_sums() {
        // sequences of length 2k+1 correspond to balanced nonnegative walks,
        // counted by the k-th Catalan number
        fn catalan(k: u64) -> u64 {
            let mut num = 1u64;
            let mut den = 1u64;
            for i in 0..k {
                num *= 2 * k - i;
                den *= i + 1;
            }
            num / den / (k + 1)
        }
        for max_k in 0..=6u64 {
            let expected: u64 = (0..=max_k).map(catalan).sum();
            let got = DimensionSequence::enumerate((2 * max_k + 1) as usize).len() as u64;
            assert_eq!(got, expected, "count mismatch at length {}", 2 * max_k + 1);
        }
    }

    #[test]
    fn builds_trees_from_vectors() {
        assert_eq!(updown(&[0]).to_tree(), LevelTree::leaf());
        assert_eq!(updown(&[1]).to_tree(), LevelTree::node(vec![LevelTree::leaf()]));
        assert_eq!(
            updown(&[1, 0, 1]).to_tree(),
            LevelTree::node(vec![LevelTree::leaf(), LevelTree::leaf()])
        );
    }

    #[test]
    fn reads_vectors_from_trees() {
        assert_eq!(LevelTree::leaf().to_updown(), updown(&[0]));
        let chain2 = LevelTree::node(vec![LevelTree::node(vec![LevelTree::leaf()])]);
        assert_eq!(chain2.to_updown(), updown(&[2]));
        // second maximal path from the root: 2 edges through the root's child
        let mixed = LevelTree::node(vec![LevelTree::leaf(), LevelTree::node(vec![LevelTree::leaf()])]);
        assert_eq!(mixed.to_updown(), updown(&[1, 0, 2]));
    }

    #[test]
    fn tree_round_trip_small() {
        for s in DimensionSequence::enumerate(9) {
            let u = s.to_updown();
            assert_eq!(u.to_tree().to_updown(), u);
        }
    }

    #[test]
    fn tree_display() {
        assert_eq!(updown(&[1, 0, 1]).to_tree().to_string(), "(()())");
        assert_eq!(updown(&[1, 0, 2]).to_tree().to_string(), "(()(()))");
        assert_eq!(LevelTree::leaf().to_string(), "()");
    }

    #[test]
    fn boundaries_scan_the_order() {
        let g = GradedOrderedSet::new(seq(&[0, 1, 0]));
        assert_eq!(g.boundaries(1), Ok((0, 2)));
        assert_eq!(g.boundaries(0), Err(BoundaryError::ZeroDimensional(0)));

        let g = GradedOrderedSet::new(seq(&[0, 1, 2, 1, 0]));
        assert_eq!(g.boundaries(2), Ok((1, 3)));
        // the first 0-dimensional element after position 1 is the far end
        assert_eq!(g.boundaries(1), Ok((0, 4)));
        assert_eq!(g.boundaries(3), Ok((0, 4)));
    }

    #[test]
    fn boundaries_are_globular() {
        for s in DimensionSequence::enumerate(11) {
            let g = GradedOrderedSet::new(s);
            for x in 0..g.len() {
                if g.dim(x) < 2 {
                    continue;
                }
                let (lo, hi) = g.boundaries(x).unwrap();
                assert_eq!(g.boundaries(lo).unwrap(), g.boundaries(hi).unwrap());
            }
        }
    }

    #[test]
    fn consecutive_dimensions_differ_by_one() {
        for s in DimensionSequence::enumerate(11) {
            let d = s.dims();
            for i in 1..d.len() {
                assert_eq!(d[i].abs_diff(d[i - 1]), 1);
            }
        }
    }

    // a valid sequence driven by an arbitrary bit string
    fn seq_from_choices(choices: &[bool]) -> DimensionSequence {
        let mut dims = vec![0usize];
        for &up in choices {
            let cur = *dims.last().unwrap();
            if up || cur == 0 {
                dims.push(cur + 1);
            } else {
                dims.push(cur - 1);
            }
        }
        while *dims.last().unwrap() != 0 {
            let cur = *dims.last().unwrap();
            dims.push(cur - 1);
        }
        DimensionSequence { dims }
    }

    proptest! {
        #[test]
        fn round_trips_hold_for_random_sequences(choices in proptest::collection::vec(any::<bool>(), 0..24)) {
            let s = seq_from_choices(&choices);
            let u = s.to_updown();
            prop_assert_eq!(u.to_seq(), s);
            prop_assert_eq!(u.to_tree().to_updown(), u);
        }
    }
}
