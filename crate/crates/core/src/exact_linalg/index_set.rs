//! Index subsets of {1..n}.
//!
//! Stored 0-based and sorted; displayed 1-based to match the usual principal
//! submatrix notation. Subset enumeration is by cardinality, then
//! lexicographically within a cardinality, so "first witness found" is a
//! deterministic, minimal choice.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    ambient: usize,
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(ambient: usize, mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        assert!(
            indices.iter().all(|&i| i < ambient),
            "index out of range for ambient {ambient}"
        );
        IndexSet { ambient, indices }
    }

    pub fn empty(ambient: usize) -> Self {
        IndexSet { ambient, indices: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        IndexSet { ambient, indices: (0..ambient).collect() }
    }

    pub fn from_bitmask(ambient: usize, mask: u64) -> Self {
        let indices = (0..ambient).filter(|i| mask >> i & 1 == 1).collect();
        IndexSet { ambient, indices }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    pub fn complement(&self) -> IndexSet {
        let indices = (0..self.ambient).filter(|&i| !self.contains(i)).collect();
        IndexSet { ambient: self.ambient, indices }
    }

    /// Position of ambient index `i` within this set, if present.
    pub fn position_of(&self, i: usize) -> Option<usize> {
        self.indices.binary_search(&i).ok()
    }

    /// All subsets of {1..n}, ordered by cardinality then lexicographically:
    /// {}, {1}, {2}, ..., {1,2}, {1,3}, ...
    pub fn all_subsets(ambient: usize) -> SubsetIter {
        SubsetIter { ambient, current: None, done: false }
    }

    pub fn nonempty_subsets(ambient: usize) -> impl Iterator<Item = IndexSet> {
        Self::all_subsets(ambient).filter(|s| !s.is_empty())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct SubsetIter {
    ambient: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => {
                self.current = Some(Vec::new());
                Some(IndexSet::empty(self.ambient))
            }
            Some(comb) => {
                if next_combination(comb, self.ambient) {
                    Some(IndexSet { ambient: self.ambient, indices: comb.clone() })
                } else if comb.len() < self.ambient {
                    let k = comb.len() + 1;
                    *comb = (0..k).collect();
                    Some(IndexSet { ambient: self.ambient, indices: comb.clone() })
                } else {
                    self.done = true;
                    None
                }
            }
        }
    }
}

/// Advances `comb` to the next k-combination of {0..n} in lexicographic
/// order; false when exhausted.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - (k - i) {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_cardinality_then_lex() {
        let sets: Vec<String> =
            IndexSet::all_subsets(3).map(|s| s.to_string()).collect();
        assert_eq!(
            sets,
            ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
    }

    #[test]
    fn counts_are_powers_of_two() {
        for n in 0..=6 {
            assert_eq!(IndexSet::all_subsets(n).count(), 1 << n);
        }
    }

    #[test]
    fn complement_and_membership() {
        let s = IndexSet::new(4, vec![2, 0]);
        assert_eq!(s.as_slice(), &[0, 2]);
        assert_eq!(s.complement().as_slice(), &[1, 3]);
        assert!(s.contains(0) && !s.contains(1));
        assert_eq!(s.position_of(2), Some(1));
        assert_eq!(s.position_of(3), None);
        assert_eq!(s.to_string(), "{1,3}");
    }

    #[test]
    fn subset_relation() {
        let a = IndexSet::new(3, vec![0]);
        let b = IndexSet::new(3, vec![0, 2]);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(IndexSet::empty(3).is_subset_of(&a));
    }
}
