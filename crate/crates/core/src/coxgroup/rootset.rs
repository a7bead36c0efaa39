//! Fixed-width bit sets over positive-root indices.

use std::fmt;

pub const MAX_POSITIVE_ROOTS: usize = 256;

/// A set of positive-root indices, at most [`MAX_POSITIVE_ROOTS`] of them.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet([u64; 4]);

impl RootSet {
    pub const EMPTY: RootSet = RootSet([0; 4]);

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Self::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        Self::from_indices(0..n)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn intersection(&self, o: &RootSet) -> RootSet {
        RootSet(std::array::from_fn(|k| self.0[k] & o.0[k]))
    }

    pub fn union(&self, o: &RootSet) -> RootSet {
        RootSet(std::array::from_fn(|k| self.0[k] | o.0[k]))
    }

    pub fn difference(&self, o: &RootSet) -> RootSet {
        RootSet(std::array::from_fn(|k| self.0[k] & !o.0[k]))
    }

    pub fn is_subset(&self, o: &RootSet) -> bool {
        (0..4).all(|k| self.0[k] & !o.0[k] == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Self::from_indices(it)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = RootSet::from_indices([3, 64, 200]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64) && !s.contains(65));
        assert_eq!(s.to_vec(), vec![3, 64, 200]);
        let t = RootSet::from_indices([3, 5]);
        assert_eq!(s.intersection(&t).to_vec(), vec![3]);
        assert_eq!(s.difference(&t).to_vec(), vec![64, 200]);
        assert!(RootSet::from_indices([3]).is_subset(&s));
    }
}
