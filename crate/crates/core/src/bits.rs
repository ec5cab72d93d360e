//! Small fixed-width bitset helpers shared by the graph and search code.
//!
//! Rows are stored as `u64` words, least-significant bit first. Nothing here
//! knows about graphs; it is plain word arithmetic.

pub const WORD_BITS: usize = 64;

#[inline]
pub fn words_for(n: usize) -> usize {
    (n + WORD_BITS - 1) / WORD_BITS
}

#[inline]
pub fn set_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub fn clear_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

#[inline]
pub fn test_bit(row: &[u64], i: usize) -> bool {
    row[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

#[inline]
pub fn count_ones(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// `|a & b|` without materializing the intersection.
#[inline]
pub fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Iterator over the positions of set bits, in increasing order.
pub fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + b)
            }
        })
    })
}

/// A growable set of vertices backed by words. Used where `HashSet<usize>`
/// would be too slow in inner loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(capacity)],
            len: 0,
        }
    }

    pub fn from_iter(capacity: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        if test_bit(&self.words, v) {
            false
        } else {
            set_bit(&mut self.words, v);
            self.len += 1;
            true
        }
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if test_bit(&self.words, v) {
            clear_bit(&mut self.words, v);
            self.len -= 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        test_bit(&self.words, v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        ones(&self.words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_roundtrip() {
        let mut row = vec![0u64; 3];
        for &i in &[0, 1, 63, 64, 100, 191] {
            set_bit(&mut row, i);
        }
        assert_eq!(ones(&row).collect::<Vec<_>>(), vec![0, 1, 63, 64, 100, 191]);
        assert_eq!(count_ones(&row), 6);
    }

    #[test]
    fn vertex_set_insert_remove() {
        let mut s = VertexSet::new(70);
        assert!(s.insert(69));
        assert!(!s.insert(69));
        assert_eq!(s.len(), 1);
        assert!(s.remove(69));
        assert!(s.is_empty());
    }
}
