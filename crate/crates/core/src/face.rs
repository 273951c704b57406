//! Faces as bitsets over a vertex index space of at most 128 vertices.

use std::fmt;

/// A set of vertex indices `< 128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(pub u128);

pub const MAX_VERTICES: usize = 128;

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn singleton(v: usize) -> Face {
        Face(1u128 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Face {
        Face(it.into_iter().fold(0u128, |acc, v| acc | 1u128 << v))
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Face {
        if n >= 128 {
            Face(u128::MAX)
        } else {
            Face((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub fn with(self, v: usize) -> Face {
        Face(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u128 << v))
    }

    /// Vertex indices in ascending order.
    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    /// Lowest vertex, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Every subset of `self` with exactly `k` elements.
    pub fn subsets_of_size(self, k: usize) -> Vec<Face> {
        let verts: Vec<usize> = self.indices().collect();
        let mut out = Vec::new();
        if k > verts.len() {
            return out;
        }
        let m = verts.len();
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            out.push(Face::from_indices(pick.iter().map(|&i| verts[i])));
            // rightmost position that can still advance
            let Some(i) = (0..k).rev().find(|&i| pick[i] < i + m - k) else {
                return out;
            };
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
}

pub struct Indices(u128);

impl Iterator for Indices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}
