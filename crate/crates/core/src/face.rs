use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex universe. A face fits in one machine word, so
/// intersection, union and subset tests are single instructions.
pub const MAX_VERTICES: usize = 63;

/// A face: a set of vertex indices packed as a bitmask (bit `i` = vertex `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Face {
        debug_assert!(v < 64);
        Face(1 << v)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Face {
        let mut bits = 0u64;
        for v in members {
            debug_assert!(v < 64);
            bits |= 1 << v;
        }
        Face(bits)
    }

    /// Number of vertices in the face.
    #[inline]
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension: cardinality minus one, so the empty face has dimension -1.
    #[inline]
    pub fn dim(self) -> i32 {
        self.cardinality() as i32 - 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Face) -> bool {
        self.0 & other.0 != 0
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
    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub fn with(self, v: usize) -> Face {
        debug_assert!(v < 64);
        Face(self.0 | (1 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Face {
        debug_assert!(v < 64);
        Face(self.0 & !(1 << v))
    }

    /// `A \ w ∪ v`, the elementary exchange used throughout shifting.
    #[inline]
    pub fn swap(self, w: usize, v: usize) -> Face {
        self.without(w).with(v)
    }

    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Iterate members in increasing order.
    pub fn members(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.members().collect()
    }

    /// All k-element subsets of this face, in lexicographic order.
    pub fn k_subsets(self, k: usize) -> Vec<Face> {
        let members: Vec<usize> = self.to_vec();
        let mut out = Vec::new();
        if k > members.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(Face::from_members(idx.iter().map(|&i| members[i])));
            // next combination in lex order
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + members.len() - k {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

/// Iterator over the vertices of a face, ascending.
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Faces compare lexicographically as ascending vertex tuples: the first
/// differing (smallest) vertex decides, and a proper prefix sorts first.
/// Note this is not the numeric order of the underlying bitmasks.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => {}
            }
            let x = a.trailing_zeros();
            let y = b.trailing_zeros();
            match x.cmp(&y) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An increasing list of distinct vertices `v_1 < … < v_t`; the prefix a
/// complex or family can be shifted with respect to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPrefix(Vec<usize>);

impl VertexPrefix {
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<VertexPrefix> {
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if i > 0 && vertices[i - 1] >= v {
                return Err(Error::BadSize(format!(
                    "prefix vertices must be strictly increasing, got {} then {}",
                    vertices[i - 1],
                    v
                )));
            }
        }
        Ok(VertexPrefix(vertices))
    }

    /// The full ambient order `0 < 1 < … < n-1`.
    pub fn full(n: usize) -> VertexPrefix {
        VertexPrefix((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `{v_1, …, v_i}` as a face, for the shift constraint `w ∉ {v_1,…,v_i}`.
    pub fn head_mask(&self, i: usize) -> Face {
        Face::from_members(self.0[..i].iter().copied())
    }

    pub fn tail(&self) -> VertexPrefix {
        VertexPrefix(self.0[1..].to_vec())
    }
}

/// All k-element subsets of `{0, …, n-1}` in lexicographic order
/// (ascending-tuple comparison, smallest first).
pub fn k_subsets_of_universe(n: usize, k: usize) -> Vec<Face> {
    Face::from_members(0..n).k_subsets(k)
}
