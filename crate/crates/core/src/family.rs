use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{Face, VertexPrefix, MAX_VERTICES};

/// A collection of distinct faces over a fixed vertex universe. Uniform
/// families (all members the same size) are the common case; Sperner
/// families (no member contains another) appear in the cross-intersecting
/// machinery.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    /// `Some(r)` when every member has exactly `r` vertices.
    card: Option<usize>,
    /// Sorted (ascending-tuple lex order), deduplicated.
    sets: Vec<Face>,
}

impl SetFamily {
    /// A uniform family of `r`-element sets.
    pub fn uniform(n: usize, r: usize, sets: Vec<Face>) -> Result<SetFamily> {
        check_universe(n)?;
        for s in &sets {
            check_range(*s, n)?;
            if s.cardinality() != r {
                return Err(Error::NotUniform);
            }
        }
        Ok(SetFamily {
            n,
            card: Some(r),
            sets: normalize(sets),
        })
    }

    /// A family with no guaranteed member size; `r()` reports 0.
    pub fn general(n: usize, sets: Vec<Face>) -> Result<SetFamily> {
        check_universe(n)?;
        for s in &sets {
            check_range(*s, n)?;
        }
        let sets = normalize(sets);
        let card = uniform_card(&sets);
        Ok(SetFamily { n, card, sets })
    }

    /// A Sperner family: no member may contain another.
    pub fn sperner(n: usize, sets: Vec<Face>) -> Result<SetFamily> {
        let fam = SetFamily::general(n, sets)?;
        if !fam.is_sperner() {
            return Err(Error::BadSize(
                "family is not Sperner: one member contains another".into(),
            ));
        }
        Ok(fam)
    }

    pub fn empty(n: usize, r: usize) -> SetFamily {
        SetFamily {
            n,
            card: Some(r),
            sets: Vec::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Member cardinality for uniform families, 0 in mixed/Sperner mode.
    pub fn r(&self) -> usize {
        self.card.unwrap_or(0)
    }

    pub fn uniform_cardinality(&self) -> Option<usize> {
        self.card
    }

    pub fn is_uniform(&self) -> bool {
        self.card.is_some()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Face] {
        &self.sets
    }

    pub fn contains(&self, f: Face) -> bool {
        self.sets.binary_search(&f).is_ok()
    }

    pub fn is_sperner(&self) -> bool {
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                if a.is_subset_of(*b) || b.is_subset_of(*a) {
                    return false;
                }
            }
        }
        true
    }

    /// Intersection of all members. By convention the empty family meets in
    /// the whole universe.
    pub fn common_intersection(&self) -> Face {
        let mut acc = Face::from_members(0..self.n);
        for s in &self.sets {
            acc = acc.intersection(*s);
        }
        acc
    }

    pub fn has_common_intersection(&self) -> bool {
        !self.is_empty() && !self.common_intersection().is_empty()
    }

    /// Pairwise nonempty intersections.
    pub fn is_intersecting(&self) -> bool {
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                if !a.intersects(*b) {
                    return false;
                }
            }
        }
        true
    }

    /// Every member of `self` meets every member of `other`.
    pub fn is_cross_intersecting(&self, other: &SetFamily) -> bool {
        self.sets
            .iter()
            .all(|a| other.sets.iter().all(|b| a.intersects(*b)))
    }

    /// All (r-1)-element subsets of members of an r-uniform family.
    pub fn shadow(&self) -> Result<SetFamily> {
        let r = match self.card {
            Some(r) if r >= 1 => r,
            _ => return Err(Error::NotUniform),
        };
        let mut out = Vec::new();
        for s in &self.sets {
            for v in s.members() {
                out.push(s.without(v));
            }
        }
        SetFamily::uniform(self.n, r - 1, out)
    }

    /// Finds a (k+1)-set all of whose k-subsets belong to this k-uniform
    /// family; returns the lexicographically smallest such witness. A positive
    /// answer forces the family to have no common intersection.
    pub fn spans_simplex_boundary(&self) -> Result<Option<Face>> {
        let k = self.card.ok_or(Error::NotUniform)?;
        let mut candidates: Vec<Face> = Vec::new();
        for s in &self.sets {
            for v in 0..self.n {
                if !s.contains(v) {
                    candidates.push(s.with(v));
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        for w in candidates {
            if w.k_subsets(k).iter().all(|sub| self.contains(*sub)) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// Closure under replacing, for each `v_i` in the prefix, any member
    /// element `w ∉ {v_1,…,v_i}` by `v_i`.
    pub fn is_shifted_wrt(&self, prefix: &VertexPrefix) -> bool {
        for (i, &vi) in prefix.vertices().iter().enumerate() {
            let head = prefix.head_mask(i + 1);
            for s in &self.sets {
                if s.contains(vi) {
                    continue;
                }
                for w in s.members() {
                    if head.contains(w) {
                        continue;
                    }
                    if !self.contains(s.swap(w, vi)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_shifted(&self) -> bool {
        self.is_shifted_wrt(&VertexPrefix::full(self.n))
    }

    /// Splits at a vertex: members containing `v` (with `v` removed) and
    /// members avoiding `v`.
    pub fn restrict_at_last(&self, v: usize) -> (SetFamily, SetFamily) {
        let mut with_v = Vec::new();
        let mut without_v = Vec::new();
        for s in &self.sets {
            if s.contains(v) {
                with_v.push(s.without(v));
            } else {
                without_v.push(*s);
            }
        }
        let mk = |sets: Vec<Face>| {
            let card = uniform_card(&sets);
            SetFamily {
                n: self.n,
                card,
                sets: normalize(sets),
            }
        };
        (mk(with_v), mk(without_v))
    }

    /// The family as a sorted list of bitmask words: the canonical key used
    /// for reproducible witness tie-breaking.
    pub fn bitmask_key(&self) -> Vec<u64> {
        let mut key: Vec<u64> = self.sets.iter().map(|f| f.bits()).collect();
        key.sort_unstable();
        key
    }

    /// Compares families as sorted bitmask sequences (ties broken by length).
    pub fn cmp_by_bitmask_key(&self, other: &SetFamily) -> Ordering {
        self.bitmask_key().cmp(&other.bitmask_key())
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, ", self.n)?;
        f.debug_list().entries(self.sets.iter()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

fn normalize(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort();
    sets.dedup();
    sets
}

fn uniform_card(sets: &[Face]) -> Option<usize> {
    let first = sets.first()?.cardinality();
    sets.iter()
        .all(|s| s.cardinality() == first)
        .then_some(first)
}

fn check_universe(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::VertexOutOfRange { vertex: n - 1, n });
    }
    Ok(())
}

fn check_range(f: Face, n: usize) -> Result<()> {
    if let Some(v) = f.max_vertex() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(m: &[usize]) -> Face {
        Face::from_members(m.iter().copied())
    }

    #[test]
    fn uniform_rejects_mixed_sizes() {
        assert_eq!(
            SetFamily::uniform(4, 2, vec![f(&[0, 1]), f(&[2])]).unwrap_err(),
            Error::NotUniform
        );
    }

    #[test]
    fn shadow_of_triangle() {
        let fam = SetFamily::uniform(3, 3, vec![f(&[0, 1, 2])]).unwrap();
        let sh = fam.shadow().unwrap();
        assert_eq!(sh.sets(), &[f(&[0, 1]), f(&[0, 2]), f(&[1, 2])]);
    }

    #[test]
    fn shadow_of_disjoint_edges() {
        let fam = SetFamily::uniform(4, 2, vec![f(&[0, 1]), f(&[2, 3])]).unwrap();
        let sh = fam.shadow().unwrap();
        assert_eq!(sh.sets(), &[f(&[0]), f(&[1]), f(&[2]), f(&[3])]);
    }

    #[test]
    fn spans_boundary_examples() {
        let fam = SetFamily::uniform(3, 2, vec![f(&[0, 1]), f(&[0, 2]), f(&[1, 2])]).unwrap();
        assert_eq!(fam.spans_simplex_boundary().unwrap(), Some(f(&[0, 1, 2])));

        // A star through vertex 0 never spans a boundary.
        let star = SetFamily::uniform(
            5,
            2,
            (1..5).map(|v| Face::from_members([0, v])).collect(),
        )
        .unwrap();
        assert_eq!(star.spans_simplex_boundary().unwrap(), None);

        // {1,2,3} missing.
        let fam = SetFamily::uniform(
            4,
            3,
            vec![f(&[0, 1, 2]), f(&[0, 1, 3]), f(&[0, 2, 3])],
        )
        .unwrap();
        assert_eq!(fam.spans_simplex_boundary().unwrap(), None);
    }

    #[test]
    fn shifted_examples() {
        let fam =
            SetFamily::uniform(5, 3, vec![f(&[0, 1, 2]), f(&[0, 1, 3])]).unwrap();
        assert!(fam.is_shifted());

        let fam = SetFamily::uniform(3, 2, vec![f(&[1, 2])]).unwrap();
        let p = VertexPrefix::new(vec![0], 3).unwrap();
        assert!(!fam.is_shifted_wrt(&p));
    }

    #[test]
    fn restrict_at_last_example() {
        let fam = SetFamily::uniform(4, 2, vec![f(&[0, 3]), f(&[1, 2])]).unwrap();
        let (with, without) = fam.restrict_at_last(3);
        assert_eq!(with.sets(), &[f(&[0])]);
        assert_eq!(without.sets(), &[f(&[1, 2])]);
    }

    #[test]
    fn shadow_twice_two_routes_agree() {
        let fam = SetFamily::uniform(
            6,
            3,
            vec![f(&[0, 1, 2]), f(&[1, 3, 4]), f(&[2, 4, 5])],
        )
        .unwrap();
        let iterated = fam.shadow().unwrap().shadow().unwrap();
        // direct route: all (r-2)-subsets of members
        let mut direct = Vec::new();
        for s in fam.sets() {
            direct.extend(s.k_subsets(1));
        }
        let direct = SetFamily::uniform(6, 1, direct).unwrap();
        assert_eq!(iterated, direct);
    }
}
