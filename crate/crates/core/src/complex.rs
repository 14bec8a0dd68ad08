use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::face::{Face, VertexPrefix, MAX_VERTICES};
use crate::family::SetFamily;
use crate::graph::Graph;

/// A simplicial complex stored by its facets (inclusion-maximal faces),
/// with lazily built per-cardinality face lists.
///
/// Complexes are immutable after construction, so the lazy caches never
/// invalidate and shared values are safe to use from many threads. The void
/// complex (no faces at all) is rejected; the empty complex `{∅}` is the
/// minimal legal value and has f-vector `(1)`.
#[derive(Clone)]
pub struct Complex {
    n: usize,
    facets: Vec<Face>,
    cache: Arc<[OnceLock<Vec<Face>>]>,
}

impl Complex {
    /// Builds a complex from generating sets: inclusion-maximal sets are
    /// retained as facets, duplicates merged. An empty list is rejected —
    /// pass `[Face::EMPTY]` for the empty complex.
    pub fn from_facets<I>(candidate_sets: I, n_vertices: usize) -> Result<Complex>
    where
        I: IntoIterator<Item = Face>,
    {
        if n_vertices > MAX_VERTICES {
            return Err(Error::VertexOutOfRange {
                vertex: n_vertices - 1,
                n: n_vertices,
            });
        }
        let mut sets: Vec<Face> = candidate_sets.into_iter().collect();
        if sets.is_empty() {
            return Err(Error::EmptyInput);
        }
        for s in &sets {
            if let Some(v) = s.max_vertex() {
                if v >= n_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: n_vertices,
                    });
                }
            }
        }
        sets.sort();
        sets.dedup();
        let facets: Vec<Face> = sets
            .iter()
            .filter(|a| {
                !sets
                    .iter()
                    .any(|b| *b != **a && a.is_subset_of(*b))
            })
            .copied()
            .collect();
        Ok(Complex::from_maximal(facets, n_vertices))
    }

    /// Internal constructor for already-incomparable facet lists.
    fn from_maximal(mut facets: Vec<Face>, n: usize) -> Complex {
        facets.sort();
        debug_assert!(!facets.is_empty());
        let max_card = facets.iter().map(|f| f.cardinality()).max().unwrap_or(0);
        let cache: Arc<[OnceLock<Vec<Face>>]> =
            (0..=max_card).map(|_| OnceLock::new()).collect();
        Complex { n, facets, cache }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Maximum face cardinality (0 for the empty complex).
    pub fn max_card(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.cardinality())
            .max()
            .unwrap_or(0)
    }

    pub fn dim(&self) -> i32 {
        self.max_card() as i32 - 1
    }

    pub fn min_facet_size(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.cardinality())
            .min()
            .unwrap_or(0)
    }

    pub fn min_facet_dim(&self) -> i32 {
        self.min_facet_size() as i32 - 1
    }

    /// Membership: a set is a face iff it lies under some facet.
    pub fn contains(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(*g))
    }

    /// All k-element faces, sorted lexicographically. Cardinalities beyond
    /// the dimension yield an empty slice.
    pub fn faces(&self, k: usize) -> &[Face] {
        static EMPTY: Vec<Face> = Vec::new();
        if k > self.max_card() {
            return &EMPTY;
        }
        self.cache[k].get_or_init(|| {
            let mut out: Vec<Face> = self
                .facets
                .iter()
                .flat_map(|f| f.k_subsets(k))
                .collect();
            out.sort();
            out.dedup();
            out
        })
    }

    pub fn f_k(&self, k: usize) -> usize {
        self.faces(k).len()
    }

    /// `(f_0, f_1, …, f_{dim+1})`, indexed by cardinality; `f_0 = 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.max_card()).map(|k| self.f_k(k)).collect()
    }

    /// Every face, grouped implicitly by cardinality, ascending.
    pub fn all_faces(&self) -> Vec<Face> {
        (0..=self.max_card())
            .flat_map(|k| self.faces(k).iter().copied())
            .collect()
    }

    /// The k-element faces as a uniform family.
    pub fn face_family(&self, k: usize) -> SetFamily {
        SetFamily::uniform(self.n, k, self.faces(k).to_vec())
            .expect("cached faces are k-uniform")
    }

    /// `link_Δ A = {B ∈ Δ : A ∩ B = ∅, A ∪ B ∈ Δ}`, on the same universe.
    pub fn link(&self, a: Face) -> Result<Complex> {
        if !self.contains(a) {
            return Err(Error::NotAFace { face: a });
        }
        let link_facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| a.is_subset_of(**f))
            .map(|f| f.difference(a))
            .collect();
        // Facets of the link are the F \ A over facets F ⊇ A; they are
        // pairwise incomparable because the F are.
        Ok(Complex::from_maximal(link_facets, self.n))
    }

    /// `del_Δ v`: all faces avoiding `v`, on the same universe.
    pub fn deletion(&self, v: usize) -> Complex {
        let mut kept: Vec<Face> = self.facets.iter().map(|f| f.without(v)).collect();
        kept.sort();
        kept.dedup();
        let maximal: Vec<Face> = kept
            .iter()
            .filter(|a| !kept.iter().any(|b| *b != **a && a.is_subset_of(*b)))
            .copied()
            .collect();
        Complex::from_maximal(maximal, self.n)
    }

    /// All faces of dimension at most `d`.
    pub fn skeleton(&self, d: i32) -> Complex {
        if d >= self.dim() {
            return self.clone();
        }
        if d < -1 {
            // below the (-1)-skeleton nothing remains but we never go void
            return Complex::from_maximal(vec![Face::EMPTY], self.n);
        }
        let cap = (d + 1) as usize;
        let mut facets: Vec<Face> = self.faces(cap).to_vec();
        facets.extend(
            self.facets
                .iter()
                .filter(|f| f.cardinality() < cap)
                .copied(),
        );
        Complex::from_maximal(facets, self.n)
    }

    /// Near-cone test: every face `B` with `w ∈ B` also has `(B \ w) ∪ a` as
    /// a face. Checking facets suffices since faces inherit the exchange from
    /// any facet above them.
    pub fn is_near_cone(&self, a: usize) -> bool {
        if a >= self.n {
            return false;
        }
        for f in &self.facets {
            if f.contains(a) {
                continue;
            }
            for w in f.members() {
                if !self.contains(f.swap(w, a)) {
                    return false;
                }
            }
        }
        true
    }

    /// All vertices that work as a near-cone apex, ascending.
    pub fn near_cone_apexes(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_near_cone(a)).collect()
    }

    /// Invariance under all `Shift_{v_i ← w}` with `w ∉ {v_1,…,v_i}`.
    pub fn is_shifted_wrt(&self, prefix: &VertexPrefix) -> bool {
        for (i, &vi) in prefix.vertices().iter().enumerate() {
            let head = prefix.head_mask(i + 1);
            for f in &self.facets {
                if f.contains(vi) {
                    continue;
                }
                for w in f.members() {
                    if head.contains(w) {
                        continue;
                    }
                    if !self.contains(f.swap(w, vi)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_fully_shifted(&self) -> bool {
        self.is_shifted_wrt(&VertexPrefix::full(self.n))
    }

    /// Recursive t-fold near-cone test: a near-cone at `v_1` whose deletion
    /// and link at `v_1` are both (t-1)-fold near-cones at the rest. Agrees
    /// with `is_shifted_wrt`.
    pub fn is_t_fold_near_cone(&self, prefix: &VertexPrefix) -> bool {
        if prefix.is_empty() {
            return true;
        }
        let v1 = prefix.get(0);
        if !self.is_near_cone(v1) {
            return false;
        }
        let rest = prefix.tail();
        if !self.deletion(v1).is_t_fold_near_cone(&rest) {
            return false;
        }
        match self.link(Face::singleton(v1)) {
            Ok(link) => link.is_t_fold_near_cone(&rest),
            // v1 not a vertex of the complex: a near-cone apex outside the
            // support means the complex is {∅} plus faces avoiding v1 that
            // already failed the near-cone check above.
            Err(_) => self.facets == [Face::EMPTY],
        }
    }

    /// Greedily extends the longest prefix the complex is shifted with
    /// respect to; maximal in the sense of not extendable.
    pub fn maximal_shifted_prefix(&self) -> VertexPrefix {
        let mut chosen: Vec<usize> = Vec::new();
        let mut next = 0;
        loop {
            let mut extended = false;
            for v in next..self.n {
                let mut attempt = chosen.clone();
                attempt.push(v);
                let p = VertexPrefix::new(attempt, self.n).expect("increasing by construction");
                if self.is_shifted_wrt(&p) {
                    chosen.push(v);
                    next = v + 1;
                    extended = true;
                    break;
                }
            }
            if !extended {
                return VertexPrefix::new(chosen, self.n).expect("increasing by construction");
            }
        }
    }

    /// Facet-set equality (universes must match).
    pub fn same_faces(&self, other: &Complex) -> bool {
        self.n == other.n && self.facets == other.facets
    }

    /// The independence complex of a graph: facets are the maximal
    /// independent sets.
    pub fn independence(graph: &Graph) -> Complex {
        let facets = graph.maximal_independent_sets();
        debug_assert!(!facets.is_empty());
        Complex::from_maximal(facets, graph.n_vertices())
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=", self.n)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.same_faces(other)
    }
}

impl Eq for Complex {}
