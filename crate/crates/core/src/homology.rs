//! Reduced simplicial homology over F_p, the Cohen-Macaulay property, and
//! depth with its two computation paths.
//!
//! Chain groups are indexed by cardinality internally: the boundary map for
//! cardinality `k` sends k-element faces to (k-1)-element faces, and for
//! `k = 1` it is the augmentation row onto the empty face. Note that the
//! commutative-algebra convention puts depth (and Krull dimension) one
//! higher than the values reported here.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::FpMatrix;

/// Matrix of the reduced boundary map from k-element to (k-1)-element faces.
/// Rows are the (k-1)-faces, columns the k-faces, both in lexicographic
/// order; the entry for removing the j-th smallest vertex is (-1)^j.
pub fn boundary_matrix(dx: &Complex, k: usize, p: u64) -> Result<FpMatrix> {
    if k == 0 || k > dx.max_card() {
        return Err(Error::OutOfRange { k });
    }
    let rows = dx.faces(k - 1);
    let cols = dx.faces(k);
    let mut m = FpMatrix::zero(rows.len(), cols.len(), p);
    for (c, face) in cols.iter().enumerate() {
        for (j, v) in face.members().enumerate() {
            let sub = face.without(v);
            let r = rows
                .binary_search(&sub)
                .expect("complex is closed under inclusion");
            m.set_signed(r, c, j % 2 == 0);
        }
    }
    Ok(m)
}

/// Ranks of all boundary maps, indexed by cardinality `1..=max_card`.
fn boundary_ranks(dx: &Complex, p: u64) -> Vec<usize> {
    (1..=dx.max_card())
        .map(|k| boundary_matrix(dx, k, p).expect("k in range").rank())
        .collect()
}

/// All reduced Betti numbers over F_p, indexed from dimension -1: entry `j`
/// is the Betti number in dimension `j - 1`.
pub fn reduced_betti_all(dx: &Complex, p: u64) -> Vec<usize> {
    let max_card = dx.max_card();
    let ranks = boundary_ranks(dx, p);
    let rank_at = |k: usize| -> usize {
        if k >= 1 && k <= max_card {
            ranks[k - 1]
        } else {
            0
        }
    };
    // dimension i corresponds to cardinality k = i + 1
    (0..=max_card)
        .map(|k| dx.f_k(k) - rank_at(k) - rank_at(k + 1))
        .collect()
}

/// dim H̃_i(Δ; F_p).
pub fn reduced_betti(dx: &Complex, i: i32, p: u64) -> usize {
    if i < -1 || i > dx.dim() {
        return 0;
    }
    reduced_betti_all(dx, p)[(i + 1) as usize]
}

/// Smallest dimension with nonvanishing reduced homology, if any.
pub fn first_nonvanishing(dx: &Complex, p: u64) -> Option<i32> {
    reduced_betti_all(dx, p)
        .iter()
        .position(|&b| b != 0)
        .map(|j| j as i32 - 1)
}

fn link_acyclic_below_its_dim(dx: &Complex, a: Face, p: u64) -> bool {
    let link = dx.link(a).expect("a is a face");
    match first_nonvanishing(&link, p) {
        None => true,
        Some(i) => i >= link.dim(),
    }
}

/// Cohen-Macaulay over F_p: every face's link has vanishing reduced
/// homology strictly below its dimension.
pub fn is_cohen_macaulay(dx: &Complex, p: u64) -> bool {
    let faces = dx.all_faces();
    #[cfg(feature = "parallel")]
    {
        faces
            .par_iter()
            .all(|&a| link_acyclic_below_its_dim(dx, a, p))
    }
    #[cfg(not(feature = "parallel"))]
    {
        faces.iter().all(|&a| link_acyclic_below_its_dim(dx, a, p))
    }
}

/// Structured depth verdict. `depth` is a dimension: -1 for the empty
/// complex, at least 0 for anything with a vertex, at least 1 when
/// connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: i32,
    pub is_cm: bool,
    /// A face and homology index `(A, i)` with nonvanishing H̃_i(link A)
    /// realizing the depth bound; `None` when every link is acyclic.
    pub witness: Option<(Face, i32)>,
    pub min_facet_dim: i32,
    pub has_facet_depth: bool,
}

/// Reference path: the largest d whose d-skeleton is Cohen-Macaulay.
pub fn depth_via_skeleta(dx: &Complex, p: u64) -> i32 {
    let mut d = dx.dim();
    while d > -1 {
        if is_cohen_macaulay(&dx.skeleton(d), p) {
            return d;
        }
        d -= 1;
    }
    // the (-1)-skeleton {∅} is always Cohen-Macaulay
    -1
}

/// Fast path: min over faces A of |A| + (first nonvanishing homology index
/// of link A), capped at dim Δ. Returns the depth and the realizing face.
fn depth_min_formula(dx: &Complex, p: u64) -> (i32, Option<(Face, i32)>) {
    let dim = dx.dim();
    let eval = |a: &Face| -> Option<(i32, (Face, i32))> {
        let link = dx.link(*a).expect("a is a face");
        first_nonvanishing(&link, p).map(|i| (a.cardinality() as i32 + i, (*a, i)))
    };
    let faces = dx.all_faces();
    #[cfg(feature = "parallel")]
    let best = faces
        .par_iter()
        .filter_map(eval)
        .min_by_key(|&(value, (face, _))| (value, face));
    #[cfg(not(feature = "parallel"))]
    let best = faces
        .iter()
        .filter_map(eval)
        .min_by_key(|&(value, (face, _))| (value, face));
    match best {
        Some((value, witness)) if value <= dim => (value, Some(witness)),
        _ => (dim, None),
    }
}

/// Depth with both computation paths cross-checked; panics on disagreement,
/// which would be an implementation bug rather than bad input.
pub fn depth(dx: &Complex, p: u64) -> DepthReport {
    let (fast, witness) = depth_min_formula(dx, p);
    let reference = depth_via_skeleta(dx, p);
    assert_eq!(
        fast, reference,
        "depth paths disagree: min-formula {fast}, skeleton {reference}"
    );
    let min_facet_dim = dx.min_facet_dim();
    debug_assert!(fast <= min_facet_dim);
    DepthReport {
        depth: fast,
        is_cm: fast == dx.dim(),
        witness,
        min_facet_dim,
        has_facet_depth: fast == min_facet_dim,
    }
}

/// Depth equals the minimum facet dimension.
pub fn has_facet_depth(dx: &Complex, p: u64) -> bool {
    depth(dx, p).has_facet_depth
}
