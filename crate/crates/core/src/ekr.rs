//! Exact verifiers for intersecting-family bounds on simplicial complexes:
//! maximum intersecting families by branch-and-bound, strictness, the
//! stability and cross-intersecting bounds with their β/γ counters, the
//! inclusion-respecting injection between face levels, Sperner
//! augmentation, and the near-cone reduction trace.
//!
//! Every search here is exact. Instances beyond the configured limits
//! return `ResourceLimit` rather than an approximate answer.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use std::cmp::Ordering;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexPrefix};
use crate::family::SetFamily;
use crate::homology::depth;
use crate::shifting::{alg_shift_family_stable, apex_shift_pairs, stabilize, ShiftStep};

/// Resource caps for the exact searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Maximum number of r-faces fed to the branch-and-bound search.
    pub max_faces: usize,
    /// Node budget for the branch-and-bound search.
    pub node_budget: u64,
    /// Maximum f_r for the exhaustive cross-intersecting enumeration.
    pub cross_enum_cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_faces: 2000,
            node_budget: 50_000_000,
            cross_enum_cap: 24,
        }
    }
}

/// Number of r-faces containing v: `f_{r-1}(link_Δ v)`.
pub fn star_size(dx: &Complex, v: usize, r: usize) -> usize {
    dx.faces(r).iter().filter(|f| f.contains(v)).count()
}

/// The best star bound `max_v f_{r-1}(link_Δ v)` with its smallest witness
/// vertex.
pub fn star_bound(dx: &Complex, r: usize) -> (usize, Option<usize>) {
    let mut best = 0;
    let mut vertex = None;
    for v in 0..dx.n_vertices() {
        let s = star_size(dx, v, r);
        if s > best {
            best = s;
            vertex = Some(v);
        }
    }
    (best, vertex)
}

// ---------------------------------------------------------------------------
// branch-and-bound maximum intersecting family
// ---------------------------------------------------------------------------

/// Growable bitset over face indices.
#[derive(Clone, PartialEq, Eq)]
struct IdxSet {
    words: Vec<u64>,
}

impl IdxSet {
    fn empty(n: usize) -> IdxSet {
        IdxSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> IdxSet {
        let mut s = IdxSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &IdxSet) -> IdxSet {
        IdxSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn intersects(&self, other: &IdxSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn is_subset_of(&self, other: &IdxSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Clears indices below `lo`.
    fn clear_below(&mut self, lo: usize) {
        for (w, word) in self.words.iter_mut().enumerate() {
            let base = w * 64;
            if base + 64 <= lo {
                *word = 0;
            } else if base < lo {
                *word &= !((1u64 << (lo - base)) - 1);
            }
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }
}

/// Exact maximum pairwise-intersecting subfamily search on the
/// intersection graph of the r-faces.
struct Search {
    faces: Vec<Face>,
    /// Adjacency in the intersection graph (self excluded).
    compat: Vec<IdxSet>,
    /// For each vertex x of the complex, the faces containing x.
    contains_vertex: Vec<IdxSet>,
    /// Static branching order: descending disjointness degree.
    static_order: Vec<usize>,
    universe: u64,
    require_empty_common: bool,
    budget: u64,
    nodes: u64,
    best: usize,
    /// Feasibility mode: stop as soon as a valid family of this size exists.
    target: Option<usize>,
    target_found: bool,
}

impl Search {
    fn new(dx: &Complex, r: usize, require_empty_common: bool, limits: &SearchLimits) -> Search {
        let faces: Vec<Face> = {
            let mut fs = dx.faces(r).to_vec();
            // index space ordered by bitmask for reproducible witnesses
            fs.sort_by_key(|f| f.bits());
            fs
        };
        let m = faces.len();
        let mut compat = vec![IdxSet::empty(m); m];
        for i in 0..m {
            for j in i + 1..m {
                if faces[i].intersects(faces[j]) {
                    compat[i].insert(j);
                    compat[j].insert(i);
                }
            }
        }
        let n = dx.n_vertices();
        let mut contains_vertex = vec![IdxSet::empty(m); n];
        for (i, f) in faces.iter().enumerate() {
            for v in f.members() {
                contains_vertex[v].insert(i);
            }
        }
        let mut static_order: Vec<usize> = (0..m).collect();
        // disjointness degree = m - 1 - intersection degree
        static_order.sort_by_key(|&i| compat[i].count());
        let universe = if n == 0 { 0 } else { (1u64 << n) - 1 };
        Search {
            faces,
            compat,
            contains_vertex,
            static_order,
            universe,
            require_empty_common,
            budget: limits.node_budget,
            nodes: 0,
            best: 0,
            target: None,
            target_found: false,
        }
    }

    #[inline]
    fn valid(&self, common: u64) -> bool {
        !self.require_empty_common || common == 0
    }

    /// Greedy coloring of the candidates: classes are pairwise-disjoint
    /// (non-adjacent) face sets, so any intersecting family takes at most
    /// one face per class. Returns (vertex, color) sorted by color.
    fn color_order(&self, p: &IdxSet) -> Vec<(usize, usize)> {
        let mut classes: Vec<IdxSet> = Vec::new();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &v in &self.static_order {
            if !p.contains(v) {
                continue;
            }
            let mut placed = false;
            for (c, class) in classes.iter_mut().enumerate() {
                if !class.intersects(&self.compat[v]) {
                    class.insert(v);
                    out.push((v, c + 1));
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut class = IdxSet::empty(self.faces.len());
                class.insert(v);
                classes.push(class);
                out.push((v, classes.len()));
            }
        }
        out.sort_by_key(|&(_, c)| c);
        out
    }

    fn expand(&mut self, r_size: usize, common: u64, p: &IdxSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit(format!(
                "search node budget {} exceeded",
                self.budget
            )));
        }
        if self.valid(common) && r_size > self.best {
            self.best = r_size;
            if let Some(t) = self.target {
                if self.best >= t {
                    self.target_found = true;
                }
            }
        }
        if self.target_found || p.is_empty() {
            return Ok(());
        }
        if self.require_empty_common && common != 0 {
            // every remaining candidate keeps some common vertex: no valid
            // completion in this subtree
            let mut c = common;
            while c != 0 {
                let x = c.trailing_zeros() as usize;
                c &= c - 1;
                if p.is_subset_of(&self.contains_vertex[x]) {
                    return Ok(());
                }
            }
        }
        let order = self.color_order(p);
        let mut p_run = p.clone();
        for &(v, color) in order.iter().rev() {
            if r_size + color <= self.best {
                return Ok(());
            }
            let p2 = p_run.and(&self.compat[v]);
            self.expand(r_size + 1, common & self.faces[v].bits(), &p2)?;
            if self.target_found {
                return Ok(());
            }
            p_run.remove(v);
        }
        Ok(())
    }

    /// Maximum valid family size.
    fn run_max(&mut self) -> Result<usize> {
        let m = self.faces.len();
        if m == 0 {
            return Ok(0);
        }
        self.best = 0;
        self.target = None;
        self.target_found = false;
        if !self.require_empty_common {
            // a best star is a valid family: seed the bound
            self.best = self
                .contains_vertex
                .iter()
                .map(|s| s.count())
                .max()
                .unwrap_or(0)
                .max(1);
        }
        let p = IdxSet::full(m);
        self.expand(0, self.universe, &p)?;
        Ok(self.best)
    }

    /// Is there a valid family of size `target` extending `chosen_size`
    /// faces with running intersection `common` and candidates `p`?
    fn completion_exists(
        &mut self,
        chosen_size: usize,
        common: u64,
        p: &IdxSet,
        target: usize,
    ) -> Result<bool> {
        self.best = target - 1;
        self.target = Some(target);
        self.target_found = chosen_size == target && self.valid(common);
        if !self.target_found {
            self.expand(chosen_size, common, p)?;
        }
        let found = self.target_found;
        self.target = None;
        self.target_found = false;
        Ok(found)
    }

    /// Lexicographically least valid family of size `m_target` (compared
    /// as sorted bitmask sequences).
    fn lex_least_witness(&mut self, m_target: usize) -> Result<Vec<Face>> {
        let m = self.faces.len();
        let mut chosen: Vec<usize> = Vec::new();
        let mut common = self.universe;
        let mut p = IdxSet::full(m);
        let mut start = 0;
        while chosen.len() < m_target {
            let mut committed = false;
            for idx in start..m {
                if !p.contains(idx) {
                    continue;
                }
                let common2 = common & self.faces[idx].bits();
                let mut p2 = p.and(&self.compat[idx]);
                p2.clear_below(idx + 1);
                if self.completion_exists(chosen.len() + 1, common2, &p2, m_target)? {
                    chosen.push(idx);
                    common = common2;
                    p = p2;
                    start = idx + 1;
                    committed = true;
                    break;
                }
            }
            assert!(committed, "a maximum family must be reconstructible");
        }
        Ok(chosen.into_iter().map(|i| self.faces[i]).collect())
    }
}

/// Exact maximum cardinality of a pairwise-intersecting subfamily of the
/// r-faces, with the lexicographically least witness. With
/// `require_empty_common`, only families whose common intersection is
/// empty count; the maximum is 0 when none exists.
pub fn max_intersecting(
    dx: &Complex,
    r: usize,
    require_empty_common: bool,
    limits: &SearchLimits,
) -> Result<(usize, SetFamily)> {
    let count = dx.f_k(r);
    if count > limits.max_faces {
        return Err(Error::ResourceLimit(format!(
            "f_{r} = {count} exceeds the face limit {}",
            limits.max_faces
        )));
    }
    let mut search = Search::new(dx, r, require_empty_common, limits);
    let best = search.run_max()?;
    let witness = if best == 0 {
        SetFamily::empty(dx.n_vertices(), r)
    } else {
        SetFamily::uniform(dx.n_vertices(), r, search.lex_least_witness(best)?)?
    };
    Ok((best, witness))
}

/// Verdict for the r-EKR property of a complex.
#[derive(Clone, Debug)]
pub struct EkrReport {
    pub r: usize,
    pub max_size: usize,
    pub star_bound: usize,
    pub best_star_vertex: Option<usize>,
    pub holds_ekr: bool,
    /// Some iff strictness was requested.
    pub strict: Option<bool>,
    /// Maximum size over families with empty common intersection.
    pub nonstar_max_size: Option<usize>,
    /// Extreme families: the maximum witness, then the best
    /// empty-common-intersection witness when strictness was computed.
    pub witnesses: Vec<SetFamily>,
}

pub fn check_ekr(dx: &Complex, r: usize, strict: bool, limits: &SearchLimits) -> Result<EkrReport> {
    let (bound, best_vertex) = star_bound(dx, r);
    let (max_size, max_witness) = max_intersecting(dx, r, false, limits)?;
    let holds_ekr = max_size <= bound;
    let mut witnesses = vec![max_witness];
    let (strict_verdict, nonstar) = if strict {
        let (nonstar_max, nonstar_witness) = max_intersecting(dx, r, true, limits)?;
        if nonstar_max > 0 {
            witnesses.push(nonstar_witness);
        }
        (
            Some(holds_ekr && nonstar_max < max_size),
            Some(nonstar_max),
        )
    } else {
        (None, None)
    };
    Ok(EkrReport {
        r,
        max_size,
        star_bound: bound,
        best_star_vertex: best_vertex,
        holds_ekr,
        strict: strict_verdict,
        nonstar_max_size: nonstar,
        witnesses,
    })
}

/// Number of r-faces containing `v_1` but no other prefix vertex.
pub fn beta_count(dx: &Complex, r: usize, prefix: &VertexPrefix) -> usize {
    assert!(!prefix.is_empty());
    let v1 = prefix.get(0);
    let rest = Face::from_members(prefix.vertices()[1..].iter().copied());
    dx.faces(r)
        .iter()
        .filter(|f| f.contains(v1) && !f.intersects(rest))
        .count()
}

/// Number of k-faces avoiding every prefix vertex.
pub fn gamma_count(dx: &Complex, k: usize, prefix: &VertexPrefix) -> usize {
    let all = Face::from_members(prefix.vertices().iter().copied());
    dx.faces(k)
        .iter()
        .filter(|f| !f.intersects(all))
        .count()
}

/// Stability verdict: the Hilton-Milner-style bound for intersecting
/// families without a common intersection.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub beta: usize,
    /// `f_{r-1}(link v_1) - beta + 1`.
    pub hm_bound: usize,
    pub observed_max_nonstar: usize,
    /// The construction `{v_2,…,v_{r+1}}` plus all r-faces containing v_1
    /// that meet it; empty if the base face is missing (probe mode only).
    pub extremal_family: SetFamily,
    pub extremal_size: usize,
    pub holds: bool,
}

fn stability_impl(
    dx: &Complex,
    r: usize,
    prefix: &VertexPrefix,
    limits: &SearchLimits,
) -> Result<StabilityReport> {
    let v1 = prefix.get(0);
    let beta = beta_count(dx, r, prefix);
    let hm_bound = star_size(dx, v1, r) + 1 - beta;
    let (observed, _witness) = max_intersecting(dx, r, true, limits)?;
    let a_star = Face::from_members(prefix.vertices()[1..].iter().copied());
    let extremal: Vec<Face> = if dx.contains(a_star) {
        let mut fam = vec![a_star];
        fam.extend(
            dx.faces(r)
                .iter()
                .filter(|f| f.contains(v1) && f.intersects(a_star))
                .copied(),
        );
        fam
    } else {
        Vec::new()
    };
    let extremal_family = SetFamily::uniform(dx.n_vertices(), r, extremal)?;
    Ok(StabilityReport {
        beta,
        hm_bound,
        observed_max_nonstar: observed,
        extremal_size: extremal_family.len(),
        extremal_family,
        holds: observed <= hm_bound,
    })
}

/// Checks the stability bound under its hypotheses: the complex shifted
/// with respect to a prefix of length r+1, and depth at least 2r-1.
pub fn check_stability(
    dx: &Complex,
    r: usize,
    prefix: &VertexPrefix,
    limits: &SearchLimits,
    p: u64,
) -> Result<StabilityReport> {
    let mut violated: Vec<String> = Vec::new();
    if r < 2 {
        violated.push(format!("need r >= 2, got {r}"));
    }
    if prefix.len() != r + 1 {
        violated.push(format!(
            "prefix must have length r+1 = {}, got {}",
            r + 1,
            prefix.len()
        ));
    }
    if !dx.is_shifted_wrt(prefix) {
        violated.push("complex is not shifted with respect to the prefix".into());
    }
    let d = depth(dx, p).depth;
    if d < 2 * r as i32 - 1 {
        violated.push(format!("depth {d} below 2r-1 = {}", 2 * r - 1));
    }
    if !violated.is_empty() {
        return Err(Error::HypothesisViolated(violated.join("; ")));
    }
    stability_impl(dx, r, prefix, limits)
}

/// Same computation with no hypothesis checks: a data-collection mode for
/// instances outside the theorem's reach. Nothing is asserted about the
/// bound holding.
pub fn stability_probe(
    dx: &Complex,
    r: usize,
    prefix: &VertexPrefix,
    limits: &SearchLimits,
) -> Result<StabilityReport> {
    if prefix.len() != r + 1 || r < 1 {
        return Err(Error::HypothesisViolated(format!(
            "probe still needs a prefix of length r+1 = {}",
            r + 1
        )));
    }
    stability_impl(dx, r, prefix, limits)
}

/// Cross-intersecting verdict for the two enumeration-backed bounds.
#[derive(Clone, Debug)]
pub struct CrossReport {
    pub gamma: usize,
    pub bound: usize,
    pub observed_max_sum: usize,
    pub witness_a: SetFamily,
    pub witness_b: SetFamily,
    pub holds: bool,
}

/// Subset-scan input exposed for the benchmark suite: for each face on
/// the B side, `meet[i]` masks the A-side faces meeting it and
/// `shadow[i]` masks its boundary subsets (shadow-constrained mode only).
pub struct CrossScan {
    pub meet: Vec<u128>,
    pub shadow: Option<Vec<u128>>,
    pub full_a: u128,
}

impl CrossScan {
    /// Sum |A(B)| + |B| for one candidate B mask, if the pair is feasible.
    #[inline]
    pub fn eval(&self, bmask: u32) -> Option<(usize, u32)> {
        let mut a = self.full_a;
        let mut shadow_union = 0u128;
        let mut m = bmask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            a &= self.meet[i];
            if let Some(sh) = &self.shadow {
                shadow_union |= sh[i];
            }
        }
        if a == 0 {
            return None;
        }
        if shadow_union & !a != 0 {
            return None; // the shadow must sit inside A(B)
        }
        Some((a.count_ones() as usize + bmask.count_ones() as usize, bmask))
    }
}

/// Lexicographic comparison of index sets as ascending sequences.
fn cmp_index_masks(a: u32, b: u32) -> Ordering {
    let (mut a, mut b) = (a, b);
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

fn better(best: Option<(usize, u32)>, cand: Option<(usize, u32)>) -> Option<(usize, u32)> {
    match (best, cand) {
        (None, c) => c,
        (b, None) => b,
        (Some((bs, bm)), Some((cs, cm))) => {
            if cs > bs || (cs == bs && cmp_index_masks(cm, bm) == Ordering::Less) {
                Some((cs, cm))
            } else {
                Some((bs, bm))
            }
        }
    }
}

/// Best (sum, mask) over all nonempty B masks in `lo..hi`, sequentially.
pub fn cross_scan_range_seq(scan: &CrossScan, lo: u32, hi: u32) -> Option<(usize, u32)> {
    let mut best = None;
    for bmask in lo.max(1)..hi {
        best = better(best, scan.eval(bmask));
    }
    best
}

#[cfg(feature = "parallel")]
pub fn cross_scan_range_par(scan: &CrossScan, lo: u32, hi: u32) -> Option<(usize, u32)> {
    const CHUNK: u32 = 1 << 14;
    let lo = lo.max(1);
    let chunks: Vec<(u32, u32)> = (lo..hi)
        .step_by(CHUNK as usize)
        .map(|start| (start, hi.min(start.saturating_add(CHUNK))))
        .collect();
    chunks
        .par_iter()
        .map(|&(a, b)| cross_scan_range_seq(scan, a, b))
        .reduce(|| None, better)
}

fn cross_scan_all(scan: &CrossScan, total: u32) -> Option<(usize, u32)> {
    #[cfg(feature = "parallel")]
    {
        if total > 1 << 16 {
            return cross_scan_range_par(scan, 1, total);
        }
    }
    cross_scan_range_seq(scan, 1, total)
}

fn check_cross_hypotheses(
    dx: &Complex,
    r: usize,
    prefix: &VertexPrefix,
    limits: &SearchLimits,
    p: u64,
    shadow_mode: bool,
) -> Result<()> {
    let mut violated: Vec<String> = Vec::new();
    if r < 2 {
        violated.push(format!("need r >= 2, got {r}"));
    }
    if prefix.len() != r {
        violated.push(format!(
            "prefix must have length r = {r}, got {}",
            prefix.len()
        ));
    }
    if !dx.is_shifted_wrt(prefix) {
        violated.push("complex is not shifted with respect to the prefix".into());
    }
    let d = depth(dx, p).depth;
    let needed = if shadow_mode {
        2 * r as i32 - 2
    } else {
        2 * r as i32 - 1
    };
    if d < needed {
        violated.push(format!("depth {d} below required {needed}"));
    }
    if !violated.is_empty() {
        return Err(Error::HypothesisViolated(violated.join("; ")));
    }
    let count = dx.f_k(r);
    if count > limits.cross_enum_cap {
        return Err(Error::ResourceLimit(format!(
            "f_{r} = {count} exceeds the enumeration cap {}",
            limits.cross_enum_cap
        )));
    }
    Ok(())
}

/// Exact maximum of |A| + |B| over nonempty cross-intersecting pairs of
/// r-uniform face families, against the bound `f_r(Δ) - γ + 1`. The
/// enumeration runs over B with A taken as all r-faces meeting every
/// member of B; a maximizing pair can always be assumed closed this way.
pub fn check_cross_classic(
    dx: &Complex,
    r: usize,
    prefix: &VertexPrefix,
    limits: &SearchLimits,
    p: u64,
) -> Result<CrossReport> {
    check_cross_hypotheses(dx, r, prefix, limits, p, false)?;
    let faces: Vec<Face> = {
        let mut fs = dx.faces(r).to_vec();
        fs.sort_by_key(|f| f.bits());
        fs
    };
    let m = faces.len();
    let meet: Vec<u128> = faces
        .iter()
        .map(|b| {
            let mut mask = 0u128;
            for (j, a) in faces.iter().enumerate() {
                if a.intersects(*b) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    let scan = CrossScan {
        meet,
        shadow: None,
        full_a: if m == 128 { !0 } else { (1u128 << m) - 1 },
    };
    let best = cross_scan_all(&scan, 1u32 << m);
    let gamma = gamma_count(dx, r, prefix);
    let bound = dx.f_k(r) + 1 - gamma;
    let (observed, witness_b_mask) =
        best.ok_or_else(|| Error::HypothesisViolated("no cross-intersecting pair exists".into()))?;
    let witness_b: Vec<Face> = (0..m)
        .filter(|i| witness_b_mask & (1 << i) != 0)
        .map(|i| faces[i])
        .collect();
    let a_mask = scan.eval(witness_b_mask).expect("witness is feasible").0;
    let _ = a_mask;
    let witness_a: Vec<Face> = {
        let mut acc = scan.full_a;
        let mut mm = witness_b_mask;
        while mm != 0 {
            let i = mm.trailing_zeros() as usize;
            mm &= mm - 1;
            acc &= scan.meet[i];
        }
        (0..m).filter(|i| acc & (1 << i) != 0).map(|i| faces[i]).collect()
    };
    Ok(CrossReport {
        gamma,
        bound,
        observed_max_sum: observed,
        witness_a: SetFamily::uniform(dx.n_vertices(), r, witness_a)?,
        witness_b: SetFamily::uniform(dx.n_vertices(), r, witness_b)?,
        holds: observed <= bound,
    })
}

/// The shadow-constrained variant: A consists of (r-1)-faces, B of
/// r-faces, ∂B ⊆ A, both nonempty and cross-intersecting; the bound is
/// `f_{r-1}(Δ) - γ + 1` with γ counted on (r-1)-faces.
pub fn check_cross_shadow(
    dx: &Complex,
    r: usize,
    prefix: &VertexPrefix,
    limits: &SearchLimits,
    p: u64,
) -> Result<CrossReport> {
    check_cross_hypotheses(dx, r, prefix, limits, p, true)?;
    let b_faces: Vec<Face> = {
        let mut fs = dx.faces(r).to_vec();
        fs.sort_by_key(|f| f.bits());
        fs
    };
    let a_faces: Vec<Face> = {
        let mut fs = dx.faces(r - 1).to_vec();
        fs.sort_by_key(|f| f.bits());
        fs
    };
    if a_faces.len() > 128 {
        return Err(Error::ResourceLimit(format!(
            "f_{} = {} exceeds the 128-face scan width",
            r - 1,
            a_faces.len()
        )));
    }
    let m = b_faces.len();
    let meet: Vec<u128> = b_faces
        .iter()
        .map(|b| {
            let mut mask = 0u128;
            for (j, a) in a_faces.iter().enumerate() {
                if a.intersects(*b) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    let shadow: Vec<u128> = b_faces
        .iter()
        .map(|b| {
            let mut mask = 0u128;
            for sub in b.k_subsets(r - 1) {
                let j = a_faces
                    .binary_search_by_key(&sub.bits(), |f| f.bits())
                    .expect("complex closed under inclusion");
                mask |= 1 << j;
            }
            mask
        })
        .collect();
    let scan = CrossScan {
        meet,
        shadow: Some(shadow),
        full_a: if a_faces.len() == 128 {
            !0
        } else {
            (1u128 << a_faces.len()) - 1
        },
    };
    let best = cross_scan_all(&scan, 1u32 << m);
    let gamma = gamma_count(dx, r - 1, prefix);
    let bound = dx.f_k(r - 1) + 1 - gamma;
    let (observed, witness_b_mask) =
        best.ok_or_else(|| Error::HypothesisViolated("no feasible pair exists".into()))?;
    let witness_b: Vec<Face> = (0..m)
        .filter(|i| witness_b_mask & (1 << i) != 0)
        .map(|i| b_faces[i])
        .collect();
    let witness_a: Vec<Face> = {
        let mut acc = scan.full_a;
        let mut mm = witness_b_mask;
        while mm != 0 {
            let i = mm.trailing_zeros() as usize;
            mm &= mm - 1;
            acc &= scan.meet[i];
        }
        (0..a_faces.len())
            .filter(|i| acc & (1 << i) != 0)
            .map(|i| a_faces[i])
            .collect()
    };
    Ok(CrossReport {
        gamma,
        bound,
        observed_max_sum: observed,
        witness_a: SetFamily::uniform(dx.n_vertices(), r - 1, witness_a)?,
        witness_b: SetFamily::uniform(dx.n_vertices(), r, witness_b)?,
        holds: observed <= bound,
    })
}

// ---------------------------------------------------------------------------
// inclusion-respecting injections between face levels
// ---------------------------------------------------------------------------

/// Result of the bipartite matching from F_s into F_r along inclusion.
#[derive(Clone, Debug)]
pub struct HibiOutcome {
    /// Full injection ψ with A ⊆ ψ(A), when the matching saturates F_s.
    pub injection: Option<Vec<(Face, Face)>>,
    /// A Hall violator (S, N(S)) with |N(S)| < |S| otherwise.
    pub hall_violator: Option<(Vec<Face>, Vec<Face>)>,
}

struct Matcher<'a> {
    adj: &'a [Vec<usize>],
    matched_right: Vec<Option<usize>>,
    visited: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn try_augment(&mut self, left: usize) -> bool {
        for &right in &self.adj[left] {
            if self.visited[right] {
                continue;
            }
            self.visited[right] = true;
            match self.matched_right[right] {
                None => {
                    self.matched_right[right] = Some(left);
                    return true;
                }
                Some(prev) => {
                    if self.try_augment(prev) {
                        self.matched_right[right] = Some(left);
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Maximum matching along inclusion A ⊆ B between two face lists; returns
/// `matched_right` (right index -> left index).
fn inclusion_matching(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut m = Matcher {
        adj,
        matched_right: vec![None; right_count],
        visited: vec![false; right_count],
    };
    for left in 0..adj.len() {
        m.visited.iter_mut().for_each(|v| *v = false);
        m.try_augment(left);
    }
    m.matched_right
}

fn hall_violator(
    adj: &[Vec<usize>],
    matched_left: &[Option<usize>],
    matched_right: &[Option<usize>],
    start: usize,
) -> (Vec<usize>, Vec<usize>) {
    // alternating reachability from an unmatched left vertex
    let mut left_seen = vec![false; adj.len()];
    let mut right_seen = vec![false; matched_right.len()];
    let mut stack = vec![start];
    left_seen[start] = true;
    while let Some(l) = stack.pop() {
        for &r in &adj[l] {
            if right_seen[r] {
                continue;
            }
            right_seen[r] = true;
            if let Some(l2) = matched_right[r] {
                if !left_seen[l2] {
                    left_seen[l2] = true;
                    stack.push(l2);
                }
            }
        }
    }
    let _ = matched_left;
    (
        (0..adj.len()).filter(|&l| left_seen[l]).collect(),
        (0..matched_right.len()).filter(|&r| right_seen[r]).collect(),
    )
}

/// Searches for an injection ψ: F_s(Δ) → F_r(Δ) with A ⊆ ψ(A), by maximum
/// bipartite matching. Guaranteed to exist when s ≤ r ≤ d - s for d the
/// minimum facet size; outside that range the matching is still attempted.
pub fn hibi_injection(dx: &Complex, s: usize, r: usize) -> HibiOutcome {
    let left: Vec<Face> = dx.faces(s).to_vec();
    let right: Vec<Face> = dx.faces(r).to_vec();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|a| {
            right
                .iter()
                .enumerate()
                .filter(|(_, b)| a.is_subset_of(**b))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let matched_right = inclusion_matching(&adj, right.len());
    let mut matched_left: Vec<Option<usize>> = vec![None; left.len()];
    for (rgt, lft) in matched_right.iter().enumerate() {
        if let Some(l) = lft {
            matched_left[*l] = Some(rgt);
        }
    }
    match matched_left.iter().position(|m| m.is_none()) {
        None => {
            let pairs = matched_left
                .iter()
                .enumerate()
                .map(|(l, r_)| (left[l], right[r_.expect("saturated")]))
                .collect();
            HibiOutcome {
                injection: Some(pairs),
                hall_violator: None,
            }
        }
        Some(unmatched) => {
            let (ls, rs) = hall_violator(&adj, &matched_left, &matched_right, unmatched);
            HibiOutcome {
                injection: None,
                hall_violator: Some((
                    ls.into_iter().map(|l| left[l]).collect(),
                    rs.into_iter().map(|r_| right[r_]).collect(),
                )),
            }
        }
    }
}

/// Replaces every undersized member of a Sperner family of faces by an
/// r-face containing it, injectively and avoiding the members already of
/// size r. Cross-intersecting partners stay cross-intersecting since
/// members only grow.
pub fn augment_sperner(family: &SetFamily, dx: &Complex, r: usize) -> Result<SetFamily> {
    if !family.is_sperner() {
        return Err(Error::HypothesisViolated(
            "augmentation input must be Sperner".into(),
        ));
    }
    for s in family.sets() {
        if !dx.contains(*s) {
            return Err(Error::HypothesisViolated(format!(
                "{s} is not a face of the complex"
            )));
        }
        if s.cardinality() > r {
            return Err(Error::HypothesisViolated(format!(
                "{s} has more than r = {r} vertices"
            )));
        }
    }
    let keep: Vec<Face> = family
        .sets()
        .iter()
        .filter(|s| s.cardinality() == r)
        .copied()
        .collect();
    let undersized: Vec<Face> = family
        .sets()
        .iter()
        .filter(|s| s.cardinality() < r)
        .copied()
        .collect();
    if undersized.is_empty() {
        return SetFamily::uniform(dx.n_vertices(), r, keep);
    }
    let targets: Vec<Face> = dx
        .faces(r)
        .iter()
        .filter(|b| !keep.contains(b))
        .copied()
        .collect();
    let adj: Vec<Vec<usize>> = undersized
        .iter()
        .map(|a| {
            targets
                .iter()
                .enumerate()
                .filter(|(_, b)| a.is_subset_of(**b))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let matched_right = inclusion_matching(&adj, targets.len());
    let mut matched_left: Vec<Option<usize>> = vec![None; undersized.len()];
    for (rgt, lft) in matched_right.iter().enumerate() {
        if let Some(l) = lft {
            matched_left[*l] = Some(rgt);
        }
    }
    if let Some(unmatched) = matched_left.iter().position(|m| m.is_none()) {
        let (ls, rs) = hall_violator(&adj, &matched_left, &matched_right, unmatched);
        return Err(Error::AugmentationImpossible {
            violator: ls.into_iter().map(|l| undersized[l]).collect(),
            neighborhood: rs.into_iter().map(|r_| targets[r_]).collect(),
        });
    }
    let mut out = keep;
    for (l, r_) in matched_left.iter().enumerate() {
        let _ = l;
        out.push(targets[r_.expect("saturated")]);
    }
    let mut augmented = Vec::with_capacity(undersized.len() + out.len());
    augmented.extend(out);
    SetFamily::uniform(dx.n_vertices(), r, augmented)
}

// ---------------------------------------------------------------------------
// the near-cone reduction trace
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum ReductionOutcome {
    /// The apex schedule stabilized without creating a common
    /// intersection: the family spans a simplex boundary on `witness` and
    /// its algebraic shift keeps the empty common intersection.
    SpansBoundary {
        stabilized: SetFamily,
        witness: Face,
        shifted: SetFamily,
        shifted_has_no_common: bool,
        shifted_spans: Option<Face>,
    },
    /// Some `Shift_{a←v}` would have created a common intersection. Every
    /// member then contains a or v, and the swap map into the (r-1)-faces
    /// of the apex link is injective but provably not surjective.
    Blocked {
        blocking_pair: (usize, usize),
        family: SetFamily,
        phi: Vec<(Face, Face)>,
        injective: bool,
        image_in_link: bool,
        /// A facet T through the apex containing a member avoiding it.
        facet_t: Option<Face>,
        /// An (r-1)-subset of T \ {a,v} outside the image: the
        /// non-surjectivity certificate.
        missing_subset: Option<Face>,
        b_t_size: usize,
        c_t_size: usize,
    },
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<ShiftStep>,
    pub outcome: ReductionOutcome,
}

/// Runs the combinatorial-then-algebraic reduction for an intersecting
/// family with empty common intersection on a near-cone with apex `a`.
pub fn reduction_trace(
    dx: &Complex,
    family: &SetFamily,
    a: usize,
    seeds: &[u64],
    p: u64,
) -> Result<ReductionTrace> {
    let mut violated: Vec<String> = Vec::new();
    if a >= dx.n_vertices() {
        violated.push(format!("apex {a} out of range"));
    } else if !dx.is_near_cone(a) {
        violated.push(format!("complex is not a near-cone with apex {a}"));
    }
    if family.uniform_cardinality().is_none() {
        violated.push("family must be uniform".into());
    }
    if family.is_empty() {
        violated.push("family must be nonempty".into());
    }
    if !family.sets().iter().all(|s| dx.contains(*s)) {
        violated.push("family members must be faces of the complex".into());
    }
    if !family.is_intersecting() {
        violated.push("family must be intersecting".into());
    }
    if family.has_common_intersection() {
        violated.push("family must have empty common intersection".into());
    }
    if !violated.is_empty() {
        return Err(Error::HypothesisViolated(violated.join("; ")));
    }

    let r = family.r();
    let trace = stabilize(family, &apex_shift_pairs(a, dx.n_vertices()), true);

    match trace.blocking_pair {
        None => {
            let stabilized = trace.outcome;
            assert!(
                stabilized
                    .is_shifted_wrt(&VertexPrefix::new(vec![a], dx.n_vertices()).expect("a < n")),
                "apex schedule fixed point must be shifted w.r.t. the apex"
            );
            // a member avoiding the apex exists (empty common intersection),
            // and with it the family spans the boundary on a ∪ A
            let base = stabilized
                .sets()
                .iter()
                .find(|s| !s.contains(a))
                .copied()
                .expect("empty common intersection leaves a member off the apex");
            let witness = base.with(a);
            debug_assert!(witness
                .k_subsets(r)
                .iter()
                .all(|sub| stabilized.contains(*sub)));
            let shifted = alg_shift_family_stable(&stabilized, seeds, p)?;
            let shifted_has_no_common = !shifted.has_common_intersection();
            let shifted_spans = shifted.spans_simplex_boundary()?;
            Ok(ReductionTrace {
                steps: trace.steps,
                outcome: ReductionOutcome::SpansBoundary {
                    stabilized,
                    witness,
                    shifted,
                    shifted_has_no_common,
                    shifted_spans,
                },
            })
        }
        Some((apex, v)) => {
            debug_assert_eq!(apex, a);
            let halted = trace.outcome;
            assert!(
                halted
                    .sets()
                    .iter()
                    .all(|s| s.contains(a) || s.contains(v)),
                "blocked family must cover {{a, v}}"
            );
            let phi: Vec<(Face, Face)> = halted
                .sets()
                .iter()
                .map(|s| {
                    let image = if s.contains(a) {
                        s.without(a)
                    } else {
                        s.without(v)
                    };
                    (*s, image)
                })
                .collect();
            let mut images: Vec<Face> = phi.iter().map(|(_, img)| *img).collect();
            images.sort();
            let distinct = images.windows(2).all(|w| w[0] != w[1]);
            let link = dx.link(Face::singleton(a))?;
            let image_in_link = phi.iter().all(|(_, img)| link.contains(*img));

            // a facet through the apex containing a member that avoids it
            let facet_t = halted
                .sets()
                .iter()
                .filter(|s| !s.contains(a))
                .flat_map(|c0| {
                    dx.facets()
                        .iter()
                        .filter(|t| t.contains(a) && c0.is_subset_of(**t))
                        .copied()
                })
                .min();
            let (missing_subset, b_t_size, c_t_size) = match facet_t {
                None => (None, 0, 0),
                Some(t) => {
                    let t_rest = t.without(a).without(v);
                    let missing = t_rest
                        .k_subsets(r - 1)
                        .into_iter()
                        .find(|sub| !images.contains(sub));
                    // the two Sperner families over T \ {a,v}
                    let candidates: Vec<Face> = halted
                        .sets()
                        .iter()
                        .filter(|s| !s.contains(v))
                        .map(|s| s.without(a).intersection(t))
                        .collect();
                    let b_t: Vec<Face> = candidates
                        .iter()
                        .filter(|x| {
                            !candidates
                                .iter()
                                .any(|y| *y != **x && x.is_subset_of(*y))
                        })
                        .copied()
                        .collect();
                    let mut b_t = b_t;
                    b_t.sort();
                    b_t.dedup();
                    let mut c_t: Vec<Face> = halted
                        .sets()
                        .iter()
                        .filter(|s| !s.contains(a))
                        .map(|s| s.without(v))
                        .filter(|img| img.is_subset_of(t))
                        .collect();
                    c_t.sort();
                    c_t.dedup();
                    (missing, b_t.len(), c_t.len())
                }
            };
            Ok(ReductionTrace {
                steps: trace.steps,
                outcome: ReductionOutcome::Blocked {
                    blocking_pair: (apex, v),
                    family: halted,
                    phi,
                    injective: distinct,
                    image_in_link,
                    facet_t,
                    missing_subset,
                    b_t_size,
                    c_t_size,
                },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_chordal, gen_cone};
    use crate::testutil::{f, simplex, simplex_boundary, two_triangles};
    use crate::{DEFAULT_PRIME, DEFAULT_SEEDS};

    const P: u64 = DEFAULT_PRIME;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut acc = 1usize;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn star_size_examples() {
        assert_eq!(star_size(&simplex(6), 0, 2), 5);
        assert_eq!(star_size(&two_triangles(), 0, 2), 4);
        // near-cone apex maximizes the star
        let dx = two_triangles();
        let apex = star_size(&dx, 0, 2);
        for v in 1..5 {
            assert!(star_size(&dx, v, 2) <= apex);
        }
    }

    #[test]
    fn max_intersecting_simplex_examples() {
        let sx = simplex(6);
        let (max, witness) = max_intersecting(&sx, 2, false, &limits()).unwrap();
        assert_eq!(max, 5);
        assert!(witness.is_intersecting());
        assert_eq!(witness.len(), 5);

        let (nonstar, witness) = max_intersecting(&sx, 2, true, &limits()).unwrap();
        assert_eq!(nonstar, 3);
        assert!(!witness.has_common_intersection());
        // lex-least triangle
        assert_eq!(witness.sets(), &[f(&[0, 1]), f(&[0, 2]), f(&[1, 2])]);

        let (one, _) = max_intersecting(&sx, 1, false, &limits()).unwrap();
        assert_eq!(one, 1);
        let (zero, w) = max_intersecting(&sx, 1, true, &limits()).unwrap();
        assert_eq!(zero, 0);
        assert!(w.is_empty());
    }

    #[test]
    fn face_limit_respected() {
        let sx = simplex(10);
        let tight = SearchLimits {
            max_faces: 10,
            ..limits()
        };
        assert!(matches!(
            max_intersecting(&sx, 3, false, &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn check_ekr_simplex_strict() {
        let report = check_ekr(&simplex(7), 3, true, &limits()).unwrap();
        assert_eq!(report.max_size, binom(6, 2));
        assert_eq!(report.star_bound, binom(6, 2));
        assert!(report.holds_ekr);
        assert_eq!(report.strict, Some(true));

        // at r = n/2 strictness fails: flip one pair of a star
        let report = check_ekr(&simplex(6), 3, true, &limits()).unwrap();
        assert!(report.holds_ekr);
        assert_eq!(report.max_size, binom(5, 2));
        assert_eq!(report.nonstar_max_size, Some(binom(5, 2)));
        assert_eq!(report.strict, Some(false));
    }

    #[test]
    fn check_ekr_chordal_with_isolated_vertex() {
        let inst = gen_chordal(6, 1, 4);
        let dx = Complex::independence(&inst.graph);
        let d = depth(&dx, P).depth + 1;
        let r = 2;
        if d >= 2 * r as i32 + 1 {
            let report = check_ekr(&dx, r, true, &limits()).unwrap();
            assert!(report.holds_ekr);
            assert_eq!(report.strict, Some(true));
        }
    }

    #[test]
    fn beta_gamma_counts_on_simplices() {
        let sx = simplex(8);
        let r = 3;
        let prefix = VertexPrefix::new((0..=r).collect(), 8).unwrap();
        assert_eq!(beta_count(&sx, r, &prefix), binom(8 - r - 1, r - 1));
        let prefix_r = VertexPrefix::new((0..r).collect(), 8).unwrap();
        assert_eq!(gamma_count(&sx, r, &prefix_r), binom(8 - r, r));
        // a prefix covering every vertex of every face zeroes the counters
        let all = VertexPrefix::full(8);
        assert_eq!(gamma_count(&sx, r, &all), 0);
    }

    #[test]
    fn stability_on_simplex_seven() {
        let sx = simplex(7);
        let prefix = VertexPrefix::new(vec![0, 1, 2], 7).unwrap();
        let report = check_stability(&sx, 2, &prefix, &limits(), P).unwrap();
        assert_eq!(report.beta, 4);
        assert_eq!(report.hm_bound, 3);
        assert_eq!(report.observed_max_nonstar, 3);
        assert!(report.holds);
        // the extremal construction is intersecting, has empty common
        // intersection, and attains the bound on simplices
        assert!(report.extremal_family.is_intersecting());
        assert!(!report.extremal_family.has_common_intersection());
        assert_eq!(report.extremal_size, report.hm_bound);
    }

    #[test]
    fn stability_hypothesis_check() {
        let dx = two_triangles();
        let prefix = VertexPrefix::new(vec![0, 1, 2], 5).unwrap();
        assert!(matches!(
            check_stability(&dx, 2, &prefix, &limits(), P),
            Err(Error::HypothesisViolated(_))
        ));
        // probe mode still runs
        assert!(stability_probe(&dx, 2, &prefix, &limits()).is_ok());
    }

    #[test]
    fn cross_classic_simplex_six() {
        let sx = simplex(6);
        let prefix = VertexPrefix::new(vec![0, 1], 6).unwrap();
        let report = check_cross_classic(&sx, 2, &prefix, &limits(), P).unwrap();
        assert_eq!(report.gamma, binom(4, 2));
        assert_eq!(report.bound, 15 - 6 + 1);
        assert_eq!(report.observed_max_sum, 10);
        assert!(report.holds);
        // achieved by a single set against everything meeting it
        assert_eq!(report.witness_b.len(), 1);
        assert_eq!(report.witness_a.len(), 9);
        assert!(report.witness_a.is_cross_intersecting(&report.witness_b));
    }

    #[test]
    fn cross_shadow_simplex_six() {
        let sx = simplex(6);
        let prefix = VertexPrefix::new(vec![0, 1], 6).unwrap();
        let report = check_cross_shadow(&sx, 2, &prefix, &limits(), P).unwrap();
        assert_eq!(report.gamma, 4);
        assert_eq!(report.bound, 6 - 4 + 1);
        assert_eq!(report.observed_max_sum, 3);
        assert!(report.holds);
        // singleton B with its shadow: sum r+1
        assert_eq!(report.witness_b.len(), 1);
        assert_eq!(report.witness_a.len(), 2);
    }

    #[test]
    fn hibi_injection_examples() {
        let sx = simplex(5);
        let out = hibi_injection(&sx, 1, 2);
        let inj = out.injection.unwrap();
        assert_eq!(inj.len(), 5);
        assert!(inj.iter().all(|(a, b)| a.is_subset_of(*b)));

        // two triangles: 6 edges but only 2 triangles
        let out = hibi_injection(&two_triangles(), 2, 3);
        assert!(out.injection.is_none());
        let (violator, neighborhood) = out.hall_violator.unwrap();
        assert!(violator.len() > neighborhood.len());
    }

    #[test]
    fn hibi_guaranteed_range() {
        for dx in [simplex(6), simplex_boundary(5), two_triangles()] {
            let d = dx.min_facet_size();
            for s in 0..=d {
                for r in s..=d.saturating_sub(s) {
                    let out = hibi_injection(&dx, s, r);
                    assert!(
                        out.injection.is_some(),
                        "s={s} r={r} d={d} on {dx:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn augment_sperner_examples() {
        let sx = simplex(5);
        let fam = SetFamily::sperner(5, vec![f(&[0])]).unwrap();
        let out = augment_sperner(&fam, &sx, 2).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out.r(), 2);
        assert!(f(&[0]).is_subset_of(out.sets()[0]));

        // an already-uniform family is unchanged
        let fam = SetFamily::sperner(5, vec![f(&[0, 1]), f(&[2, 3])]).unwrap();
        let out = augment_sperner(&fam, &sx, 2).unwrap();
        assert_eq!(out, fam);

        // mixed Sperner family: kept members stay, undersized grow
        let fam = SetFamily::sperner(5, vec![f(&[0, 1]), f(&[2])]).unwrap();
        let out = augment_sperner(&fam, &sx, 2).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out.contains(f(&[0, 1])));
    }

    #[test]
    fn augment_impossible_with_witness() {
        // the complex has only 2 triangles: 6 edges cannot all grow
        let dx = two_triangles();
        let edges: Vec<Face> = dx.faces(2).to_vec();
        let fam = SetFamily::sperner(5, edges).unwrap();
        match augment_sperner(&fam, &dx, 3) {
            Err(Error::AugmentationImpossible {
                violator,
                neighborhood,
            }) => {
                assert!(violator.len() > neighborhood.len());
            }
            other => panic!("expected augmentation failure, got {other:?}"),
        }
    }

    #[test]
    fn reduction_outcome_a_on_cone() {
        // cone over the boundary family pattern: apex 0, family = all
        // 2-subsets of {1,2,3}, which spans a simplex boundary
        let dx = gen_cone(&simplex_boundary(4), 1);
        // relabel: cone vertex is 4; use apex 4
        let fam =
            SetFamily::uniform(5, 2, vec![f(&[0, 1]), f(&[0, 2]), f(&[1, 2])]).unwrap();
        let trace = reduction_trace(&dx, &fam, 4, &DEFAULT_SEEDS, P).unwrap();
        match trace.outcome {
            ReductionOutcome::SpansBoundary {
                stabilized,
                witness,
                shifted,
                shifted_has_no_common,
                shifted_spans,
            } => {
                assert!(!stabilized.has_common_intersection());
                assert_eq!(witness.cardinality(), 3);
                assert!(shifted_has_no_common);
                assert!(shifted_spans.is_some());
                assert_eq!(shifted.len(), fam.len());
            }
            other => panic!("expected boundary outcome, got {other:?}"),
        }
    }

    #[test]
    fn reduction_outcome_b_blocked() {
        let sx = simplex(5);
        let fam = SetFamily::uniform(
            5,
            3,
            vec![
                f(&[0, 1, 2]),
                f(&[0, 1, 3]),
                f(&[0, 1, 4]),
                f(&[1, 2, 3]),
                f(&[0, 2, 4]),
            ],
        )
        .unwrap();
        let trace = reduction_trace(&sx, &fam, 0, &DEFAULT_SEEDS, P).unwrap();
        match trace.outcome {
            ReductionOutcome::Blocked {
                blocking_pair,
                injective,
                image_in_link,
                facet_t,
                missing_subset,
                b_t_size,
                c_t_size,
                ..
            } => {
                assert_eq!(blocking_pair, (0, 1));
                assert!(injective);
                assert!(image_in_link);
                assert_eq!(facet_t, Some(Face::from_members(0..5)));
                assert_eq!(missing_subset, Some(f(&[3, 4])));
                assert!(b_t_size >= 1);
                assert!(c_t_size >= 1);
            }
            other => panic!("expected blocked outcome, got {other:?}"),
        }
    }

    #[test]
    fn reduction_rejects_star() {
        let sx = simplex(5);
        let star: Vec<Face> = sx
            .faces(2)
            .iter()
            .filter(|s| s.contains(0))
            .copied()
            .collect();
        let fam = SetFamily::uniform(5, 2, star).unwrap();
        assert!(matches!(
            reduction_trace(&sx, &fam, 0, &DEFAULT_SEEDS, P),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
