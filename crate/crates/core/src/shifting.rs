//! Combinatorial shift operators with stabilization traces, and exterior
//! algebraic shifting of uniform families and complexes through generic
//! minors.
//!
//! The algebraic shift scans all k-subsets T of the universe in
//! lexicographic order and keeps those whose row of minors
//! `(det G[S rows, T cols])_{S ∈ F}` is independent of the rows kept so
//! far. The construction wants an infinite field; genericity is
//! approximated by seeded random bases over F_p with cross-seed agreement
//! required before a result is reported stable.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{k_subsets_of_universe, Face, VertexPrefix};
use crate::family::SetFamily;
use crate::homology::{depth, reduced_betti_all};
use crate::linalg::{random_invertible, FpMatrix, RankTracker};

/// Guard against non-terminating shift schedules (possible only for pair
/// sets outside the documented uses: all v<w, or a fixed target vertex).
const MAX_SWEEPS: usize = 100_000;

/// One recorded application of a shift operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftStep {
    pub op: ShiftOp,
    pub family_size: usize,
    /// Number of member sets replaced by this application.
    pub changed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftOp {
    Comb { v: usize, w: usize },
    Algebraic { seed: u64 },
}

impl std::fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ShiftOp::Comb { v, w } => write!(f, "Shift_{{{v}<-{w}}}"),
            ShiftOp::Algebraic { seed } => write!(f, "algebraic({seed})"),
        }
    }
}

/// Outcome of a stabilization run. The family cardinality is constant
/// across all steps.
#[derive(Clone, Debug)]
pub struct ShiftTrace {
    pub steps: Vec<ShiftStep>,
    pub outcome: SetFamily,
    /// Lex-least simplex boundary spanned by the outcome, when uniform.
    pub boundary_witness: Option<Face>,
    /// The operator whose application would have created a common
    /// intersection, when stopping on that condition.
    pub blocking_pair: Option<(usize, usize)>,
}

/// `Shift_{v←w}`: replaces w by v in each member containing w but not v,
/// unless the replacement is already present. Preserves cardinality.
pub fn comb_shift(family: &SetFamily, v: usize, w: usize) -> SetFamily {
    assert_ne!(v, w, "comb_shift needs distinct vertices");
    let mut out: Vec<Face> = Vec::with_capacity(family.len());
    for &a in family.sets() {
        if !a.contains(w) || a.contains(v) || family.contains(a.swap(w, v)) {
            out.push(a);
        }
    }
    for &a in family.sets() {
        if a.contains(w) && !a.contains(v) {
            out.push(a.swap(w, v));
        }
    }
    let shifted = SetFamily::general(family.n_vertices(), out)
        .expect("shift stays inside the universe");
    debug_assert_eq!(shifted.len(), family.len());
    shifted
}

fn count_changed(before: &SetFamily, after: &SetFamily) -> usize {
    after
        .sets()
        .iter()
        .filter(|s| !before.contains(**s))
        .count()
}

/// Repeatedly applies the allowed `Shift_{v←w}` operators, sweeping pairs
/// in lexicographic (v, w) order until a full sweep changes nothing. With
/// `stop_on_common_intersection`, halts just before any application that
/// would turn an empty common intersection nonempty and records the
/// blocking pair.
pub fn stabilize(
    family: &SetFamily,
    allowed: &[(usize, usize)],
    stop_on_common_intersection: bool,
) -> ShiftTrace {
    let mut pairs: Vec<(usize, usize)> = allowed
        .iter()
        .copied()
        .filter(|&(v, w)| v != w)
        .collect();
    pairs.sort_unstable();
    pairs.dedup();

    let mut current = family.clone();
    let mut steps = Vec::new();
    let mut blocking_pair = None;
    let mut sweeps = 0;
    'sweeping: loop {
        sweeps += 1;
        assert!(
            sweeps <= MAX_SWEEPS,
            "shift schedule failed to stabilize; allowed pairs do not terminate"
        );
        let mut changed_any = false;
        for &(v, w) in &pairs {
            let shifted = comb_shift(&current, v, w);
            if shifted == current {
                continue;
            }
            if stop_on_common_intersection
                && !current.has_common_intersection()
                && shifted.has_common_intersection()
            {
                blocking_pair = Some((v, w));
                break 'sweeping;
            }
            steps.push(ShiftStep {
                op: ShiftOp::Comb { v, w },
                family_size: shifted.len(),
                changed: count_changed(&current, &shifted),
            });
            current = shifted;
            changed_any = true;
        }
        if !changed_any {
            break;
        }
    }

    let boundary_witness = current.spans_simplex_boundary().ok().flatten();
    ShiftTrace {
        steps,
        outcome: current,
        boundary_witness,
        blocking_pair,
    }
}

/// All pairs (i, j) with i < j: stabilizing over these yields a fully
/// shifted family.
pub fn all_shift_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Pairs (a, w) over all w ≠ a: the near-cone reduction schedule.
pub fn apex_shift_pairs(a: usize, n: usize) -> Vec<(usize, usize)> {
    (0..n).filter(|&w| w != a).map(|w| (a, w)).collect()
}

/// Pairs (v_i, w) for each prefix vertex and each w outside `{v_1,…,v_i}`:
/// stabilizing over these leaves a family of faces of a prefix-shifted
/// complex shifted with respect to that prefix.
pub fn prefix_shift_pairs(prefix: &VertexPrefix, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &vi) in prefix.vertices().iter().enumerate() {
        let head = prefix.head_mask(i + 1);
        for w in 0..n {
            if !head.contains(w) {
                out.push((vi, w));
            }
        }
    }
    out
}

/// One row of the algebraic-shift scan: `(det G[S rows, T cols])_{S ∈ F}`.
/// Exposed in both flavors for the benchmark suite.
pub fn row_of_minors_seq(basis: &FpMatrix, members: &[Face], t: Face) -> Vec<u64> {
    members
        .iter()
        .map(|s| basis.minor(*s, t).expect("uniform cardinalities").value)
        .collect()
}

#[cfg(feature = "parallel")]
pub fn row_of_minors_par(basis: &FpMatrix, members: &[Face], t: Face) -> Vec<u64> {
    members
        .par_iter()
        .map(|s| basis.minor(*s, t).expect("uniform cardinalities").value)
        .collect()
}

fn row_of_minors(basis: &FpMatrix, members: &[Face], t: Face) -> Vec<u64> {
    #[cfg(feature = "parallel")]
    {
        if members.len() >= 64 {
            return row_of_minors_par(basis, members, t);
        }
    }
    row_of_minors_seq(basis, members, t)
}

/// Exterior algebraic shift of a uniform family with an explicit basis.
/// The output is shifted and has the same cardinality.
pub fn alg_shift_family(family: &SetFamily, basis: &FpMatrix) -> Result<SetFamily> {
    let k = family.uniform_cardinality().ok_or(Error::NotUniform)?;
    let n = family.n_vertices();
    if n == 0 {
        return Ok(family.clone());
    }
    if basis.rows() != n || basis.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: basis.rows(),
        });
    }
    if !basis.is_invertible() {
        return Err(Error::SingularBasis);
    }
    if family.is_empty() {
        return Ok(family.clone());
    }
    let members = family.sets();
    let mut tracker = RankTracker::new(members.len(), basis.prime());
    let mut absorbed = Vec::with_capacity(members.len());
    for t in k_subsets_of_universe(n, k) {
        if tracker.is_full() {
            break;
        }
        let row = row_of_minors(basis, members, t);
        if tracker.offer(&row)? {
            absorbed.push(t);
        }
    }
    // the compound matrix of an invertible matrix is invertible, so the
    // scan always absorbs exactly |F| subsets
    assert_eq!(absorbed.len(), members.len());
    SetFamily::uniform(n, k, absorbed)
}

pub fn alg_shift_family_seeded(family: &SetFamily, seed: u64, p: u64) -> Result<SetFamily> {
    let n = family.n_vertices().max(1);
    alg_shift_family(family, &random_invertible(n, seed, p))
}

/// Algebraic shift of a complex: every degree shifted with one shared
/// basis and the union re-assembled. The union must come out closed under
/// inclusion (∂Shift ⊆ Shift∂); a closure defect means the basis was not
/// generic enough and is reported as a genericity failure.
pub fn alg_shift_complex(dx: &Complex, basis: &FpMatrix) -> Result<Complex> {
    let n = dx.n_vertices();
    let mut union: Vec<Face> = Vec::new();
    let mut per_degree: Vec<Vec<Face>> = Vec::new();
    for k in 0..=dx.max_card() {
        let shifted = alg_shift_family(&dx.face_family(k), basis)?;
        per_degree.push(shifted.sets().to_vec());
        union.extend(shifted.sets());
    }
    let out = Complex::from_facets(union, n)?;
    for (k, degree) in per_degree.iter().enumerate() {
        if out.faces(k) != degree.as_slice() {
            return Err(Error::GenericityFailure {
                p: basis.prime(),
                detail: format!(
                    "shifted degree-{k} family is not the set of {k}-faces of the shifted complex"
                ),
            });
        }
    }
    Ok(out)
}

pub fn alg_shift_complex_seeded(dx: &Complex, seed: u64, p: u64) -> Result<Complex> {
    let n = dx.n_vertices().max(1);
    alg_shift_complex(dx, &random_invertible(n, seed, p))
}

fn majority<T: PartialEq + Clone>(runs: &[T]) -> Option<T> {
    for candidate in runs {
        let votes = runs.iter().filter(|r| *r == candidate).count();
        if 2 * votes > runs.len() {
            return Some(candidate.clone());
        }
    }
    None
}

fn run_seeds<T, F>(seeds: &[u64], run: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        seeds.par_iter().map(|&s| run(s)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        seeds.iter().map(|&s| run(s)).collect()
    }
}

/// Cross-seed agreement discipline: compute the shift under every seed; on
/// disagreement rerun with two extra seeds and let the majority win;
/// persistent disagreement is a genericity failure.
pub fn alg_shift_complex_stable(dx: &Complex, seeds: &[u64], p: u64) -> Result<Complex> {
    assert!(!seeds.is_empty(), "need at least one seed");
    let runs = run_seeds(seeds, |s| alg_shift_complex_seeded(dx, s, p))?;
    if runs.iter().all(|r| r == &runs[0]) {
        return Ok(runs[0].clone());
    }
    let top = *seeds.iter().max().expect("nonempty");
    let mut extended = runs;
    extended.extend(run_seeds(&[top + 1, top + 2], |s| {
        alg_shift_complex_seeded(dx, s, p)
    })?);
    majority(&extended).ok_or_else(|| Error::GenericityFailure {
        p,
        detail: "no majority among algebraic shifts across seeds".into(),
    })
}

pub fn alg_shift_family_stable(family: &SetFamily, seeds: &[u64], p: u64) -> Result<SetFamily> {
    assert!(!seeds.is_empty(), "need at least one seed");
    let runs = run_seeds(seeds, |s| alg_shift_family_seeded(family, s, p))?;
    if runs.iter().all(|r| r == &runs[0]) {
        return Ok(runs[0].clone());
    }
    let top = *seeds.iter().max().expect("nonempty");
    let mut extended = runs;
    extended.extend(run_seeds(&[top + 1, top + 2], |s| {
        alg_shift_family_seeded(family, s, p)
    })?);
    majority(&extended).ok_or_else(|| Error::GenericityFailure {
        p,
        detail: "no majority among algebraic shifts across seeds".into(),
    })
}

/// Combinatorial shift of a complex: `Shift_{v←w}` applied to every
/// F_k(Δ) and the union re-closed under inclusion. `closure_changed`
/// records whether re-closing added anything (the union of shifted degree
/// families need not itself be a complex).
pub struct ComplexShiftOutcome {
    pub complex: Complex,
    pub closure_changed: bool,
    pub changed: usize,
}

pub fn comb_shift_complex(dx: &Complex, v: usize, w: usize) -> ComplexShiftOutcome {
    let mut union: Vec<Face> = Vec::new();
    let mut per_degree: Vec<Vec<Face>> = Vec::new();
    let mut changed = 0;
    for k in 0..=dx.max_card() {
        let fam = dx.face_family(k);
        let shifted = comb_shift(&fam, v, w);
        changed += count_changed(&fam, &shifted);
        per_degree.push(shifted.sets().to_vec());
        union.extend(shifted.sets());
    }
    let complex =
        Complex::from_facets(union, dx.n_vertices()).expect("union contains the empty face");
    let closure_changed = per_degree
        .iter()
        .enumerate()
        .any(|(k, degree)| complex.faces(k) != degree.as_slice());
    ComplexShiftOutcome {
        complex,
        closure_changed,
        changed,
    }
}

/// Sweeps the allowed pairs over a complex until a fixed point; returns
/// the stabilized complex, the recorded steps, and whether any step's
/// re-closure changed the union.
pub fn stabilize_complex(
    dx: &Complex,
    allowed: &[(usize, usize)],
) -> (Complex, Vec<ShiftStep>, bool) {
    let mut pairs: Vec<(usize, usize)> = allowed
        .iter()
        .copied()
        .filter(|&(v, w)| v != w)
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let mut current = dx.clone();
    let mut steps = Vec::new();
    let mut closure_changed_any = false;
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        assert!(
            sweeps <= MAX_SWEEPS,
            "complex shift schedule failed to stabilize"
        );
        let mut changed_any = false;
        for &(v, w) in &pairs {
            let outcome = comb_shift_complex(&current, v, w);
            if outcome.complex.same_faces(&current) {
                continue;
            }
            closure_changed_any |= outcome.closure_changed;
            steps.push(ShiftStep {
                op: ShiftOp::Comb { v, w },
                family_size: outcome.complex.f_vector().iter().sum(),
                changed: outcome.changed,
            });
            current = outcome.complex;
            changed_any = true;
        }
        if !changed_any {
            return (current, steps, closure_changed_any);
        }
    }
}

/// Per-item verdict of the shifting property suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct PropertyCheck {
    pub id: usize,
    pub name: &'static str,
    pub status: CheckStatus,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
    pub cross_seed_agree: bool,
    pub shifted_complex: Complex,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.cross_seed_agree
            && self
                .checks
                .iter()
                .all(|c| !matches!(c.status, CheckStatus::Fail(_)))
    }
}

const CHECK_NAMES: [&str; 9] = [
    "shifted output, cardinality preserved",
    "shifted inputs are fixed points",
    "shadow of shift inside shift of shadow",
    "intersecting and cross-intersecting preserved",
    "monotone on subcomplexes",
    "depth preserved; min facet dim equals depth",
    "homology preserved",
    "near-cone link/deletion face counts preserved",
    "spanned simplex boundary preserved",
];

/// Runs the full algebraic-shifting property checklist on `dx` (and an
/// optional uniform family) across the given seeds, reporting per-item
/// status and cross-seed agreement of the shifted objects.
pub fn verify_shift_properties(
    dx: &Complex,
    family: Option<&SetFamily>,
    seeds: &[u64],
    p: u64,
) -> PropertyReport {
    assert!(!seeds.is_empty());
    let mut merged: Vec<CheckStatus> = vec![CheckStatus::Pass; CHECK_NAMES.len()];
    let mut shifted_per_seed: Vec<Complex> = Vec::new();

    for &seed in seeds {
        match run_property_checks(dx, family, seed, p) {
            Ok((statuses, shifted)) => {
                shifted_per_seed.push(shifted);
                for (slot, status) in merged.iter_mut().zip(statuses) {
                    merge_status(slot, status, seed);
                }
            }
            Err(e) => {
                for slot in merged.iter_mut() {
                    merge_status(slot, CheckStatus::Fail(format!("shift failed: {e}")), seed);
                }
            }
        }
    }

    let cross_seed_agree = shifted_per_seed.len() == seeds.len()
        && shifted_per_seed.iter().all(|c| c == &shifted_per_seed[0]);
    let shifted_complex = shifted_per_seed
        .into_iter()
        .next()
        .unwrap_or_else(|| dx.clone());

    PropertyReport {
        checks: merged
            .into_iter()
            .enumerate()
            .map(|(i, status)| PropertyCheck {
                id: i + 1,
                name: CHECK_NAMES[i],
                status,
            })
            .collect(),
        cross_seed_agree,
        shifted_complex,
    }
}

fn merge_status(slot: &mut CheckStatus, new: CheckStatus, seed: u64) {
    if matches!(slot, CheckStatus::Fail(_)) {
        return;
    }
    match new {
        CheckStatus::Fail(msg) => {
            *slot = CheckStatus::Fail(format!("seed {seed}: {msg}"));
        }
        CheckStatus::Skipped(reason) => {
            if matches!(slot, CheckStatus::Pass) {
                *slot = CheckStatus::Skipped(reason);
            }
        }
        CheckStatus::Pass => {}
    }
}

fn fail(msg: impl Into<String>) -> CheckStatus {
    CheckStatus::Fail(msg.into())
}

fn run_property_checks(
    dx: &Complex,
    family: Option<&SetFamily>,
    seed: u64,
    p: u64,
) -> Result<(Vec<CheckStatus>, Complex)> {
    let n = dx.n_vertices().max(1);
    let basis = random_invertible(n, seed, p);
    let shifted = alg_shift_complex(dx, &basis)?;
    let mut out: Vec<CheckStatus> = Vec::with_capacity(CHECK_NAMES.len());

    // (1) shifted output with preserved degreewise cardinality
    out.push({
        let mut status = CheckStatus::Pass;
        if !shifted.is_fully_shifted() {
            status = fail("shifted complex is not shifted under the lex convention");
        } else if shifted.f_vector() != dx.f_vector() {
            status = fail("f-vector not preserved");
        } else if let Some(fam) = family {
            let sh = alg_shift_family(fam, &basis)?;
            if sh.len() != fam.len() || !sh.is_shifted() {
                status = fail("family shift lost cardinality or shiftedness");
            }
        }
        status
    });

    // (2) shifted inputs are fixed points
    out.push({
        let again = alg_shift_complex(&shifted, &basis)?;
        if again == shifted {
            CheckStatus::Pass
        } else {
            fail("re-shifting a shifted complex moved it")
        }
    });

    // (3) ∂(Shift F) ⊆ Shift(∂F), degreewise and for the given family
    out.push({
        let mut status = CheckStatus::Pass;
        'deg: for k in 1..=dx.max_card() {
            let fam = dx.face_family(k);
            if fam.is_empty() {
                continue;
            }
            let lhs = alg_shift_family(&fam, &basis)?.shadow()?;
            let rhs = alg_shift_family(&fam.shadow()?, &basis)?;
            for s in lhs.sets() {
                if !rhs.contains(*s) {
                    status = fail(format!("degree {k}: {s} escapes the shifted shadow"));
                    break 'deg;
                }
            }
        }
        if status == CheckStatus::Pass {
            if let Some(fam) = family {
                if fam.r() >= 1 && !fam.is_empty() {
                    let lhs = alg_shift_family(fam, &basis)?.shadow()?;
                    let rhs = alg_shift_family(&fam.shadow()?, &basis)?;
                    if !lhs.sets().iter().all(|s| rhs.contains(*s)) {
                        status = fail("family shadow containment fails");
                    }
                }
            }
        }
        status
    });

    // (4) intersecting / cross-intersecting preserved
    out.push({
        let probe = match family {
            Some(fam) if fam.is_intersecting() && !fam.is_empty() => Some(fam.clone()),
            _ => intersecting_probe(dx),
        };
        match probe {
            None => CheckStatus::Skipped("no intersecting family available".into()),
            Some(fam) => {
                let sh = alg_shift_family(&fam, &basis)?;
                if !sh.is_intersecting() {
                    fail("intersecting family shifted to a non-intersecting one")
                } else {
                    let partner = intersecting_probe(dx).unwrap_or_else(|| fam.clone());
                    if fam.is_cross_intersecting(&partner) {
                        let sh_partner = alg_shift_family(&partner, &basis)?;
                        if sh.is_cross_intersecting(&sh_partner) {
                            CheckStatus::Pass
                        } else {
                            fail("cross-intersecting pair broken by shifting")
                        }
                    } else {
                        CheckStatus::Pass
                    }
                }
            }
        }
    });

    // (5) monotone on subcomplexes
    out.push(match subcomplex_probe(dx) {
        None => CheckStatus::Skipped("no proper subcomplex".into()),
        Some(gamma) => {
            let sh_gamma = alg_shift_complex(&gamma, &basis)?;
            if sh_gamma.facets().iter().all(|f| shifted.contains(*f)) {
                CheckStatus::Pass
            } else {
                fail("shift of a subcomplex escapes the shifted complex")
            }
        }
    });

    // (6) depth preserved; min facet dimension of the shift equals depth
    out.push({
        let before = depth(dx, p).depth;
        let after = depth(&shifted, p).depth;
        if before != after {
            fail(format!("depth changed: {before} to {after}"))
        } else if shifted.min_facet_dim() != before {
            fail(format!(
                "min facet dim of shift is {} but depth is {before}",
                shifted.min_facet_dim()
            ))
        } else {
            CheckStatus::Pass
        }
    });

    // (7) homology preserved
    out.push({
        if reduced_betti_all(dx, p) == reduced_betti_all(&shifted, p) {
            CheckStatus::Pass
        } else {
            fail("Betti numbers changed")
        }
    });

    // (8) near-cone apex link/deletion face counts, iterated over the
    // maximal shifted prefix
    out.push({
        let prefix = dx.maximal_shifted_prefix();
        if prefix.is_empty() {
            CheckStatus::Skipped("not a near-cone".into())
        } else {
            let t = prefix.len();
            let image: Vec<usize> = (0..t).collect();
            if prefix_face_counts_agree(dx, prefix.vertices(), &shifted, &image) {
                CheckStatus::Pass
            } else {
                fail("link/deletion face counts differ from the shifted apex")
            }
        }
    });

    // (corollary) spanned simplex boundary preserved
    out.push({
        let probe = match family {
            Some(fam) if fam.spans_simplex_boundary().ok().flatten().is_some() => {
                Some(fam.clone())
            }
            _ => boundary_probe(dx),
        };
        match probe {
            None => CheckStatus::Skipped("no boundary-spanning family available".into()),
            Some(fam) => {
                let sh = alg_shift_family(&fam, &basis)?;
                if sh.spans_simplex_boundary()?.is_some() {
                    CheckStatus::Pass
                } else {
                    fail("spanned simplex boundary lost under shifting")
                }
            }
        }
    });

    Ok((out, shifted))
}

/// A star of r-faces at the best vertex, the canonical intersecting probe.
fn intersecting_probe(dx: &Complex) -> Option<SetFamily> {
    let r = dx.max_card().min(2);
    if r == 0 {
        return None;
    }
    let best = (0..dx.n_vertices())
        .max_by_key(|&v| dx.faces(r).iter().filter(|f| f.contains(v)).count())?;
    let star: Vec<Face> = dx
        .faces(r)
        .iter()
        .filter(|f| f.contains(best))
        .copied()
        .collect();
    if star.is_empty() {
        None
    } else {
        Some(SetFamily::uniform(dx.n_vertices(), r, star).expect("faces are r-uniform"))
    }
}

/// Drops the lex-last facet, or falls back to a lower skeleton.
fn subcomplex_probe(dx: &Complex) -> Option<Complex> {
    if dx.facets().len() >= 2 {
        let kept: Vec<Face> = dx.facets()[..dx.facets().len() - 1].to_vec();
        return Complex::from_facets(kept, dx.n_vertices()).ok();
    }
    if dx.dim() >= 0 {
        return Some(dx.skeleton(dx.dim() - 1));
    }
    None
}

/// The boundary family of a maximal face: spans by construction.
fn boundary_probe(dx: &Complex) -> Option<SetFamily> {
    let k = dx.max_card();
    if k == 0 {
        return None;
    }
    let top = dx.faces(k).first()?;
    SetFamily::uniform(dx.n_vertices(), k - 1, top.k_subsets(k - 1)).ok()
}

/// Compares f-vectors of links and deletions along matching prefixes of
/// two complexes, recursively over all link/deletion words.
fn prefix_face_counts_agree(a: &Complex, pa: &[usize], b: &Complex, pb: &[usize]) -> bool {
    if pa.is_empty() {
        return true;
    }
    debug_assert_eq!(pa.len(), pb.len());
    let (va, vb) = (pa[0], pb[0]);
    let fa = Face::singleton(va);
    let fb = Face::singleton(vb);
    let (la, lb) = match (a.link(fa), b.link(fb)) {
        (Ok(la), Ok(lb)) => (la, lb),
        (Err(_), Err(_)) => return a.deletion(va).f_vector() == b.deletion(vb).f_vector(),
        _ => return false,
    };
    if la.f_vector() != lb.f_vector() {
        return false;
    }
    let (da, db) = (a.deletion(va), b.deletion(vb));
    if da.f_vector() != db.f_vector() {
        return false;
    }
    prefix_face_counts_agree(&la, &pa[1..], &lb, &pb[1..])
        && prefix_face_counts_agree(&da, &pa[1..], &db, &pb[1..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{f, path_complex, simplex, two_triangles};
    use crate::{DEFAULT_PRIME, DEFAULT_SEEDS};
    use proptest::prelude::*;

    const P: u64 = DEFAULT_PRIME;

    #[test]
    fn comb_shift_clauses() {
        // second clause: plain replacement
        let fam = SetFamily::uniform(3, 2, vec![f(&[1, 2])]).unwrap();
        let out = comb_shift(&fam, 0, 2);
        assert_eq!(out.sets(), &[f(&[0, 1])]);

        // first clause: kept when the replacement already exists
        let fam = SetFamily::uniform(3, 2, vec![f(&[0, 1]), f(&[1, 2])]).unwrap();
        let out = comb_shift(&fam, 0, 2);
        assert_eq!(out.sets(), &[f(&[0, 1]), f(&[1, 2])]);
    }

    #[test]
    fn comb_shift_path_edge_family() {
        let fam = SetFamily::uniform(4, 2, vec![f(&[0, 1]), f(&[1, 2]), f(&[2, 3])]).unwrap();
        let out = comb_shift(&fam, 0, 3);
        assert_eq!(out.sets(), &[f(&[0, 1]), f(&[0, 2]), f(&[1, 2])]);
    }

    #[test]
    fn comb_shift_path_complex_golden() {
        let outcome = comb_shift_complex(&path_complex(), 0, 3);
        let want =
            Complex::from_facets(vec![f(&[0, 1]), f(&[0, 2]), f(&[1, 2]), f(&[3])], 4).unwrap();
        assert!(outcome.complex.same_faces(&want));
        assert_eq!(outcome.complex.min_facet_size(), 1);
        assert!(!outcome.closure_changed);
    }

    #[test]
    fn stabilize_all_pairs_gives_shifted() {
        let fam =
            SetFamily::uniform(5, 3, vec![f(&[0, 1, 2]), f(&[0, 3, 4]), f(&[2, 3, 4])]).unwrap();
        let trace = stabilize(&fam, &all_shift_pairs(5), false);
        assert!(trace.outcome.is_shifted());
        assert_eq!(trace.outcome.len(), fam.len());
        assert!(trace.blocking_pair.is_none());
    }

    #[test]
    fn stabilize_fixed_point_zero_steps() {
        let fam = SetFamily::uniform(5, 3, vec![f(&[0, 1, 2]), f(&[0, 1, 3])]).unwrap();
        assert!(fam.is_shifted());
        let trace = stabilize(&fam, &all_shift_pairs(5), false);
        assert!(trace.steps.is_empty());
        assert_eq!(trace.outcome, fam);
    }

    #[test]
    fn stabilize_apex_schedule_on_boundary_family() {
        // all 2-subsets of {1,2,3} on a universe with apex 0: intersecting,
        // no common intersection; the apex schedule must keep it that way
        // and end shifted with respect to 0
        let fam = SetFamily::uniform(4, 2, vec![f(&[1, 2]), f(&[1, 3]), f(&[2, 3])]).unwrap();
        let trace = stabilize(&fam, &apex_shift_pairs(0, 4), true);
        assert!(trace.blocking_pair.is_none());
        let p0 = VertexPrefix::new(vec![0], 4).unwrap();
        assert!(trace.outcome.is_shifted_wrt(&p0));
        assert!(!trace.outcome.has_common_intersection());
        assert!(trace.boundary_witness.is_some());
    }

    #[test]
    fn stabilize_blocking_pair_detected() {
        // every member has 0 or 1, and {1,2,3}'s swap {0,2,3} is absent:
        // Shift_{0<-1} would give every member vertex 0
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
        assert!(fam.is_intersecting());
        assert!(!fam.has_common_intersection());
        let trace = stabilize(&fam, &apex_shift_pairs(0, 5), true);
        assert_eq!(trace.blocking_pair, Some((0, 1)));
        assert!(!trace.outcome.has_common_intersection());
    }

    #[test]
    fn prefix_stabilization_stays_shifted_wrt_prefix() {
        // a 2-fold cone over two points: shifted w.r.t. {0,1}
        let dx = Complex::from_facets(vec![f(&[0, 1, 2]), f(&[0, 1, 3])], 4).unwrap();
        let prefix = VertexPrefix::new(vec![0, 1], 4).unwrap();
        assert!(dx.is_shifted_wrt(&prefix));
        let fam = SetFamily::uniform(4, 2, vec![f(&[1, 2]), f(&[1, 3])]).unwrap();
        assert!(fam.sets().iter().all(|s| dx.contains(*s)));
        let pairs = prefix_shift_pairs(&prefix, 4);
        let trace = stabilize(&fam, &pairs, false);
        assert!(trace.outcome.is_shifted_wrt(&prefix));
        // members remain faces of the complex
        assert!(trace.outcome.sets().iter().all(|s| dx.contains(*s)));
    }

    #[test]
    fn alg_shift_two_triangle_family_golden() {
        let fam = SetFamily::uniform(5, 3, vec![f(&[0, 1, 2]), f(&[0, 3, 4])]).unwrap();
        for seed in DEFAULT_SEEDS {
            let out = alg_shift_family_seeded(&fam, seed, P).unwrap();
            assert_eq!(out.sets(), &[f(&[0, 1, 2]), f(&[0, 1, 3])], "seed {seed}");
        }
    }

    #[test]
    fn alg_shift_single_set_goes_lex_first() {
        let fam = SetFamily::uniform(6, 3, vec![f(&[2, 4, 5])]).unwrap();
        let out = alg_shift_family_seeded(&fam, 1, P).unwrap();
        assert_eq!(out.sets(), &[f(&[0, 1, 2])]);
    }

    #[test]
    fn alg_shift_shifted_family_is_fixed() {
        let fam = SetFamily::uniform(5, 3, vec![f(&[0, 1, 2]), f(&[0, 1, 3])]).unwrap();
        let out = alg_shift_family_seeded(&fam, 5, P).unwrap();
        assert_eq!(out, fam);
    }

    #[test]
    fn alg_shift_path_complex_golden() {
        for seed in DEFAULT_SEEDS {
            let out = alg_shift_complex_seeded(&path_complex(), seed, P).unwrap();
            assert_eq!(out.facets(), &[f(&[0, 1]), f(&[0, 2]), f(&[0, 3])]);
        }
    }

    #[test]
    fn alg_shift_two_triangles_golden() {
        for seed in DEFAULT_SEEDS {
            let out = alg_shift_complex_seeded(&two_triangles(), seed, P).unwrap();
            assert_eq!(
                out.facets(),
                &[f(&[0, 1, 2]), f(&[0, 1, 3]), f(&[0, 4])],
                "seed {seed}"
            );
            // the extra vertex 4 arrives with the extra edge {0,4}
            assert!(out.contains(f(&[4])));
            assert!(out.contains(f(&[0, 4])));
        }
    }

    #[test]
    fn alg_shift_simplex_fixed() {
        let sx = simplex(4);
        let out = alg_shift_complex_seeded(&sx, 9, P).unwrap();
        assert!(out.same_faces(&sx));
    }

    #[test]
    fn singular_basis_rejected() {
        let fam = SetFamily::uniform(3, 2, vec![f(&[0, 1])]).unwrap();
        let basis = FpMatrix::zero(3, 3, P);
        assert_eq!(
            alg_shift_family(&fam, &basis).unwrap_err(),
            Error::SingularBasis
        );
    }

    #[test]
    fn stable_shift_agrees_across_default_seeds() {
        let dx = two_triangles();
        let stable = alg_shift_complex_stable(&dx, &DEFAULT_SEEDS, P).unwrap();
        assert_eq!(stable.facets(), &[f(&[0, 1, 2]), f(&[0, 1, 3]), f(&[0, 4])]);
    }

    #[test]
    fn property_suite_on_two_triangles() {
        let report = verify_shift_properties(&two_triangles(), None, &DEFAULT_SEEDS, P);
        assert!(report.all_pass(), "{:?}", report.checks);
        assert!(report.cross_seed_agree);
    }

    #[test]
    fn property_suite_with_intersecting_family() {
        let dx = simplex(7);
        let star: Vec<Face> = dx
            .faces(3)
            .iter()
            .filter(|s| s.contains(0))
            .copied()
            .collect();
        let fam = SetFamily::uniform(7, 3, star).unwrap();
        let report = verify_shift_properties(&dx, Some(&fam), &DEFAULT_SEEDS[..1], P);
        assert!(report.all_pass(), "{:?}", report.checks);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn comb_shift_preserves_cardinality(
            masks in proptest::collection::btree_set(1u64..64, 1..10),
            v in 0usize..6,
            w in 0usize..6,
        ) {
            prop_assume!(v != w);
            let sets: Vec<Face> = masks.iter().map(|&m| Face::from_bits(m)).collect();
            let fam = SetFamily::general(6, sets).unwrap();
            let out = comb_shift(&fam, v, w);
            prop_assert_eq!(out.len(), fam.len());
        }

        #[test]
        fn alg_shift_output_is_shifted_with_same_size(
            picks in proptest::collection::btree_set(0usize..35, 1..8),
            seed in 1u64..50,
        ) {
            // random 3-subsets of a 7-point universe
            let all = k_subsets_of_universe(7, 3);
            let sets: Vec<Face> = picks.iter().map(|&i| all[i]).collect();
            let fam = SetFamily::uniform(7, 3, sets).unwrap();
            let out = alg_shift_family_seeded(&fam, seed, P).unwrap();
            prop_assert_eq!(out.len(), fam.len());
            prop_assert!(out.is_shifted());
        }
    }
}
