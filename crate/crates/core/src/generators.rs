//! Instance families feeding the verifiers: chordal graphs, disjoint
//! unions, threshold graphs, uniform matroids with coloops, cones, and
//! seeded random complexes. Generators embed their construction
//! certificates so callers can cite why hypotheses hold.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::family::SetFamily;
use crate::graph::Graph;

/// A chordal graph built by reverse perfect-elimination insertion: each
/// new vertex's earlier neighborhood is a clique by construction.
#[derive(Clone, Debug)]
pub struct ChordalInstance {
    pub graph: Graph,
    /// Perfect elimination order certified by the construction.
    pub elimination_order: Vec<usize>,
    /// Clique attached to each vertex at insertion time.
    pub insertion_cliques: Vec<Face>,
}

pub fn gen_chordal(n: usize, extra_isolated: usize, seed: u64) -> ChordalInstance {
    assert!(n >= 1);
    let total = n + extra_isolated;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<u64> = vec![0; total];
    let mut cliques: Vec<Face> = vec![Face::EMPTY; total];
    for v in 1..n {
        // grow a clique among the earlier vertices: start from a random
        // anchor, then add common neighbors while the coin keeps landing
        if rng.gen_bool(0.15) {
            continue; // occasionally insert a fresh component
        }
        let anchor = rng.gen_range(0..v);
        let mut clique = Face::singleton(anchor);
        loop {
            let common: Vec<usize> = (0..v)
                .filter(|&u| !clique.contains(u))
                .filter(|&u| clique.members().all(|c| adj[c] & (1 << u) != 0))
                .collect();
            if common.is_empty() || !rng.gen_bool(0.5) {
                break;
            }
            clique = clique.with(common[rng.gen_range(0..common.len())]);
        }
        cliques[v] = clique;
        for u in clique.members() {
            edges.push((u, v));
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    // isolated vertices take the last indices
    let graph = Graph::new(total, edges).expect("indices in range");
    ChordalInstance {
        graph,
        elimination_order: (0..total).rev().collect(),
        insertion_cliques: cliques,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
    Complete,
}

/// Disjoint union of paths, cycles, and complete graphs.
pub fn gen_disjoint_union(parts: &[(ComponentKind, usize)]) -> Result<Graph> {
    let mut acc = Graph::new(0, vec![])?;
    for &(kind, size) in parts {
        if size == 0 {
            return Err(Error::BadSize("component of size 0".into()));
        }
        if kind == ComponentKind::Cycle && size < 3 {
            return Err(Error::BadSize(format!("cycle of size {size} (need >= 3)")));
        }
        let edges: Vec<(usize, usize)> = match kind {
            ComponentKind::Path => (1..size).map(|i| (i - 1, i)).collect(),
            ComponentKind::Cycle => (0..size).map(|i| (i, (i + 1) % size)).collect(),
            ComponentKind::Complete => (0..size)
                .flat_map(|a| (a + 1..size).map(move |b| (a, b)))
                .collect(),
        };
        acc = acc.disjoint_union(&Graph::new(size, edges)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdStep {
    Isolated,
    Dominating,
}

/// A threshold graph from its creation word, relabeled so the independence
/// complex is shifted in the ambient vertex order.
#[derive(Clone, Debug)]
pub struct ThresholdInstance {
    pub graph: Graph,
    pub word: Vec<ThresholdStep>,
    /// `creation_position[v]` = when vertex v was created.
    pub creation_position: Vec<usize>,
}

pub fn gen_threshold(word: &[ThresholdStep]) -> ThresholdInstance {
    let n = word.len();
    // build on creation labels first
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, step) in word.iter().enumerate() {
        if *step == ThresholdStep::Dominating {
            edges.extend((0..i).map(|j| (j, i)));
        }
    }
    let by_creation = Graph::new(n, edges).expect("in range");
    // threshold graphs have nested neighborhoods; sorting by degree
    // (ascending, then creation order) makes the independence complex
    // shifted in the ambient order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (by_creation.degree(v), v));
    let mut relabel = vec![0usize; n];
    for (newv, &old) in order.iter().enumerate() {
        relabel[old] = newv;
    }
    let edges: Vec<(usize, usize)> = by_creation
        .edges()
        .iter()
        .map(|&(a, b)| (relabel[a], relabel[b]))
        .collect();
    let graph = Graph::new(n, edges).expect("in range");
    let mut creation_position = vec![0usize; n];
    for (created, &old) in order.iter().enumerate() {
        let _ = created;
        creation_position[relabel[old]] = old;
    }
    ThresholdInstance {
        graph,
        word: word.to_vec(),
        creation_position,
    }
}

/// Independence complex of the uniform matroid U_{k,n} with `coloops`
/// extra coloop points: facets are every k-subset of the non-coloop
/// vertices joined with all coloops. Coloops take the first indices.
pub fn gen_uniform_matroid(n: usize, k: usize, coloops: usize) -> Result<Complex> {
    if k > n {
        return Err(Error::BadRank { k, n });
    }
    let total = coloops + n;
    let coloop_face = Face::from_members(0..coloops);
    let ground = Face::from_members(coloops..total);
    let facets: Vec<Face> = ground
        .k_subsets(k)
        .into_iter()
        .map(|s| s.union(coloop_face))
        .collect();
    Complex::from_facets(facets, total)
}

/// Joins `t` fresh vertices (appended after the existing universe) into
/// every facet.
pub fn gen_cone(dx: &Complex, t: usize) -> Complex {
    let n = dx.n_vertices();
    let apexes = Face::from_members(n..n + t);
    let facets: Vec<Face> = dx.facets().iter().map(|f| f.union(apexes)).collect();
    Complex::from_facets(facets, n + t).expect("cone stays in range")
}

/// A t-fold cone over a disjoint union of simplexes of the given sizes.
pub fn gen_borg_shape(t: usize, simplex_sizes: &[usize]) -> Result<Complex> {
    if simplex_sizes.is_empty() {
        return Err(Error::BadSize("need at least one simplex".into()));
    }
    if simplex_sizes.iter().any(|&s| s == 0) {
        return Err(Error::BadSize("simplex of size 0".into()));
    }
    let mut facets = Vec::new();
    let mut offset = 0;
    for &s in simplex_sizes {
        facets.push(Face::from_members(offset..offset + s));
        offset += s;
    }
    let base = Complex::from_facets(facets, offset)?;
    Ok(gen_cone(&base, t))
}

/// Random pure-dimensional complex: each (dim+1)-subset of the universe is
/// a facet with probability `density`. With no facets sampled, returns the
/// empty complex when `allow_empty` is set and an error otherwise.
pub fn gen_random_complex(
    n: usize,
    dim: i32,
    density: f64,
    seed: u64,
    allow_empty: bool,
) -> Result<Complex> {
    assert!((0.0..=1.0).contains(&density));
    let card = (dim + 1).max(0) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let facets: Vec<Face> = Face::from_members(0..n)
        .k_subsets(card)
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect();
    if facets.is_empty() {
        if allow_empty {
            return Complex::from_facets(vec![Face::EMPTY], n);
        }
        return Err(Error::EmptyInput);
    }
    Complex::from_facets(facets, n)
}

/// Random r-uniform family on the full universe, each r-subset kept with
/// probability `density`.
pub fn gen_random_family(n: usize, r: usize, density: f64, seed: u64) -> SetFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets: Vec<Face> = Face::from_members(0..n)
        .k_subsets(r)
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect();
    SetFamily::uniform(n, r, sets).expect("subsets are r-uniform")
}
