//! Vertex-decomposability with shedding-order certificates.
//!
//! A complex is vertex-decomposable if it is a simplex, or has a shedding
//! vertex v (every face through v can exchange v for a vertex outside the
//! face) whose deletion and link are both vertex-decomposable. The exchange
//! only needs checking on facets: a subface inherits it from any facet
//! above it.

use std::collections::HashMap;

use crate::complex::Complex;
use crate::face::Face;

/// Certificate tree recording the shedding vertex chosen at each node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheddingCert {
    Simplex,
    Shed {
        vertex: usize,
        deletion: Box<SheddingCert>,
        link: Box<SheddingCert>,
    },
}

impl SheddingCert {
    /// Shedding vertices in preorder, one per recursion node.
    pub fn shedding_order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk(&mut out);
        out
    }

    fn walk(&self, out: &mut Vec<usize>) {
        if let SheddingCert::Shed {
            vertex,
            deletion,
            link,
        } = self
        {
            out.push(*vertex);
            deletion.walk(out);
            link.walk(out);
        }
    }
}

pub fn is_vertex_decomposable(dx: &Complex) -> (bool, Option<SheddingCert>) {
    let mut memo = HashMap::new();
    if !vd_bool(dx, &mut memo) {
        return (false, None);
    }
    let cert = vd_cert(dx, &mut memo).expect("vd_bool said yes");
    (true, Some(cert))
}

/// Memo key: facet bitmasks after relabeling support vertices by a cheap
/// invariant-refinement order. Isomorphic complexes may still get distinct
/// keys (costing only cache hits); distinct keys never alias.
fn canonical_key(dx: &Complex) -> Vec<u64> {
    let support: Vec<usize> = (0..dx.n_vertices())
        .filter(|&v| dx.facets().iter().any(|f| f.contains(v)))
        .collect();
    // initial color: (#facets through v, sorted sizes of those facets)
    let mut color: HashMap<usize, Vec<usize>> = HashMap::new();
    for &v in &support {
        let mut sizes: Vec<usize> = dx
            .facets()
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.cardinality())
            .collect();
        sizes.sort_unstable();
        let mut c = vec![sizes.len()];
        c.extend(sizes);
        color.insert(v, c);
    }
    // one refinement round: append the sorted colors of co-facet partners
    let refined: HashMap<usize, Vec<usize>> = support
        .iter()
        .map(|&v| {
            let mut partners: Vec<Vec<usize>> = Vec::new();
            for f in dx.facets().iter().filter(|f| f.contains(v)) {
                let mut cs: Vec<Vec<usize>> = f
                    .members()
                    .filter(|&u| u != v)
                    .map(|u| color[&u].clone())
                    .collect();
                cs.sort();
                partners.push(cs.into_iter().flatten().collect());
            }
            partners.sort();
            let mut c = color[&v].clone();
            c.extend(partners.into_iter().flatten());
            (v, c)
        })
        .collect();
    let mut order = support;
    order.sort_by(|a, b| refined[a].cmp(&refined[b]).then(a.cmp(b)));
    let relabel: HashMap<usize, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut key: Vec<u64> = dx
        .facets()
        .iter()
        .map(|f| {
            Face::from_members(f.members().map(|v| relabel[&v])).bits()
        })
        .collect();
    key.sort_unstable();
    key
}

/// The exchange property at v, checked on facets through v.
fn is_shedding_vertex(dx: &Complex, v: usize) -> bool {
    for f in dx.facets() {
        if !f.contains(v) {
            continue;
        }
        let ok = (0..dx.n_vertices())
            .any(|w| w != v && !f.contains(w) && dx.contains(f.swap(v, w)));
        if !ok {
            return false;
        }
    }
    true
}

fn support_vertices(dx: &Complex) -> Vec<usize> {
    (0..dx.n_vertices())
        .filter(|&v| dx.facets().iter().any(|f| f.contains(v)))
        .collect()
}

fn vd_bool(dx: &Complex, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if dx.facets().len() == 1 {
        return true; // a simplex, including {∅}
    }
    let key = canonical_key(dx);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let mut answer = false;
    for v in support_vertices(dx) {
        if !is_shedding_vertex(dx, v) {
            continue;
        }
        if vd_bool(&dx.deletion(v), memo)
            && vd_bool(&dx.link(Face::singleton(v)).expect("v is a vertex"), memo)
        {
            answer = true;
            break;
        }
    }
    memo.insert(key, answer);
    answer
}

fn vd_cert(dx: &Complex, memo: &mut HashMap<Vec<u64>, bool>) -> Option<SheddingCert> {
    if dx.facets().len() == 1 {
        return Some(SheddingCert::Simplex);
    }
    for v in support_vertices(dx) {
        if !is_shedding_vertex(dx, v) {
            continue;
        }
        let del = dx.deletion(v);
        let link = dx.link(Face::singleton(v)).expect("v is a vertex");
        if vd_bool(&del, memo) && vd_bool(&link, memo) {
            let dc = vd_cert(&del, memo).expect("bool said yes");
            let lc = vd_cert(&link, memo).expect("bool said yes");
            return Some(SheddingCert::Shed {
                vertex: v,
                deletion: Box::new(dc),
                link: Box::new(lc),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::homology::depth;
    use crate::testutil::{f, simplex, two_triangles};
    use crate::DEFAULT_PRIME;

    #[test]
    fn simplex_is_vd() {
        assert!(is_vertex_decomposable(&simplex(4)).0);
        let empty = Complex::from_facets(vec![Face::EMPTY], 2).unwrap();
        assert!(is_vertex_decomposable(&empty).0);
    }

    #[test]
    fn chordal_independence_complex_is_vd() {
        // path 0-1-2-3 is chordal
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let dx = Complex::independence(&g);
        let (vd, cert) = is_vertex_decomposable(&dx);
        assert!(vd);
        assert!(!cert.unwrap().shedding_order().is_empty());
    }

    #[test]
    fn shifted_complex_is_vd() {
        let dx =
            Complex::from_facets(vec![f(&[0, 1, 2]), f(&[0, 1, 3]), f(&[0, 4])], 5).unwrap();
        assert!(dx.is_fully_shifted());
        assert!(is_vertex_decomposable(&dx).0);
    }

    #[test]
    fn two_triangles_not_vd() {
        // depth 1 < min facet dimension 2, so it cannot be vertex-decomposable
        assert!(!is_vertex_decomposable(&two_triangles()).0);
    }

    #[test]
    fn four_cycle_independence_complex() {
        // Two disjoint edges: disconnected in dimension 1, so depth is 0
        // while the smallest facet has dimension 1. No vertex sheds: the
        // only exchange partner for {0,2} at 0 would need {2,w} to be a
        // face for some w outside, and none is.
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let dx = Complex::independence(&g);
        assert_eq!(dx.facets(), &[f(&[0, 2]), f(&[1, 3])]);
        let (vd, cert) = is_vertex_decomposable(&dx);
        assert!(!vd);
        assert!(cert.is_none());
        let report = depth(&dx, DEFAULT_PRIME);
        assert_eq!(report.depth, 0);
        assert!(!report.has_facet_depth);
    }

    #[test]
    fn vd_implies_facet_depth() {
        let complexes = vec![
            simplex(5),
            Complex::from_facets(vec![f(&[0, 1, 2]), f(&[0, 1, 3]), f(&[0, 4])], 5).unwrap(),
            Complex::independence(&Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap()),
            two_triangles(),
            Complex::independence(&Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap()),
        ];
        for dx in complexes {
            if is_vertex_decomposable(&dx).0 {
                assert!(
                    depth(&dx, DEFAULT_PRIME).has_facet_depth,
                    "{dx:?}"
                );
            }
        }
    }
}
