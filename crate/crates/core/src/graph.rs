use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// A simple graph on vertices `0..n`, adjacency kept as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange { vertex: n - 1, n });
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::BadSize(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![0u64; n];
        for &(a, b) in &norm {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Graph::new(n, edges).expect("complete graph edges are in range")
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a] & (1 << b) != 0
    }

    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v] == 0
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_isolated(v)).collect()
    }

    /// Disjoint union, relabeling `other` to start at `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|&(a, b)| (a + self.n, b + self.n)),
        );
        Graph::new(n, edges)
    }

    pub fn is_independent(&self, set: Face) -> bool {
        set.members().all(|v| self.adj[v] & set.bits() == 0)
    }

    /// Maximal independent sets, via Bron-Kerbosch with pivoting on the
    /// complement graph.
    pub fn maximal_independent_sets(&self) -> Vec<Face> {
        let n = self.n;
        if n == 0 {
            return vec![Face::EMPTY];
        }
        let universe: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let comp: Vec<u64> = (0..n)
            .map(|v| universe & !self.adj[v] & !(1u64 << v))
            .collect();
        let mut out = Vec::new();
        bron_kerbosch(&comp, 0, universe, 0, &mut out);
        out.sort();
        out
    }

    /// Maximum-cardinality search: returns a perfect elimination ordering if
    /// the graph is chordal, `None` otherwise. (Independent check used to
    /// re-verify generator output.)
    pub fn mcs_perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut order_rev = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by_key(|&v| weight[v])
                .unwrap();
            visited[v] = true;
            order_rev.push(v);
            for u in Face::from_bits(self.adj[v]).members() {
                if !visited[u] {
                    weight[u] += 1;
                }
            }
        }
        // elimination order = reverse of the MCS visit order
        order_rev.reverse();
        let order = order_rev;
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // v's neighbors later in the order must form a clique
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<usize> = Face::from_bits(self.adj[v])
                .members()
                .filter(|&u| pos[u] > i)
                .collect();
            for (j, &a) in later.iter().enumerate() {
                for &b in &later[j + 1..] {
                    if !self.has_edge(a, b) {
                        return None;
                    }
                }
            }
        }
        Some(order)
    }
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<Face>) {
    if p == 0 && x == 0 {
        out.push(Face::from_bits(r));
        return;
    }
    // pivot: vertex of p ∪ x with most neighbors in p
    let pivot = {
        let mut best = usize::MAX;
        let mut best_cnt = usize::MAX;
        let mut cand = p | x;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let cnt = (p & !adj[v]).count_ones() as usize;
            if cnt < best_cnt {
                best_cnt = cnt;
                best = v;
            }
        }
        best
    };
    let mut ext = p & !adj[pivot];
    while ext != 0 {
        let v = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::new(3, vec![(1, 1)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
    }

    #[test]
    fn maximal_independent_sets_path() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let mis = g.maximal_independent_sets();
        let want: Vec<Face> = vec![
            Face::from_members([0, 2]),
            Face::from_members([0, 3]),
            Face::from_members([1, 3]),
        ];
        assert_eq!(mis, want);
    }

    #[test]
    fn mcs_accepts_chordal_rejects_cycle() {
        // a triangle with a pendant is chordal
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(g.mcs_perfect_elimination_order().is_some());
        // the 4-cycle is not
        let c4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(c4.mcs_perfect_elimination_order().is_none());
    }
}
