//! Undirected simple graphs, cliques, and exhaustive clique search.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut adj = vec![vec![false; n]; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { v: u });
            }
            if adj[u][v] {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u][v] = true;
            adj[v][u] = true;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph { n, adj, edges: list })
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("random graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u][v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adj[v][u]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// All `k`-cliques, each sorted, in lexicographic order. Empty when `k == 0` or `k > n`.
    pub fn k_cliques(&self, k: usize) -> Vec<Clique> {
        let mut out = Vec::new();
        if k == 0 || k > self.n {
            return out;
        }
        let mut cur = Vec::with_capacity(k);
        self.extend_cliques(k, 0, &mut cur, &mut out);
        out
    }

    fn extend_cliques(&self, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Clique>) {
        if cur.len() == k {
            out.push(Clique { vertices: cur.clone() });
            return;
        }
        for v in from..self.n {
            if cur.iter().all(|&u| self.adj[u][v]) {
                cur.push(v);
                self.extend_cliques(k, v + 1, cur, out);
                cur.pop();
            }
        }
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header \"n m\"".into(),
        })?;
        let (n, m) = two_numbers(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            edges.push(two_numbers(line, text)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("expected a non-negative integer, found {s:?}"),
        })
    };
    match parts.as_slice() {
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(Error::Parse {
            line,
            message: format!("expected two integers, found {text:?}"),
        }),
    }
}

impl fmt::Display for Graph {
    /// Writes the edge-list format accepted by [`Graph::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// A set of pairwise adjacent vertices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    /// Validates that `vertices` are distinct and pairwise adjacent in `g`.
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<Clique> {
        vertices.sort_unstable();
        for &v in &vertices {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { v, n: g.n() });
            }
        }
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::NotAClique { u, v });
                }
            }
        }
        Ok(Clique { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True when the union of both vertex sets is a clique with `|self| + |other|` vertices.
    pub fn joins_to_clique(&self, other: &Clique, g: &Graph) -> bool {
        self.vertices
            .iter()
            .all(|&u| other.vertices.iter().all(|&v| g.has_edge(u, v)))
    }
}

/// Exhaustive test for a clique on `3k` vertices: tries every `3k`-subset.
pub fn has_3k_clique_bruteforce(g: &Graph, k: usize) -> bool {
    let size = 3 * k;
    if size > g.n() {
        return false;
    }
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        if g.is_clique(&subset) {
            return true;
        }
        // next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if subset[i] < g.n() - size + i {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..size {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sets(cs: &[Clique]) -> Vec<Vec<usize>> {
        cs.iter().map(|c| c.vertices().to_vec()).collect()
    }

    #[test]
    fn triangle_pairs() {
        let g = Graph::complete(3);
        assert_eq!(sets(&g.k_cliques(2)), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(sets(&g.k_cliques(1)), vec![vec![0], vec![1], vec![2]]);
        assert!(g.k_cliques(4).is_empty());
    }

    #[test]
    fn path_has_no_triangle() {
        assert!(Graph::path(3).k_cliques(3).is_empty());
    }

    #[test]
    fn triples_match_bruteforce() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = Graph::random(8, 0.5, &mut rng);
            let mut expected = Vec::new();
            for a in 0..8 {
                for b in a + 1..8 {
                    for c in b + 1..8 {
                        if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                            expected.push(vec![a, b, c]);
                        }
                    }
                }
            }
            assert_eq!(sets(&g.k_cliques(3)), expected);
        }
    }

    #[test]
    fn three_k_cliques() {
        assert!(has_3k_clique_bruteforce(&Graph::complete(6), 2));
        assert!(!has_3k_clique_bruteforce(&Graph::cycle(5), 1));
        assert!(has_3k_clique_bruteforce(&Graph::complete(3), 1));
        assert!(!has_3k_clique_bruteforce(&Graph::complete(5), 2));
    }

    #[test]
    fn bruteforce_agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let g = Graph::random(9, 0.6, &mut rng);
            for k in 1..=3 {
                assert_eq!(has_3k_clique_bruteforce(&g, k), !g.k_cliques(3 * k).is_empty());
            }
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop { v: 1 }));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge { u: 1, v: 0 }));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { v: 3, n: 3 }));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::new(4, [(2, 3), (0, 1), (1, 3)]).unwrap();
        let text = g.to_string();
        assert_eq!(text, "4 3\n0 1\n1 3\n2 3\n");
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert!(matches!(Graph::parse("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn clique_validation() {
        let g = Graph::path(3);
        assert!(Clique::new(&g, vec![1, 0]).is_ok());
        assert_eq!(Clique::new(&g, vec![0, 2]), Err(Error::NotAClique { u: 0, v: 2 }));
    }
}
