//! Explicit spiro and polyphenyl chain graphs.
//!
//! Ring positions of every hexagon are numbered `0..6` in cyclic order. The
//! entry vertex of hexagon `k >= 1` (the shared cut-vertex `c_k` for spiro
//! chains, the attach vertex `c_k` for polyphenyl chains) sits at position 0
//! and the exit vertex at position 1, 2 or 3 for O, M, P. Hexagon 0 exits
//! through position 0.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::CodeWord;

/// A simple undirected graph stored as adjacency lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
            edges: 0,
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    /// Adds the edge `{u, v}`. Loops and parallel edges are ignored.
    ///
    /// Panics if either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.adjacency[u].contains(&v) {
            return;
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edges += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|a| a.contains(&v))
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Contracts the given edges simultaneously and relabels the surviving
    /// vertices to `0..k` in order of their smallest original id.
    ///
    /// Returns the contracted graph and the map from old to new vertex ids.
    pub fn contract(&self, edges: &[(usize, usize)]) -> (Graph, Vec<usize>) {
        // union-find over the contracted edges
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                let (lo, hi) = (ru.min(rv), ru.max(rv));
                parent[hi] = lo;
            }
        }

        let mut relabel = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for v in 0..self.vertex_count() {
            let r = find(&mut parent, v);
            if relabel[r] == usize::MAX {
                relabel[r] = next;
                next += 1;
            }
            relabel[v] = relabel[r];
        }

        let mut out = Graph::new(next);
        for (u, v) in self.edges() {
            out.add_edge(relabel[u], relabel[v]);
        }
        (out, relabel)
    }

    /// Shortest-path distance, `None` if `to` is unreachable.
    pub fn distance(&self, from: usize, to: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::from([from]);
        dist[from] = 0;
        while let Some(u) = queue.pop_front() {
            if u == to {
                return Some(dist[u]);
            }
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Undirected edge set keyed as `(min, max)`.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Spiro,
    Polyphenyl,
}

impl ChainKind {
    pub const ALL: [ChainKind; 2] = [ChainKind::Spiro, ChainKind::Polyphenyl];

    pub fn as_str(self) -> &'static str {
        match self {
            ChainKind::Spiro => "spiro",
            ChainKind::Polyphenyl => "polyphenyl",
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ChainKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "spiro" => Ok(ChainKind::Spiro),
            "polyphenyl" | "poly" => Ok(ChainKind::Polyphenyl),
            other => Err(format!("unknown chain kind {other:?}")),
        }
    }
}

/// A materialized chain together with its distinguished vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGraph {
    pub kind: ChainKind,
    pub n: usize,
    pub graph: Graph,
    /// Spiro: `c_1, ..., c_{n-1}`, the vertex shared by hexagons `k-1` and `k`.
    /// Polyphenyl: `c_1, ..., c_{n-1}`, the attach vertex of hexagon `k`.
    pub cut_vertices: Vec<usize>,
    /// Polyphenyl only: cut edge `k` as `(t_k, c_k)` with `t_k` in hexagon `k-1`.
    pub attach_pairs: Vec<(usize, usize)>,
    /// Ring vertices of each hexagon, indexed by ring position.
    pub hexagons: Vec<[usize; 6]>,
}

impl ChainGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Entry vertex of hexagon `k >= 1`.
    pub fn entry(&self, k: usize) -> usize {
        self.hexagons[k][0]
    }

    /// Exit vertex of hexagon `k <= n - 2`: `c_{k+1}` for spiro chains,
    /// `t_{k+1}` for polyphenyl chains.
    pub fn exit(&self, k: usize) -> usize {
        match self.kind {
            ChainKind::Spiro => self.cut_vertices[k],
            ChainKind::Polyphenyl => self.attach_pairs[k].0,
        }
    }
}

fn ring_position(code: &CodeWord, hexagon: usize) -> usize {
    // hexagon 0 exits through position 0; hexagon k >= 1 uses letter k-1
    if hexagon == 0 {
        0
    } else {
        code.letters()[hexagon - 1].ring_distance()
    }
}

fn close_ring(graph: &mut Graph, ring: &[usize; 6]) {
    for i in 0..6 {
        graph.add_edge(ring[i], ring[(i + 1) % 6]);
    }
}

/// Builds the spiro hexagonal chain named by `code`.
pub fn build_spiro(code: &CodeWord) -> ChainGraph {
    let n = code.n();
    let mut graph = Graph::new(5 * n + 1);
    let mut hexagons = Vec::with_capacity(n);
    let mut cut_vertices = Vec::with_capacity(n.saturating_sub(1));

    let first = [0, 1, 2, 3, 4, 5];
    close_ring(&mut graph, &first);
    hexagons.push(first);
    let mut next = 6;

    for k in 1..n {
        let prev = hexagons[k - 1];
        let entry = prev[ring_position(code, k - 1)];
        cut_vertices.push(entry);
        let mut ring = [entry; 6];
        for slot in ring.iter_mut().skip(1) {
            *slot = next;
            next += 1;
        }
        close_ring(&mut graph, &ring);
        hexagons.push(ring);
    }

    ChainGraph {
        kind: ChainKind::Spiro,
        n,
        graph,
        cut_vertices,
        attach_pairs: Vec::new(),
        hexagons,
    }
}

/// Builds the polyphenyl hexagonal chain named by `code`.
pub fn build_polyphenyl(code: &CodeWord) -> ChainGraph {
    let n = code.n();
    let mut graph = Graph::new(6 * n);
    let mut hexagons: Vec<[usize; 6]> = Vec::with_capacity(n);
    let mut cut_vertices = Vec::with_capacity(n.saturating_sub(1));
    let mut attach_pairs = Vec::with_capacity(n.saturating_sub(1));

    for k in 0..n {
        let base = 6 * k;
        let ring = [base, base + 1, base + 2, base + 3, base + 4, base + 5];
        close_ring(&mut graph, &ring);
        if k > 0 {
            let tail = hexagons[k - 1][ring_position(code, k - 1)];
            graph.add_edge(tail, ring[0]);
            cut_vertices.push(ring[0]);
            attach_pairs.push((tail, ring[0]));
        }
        hexagons.push(ring);
    }

    ChainGraph {
        kind: ChainKind::Polyphenyl,
        n,
        graph,
        cut_vertices,
        attach_pairs,
        hexagons,
    }
}

pub fn build_chain(kind: ChainKind, code: &CodeWord) -> ChainGraph {
    match kind {
        ChainKind::Spiro => build_spiro(code),
        ChainKind::Polyphenyl => build_polyphenyl(code),
    }
}

/// Hexagonal squeeze of a polyphenyl chain: every cut edge is contracted.
///
/// The result is a spiro chain whose cut-vertices are the images of the
/// contracted edges. Spiro input is returned unchanged.
pub fn squeeze_graph(chain: &ChainGraph) -> ChainGraph {
    if chain.kind == ChainKind::Spiro {
        return chain.clone();
    }
    let (graph, relabel) = chain.graph.contract(&chain.attach_pairs);
    let hexagons = chain
        .hexagons
        .iter()
        .map(|ring| ring.map(|v| relabel[v]))
        .collect();
    let cut_vertices = chain.cut_vertices.iter().map(|&v| relabel[v]).collect();
    ChainGraph {
        kind: ChainKind::Spiro,
        n: chain.n,
        graph,
        cut_vertices,
        attach_pairs: Vec::new(),
        hexagons,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;

    fn code(s: &str, n: Option<usize>) -> CodeWord {
        parse_code(s, n).unwrap()
    }

    #[test]
    fn single_hexagon() {
        for kind in ChainKind::ALL {
            let g = build_chain(kind, &code("", Some(1)));
            assert_eq!(g.vertex_count(), 6);
            assert_eq!(g.edge_count(), 6);
            assert!(g.cut_vertices.is_empty());
            assert_eq!(g.graph.degree_sequence(), vec![2; 6]);
        }
    }

    #[test]
    fn spiro_two_hexagons() {
        let g = build_spiro(&code("", Some(2)));
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.cut_vertices, vec![0]);
        assert_eq!(g.graph.degree(0), 4);
        assert_eq!(
            g.graph
                .degree_sequence()
                .iter()
                .filter(|&&d| d == 4)
                .count(),
            1
        );
    }

    #[test]
    fn polyphenyl_two_hexagons_has_one_bridge() {
        let g = build_polyphenyl(&code("", Some(2)));
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 13);
        let bridges = g
            .graph
            .edges()
            .filter(|&(u, v)| {
                let mut h = Graph::new(g.vertex_count());
                for (a, b) in g.graph.edges().filter(|&e| e != (u, v)) {
                    h.add_edge(a, b);
                }
                h.distance(u, v).is_none()
            })
            .count();
        assert_eq!(bridges, 1);
    }

    #[test]
    fn meta_spiro_cut_distance() {
        let g = build_spiro(&code("M", None));
        assert_eq!(g.vertex_count(), 16);
        let (c1, c2) = (g.cut_vertices[0], g.cut_vertices[1]);
        assert_eq!(g.graph.distance(c1, c2), Some(2));
    }

    #[test]
    fn para_polyphenyl_tail_distance() {
        let g = build_polyphenyl(&code("P", None));
        let c1 = g.cut_vertices[0];
        let t2 = g.attach_pairs[1].0;
        assert_eq!(g.graph.distance(c1, t2), Some(3));
    }

    #[test]
    fn exits_follow_letters() {
        let c = code("OMPPMO", None);
        for kind in ChainKind::ALL {
            let g = build_chain(kind, &c);
            for (i, l) in c.letters().iter().enumerate() {
                let k = i + 1;
                assert_eq!(
                    g.graph.distance(g.entry(k), g.exit(k)),
                    Some(l.ring_distance()),
                    "{kind} hexagon {k}"
                );
            }
        }
    }

    #[test]
    fn squeeze_of_two_hexagon_polyphenyl() {
        let s = squeeze_graph(&build_polyphenyl(&code("", Some(2))));
        assert_eq!(s.vertex_count(), 11);
        assert_eq!(s.edge_count(), 12);
        assert_eq!(
            s.graph.degree_sequence(),
            build_spiro(&code("", Some(2))).graph.degree_sequence()
        );
    }

    #[test]
    fn contract_relabels_compactly() {
        let mut g = Graph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        let (h, map) = g.contract(&[(1, 2)]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(map, vec![0, 1, 1, 2]);
    }
}
