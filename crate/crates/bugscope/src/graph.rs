//! Undirected simple graphs on vertex set `0..n`, plus the structural queries
//! the rest of the crate builds on: complement, components, diameter,
//! spanning double stars and inflation.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) out of range for {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("inflation factor must be at least 1")]
    ZeroInflation,
}

/// An immutable undirected simple graph. Neighbor lists are sorted, so all
/// derived orderings (edges, components, witnesses) are deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse (set
    /// semantics); self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange(u, v, n));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// The graph on the same vertices whose edges are exactly the non-edges.
    pub fn complement(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            let mut nbrs = Vec::with_capacity(self.n - 1 - self.adj[u].len());
            let mut it = self.adj[u].iter().copied().peekable();
            for v in 0..self.n {
                if v == u {
                    continue;
                }
                if it.peek() == Some(&v) {
                    it.next();
                } else {
                    nbrs.push(v);
                }
            }
            adj[u] = nbrs;
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertex blocks are concatenated in argument order.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let n: usize = parts.iter().map(|g| g.n).sum();
        let mut adj = Vec::with_capacity(n);
        for g in parts {
            let offset = adj.len();
            for list in &g.adj {
                adj.push(list.iter().map(|&v| v + offset).collect());
            }
        }
        Graph { n, adj }
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Maximum pairwise distance, or [`Diameter::Infinite`] when disconnected.
    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Finite(0);
        }
        let mut max = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => max = max.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(max)
    }

    /// Looks for an edge `{a, b}` with `N[a] ∪ N[b] = V`, i.e. a spanning
    /// double star rooted at that edge. Returns the first witness in
    /// ascending edge order.
    pub fn spanning_double_star(&self) -> Option<(usize, usize)> {
        let mut covered = vec![false; self.n];
        for (a, b) in self.edges() {
            covered.iter_mut().for_each(|c| *c = false);
            covered[a] = true;
            covered[b] = true;
            for &w in &self.adj[a] {
                covered[w] = true;
            }
            for &w in &self.adj[b] {
                covered[w] = true;
            }
            if covered.iter().all(|&c| c) {
                return Some((a, b));
            }
        }
        None
    }

    pub fn has_spanning_double_star(&self) -> bool {
        self.spanning_double_star().is_some()
    }

    /// k-fold inflation: each vertex becomes a k-clique, each edge a complete
    /// join between the two cliques. Vertex `x` maps to the block
    /// `x*k .. (x+1)*k`.
    pub fn inflate(&self, k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroInflation);
        }
        let n = self.n * k;
        let mut adj = vec![Vec::new(); n];
        for x in 0..self.n {
            for i in 0..k {
                let xi = x * k + i;
                for j in 0..k {
                    if i != j {
                        adj[xi].push(x * k + j);
                    }
                }
                for &y in &self.adj[x] {
                    for j in 0..k {
                        adj[xi].push(y * k + j);
                    }
                }
                adj[xi].sort_unstable();
            }
        }
        Ok(Graph { n, adj })
    }

    /// Partition into connected components with per-component counts and
    /// star detection.
    pub fn components(&self) -> ComponentInventory {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut vertices = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        vertices.push(w);
                        queue.push_back(w);
                    }
                }
            }
            vertices.sort_unstable();
            let edge_count = vertices.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
            let max_degree = vertices.iter().map(|&v| self.degree(v)).max().unwrap_or(0);
            components.push(Component::new(vertices, edge_count, max_degree));
        }
        ComponentInventory { components }
    }

    /// The subgraph induced by `vertices`, relabeled to `0..vertices.len()`
    /// in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Graph { n: vertices.len(), adj }
    }

    /// True iff the graph is connected and isomorphic to `K_{1,ℓ}` for some
    /// `ℓ ≥ 0`; returns that `ℓ`. `K_1` counts as `K_{1,0}`, `K_2` as `K_{1,1}`.
    pub fn star_parameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        star_from_counts(self.n, self.edge_count(), self.max_degree())
    }
}

/// Graph diameter with a distinguished value for disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn is_at_most(self, bound: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= bound)
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

fn star_from_counts(vertices: usize, edges: usize, max_degree: usize) -> Option<usize> {
    // K_{1,ℓ}: ℓ+1 vertices, ℓ edges, maximum degree ℓ.
    (vertices >= 1 && edges + 1 == vertices && max_degree + 1 == vertices).then_some(edges)
}

/// One connected component: its (sorted) vertex set and summary counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    pub max_degree: usize,
    /// `Some(ℓ)` iff the component is a star `K_{1,ℓ}`.
    pub star: Option<usize>,
}

impl Component {
    fn new(vertices: Vec<usize>, edge_count: usize, max_degree: usize) -> Self {
        let star = star_from_counts(vertices.len(), edge_count, max_degree);
        Component { vertices, edge_count, max_degree, star }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// All connected components, ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInventory {
    pub components: Vec<Component>,
}

impl ComponentInventory {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `Some(ℓ)` iff every component is a star `K_{1,ℓ}` with one common `ℓ`.
    pub fn uniform_star_size(&self) -> Option<usize> {
        let mut sizes = self.components.iter().map(|c| c.star);
        let first = sizes.next()??;
        sizes.all(|s| s == Some(first)).then_some(first)
    }
}

// Named constructions used throughout the crate and its tests.

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// `K_{1,ℓ}` with the center at vertex 0.
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).unwrap()
}

/// Complete multipartite graph; `parts` are the class sizes, classes laid out
/// consecutively from vertex 0.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut class = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        class.extend(std::iter::repeat_n(i, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn petersen_graph() -> Graph {
    Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::EdgeOutOfRange(0, 3, 3)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = complete_graph(4).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn complement_of_path4() {
        // a-b-c-d loses its three edges and gains {a,c},{a,d},{b,d}.
        let g = path_graph(4).complement();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn complement_of_two_k2_is_c4() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap().complement();
        // Missing pairs by hand: {0,2},{0,3},{1,2},{1,3}, the 4-cycle 0-2-1-3-0.
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(g.is_connected());
        assert!(g.adj.iter().all(|l| l.len() == 2));
    }

    #[test]
    fn components_flag_stars() {
        let g = Graph::disjoint_union(&[cycle_graph(4), star_graph(3)]);
        let inv = g.components();
        assert_eq!(inv.len(), 2);
        assert_eq!(inv.components[0].star, None);
        assert_eq!(inv.components[1].star, Some(3));
        assert_eq!(inv.uniform_star_size(), None);

        assert_eq!(petersen_graph().components().len(), 1);

        let empty = Graph::empty(5);
        let inv = empty.components();
        assert_eq!(inv.len(), 5);
        assert!(inv.components.iter().all(|c| c.star == Some(0)));
        assert_eq!(inv.uniform_star_size(), Some(0));
    }

    #[test]
    fn star_sizes_include_k1_and_k2() {
        assert_eq!(Graph::empty(1).star_parameter(), Some(0));
        assert_eq!(complete_graph(2).star_parameter(), Some(1));
        assert_eq!(star_graph(4).star_parameter(), Some(4));
        assert_eq!(path_graph(4).star_parameter(), None);
        assert_eq!(cycle_graph(3).star_parameter(), None);
    }

    #[test]
    fn diameter_values() {
        assert_eq!(complete_graph(5).diameter(), Diameter::Finite(1));
        assert_eq!(path_graph(4).diameter(), Diameter::Finite(3));
        assert_eq!(Graph::new(4, &[(0, 1)]).unwrap().diameter(), Diameter::Infinite);
        assert_eq!(Graph::empty(0).diameter(), Diameter::Finite(0));
        assert!(Diameter::Finite(2).is_at_most(2));
        assert!(!Diameter::Infinite.is_at_most(usize::MAX));
    }

    #[test]
    fn double_star_in_complement_of_p4() {
        let g = path_graph(4).complement();
        // The path endpoints must be the centers.
        assert_eq!(g.spanning_double_star(), Some((0, 3)));
    }

    #[test]
    fn no_double_star_in_c5_or_edgeless() {
        assert_eq!(cycle_graph(5).spanning_double_star(), None);
        assert_eq!(Graph::empty(4).spanning_double_star(), None);
    }

    #[test]
    fn inflate_identity_and_k4() {
        let g = petersen_graph();
        assert_eq!(g.inflate(1).unwrap(), g);

        let k4 = complete_graph(2).inflate(2).unwrap();
        assert_eq!(k4, complete_graph(4));

        assert_eq!(Graph::empty(2).inflate(0), Err(GraphError::ZeroInflation));
    }

    #[test]
    fn inflate_sizes_for_long_cycle() {
        let h = cycle_graph(721).inflate(27).unwrap();
        assert_eq!(h.vertex_count(), 19_467);
        assert_eq!(h.edge_count(), 721 * 351 + 721 * 729);
        assert_eq!(h.edge_count(), 778_680);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = path_graph(5);
        let sub = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn disconnected_complement_forces_small_diameter() {
        for n in 2..=6 {
            for g in crate::enumerate::connected_graphs(n).unwrap() {
                if !g.complement().is_connected() {
                    assert!(g.diameter().is_at_most(2), "graph {g:?}");
                }
            }
        }
    }
}
