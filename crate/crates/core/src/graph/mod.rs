//! Directed graphs, the exact path-counting oracle and graph utilities.

mod classify;
mod generators;
mod layered;
mod oracle;
mod walk;

pub use classify::{classify, UnambiguityReport, Witness};
pub use generators::{disjoint_union, gen_chain_figure1, gen_diamond_chain, gen_random_dag};
pub use layered::{layer_graph, layered_node};
pub use oracle::{count_paths_oracle, GraphCertificate, PathCount, PathCountMatrix};
pub use walk::random_walk_hit_probability;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A simple directed graph on nodes `0..n`. Edges are a set of ordered
/// pairs; self-loops are allowed, parallel edges are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    /// An edgeless graph on `n` nodes.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Self {
            n,
            edges: BTreeSet::new(),
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::EdgeOutOfRange { u, v, n: self.n });
        }
        self.edges.insert((u, v));
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Out-neighbour lists, each sorted ascending.
    pub fn out_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }

    pub fn in_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[v].push(u);
        }
        adj
    }

    /// Kahn topological sort; `None` when the graph has a cycle. Ties are
    /// broken by smallest node id so the order is canonical.
    pub fn topological_sort(&self) -> Option<Vec<usize>> {
        let adj = self.out_adjacency();
        let mut indegree = vec![0usize; self.n];
        for &(_, v) in &self.edges {
            indegree[v] += 1;
        }
        let mut frontier: BTreeSet<usize> = (0..self.n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(&u) = frontier.iter().next() {
            frontier.remove(&u);
            order.push(u);
            for &v in &adj[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    frontier.insert(v);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_sort().is_some()
    }

    /// Nodes reachable from `start` (including `start` itself).
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        assert!(start < self.n, "node out of range");
        let adj = self.out_adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Marks every node that lies on some cycle (a self-loop counts).
    /// Computed from Tarjan's strongly connected components.
    pub fn cyclic_nodes(&self) -> Vec<bool> {
        let mut on_cycle = vec![false; self.n];
        for component in self.strongly_connected_components() {
            if component.len() >= 2 {
                for v in component {
                    on_cycle[v] = true;
                }
            } else if self.has_edge(component[0], component[0]) {
                on_cycle[component[0]] = true;
            }
        }
        on_cycle
    }

    /// Tarjan's SCC algorithm, iterative to survive deep graphs.
    /// Components come out in a deterministic order.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.out_adjacency();
        let n = self.n;
        let mut index = vec![usize::MAX; n];
        let mut lowlink = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut next_index = 0usize;
        let mut components: Vec<Vec<usize>> = Vec::new();

        // explicit DFS frames: (node, next child position)
        let mut frames: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            frames.push((root, 0));
            index[root] = next_index;
            lowlink[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (u, ref mut child)) = frames.last_mut() {
                if *child < adj[u].len() {
                    let v = adj[u][*child];
                    *child += 1;
                    if index[v] == usize::MAX {
                        index[v] = next_index;
                        lowlink[v] = next_index;
                        next_index += 1;
                        stack.push(v);
                        on_stack[v] = true;
                        frames.push((v, 0));
                    } else if on_stack[v] {
                        lowlink[u] = lowlink[u].min(index[v]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(parent, _)) = frames.last() {
                        lowlink[parent] = lowlink[parent].min(lowlink[u]);
                    }
                    if lowlink[u] == index[u] {
                        let mut component = Vec::new();
                        loop {
                            let v = stack.pop().expect("tarjan stack underflow");
                            on_stack[v] = false;
                            component.push(v);
                            if v == u {
                                break;
                            }
                        }
                        component.sort_unstable();
                        components.push(component);
                    }
                }
            }
        }
        components
    }

    /// Parses the edge-list interchange format: first non-comment line is
    /// `n m`, followed by `m` lines `u v` with 0-based ids. Blank lines and
    /// lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut graph: Option<DirectedGraph> = None;
        let mut edges_seen = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let a = fields.next();
            let b = fields.next();
            let extra = fields.next();
            let (a, b) = match (a, b, extra) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected two integers, got {line:?}"),
                    })
                }
            };
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid integer {s:?}"),
                })
            };
            let (x, y) = (parse(a)?, parse(b)?);
            match header {
                None => {
                    header = Some((x, y));
                    graph = Some(DirectedGraph::new(x).map_err(|_| Error::Parse {
                        line: lineno + 1,
                        msg: "node count must be positive".into(),
                    })?);
                }
                Some((_, m)) => {
                    if edges_seen == m {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("more than the declared {m} edges"),
                        });
                    }
                    graph
                        .as_mut()
                        .expect("graph present after header")
                        .insert_edge(x, y)
                        .map_err(|e| Error::Parse {
                            line: lineno + 1,
                            msg: e.to_string(),
                        })?;
                    edges_seen += 1;
                }
            }
        }
        let (_, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing header line".into(),
        })?;
        if edges_seen != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("declared {m} edges but found {edges_seen}"),
            });
        }
        Ok(graph.expect("graph present"))
    }

    /// Writes the edge-list interchange format, edges in ascending order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}
