//! Device coupling graphs and shortest-path tables.
//!
//! Couplings are undirected. Distances come from breadth-first search; the
//! next-hop table always picks the smallest-index neighbour that lies on a
//! shortest path, so routes are reproducible.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::significant_lines;

const IBM_Q20_TOKYO: &str = include_str!("../data/ibm_q20_tokyo.arch");

/// Names accepted by [`builtin_architecture`] (plus `line-<n>` and `grid-<r>x<c>`).
pub const BUILTIN_NAMES: &[&str] = &["9q-square", "16q-square", "ibm-q20-tokyo"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchitectureGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    name: Option<String>,
}

impl ArchitectureGraph {
    /// Validates and builds a graph on `n` vertices. Edges are unordered.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("architecture needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, size: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !set.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { n, edges: set, adjacency, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    pub fn line(n: usize) -> Result<Self> {
        Ok(Self::new(n, (1..n).map(|v| (v - 1, v)))?.with_name(format!("line-{n}")))
    }

    /// `rows × cols` lattice numbered row-major.
    pub fn grid(rows: usize, cols: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Ok(Self::new(rows * cols, edges)?.with_name(format!("grid-{rows}x{cols}")))
    }
}

/// `qubits <n>` then one `edge <u> <v>` per line, 1-based.
impl fmt::Display for ArchitectureGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n)?;
        for &(u, v) in &self.edges {
            writeln!(f, "edge {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for ArchitectureGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_architecture(text)
    }
}

/// Parses the architecture text format. Connectivity is not required here.
pub fn parse_architecture(text: &str) -> Result<ArchitectureGraph> {
    let mut lines = significant_lines(text);
    let (lineno, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["qubits", n] => n
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::parse(lineno, format!("bad qubit count `{n}`")))?,
        _ => return Err(Error::parse(lineno, "expected `qubits <n>`")),
    };
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["edge", u, v] => {
                let vertex = |t: &str| -> Result<usize> {
                    let value = t.parse::<usize>().map_err(|_| Error::parse(lineno, format!("bad vertex `{t}`")))?;
                    if value == 0 || value > n {
                        return Err(Error::IndexOutOfRange { index: value, size: n });
                    }
                    Ok(value - 1)
                };
                edges.push((vertex(u)?, vertex(v)?));
            }
            _ => return Err(Error::parse(lineno, format!("unrecognised line `{line}`"))),
        }
    }
    // Report duplicates and self-loops 1-based, the way the user wrote them.
    ArchitectureGraph::new(n, edges).map_err(|e| match e {
        Error::DuplicateEdge(u, v) => Error::DuplicateEdge(u + 1, v + 1),
        Error::SelfLoop(u) => Error::SelfLoop(u + 1),
        other => other,
    })
}

/// Looks up a named device graph.
pub fn builtin_architecture(name: &str) -> Result<ArchitectureGraph> {
    let unknown = || Error::UnknownArchitecture(name.to_string());
    match name {
        "9q-square" => Ok(ArchitectureGraph::grid(3, 3)?.with_name(name)),
        "16q-square" => Ok(ArchitectureGraph::grid(4, 4)?.with_name(name)),
        "ibm-q20-tokyo" => Ok(parse_architecture(IBM_Q20_TOKYO)?.with_name(name)),
        _ => {
            if let Some(n) = name.strip_prefix("line-") {
                let n: usize = n.parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                return ArchitectureGraph::line(n);
            }
            if let Some(dims) = name.strip_prefix("grid-") {
                let (r, c) = dims.split_once('x').ok_or_else(unknown)?;
                let r: usize = r.parse().map_err(|_| unknown())?;
                let c: usize = c.parse().map_err(|_| unknown())?;
                if r == 0 || c == 0 {
                    return Err(unknown());
                }
                return ArchitectureGraph::grid(r, c);
            }
            Err(unknown())
        }
    }
}

/// All-pairs hop distances with a deterministic next-hop table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
    next_hop: Vec<u32>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// First vertex after `u` on the canonical shortest path to `v`
    /// (`u` itself when `u == v`).
    #[inline]
    pub fn next_hop(&self, u: usize, v: usize) -> usize {
        self.next_hop[u * self.n + v] as usize
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.dist(u, v) == 1
    }

    pub fn max_distance(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// The canonical shortest path from `u` to `v`, endpoints included.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        for index in [u, v] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, size: self.n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let mut path = Vec::with_capacity(self.dist(u, v) + 1);
        path.push(u);
        let mut cur = u;
        while cur != v {
            cur = self.next_hop(cur, v);
            path.push(cur);
        }
        Ok(path)
    }
}

pub fn all_pairs_distances(g: &ArchitectureGraph) -> Result<DistanceTable> {
    let n = g.n();
    let mut dist = vec![0u32; n * n];
    for s in 0..n {
        for (v, d) in g.bfs(s).into_iter().enumerate() {
            dist[s * n + v] = d.ok_or(Error::DisconnectedGraph)?;
        }
    }
    let mut next_hop = vec![0u32; n * n];
    for u in 0..n {
        for v in 0..n {
            next_hop[u * n + v] = if u == v {
                u as u32
            } else {
                let want = dist[u * n + v] - 1;
                // neighbours are sorted, so the first hit is the smallest index
                *g.neighbors(u).iter().find(|&&w| dist[w * n + v] == want).expect("BFS layer has a predecessor") as u32
            };
        }
    }
    Ok(DistanceTable { n, dist, next_hop })
}

pub fn shortest_path(t: &DistanceTable, u: usize, v: usize) -> Result<Vec<usize>> {
    t.shortest_path(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_graph() -> ArchitectureGraph {
        parse_architecture("qubits 5\nedge 1 2\nedge 2 3\nedge 3 4\nedge 3 5").unwrap()
    }

    fn manhattan(x: usize, y: usize, cols: usize) -> usize {
        (x % cols).abs_diff(y % cols) + (x / cols).abs_diff(y / cols)
    }

    #[test]
    fn square_builtins_have_grid_edge_counts() {
        let g9 = builtin_architecture("9q-square").unwrap();
        assert_eq!((g9.n(), g9.num_edges()), (9, 12));
        let g16 = builtin_architecture("16q-square").unwrap();
        assert_eq!((g16.n(), g16.num_edges()), (16, 24));
        // vertex 1 touches 2 and 5 (1-based)
        assert_eq!(g16.neighbors(0), &[1, 4]);
        let g32 = builtin_architecture("grid-4x8").unwrap();
        assert_eq!((g32.n(), g32.num_edges()), (32, 4 * 7 + 3 * 8));
    }

    #[test]
    fn tokyo_loads_shipped_map() {
        let g = builtin_architecture("ibm-q20-tokyo").unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(g.num_edges(), 43);
        assert!(g.is_connected());
        assert_eq!(g.name(), Some("ibm-q20-tokyo"));
    }

    #[test]
    fn line_and_unknown_names() {
        let g = builtin_architecture("line-11").unwrap();
        assert_eq!((g.n(), g.num_edges()), (11, 10));
        for bad in ["17q-hex", "line-", "line-0", "grid-3", "grid-0x2", "grid-axb"] {
            assert!(matches!(builtin_architecture(bad), Err(Error::UnknownArchitecture(_))), "{bad}");
        }
    }

    #[test]
    fn parse_examples() {
        let g = parse_architecture("qubits 2\nedge 1 2").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
        assert_eq!(parse_architecture("qubits 3\nedge 1 2\nedge 1 2"), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(parse_architecture("qubits 3\nedge 2 1\nedge 1 2"), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(parse_architecture("qubits 3\nedge 2 2"), Err(Error::SelfLoop(2)));
        assert_eq!(parse_architecture("qubits 3\nedge 1 4"), Err(Error::IndexOutOfRange { index: 4, size: 3 }));
        assert!(matches!(parse_architecture("edge 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_architecture("qubits 3\nlink 1 2"), Err(Error::Parse { .. })));
        // connectivity is a compile-time concern
        assert!(!parse_architecture("qubits 4\nedge 1 2").unwrap().is_connected());
    }

    #[test]
    fn t_graph_shape() {
        let g = t_graph();
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.neighbors(2), &[1, 3, 4]);
        let text = g.to_string();
        assert_eq!(text.parse::<ArchitectureGraph>().unwrap(), g);
    }

    #[test]
    fn distances_on_fixtures() {
        let t = all_pairs_distances(&builtin_architecture("16q-square").unwrap()).unwrap();
        assert_eq!(t.dist(0, 15), 6);
        let tt = all_pairs_distances(&t_graph()).unwrap();
        assert_eq!(tt.dist(0, 3), 3);
        for v in 0..5 {
            assert_eq!(tt.dist(v, v), 0);
        }
    }

    #[test]
    fn disconnected_graph_rejected() {
        let g = parse_architecture("qubits 3\nedge 1 2").unwrap();
        assert_eq!(all_pairs_distances(&g), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn shortest_path_examples() {
        let tt = all_pairs_distances(&t_graph()).unwrap();
        assert_eq!(shortest_path(&tt, 0, 3).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(shortest_path(&tt, 0, 1).unwrap(), vec![0, 1]);
        assert_eq!(shortest_path(&tt, 2, 2), Err(Error::SameVertex(2)));
        let sq = all_pairs_distances(&builtin_architecture("16q-square").unwrap()).unwrap();
        assert_eq!(shortest_path(&sq, 0, 5).unwrap(), vec![0, 1, 5]);
    }

    #[test]
    fn grid_distance_matches_manhattan_everywhere() {
        for (name, cols) in [("9q-square", 3), ("16q-square", 4), ("grid-4x8", 8), ("grid-3x5", 5)] {
            let t = all_pairs_distances(&builtin_architecture(name).unwrap()).unwrap();
            for x in 0..t.n() {
                for y in 0..t.n() {
                    assert_eq!(t.dist(x, y), manhattan(x, y, cols), "{name} {x} {y}");
                }
            }
        }
    }

    #[test]
    fn metric_and_path_properties_on_builtins() {
        for name in ["9q-square", "16q-square", "ibm-q20-tokyo", "grid-4x8", "line-7"] {
            let g = builtin_architecture(name).unwrap();
            let t = all_pairs_distances(&g).unwrap();
            let n = t.n();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(t.dist(u, v), t.dist(v, u));
                    assert_eq!(t.dist(u, v) == 1, g.has_edge(u, v));
                    for w in 0..n {
                        assert!(t.dist(u, w) <= t.dist(u, v) + t.dist(v, w));
                    }
                    if u != v {
                        let path = t.shortest_path(u, v).unwrap();
                        assert_eq!(path.len(), t.dist(u, v) + 1);
                        assert!(path.windows(2).all(|p| g.has_edge(p[0], p[1])));
                    }
                }
            }
            assert_eq!(all_pairs_distances(&g).unwrap(), t);
        }
    }
}
