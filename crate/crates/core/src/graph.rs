//! Host-graph representation, structural queries, and instance I/O.
//!
//! A packing instance is a simple undirected graph together with a list of
//! pattern subgraphs (paths, cycles, or generic edge sets). All solvers in
//! this crate consume the types defined here.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Disjointness mode of a packing problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Vertex,
    Edge,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Vertex => write!(f, "vertex"),
            Mode::Edge => write!(f, "edge"),
        }
    }
}

/// Errors raised while building or parsing an instance.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("line {line}: malformed header, expected `n m`")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected {expected}")]
    Malformed { line: usize, expected: &'static str },
    #[error("edge ({u}, {v}) references a vertex >= n = {n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop ({v}, {v}) is not allowed")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("subgraph {index}: edge ({u}, {v}) is absent from the host graph")]
    EdgeAbsent { index: usize, u: usize, v: usize },
    #[error("subgraph {index}: {reason}")]
    KindViolation { index: usize, reason: String },
    #[error("unexpected end of input: {expected}")]
    UnexpectedEof { expected: &'static str },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored once, normalized as `(min, max)`, and keep their
/// insertion order; the position of an edge in [`Graph::edges`] is its
/// edge id, which the solvers use as a stable label.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    edge_ids: HashMap<(u32, u32), u32>,
}

impl Graph {
    /// Empty graph with `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            edge_ids: HashMap::new(),
        }
    }

    /// Build from an edge list, rejecting self-loops, duplicates, and
    /// out-of-range endpoints.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, InstanceError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<u32, InstanceError> {
        if u == v {
            return Err(InstanceError::SelfLoop { v });
        }
        if u >= self.n || v >= self.n {
            return Err(InstanceError::VertexOutOfRange { u, v, n: self.n });
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        if self.edge_ids.contains_key(&key) {
            return Err(InstanceError::DuplicateEdge { u, v });
        }
        let id = self.edges.len() as u32;
        self.edge_ids.insert(key, id);
        self.edges.push(key);
        self.adj[u].push(v as u32);
        self.adj[v].push(u as u32);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Edge id of `{u, v}`, or `None` if absent. Out-of-range endpoints are
    /// treated as absent rather than panicking; placeholder vertices created
    /// by tree surgery rely on this.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<u32> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edge_ids.get(&key).copied()
    }

    pub fn endpoints(&self, edge_id: u32) -> (u32, u32) {
        self.edges[edge_id as usize]
    }

    /// Maximum and minimum degree `(Δ, δ)`. Both are 0 on edgeless graphs.
    pub fn degree_stats(&self) -> (usize, usize) {
        if self.n == 0 {
            return (0, 0);
        }
        let mut max = 0;
        let mut min = usize::MAX;
        for v in 0..self.n {
            max = max.max(self.adj[v].len());
            min = min.min(self.adj[v].len());
        }
        (max, min)
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// BFS from every root; a non-tree edge `{u, w}` seen while expanding `u`
    /// closes a cycle of length `dist[u] + dist[w] + 1`. The minimum over all
    /// roots is exact because a shortest cycle is detected from any of its
    /// own vertices.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![u32::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[root] = 0;
            parent[root] = u32::MAX;
            queue.push_back(root as u32);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // any cycle detected via u has length >= 2*dist[u]
                    if 2 * dist[u as usize] >= b {
                        continue;
                    }
                }
                for &w in &self.adj[u as usize] {
                    if dist[w as usize] == usize::MAX {
                        dist[w as usize] = dist[u as usize] + 1;
                        parent[w as usize] = u;
                        queue.push_back(w);
                    } else if parent[u as usize] != w {
                        let len = dist[u as usize] + dist[w as usize] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Biconnected components as `(vertex set, edge set)` pairs.
    ///
    /// Edge sets partition `E(G)`; every bridge forms its own single-edge
    /// component. Iterative Hopcroft–Tarjan with an explicit edge stack.
    pub fn biconnected_components(&self) -> Vec<(Vec<u32>, Vec<(u32, u32)>)> {
        let n = self.n;
        let mut disc = vec![0usize; n];
        let mut low = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut timer = 1usize;
        let mut comps = Vec::new();
        let mut edge_stack: Vec<(u32, u32)> = Vec::new();

        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(u32, u32, usize)> = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            disc[start] = timer;
            low[start] = timer;
            timer += 1;
            stack.push((start as u32, u32::MAX, 0));
            while let Some(&mut (u, p, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[u as usize].len() {
                    let w = self.adj[u as usize][*idx];
                    *idx += 1;
                    if !visited[w as usize] {
                        visited[w as usize] = true;
                        disc[w as usize] = timer;
                        low[w as usize] = timer;
                        timer += 1;
                        edge_stack.push((u, w));
                        stack.push((w, u, 0));
                    } else if w != p && disc[w as usize] < disc[u as usize] {
                        edge_stack.push((u, w));
                        low[u as usize] = low[u as usize].min(disc[w as usize]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (parent, _, _)) = stack.last_mut() {
                        low[parent as usize] = low[parent as usize].min(low[u as usize]);
                        if low[u as usize] >= disc[parent as usize] {
                            // parent is an articulation point (or root); pop one component
                            let mut comp_edges = Vec::new();
                            while let Some(&(a, b)) = edge_stack.last() {
                                if disc[a as usize] >= disc[u as usize]
                                    || (a, b) == (parent, u)
                                {
                                    comp_edges.push(edge_stack.pop().unwrap());
                                    if (a, b) == (parent, u) {
                                        break;
                                    }
                                } else {
                                    break;
                                }
                            }
                            if !comp_edges.is_empty() {
                                comps.push(comp_edges);
                            }
                        }
                    }
                }
            }
            // leftover edges of the root component
            if !edge_stack.is_empty() {
                comps.push(std::mem::take(&mut edge_stack));
            }
        }

        comps
            .into_iter()
            .map(|edges| {
                let mut verts: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                verts.sort_unstable();
                verts.dedup();
                let mut es: Vec<(u32, u32)> =
                    edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                es.sort_unstable();
                es.dedup();
                (verts, es)
            })
            .collect()
    }
}

/// Kind tag of a listed subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Path,
    Cycle,
    Generic,
}

impl PatternKind {
    pub fn letter(self) -> char {
        match self {
            PatternKind::Path => 'P',
            PatternKind::Cycle => 'C',
            PatternKind::Generic => 'G',
        }
    }
}

/// One entry of the packing list: a subgraph of the host given by its edges.
///
/// Edges are the primary representation; the vertex set is derived. For
/// cycles and paths a canonical walk can be reconstructed on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSubgraph {
    edges: Vec<(u32, u32)>,
    vertices: Vec<u32>,
    kind: PatternKind,
}

impl PatternSubgraph {
    /// Validate `edges` against the host graph and the kind tag.
    pub fn new(
        host: &Graph,
        kind: PatternKind,
        edges: Vec<(usize, usize)>,
        index: usize,
    ) -> Result<Self, InstanceError> {
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for (u, v) in &edges {
            if host.edge_id(*u, *v).is_none() {
                return Err(InstanceError::EdgeAbsent {
                    index,
                    u: *u,
                    v: *v,
                });
            }
            norm.push((*u.min(v) as u32, *u.max(v) as u32));
        }
        {
            let mut sorted = norm.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != norm.len() {
                return Err(InstanceError::KindViolation {
                    index,
                    reason: "repeated edge inside one subgraph".into(),
                });
            }
        }
        let mut vertices: Vec<u32> = norm.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let sub = PatternSubgraph {
            edges: norm,
            vertices,
            kind,
        };
        sub.check_kind(index)?;
        Ok(sub)
    }

    fn check_kind(&self, index: usize) -> Result<(), InstanceError> {
        let fail = |reason: String| InstanceError::KindViolation { index, reason };
        match self.kind {
            PatternKind::Generic => {
                if self.edges.is_empty() {
                    return Err(fail("subgraph has no edges".into()));
                }
            }
            PatternKind::Cycle => {
                let l = self.edges.len();
                if l < 3 {
                    return Err(fail(format!("{l} edges cannot form a cycle")));
                }
                if self.vertices.len() != l {
                    return Err(fail(format!(
                        "cycle of {l} edges must span exactly {l} vertices"
                    )));
                }
                let mut deg: HashMap<u32, usize> = HashMap::new();
                for &(a, b) in &self.edges {
                    *deg.entry(a).or_default() += 1;
                    *deg.entry(b).or_default() += 1;
                }
                if deg.values().any(|&d| d != 2) {
                    return Err(fail("cycle requires degree 2 at every vertex".into()));
                }
                if !self.is_connected() {
                    return Err(fail("cycle must be connected".into()));
                }
            }
            PatternKind::Path => {
                let l = self.edges.len();
                if l == 0 {
                    return Err(fail("path has no edges".into()));
                }
                if self.vertices.len() != l + 1 {
                    return Err(fail(format!(
                        "path of {l} edges must span exactly {} vertices",
                        l + 1
                    )));
                }
                let mut deg: HashMap<u32, usize> = HashMap::new();
                for &(a, b) in &self.edges {
                    *deg.entry(a).or_default() += 1;
                    *deg.entry(b).or_default() += 1;
                }
                let ones = deg.values().filter(|&&d| d == 1).count();
                if ones != 2 || deg.values().any(|&d| d > 2) {
                    return Err(fail("path requires two endpoints of degree 1".into()));
                }
                if !self.is_connected() {
                    return Err(fail("path must be connected".into()));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Minimum degree within the subgraph itself.
    pub fn min_degree(&self) -> usize {
        let mut deg: HashMap<u32, usize> = HashMap::new();
        for &(a, b) in &self.edges {
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        deg.values().copied().min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let idx: HashMap<u32, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            let (i, j) = (idx[&a], idx[&b]);
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertices.len()
    }

    /// Canonical walk for cycles and paths: vertex sequence starting from the
    /// smallest eligible vertex, taking the smaller neighbor first. `None`
    /// for generic patterns.
    pub fn walk(&self) -> Option<Vec<u32>> {
        if self.kind == PatternKind::Generic {
            return None;
        }
        let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        for v in adj.values_mut() {
            v.sort_unstable();
        }
        let start = match self.kind {
            PatternKind::Path => *self
                .vertices
                .iter()
                .filter(|v| adj[v].len() == 1)
                .min()
                .unwrap(),
            _ => self.vertices[0],
        };
        let mut walk = vec![start];
        let mut prev = u32::MAX;
        let mut cur = start;
        loop {
            let next = adj[&cur].iter().copied().find(|&w| w != prev);
            let next = match next {
                Some(w) => w,
                None => break,
            };
            if self.kind == PatternKind::Cycle && next == start && walk.len() == self.edges.len() {
                break;
            }
            walk.push(next);
            prev = cur;
            cur = next;
            if walk.len() > self.edges.len() + 1 {
                break;
            }
        }
        Some(walk)
    }

    /// Edge ids of this subgraph within the host graph.
    pub fn edge_ids(&self, host: &Graph) -> Vec<u32> {
        self.edges
            .iter()
            .map(|&(a, b)| host.edge_id(a as usize, b as usize).expect("validated edge"))
            .collect()
    }
}

/// A selected subcollection of the list, with its disjointness mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingSolution {
    pub mode: Mode,
    pub indices: Vec<u32>,
}

impl PackingSolution {
    pub fn new(mode: Mode, mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        PackingSolution { mode, indices }
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

/// Parse an instance from the textual format:
/// line `n m`, then `m` lines `u v`, then a line `L`, then `L` subgraph
/// lines `K u1 v1 u2 v2 ...` with kind letter `K` in `{P, C, G}`.
pub fn parse_instance(text: &str) -> Result<(Graph, Vec<PatternSubgraph>), InstanceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or(InstanceError::UnexpectedEof { expected: "header" })?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(InstanceError::MalformedHeader { line: line_no })?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(InstanceError::MalformedHeader { line: line_no })?;
    if it.next().is_some() {
        return Err(InstanceError::MalformedHeader { line: line_no });
    }

    let mut g = Graph::new(n);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(InstanceError::UnexpectedEof {
            expected: "edge line",
        })?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(InstanceError::Malformed {
                line: line_no,
                expected: "edge `u v`",
            })?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(InstanceError::Malformed {
                line: line_no,
                expected: "edge `u v`",
            })?;
        if it.next().is_some() {
            return Err(InstanceError::Malformed {
                line: line_no,
                expected: "edge `u v`",
            });
        }
        g.add_edge(u, v)?;
    }

    let (line_no, count_line) = lines.next().ok_or(InstanceError::UnexpectedEof {
        expected: "list length line",
    })?;
    let count: usize = count_line
        .trim()
        .parse()
        .map_err(|_| InstanceError::Malformed {
            line: line_no,
            expected: "list length `L`",
        })?;

    let mut list = Vec::with_capacity(count);
    for index in 0..count {
        let (line_no, line) = lines.next().ok_or(InstanceError::UnexpectedEof {
            expected: "subgraph line",
        })?;
        let mut it = line.split_whitespace();
        let kind = match it.next() {
            Some("P") | Some("p") => PatternKind::Path,
            Some("C") | Some("c") => PatternKind::Cycle,
            Some("G") | Some("g") => PatternKind::Generic,
            _ => {
                return Err(InstanceError::Malformed {
                    line: line_no,
                    expected: "kind letter P, C, or G",
                })
            }
        };
        let ids: Result<Vec<usize>, _> = it.map(|t| t.parse::<usize>()).collect();
        let ids = ids.map_err(|_| InstanceError::Malformed {
            line: line_no,
            expected: "vertex ids",
        })?;
        if ids.len() % 2 != 0 {
            return Err(InstanceError::Malformed {
                line: line_no,
                expected: "an even-length sequence of vertex ids",
            });
        }
        let edges: Vec<(usize, usize)> = ids.chunks(2).map(|c| (c[0], c[1])).collect();
        list.push(PatternSubgraph::new(&g, kind, edges, index)?);
    }

    Ok((g, list))
}

/// Serialize an instance back into the textual format accepted by
/// [`parse_instance`].
pub fn serialize_instance(g: &Graph, list: &[PatternSubgraph]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    let _ = writeln!(out, "{}", list.len());
    for sub in list {
        let mut line = String::new();
        line.push(sub.kind().letter());
        for &(u, v) in sub.edges() {
            let _ = write!(line, " {u} {v}");
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Parse a solution file: one line of space-separated 0-based list indices.
pub fn parse_solution(text: &str, mode: Mode) -> Result<PackingSolution, InstanceError> {
    let mut indices = Vec::new();
    for tok in text.split_whitespace() {
        let idx: u32 = tok.parse().map_err(|_| InstanceError::Malformed {
            line: 1,
            expected: "list indices",
        })?;
        indices.push(idx);
    }
    Ok(PackingSolution::new(mode, indices))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_instance() -> &'static str {
        "3 3\n0 1\n1 2\n2 0\n1\nC 0 1 1 2 2 0\n"
    }

    #[test]
    fn parses_triangle_with_one_cycle() {
        let (g, list) = parse_instance(triangle_instance()).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].kind(), PatternKind::Cycle);
        assert_eq!(list[0].vertex_count(), 3);
    }

    #[test]
    fn parses_k2_with_empty_list() {
        let (g, list) = parse_instance("2 1\n0 1\n0\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(list.is_empty());
    }

    #[test]
    fn two_edges_tagged_cycle_is_rejected() {
        let text = "3 3\n0 1\n1 2\n2 0\n1\nC 0 1 1 2\n";
        let err = parse_instance(text).unwrap_err();
        assert!(matches!(err, InstanceError::KindViolation { .. }));
    }

    #[test]
    fn rejects_edge_past_vertex_count() {
        let err = parse_instance("2 1\n0 5\n0\n").unwrap_err();
        assert!(matches!(err, InstanceError::VertexOutOfRange { .. }));
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = parse_instance("3 2\n0 1\n1 0\n0\n").unwrap_err();
        assert!(matches!(err, InstanceError::DuplicateEdge { .. }));
    }

    #[test]
    fn rejects_subgraph_edge_missing_from_host() {
        let text = "3 2\n0 1\n1 2\n1\nP 0 2\n";
        let err = parse_instance(text).unwrap_err();
        assert!(matches!(err, InstanceError::EdgeAbsent { .. }));
    }

    #[test]
    fn roundtrip_preserves_instance() {
        let (g, list) = parse_instance(triangle_instance()).unwrap();
        let text = serialize_instance(&g, &list);
        let (g2, list2) = parse_instance(&text).unwrap();
        assert_eq!(g.edges(), g2.edges());
        assert_eq!(list, list2);
    }

    #[test]
    fn degree_stats_examples() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.degree_stats(), (3, 3));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree_stats(), (3, 1));
        let empty = Graph::new(5);
        assert_eq!(empty.degree_stats(), (0, 0));
    }

    #[test]
    fn girth_examples() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.girth(), Some(5));
        let tree = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(tree.girth(), None);
    }

    #[test]
    fn girth_petersen() {
        // outer 5-cycle, inner 5-cycle with step 2, spokes
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn biconnected_two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let comps = g.biconnected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(_, es)| es.len() == 3));
    }

    #[test]
    fn biconnected_single_cycle() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.biconnected_components().len(), 1);
    }

    #[test]
    fn biconnected_path_gives_bridges() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let comps = p4.biconnected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|(_, es)| es.len() == 1));
    }

    #[test]
    fn walk_reconstruction() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = PatternSubgraph::new(&g, PatternKind::Cycle, vec![(0, 1), (1, 2), (2, 3), (3, 0)], 0)
            .unwrap();
        let w = c.walk().unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w[0], 0);
        let p = PatternSubgraph::new(&g, PatternKind::Path, vec![(1, 2), (2, 3)], 0).unwrap();
        assert_eq!(p.walk().unwrap(), vec![1, 2, 3]);
    }
}
