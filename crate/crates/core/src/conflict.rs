//! Conflict-graph pipeline: intersection graphs of the packing list, claw
//! detection, the degree thresholds that certify claw-freeness, and an exact
//! maximum-independent-set solver.
//!
//! A packing is exactly an independent set in the conflict graph, so the
//! solver here is also the engine behind the ground-truth oracle.

use crate::graph::{Graph, Mode, PackingSolution, PatternSubgraph};

/// Intersection graph of the list entries under vertex- or edge-sharing.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    pub mode: Mode,
    node_count: usize,
    adj: Vec<Vec<u32>>,
    /// bitset rows for O(1) adjacency tests
    rows: Vec<Vec<u64>>,
}

impl ConflictGraph {
    pub fn from_edges(mode: Mode, node_count: usize, edges: &[(u32, u32)]) -> Self {
        let words = node_count.div_ceil(64);
        let mut adj = vec![Vec::new(); node_count];
        let mut rows = vec![vec![0u64; words]; node_count];
        for &(i, j) in edges {
            if !adj[i as usize].contains(&j) {
                adj[i as usize].push(j);
                adj[j as usize].push(i);
                rows[i as usize][j as usize / 64] |= 1 << (j % 64);
                rows[j as usize][i as usize / 64] |= 1 << (i % 64);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        ConflictGraph {
            mode,
            node_count,
            adj,
            rows,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn edge_list(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..self.node_count {
            for &j in &self.adj[i] {
                if (i as u32) < j {
                    out.push((i as u32, j));
                }
            }
        }
        out
    }
}

/// Build the conflict graph of a list: nodes are list positions; two nodes
/// are adjacent iff the subgraphs share a vertex (vertex mode) or an edge
/// (edge mode).
pub fn build_conflict(g: &Graph, list: &[PatternSubgraph], mode: Mode) -> ConflictGraph {
    let keys: Vec<Vec<u32>> = match mode {
        Mode::Vertex => list.iter().map(|s| s.vertices().to_vec()).collect(),
        Mode::Edge => list
            .iter()
            .map(|s| {
                let mut ids = s.edge_ids(g);
                ids.sort_unstable();
                ids
            })
            .collect(),
    };
    let mut edges = Vec::new();
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if sorted_intersect(&keys[i], &keys[j]) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    ConflictGraph::from_edges(mode, list.len(), &edges)
}

fn sorted_intersect(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// An induced K_{1,3} in a conflict graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClawWitness {
    pub center: u32,
    pub leaves: [u32; 3],
}

/// First induced claw found by scanning each node's neighborhood for an
/// independent triple, or `None` if the graph is claw-free.
pub fn find_induced_claw(cg: &ConflictGraph) -> Option<ClawWitness> {
    for center in 0..cg.node_count() {
        let nb = cg.neighbors(center);
        if nb.len() < 3 {
            continue;
        }
        for ai in 0..nb.len() {
            for bi in ai + 1..nb.len() {
                if cg.are_adjacent(nb[ai] as usize, nb[bi] as usize) {
                    continue;
                }
                for ci in bi + 1..nb.len() {
                    if !cg.are_adjacent(nb[ai] as usize, nb[ci] as usize)
                        && !cg.are_adjacent(nb[bi] as usize, nb[ci] as usize)
                    {
                        return Some(ClawWitness {
                            center: center as u32,
                            leaves: [nb[ai], nb[bi], nb[ci]],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Shape invariants of a pattern, as needed by the degree thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternShape {
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    /// `Some(t)` iff the pattern is a disjoint union of t single edges.
    pub matching_t: Option<usize>,
}

impl PatternShape {
    pub fn of(p: &PatternSubgraph) -> Self {
        let t = if p.min_degree() == 1 && p.vertex_count() == 2 * p.edge_count() {
            // every vertex has degree exactly 1
            Some(p.edge_count())
        } else {
            None
        };
        PatternShape {
            vertices: p.vertex_count(),
            edges: p.edge_count(),
            min_degree: p.min_degree(),
            matching_t: t,
        }
    }
}

/// Vertex-mode degree threshold `2*δ(H) - ⌊|V(H)|/3⌋`: if `Δ(G)` stays at or
/// below it, the vertex-conflict graph of any list of H-copies is claw-free.
pub fn threshold_vertex(shape: &PatternShape) -> i64 {
    2 * shape.min_degree as i64 - (shape.vertices as i64) / 3
}

/// Edge-mode degree threshold `2*δ(H) - ⌊|E(H)|/3⌋` plus the exception flag:
/// the guarantee is void when H = tK2 with 3 <= t <= 5.
pub fn threshold_edge(shape: &PatternShape) -> (i64, bool) {
    let value = 2 * shape.min_degree as i64 - (shape.edges as i64) / 3;
    let exception = matches!(shape.matching_t, Some(t) if (3..=5).contains(&t));
    (value, exception)
}

/// Exact maximum independent set by branch and bound.
///
/// Branches on a maximum-degree node; prunes with a greedy clique-cover
/// bound; splits into connected components; degree <= 2 remainders (disjoint
/// paths and cycles) are solved directly.
pub fn max_independent_set(cg: &ConflictGraph) -> Vec<u32> {
    let mut solver = MisSolver::new(cg);
    let all: Vec<u32> = (0..cg.node_count() as u32).collect();
    let (_, witness) = solver.solve(&all);
    let mut w = witness;
    w.sort_unstable();
    w
}

/// Size-only variant, exposed for the oracle's lexicographic refinement.
pub fn max_independent_set_size_within(cg: &ConflictGraph, nodes: &[u32]) -> usize {
    let mut solver = MisSolver::new(cg);
    solver.solve(nodes).0
}

pub(crate) struct MisSolver<'a> {
    cg: &'a ConflictGraph,
    pub explored: u64,
}

impl<'a> MisSolver<'a> {
    pub fn new(cg: &'a ConflictGraph) -> Self {
        MisSolver { cg, explored: 0 }
    }

    /// Returns (alpha, witness) over the induced subgraph on `nodes`.
    pub fn solve(&mut self, nodes: &[u32]) -> (usize, Vec<u32>) {
        self.explored += 1;
        if nodes.is_empty() {
            return (0, Vec::new());
        }
        // split into connected components of the induced subgraph
        let comps = self.components(nodes);
        if comps.len() > 1 {
            let mut total = 0;
            let mut witness = Vec::new();
            for comp in comps {
                let (s, mut w) = self.solve_component(&comp);
                total += s;
                witness.append(&mut w);
            }
            return (total, witness);
        }
        self.solve_component(&comps.into_iter().next().unwrap())
    }

    fn solve_component(&mut self, nodes: &[u32]) -> (usize, Vec<u32>) {
        self.explored += 1;
        let degs: Vec<usize> = nodes
            .iter()
            .map(|&v| self.restricted_degree(v, nodes))
            .collect();
        let maxdeg = degs.iter().copied().max().unwrap_or(0);
        if maxdeg <= 2 {
            return self.solve_sparse(nodes);
        }
        let pivot_pos = degs.iter().position(|&d| d == maxdeg).unwrap();
        let pivot = nodes[pivot_pos];

        // include pivot
        let mut rest_incl: Vec<u32> = nodes
            .iter()
            .copied()
            .filter(|&v| v != pivot && !self.cg.are_adjacent(pivot as usize, v as usize))
            .collect();
        rest_incl.sort_unstable();
        let (s1, mut w1) = self.solve(&rest_incl);
        let mut best = (s1 + 1, {
            w1.push(pivot);
            w1
        });

        // exclude pivot, unless the bound rules out improvement
        let rest_excl: Vec<u32> = nodes.iter().copied().filter(|&v| v != pivot).collect();
        if self.clique_cover_bound(&rest_excl) > best.0 {
            let (s2, w2) = self.solve(&rest_excl);
            if s2 > best.0 {
                best = (s2, w2);
            }
        }
        best
    }

    fn restricted_degree(&self, v: u32, nodes: &[u32]) -> usize {
        self.cg
            .neighbors(v as usize)
            .iter()
            .filter(|&&w| nodes.binary_search(&w).is_ok())
            .count()
    }

    fn components(&self, nodes: &[u32]) -> Vec<Vec<u32>> {
        let mut seen: std::collections::HashSet<u32> = std::collections::HashSet::new();
        let mut comps = Vec::new();
        for &start in nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in self.cg.neighbors(u as usize) {
                    if nodes.binary_search(&w).is_ok() && seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Exact alpha on an induced subgraph of max degree 2: a disjoint union
    /// of paths and cycles.
    fn solve_sparse(&self, nodes: &[u32]) -> (usize, Vec<u32>) {
        let mut seen: std::collections::HashSet<u32> = std::collections::HashSet::new();
        let mut total = 0;
        let mut witness = Vec::new();
        for &start in nodes {
            if seen.contains(&start) {
                continue;
            }
            // walk the path/cycle starting from an endpoint if one exists
            let mut comp = vec![start];
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in self.cg.neighbors(u as usize) {
                    if nodes.binary_search(&w).is_ok() && seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            let deg = |v: u32| self.restricted_degree(v, nodes);
            let is_cycle = comp.iter().all(|&v| deg(v) == 2);
            // order the component as a walk
            let first = if is_cycle {
                comp[0]
            } else {
                *comp.iter().find(|&&v| deg(v) <= 1).unwrap()
            };
            let mut walk = vec![first];
            let mut prev = u32::MAX;
            let mut cur = first;
            loop {
                let next = self
                    .cg
                    .neighbors(cur as usize)
                    .iter()
                    .copied()
                    .find(|&w| w != prev && nodes.binary_search(&w).is_ok());
                match next {
                    Some(w) if w != first => {
                        walk.push(w);
                        prev = cur;
                        cur = w;
                    }
                    _ => break,
                }
            }
            if is_cycle {
                total += walk.len() / 2;
                for i in (0..walk.len() - (walk.len() % 2)).step_by(2) {
                    if witness.len() < total {
                        witness.push(walk[i]);
                    }
                }
            } else {
                total += walk.len().div_ceil(2);
                for i in (0..walk.len()).step_by(2) {
                    witness.push(walk[i]);
                }
            }
        }
        (total, witness)
    }

    /// Upper bound on alpha: size of a greedy clique cover.
    fn clique_cover_bound(&self, nodes: &[u32]) -> usize {
        let mut cliques: Vec<Vec<u32>> = Vec::new();
        for &v in nodes {
            let mut placed = false;
            for clique in cliques.iter_mut() {
                if clique
                    .iter()
                    .all(|&u| self.cg.are_adjacent(u as usize, v as usize))
                {
                    clique.push(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                cliques.push(vec![v]);
            }
        }
        cliques.len()
    }
}

/// Claw-freeness certificate reported by [`solve_via_conflict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClawCertificate {
    ClawFree,
    NotClawFree(ClawWitness),
}

/// Solve a packing instance through its conflict graph: the optimum is a
/// maximum independent set; the certificate records whether the conflict
/// graph was claw-free (the polynomially solvable regime).
pub fn solve_via_conflict(
    g: &Graph,
    list: &[PatternSubgraph],
    mode: Mode,
) -> (PackingSolution, ClawCertificate) {
    let cg = build_conflict(g, list, mode);
    let certificate = match find_induced_claw(&cg) {
        None => ClawCertificate::ClawFree,
        Some(w) => ClawCertificate::NotClawFree(w),
    };
    let indices = max_independent_set(&cg);
    (PackingSolution::new(mode, indices), certificate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_instance, PatternKind};

    fn k4_with_triangles() -> (Graph, Vec<PatternSubgraph>) {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let tris = [
            vec![(0, 1), (1, 2), (2, 0)],
            vec![(0, 1), (1, 3), (3, 0)],
            vec![(0, 2), (2, 3), (3, 0)],
            vec![(1, 2), (2, 3), (3, 1)],
        ];
        let list = tris
            .into_iter()
            .enumerate()
            .map(|(i, es)| PatternSubgraph::new(&g, PatternKind::Cycle, es, i).unwrap())
            .collect();
        (g, list)
    }

    #[test]
    fn k4_triangles_conflict_completely() {
        let (g, list) = k4_with_triangles();
        for mode in [Mode::Vertex, Mode::Edge] {
            let cg = build_conflict(&g, &list, mode);
            assert_eq!(cg.edge_list().len(), 6, "all pairs conflict in {mode} mode");
        }
    }

    #[test]
    fn disjoint_triangles_do_not_conflict() {
        let text = "6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2\nC 0 1 1 2 2 0\nC 3 4 4 5 5 3\n";
        let (g, list) = parse_instance(text).unwrap();
        let cg = build_conflict(&g, &list, Mode::Vertex);
        assert!(cg.edge_list().is_empty());
    }

    #[test]
    fn claw_is_found_in_k13_and_not_in_k4() {
        let claw = ConflictGraph::from_edges(Mode::Vertex, 4, &[(0, 1), (0, 2), (0, 3)]);
        let w = find_induced_claw(&claw).unwrap();
        assert_eq!(w.center, 0);
        let k4 = ConflictGraph::from_edges(
            Mode::Vertex,
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        assert_eq!(find_induced_claw(&k4), None);
    }

    fn cycle_shape(l: usize) -> PatternShape {
        PatternShape {
            vertices: l,
            edges: l,
            min_degree: 2,
            matching_t: None,
        }
    }

    #[test]
    fn vertex_thresholds_for_cycles() {
        assert_eq!(threshold_vertex(&cycle_shape(3)), 3);
        assert_eq!(threshold_vertex(&cycle_shape(4)), 3);
        assert_eq!(threshold_vertex(&cycle_shape(5)), 3);
        assert_eq!(threshold_vertex(&cycle_shape(6)), 2);
    }

    #[test]
    fn edge_thresholds_and_matching_exception() {
        assert_eq!(threshold_edge(&cycle_shape(4)), (3, false));
        assert_eq!(threshold_edge(&cycle_shape(5)), (3, false));
        let three_k2 = PatternShape {
            vertices: 6,
            edges: 3,
            min_degree: 1,
            matching_t: Some(3),
        };
        assert!(threshold_edge(&three_k2).1, "3K2 voids the edge threshold");
        let one_k2 = PatternShape {
            vertices: 2,
            edges: 1,
            min_degree: 1,
            matching_t: Some(1),
        };
        assert!(!threshold_edge(&one_k2).1);
    }

    #[test]
    fn shape_detects_t_k2() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let p = PatternSubgraph::new(&g, PatternKind::Generic, vec![(0, 1), (2, 3), (4, 5)], 0)
            .unwrap();
        assert_eq!(PatternShape::of(&p).matching_t, Some(3));
    }

    #[test]
    fn mis_on_path_and_clique() {
        let p3 = ConflictGraph::from_edges(Mode::Vertex, 3, &[(0, 1), (1, 2)]);
        assert_eq!(max_independent_set(&p3).len(), 2);
        let k4 = ConflictGraph::from_edges(
            Mode::Vertex,
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        assert_eq!(max_independent_set(&k4).len(), 1);
    }

    #[test]
    fn solve_single_cycle_is_claw_free() {
        let text = "4 4\n0 1\n1 2\n2 3\n3 0\n1\nC 0 1 1 2 2 3 3 0\n";
        let (g, list) = parse_instance(text).unwrap();
        let (sol, cert) = solve_via_conflict(&g, &list, Mode::Edge);
        assert_eq!(sol.size(), 1);
        assert_eq!(cert, ClawCertificate::ClawFree);
    }

    #[test]
    fn star_edges_as_patterns_conflict_in_a_triangle() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let list: Vec<_> = [(0, 1), (0, 2), (0, 3)]
            .into_iter()
            .enumerate()
            .map(|(i, e)| PatternSubgraph::new(&g, PatternKind::Path, vec![e], i).unwrap())
            .collect();
        let cg = build_conflict(&g, &list, Mode::Vertex);
        assert_eq!(cg.edge_list().len(), 3);
        let (sol, cert) = solve_via_conflict(&g, &list, Mode::Vertex);
        assert_eq!(sol.size(), 1);
        assert_eq!(cert, ClawCertificate::ClawFree);
    }
}
