//! Vertex-disjoint packing of connected patterns by dynamic programming over
//! a tree decomposition.
//!
//! States live on a nice decomposition (introduce / forget / join). A state
//! maps each bag vertex to the list entry currently occupying it, if any.
//! Because every pattern is connected, a selected pattern that still has
//! unintroduced vertices must keep at least one vertex in the bag, so the
//! table stays within |L|^O(tw) per node. A pattern is counted the moment
//! its last bag vertex is forgotten, which is only legal once all of its
//! vertices have been introduced.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, Mode, PackingSolution, PatternSubgraph};

/// A rooted-at-0 tree decomposition: bags plus tree edges.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<u32>>,
    pub tree_edges: Vec<(u32, u32)>,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<u32>>, tree_edges: Vec<(u32, u32)>) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        TreeDecomposition { bags, tree_edges }
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }
}

/// First violated decomposition axiom, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionViolation {
    /// Tree edge endpoints out of range, or the edges do not form a tree.
    NotATree,
    /// A graph vertex appears in no bag.
    VertexUncovered { vertex: u32 },
    /// A graph edge is contained in no bag.
    EdgeUncovered { edge: (u32, u32) },
    /// The bags containing `vertex` induce a disconnected subtree.
    BagsDisconnected { vertex: u32 },
}

/// Check the three decomposition axioms, reporting the first violation.
pub fn validate_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<(), DecompositionViolation> {
    let b = td.bags.len();
    if b == 0 {
        return Err(DecompositionViolation::NotATree);
    }
    if td.tree_edges.len() + 1 != b {
        return Err(DecompositionViolation::NotATree);
    }
    let mut adj = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        if x as usize >= b || y as usize >= b || x == y {
            return Err(DecompositionViolation::NotATree);
        }
        adj[x as usize].push(y as usize);
        adj[y as usize].push(x as usize);
    }
    // connectivity (edge count already matches a tree)
    let mut seen = vec![false; b];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(DecompositionViolation::NotATree);
    }

    // axiom 1: bags cover V(G)
    let mut covered = vec![false; g.vertex_count()];
    for bag in &td.bags {
        for &v in bag {
            if (v as usize) < covered.len() {
                covered[v as usize] = true;
            }
        }
    }
    if let Some(v) = covered.iter().position(|c| !c) {
        return Err(DecompositionViolation::VertexUncovered { vertex: v as u32 });
    }

    // axiom 2: every edge inside some bag
    for &(u, v) in g.edges() {
        let inside = td
            .bags
            .iter()
            .any(|bag| bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok());
        if !inside {
            return Err(DecompositionViolation::EdgeUncovered { edge: (u, v) });
        }
    }

    // axiom 3: bags containing any vertex form a subtree
    for v in 0..g.vertex_count() as u32 {
        let holders: Vec<usize> = (0..b)
            .filter(|&i| td.bags[i].binary_search(&v).is_ok())
            .collect();
        if holders.is_empty() {
            continue;
        }
        let inset: std::collections::HashSet<usize> = holders.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![holders[0]];
        seen.insert(holders[0]);
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if inset.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        if seen.len() != holders.len() {
            return Err(DecompositionViolation::BagsDisconnected { vertex: v });
        }
    }
    Ok(())
}

/// Min-degree elimination heuristic. Always valid; width not guaranteed
/// minimal.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.vertex_count();
    if n == 0 {
        return TreeDecomposition::new(vec![vec![]], vec![]);
    }
    // work on a fill-in copy of the adjacency
    let mut adj: Vec<std::collections::BTreeSet<u32>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut bags: Vec<Vec<u32>> = Vec::with_capacity(n);
    let mut neighbors_at_elim: Vec<Vec<u32>> = Vec::with_capacity(n);

    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| adj[v].len())
            .unwrap();
        let nb: Vec<u32> = adj[v].iter().copied().collect();
        let mut bag = nb.clone();
        bag.push(v as u32);
        bag.sort_unstable();
        bags.push(bag);
        neighbors_at_elim.push(nb.clone());
        order.push(v as u32);
        // make the neighborhood a clique, remove v
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                adj[nb[i] as usize].insert(nb[j]);
                adj[nb[j] as usize].insert(nb[i]);
            }
            adj[nb[i] as usize].remove(&(v as u32));
        }
        alive[v] = false;
        adj[v].clear();
    }

    // bag of order[i] connects to the bag of its earliest-later-eliminated neighbor
    let pos: HashMap<u32, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut tree_edges = Vec::new();
    for i in 0..n {
        let parent = neighbors_at_elim[i].iter().map(|w| pos[w]).min();
        match parent {
            Some(p) => tree_edges.push((i as u32, p as u32)),
            None => {
                // isolated remainder: attach to the next bag to keep a tree
                if i + 1 < n {
                    tree_edges.push((i as u32, (i + 1) as u32));
                }
            }
        }
    }
    TreeDecomposition::new(bags, tree_edges)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwError {
    #[error("list entry {index} is disconnected; the treewidth solver requires connected patterns")]
    DisconnectedPattern { index: usize },
    #[error("invalid tree decomposition: {0:?}")]
    InvalidDecomposition(DecompositionViolation),
}

/// Outcome of the DP, with the table-size diagnostic.
#[derive(Clone, Debug)]
pub struct TwResult {
    pub solution: PackingSolution,
    pub states_explored: u64,
}

enum NiceKind {
    Leaf,
    Introduce(u32),
    Forget(u32),
    Join,
}

struct NiceNode {
    kind: NiceKind,
    bag: Vec<u32>,
    children: Vec<usize>,
}

/// Build a nice decomposition (post-order node list, root last, root bag
/// empty) from a valid decomposition.
fn build_nice(td: &TreeDecomposition) -> Vec<NiceNode> {
    let b = td.bags.len();
    let mut adj = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        adj[x as usize].push(y as usize);
        adj[y as usize].push(x as usize);
    }
    let mut nodes: Vec<NiceNode> = Vec::new();

    // chain from `from_bag` up to `to_bag` via forgets then introduces,
    // returning the id of the topmost node
    fn morph(
        nodes: &mut Vec<NiceNode>,
        below: usize,
        from_bag: &[u32],
        to_bag: &[u32],
    ) -> usize {
        let mut cur = below;
        let mut bag: Vec<u32> = from_bag.to_vec();
        for &v in from_bag {
            if to_bag.binary_search(&v).is_err() {
                bag.retain(|&x| x != v);
                nodes.push(NiceNode {
                    kind: NiceKind::Forget(v),
                    bag: bag.clone(),
                    children: vec![cur],
                });
                cur = nodes.len() - 1;
            }
        }
        for &v in to_bag {
            if from_bag.binary_search(&v).is_err() {
                bag.push(v);
                bag.sort_unstable();
                nodes.push(NiceNode {
                    kind: NiceKind::Introduce(v),
                    bag: bag.clone(),
                    children: vec![cur],
                });
                cur = nodes.len() - 1;
            }
        }
        cur
    }

    fn rec(
        nodes: &mut Vec<NiceNode>,
        td: &TreeDecomposition,
        adj: &[Vec<usize>],
        x: usize,
        parent: usize,
    ) -> usize {
        let bag = &td.bags[x];
        let kids: Vec<usize> = adj[x].iter().copied().filter(|&y| y != parent).collect();

        let mut built: Option<usize> = None;
        for &k in &kids {
            let sub = rec(nodes, td, adj, k, x);
            let lifted = morph(nodes, sub, &td.bags[k], bag);
            built = Some(match built {
                None => lifted,
                Some(acc) => {
                    nodes.push(NiceNode {
                        kind: NiceKind::Join,
                        bag: bag.clone(),
                        children: vec![acc, lifted],
                    });
                    nodes.len() - 1
                }
            });
        }
        match built {
            Some(id) => id,
            None => {
                nodes.push(NiceNode {
                    kind: NiceKind::Leaf,
                    bag: Vec::new(),
                    children: vec![],
                });
                let leaf = nodes.len() - 1;
                morph(nodes, leaf, &[], bag)
            }
        }
    }

    let top = rec(&mut nodes, td, &adj, 0, usize::MAX);
    // forget everything above decomposition node 0 so the final bag is empty
    let root_bag = td.bags[0].clone();
    morph(&mut nodes, top, &root_bag, &[]);
    nodes
}

const FREE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
struct StateKey(Vec<u32>);

#[derive(Clone)]
struct Entry {
    value: usize,
    /// completed list indices, kept sorted for deterministic tie-breaking
    completed: Vec<u32>,
}

fn better(a: &Entry, b: &Entry) -> bool {
    a.value > b.value || (a.value == b.value && a.completed < b.completed)
}

/// Maximum vertex-disjoint subcollection of connected listed patterns, by
/// DP over the given decomposition.
pub fn solve_vertex_disjoint_tw(
    g: &Graph,
    list: &[PatternSubgraph],
    td: &TreeDecomposition,
) -> Result<TwResult, TwError> {
    for (i, p) in list.iter().enumerate() {
        if !p.is_connected() {
            return Err(TwError::DisconnectedPattern { index: i });
        }
    }
    if let Err(v) = validate_decomposition(g, td) {
        return Err(TwError::InvalidDecomposition(v));
    }

    let nice = build_nice(td);
    let n = g.vertex_count();
    let words = n.div_ceil(64).max(1);

    // per-pattern vertex bitsets and vertex -> patterns index
    let mut pattern_bits: Vec<Vec<u64>> = Vec::with_capacity(list.len());
    let mut patterns_at: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (i, p) in list.iter().enumerate() {
        let mut bits = vec![0u64; words];
        for &v in p.vertices() {
            bits[v as usize / 64] |= 1 << (v % 64);
            patterns_at[v as usize].push(i as u32);
        }
        pattern_bits.push(bits);
    }

    // introduced-vertex bitsets per nice node
    let mut introduced: Vec<Vec<u64>> = Vec::with_capacity(nice.len());
    for node in &nice {
        let bits = match node.kind {
            NiceKind::Leaf => vec![0u64; words],
            NiceKind::Introduce(v) => {
                let mut b = introduced[node.children[0]].clone();
                b[v as usize / 64] |= 1 << (v % 64);
                b
            }
            NiceKind::Forget(_) => introduced[node.children[0]].clone(),
            NiceKind::Join => {
                let mut b = introduced[node.children[0]].clone();
                for (w, c) in b.iter_mut().zip(&introduced[node.children[1]]) {
                    *w |= c;
                }
                b
            }
        };
        introduced.push(bits);
    }

    let subset = |inner: &[u64], outer: &[u64]| inner.iter().zip(outer).all(|(a, b)| a & !b == 0);
    let disjoint = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & y == 0);
    let contains = |bits: &[u64], v: u32| bits[v as usize / 64] >> (v % 64) & 1 == 1;

    fn push(table: &mut HashMap<StateKey, Entry>, key: StateKey, entry: Entry) {
        match table.get_mut(&key) {
            Some(existing) => {
                if better(&entry, existing) {
                    *existing = entry;
                }
            }
            None => {
                table.insert(key, entry);
            }
        }
    }

    let mut states_explored: u64 = 0;
    let mut tables: Vec<HashMap<StateKey, Entry>> = Vec::with_capacity(nice.len());

    for (id, node) in nice.iter().enumerate() {
        let mut table: HashMap<StateKey, Entry> = HashMap::new();

        match node.kind {
            NiceKind::Leaf => {
                push(
                    &mut table,
                    StateKey(Vec::new()),
                    Entry {
                        value: 0,
                        completed: Vec::new(),
                    },
                );
            }
            NiceKind::Introduce(v) => {
                let child = &tables[node.children[0]];
                let pos = node.bag.binary_search(&v).unwrap();
                let g_child = &introduced[node.children[0]];
                for (key, entry) in child {
                    let mut owners: Vec<u32> = key
                        .0
                        .iter()
                        .copied()
                        .filter(|&m| m != FREE && contains(&pattern_bits[m as usize], v))
                        .collect();
                    owners.sort_unstable();
                    owners.dedup();
                    if owners.len() >= 2 {
                        continue; // two registered patterns claim v: dead state
                    }
                    if let Some(&p) = owners.first() {
                        // forced: v is used by the already-registered p
                        let mut marks = key.0.clone();
                        marks.insert(pos, p);
                        push(&mut table, StateKey(marks), entry.clone());
                        continue;
                    }
                    // v stays free
                    let mut marks = key.0.clone();
                    marks.insert(pos, FREE);
                    push(&mut table, StateKey(marks), entry.clone());
                    // or v activates a brand-new pattern: legal only if no
                    // vertex of that pattern was introduced below
                    for &p in &patterns_at[v as usize] {
                        if key.0.contains(&p) {
                            continue;
                        }
                        if !disjoint(&pattern_bits[p as usize], g_child) {
                            continue;
                        }
                        let mut marks = key.0.clone();
                        marks.insert(pos, p);
                        push(&mut table, StateKey(marks), entry.clone());
                    }
                }
            }
            NiceKind::Forget(v) => {
                let child = &tables[node.children[0]];
                let child_bag = &nice[node.children[0]].bag;
                let pos = child_bag.binary_search(&v).unwrap();
                let g_here = &introduced[id];
                for (key, entry) in child {
                    let mark = key.0[pos];
                    let mut marks = key.0.clone();
                    marks.remove(pos);
                    if mark == FREE {
                        push(&mut table, StateKey(marks), entry.clone());
                        continue;
                    }
                    let still_active = marks.contains(&mark);
                    if still_active {
                        push(&mut table, StateKey(marks), entry.clone());
                    } else if subset(&pattern_bits[mark as usize], g_here) {
                        // last bag vertex forgotten and the whole pattern is
                        // inside the processed part: the pattern completes
                        let mut completed = entry.completed.clone();
                        let ins = completed.binary_search(&mark).unwrap_err();
                        completed.insert(ins, mark);
                        push(
                            &mut table,
                            StateKey(marks),
                            Entry {
                                value: entry.value + 1,
                                completed,
                            },
                        );
                    }
                    // otherwise the pattern can never finish: state dies
                }
            }
            NiceKind::Join => {
                let left = &tables[node.children[0]];
                let right = &tables[node.children[1]];
                for (key, le) in left {
                    if let Some(re) = right.get(key) {
                        let mut completed = le.completed.clone();
                        completed.extend_from_slice(&re.completed);
                        completed.sort_unstable();
                        push(
                            &mut table,
                            key.clone(),
                            Entry {
                                value: le.value + re.value,
                                completed,
                            },
                        );
                    }
                }
            }
        }

        // invariant: each state has at most |bag| distinct active patterns,
        // and every registered pattern occupies at least one bag slot
        for key in table.keys() {
            let mut ids: Vec<u32> = key.0.iter().copied().filter(|&m| m != FREE).collect();
            ids.sort_unstable();
            ids.dedup();
            assert!(ids.len() <= node.bag.len().max(key.0.len()));
        }

        states_explored += table.len() as u64;
        tables.push(table);
    }

    let root = tables.last().unwrap();
    let best = root
        .get(&StateKey(Vec::new()))
        .expect("root state always present");
    Ok(TwResult {
        solution: PackingSolution::new(Mode::Vertex, best.completed.clone()),
        states_explored,
    })
}

/// Convenience: solve with a heuristic decomposition.
pub fn solve_vertex_disjoint_tw_auto(
    g: &Graph,
    list: &[PatternSubgraph],
) -> Result<TwResult, TwError> {
    let td = heuristic_decomposition(g);
    solve_vertex_disjoint_tw(g, list, &td)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_instance, PatternKind};

    #[test]
    fn validates_path_decomposition_of_p3() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        assert_eq!(validate_decomposition(&g, &td), Ok(()));
    }

    #[test]
    fn reports_uncovered_edge() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        assert_eq!(
            validate_decomposition(&g, &td),
            Err(DecompositionViolation::EdgeUncovered { edge: (0, 2) })
        );
    }

    #[test]
    fn reports_disconnected_holder_bags() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let td =
            TreeDecomposition::new(vec![vec![0, 1], vec![1], vec![0]], vec![(0, 1), (1, 2)]);
        assert_eq!(
            validate_decomposition(&g, &td),
            Err(DecompositionViolation::BagsDisconnected { vertex: 0 })
        );
    }

    #[test]
    fn heuristic_width_on_trees_and_cycles() {
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let td = heuristic_decomposition(&tree);
        assert_eq!(validate_decomposition(&tree, &td), Ok(()));
        assert_eq!(td.width(), 1);

        let c6 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let td = heuristic_decomposition(&c6);
        assert_eq!(validate_decomposition(&c6, &td), Ok(()));
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn heuristic_is_valid_on_series_parallel_fixture() {
        // two nested theta graphs sharing a cut vertex
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (3, 2),
                (2, 4),
                (4, 5),
                (5, 6),
                (6, 2),
                (5, 7),
                (7, 6),
            ],
        )
        .unwrap();
        let td = heuristic_decomposition(&g);
        assert_eq!(validate_decomposition(&g, &td), Ok(()));
    }

    #[test]
    fn path_edges_pack_like_a_matching() {
        let text = "5 4\n0 1\n1 2\n2 3\n3 4\n4\nP 0 1\nP 1 2\nP 2 3\nP 3 4\n";
        let (g, list) = parse_instance(text).unwrap();
        let td = heuristic_decomposition(&g);
        let res = solve_vertex_disjoint_tw(&g, &list, &td).unwrap();
        assert_eq!(res.solution.size(), 2);
    }

    #[test]
    fn triangle_with_overlapping_entries() {
        let text = "3 3\n0 1\n1 2\n2 0\n3\nC 0 1 1 2 2 0\nP 0 1\nP 1 2\n";
        let (g, list) = parse_instance(text).unwrap();
        let res = solve_vertex_disjoint_tw_auto(&g, &list).unwrap();
        assert_eq!(res.solution.size(), 1);
    }

    #[test]
    fn disconnected_pattern_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let p = PatternSubgraph::new(&g, PatternKind::Generic, vec![(0, 1), (2, 3)], 0).unwrap();
        let td = heuristic_decomposition(&g);
        assert!(matches!(
            solve_vertex_disjoint_tw(&g, &[p], &td),
            Err(TwError::DisconnectedPattern { index: 0 })
        ));
    }

    #[test]
    fn pattern_spanning_branches_is_handled() {
        // star with three rays of length 2; long paths overlap at the center
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let mk = |edges: Vec<(usize, usize)>| {
            PatternSubgraph::new(&g, PatternKind::Path, edges, 0).unwrap()
        };
        let list = vec![
            mk(vec![(2, 1), (1, 0), (0, 3)]),
            mk(vec![(4, 3), (3, 0), (0, 5)]),
            mk(vec![(6, 5), (5, 0), (0, 1)]),
            mk(vec![(3, 4)]),
            mk(vec![(5, 6)]),
        ];
        let res = solve_vertex_disjoint_tw_auto(&g, &list).unwrap();
        // one long path through the center plus one disjoint short edge
        assert_eq!(res.solution.size(), 2);
    }
}
