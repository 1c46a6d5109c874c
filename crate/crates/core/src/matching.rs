//! Maximum matching in general graphs via Edmonds' blossom algorithm.
//!
//! O(V^3): one augmenting-path search per matched edge, each search
//! contracting blossoms on the fly. The auxiliary graphs handed to this
//! module are tiny, so the cubic bound is irrelevant in practice.

/// Adjacency-list input graph for the matcher.
#[derive(Clone, Debug, Default)]
pub struct MatchGraph {
    adj: Vec<Vec<u32>>,
}

impl MatchGraph {
    pub fn new(n: usize) -> Self {
        MatchGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.adj[u].contains(&(v as u32)) {
            self.adj[u].push(v as u32);
            self.adj[v].push(u as u32);
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }
}

/// Maximum-cardinality matching; `mate[v]` is the partner of `v` or `None`.
pub fn maximum_matching(g: &MatchGraph) -> Vec<Option<u32>> {
    let n = g.len();
    let inf = u32::MAX;
    let mut mate = vec![inf; n];

    // greedy warm start
    for u in 0..n {
        if mate[u] != inf {
            continue;
        }
        for &v in &g.adj[u] {
            if mate[v as usize] == inf {
                mate[u] = v;
                mate[v as usize] = u as u32;
                break;
            }
        }
    }

    let mut parent = vec![inf; n];
    let mut base: Vec<u32> = (0..n as u32).collect();
    let mut in_queue = vec![false; n];
    let mut in_blossom = vec![false; n];

    for root in 0..n {
        if mate[root] != inf {
            continue;
        }
        // BFS for an augmenting path from `root`
        for v in 0..n {
            parent[v] = inf;
            base[v] = v as u32;
            in_queue[v] = false;
        }
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root as u32);
        in_queue[root] = true;
        let mut finish = inf;

        'bfs: while let Some(u) = queue.pop_front() {
            for &v in &g.adj[u as usize] {
                if base[u as usize] == base[v as usize] || mate[u as usize] == v {
                    continue;
                }
                if v as usize == root || (mate[v as usize] != inf && parent[mate[v as usize] as usize] != inf)
                {
                    // odd cycle: contract the blossom
                    let b = lca(u, v, &base, &parent, &mate);
                    in_blossom.iter_mut().for_each(|x| *x = false);
                    mark_path(u, b, v, &mut in_blossom, &base, &mut parent, &mate);
                    mark_path(v, b, u, &mut in_blossom, &base, &mut parent, &mate);
                    for i in 0..n {
                        if in_blossom[base[i] as usize] {
                            base[i] = b;
                            if !in_queue[i] {
                                in_queue[i] = true;
                                queue.push_back(i as u32);
                            }
                        }
                    }
                } else if parent[v as usize] == inf {
                    parent[v as usize] = u;
                    if mate[v as usize] == inf {
                        finish = v;
                        break 'bfs;
                    } else {
                        let w = mate[v as usize];
                        if !in_queue[w as usize] {
                            in_queue[w as usize] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }

        if finish != inf {
            // flip matched edges along the alternating path
            let mut v = finish;
            while v != inf {
                let pv = parent[v as usize];
                let ppv = mate[pv as usize];
                mate[v as usize] = pv;
                mate[pv as usize] = v;
                v = ppv;
            }
        }
    }

    mate.into_iter()
        .map(|m| if m == u32::MAX { None } else { Some(m) })
        .collect()
}

/// Matching size of [`maximum_matching`].
pub fn maximum_matching_size(g: &MatchGraph) -> usize {
    maximum_matching(g).iter().flatten().count() / 2
}

fn lca(mut u: u32, mut v: u32, base: &[u32], parent: &[u32], mate: &[u32]) -> u32 {
    let n = base.len();
    let mut used = vec![false; n];
    loop {
        u = base[u as usize];
        used[u as usize] = true;
        if mate[u as usize] == u32::MAX {
            break;
        }
        u = parent[mate[u as usize] as usize];
    }
    loop {
        v = base[v as usize];
        if used[v as usize] {
            return v;
        }
        v = parent[mate[v as usize] as usize];
    }
}

fn mark_path(
    mut v: u32,
    b: u32,
    mut child: u32,
    in_blossom: &mut [bool],
    base: &[u32],
    parent: &mut [u32],
    mate: &[u32],
) {
    while base[v as usize] != b {
        in_blossom[base[v as usize] as usize] = true;
        in_blossom[base[mate[v as usize] as usize] as usize] = true;
        parent[v as usize] = child;
        child = mate[v as usize];
        v = parent[mate[v as usize] as usize];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MatchGraph {
        let mut g = MatchGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    fn path(n: usize) -> MatchGraph {
        let mut g = MatchGraph::new(n);
        for i in 0..n - 1 {
            g.add_edge(i, i + 1);
        }
        g
    }

    #[test]
    fn small_cycles_and_paths() {
        assert_eq!(maximum_matching_size(&cycle(4)), 2);
        assert_eq!(maximum_matching_size(&cycle(5)), 2);
        assert_eq!(maximum_matching_size(&cycle(7)), 3);
        assert_eq!(maximum_matching_size(&path(2)), 1);
        assert_eq!(maximum_matching_size(&path(5)), 2);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let mut g = MatchGraph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        assert_eq!(maximum_matching_size(&g), 5);
    }

    #[test]
    fn blossom_forces_contraction() {
        // triangle with two pendants: matching size 2 needs the odd cycle handled
        let mut g = MatchGraph::new(5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(0, 3);
        g.add_edge(1, 4);
        assert_eq!(maximum_matching_size(&g), 2);
    }

    #[test]
    fn matching_is_consistent() {
        let g = cycle(9);
        let mate = maximum_matching(&g);
        for (v, m) in mate.iter().enumerate() {
            if let Some(m) = m {
                assert_eq!(mate[*m as usize], Some(v as u32));
            }
        }
    }
}
