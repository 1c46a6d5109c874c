//! Ground-truth exact solving and solution verification.
//!
//! `brute_force_optimum` is the reference every solver is tested against; it
//! shares the conflict-graph construction with the conflict solver but is
//! cross-checked in the test suite by a plain subset scan.

use thiserror::Error;

use crate::conflict::{build_conflict, max_independent_set_size_within, MisSolver};
use crate::graph::{Graph, Mode, PackingSolution, PatternSubgraph};

pub const DEFAULT_ORACLE_BOUND: usize = 22;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("list has {len} entries, above the configured oracle bound {bound}")]
    TooLarge { len: usize, bound: usize },
    #[error("solution index {index} is out of range (list has {len} entries)")]
    IndexOutOfRange { index: u32, len: usize },
}

/// Why a solution is invalid: the first conflicting pair and what they share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub first: u32,
    pub second: u32,
    pub shared_vertex: Option<u32>,
    pub shared_edge: Option<(u32, u32)>,
}

/// Check pairwise disjointness of a solution in its mode. Returns the first
/// conflicting pair (in index order) or `Ok(())`.
pub fn verify_solution(
    g: &Graph,
    list: &[PatternSubgraph],
    sol: &PackingSolution,
) -> Result<Result<(), Conflict>, OracleError> {
    for &idx in &sol.indices {
        if idx as usize >= list.len() {
            return Err(OracleError::IndexOutOfRange {
                index: idx,
                len: list.len(),
            });
        }
    }
    let _ = g;
    for (a, &i) in sol.indices.iter().enumerate() {
        for &j in sol.indices.iter().skip(a + 1) {
            let (p, q) = (&list[i as usize], &list[j as usize]);
            match sol.mode {
                Mode::Vertex => {
                    if let Some(&v) = p.vertices().iter().find(|v| q.vertices().contains(v)) {
                        return Ok(Err(Conflict {
                            first: i,
                            second: j,
                            shared_vertex: Some(v),
                            shared_edge: None,
                        }));
                    }
                }
                Mode::Edge => {
                    if let Some(&e) = p.edges().iter().find(|e| q.edges().contains(e)) {
                        return Ok(Err(Conflict {
                            first: i,
                            second: j,
                            shared_vertex: None,
                            shared_edge: Some(e),
                        }));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Result of an exact oracle run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: usize,
    pub witness: PackingSolution,
    pub explored: u64,
}

/// Exact maximum packing by branch and bound over the conflict graph, with
/// the default list-size guard.
pub fn brute_force_optimum(
    g: &Graph,
    list: &[PatternSubgraph],
    mode: Mode,
) -> Result<OracleResult, OracleError> {
    brute_force_optimum_bounded(g, list, mode, DEFAULT_ORACLE_BOUND)
}

/// Exact maximum packing with an explicit list-size bound. The witness is
/// deterministic: the lexicographically least maximum solution.
pub fn brute_force_optimum_bounded(
    g: &Graph,
    list: &[PatternSubgraph],
    mode: Mode,
    bound: usize,
) -> Result<OracleResult, OracleError> {
    if list.len() > bound {
        return Err(OracleError::TooLarge {
            len: list.len(),
            bound,
        });
    }
    let cg = build_conflict(g, list, mode);
    let mut solver = MisSolver::new(&cg);
    let all: Vec<u32> = (0..cg.node_count() as u32).collect();
    let (optimum, _) = solver.solve(&all);
    let mut explored = solver.explored;

    // lexicographically least maximum independent set: grow greedily, keeping
    // index i only if the optimum is still reachable among later indices
    let mut chosen: Vec<u32> = Vec::new();
    for i in 0..cg.node_count() as u32 {
        if chosen
            .iter()
            .any(|&c| cg.are_adjacent(c as usize, i as usize))
        {
            continue;
        }
        let remaining: Vec<u32> = (i + 1..cg.node_count() as u32)
            .filter(|&j| {
                !cg.are_adjacent(i as usize, j as usize)
                    && !chosen.iter().any(|&c| cg.are_adjacent(c as usize, j as usize))
            })
            .collect();
        let reachable = chosen.len() + 1 + max_independent_set_size_within(&cg, &remaining);
        explored += 1;
        if reachable >= optimum {
            chosen.push(i);
        }
        if chosen.len() == optimum {
            break;
        }
    }
    debug_assert_eq!(chosen.len(), optimum);

    Ok(OracleResult {
        optimum,
        witness: PackingSolution::new(mode, chosen),
        explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_instance, PatternKind};

    #[test]
    fn empty_selection_verifies() {
        let (g, list) = parse_instance("3 3\n0 1\n1 2\n2 0\n1\nC 0 1 1 2 2 0\n").unwrap();
        let sol = PackingSolution::new(Mode::Vertex, vec![]);
        assert_eq!(verify_solution(&g, &list, &sol), Ok(Ok(())));
    }

    #[test]
    fn disjoint_triangles_verify() {
        let text = "6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2\nC 0 1 1 2 2 0\nC 3 4 4 5 5 3\n";
        let (g, list) = parse_instance(text).unwrap();
        let sol = PackingSolution::new(Mode::Vertex, vec![0, 1]);
        assert_eq!(verify_solution(&g, &list, &sol), Ok(Ok(())));
    }

    #[test]
    fn shared_edge_is_reported() {
        // two C4s sharing edge (0,1)
        let text = "6 7\n0 1\n1 2\n2 3\n3 0\n1 4\n4 5\n5 0\n2\nC 0 1 1 2 2 3 3 0\nC 0 1 1 4 4 5 5 0\n";
        let (g, list) = parse_instance(text).unwrap();
        let sol = PackingSolution::new(Mode::Edge, vec![0, 1]);
        let conflict = verify_solution(&g, &list, &sol).unwrap().unwrap_err();
        assert_eq!(conflict.first, 0);
        assert_eq!(conflict.second, 1);
        assert_eq!(conflict.shared_edge, Some((0, 1)));
    }

    #[test]
    fn out_of_range_index_errors() {
        let (g, list) = parse_instance("2 1\n0 1\n0\n").unwrap();
        let sol = PackingSolution::new(Mode::Edge, vec![3]);
        assert!(matches!(
            verify_solution(&g, &list, &sol),
            Err(OracleError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn empty_list_optimum_is_zero() {
        let (g, list) = parse_instance("2 1\n0 1\n0\n").unwrap();
        let res = brute_force_optimum(&g, &list, Mode::Edge).unwrap();
        assert_eq!(res.optimum, 0);
        assert!(res.witness.indices.is_empty());
    }

    #[test]
    fn three_disjoint_triangles() {
        let mut edges = Vec::new();
        for b in 0..3usize {
            let o = 3 * b;
            edges.extend([(o, o + 1), (o + 1, o + 2), (o + 2, o)]);
        }
        let g = Graph::from_edges(9, edges).unwrap();
        let list: Vec<_> = (0..3usize)
            .map(|b| {
                let o = 3 * b;
                PatternSubgraph::new(
                    &g,
                    PatternKind::Cycle,
                    vec![(o, o + 1), (o + 1, o + 2), (o + 2, o)],
                    b,
                )
                .unwrap()
            })
            .collect();
        let res = brute_force_optimum(&g, &list, Mode::Vertex).unwrap();
        assert_eq!(res.optimum, 3);
        assert_eq!(res.witness.indices, vec![0, 1, 2]);
    }

    #[test]
    fn size_guard_rejects_large_lists() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let p = PatternSubgraph::new(&g, PatternKind::Path, vec![(0, 1)], 0).unwrap();
        let list = vec![p; 30];
        assert!(matches!(
            brute_force_optimum(&g, &list, Mode::Vertex),
            Err(OracleError::TooLarge { .. })
        ));
        assert!(brute_force_optimum_bounded(&g, &list, Mode::Vertex, 64).is_ok());
    }

    #[test]
    fn witness_is_deterministic_and_valid() {
        let text = "6 7\n0 1\n1 2\n2 3\n3 0\n1 4\n4 5\n5 0\n2\nC 0 1 1 2 2 3 3 0\nC 0 1 1 4 4 5 5 0\n";
        let (g, list) = parse_instance(text).unwrap();
        let a = brute_force_optimum(&g, &list, Mode::Edge).unwrap();
        let b = brute_force_optimum(&g, &list, Mode::Edge).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.optimum, 1);
        assert_eq!(a.witness.indices, vec![0], "lexicographically least");
        assert_eq!(verify_solution(&g, &list, &a.witness), Ok(Ok(())));
    }
}
