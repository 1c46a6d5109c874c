//! Exhaustive enumeration of small pattern subgraphs of a host graph.
//!
//! Used to materialize "full" packing lists (every copy of C_l, every path
//! on l vertices, every star) on desk-sized instances.

use crate::graph::{Graph, PatternKind, PatternSubgraph};

/// All cycles with exactly `len` vertices, each reported once.
pub fn all_cycles(g: &Graph, len: usize) -> Vec<PatternSubgraph> {
    assert!(len >= 3);
    let mut out = Vec::new();
    let mut path: Vec<u32> = Vec::with_capacity(len);
    for start in 0..g.vertex_count() as u32 {
        path.push(start);
        extend_cycle(g, len, start, &mut path, &mut out);
        path.pop();
    }
    out
}

fn extend_cycle(
    g: &Graph,
    len: usize,
    start: u32,
    path: &mut Vec<u32>,
    out: &mut Vec<PatternSubgraph>,
) {
    let last = *path.last().unwrap();
    if path.len() == len {
        // close the cycle; canonical if second vertex < last vertex
        if g.has_edge(last as usize, start as usize) && path[1] < last {
            let edges: Vec<(usize, usize)> = path
                .windows(2)
                .map(|w| (w[0] as usize, w[1] as usize))
                .chain(std::iter::once((last as usize, start as usize)))
                .collect();
            out.push(
                PatternSubgraph::new(g, PatternKind::Cycle, edges, out.len())
                    .expect("enumerated cycle is valid"),
            );
        }
        return;
    }
    for &w in g.neighbors(last as usize) {
        // keep `start` minimal in the cycle so each is found once per direction
        if w <= start || path.contains(&w) {
            continue;
        }
        path.push(w);
        extend_cycle(g, len, start, path, out);
        path.pop();
    }
}

/// All paths on exactly `vertices` vertices, each reported once.
pub fn all_paths(g: &Graph, vertices: usize) -> Vec<PatternSubgraph> {
    assert!(vertices >= 2);
    let mut out = Vec::new();
    let mut path: Vec<u32> = Vec::with_capacity(vertices);
    for start in 0..g.vertex_count() as u32 {
        path.push(start);
        extend_path(g, vertices, &mut path, &mut out);
        path.pop();
    }
    out
}

fn extend_path(g: &Graph, vertices: usize, path: &mut Vec<u32>, out: &mut Vec<PatternSubgraph>) {
    if path.len() == vertices {
        // canonical direction: first endpoint < last endpoint
        if path[0] < *path.last().unwrap() {
            let edges: Vec<(usize, usize)> = path
                .windows(2)
                .map(|w| (w[0] as usize, w[1] as usize))
                .collect();
            out.push(
                PatternSubgraph::new(g, PatternKind::Path, edges, out.len())
                    .expect("enumerated path is valid"),
            );
        }
        return;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last as usize) {
        if path.contains(&w) {
            continue;
        }
        path.push(w);
        extend_path(g, vertices, path, out);
        path.pop();
    }
}

/// All stars K_{1,leaves}: a center plus a choice of `leaves` neighbors.
pub fn all_stars(g: &Graph, leaves: usize) -> Vec<PatternSubgraph> {
    assert!(leaves >= 1);
    let mut out = Vec::new();
    for center in 0..g.vertex_count() {
        let nb = g.neighbors(center);
        if nb.len() < leaves {
            continue;
        }
        let mut pick = vec![0usize; leaves];
        choose(nb.len(), leaves, 0, 0, &mut pick, &mut |sel: &[usize]| {
            let edges: Vec<(usize, usize)> =
                sel.iter().map(|&i| (center, nb[i] as usize)).collect();
            let kind = if leaves == 1 {
                PatternKind::Path
            } else {
                PatternKind::Generic
            };
            out.push(
                PatternSubgraph::new(g, kind, edges, 0).expect("enumerated star is valid"),
            );
        });
    }
    out
}

fn choose(
    n: usize,
    k: usize,
    start: usize,
    depth: usize,
    pick: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        emit(pick);
        return;
    }
    for i in start..n {
        pick[depth] = i;
        choose(n, k, i + 1, depth + 1, pick, emit);
    }
}
