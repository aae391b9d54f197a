//! Graph families shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use ldyn::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices (`n <= 6`), found by minimising the edge mask over all relabelings.
pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    assert!(
        n <= 6,
        "permutation canonisation is only practical for n <= 6"
    );
    let pairs = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    // relabeling as a map on pair positions
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(u, v)| index[p[u]][p[v]]).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canon = perms
            .iter()
            .map(|pm| {
                pm.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |c, (_, &j)| c | 1 << j)
            })
            .min()
            .unwrap_or(mask);
        if canon == mask && seen.insert(canon) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

/// Every isomorphism class of graphs with `1..=max_n` vertices.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_of_order).collect()
}

fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_code(g: &Graph, comp: &[usize]) -> String {
    // centres: strip leaves until at most two vertices remain
    let inside: HashSet<usize> = comp.iter().copied().collect();
    let mut deg: BTreeMap<usize, usize> = comp.iter().map(|&v| (v, g.degree(v))).collect();
    let mut layer: Vec<usize> = comp.iter().copied().filter(|&v| deg[&v] <= 1).collect();
    let mut left = comp.len();
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg.insert(v, 0);
            for &w in g.neighbors(v) {
                if inside.contains(&w) && deg[&w] > 0 {
                    let d = deg.get_mut(&w).unwrap();
                    *d -= 1;
                    if *d == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(g, c, usize::MAX))
        .min()
        .unwrap()
}

/// Canonical string of a forest: sorted centre-rooted codes of its trees.
pub fn forest_code(g: &Graph) -> String {
    let mut codes: Vec<String> = g.components().iter().map(|c| tree_code(g, c)).collect();
    codes.sort();
    codes.concat()
}

/// One representative of every isomorphism class of forests on exactly `n`
/// vertices. Every forest has a labeling in which each vertex is isolated
/// from or attached to an earlier one, so parent vectors reach them all.
pub fn forests_of_order(n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // parent[v] in 0..=v, where v itself means "starts a new tree"
    let mut parent = vec![0usize; n];
    loop {
        let edges = (1..n).filter(|&v| parent[v] < v).map(|v| (parent[v], v));
        let g = Graph::from_edges(n, edges).unwrap();
        if seen.insert(forest_code(&g)) {
            out.push(g);
        }
        let mut v = n;
        loop {
            if v <= 1 {
                return out;
            }
            v -= 1;
            if parent[v] < v {
                parent[v] += 1;
                break;
            }
            parent[v] = 0;
        }
    }
}

pub fn forests_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(forests_of_order).collect()
}

/// Calls `visit` on every vector `x` with `x[v] <= upper[v]`.
pub fn for_each_vector(upper: &[u32], mut visit: impl FnMut(&[u32])) {
    let mut x = vec![0u32; upper.len()];
    loop {
        visit(&x);
        let mut i = 0;
        loop {
            if i == x.len() {
                return;
            }
            if x[i] < upper[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}
