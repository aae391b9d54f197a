//! Exhaustive oracles for desk-scale graphs.
//!
//! Everything here is exponential and guarded by a vertex-count cap. These
//! are the ground truth the polynomial algorithms are checked against, so they
//! deliberately avoid any of the structure those algorithms exploit.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::propagation::{closure_mask, full_mask, ThresholdAssignment};
use crate::rational::{self, Rational};

pub const DEFAULT_DYNAMO_CAP: usize = 20;
pub const DEFAULT_LDYN_CAP: usize = 8;
pub const DEFAULT_COVER_CAP: usize = 25;

/// A threshold assignment within budget together with one of its minimum dynamos.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdynWitness {
    pub value: usize,
    pub tau: ThresholdAssignment,
    pub dynamo: Vec<usize>,
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > crate::graph::MASK_LIMIT {
        Err(Error::CapExceeded {
            n,
            cap: cap.min(crate::graph::MASK_LIMIT),
        })
    } else {
        Ok(())
    }
}

fn bits_to_vec(mut bits: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(bits.count_ones() as usize);
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}

/// Calls `visit` on every `k`-subset of `pool` (as a bitmask), in lexicographic
/// order of the sorted index tuples. Stops early on `Break`.
fn for_each_subset<B>(
    pool: &[usize],
    k: usize,
    mut visit: impl FnMut(u64) -> ControlFlow<B>,
) -> Option<B> {
    if k > pool.len() {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let bits = idx.iter().fold(0u64, |b, &i| b | 1 << pool[i]);
        if let ControlFlow::Break(b) = visit(bits) {
            return Some(b);
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < pool.len() - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest dynamo of size at most `limit` on a bitmask graph, first in
/// (size, lexicographic) order.
///
/// Self-opinioned vertices belong to every dynamo and vertices with threshold
/// zero belong to no minimum one, so only the remaining vertices are searched.
/// Neither restriction changes which set comes first in that order.
pub(crate) fn smallest_dynamo_mask(masks: &[u64], tau: &[u32], limit: usize) -> Option<u64> {
    let n = masks.len();
    let full = full_mask(n);
    let forced = (0..n)
        .filter(|&v| tau[v] > masks[v].count_ones())
        .fold(0u64, |b, v| b | 1 << v);
    let pool: Vec<usize> = (0..n)
        .filter(|&v| forced >> v & 1 == 0 && tau[v] > 0)
        .collect();
    let base = forced.count_ones() as usize;
    for extra in 0..=pool.len() {
        if base + extra > limit {
            return None;
        }
        let found = for_each_subset(&pool, extra, |bits| {
            let seed = bits | forced;
            if closure_mask(masks, tau, seed) == full {
                ControlFlow::Break(seed)
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

fn dyn_mask(masks: &[u64], tau: &[u32]) -> u64 {
    smallest_dynamo_mask(masks, tau, masks.len()).expect("V is always a dynamo")
}

/// Minimum dynamo size and the first minimum dynamo in (size, lexicographic) order.
pub fn min_dynamo(g: &Graph, tau: &ThresholdAssignment, cap: usize) -> Result<(usize, Vec<usize>)> {
    tau.check_against(g)?;
    check_cap(g.n(), cap)?;
    let masks = g.masks().expect("within mask limit");
    let bits = dyn_mask(masks, tau.values());
    Ok((bits.count_ones() as usize, bits_to_vec(bits)))
}

/// Walks integer vectors `x` with `x[v] <= upper[v]` in lexicographic order,
/// restricted to `sum(x) <= budget` (or `== budget` when `exact`).
fn for_each_assignment<B>(
    upper: &[u32],
    budget: u64,
    exact: bool,
    mut visit: impl FnMut(&[u32]) -> ControlFlow<B>,
) -> Option<B> {
    let n = upper.len();
    // suffix[i]: largest total reachable by positions i..
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + u64::from(upper[i]);
    }
    if exact && suffix[0] < budget {
        return None;
    }
    let mut x = vec![0u32; n];
    fn rec<B>(
        i: usize,
        left: u64,
        upper: &[u32],
        suffix: &[u64],
        exact: bool,
        x: &mut [u32],
        visit: &mut dyn FnMut(&[u32]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if i == x.len() {
            return if !exact || left == 0 {
                visit(x)
            } else {
                ControlFlow::Continue(())
            };
        }
        let hi = u64::from(upper[i]).min(left);
        // with an exact total the tail must still be able to absorb what is left
        let lo = if exact {
            left.saturating_sub(suffix[i + 1])
        } else {
            0
        };
        for value in lo..=hi {
            x[i] = value as u32;
            rec(i + 1, left - value, upper, suffix, exact, x, visit)?;
        }
        x[i] = 0;
        ControlFlow::Continue(())
    }
    match rec(0, budget, upper, &suffix, exact, &mut x, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

fn threshold_caps(g: &Graph, allow_self_opinioned: bool) -> Vec<u32> {
    g.degrees()
        .into_iter()
        .map(|d| d as u32 + u32::from(allow_self_opinioned))
        .collect()
}

/// Worst-case minimum dynamo size over all threshold assignments with average
/// at most `t`, by exhaustive enumeration.
///
/// Thresholds range over `0..=deg(v)`, or `0..=deg(v)+1` when self-opinioned
/// vertices are allowed. Returns the lexicographically least maximizing
/// assignment and its first minimum dynamo.
pub fn ldyn_brute(
    g: &Graph,
    t: Rational,
    allow_self_opinioned: bool,
    cap: usize,
) -> Result<LdynWitness> {
    let t = rational::nonnegative("t", t)?;
    check_cap(g.n(), cap)?;
    let masks = g.masks().expect("within mask limit");
    let n = g.n();
    let budget = rational::threshold_budget(t, n);
    let upper = threshold_caps(g, allow_self_opinioned);

    let mut best: Option<(usize, Vec<u32>, u64)> = None;
    for_each_assignment(&upper, budget, false, |tau| {
        // only a strictly larger value replaces the incumbent
        if let Some((incumbent, ..)) = &best {
            if smallest_dynamo_mask(masks, tau, *incumbent).is_some() {
                return ControlFlow::Continue(());
            }
        }
        let bits = dyn_mask(masks, tau);
        best = Some((bits.count_ones() as usize, tau.to_vec(), bits));
        if bits.count_ones() as usize == n {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let (value, tau, bits) = best.expect("the zero assignment is always within budget");
    Ok(LdynWitness {
        value,
        tau: ThresholdAssignment::new(tau),
        dynamo: bits_to_vec(bits),
    })
}

/// Whether some assignment with `tau(v) <= deg(v)` and total exactly
/// `floor(n * k * eps(G))` has minimum dynamo size at least `d`.
pub fn decide_ldynamo(g: &Graph, k: Rational, d: usize, cap: usize) -> Result<bool> {
    let k = rational::positive("k", k)?;
    if k > Rational::from_integer(2) {
        return Err(Error::InvalidParameter(format!(
            "k must lie in (0, 2], got {k}"
        )));
    }
    check_cap(g.n(), cap)?;
    // n * eps(G) = m
    let budget = rational::floor(k * Rational::from_integer(g.m() as i64)) as u64;
    let masks = g.masks().expect("within mask limit");
    let upper = threshold_caps(g, false);
    let found = for_each_assignment(&upper, budget, true, |tau| {
        let small = d
            .checked_sub(1)
            .and_then(|lim| smallest_dynamo_mask(masks, tau, lim));
        if small.is_none() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found.is_some())
}

/// Minimum vertex cover by exhaustive search over one vertex set, first in
/// (size, lexicographic) order.
pub fn min_vertex_cover_brute(g: &Graph, cap: usize) -> Result<(usize, Vec<usize>)> {
    check_cap(g.n(), cap)?;
    let edges: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| 1u64 << u | 1u64 << v)
        .collect();
    let pool: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    for k in 0..=pool.len() {
        let hit = for_each_subset(&pool, k, |bits| {
            if edges.iter().all(|&e| e & bits != 0) {
                ControlFlow::Break(bits)
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(bits) = hit {
            return Ok((k, bits_to_vec(bits)));
        }
    }
    unreachable!("the non-isolated vertices always cover every edge")
}

/// Minimum vertex cover of a forest by dynamic programming, each tree rooted
/// at its smallest vertex. Ties prefer leaving a vertex out.
pub fn min_vertex_cover_forest(g: &Graph) -> Result<(usize, Vec<usize>)> {
    if !g.is_forest() {
        return Err(Error::NotForest);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
    }
    // out[v]: best cover of v's subtree with v excluded; inn[v]: with v included
    let mut out = vec![0usize; n];
    let mut inn = vec![1usize; n];
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX {
            out[p] += inn[v];
            inn[p] += out[v].min(inn[v]);
        }
    }
    let mut take = vec![false; n];
    for &v in &order {
        let p = parent[v];
        take[v] = if p == usize::MAX || take[p] {
            inn[v] < out[v]
        } else {
            true
        };
    }
    let cover: Vec<usize> = (0..n).filter(|&v| take[v]).collect();
    Ok((cover.len(), cover))
}

/// Minimum vertex cover, component by component: tree components by dynamic
/// programming, any other component by exhaustive search up to `cap` vertices.
pub fn min_vertex_cover(g: &Graph, cap: usize) -> Result<(usize, Vec<usize>)> {
    let mut cover = Vec::new();
    for comp in g.components() {
        let (h, map) = g.induced(&comp);
        let (_, local) = if h.m() + 1 == h.n() {
            min_vertex_cover_forest(&h)?
        } else {
            min_vertex_cover_brute(&h, cap)?
        };
        cover.extend(local.into_iter().map(|v| map[v]));
    }
    cover.sort_unstable();
    Ok((cover.len(), cover))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::propagation::is_dynamo;

    fn tau(v: &[u32]) -> ThresholdAssignment {
        ThresholdAssignment::new(v.to_vec())
    }

    #[test]
    fn subsets_come_in_lexicographic_order() {
        let mut seen = Vec::new();
        for_each_subset::<()>(&[0, 2, 5], 2, |b| {
            seen.push(bits_to_vec(b));
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![vec![0, 2], vec![0, 5], vec![2, 5]]);
        let mut empty = 0;
        for_each_subset::<()>(&[1, 2], 0, |b| {
            assert_eq!(b, 0);
            empty += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(empty, 1);
    }

    #[test]
    fn assignments_respect_budget_and_order() {
        let mut seen = Vec::new();
        for_each_assignment::<()>(&[1, 2], 2, false, |x| {
            seen.push(x.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(
            seen,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1]]
        );
        seen.clear();
        for_each_assignment::<()>(&[1, 2], 2, true, |x| {
            seen.push(x.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![vec![0, 2], vec![1, 1]]);
    }

    #[test]
    fn min_dynamo_examples() {
        let g = cycle(5);
        assert_eq!(
            min_dynamo(&g, &ThresholdAssignment::zeros(5), 20).unwrap(),
            (0, vec![])
        );
        assert_eq!(
            min_dynamo(&complete(2), &tau(&[1, 1]), 20).unwrap(),
            (1, vec![0])
        );
        assert_eq!(
            min_dynamo(&cycle(4), &tau(&[2; 4]), 20).unwrap(),
            (2, vec![0, 2])
        );
        assert_eq!(
            min_dynamo(&Graph::empty(21), &ThresholdAssignment::zeros(21), 20),
            Err(Error::CapExceeded { n: 21, cap: 20 })
        );
    }

    #[test]
    fn min_dynamo_forces_self_opinioned_vertices() {
        // P3, ends self-opinioned, centre needs both neighbours
        let (size, set) = min_dynamo(&path(3), &tau(&[2, 2, 5]), 20).unwrap();
        assert_eq!((size, set.clone()), (2, vec![0, 2]));
        assert!(is_dynamo(&path(3), &tau(&[2, 2, 5]), &set).unwrap());
    }

    #[test]
    fn ldyn_brute_examples() {
        assert_eq!(
            ldyn_brute(&Graph::empty(1), Rational::from_integer(3), false, 8)
                .unwrap()
                .value,
            0
        );
        let star = star(3);
        let one = Rational::from_integer(1);
        assert_eq!(ldyn_brute(&star, one, false, 8).unwrap().value, 1);
        let w = ldyn_brute(&star, one, true, 8).unwrap();
        assert_eq!(w.value, 2);
        // budget 4 spent as deg+1 = 2 on two leaves
        assert_eq!(w.tau.values(), &[0, 0, 2, 2]);
        assert_eq!(w.dynamo, vec![2, 3]);
        assert!(ldyn_brute(&Graph::empty(9), one, false, 8).is_err());
        assert!(ldyn_brute(&star, Rational::new(-1, 2), false, 8).is_err());
    }

    #[test]
    fn ldyn_witness_is_lexicographically_least() {
        // Recompute by a plain scan without the early-exit shortcut.
        let g = path(4);
        let t = Rational::new(3, 2);
        let masks = g.masks().unwrap();
        let mut best: Option<(usize, Vec<u32>)> = None;
        for_each_assignment::<()>(&threshold_caps(&g, false), 6, false, |x| {
            let d = dyn_mask(masks, x).count_ones() as usize;
            if best.as_ref().is_none_or(|b| d > b.0) {
                best = Some((d, x.to_vec()));
            }
            ControlFlow::Continue(())
        });
        let w = ldyn_brute(&g, t, false, 8).unwrap();
        assert_eq!((w.value, w.tau.values().to_vec()), best.unwrap());
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(min_vertex_cover(&complete(2), 25).unwrap().0, 1);
        assert_eq!(min_vertex_cover(&cycle(5), 25).unwrap().0, 3);
        for p in 1..=12 {
            let g = path(p);
            let dp = min_vertex_cover_forest(&g).unwrap();
            let bf = min_vertex_cover_brute(&g, 25).unwrap();
            assert_eq!(dp.0, p / 2);
            assert_eq!(bf.0, p / 2);
        }
        assert_eq!(min_vertex_cover_forest(&cycle(4)), Err(Error::NotForest));
    }

    #[test]
    fn vertex_cover_mixes_components() {
        // a triangle plus a 30-vertex path: brute force alone would be capped
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend((3..32).map(|v| (v, v + 1)));
        let g = Graph::from_edges(33, edges).unwrap();
        let (size, cover) = min_vertex_cover(&g, 25).unwrap();
        assert_eq!(size, 2 + 15);
        for &(u, v) in g.edges() {
            assert!(cover.contains(&u) || cover.contains(&v));
        }
    }

    #[test]
    fn decide_examples() {
        let k2 = complete(2);
        let two = Rational::from_integer(2);
        assert!(decide_ldynamo(&k2, two, 1, 8).unwrap());
        assert!(!decide_ldynamo(&k2, two, 2, 8).unwrap());
        assert!(decide_ldynamo(&cycle(5), Rational::new(1, 3), 0, 8).unwrap());
        assert!(decide_ldynamo(&k2, Rational::from_integer(3), 1, 8).is_err());
        assert!(decide_ldynamo(&k2, Rational::from_integer(0), 1, 8).is_err());
    }
}
