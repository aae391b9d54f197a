//! Rewrites of threshold assignments that preserve or lower the total.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::min_dynamo;
use crate::graph::Graph;
use crate::propagation::{is_resistant, ThresholdAssignment};

/// `sum over v with t1(v) > t2(v) of t1(v) - t2(v)`.
pub fn delta(t1: &ThresholdAssignment, t2: &ThresholdAssignment) -> Result<u64> {
    if t1.len() != t2.len() {
        return Err(Error::LengthMismatch {
            expected: t1.len(),
            found: t2.len(),
        });
    }
    Ok(t1
        .values()
        .iter()
        .zip(t2.values())
        .map(|(&a, &b)| u64::from(a.saturating_sub(b)))
        .sum())
}

/// Assignments from `t1` to `t2`, each step moving one unit of threshold from
/// one vertex to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterpolationChain {
    pub steps: Vec<ThresholdAssignment>,
}

impl InterpolationChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of unit moves, equal to `delta(first, last)`.
    pub fn transitions(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn first(&self) -> &ThresholdAssignment {
        &self.steps[0]
    }

    pub fn last(&self) -> &ThresholdAssignment {
        &self.steps[self.steps.len() - 1]
    }
}

fn check_pair(g: &Graph, t1: &ThresholdAssignment, t2: &ThresholdAssignment) -> Result<()> {
    t1.check_against(g)?;
    t2.check_against(g)?;
    if t1.total() != t2.total() {
        return Err(Error::UnequalTotals {
            left: t1.total(),
            right: t2.total(),
        });
    }
    Ok(())
}

/// Walks from `t1` to `t2` by repeatedly lowering the smallest-index vertex
/// still above its target and raising the smallest-index vertex still below
/// it. Has `delta(t1, t2) + 1` entries, `t1` first and `t2` last.
pub fn interpolation_chain(
    g: &Graph,
    t1: &ThresholdAssignment,
    t2: &ThresholdAssignment,
) -> Result<InterpolationChain> {
    check_pair(g, t1, t2)?;
    let target = t2.values();
    let mut current = t1.clone();
    let mut steps = vec![current.clone()];
    // equal totals: an excess somewhere implies a deficit somewhere
    while let Some(w) = (0..g.n()).find(|&v| current.get(v) > target[v]) {
        let u = (0..g.n())
            .find(|&v| current.get(v) < target[v])
            .expect("equal totals");
        current.set(w, current.get(w) - 1);
        current.set(u, current.get(u) + 1);
        steps.push(current.clone());
    }
    Ok(InterpolationChain { steps })
}

/// First assignment on the chain from `t1` to `t2` whose minimum dynamo has
/// size exactly `r`. Consecutive chain entries differ in minimum dynamo size
/// by at most one, so every value between the endpoints' is met.
pub fn find_intermediate(
    g: &Graph,
    t1: &ThresholdAssignment,
    t2: &ThresholdAssignment,
    r: usize,
    cap: usize,
) -> Result<ThresholdAssignment> {
    let chain = interpolation_chain(g, t1, t2)?;
    let d1 = min_dynamo(g, t1, cap)?.0;
    let d2 = min_dynamo(g, t2, cap)?.0;
    let (lo, hi) = (d1.min(d2), d1.max(d2));
    if r < lo || r > hi {
        return Err(Error::TargetOutOfRange { r, lo, hi });
    }
    for step in chain.steps {
        if min_dynamo(g, &step, cap)?.0 == r {
            return Ok(step);
        }
    }
    unreachable!("a chain whose dynamo sizes move by at most one meets every intermediate value")
}

/// Zeroes the thresholds of a triangle-free resistant set `h` except on the
/// endpoints of the edge `uv`, which get their full degree. The total never
/// increases.
pub fn triangle_free_rewrite(
    g: &Graph,
    tau: &ThresholdAssignment,
    h: &[usize],
    u: usize,
    v: usize,
) -> Result<ThresholdAssignment> {
    tau.check_against(g)?;
    if h.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut inside = vec![false; g.n()];
    for &w in h {
        g.check_vertex(w)?;
        inside[w] = true;
    }
    if !g.has_edge(u, v) || !inside[u] || !inside[v] {
        return Err(Error::NotAnEdge { u, v });
    }
    if let Some(tri) = find_triangle(g, &inside) {
        return Err(Error::ContainsTriangle(tri));
    }
    if !is_resistant(g, tau, h)? {
        let vertex = crate::propagation::first_violation(g, tau, &inside, h.iter().copied())
            .expect("some vertex violates resistance");
        return Err(Error::NotResistant { vertex });
    }
    let mut out = tau.clone();
    for &w in h {
        out.set(w, 0);
    }
    out.set(u, g.degree(u) as u32);
    out.set(v, g.degree(v) as u32);
    debug_assert!(out.total() <= tau.total());
    Ok(out)
}

fn find_triangle(g: &Graph, inside: &[bool]) -> Option<[usize; 3]> {
    for &(a, b) in g.edges() {
        if !inside[a] || !inside[b] {
            continue;
        }
        // sorted adjacency lists: intersect for a common neighbour above b
        if let Some(&c) = g
            .neighbors(a)
            .iter()
            .find(|&&c| c > b && inside[c] && g.has_edge(b, c))
        {
            return Some([a, b, c]);
        }
    }
    None
}
