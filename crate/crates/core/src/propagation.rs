//! Threshold assignments, the synchronous activation process, and resistant
//! subgraphs.
//!
//! A vertex `v` outside the active set joins in the next round once at least
//! `tau(v)` of its neighbours are active. A seed is a dynamo when the process
//! activates every vertex. Dually, an induced subgraph `K` is resistant when
//! every `v` in `K` satisfies `deg_K(v) >= deg_G(v) - tau(v) + 1`; a seed is a
//! dynamo exactly when its complement contains no resistant subgraph.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Per-vertex nonnegative thresholds, indexed by vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ThresholdAssignment(Vec<u32>);

impl fmt::Debug for ThresholdAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau{:?}", self.0)
    }
}

impl From<Vec<u32>> for ThresholdAssignment {
    fn from(values: Vec<u32>) -> Self {
        Self(values)
    }
}

impl ThresholdAssignment {
    pub fn new(values: Vec<u32>) -> Self {
        Self(values)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `tau(v) = deg(v)` everywhere.
    pub fn degrees(g: &Graph) -> Self {
        Self(g.degrees().into_iter().map(|d| d as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, value: u32) {
        self.0[v] = value;
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// Average threshold as an exact rational.
    pub fn average(&self) -> Result<Rational> {
        if self.0.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(self.total() as i64, self.0.len() as i64))
    }

    /// `tau(v) >= deg(v) + 1`: the vertex can only ever be activated by seeding.
    pub fn is_self_opinioned(&self, g: &Graph, v: usize) -> bool {
        self.0[v] as usize > g.degree(v)
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.0.len() == g.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.n(),
                found: self.0.len(),
            })
        }
    }

    /// Threshold file: one nonnegative integer per line, in vertex order.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut values = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let value = line.parse::<u32>().map_err(|_| ParseError::MalformedLine {
                line: i + 1,
                reason: format!("expected a nonnegative integer threshold, found {line:?}"),
            })?;
            values.push(value);
        }
        Ok(Self(values))
    }

    pub fn to_text(&self) -> String {
        self.0.iter().map(|v| format!("{v}\n")).collect()
    }
}

/// Rounds `D_0, ..., D_k` of the activation process and the vertices it never reaches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub rounds: Vec<Vec<usize>>,
    pub unactivated: Vec<usize>,
}

impl PropagationTrace {
    pub fn is_complete(&self) -> bool {
        self.unactivated.is_empty()
    }

    pub fn activated(&self) -> impl Iterator<Item = usize> + '_ {
        self.rounds.iter().flatten().copied()
    }
}

fn seed_flags(g: &Graph, seed: &[usize]) -> Result<Vec<bool>> {
    let mut flags = vec![false; g.n()];
    for &v in seed {
        g.check_vertex(v)?;
        flags[v] = true;
    }
    Ok(flags)
}

/// Runs the synchronous process from `seed` to its fixpoint.
pub fn propagate(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> Result<PropagationTrace> {
    tau.check_against(g)?;
    let mut active = seed_flags(g, seed)?;
    let mut hits = vec![0u32; g.n()];
    let first: Vec<usize> = (0..g.n()).filter(|&v| active[v]).collect();
    for &v in &first {
        for &w in g.neighbors(v) {
            hits[w] += 1;
        }
    }
    let mut rounds = vec![first];
    loop {
        let next: Vec<usize> = (0..g.n())
            .filter(|&v| !active[v] && hits[v] >= tau.get(v))
            .collect();
        if next.is_empty() {
            break;
        }
        for &v in &next {
            active[v] = true;
        }
        for &v in &next {
            for &w in g.neighbors(v) {
                hits[w] += 1;
            }
        }
        rounds.push(next);
    }
    let unactivated = (0..g.n()).filter(|&v| !active[v]).collect();
    Ok(PropagationTrace {
        rounds,
        unactivated,
    })
}

pub fn is_dynamo(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> Result<bool> {
    tau.check_against(g)?;
    if let Some(masks) = g.masks() {
        let mut bits = 0u64;
        for &v in seed {
            g.check_vertex(v)?;
            bits |= 1 << v;
        }
        return Ok(closure_mask(masks, tau.values(), bits) == full_mask(g.n()));
    }
    Ok(propagate(g, tau, seed)?.is_complete())
}

/// Whether the subgraph induced on `k` is resistant under `tau`.
pub fn is_resistant(g: &Graph, tau: &ThresholdAssignment, k: &[usize]) -> Result<bool> {
    tau.check_against(g)?;
    if k.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let inside = seed_flags(g, k)?;
    Ok(first_violation(g, tau, &inside, k.iter().copied()).is_none())
}

fn resists(g: &Graph, tau: &ThresholdAssignment, v: usize, inner_degree: usize) -> bool {
    // deg_K(v) >= deg(v) - tau(v) + 1
    inner_degree as i64 + i64::from(tau.get(v)) > g.degree(v) as i64
}

pub(crate) fn first_violation(
    g: &Graph,
    tau: &ThresholdAssignment,
    inside: &[bool],
    vertices: impl Iterator<Item = usize>,
) -> Option<usize> {
    vertices.into_iter().find(|&v| {
        let inner = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
        !resists(g, tau, v, inner)
    })
}

/// Largest resistant subgraph inside `within`, as a sorted vertex list; empty
/// when none exists. Computed by peeling vertices that violate the resistance
/// inequality until none does.
pub fn max_resistant_subgraph(
    g: &Graph,
    tau: &ThresholdAssignment,
    within: &[usize],
) -> Result<Vec<usize>> {
    tau.check_against(g)?;
    let mut inside = seed_flags(g, within)?;
    if let Some(masks) = g.masks() {
        let start = (0..g.n())
            .filter(|&v| inside[v])
            .fold(0u64, |m, v| m | 1 << v);
        let kept = peel_mask(masks, tau.values(), start);
        return Ok((0..g.n()).filter(|&v| kept >> v & 1 == 1).collect());
    }
    let mut inner: Vec<usize> = (0..g.n())
        .map(|v| g.neighbors(v).iter().filter(|&&w| inside[w]).count())
        .collect();
    let mut stack: Vec<usize> = (0..g.n())
        .filter(|&v| inside[v] && !resists(g, tau, v, inner[v]))
        .collect();
    while let Some(v) = stack.pop() {
        if !inside[v] {
            continue;
        }
        inside[v] = false;
        for &w in g.neighbors(v) {
            inner[w] -= 1;
            if inside[w] && !resists(g, tau, w, inner[w]) {
                stack.push(w);
            }
        }
    }
    Ok((0..g.n()).filter(|&v| inside[v]).collect())
}

/// Peels `within` deleting, at every step, the first violating vertex in
/// `order`. The fixpoint does not depend on `order`; this exists so that can be
/// checked.
pub fn peel_in_order(
    g: &Graph,
    tau: &ThresholdAssignment,
    within: &[usize],
    order: &[usize],
) -> Result<Vec<usize>> {
    tau.check_against(g)?;
    let mut inside = seed_flags(g, within)?;
    while let Some(v) = first_violation(
        g,
        tau,
        &inside,
        order.iter().copied().filter(|&v| inside[v]),
    ) {
        inside[v] = false;
    }
    Ok((0..g.n()).filter(|&v| inside[v]).collect())
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Final active set of the process on a bitmask graph (`n <= 64`).
pub(crate) fn closure_mask(masks: &[u64], tau: &[u32], seed: u64) -> u64 {
    let mut active = seed;
    loop {
        let mut next = 0u64;
        for (v, (&nb, &t)) in masks.iter().zip(tau).enumerate() {
            if active >> v & 1 == 0 && (nb & active).count_ones() >= t {
                next |= 1 << v;
            }
        }
        if next == 0 {
            return active;
        }
        active |= next;
    }
}

/// Bitmask counterpart of [`max_resistant_subgraph`].
pub(crate) fn peel_mask(masks: &[u64], tau: &[u32], within: u64) -> u64 {
    let mut cur = within;
    loop {
        let mut drop = 0u64;
        let mut rest = cur;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let inner = (masks[v] & cur).count_ones();
            if inner + tau[v] <= masks[v].count_ones() {
                drop |= 1 << v;
            }
        }
        if drop == 0 {
            return cur;
        }
        cur &= !drop;
    }
}
