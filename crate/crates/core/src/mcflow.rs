//! Minimum-cost flow by successive shortest paths, and maximum matchings
//! under a cost budget in bipartite graphs.
//!
//! All costs are nonnegative, so Dijkstra with vertex potentials finds every
//! augmenting path. After `k` unit augmentations the flow is a cheapest flow
//! of value `k`, and the marginal cost of each further unit never decreases.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: i64,
    pub cost: i64,
}

/// Directed network with integral capacities, costs and vertex balances.
/// A positive balance is a supply, a negative one a demand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowNetwork {
    pub balances: Vec<i64>,
    pub arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(balances: Vec<i64>) -> Self {
        Self {
            balances,
            arcs: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.balances.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i64, cost: i64) -> usize {
        self.arcs.push(Arc {
            from,
            to,
            capacity,
            cost,
        });
        self.arcs.len() - 1
    }

    pub fn validate(&self) -> Result<()> {
        let total: i64 = self.balances.iter().sum();
        if total != 0 {
            return Err(Error::MalformedNetwork(format!(
                "balances sum to {total}, not 0"
            )));
        }
        for (i, a) in self.arcs.iter().enumerate() {
            if a.from >= self.n() || a.to >= self.n() {
                return Err(Error::MalformedNetwork(format!(
                    "arc {i} leaves the vertex range"
                )));
            }
            if a.capacity < 0 || a.cost < 0 {
                return Err(Error::MalformedNetwork(format!(
                    "arc {i} has negative capacity or cost"
                )));
            }
        }
        Ok(())
    }

    /// Every violated capacity bound or conservation constraint of `flow`.
    pub fn violations(&self, flow: &[i64]) -> Vec<String> {
        let mut out = Vec::new();
        if flow.len() != self.arcs.len() {
            out.push(format!(
                "flow has {} entries for {} arcs",
                flow.len(),
                self.arcs.len()
            ));
            return out;
        }
        let mut net = vec![0i64; self.n()];
        for (i, (a, &f)) in self.arcs.iter().zip(flow).enumerate() {
            if f < 0 || f > a.capacity {
                out.push(format!("arc {i}: flow {f} outside [0, {}]", a.capacity));
            }
            net[a.from] += f;
            net[a.to] -= f;
        }
        for (v, (&got, &want)) in net.iter().zip(&self.balances).enumerate() {
            if got != want {
                out.push(format!("vertex {v}: net outflow {got}, balance {want}"));
            }
        }
        out
    }

    pub fn cost_of(&self, flow: &[i64]) -> i64 {
        self.arcs.iter().zip(flow).map(|(a, &f)| a.cost * f).sum()
    }

    /// Text form: header `n a`, then `n` balance lines, then `a` lines `i j u c`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut next_ints = |want: usize, what: &str| -> Result<(usize, Vec<i64>), ParseError> {
            let (line, body) = lines.next().ok_or(ParseError::MalformedLine {
                line: 0,
                reason: format!("unexpected end of input, expected {what}"),
            })?;
            let fields: Result<Vec<i64>, _> = body.split_whitespace().map(str::parse).collect();
            match fields {
                Ok(f) if f.len() == want => Ok((line, f)),
                _ => Err(ParseError::MalformedLine {
                    line,
                    reason: format!("expected {what}"),
                }),
            }
        };
        let (hline, header) = next_ints(2, "header \"n a\"")?;
        if header.iter().any(|&x| x < 0) {
            return Err(ParseError::MalformedLine {
                line: hline,
                reason: "negative count".into(),
            });
        }
        let (n, a) = (header[0] as usize, header[1] as usize);
        let mut net = FlowNetwork::new(Vec::with_capacity(n));
        for _ in 0..n {
            net.balances.push(next_ints(1, "a vertex balance")?.1[0]);
        }
        for _ in 0..a {
            let (line, f) = next_ints(4, "an arc \"i j u c\"")?;
            for &end in &f[..2] {
                if end < 0 || end as usize >= n {
                    return Err(ParseError::VertexOutOfRange {
                        line,
                        vertex: end.max(0) as usize,
                        n,
                    });
                }
            }
            net.add_arc(f[0] as usize, f[1] as usize, f[2], f[3]);
        }
        if let Some((line, _)) = lines.next() {
            return Err(ParseError::MalformedLine {
                line,
                reason: "trailing content after the last arc".into(),
            });
        }
        Ok(net)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.arcs.len());
        for b in &self.balances {
            out.push_str(&format!("{b}\n"));
        }
        for a in &self.arcs {
            out.push_str(&format!("{} {} {} {}\n", a.from, a.to, a.capacity, a.cost));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FlowOutcome {
    Optimal { flow: Vec<i64>, cost: i64 },
    Infeasible { routed: i64, required: i64 },
}

#[derive(Debug, Clone)]
struct ResidualEdge {
    to: usize,
    cap: i64,
    cost: i64,
}

/// A shortest residual path from source to sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentingPath {
    /// Residual edge ids, source side first.
    edges: Vec<usize>,
    pub unit_cost: i64,
    pub bottleneck: i64,
}

/// Residual network driven one augmenting path at a time.
#[derive(Debug, Clone)]
pub struct SuccessiveShortestPaths {
    edges: Vec<ResidualEdge>,
    out: Vec<Vec<usize>>,
    potential: Vec<i64>,
}

impl SuccessiveShortestPaths {
    pub fn new(n: usize) -> Self {
        Self {
            edges: Vec::new(),
            out: vec![Vec::new(); n],
            potential: vec![0; n],
        }
    }

    /// Adds an arc and its reverse residual edge; returns the forward edge id.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i64, cost: i64) -> usize {
        debug_assert!(cost >= 0 && capacity >= 0);
        let id = self.edges.len();
        self.edges.push(ResidualEdge {
            to,
            cap: capacity,
            cost,
        });
        self.edges.push(ResidualEdge {
            to: from,
            cap: 0,
            cost: -cost,
        });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Flow currently carried by the arc whose forward edge id is `id`.
    pub fn flow_on(&self, id: usize) -> i64 {
        self.edges[id + 1].cap
    }

    /// Cheapest residual path from `s` to `t`, or `None` when `t` is cut off.
    /// Refreshes the vertex potentials as a side effect; the path is not applied.
    pub fn shortest_path(&mut self, s: usize, t: usize) -> Option<AugmentingPath> {
        let n = self.out.len();
        let mut dist = vec![i64::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        dist[s] = 0;
        heap.push(Reverse((0i64, s)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &e in &self.out[u] {
                let edge = &self.edges[e];
                if edge.cap == 0 {
                    continue;
                }
                let reduced = edge.cost + self.potential[u] - self.potential[edge.to];
                debug_assert!(
                    reduced >= 0,
                    "potentials must keep reduced costs nonnegative"
                );
                let nd = d + reduced;
                if nd < dist[edge.to] {
                    dist[edge.to] = nd;
                    via[edge.to] = e;
                    heap.push(Reverse((nd, edge.to)));
                }
            }
        }
        if dist[t] == i64::MAX {
            return None;
        }
        // vertices cut off now stay cut off, so their potentials are never read again
        for (p, &d) in self.potential.iter_mut().zip(&dist) {
            if d != i64::MAX {
                *p += d;
            }
        }
        let mut path = Vec::new();
        let mut v = t;
        while v != s {
            let e = via[v];
            path.push(e);
            v = self.edges[e ^ 1].to;
        }
        path.reverse();
        let unit_cost = path.iter().map(|&e| self.edges[e].cost).sum();
        let bottleneck = path.iter().map(|&e| self.edges[e].cap).min().unwrap_or(0);
        Some(AugmentingPath {
            edges: path,
            unit_cost,
            bottleneck,
        })
    }

    /// Pushes `amount` units along `path`.
    pub fn apply(&mut self, path: &AugmentingPath, amount: i64) {
        assert!(
            amount <= path.bottleneck,
            "augmenting beyond the path bottleneck"
        );
        for &e in &path.edges {
            self.edges[e].cap -= amount;
            self.edges[e ^ 1].cap += amount;
        }
    }
}

/// Cheapest flow meeting every balance, or the amount that could be routed
/// when the demands are unreachable.
pub fn min_cost_flow(net: &FlowNetwork) -> Result<FlowOutcome> {
    net.validate()?;
    let n = net.n();
    let (source, sink) = (n, n + 1);
    let mut ssp = SuccessiveShortestPaths::new(n + 2);
    let ids: Vec<usize> = net
        .arcs
        .iter()
        .map(|a| ssp.add_arc(a.from, a.to, a.capacity, a.cost))
        .collect();
    let mut required = 0;
    for (v, &b) in net.balances.iter().enumerate() {
        if b > 0 {
            ssp.add_arc(source, v, b, 0);
            required += b;
        } else if b < 0 {
            ssp.add_arc(v, sink, -b, 0);
        }
    }
    let mut routed = 0;
    while routed < required {
        let Some(path) = ssp.shortest_path(source, sink) else {
            break;
        };
        let amount = path.bottleneck.min(required - routed);
        ssp.apply(&path, amount);
        routed += amount;
    }
    if routed < required {
        return Ok(FlowOutcome::Infeasible { routed, required });
    }
    let flow: Vec<i64> = ids.iter().map(|&id| ssp.flow_on(id)).collect();
    let cost = net.cost_of(&flow);
    Ok(FlowOutcome::Optimal { flow, cost })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostedMatching {
    /// Matched edges as `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub total_cost: u64,
}

impl CostedMatching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A cost-bounded matching together with the flow instance that certifies it.
#[derive(Debug, Clone)]
pub struct MatchingCertificate {
    pub matching: CostedMatching,
    /// Source `n`, sink `n + 1`, balances set to the matching size.
    pub network: FlowNetwork,
    pub flow: Vec<i64>,
}

/// Largest matching of `g` whose cost stays within `budget`, cheapest among
/// those. `costs` is aligned with `g.edges()`.
pub fn cost_bounded_max_matching(g: &Graph, costs: &[u64], budget: u64) -> Result<CostedMatching> {
    cost_bounded_matching_certified(g, costs, budget).map(|c| c.matching)
}

/// [`cost_bounded_max_matching`], also returning the underlying flow.
///
/// The network has a source feeding every left vertex and a sink fed by every
/// right vertex, all with unit capacity and zero cost; graph edges run left to
/// right with their own cost. Units are pushed one at a time and the loop
/// stops before the cumulative cost would pass `budget`.
pub fn cost_bounded_matching_certified(
    g: &Graph,
    costs: &[u64],
    budget: u64,
) -> Result<MatchingCertificate> {
    if costs.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: costs.len(),
        });
    }
    let sides = g.bipartition()?;
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut left = vec![false; n];
    for &x in &sides.left {
        left[x] = true;
    }
    let mut net = FlowNetwork::new(vec![0; n + 2]);
    let mut edge_arcs = Vec::with_capacity(g.m());
    for &x in &sides.left {
        net.add_arc(s, x, 1, 0);
    }
    for (&(u, v), &c) in g.edges().iter().zip(costs) {
        let (x, y) = if left[u] { (u, v) } else { (v, u) };
        edge_arcs.push(net.add_arc(x, y, 1, c as i64));
    }
    for &y in &sides.right {
        net.add_arc(y, t, 1, 0);
    }

    let mut ssp = SuccessiveShortestPaths::new(n + 2);
    let ids: Vec<usize> = net
        .arcs
        .iter()
        .map(|a| ssp.add_arc(a.from, a.to, a.capacity, a.cost))
        .collect();
    let mut spent = 0u64;
    let mut size = 0i64;
    while let Some(path) = ssp.shortest_path(s, t) {
        let next = spent + path.unit_cost as u64;
        if next > budget {
            break;
        }
        ssp.apply(&path, 1);
        spent = next;
        size += 1;
    }
    net.balances[s] = size;
    net.balances[t] = -size;
    let flow: Vec<i64> = ids.iter().map(|&id| ssp.flow_on(id)).collect();
    let mut edges: Vec<(usize, usize)> = edge_arcs
        .iter()
        .zip(g.edges())
        .filter(|(&arc, _)| flow[arc] == 1)
        .map(|(_, &e)| e)
        .collect();
    edges.sort_unstable();
    let total_cost = net.cost_of(&flow) as u64;
    debug_assert_eq!(total_cost, spent);
    Ok(MatchingCertificate {
        matching: CostedMatching { edges, total_cost },
        network: net,
        flow,
    })
}
