//! Instance generators: the worst-case family `G_n` and the vertex-cover
//! reduction instance `H`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::min_vertex_cover;
use crate::forest::{min_dynamo_zero_degree, ZeroDegreeAssignment};
use crate::graph::Graph;
use crate::propagation::{is_dynamo, ThresholdAssignment};
use crate::rational::{self, Rational};

/// `K_n` plus `n` disjoint copies of `K_{n+1}`, each copy joined to `K_n` by a
/// single edge. Thresholds are 0 on `K_n` and `deg(v)` on the copies.
///
/// Vertices `0..n` form `K_n`; copy `i` occupies the next `n + 1` vertices and
/// its first vertex is joined to vertex `i mod n` of `K_n`.
pub fn gen_prop3_family(n: usize) -> Result<(Graph, ThresholdAssignment)> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "family index n must be at least 1".into(),
        ));
    }
    let total = n * n + 2 * n;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for copy in 0..n {
        let base = n + copy * (n + 1);
        for u in 0..=n {
            for v in u + 1..=n {
                edges.push((base + u, base + v));
            }
        }
        edges.push((copy % n, base));
    }
    let g = Graph::from_edges(total, edges)?;
    let tau = (0..total)
        .map(|v| if v < n { 0 } else { g.degree(v) as u32 })
        .collect();
    Ok((g, ThresholdAssignment::new(tau)))
}

/// How the stars of the reduction are attached to `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttachMode {
    /// A star hangs off every vertex of `G`.
    StarPerVertex,
    /// A single star hangs off vertex 0 of `G`.
    OneStar,
}

impl FromStr for AttachMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-vertex" | "star-per-vertex" => Ok(Self::StarPerVertex),
            "one-star" => Ok(Self::OneStar),
            _ => Err(Error::InvalidParameter(format!(
                "unknown attachment mode {s:?} (expected per-vertex or one-star)"
            ))),
        }
    }
}

impl fmt::Display for AttachMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::StarPerVertex => "star-per-vertex",
            Self::OneStar => "one-star",
        })
    }
}

/// The reduction instance built from a vertex-cover instance `(G, l)`.
///
/// `G` keeps its labels `0..|G|` inside `H`. Each star is its centre followed
/// by `s - 1` leaves; `y` is the first leaf of the first star and the path is
/// `y` followed by `p - 1` fresh vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HardnessInstance {
    #[serde(skip)]
    pub h: Graph,
    pub s: i64,
    pub p: i64,
    #[serde(serialize_with = "ser_rational")]
    pub k: Rational,
    pub l: i64,
    pub tau: ThresholdAssignment,
    pub decision_threshold: i64,
    pub mode: AttachMode,
    pub g_vertices: usize,
    pub star_centers: Vec<usize>,
    pub y: usize,
    pub path: Vec<usize>,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational::format_rational(*r))
}

/// `s = ceil(4 |E| max(1, 1/k)) + 14` and `p = floor((k s - 2) / (2 - k)) - |E|`.
pub fn reduction_parameters(edges: usize, k: Rational) -> Result<(i64, i64)> {
    let k = rational::positive("k", k)?;
    let two = Rational::from_integer(2);
    if k >= two {
        return Err(Error::InvalidParameter(format!(
            "k must lie in (0, 2) for the reduction, got {k}"
        )));
    }
    let m = Rational::from_integer(edges as i64);
    let scale = if k < Rational::from_integer(1) {
        k.recip()
    } else {
        Rational::from_integer(1)
    };
    let s = rational::ceil(Rational::from_integer(4) * m * scale) + 14;
    let p = rational::floor((k * Rational::from_integer(s) - two) / (two - k)) - edges as i64;
    Ok((s, p))
}

pub fn gen_hardness_instance(
    g: &Graph,
    k: Rational,
    l: i64,
    mode: AttachMode,
) -> Result<HardnessInstance> {
    let (s, p) = reduction_parameters(g.m(), k)?;
    if p <= 0 {
        return Err(Error::DegenerateInstance { s, p });
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let hosts: Vec<usize> = match mode {
        AttachMode::StarPerVertex => (0..g.n()).collect(),
        AttachMode::OneStar => vec![0],
    };
    let star_size = s as usize;
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut next = g.n();
    let mut star_centers = Vec::with_capacity(hosts.len());
    for &host in &hosts {
        let center = next;
        edges.push((host, center));
        for leaf in center + 1..center + star_size {
            edges.push((center, leaf));
        }
        star_centers.push(center);
        next += star_size;
    }
    let y = star_centers[0] + 1;
    let mut path = vec![y];
    for _ in 1..p {
        edges.push((*path.last().unwrap(), next));
        path.push(next);
        next += 1;
    }
    let h = Graph::from_edges(next, edges)?;
    let mut tau = ThresholdAssignment::zeros(h.n());
    for v in (0..g.n()).chain(path.iter().copied()) {
        tau.set(v, h.degree(v) as u32);
    }
    Ok(HardnessInstance {
        h,
        s,
        p,
        k,
        l,
        tau,
        decision_threshold: l + p.div_euclid(2) + 1,
        mode,
        g_vertices: g.n(),
        star_centers,
        y,
        path,
    })
}

/// Outcome of checking `dyn_tau(H) = beta(G) + floor(p / 2)` on a generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub applicable: bool,
    pub s: i64,
    pub p: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<ReductionCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCheck {
    pub beta_g: usize,
    pub half_p: i64,
    pub expected: usize,
    /// Minimum dynamo size of `H`, as a minimum vertex cover of its full-threshold part.
    pub dyn_h: usize,
    pub holds: bool,
    pub dynamo: Vec<usize>,
    pub dynamo_verified: bool,
    pub decision_threshold: i64,
    pub h_vertices: usize,
    pub h_edges: usize,
    pub threshold_total: u64,
    /// `floor(k |E(H)|)`: the threshold total the decision problem asks for.
    pub decision_budget: i64,
    #[serde(serialize_with = "ser_rational")]
    pub tau_bar: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub k_eps: Rational,
    pub within_budget: bool,
}

/// Recomputes `dyn_tau(H)` from the construction and compares it with
/// `beta(G) + floor(p / 2)`. `cap` bounds exhaustive vertex-cover search on
/// non-tree components of `G`.
pub fn verify_reduction_claim(
    inst: &HardnessInstance,
    g: &Graph,
    cap: usize,
) -> Result<ReductionReport> {
    if inst.p <= 0 {
        return Ok(ReductionReport {
            applicable: false,
            s: inst.s,
            p: inst.p,
            check: None,
        });
    }
    let (beta_g, _) = min_vertex_cover(g, cap)?;
    let zd = ZeroDegreeAssignment::try_new(&inst.h, inst.tau.clone())?;
    let (dyn_h, dynamo) = min_dynamo_zero_degree(&inst.h, &zd)?;
    let half_p = inst.p.div_euclid(2);
    let expected = beta_g + half_p as usize;
    let h = &inst.h;
    let tau_bar = inst.tau.average()?;
    let k_eps = inst.k * h.edge_density()?;
    Ok(ReductionReport {
        applicable: true,
        s: inst.s,
        p: inst.p,
        check: Some(ReductionCheck {
            beta_g,
            half_p,
            expected,
            dyn_h,
            holds: dyn_h == expected,
            dynamo_verified: is_dynamo(h, &inst.tau, &dynamo)?,
            dynamo,
            decision_threshold: inst.decision_threshold,
            h_vertices: h.n(),
            h_edges: h.m(),
            threshold_total: inst.tau.total(),
            decision_budget: rational::floor(inst.k * Rational::from_integer(h.m() as i64)),
            tau_bar,
            k_eps,
            within_budget: tau_bar <= k_eps,
        }),
    })
}

/// Generates and verifies in one go; a degenerate `p <= 0` yields a
/// not-applicable report instead of an error.
pub fn verify_reduction(
    g: &Graph,
    k: Rational,
    l: i64,
    mode: AttachMode,
    cap: usize,
) -> Result<ReductionReport> {
    match gen_hardness_instance(g, k, l, mode) {
        Ok(inst) => verify_reduction_claim(&inst, g, cap),
        Err(Error::DegenerateInstance { s, p }) => Ok(ReductionReport {
            applicable: false,
            s,
            p,
            check: None,
        }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::min_dynamo;
    use crate::graph::named::*;

    #[test]
    fn prop3_sizes_and_degrees() {
        let (g2, t2) = gen_prop3_family(2).unwrap();
        assert_eq!(g2.n(), 8);
        assert_eq!(g2.degree_sequence().degrees, vec![2, 2, 2, 2, 2, 2, 3, 3]);
        assert_eq!(t2.average().unwrap(), Rational::new(7, 4));
        assert!(min_dynamo(&g2, &t2, 20).unwrap().0 >= 4);

        let (g1, t1) = gen_prop3_family(1).unwrap();
        assert_eq!(g1.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(t1.values(), &[0, 2, 1]);
        assert!(gen_prop3_family(0).is_err());
    }

    #[test]
    fn prop3_average_formula() {
        for n in 1..=7usize {
            let (g, t) = gen_prop3_family(n).unwrap();
            assert_eq!(g.n(), n * n + 2 * n);
            let n = n as i64;
            assert_eq!(t.average().unwrap(), Rational::new(n * n + n + 1, n + 2));
        }
    }

    #[test]
    fn reduction_parameter_examples() {
        let one = Rational::from_integer(1);
        assert_eq!(reduction_parameters(3, one).unwrap(), (26, 21));
        assert_eq!(reduction_parameters(1, one).unwrap(), (18, 15));
        // 4 * 1 / (2/3) = 6 exactly; p = floor((40/3 - 2) / (4/3)) - 1 = 7
        assert_eq!(
            reduction_parameters(1, Rational::new(2, 3)).unwrap(),
            (20, 7)
        );
        // 4 * 1 / (3/7) = 28/3 rounds up to 10
        assert_eq!(reduction_parameters(1, Rational::new(3, 7)).unwrap().0, 24);
        assert!(reduction_parameters(1, Rational::from_integer(2)).is_err());
        assert!(reduction_parameters(1, Rational::from_integer(0)).is_err());
    }

    #[test]
    fn k3_instance_shape() {
        let inst = gen_hardness_instance(
            &complete(3),
            Rational::from_integer(1),
            2,
            AttachMode::StarPerVertex,
        )
        .unwrap();
        assert_eq!((inst.s, inst.p, inst.decision_threshold), (26, 21, 13));
        assert_eq!(inst.h.n(), 3 + 3 * 26 + 20);
        assert_eq!(inst.h.m(), 3 + 3 * 26 + 20);
        assert_eq!(inst.path.len(), 21);
        assert_eq!(inst.tau.get(inst.y) as usize, inst.h.degree(inst.y));

        let one = gen_hardness_instance(
            &complete(3),
            Rational::from_integer(1),
            2,
            AttachMode::OneStar,
        )
        .unwrap();
        assert_eq!(one.h.n(), 3 + 26 + 20);
        // |E(G)| + s + p - 1: one star and a path with p - 1 edges
        assert_eq!(one.h.m() as i64, 3 + one.s + one.p - 1);
    }

    #[test]
    fn added_pieces_are_trees_hanging_off_g() {
        let g = cycle(4);
        let inst =
            gen_hardness_instance(&g, Rational::new(1, 2), 0, AttachMode::StarPerVertex).unwrap();
        let (core, _) = inst.h.induced(&(0..4).collect::<Vec<_>>());
        assert_eq!(core, g);
        let rest: Vec<usize> = (4..inst.h.n()).collect();
        let (added, _) = inst.h.induced(&rest);
        assert!(added.is_forest());
    }

    #[test]
    fn degenerate_instances() {
        let k1 = Graph::empty(1);
        let k = Rational::new(1, 10);
        assert!(matches!(
            gen_hardness_instance(&k1, k, 0, AttachMode::StarPerVertex),
            Err(Error::DegenerateInstance { .. })
        ));
        let r = verify_reduction(&k1, k, 0, AttachMode::StarPerVertex, 25).unwrap();
        assert!(!r.applicable);
        assert!(r.check.is_none());
    }

    #[test]
    fn reduction_claims() {
        let one = Rational::from_integer(1);
        let r = verify_reduction(&complete(2), one, 1, AttachMode::StarPerVertex, 25).unwrap();
        let c = r.check.unwrap();
        assert_eq!((c.beta_g, c.half_p, c.dyn_h), (1, 7, 8));
        assert!(c.holds && c.dynamo_verified);

        let r = verify_reduction(&path(3), one, 1, AttachMode::StarPerVertex, 25).unwrap();
        let c = r.check.unwrap();
        assert_eq!(c.beta_g, 1);
        assert!(c.holds);
    }
}
