//! Closed-form bounds on worst-case dynamo size from the degree sequence.

use serde::Serialize;

use crate::error::Result;
use crate::exact::LdynWitness;
use crate::graph::Graph;
use crate::propagation::ThresholdAssignment;
use crate::rational::{self, Rational};

/// Largest `k` such that the `k` smallest values of `deg + 1` sum to at most
/// `n * t`. Upper-bounds every minimum dynamo size at average threshold `t`,
/// even when self-opinioned vertices are allowed.
pub fn ksz_bound(g: &Graph, t: Rational) -> Result<usize> {
    let t = rational::nonnegative("t", t)?;
    let budget = t * Rational::from_integer(g.n() as i64);
    let mut total = 0i64;
    let mut k = 0;
    for d in g.degree_sequence().degrees {
        total += d as i64 + 1;
        if Rational::from_integer(total) > budget {
            break;
        }
        k += 1;
    }
    Ok(k)
}

/// Worst case when self-opinioned vertices are allowed: make the `k0`
/// lowest-degree vertices self-opinioned and leave every other threshold at 0.
pub fn ldyn_self_opinioned(g: &Graph, t: Rational) -> Result<LdynWitness> {
    let k0 = ksz_bound(g, t)?;
    let mut tau = ThresholdAssignment::zeros(g.n());
    let mut dynamo: Vec<usize> = g.vertices_by_degree().into_iter().take(k0).collect();
    for &v in &dynamo {
        tau.set(v, g.degree(v) as u32 + 1);
    }
    dynamo.sort_unstable();
    Ok(LdynWitness {
        value: k0,
        tau,
        dynamo,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// Degree-sequence bound evaluated at `t_star`.
    pub k0: usize,
    /// `c * n / (c + 1)`; every admissible `Ldyn_t` lies strictly below it.
    #[serde(serialize_with = "ser_rational")]
    pub bound_value: Rational,
    /// Whether some positive `t` meets the hypothesis `t <= c * eps(G) / n`.
    pub applicable: bool,
    /// `c * eps(G) / n`, the largest admissible average threshold.
    #[serde(serialize_with = "ser_rational")]
    pub t_star: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational::format_rational(*r))
}

impl BoundReport {
    /// Whether `t` satisfies the hypothesis of the bound.
    pub fn admits(&self, t: Rational) -> bool {
        t <= self.t_star
    }
}

/// The `c/(c+1)` upper bound for average thresholds up to `c * eps(G) / n`.
pub fn cc1_upper_bound(g: &Graph, c: Rational) -> Result<BoundReport> {
    let c = rational::positive("c", c)?;
    let n = Rational::from_integer(g.n() as i64);
    let eps = g.edge_density()?;
    let t_star = c * eps / n;
    Ok(BoundReport {
        k0: ksz_bound(g, t_star)?,
        bound_value: c * n / (c + 1),
        applicable: g.m() > 0,
        t_star,
    })
}
