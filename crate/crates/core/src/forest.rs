//! Worst-case dynamo size on forests in polynomial time.
//!
//! On a forest the worst case over assignments with average at most `t` is
//! attained by an assignment that puts `deg(v)` on both endpoints of every
//! edge of some matching and 0 everywhere else. Such an assignment costs
//! `deg(u) + deg(v)` per matched edge and its minimum dynamo has exactly one
//! vertex per matched edge, so the problem becomes: find a largest matching
//! whose edge costs sum to at most `floor(t * n)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{min_vertex_cover, LdynWitness, DEFAULT_COVER_CAP};
use crate::graph::Graph;
use crate::mcflow::{cost_bounded_max_matching, CostedMatching};
use crate::propagation::ThresholdAssignment;
use crate::rational::{self, Rational};

/// Thresholds with `tau(v)` equal to 0 or `deg(v)` at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ZeroDegreeAssignment(ThresholdAssignment);

impl ZeroDegreeAssignment {
    pub fn try_new(g: &Graph, tau: ThresholdAssignment) -> Result<Self> {
        tau.check_against(g)?;
        if let Some(v) = (0..g.n()).find(|&v| tau.get(v) != 0 && tau.get(v) as usize != g.degree(v))
        {
            return Err(Error::InvalidParameter(format!(
                "threshold {} at vertex {v} is neither 0 nor its degree {}",
                tau.get(v),
                g.degree(v)
            )));
        }
        Ok(Self(tau))
    }

    pub fn thresholds(&self) -> &ThresholdAssignment {
        &self.0
    }

    pub fn into_thresholds(self) -> ThresholdAssignment {
        self.0
    }

    /// Vertices whose threshold equals their degree. Isolated vertices
    /// qualify trivially; they carry no edges of the induced subgraph.
    pub fn full_vertices(&self, g: &Graph) -> Vec<usize> {
        (0..g.n())
            .filter(|&v| self.0.get(v) as usize == g.degree(v))
            .collect()
    }
}

/// `cost(uv) = deg(u) + deg(v)`, aligned with `g.edges()`.
pub fn edge_costs(g: &Graph) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) + g.degree(v)) as u64)
        .collect()
}

/// Full thresholds on vertices covered by `matching`, zero elsewhere.
pub fn zero_degree_from_matching(
    g: &Graph,
    matching: &[(usize, usize)],
) -> Result<ZeroDegreeAssignment> {
    let mut covered = vec![false; g.n()];
    for &(u, v) in matching {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        for w in [u, v] {
            if covered[w] {
                return Err(Error::NotAMatching { vertex: w });
            }
            covered[w] = true;
        }
    }
    let tau = (0..g.n())
        .map(|v| if covered[v] { g.degree(v) as u32 } else { 0 })
        .collect::<Vec<_>>();
    Ok(ZeroDegreeAssignment(ThresholdAssignment::new(tau)))
}

/// Minimum dynamo under a (zero, degree) assignment: a minimum vertex cover
/// of the subgraph induced on the full-threshold vertices.
pub fn min_dynamo_zero_degree(
    g: &Graph,
    tau: &ZeroDegreeAssignment,
) -> Result<(usize, Vec<usize>)> {
    tau.0.check_against(g)?;
    let (full, map) = g.induced(&tau.full_vertices(g));
    let (size, cover) = min_vertex_cover(&full, DEFAULT_COVER_CAP)?;
    let mut dynamo: Vec<usize> = cover.into_iter().map(|v| map[v]).collect();
    dynamo.sort_unstable();
    Ok((size, dynamo))
}

/// Everything the forest algorithm produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestSolution {
    pub value: usize,
    pub tau: ThresholdAssignment,
    pub dynamo: Vec<usize>,
    pub matching: CostedMatching,
    /// `floor(t * n)`, the largest admissible threshold total.
    pub budget: u64,
}

impl ForestSolution {
    pub fn witness(&self) -> LdynWitness {
        LdynWitness {
            value: self.value,
            tau: self.tau.clone(),
            dynamo: self.dynamo.clone(),
        }
    }
}

pub fn solve_forest(f: &Graph, t: Rational) -> Result<ForestSolution> {
    let t = rational::nonnegative("t", t)?;
    if !f.is_forest() {
        return Err(Error::NotForest);
    }
    // costs are integers, so cost(M) <= t n  iff  cost(M) <= floor(t n)
    let budget = rational::threshold_budget(t, f.n());
    let matching = cost_bounded_max_matching(f, &edge_costs(f), budget)?;
    let tau = zero_degree_from_matching(f, &matching.edges)?;
    let (size, dynamo) = min_dynamo_zero_degree(f, &tau)?;
    debug_assert_eq!(size, matching.len());
    Ok(ForestSolution {
        value: matching.len(),
        tau: tau.into_thresholds(),
        dynamo,
        matching,
        budget,
    })
}

/// Worst-case minimum dynamo size of a forest over assignments with average
/// at most `t` and no self-opinioned vertex.
pub fn ldyn_forest(f: &Graph, t: Rational) -> Result<LdynWitness> {
    solve_forest(f, t).map(|s| s.witness())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ldyn_brute, min_dynamo};
    use crate::graph::named::*;
    use crate::propagation::{is_dynamo, is_resistant};

    #[test]
    fn costs() {
        assert_eq!(edge_costs(&complete(2)), vec![2]);
        assert_eq!(edge_costs(&path(4)), vec![3, 4, 3]);
        assert_eq!(edge_costs(&star(3)), vec![4, 4, 4]);
    }

    #[test]
    fn assignments_from_matchings() {
        let p4 = path(4);
        let t = zero_degree_from_matching(&p4, &[(1, 2)]).unwrap();
        assert_eq!(t.thresholds().values(), &[0, 2, 2, 0]);
        let t = zero_degree_from_matching(&p4, &[]).unwrap();
        assert_eq!(t.thresholds().total(), 0);
        let t = zero_degree_from_matching(&complete(2), &[(0, 1)]).unwrap();
        assert_eq!(t.thresholds().values(), &[1, 1]);

        assert_eq!(
            zero_degree_from_matching(&p4, &[(0, 1), (1, 2)]),
            Err(Error::NotAMatching { vertex: 1 })
        );
        assert_eq!(
            zero_degree_from_matching(&p4, &[(0, 2)]),
            Err(Error::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn total_equals_matching_cost() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let costs = edge_costs(&g);
        let m = [(0, 1), (3, 4)];
        let t = zero_degree_from_matching(&g, &m).unwrap();
        let cost: u64 = g
            .edges()
            .iter()
            .zip(&costs)
            .filter(|(e, _)| m.contains(e))
            .map(|(_, &c)| c)
            .sum();
        assert_eq!(t.thresholds().total(), cost);
    }

    #[test]
    fn zero_degree_validation() {
        let g = path(3);
        assert!(ZeroDegreeAssignment::try_new(&g, ThresholdAssignment::new(vec![1, 2, 0])).is_ok());
        assert!(
            ZeroDegreeAssignment::try_new(&g, ThresholdAssignment::new(vec![1, 1, 0])).is_err()
        );
    }

    #[test]
    fn zero_degree_dynamo_examples() {
        let p4 = path(4);
        let t =
            ZeroDegreeAssignment::try_new(&p4, ThresholdAssignment::new(vec![0, 2, 2, 0])).unwrap();
        let (size, set) = min_dynamo_zero_degree(&p4, &t).unwrap();
        assert_eq!(size, 1);
        assert!(set == vec![1] || set == vec![2]);
        assert!(crate::propagation::is_dynamo(&p4, t.thresholds(), &set).unwrap());

        let zero = ZeroDegreeAssignment::try_new(&p4, ThresholdAssignment::zeros(4)).unwrap();
        assert_eq!(min_dynamo_zero_degree(&p4, &zero).unwrap(), (0, vec![]));

        let s = star(3);
        let t =
            ZeroDegreeAssignment::try_new(&s, ThresholdAssignment::new(vec![3, 1, 0, 0])).unwrap();
        let (size, set) = min_dynamo_zero_degree(&s, &t).unwrap();
        assert_eq!(size, 1);
        assert!(set == vec![0] || set == vec![1]);
        assert_eq!(min_dynamo(&s, t.thresholds(), 20).unwrap().0, 1);
    }

    #[test]
    fn forest_examples() {
        let p4 = path(4);
        let one = ldyn_forest(&p4, Rational::from_integer(1)).unwrap();
        assert_eq!(one.value, 1);
        assert_eq!(
            one.value,
            ldyn_brute(&p4, Rational::from_integer(1), false, 8)
                .unwrap()
                .value
        );
        let s = solve_forest(&p4, Rational::new(3, 2)).unwrap();
        assert_eq!((s.value, s.budget), (2, 6));
        assert_eq!(s.matching.edges, vec![(0, 1), (2, 3)]);
        assert_eq!(
            s.value,
            ldyn_brute(&p4, Rational::new(3, 2), false, 8)
                .unwrap()
                .value
        );

        let e = ldyn_forest(&Graph::empty(5), Rational::from_integer(4)).unwrap();
        assert_eq!((e.value, e.tau.total(), e.dynamo.len()), (0, 0, 0));

        assert_eq!(
            ldyn_forest(&cycle(4), Rational::from_integer(1)),
            Err(Error::NotForest)
        );
    }

    #[test]
    fn matched_edges_are_resistant_and_dynamo_is_minimal() {
        let g =
            Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        for j in 0..=16 {
            let s = solve_forest(&g, Rational::new(j, 8)).unwrap();
            assert!(s.tau.average().unwrap() <= Rational::new(j, 8));
            for &(u, v) in &s.matching.edges {
                assert!(is_resistant(&g, &s.tau, &[u, v]).unwrap());
            }
            assert!(is_dynamo(&g, &s.tau, &s.dynamo).unwrap());
            for skip in 0..s.dynamo.len() {
                let mut fewer = s.dynamo.clone();
                fewer.remove(skip);
                assert!(!is_dynamo(&g, &s.tau, &fewer).unwrap());
            }
        }
    }
}
