mod common;

use ldyn::constructions::{gen_prop3_family, verify_reduction, AttachMode};
use ldyn::exact::min_dynamo;
use ldyn::Rational;

#[test]
fn reduction_claim_on_small_connected_graphs() {
    // every graph on at most four vertices is planar
    for g in common::graphs_up_to(4)
        .into_iter()
        .filter(|g| g.components().len() == 1)
    {
        for k in [
            Rational::new(1, 2),
            Rational::new(1, 1),
            Rational::new(3, 2),
        ] {
            for mode in [AttachMode::StarPerVertex, AttachMode::OneStar] {
                let report = verify_reduction(&g, k, 0, mode, 25).unwrap();
                let check = report.check.expect("p > 0 for these parameters");
                assert!(
                    check.holds && check.dynamo_verified,
                    "{:?} k={k} {mode:?}: {check:?}",
                    g.edges()
                );
            }
        }
    }
}

#[test]
fn family_dynamo_fraction_is_exact() {
    for n in 1..=2usize {
        let (g, tau) = gen_prop3_family(n).unwrap();
        let size = min_dynamo(&g, &tau, 20).unwrap().0;
        assert_eq!(
            Rational::new(size as i64, g.n() as i64),
            Rational::new(n as i64, n as i64 + 2)
        );
    }
}
