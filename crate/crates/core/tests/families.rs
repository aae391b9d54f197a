mod common;

use common::*;

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| graphs_of_order(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    let forests: Vec<usize> = (1..=8).map(|n| forests_of_order(n).len()).collect();
    assert_eq!(forests, vec![1, 2, 3, 6, 10, 20, 37, 76]);
}

#[test]
fn forests_are_forests() {
    for f in forests_up_to(7) {
        assert!(f.is_forest());
    }
}

#[test]
fn vector_walk_visits_the_product() {
    let mut count = 0;
    for_each_vector(&[1, 2, 0, 3], |_| count += 1);
    assert_eq!(count, 2 * 3 * 4);
}
