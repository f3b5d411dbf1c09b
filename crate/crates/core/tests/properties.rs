mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use tropline::barvinok_classes::{class_dimension, class_intersect, ClassFace, ClassString, ClassSymbol};
use tropline::canonical_line::face_label;
use tropline::complex_gen::{build_complex, Variant};
use tropline::homology::{boundary, Chain};
use tropline::trop_core::{
    barvinok_rank_le2, has_rank_at_most_two, trop_det_assignment, trop_det_enumerate, tropical_rank,
};
use tropline::IntMatrix;

use common::{rank_by_minors, two_rank_one_min};

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn tropical_rank_matches_minor_enumeration(rows in small_matrix(4, 5)) {
        let m = IntMatrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(tropical_rank(&m), rank_by_minors(&rows));
        prop_assert_eq!(has_rank_at_most_two(&m), rank_by_minors(&rows) <= 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn assignment_determinant_matches_enumeration(n in 1usize..=7, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let range = if seed % 2 == 0 { 2 } else { 20 };
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect()).collect();
        let m = IntMatrix::from_rows(rows).unwrap();
        let a = trop_det_assignment(&m);
        let e = trop_det_enumerate(&m);
        prop_assert_eq!(a.value, e.value);
        prop_assert_eq!(a.singular, e.singular);
    }
}

/// Feasibility of difference constraints `x_a - x_b >= c` (Bellman-Ford).
fn feasible(vars: usize, constraints: &[(usize, usize, i64)]) -> bool {
    let mut dist = vec![0i64; vars];
    for _ in 0..=vars {
        let mut changed = false;
        // x_b <= x_a - c
        for &(a, b, c) in constraints {
            if dist[a] - c < dist[b] {
                dist[b] = dist[a] - c;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    false
}

/// Decides whether a matrix is the entrywise minimum of two rank-one
/// matrices `x_i + y_j`, by choosing for each entry the summand that
/// attains it.
fn min_of_two_rank_one(rows: &[Vec<i64>]) -> bool {
    // Variables: x_0..x_r then w_j = -y_j; x_i + y_j = x_i - w_j.
    fn rec(rows: &[Vec<i64>], j: usize, sys: &mut [Vec<(usize, usize, i64)>; 2]) -> bool {
        let (r, c) = (rows.len(), rows[0].len());
        if j == c {
            return true;
        }
        for choice in 0u32..1 << r {
            let saved = [sys[0].len(), sys[1].len()];
            for i in 0..r {
                let k = (choice >> i & 1) as usize;
                let v = rows[i][j];
                sys[k].push((i, r + j, v));
                sys[k].push((r + j, i, -v));
                sys[1 - k].push((i, r + j, v));
            }
            if feasible(r + c, &sys[0]) && feasible(r + c, &sys[1]) && rec(rows, j + 1, sys) {
                return true;
            }
            sys[0].truncate(saved[0]);
            sys[1].truncate(saved[1]);
        }
        false
    }
    rec(rows, 0, &mut [Vec::new(), Vec::new()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn barvinok_test_matches_decomposition_search(n in 1usize..=5, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rows = if seed % 2 == 0 {
            two_rank_one_min(&mut rng, 3, n)
        } else {
            (0..3).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect()
        };
        let m = IntMatrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(barvinok_rank_le2(&m).at_most_two, min_of_two_rank_one(&rows));
    }
}

#[test]
fn hull_tree_ignores_insertion_order() {
    let checked = common::hull_order_independence(240, 5);
    assert!(checked >= 200, "only {checked} configurations had a tree hull");
}

#[test]
fn facet_samples_label_their_facet() {
    for d in 3..=4 {
        for n in 2..=5 {
            let gc = build_complex(d, n, Variant::T).unwrap();
            for k in 0..gc.facets.len() {
                assert_eq!(face_label(&gc.interior_sample(k)).unwrap(), gc.facets[k], "d={d} n={n}");
            }
        }
    }
}

#[test]
fn boundary_of_boundary_vanishes() {
    let mut rng = StdRng::seed_from_u64(3);
    for (d, n, v) in [(3, 4, Variant::T), (3, 5, Variant::B), (4, 4, Variant::T), (4, 4, Variant::B)] {
        let gc = build_complex(d, n, v).unwrap();
        let k = &gc.complex;
        for dim in 1..=k.dim() as usize {
            let faces = k.faces(dim);
            for _ in 0..20 {
                let mut c = Chain::zero(dim as isize);
                for _ in 0..rng.gen_range(1..=8) {
                    let f = faces.choose(&mut rng).unwrap();
                    c.add(&Chain::oriented(f, rng.gen_range(-5..=5)));
                }
                let dd = boundary(k, &boundary(k, &c).unwrap()).unwrap();
                assert!(dd.is_zero(), "d={d} n={n} dim={dim}");
            }
        }
    }
}

fn class_string() -> impl Strategy<Value = ClassString> {
    (1usize..=6)
        .prop_flat_map(|n| proptest::collection::vec(0usize..6, n))
        .prop_map(|v| ClassString::new(v.into_iter().map(|k| ClassSymbol::ALL[k]).collect()))
        .prop_filter("valid", ClassString::is_valid)
}

fn same_length_triple() -> impl Strategy<Value = (ClassString, ClassString, ClassString)> {
    (1usize..=6).prop_flat_map(|n| {
        let one = proptest::collection::vec(0usize..6, n)
            .prop_map(|v| ClassString::new(v.into_iter().map(|k| ClassSymbol::ALL[k]).collect()))
            .prop_filter("valid", ClassString::is_valid);
        (one.clone(), one.clone(), one)
    })
}

fn face(s: &ClassString) -> ClassFace {
    ClassFace::Face(s.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn class_meet_algebra((s, t, u) in same_length_triple()) {
        prop_assert_eq!(class_intersect(&s, &t).unwrap(), class_intersect(&t, &s).unwrap());
        prop_assert_eq!(class_intersect(&s, &s).unwrap(), face(&s));
        let left = face(&s).intersect(&face(&t)).unwrap().intersect(&face(&u)).unwrap();
        let right = face(&s).intersect(&face(&t).intersect(&face(&u)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn class_meet_stays_valid(s in class_string()) {
        let dim = class_dimension(&s).unwrap();
        let all_c = ClassString::new(vec![ClassSymbol::C; s.len()]);
        if let ClassFace::Face(m) = class_intersect(&s, &all_c).unwrap() {
            prop_assert!(m.is_valid());
            prop_assert!(class_dimension(&m).unwrap() <= dim);
        }
    }
}

#[test]
fn class_meet_algebra_exhaustive() {
    for n in 1..=3 {
        let all = ClassString::enumerate_valid(n);
        for s in &all {
            assert_eq!(class_intersect(s, s).unwrap(), face(s));
            for t in &all {
                let st = class_intersect(s, t).unwrap();
                assert_eq!(st, class_intersect(t, s).unwrap());
                if let ClassFace::Face(m) = &st {
                    assert!(m.is_valid());
                    // The meet lies below both arguments.
                    assert_eq!(class_intersect(m, s).unwrap(), st);
                }
                for u in &all {
                    let left = st.intersect(&face(u)).unwrap();
                    let right = face(s).intersect(&class_intersect(t, u).unwrap()).unwrap();
                    assert_eq!(left, right, "{s} {t} {u}");
                }
            }
        }
    }
}

#[test]
fn planar_facets_meet_on_common_symbols() {
    for n in 2..=4 {
        let gc = build_complex(3, n, Variant::T).unwrap();
        let strings: Vec<String> = gc.facets.iter().map(|f| f.d3_string().unwrap()).collect();
        let rays: Vec<BTreeSet<u32>> = gc.complex.facets().iter().map(|f| f.iter().copied().collect()).collect();
        for a in 0..strings.len() {
            for b in 0..strings.len() {
                let agree = strings[a].chars().zip(strings[b].chars()).filter(|(x, y)| x == y).count();
                let common = rays[a].intersection(&rays[b]).count();
                assert_eq!(common, agree, "{} {}", strings[a], strings[b]);
            }
        }
    }
}
