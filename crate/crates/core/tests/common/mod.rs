#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use tropline::complex_gen::{build_complex, Variant};
use tropline::trop_hull::build_hull_tree;
use tropline::{IntMatrix, Matrix, ProjectivePoint};

/// All permutations of `0..n`, by insertion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Largest square minor whose permutation minimum is attained once.
pub fn rank_by_minors(rows: &[Vec<i64>]) -> usize {
    let (r, c) = (rows.len(), rows[0].len());
    for k in (1..=r.min(c)).rev() {
        let perms = permutations(k);
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let values: Vec<i64> = perms.iter().map(|p| (0..k).map(|i| rows[rs[i]][cs[p[i]]]).sum()).collect();
                let min = *values.iter().min().unwrap();
                if values.iter().filter(|&&v| v == min).count() == 1 {
                    return k;
                }
            }
        }
    }
    0
}

pub fn two_rank_one_min(rng: &mut StdRng, r: usize, c: usize) -> Vec<Vec<i64>> {
    let x: Vec<[i64; 2]> = (0..r).map(|_| [rng.gen_range(-3..=3), rng.gen_range(-3..=3)]).collect();
    let y: Vec<[i64; 2]> = (0..c).map(|_| [rng.gen_range(-3..=3), rng.gen_range(-3..=3)]).collect();
    (0..r).map(|i| (0..c).map(|j| (x[i][0] + y[j][0]).min(x[i][1] + y[j][1])).collect()).collect()
}

/// Points on a random tropical line: columns of a random facet sample with
/// random positive weights on its rays.
pub fn line_configurations(count: usize, seed: u64) -> Vec<IntMatrix> {
    let mut rng = StdRng::seed_from_u64(seed);
    let complexes: Vec<_> = [(3, 3), (3, 5), (4, 4), (4, 5), (5, 4)]
        .iter()
        .map(|&(d, n)| build_complex(d, n, Variant::T).unwrap())
        .collect();
    (0..count)
        .map(|k| {
            if k % 3 == 0 {
                let r = rng.gen_range(3..=5);
                let c = rng.gen_range(2..=6);
                return IntMatrix::from_rows(two_rank_one_min(&mut rng, r, c)).unwrap();
            }
            let gc = &complexes[rng.gen_range(0..complexes.len())];
            let f = rng.gen_range(0..gc.facets.len());
            let rays = gc.facet_rays(f);
            let first = rays[0].matrix();
            let mut sum: IntMatrix = Matrix::zeros(first.rows(), first.cols()).unwrap();
            for ray in rays {
                let w = rng.gen_range(0..=4);
                for i in 0..sum.rows() {
                    for j in 0..sum.cols() {
                        sum.set(i, j, sum.get(i, j) + w * ray.matrix().get(i, j));
                    }
                }
            }
            sum
        })
        .collect()
}

/// Checks that shuffling the points only relabels the hull tree; returns
/// the number of configurations that have a tree hull.
pub fn hull_order_independence(count: usize, seed: u64) -> usize {
    let mut rng = StdRng::seed_from_u64(seed);
    let configs = line_configurations(count, seed);
    let mut checked = 0;
    for m in &configs {
        let points: Vec<ProjectivePoint<i64>> = m.points();
        let Ok(reference) = build_hull_tree(&points) else { continue };
        let reference = reference.canonical();
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..points.len()).collect();
            perm.shuffle(&mut rng);
            let shuffled: Vec<ProjectivePoint<i64>> = perm.iter().map(|&k| points[k].clone()).collect();
            let tree = build_hull_tree(&shuffled).unwrap().canonical();
            assert_eq!(tree.nodes, reference.nodes);
            assert_eq!(tree.edges, reference.edges);
            for (pos, &k) in perm.iter().enumerate() {
                assert_eq!(tree.locations[pos], reference.locations[k]);
            }
        }
        checked += 1;
    }
    checked
}
