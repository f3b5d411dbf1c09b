use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use tropline::complex_gen::{build_complex, Variant};
use tropline::homology::{rational_betti_numbers, reduced_homology};
use tropline::shelling::{is_shelling, is_shelling_by_union, shelling_top_betti, snake_order, ternary_complex};
use tropline::simplicial::{is_subset, SimplicialComplex};

#[test]
fn planar_small_counts() {
    let t34 = build_complex(3, 4, Variant::T).unwrap();
    assert_eq!(t34.complex.f_vector(), vec![12, 54, 108, 78]);
    let t33 = build_complex(3, 3, Variant::T).unwrap();
    assert_eq!(t33.complex.euler_characteristic(), 5);
}

#[test]
fn barvinok_part_is_a_subcomplex() {
    for (d, n) in [(3, 3), (3, 4), (3, 5), (4, 4), (4, 5)] {
        let t = build_complex(d, n, Variant::T).unwrap();
        let b = build_complex(d, n, Variant::B).unwrap();
        assert_eq!(b.filter_disagreements, 0);
        let index = t.facet_index();
        for (k, f) in b.facets.iter().enumerate() {
            let j = index[f];
            assert_eq!(b.facet_rays(k), t.facet_rays(j));
        }
    }
}

#[test]
fn generated_complexes_are_fans() {
    for (d, n) in [(3, 3), (4, 4)] {
        let gc = build_complex(d, n, Variant::T).unwrap();
        assert!(gc.complex.fan_validity());
        assert!(gc.complex.purity_check(gc.complex.dim() as usize));
    }
}

#[test]
fn rational_and_integral_betti_numbers_agree() {
    for (d, n, v) in [(3, 3, Variant::T), (3, 4, Variant::B), (3, 5, Variant::B), (4, 4, Variant::B)] {
        let k = &build_complex(d, n, v).unwrap().complex;
        assert_eq!(reduced_homology(k).betti_numbers(), rational_betti_numbers(k));
    }
}

fn random_complex(rng: &mut StdRng, vertices: u32, dim: usize, count: usize) -> SimplicialComplex {
    let mut facets = Vec::new();
    let all: Vec<u32> = (0..vertices).collect();
    for _ in 0..count {
        let mut f: Vec<u32> = all.choose_multiple(rng, dim + 1).copied().collect();
        f.sort_unstable();
        facets.push(f);
    }
    facets.sort();
    facets.dedup();
    SimplicialComplex::new(vertices as usize, facets)
}

#[test]
fn shelling_test_matches_union_oracle() {
    let mut rng = StdRng::seed_from_u64(17);
    let mut agreed_shellings = 0;
    for trial in 0..600 {
        let dim = rng.gen_range(1..=3);
        let vertices = rng.gen_range(dim as u32 + 2..=8);
        let count = rng.gen_range(2..=9);
        let k = random_complex(&mut rng, vertices, dim, count);
        let mut order: Vec<_> = k.facets().to_vec();
        order.shuffle(&mut rng);
        let fast = is_shelling(&k, &order).unwrap().valid;
        assert_eq!(fast, is_shelling_by_union(&k, &order).unwrap(), "trial {trial}");
        agreed_shellings += fast as usize;
    }
    assert!(agreed_shellings > 20);

    for n in 2..=4 {
        let (k, snake) = ternary_complex(n, &[1, 2, 3]);
        for _ in 0..30 {
            let mut order = snake.clone();
            let a = rng.gen_range(0..order.len());
            let b = rng.gen_range(0..order.len());
            order.swap(a, b);
            assert_eq!(is_shelling(&k, &order).unwrap().valid, is_shelling_by_union(&k, &order).unwrap());
        }
    }
}

#[test]
fn snake_order_is_a_listing_of_all_strings() {
    for n in 1..=5 {
        let order = snake_order(n);
        assert_eq!(order.len(), 3usize.pow(n as u32));
        for w in order.windows(2) {
            let diff = w[0].symbols().iter().zip(w[1].symbols()).filter(|(a, b)| a != b).count();
            assert_eq!(diff, 1);
        }
    }
}

#[test]
fn shellable_complexes_have_free_top_homology() {
    for n in 2..=5 {
        for removed in [&[1u8, 2, 3][..], &[1], &[2, 3], &[]] {
            let (k, order) = ternary_complex(n, removed);
            let report = is_shelling(&k, &order).unwrap();
            assert!(report.valid, "n={n} removed={removed:?}");
            let h = reduced_homology(&k);
            let top = k.dim() as usize;
            for g in h.groups.iter() {
                assert!(g.torsion.is_empty());
                if g.dim != top {
                    assert_eq!(g.betti, 0);
                }
            }
            assert_eq!(h.betti(top), shelling_top_betti(&k, &order).unwrap());
        }
    }
}

#[test]
fn removal_complexes_sit_inside_the_full_one() {
    let (full, _) = ternary_complex(3, &[]);
    let (part, _) = ternary_complex(3, &[1, 3]);
    for f in part.facets() {
        assert!(full.facets().iter().any(|g| is_subset(f, g)));
    }
}

#[test]
fn class_table_matches_geometry_on_samples() {
    for (n, samples) in [(4, 1500), (5, 400), (6, 150)] {
        let r = tropline::barvinok_classes::geometric_agreement(n, Some(samples), 7).unwrap();
        assert!(r.agrees, "n={n}: {:?}", r.first_failure);
    }
}
