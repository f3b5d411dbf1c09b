//! Abstract simplicial complexes given by their facets.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::trop_core::combinations;

pub type Face = Vec<u32>;

/// Simplicial complex stored as sorted, inclusion-maximal facets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
    #[serde(skip)]
    vertex_star: OnceLock<Vec<Vec<u32>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Normalizes the facet list: vertices sorted, duplicates and faces
    /// contained in other facets dropped.
    pub fn new(vertex_count: usize, facets: Vec<Face>) -> Self {
        let mut facets: Vec<Face> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        facets.par_sort_unstable();
        facets.dedup();
        let sizes: HashSet<usize> = facets.iter().map(Vec::len).collect();
        if sizes.len() > 1 {
            let max_size = sizes.iter().copied().max().unwrap_or(0);
            let keep: Vec<bool> = facets
                .par_iter()
                .map(|f| f.len() == max_size || !facets.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
                .collect();
            facets = facets.into_iter().zip(keep).filter_map(|(f, k)| k.then_some(f)).collect();
        }
        let vertex_count = vertex_count.max(facets.iter().flatten().map(|&v| v as usize + 1).max().unwrap_or(0));
        Self { vertex_count, facets, vertex_star: OnceLock::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the largest facet; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// All faces with `k + 1` vertices, sorted.
    pub fn faces(&self, k: usize) -> Vec<Face> {
        let size = k + 1;
        let mut out: Vec<Face> = self
            .facets
            .par_iter()
            .filter(|f| f.len() >= size)
            .flat_map_iter(|f| {
                combinations(f.len(), size).into_iter().map(move |idx| idx.iter().map(|&i| f[i]).collect::<Face>())
            })
            .collect();
        out.par_sort_unstable();
        out.dedup();
        out
    }

    /// `f_k` = number of faces with `k + 1` vertices, for `k = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let dim = self.dim();
        if dim < 0 {
            return Vec::new();
        }
        (0..=dim as usize).map(|k| self.faces(k).len()).collect()
    }

    /// Reduced Euler characteristic `sum (-1)^k f_k - 1`.
    pub fn euler_characteristic(&self) -> i64 {
        let chi: i64 =
            self.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        chi - 1
    }

    /// Every facet has exactly `expected_dim + 1` vertices.
    pub fn purity_check(&self, expected_dim: usize) -> bool {
        self.facets.iter().all(|f| f.len() == expected_dim + 1)
    }

    fn star_index(&self) -> &Vec<Vec<u32>> {
        self.vertex_star.get_or_init(|| {
            let mut star = vec![Vec::new(); self.vertex_count];
            for (k, f) in self.facets.iter().enumerate() {
                for &v in f {
                    star[v as usize].push(k as u32);
                }
            }
            star
        })
    }

    /// Whether a sorted vertex set is a face (the empty set always is).
    pub fn contains_face(&self, face: &[u32]) -> bool {
        let Some(&first) = face.first() else { return true };
        let star = self.star_index();
        if first as usize >= star.len() {
            return false;
        }
        star[first as usize].iter().any(|&k| is_subset(face, &self.facets[k as usize]))
    }

    /// Subcomplex generated by a subset of the facets.
    pub fn restrict(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        Self::new(self.vertex_count, self.facets.iter().filter(|f| keep(f)).cloned().collect())
    }

    /// Faces common to both complexes, as a complex on the same vertex set.
    pub fn intersection(&self, other: &SimplicialComplex) -> Self {
        let mut faces = Vec::new();
        for f in &self.facets {
            let star = other.star_index();
            let mut candidates: Vec<u32> = f.iter().filter_map(|&v| star.get(v as usize)).flatten().copied().collect();
            candidates.sort_unstable();
            candidates.dedup();
            for k in candidates {
                let g = &other.facets[k as usize];
                let common: Face = f.iter().copied().filter(|v| g.binary_search(v).is_ok()).collect();
                faces.push(common);
            }
        }
        Self::new(self.vertex_count.max(other.vertex_count), faces)
    }

    /// Sanity check on a facet list: pairwise intersections are faces of
    /// both facets and distinct facets have distinct vertex sets.
    pub fn fan_validity(&self) -> bool {
        let distinct = self.facets.windows(2).all(|w| w[0] != w[1]);
        distinct
            && self.facets.par_iter().enumerate().all(|(i, f)| {
                self.facets[i + 1..].iter().all(|g| {
                    let common: Face = f.iter().copied().filter(|v| g.binary_search(v).is_ok()).collect();
                    self.contains_face(&common) && is_subset(&common, f) && is_subset(&common, g)
                })
            })
    }
}

/// Both slices sorted ascending.
pub fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.by_ref().any(|w| w == v))
}
