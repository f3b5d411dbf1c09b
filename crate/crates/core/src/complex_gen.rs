//! Enumeration of the simplicial complexes `T(d,n)` and `B(d,n)`.
//!
//! A maximal cone is a trivalent tree with `d` labelled leaves together with
//! a placement of each of the `n` points on a leaf or an internal edge such
//! that the points regenerate the tree. Its parameters are the internal
//! edge lengths and the distance of each point from a node. Ordering the
//! points on every internal edge makes each cone simplicial; the extreme
//! rays are obtained by setting one gap parameter to 1 and all others to 0.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical_line::{face_label_unchecked, FaceDescriptor, Placement};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Support};
use crate::simplicial::{Face, SimplicialComplex};
use crate::trop_core::barvinok_rank_le2;

/// Tree with `d` labelled leaves. Nodes `0..d` are the leaves (node `i` is
/// direction `i`), the remaining nodes are internal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafTree {
    pub d: usize,
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
    /// Internal edges as splits, sorted; the split is the leaf set on the
    /// side away from leaf 0.
    pub splits: Vec<Support>,
}

/// Edge of a [`LeafTree`] a point can be placed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    Leaf(usize),
    /// Index into `splits`.
    Internal(usize),
}

impl LeafTree {
    fn from_edges(d: usize, node_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut tree = LeafTree { d, node_count, edges, splits: Vec::new() };
        let mut splits: Vec<Support> = tree
            .edges
            .iter()
            .filter(|(a, b)| *a >= d && *b >= d)
            .map(|&(a, b)| {
                let side = tree.leaves_beyond(a, b);
                if side.contains(0) {
                    side.complement(d)
                } else {
                    side
                }
            })
            .collect();
        splits.sort();
        tree.splits = splits;
        tree
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Leaves reached from `to` without passing through `from`.
    fn leaves_beyond(&self, from: usize, to: usize) -> Support {
        let mut acc = Support::EMPTY;
        let mut stack = vec![(from, to)];
        while let Some((prev, v)) = stack.pop() {
            if v < self.d {
                acc = acc.with(v);
            }
            for w in self.neighbours(v) {
                if w != prev {
                    stack.push((v, w));
                }
            }
        }
        acc
    }

    pub fn segment_count(&self) -> usize {
        self.d + self.splits.len()
    }

    pub fn segments(&self) -> Vec<Segment> {
        (0..self.d).map(Segment::Leaf).chain((0..self.splits.len()).map(Segment::Internal)).collect()
    }

    /// Leaf set lying beyond a segment as seen from an internal node; a
    /// point on the segment belongs to that branch of the node.
    fn branch_of(&self, node: usize, seg: Segment) -> Support {
        let seg_leaves = match seg {
            Segment::Leaf(i) => Support::single(i),
            Segment::Internal(k) => self.splits[k],
        };
        for w in self.neighbours(node) {
            let branch = self.leaves_beyond(node, w);
            // The segment lies in the branch iff its far leaf set (or its
            // complement for internal edges) sits inside the branch.
            if seg_leaves.is_subset(branch)
                || (matches!(seg, Segment::Internal(_)) && seg_leaves.complement(self.d).is_subset(branch))
            {
                return branch;
            }
        }
        unreachable!("every segment lies in some branch")
    }

    fn internal_nodes(&self) -> impl Iterator<Item = usize> {
        self.d..self.node_count
    }
}

/// All trivalent trees with `d` labelled leaves, built by attaching leaf
/// `k` to every edge of each tree on the first `k` leaves.
pub fn enumerate_leaf_trees(d: usize) -> Result<Vec<LeafTree>> {
    if d < 3 {
        return Err(Error::UnsupportedDimension(d));
    }
    // Internal node ids are assigned later; start with temporary ids.
    let center = 100_000;
    let mut partial: Vec<(usize, Vec<(usize, usize)>)> =
        vec![(center + 1, vec![(0, center), (1, center), (2, center)])];
    for leaf in 3..d {
        let mut next = Vec::new();
        for (fresh, edges) in &partial {
            for k in 0..edges.len() {
                let (a, b) = edges[k];
                let mut e = edges.clone();
                e.swap_remove(k);
                e.push((a, *fresh));
                e.push((*fresh, b));
                e.push((leaf, *fresh));
                next.push((fresh + 1, e));
            }
        }
        partial = next;
    }
    let mut trees: Vec<LeafTree> = partial
        .into_iter()
        .map(|(_, edges)| {
            let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
            let mut remap = |v: usize| -> usize {
                if v < d {
                    v
                } else {
                    let next = d + ids.len();
                    *ids.entry(v).or_insert(next)
                }
            };
            let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (remap(a), remap(b))).collect();
            LeafTree::from_edges(d, 2 * d - 2, edges)
        })
        .collect();
    trees.sort_by(|a, b| a.splits.cmp(&b.splits));
    trees.dedup_by(|a, b| a.splits == b.splits);
    Ok(trees)
}

/// Every internal node must have points in at least two of its branches.
pub fn regeneration_check(tree: &LeafTree, placement: &[Segment]) -> bool {
    tree.internal_nodes().all(|v| {
        let mut branches = placement.iter().map(|&s| tree.branch_of(v, s));
        match branches.next() {
            Some(first) => branches.any(|b| b != first),
            None => false,
        }
    })
}

/// Precomputed branch table for fast regeneration tests.
struct BranchTable {
    /// `table[v][segment]` = branch id at internal node `v`.
    table: Vec<Vec<Support>>,
}

impl BranchTable {
    fn new(tree: &LeafTree) -> Self {
        let segs = tree.segments();
        let table = tree.internal_nodes().map(|v| segs.iter().map(|&s| tree.branch_of(v, s)).collect()).collect();
        Self { table }
    }

    fn regenerates(&self, placement: &[usize]) -> bool {
        self.table.iter().all(|row| {
            let first = row[placement[0]];
            placement.iter().any(|&s| row[s] != first)
        })
    }
}

fn descriptor(tree: &LeafTree, placement: &[usize], ranks: &[Option<u32>]) -> FaceDescriptor {
    let placements = placement
        .iter()
        .zip(ranks)
        .map(
            |(&s, &rank)| {
                if s < tree.d {
                    Placement::Leaf(s)
                } else {
                    Placement::Edge { split: tree.splits[s - tree.d], rank }
                }
            },
        )
        .collect();
    FaceDescriptor { dim: tree.d, splits: tree.splits.clone(), placements }
}

/// Streams the maximal faces of `T(d,n)`, tree by tree.
pub struct FacetIter {
    trees: Vec<LeafTree>,
    tables: Vec<BranchTable>,
    n: usize,
    refined: bool,
    tree: usize,
    placement: Vec<usize>,
    exhausted: bool,
    pending: Vec<FaceDescriptor>,
}

impl FacetIter {
    pub fn new(d: usize, n: usize, refined: bool) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewPoints(n));
        }
        let trees = enumerate_leaf_trees(d)?;
        let tables = trees.iter().map(BranchTable::new).collect();
        Ok(Self { trees, tables, n, refined, tree: 0, placement: vec![0; n], exhausted: false, pending: Vec::new() })
    }

    fn advance(&mut self) {
        let base = self.trees[self.tree].segment_count();
        for slot in self.placement.iter_mut().rev() {
            *slot += 1;
            if *slot < base {
                return;
            }
            *slot = 0;
        }
        self.tree += 1;
        if self.tree == self.trees.len() {
            self.exhausted = true;
        }
    }

    fn expand(&mut self) {
        let tree = &self.trees[self.tree];
        let placement = &self.placement;
        if !self.refined {
            self.pending.push(descriptor(tree, placement, &vec![None; self.n]));
            return;
        }
        // Every ordering of the points on each internal edge.
        let groups: Vec<Vec<usize>> = (tree.d..tree.segment_count())
            .map(|s| (0..self.n).filter(|&j| placement[j] == s).collect())
            .filter(|g: &Vec<usize>| !g.is_empty())
            .collect();
        let mut ranks = vec![None; self.n];
        fn rec(
            groups: &[Vec<usize>],
            ranks: &mut Vec<Option<u32>>,
            tree: &LeafTree,
            placement: &[usize],
            out: &mut Vec<FaceDescriptor>,
        ) {
            let Some((group, rest)) = groups.split_first() else {
                out.push(descriptor(tree, placement, ranks));
                return;
            };
            for perm in permutations(group.len()) {
                for (r, &p) in perm.iter().enumerate() {
                    ranks[group[p]] = Some(r as u32);
                }
                rec(rest, ranks, tree, placement, out);
            }
        }
        let mut out = Vec::new();
        rec(&groups, &mut ranks, tree, placement, &mut out);
        out.reverse();
        self.pending.extend(out);
    }
}

impl Iterator for FacetIter {
    type Item = FaceDescriptor;

    fn next(&mut self) -> Option<FaceDescriptor> {
        loop {
            if let Some(f) = self.pending.pop() {
                return Some(f);
            }
            if self.exhausted {
                return None;
            }
            if self.tables[self.tree].regenerates(&self.placement) {
                self.expand();
            }
            self.advance();
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// All maximal faces of `T(d,n)`, sorted. With `refined`, cones with several
/// points on an internal edge are split by the order of those points.
pub fn enumerate_facets(d: usize, n: usize, refined: bool) -> Result<Vec<FaceDescriptor>> {
    let mut facets: Vec<FaceDescriptor> = FacetIter::new(d, n, refined)?.collect();
    facets.par_sort_unstable();
    Ok(facets)
}

/// Extreme ray of a cone: a primitive integer matrix with every column's
/// first coordinate zero and the base of leaf 1 at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayMatrix(Matrix<i64>);

impl RayMatrix {
    pub fn canonical(m: &Matrix<i64>) -> Self {
        let mut out = m.clone();
        for j in 0..m.cols() {
            let first = *m.get(0, j);
            out.add_to_column(j, &-first);
        }
        let g = out.entries().iter().fold(0i64, |g, &v| num_integer::gcd(g, v));
        if g > 1 {
            out = out.map(|v| v / g);
        }
        RayMatrix(out)
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.0
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.0.rows()).map(|i| self.0.row(i).to_vec()).collect()
    }
}

impl Serialize for RayMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RayMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        Matrix::from_rows(rows).map(RayMatrix).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RayMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Positions of the points for given internal edge lengths and offsets.
///
/// A point on leaf `i` at offset `t` sits at `sum L_s 1_s + t e_i` over the
/// splits `s` containing `i`; a point on internal edge `f` at offset `t` from
/// its direction-1 end sits at `sum_{s > f} L_s 1_s + t 1_f`; a node sits at
/// the sum over splits containing everything beyond it.
pub fn embed(face: &FaceDescriptor, lengths: &BTreeMap<Support, i64>, offsets: &[i64]) -> Matrix<i64> {
    let d = face.dim;
    let columns: Vec<Vec<i64>> = face
        .placements
        .iter()
        .zip(offsets)
        .map(|(p, &t)| {
            let mut pos = vec![0i64; d];
            let mut add = |s: Support, amount: i64| {
                for i in s.iter() {
                    pos[i] += amount;
                }
            };
            match p {
                Placement::Leaf(i) => {
                    for (&s, &len) in lengths {
                        if s.contains(*i) {
                            add(s, len);
                        }
                    }
                    add(Support::single(*i), t);
                }
                Placement::Edge { split, .. } => {
                    for (&s, &len) in lengths {
                        if split.is_subset(s) && s != *split {
                            add(s, len);
                        }
                    }
                    add(*split, t);
                }
                Placement::Node(parts) => {
                    let beyond = parts.iter().filter(|s| !s.contains(0)).fold(Support::EMPTY, |a, &s| a.union(s));
                    for (&s, &len) in lengths {
                        if beyond.is_subset(s) {
                            add(s, len);
                        }
                    }
                }
            }
            pos
        })
        .collect();
    Matrix::from_columns(&columns).expect("d >= 1 and n >= 1")
}

/// Extreme rays of a refined (simplicial) maximal cone, one per parameter:
/// first the gaps along each internal edge in split order, then the offset
/// of each point on a leaf.
pub fn facet_extreme_rays(face: &FaceDescriptor) -> Vec<RayMatrix> {
    let n = face.placements.len();
    let mut rays = Vec::new();
    for &split in &face.splits {
        let mut on_edge: Vec<(u32, usize)> = face
            .placements
            .iter()
            .enumerate()
            .filter_map(|(j, p)| match p {
                Placement::Edge { split: s, rank } if *s == split => Some((rank.unwrap_or(0), j)),
                _ => None,
            })
            .collect();
        on_edge.sort();
        let lengths: BTreeMap<Support, i64> = face.splits.iter().map(|&s| (s, i64::from(s == split))).collect();
        for gap in 0..=on_edge.len() {
            let mut offsets = vec![0i64; n];
            for &(_, j) in &on_edge[gap..] {
                offsets[j] = 1;
            }
            rays.push(RayMatrix::canonical(&embed(face, &lengths, &offsets)));
        }
    }
    let zero_lengths: BTreeMap<Support, i64> = face.splits.iter().map(|&s| (s, 0)).collect();
    for (j, p) in face.placements.iter().enumerate() {
        if matches!(p, Placement::Leaf(_)) {
            let mut offsets = vec![0i64; n];
            offsets[j] = 1;
            rays.push(RayMatrix::canonical(&embed(face, &zero_lengths, &offsets)));
        }
    }
    rays
}

/// Sum of the rays: a point in the relative interior of the cone.
pub fn interior_sample(rays: &[RayMatrix]) -> Matrix<i64> {
    let first = rays.first().expect("a cone has at least one ray").matrix();
    let mut sum = Matrix::zeros(first.rows(), first.cols()).expect("nonempty");
    for r in rays {
        let m = r.matrix();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                sum.set(i, j, sum.get(i, j) + m.get(i, j));
            }
        }
    }
    sum
}

/// Barvinok rank two on a trivalent facet: each side of every internal
/// edge has at most one leaf carrying points.
pub fn combinatorial_barvinok_filter(face: &FaceDescriptor) -> bool {
    let loaded = face.placements.iter().fold(Support::EMPTY, |acc, p| match p {
        Placement::Leaf(i) => acc.with(*i),
        _ => acc,
    });
    if face.splits.is_empty() {
        // Star tree: the points must use at most two of the leaves.
        return loaded.len() <= 2;
    }
    face.splits.iter().all(|&s| loaded.intersect(s).len() <= 1 && loaded.intersect(s.complement(face.dim)).len() <= 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Tropical rank two.
    T,
    /// Barvinok rank two.
    B,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" => Ok(Variant::T),
            "B" | "b" => Ok(Variant::B),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::T => "T",
            Variant::B => "B",
        })
    }
}

/// A generated complex together with its geometric data.
#[derive(Clone, Debug)]
pub struct GeneratedComplex {
    pub d: usize,
    pub n: usize,
    pub variant: Variant,
    pub vertices: Vec<RayMatrix>,
    /// Refined maximal cones; `complex.facets()` lists the same cones in
    /// the same order.
    pub facets: Vec<FaceDescriptor>,
    pub complex: SimplicialComplex,
    /// Facets on which the semantic and combinatorial Barvinok tests differ.
    pub filter_disagreements: usize,
}

impl GeneratedComplex {
    pub fn facet_index(&self) -> HashMap<&FaceDescriptor, usize> {
        self.facets.iter().enumerate().map(|(k, f)| (f, k)).collect()
    }

    pub fn vertex_index(&self) -> HashMap<&RayMatrix, u32> {
        self.vertices.iter().enumerate().map(|(k, v)| (v, k as u32)).collect()
    }

    pub fn facet_rays(&self, k: usize) -> Vec<&RayMatrix> {
        self.complex.facets()[k].iter().map(|&v| &self.vertices[v as usize]).collect()
    }

    pub fn interior_sample(&self, k: usize) -> Matrix<i64> {
        let rays: Vec<RayMatrix> = self.facet_rays(k).into_iter().cloned().collect();
        interior_sample(&rays)
    }
}

/// Builds `T(d,n)` or `B(d,n)` as a simplicial complex on the deduplicated
/// extreme rays.
pub fn build_complex(d: usize, n: usize, variant: Variant) -> Result<GeneratedComplex> {
    let candidates = enumerate_facets(d, n, true)?;
    let with_rays: Vec<(FaceDescriptor, Vec<RayMatrix>, bool)> = candidates
        .into_par_iter()
        .filter_map(|f| {
            let rays = facet_extreme_rays(&f);
            let mut disagreement = false;
            if variant == Variant::B {
                let semantic = barvinok_rank_le2(&interior_sample(&rays)).at_most_two;
                disagreement = semantic != combinatorial_barvinok_filter(&f);
                if !semantic {
                    return disagreement.then_some((f, Vec::new(), true));
                }
            }
            Some((f, rays, disagreement))
        })
        .collect();
    let filter_disagreements = with_rays.iter().filter(|(_, _, bad)| *bad).count();
    let kept: Vec<(FaceDescriptor, Vec<RayMatrix>)> =
        with_rays.into_iter().filter(|(_, r, _)| !r.is_empty()).map(|(f, r, _)| (f, r)).collect();

    let mut vertices: Vec<RayMatrix> = kept.iter().flat_map(|(_, r)| r.iter().cloned()).collect();
    vertices.par_sort_unstable();
    vertices.dedup();
    let index: HashMap<&RayMatrix, u32> = vertices.iter().enumerate().map(|(k, v)| (v, k as u32)).collect();
    let mut pairs: Vec<(Face, FaceDescriptor)> = kept
        .iter()
        .map(|(f, rays)| {
            let mut face: Face = rays.iter().map(|r| index[r]).collect();
            face.sort_unstable();
            (face, f.clone())
        })
        .collect();
    pairs.par_sort_unstable();
    let (faces, facets): (Vec<Face>, Vec<FaceDescriptor>) = pairs.into_iter().unzip();
    let complex = SimplicialComplex::new(vertices.len(), faces);
    debug_assert_eq!(complex.facets().len(), facets.len());
    Ok(GeneratedComplex { d, n, variant, vertices, facets, complex, filter_disagreements })
}

/// Outcome of mapping facets through matrix transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub involution: bool,
    /// Image facet of each facet, when the transposed sample is generic.
    pub map: Vec<Option<usize>>,
    pub first_failure: Option<String>,
}

/// Transposes the interior sample of every facet of a square `T(d,d)` and
/// locates the facet containing it; succeeds iff this is an involution.
pub fn transpose_duality_check(gc: &GeneratedComplex) -> Result<DualityReport> {
    if gc.d != gc.n {
        return Err(Error::NonSquare { rows: gc.d, cols: gc.n });
    }
    let index = gc.facet_index();
    let map: Vec<Option<usize>> = (0..gc.facets.len())
        .into_par_iter()
        .map(|k| {
            let t = gc.interior_sample(k).transpose();
            face_label_unchecked(&t).ok().and_then(|label| index.get(&label).copied())
        })
        .collect();
    let mut first_failure = None;
    for (k, image) in map.iter().enumerate() {
        let problem = match image {
            None => Some(format!("transpose of facet {} is not in the interior of a facet", gc.facets[k])),
            Some(g) if map[*g] != Some(k) => {
                Some(format!("facet {} maps to {}, which does not map back", gc.facets[k], gc.facets[*g]))
            }
            _ => None,
        };
        if problem.is_some() {
            first_failure = problem;
            break;
        }
    }
    Ok(DualityReport { involution: first_failure.is_none(), map, first_failure })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_tree_counts() {
        assert_eq!(enumerate_leaf_trees(3).unwrap().len(), 1);
        let four = enumerate_leaf_trees(4).unwrap();
        let splits: Vec<Support> = four.iter().map(|t| t.splits[0]).collect();
        // 12|34, 13|24, 14|23 written as the side without leaf 1
        assert_eq!(splits, vec![Support(0b0110), Support(0b1010), Support(0b1100)]);
        assert_eq!(enumerate_leaf_trees(5).unwrap().len(), 15);
        assert!(enumerate_leaf_trees(2).is_err());
    }

    #[test]
    fn regeneration_examples() {
        let trees = enumerate_leaf_trees(4).unwrap();
        let t12 = trees.iter().find(|t| t.splits == vec![Support(0b1100)]).unwrap();
        use Segment::*;
        assert!(!regeneration_check(t12, &[Leaf(0), Leaf(1), Leaf(0), Leaf(1)]));
        assert!(regeneration_check(t12, &[Leaf(0), Leaf(2), Leaf(0), Leaf(2)]));
        assert!(!regeneration_check(t12, &[Internal(0), Leaf(2)]));
        let star = &enumerate_leaf_trees(3).unwrap()[0];
        assert!(!regeneration_check(star, &[Leaf(1), Leaf(1), Leaf(1)]));
        assert!(regeneration_check(star, &[Leaf(1), Leaf(2)]));
    }

    #[test]
    fn facet_counts_small() {
        assert_eq!(enumerate_facets(3, 4, false).unwrap().len(), 78);
        let unrefined = enumerate_facets(4, 4, false).unwrap();
        assert_eq!(unrefined.len(), 1392);
        let non_simplicial = unrefined.iter().filter(|f| f.edge_loads().values().any(|&k| k >= 2)).count();
        assert_eq!(non_simplicial, 144);
        assert_eq!(enumerate_facets(4, 4, true).unwrap().len(), 1536);
    }

    #[test]
    fn rays_of_a_planar_facet() {
        let f = FaceDescriptor::from_d3_string("12").unwrap();
        let rays = facet_extreme_rays(&f);
        let expect = |s: &str| {
            let g = FaceDescriptor::from_d3_string(s).unwrap();
            let offsets: Vec<i64> = s.chars().map(|c| i64::from(c != '0')).collect();
            RayMatrix::canonical(&embed(&g, &BTreeMap::new(), &offsets))
        };
        assert_eq!(rays, vec![expect("10"), expect("02")]);
    }

    #[test]
    fn planar_complex_sizes() {
        let t33 = build_complex(3, 3, Variant::T).unwrap();
        assert_eq!((t33.vertices.len(), t33.complex.facets().len()), (9, 24));
        let b33 = build_complex(3, 3, Variant::B).unwrap();
        assert_eq!((b33.vertices.len(), b33.complex.facets().len()), (9, 18));
        assert_eq!(b33.filter_disagreements, 0);
    }
}
