//! The canonical tropical line through a rank-two configuration and the
//! combinatorial face label of the configuration.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, ProjectivePoint, Support};
use crate::scalar::Scalar;
use crate::trop_core::{has_rank_at_most_two, is_rank_one};
use crate::trop_hull::{build_hull_tree, MetricTree};

/// Hull tree completed by coordinate rays so that every node is balanced,
/// translated so the base of the direction-1 leaf is the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineTree<T> {
    pub tree: MetricTree<T>,
    /// `(node, direction)` for each ray to infinity, directions 0-based.
    pub leaf_rays: Vec<(usize, usize)>,
    pub anchor: usize,
}

/// Where a point sits on the leaf-labelled tree of its line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Placement {
    /// On the open leaf towards `direction` (0-based).
    Leaf(usize),
    /// On the open internal edge with the given split. `rank` orders the
    /// points on that edge starting from the side holding direction 1.
    Edge { split: Support, rank: Option<u32> },
    /// At a branch node, identified by the leaf sets of its branches.
    Node(Vec<Support>),
}

/// Combinatorial type of a configuration: the leaf-labelled tree (as its
/// splits) and the placement of every point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceDescriptor {
    pub dim: usize,
    /// Each internal edge as the leaf set on the side away from direction 1.
    pub splits: Vec<Support>,
    pub placements: Vec<Placement>,
}

impl FaceDescriptor {
    /// Drops the point order on internal edges.
    pub fn unrefined(&self) -> Self {
        let placements = self
            .placements
            .iter()
            .map(|p| match p {
                Placement::Edge { split, .. } => Placement::Edge { split: *split, rank: None },
                other => other.clone(),
            })
            .collect();
        Self { dim: self.dim, splits: self.splits.clone(), placements }
    }

    /// String over `{0,1,2,3}` for lines in the plane (`dim == 3`).
    pub fn d3_string(&self) -> Option<String> {
        if self.dim != 3 {
            return None;
        }
        self.placements
            .iter()
            .map(|p| match p {
                Placement::Leaf(i) => char::from_digit(*i as u32 + 1, 10),
                Placement::Node(_) => Some('0'),
                Placement::Edge { .. } => None,
            })
            .collect()
    }

    pub fn from_d3_string(s: &str) -> Result<Self> {
        let apex = vec![Support::single(0), Support::single(1), Support::single(2)];
        let placements = s
            .chars()
            .map(|c| match c {
                '0' => Ok(Placement::Node(apex.clone())),
                '1'..='3' => Ok(Placement::Leaf(c as usize - '1' as usize)),
                _ => Err(Error::Parse(format!("bad symbol {c:?} in {s:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self { dim: 3, splits: Vec::new(), placements })
    }

    /// Number of points on each internal edge.
    pub fn edge_loads(&self) -> BTreeMap<Support, usize> {
        let mut loads: BTreeMap<Support, usize> = self.splits.iter().map(|&s| (s, 0)).collect();
        for p in &self.placements {
            if let Placement::Edge { split, .. } = p {
                *loads.entry(*split).or_default() += 1;
            }
        }
        loads
    }
}

impl fmt::Display for FaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.d3_string() {
            return f.write_str(&s);
        }
        let splits: Vec<String> = self.splits.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", splits.join(" "))?;
        for p in &self.placements {
            match p {
                Placement::Leaf(i) => write!(f, " L{}", i + 1)?,
                Placement::Edge { split, rank: Some(r) } => write!(f, " E{split}#{r}")?,
                Placement::Edge { split, rank: None } => write!(f, " E{split}")?,
                Placement::Node(parts) => {
                    let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                    write!(f, " N({})", parts.join(""))?
                }
            }
        }
        Ok(())
    }
}

fn check_line_input<T: Scalar>(m: &Matrix<T>) -> Result<()> {
    if m.rows() < 3 {
        return Err(Error::UnsupportedDimension(m.rows()));
    }
    if m.rows() > 64 {
        return Err(Error::UnsupportedDimension(m.rows()));
    }
    if is_rank_one(m) {
        return Err(Error::RankOne);
    }
    if !has_rank_at_most_two(m) {
        return Err(Error::NotCollinear);
    }
    Ok(())
}

/// Builds the line generated by the columns of a tropical rank two matrix.
pub fn canonical_line<T: Scalar>(m: &Matrix<T>) -> Result<LineTree<T>> {
    check_line_input(m)?;
    line_from_points(&m.points())
}

fn line_from_points<T: Scalar>(points: &[ProjectivePoint<T>]) -> Result<LineTree<T>> {
    let tree = build_hull_tree(points)?;
    let dim = tree.dim;
    let full = Support::full(dim);
    let mut leaf_rays = Vec::new();
    for v in 0..tree.nodes.len() {
        let covered = tree.outgoing(v).into_iter().fold(Support::EMPTY, |acc, (_, _, s)| acc.union(s));
        for i in covered.complement(dim).iter() {
            leaf_rays.push((v, i));
        }
    }
    let mut seen = Support::EMPTY;
    for &(_, i) in &leaf_rays {
        if seen.contains(i) {
            return Err(Error::NotATree(format!("two rays in direction {}", i + 1)));
        }
        seen = seen.with(i);
    }
    if seen != full {
        return Err(Error::NotATree("missing coordinate ray".into()));
    }
    let mut line = LineTree { tree, leaf_rays, anchor: 0 };
    line.anchor = line.leaf_base(0);
    let shift = line.tree.nodes[line.anchor].scale(&T::from_i64(-1));
    for node in line.tree.nodes.iter_mut() {
        *node = node.translate(&shift);
    }
    Ok(line)
}

impl<T: Scalar> LineTree<T> {
    pub fn dim(&self) -> usize {
        self.tree.dim
    }

    fn rays_at(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.leaf_rays.iter().filter(move |(v, _)| *v == node).map(|(_, i)| *i)
    }

    pub fn degree(&self, node: usize) -> usize {
        self.tree.outgoing(node).len() + self.rays_at(node).count()
    }

    /// Supports of every branch leaving a node (edges and rays).
    pub fn branch_supports(&self, node: usize) -> Vec<Support> {
        let mut out: Vec<Support> = self.tree.outgoing(node).into_iter().map(|(_, _, s)| s).collect();
        out.extend(self.rays_at(node).map(Support::single));
        out.sort();
        out
    }

    /// Branch node where the leaf in `direction` begins.
    pub fn leaf_base(&self, direction: usize) -> usize {
        let mut node = self.leaf_rays.iter().find(|(_, i)| *i == direction).expect("every direction has a ray").0;
        let toward = Support::single(direction).complement(self.dim());
        while self.degree(node) < 3 {
            match self.tree.outgoing(node).into_iter().find(|(_, _, s)| *s == toward) {
                Some((_, next, _)) => node = next,
                None => break,
            }
        }
        node
    }

    /// Zero tension: the branch supports at each node partition all directions.
    pub fn is_balanced(&self) -> bool {
        let full = Support::full(self.dim());
        (0..self.tree.nodes.len()).all(|v| {
            let mut acc = Support::EMPTY;
            for s in self.branch_supports(v) {
                if !acc.intersect(s).is_empty() {
                    return false;
                }
                acc = acc.union(s);
            }
            acc == full
        })
    }

    /// Reads off the combinatorial location of each point.
    pub fn face_descriptor(&self) -> FaceDescriptor {
        let dim = self.dim();
        let canonical_split = |s: Support| if s.contains(0) { s.complement(dim) } else { s };
        let mut splits = Vec::new();
        for v in 0..self.tree.nodes.len() {
            if self.degree(v) < 3 {
                continue;
            }
            for s in self.branch_supports(v) {
                if s.len() >= 2 && s.complement(dim).len() >= 2 {
                    splits.push(canonical_split(s));
                }
            }
        }
        splits.sort();
        splits.dedup();

        let mut edge_positions: Vec<Option<(Support, T)>> = vec![None; self.tree.locations.len()];
        let mut placements: Vec<Option<Placement>> = vec![None; self.tree.locations.len()];
        for (j, &v) in self.tree.locations.iter().enumerate() {
            if self.degree(v) >= 3 {
                placements[j] = Some(Placement::Node(self.branch_supports(v)));
                continue;
            }
            let supports = self.branch_supports(v);
            let side = supports.iter().copied().find(|s| !s.contains(0)).expect("degree two node has two sides");
            if side.len() == 1 {
                placements[j] = Some(Placement::Leaf(side.iter().next().expect("nonempty")));
            } else if side.complement(dim).len() == 1 {
                placements[j] = Some(Placement::Leaf(0));
            } else {
                edge_positions[j] = Some((side, self.distance_to_branch(v, side.complement(dim))));
            }
        }
        // Dense rank of the distance from the direction-1 end of each edge.
        let mut by_split: BTreeMap<Support, Vec<T>> = BTreeMap::new();
        for (split, t) in edge_positions.iter().flatten() {
            by_split.entry(*split).or_default().push(t.clone());
        }
        for ts in by_split.values_mut() {
            ts.sort();
            ts.dedup();
        }
        for (j, pos) in edge_positions.into_iter().enumerate() {
            if let Some((split, t)) = pos {
                let rank = by_split[&split].binary_search(&t).expect("recorded") as u32;
                placements[j] = Some(Placement::Edge { split, rank: Some(rank) });
            }
        }
        FaceDescriptor { dim, splits, placements: placements.into_iter().map(|p| p.expect("placed")).collect() }
    }

    fn distance_to_branch(&self, mut node: usize, toward: Support) -> T {
        let mut total = T::zero();
        while self.degree(node) < 3 {
            let (k, next, _) = self
                .tree
                .outgoing(node)
                .into_iter()
                .find(|(_, _, s)| *s == toward)
                .expect("interior edge continues towards a branch node");
            total = total + self.tree.edges[k].length.clone();
            node = next;
        }
        total
    }

    pub fn to_dot(&self) -> String {
        let mut out = self.tree.to_dot();
        out.truncate(out.len() - 2);
        for (k, &(v, i)) in self.leaf_rays.iter().enumerate() {
            let _ = writeln!(out, "  r{k} [shape=point];\n  n{v} -- r{k} [label=\"e{}\"];", i + 1);
        }
        out.push_str("}\n");
        out
    }
}

/// Face label of a rank-two configuration. For `d = 3` its
/// [`FaceDescriptor::d3_string`] is the string over `{0,1,2,3}`.
pub fn face_label<T: Scalar>(m: &Matrix<T>) -> Result<FaceDescriptor> {
    Ok(canonical_line(m)?.face_descriptor())
}

/// Face label without the rank checks, for configurations already known to
/// be collinear and not all equal.
pub(crate) fn face_label_unchecked<T: Scalar>(m: &Matrix<T>) -> Result<FaceDescriptor> {
    if is_rank_one(m) {
        return Err(Error::RankOne);
    }
    Ok(line_from_points(&m.points())?.face_descriptor())
}
