//! Tropical segments and the tree formed by the tropical convex hull of a
//! rank-two configuration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::{ProjectivePoint, Support};
use crate::scalar::Scalar;

/// Tropical segment as a chain of ordinary segments from `p` to `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentPolyline<T> {
    pub breakpoints: Vec<ProjectivePoint<T>>,
    /// Support of the 0/1 direction of each piece, oriented from `p` to `q`.
    pub slopes: Vec<Support>,
    pub lengths: Vec<T>,
}

impl<T: Scalar> SegmentPolyline<T> {
    pub fn pieces(&self) -> usize {
        self.slopes.len()
    }
}

/// Computes `{ min(p, t + q) : t in R }` exactly.
///
/// With `delta = p - q`, the breakpoints sit at the distinct values of
/// `delta`; at the smallest the point equals `q`, at the largest `p`.
pub fn tropical_segment<T: Scalar>(p: &ProjectivePoint<T>, q: &ProjectivePoint<T>) -> Result<SegmentPolyline<T>> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch(p.dim(), q.dim()));
    }
    let delta: BTreeSet<T> = p.coords().iter().zip(q.coords()).map(|(a, b)| a.clone() - b.clone()).collect();
    let breakpoints: Vec<ProjectivePoint<T>> = delta
        .iter()
        .rev()
        .map(|t| {
            ProjectivePoint::new(
                p.coords().iter().zip(q.coords()).map(|(a, b)| a.clone().min(t.clone() + b.clone())).collect(),
            )
        })
        .collect();
    let mut slopes = Vec::with_capacity(breakpoints.len().saturating_sub(1));
    let mut lengths = Vec::with_capacity(slopes.capacity());
    for w in breakpoints.windows(2) {
        let (s, len) = w[0].direction_to(&w[1]).expect("consecutive breakpoints differ by a 0/1 step");
        slopes.push(s);
        lengths.push(len);
    }
    Ok(SegmentPolyline { breakpoints, slopes, lengths })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge<T> {
    pub a: usize,
    pub b: usize,
    /// Direction from `a` to `b`.
    pub slope: Support,
    pub length: T,
}

/// Metric tree in tropical projective space with 0/1 edge directions.
///
/// Every input column is a node; `locations[j]` is the node of column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricTree<T> {
    pub dim: usize,
    pub nodes: Vec<ProjectivePoint<T>>,
    pub edges: Vec<TreeEdge<T>>,
    pub locations: Vec<usize>,
}

impl<T: Scalar> MetricTree<T> {
    /// Outgoing `(edge index, neighbour, support)` at a node.
    pub fn outgoing(&self, node: usize) -> Vec<(usize, usize, Support)> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(k, e)| {
                if e.a == node {
                    Some((k, e.b, e.slope))
                } else if e.b == node {
                    Some((k, e.a, e.slope.complement(self.dim)))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Node sequence of the unique path between two nodes.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.nodes.len()];
        parent[from] = from;
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            for (_, w, _) in self.outgoing(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Same tree with node ids sorted by coordinates and edges sorted, so
    /// that equal geometry compares equal.
    pub fn canonical(&self) -> Self {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| self.nodes[a].cmp(&self.nodes[b]));
        let mut new_id = vec![0; self.nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let mut edges: Vec<TreeEdge<T>> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (new_id[e.a], new_id[e.b]);
                if a < b {
                    TreeEdge { a, b, slope: e.slope, length: e.length.clone() }
                } else {
                    TreeEdge { a: b, b: a, slope: e.slope.complement(self.dim), length: e.length.clone() }
                }
            })
            .collect();
        edges.sort_by_key(|e| (e.a, e.b));
        MetricTree {
            dim: self.dim,
            nodes: order.iter().map(|&o| self.nodes[o].clone()).collect(),
            edges,
            locations: self.locations.iter().map(|&l| new_id[l]).collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph hull {\n");
        for (k, node) in self.nodes.iter().enumerate() {
            let cols: Vec<String> = self
                .locations
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == k)
                .map(|(j, _)| format!("p{}", j + 1))
                .collect();
            let extra = if cols.is_empty() { String::new() } else { format!(" {}", cols.join(" ")) };
            let _ = writeln!(out, "  n{k} [label=\"{node}{extra}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -- n{} [label=\"{} x{}\"];", e.a, e.b, e.slope, e.length);
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the tree spanned by all pairwise tropical segments of the points.
///
/// Nodes are the points themselves and every segment breakpoint; each
/// ordinary piece of each segment is then cut at the nodes lying on it. A
/// union that is not a tree (a cycle, or conflicting directions at a node)
/// means the points do not lie on a common tropical line.
pub fn build_hull_tree<T: Scalar>(points: &[ProjectivePoint<T>]) -> Result<MetricTree<T>> {
    let dim = points.first().ok_or(Error::EmptyMatrix)?.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch(dim, p.dim()));
    }
    let mut ids: BTreeMap<ProjectivePoint<T>, usize> = BTreeMap::new();
    let mut nodes = Vec::new();
    let mut intern = |p: &ProjectivePoint<T>, nodes: &mut Vec<ProjectivePoint<T>>| -> usize {
        *ids.entry(p.clone()).or_insert_with(|| {
            nodes.push(p.clone());
            nodes.len() - 1
        })
    };
    let locations: Vec<usize> = points.iter().map(|p| intern(p, &mut nodes)).collect();
    let mut segments = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                continue;
            }
            let seg = tropical_segment(&points[i], &points[j])?;
            for b in &seg.breakpoints {
                intern(b, &mut nodes);
            }
            segments.push(seg);
        }
    }

    let mut edge_set: BTreeMap<(usize, usize), TreeEdge<T>> = BTreeMap::new();
    for seg in &segments {
        for (k, (slope, length)) in seg.slopes.iter().zip(&seg.lengths).enumerate() {
            let start = &seg.breakpoints[k];
            let mut on_piece: Vec<(T, usize)> = nodes
                .iter()
                .enumerate()
                .filter_map(|(id, x)| {
                    if x == start {
                        return Some((T::zero(), id));
                    }
                    match start.direction_to(x) {
                        Some((s, t)) if s == *slope && t <= *length => Some((t, id)),
                        _ => None,
                    }
                })
                .collect();
            on_piece.sort();
            for w in on_piece.windows(2) {
                let (a, b) = (w[0].1, w[1].1);
                let len = w[1].0.clone() - w[0].0.clone();
                let key = (a.min(b), a.max(b));
                let edge = if a < b {
                    TreeEdge { a, b, slope: *slope, length: len }
                } else {
                    TreeEdge { a: b, b: a, slope: slope.complement(dim), length: len }
                };
                if let Some(existing) = edge_set.get(&key) {
                    if *existing != edge {
                        return Err(Error::NotATree(format!("conflicting edges between nodes {a} and {b}")));
                    }
                } else {
                    edge_set.insert(key, edge);
                }
            }
        }
    }
    let tree = MetricTree { dim, nodes, edges: edge_set.into_values().collect(), locations };
    validate_tree(&tree)?;
    Ok(tree)
}

fn validate_tree<T: Scalar>(tree: &MetricTree<T>) -> Result<()> {
    let n = tree.nodes.len();
    if tree.edges.len() + 1 != n {
        return Err(Error::NotATree(format!("{} nodes but {} edges", n, tree.edges.len())));
    }
    // connectivity via union-find
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for e in &tree.edges {
        let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
        if ra == rb {
            return Err(Error::NotATree("cycle".into()));
        }
        parent[ra] = rb;
    }
    for v in 0..n {
        let mut seen = Support::EMPTY;
        for (_, _, s) in tree.outgoing(v) {
            if !seen.intersect(s).is_empty() {
                return Err(Error::NotATree(format!("overlapping directions at node {}", tree.nodes[v])));
            }
            seen = seen.union(s);
        }
    }
    Ok(())
}
